#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qhatm/fracseries.hpp"

namespace qhatm {

/// Raised when a stencil would read outside the remaining halo.
struct halo_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Uniform 1-D grid: n_interior reporting points on [x_min, x_max] plus
// `halo` padding points on each side that get consumed by chained stencils.
//
// Stencils are applied on a stride: node i's derivative reads i +- j*stride.
// The reporting grid is typically much finer than the profile scale, and at
// the raw spacing the 1/h^3 division of the third-derivative stencil turns
// value-level rounding into noise that swamps the iterates once chained.
// The strided effective spacing balances that against the h^4 truncation.
struct GridSpec {
    double x_min = 0.0;
    double x_max = 1.0;
    int n_interior = 257;
    int halo = 0;
    int stencil_stride = 0;  // 0 = auto: effective spacing closest to 1/16

    void validate() const;
    double spacing() const { return (x_max - x_min) / (n_interior - 1); }
    int total_points() const { return n_interior + 2 * halo; }
    /// Stride actually used by fd_derivative (resolves the auto setting).
    int stride() const;
    // Index into the padded array; index `halo` sits at x_min.
    double x_at(int i) const { return x_min + (i - halo) * spacing(); }
    /// Nearest padded-array index for coordinate x; must land in the interior.
    int nearest_interior_index(double x) const;
};

/// Half-width of the 4th-order central stencil for a derivative order.
int stencil_half_width(int deriv_order);

// One unknown across space: an AlphaSeries per padded grid point. Cells
// outside the remaining halo hold NaN so accidental reads surface fast.
struct FieldSeries {
    GridSpec grid;
    int remaining_halo = 0;
    std::vector<AlphaSeries> values;

    int order() const { return values.empty() ? -1 : values.front().order(); }
    int first_valid() const { return grid.halo - remaining_halo; }
    int last_valid() const { return grid.total_points() - 1 - (grid.halo - remaining_halo); }
};

/// Sample fn on the padded grid as the constant term of each point's series.
/// Coordinates and samples are evaluated in extended precision so the value
/// noise entering the stencil chains starts at the working-type epsilon.
/// `guard`, when given, must return true for every padded x (singularity check).
FieldSeries sample_field(const GridSpec& grid,
                         const std::function<long double(long double)>& fn, int order,
                         const std::function<bool(double)>& guard = nullptr);

/// 4th-order central finite difference of order 1, 2 or 3, applied
/// coefficient-wise at the grid's stencil stride. Consumes
/// stencil_half_width(deriv_order) * stride halo cells.
FieldSeries fd_derivative(const FieldSeries& f, int deriv_order);

// Pointwise field algebra. Binary ops take the weaker remaining_halo.
FieldSeries field_axpy(const FieldSeries& a, double s, const FieldSeries& b);
FieldSeries field_scale(const FieldSeries& a, double s);
FieldSeries field_mul(const FieldSeries& a, const FieldSeries& b);
FieldSeries field_jalpha(const FieldSeries& a, double alpha);

}  // namespace qhatm
