#include "qhatm/spatial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qhatm/parallel.hpp"

namespace qhatm {

namespace {

AlphaSeries invalid_series(int order) {
    AlphaSeries s(order);
    for (int k = 0; k <= order; ++k) s[k] = std::numeric_limits<double>::quiet_NaN();
    return s;
}

void require_compatible(const FieldSeries& a, const FieldSeries& b) {
    if (a.grid.total_points() != b.grid.total_points() ||
        a.grid.spacing() != b.grid.spacing() || a.grid.stride() != b.grid.stride())
        throw std::invalid_argument("FieldSeries grids differ");
    if (a.order() != b.order())
        throw std::invalid_argument("FieldSeries series orders differ");
}

}  // namespace

void GridSpec::validate() const {
    if (!(x_max > x_min)) throw std::domain_error("grid: x_max must exceed x_min");
    if (n_interior < 5) throw std::domain_error("grid: n_interior must be >= 5");
    if (halo < 0) throw std::domain_error("grid: halo must be >= 0");
    if (stencil_stride < 0) throw std::domain_error("grid: stencil_stride must be >= 0");
}

int GridSpec::stride() const {
    if (stencil_stride > 0) return stencil_stride;
    // Auto: effective stencil spacing nearest 1/16, never below the grid's own.
    return std::max(1, static_cast<int>(std::lround(1.0 / 16.0 / spacing())));
}

int GridSpec::nearest_interior_index(double x) const {
    int i = halo + static_cast<int>(std::lround((x - x_min) / spacing()));
    if (i < halo || i >= halo + n_interior)
        throw std::out_of_range("coordinate " + std::to_string(x) +
                                " falls outside the interior window");
    return i;
}

int stencil_half_width(int deriv_order) {
    switch (deriv_order) {
        case 1:
        case 2:
            return 2;
        case 3:
            return 3;
        default:
            throw std::invalid_argument("derivative order must be 1, 2 or 3");
    }
}

FieldSeries sample_field(const GridSpec& grid,
                         const std::function<long double(long double)>& fn, int order,
                         const std::function<bool(double)>& guard) {
    grid.validate();
    FieldSeries f;
    f.grid = grid;
    f.remaining_halo = grid.halo;
    f.values.reserve(static_cast<size_t>(grid.total_points()));
    long double x0 = grid.x_min;
    long double h = (static_cast<long double>(grid.x_max) - x0) / (grid.n_interior - 1);
    for (int i = 0; i < grid.total_points(); ++i) {
        long double x = x0 + (i - grid.halo) * h;
        if (guard && !guard(static_cast<double>(x)))
            throw std::domain_error("sample_field: padded grid point x=" +
                                    std::to_string(static_cast<double>(x)) +
                                    " violates the singularity guard");
        long double v = fn(x);
        if (!std::isfinite(v))
            throw std::domain_error("sample_field: non-finite sample at x=" +
                                    std::to_string(static_cast<double>(x)));
        AlphaSeries s(order);
        s[0] = v;
        f.values.push_back(std::move(s));
    }
    return f;
}

FieldSeries fd_derivative(const FieldSeries& f, int deriv_order) {
    int hw = stencil_half_width(deriv_order);
    int stride = f.grid.stride();
    int reach = hw * stride;
    if (f.remaining_halo < reach)
        throw halo_error("fd_derivative: stencil reach " + std::to_string(reach) +
                         " exceeds remaining halo " + std::to_string(f.remaining_halo) +
                         " (short by " + std::to_string(reach - f.remaining_halo) + ")");
    long double h = static_cast<long double>(f.grid.spacing()) * stride;
    int order = f.order();
    FieldSeries out;
    out.grid = f.grid;
    out.remaining_halo = f.remaining_halo - reach;
    out.values.assign(f.values.size(), invalid_series(order));

    // 4th-order central stencils (offsets -hw..hw times stride, divided by
    // scale * h_eff^deriv).
    long double coef[7];
    long double scale;
    switch (deriv_order) {
        case 1:
            coef[0] = 1.0; coef[1] = -8.0; coef[2] = 0.0; coef[3] = 8.0; coef[4] = -1.0;
            scale = 12.0L * h;
            break;
        case 2:
            coef[0] = -1.0; coef[1] = 16.0; coef[2] = -30.0; coef[3] = 16.0; coef[4] = -1.0;
            scale = 12.0L * h * h;
            break;
        default:  // 3
            coef[0] = 1.0; coef[1] = -8.0; coef[2] = 13.0; coef[3] = 0.0;
            coef[4] = -13.0; coef[5] = 8.0; coef[6] = -1.0;
            scale = 8.0L * h * h * h;
            break;
    }

    int lo = out.first_valid();
    int hi = out.last_valid();
    parallel_for(lo, hi + 1, [&](int i) {
        AlphaSeries s(order);
        for (int k = 0; k <= order; ++k) {
            long double sum = 0.0L;
            for (int j = -hw; j <= hw; ++j)
                sum += coef[j + hw] * f.values[static_cast<size_t>(i + j * stride)][k];
            s[k] = sum / scale;
        }
        out.values[static_cast<size_t>(i)] = std::move(s);
    });
    return out;
}

FieldSeries field_axpy(const FieldSeries& a, double s, const FieldSeries& b) {
    require_compatible(a, b);
    FieldSeries out;
    out.grid = a.grid;
    out.remaining_halo = std::min(a.remaining_halo, b.remaining_halo);
    out.values.assign(a.values.size(), invalid_series(a.order()));
    parallel_for(out.first_valid(), out.last_valid() + 1, [&](int i) {
        out.values[static_cast<size_t>(i)] =
            series_axpy(a.values[static_cast<size_t>(i)], s, b.values[static_cast<size_t>(i)]);
    });
    return out;
}

FieldSeries field_scale(const FieldSeries& a, double s) {
    FieldSeries out;
    out.grid = a.grid;
    out.remaining_halo = a.remaining_halo;
    out.values.assign(a.values.size(), invalid_series(a.order()));
    parallel_for(out.first_valid(), out.last_valid() + 1, [&](int i) {
        out.values[static_cast<size_t>(i)] = series_scale(a.values[static_cast<size_t>(i)], s);
    });
    return out;
}

FieldSeries field_mul(const FieldSeries& a, const FieldSeries& b) {
    require_compatible(a, b);
    FieldSeries out;
    out.grid = a.grid;
    out.remaining_halo = std::min(a.remaining_halo, b.remaining_halo);
    out.values.assign(a.values.size(), invalid_series(a.order()));
    parallel_for(out.first_valid(), out.last_valid() + 1, [&](int i) {
        out.values[static_cast<size_t>(i)] =
            series_mul(a.values[static_cast<size_t>(i)], b.values[static_cast<size_t>(i)]);
    });
    return out;
}

FieldSeries field_jalpha(const FieldSeries& a, double alpha) {
    FieldSeries out;
    out.grid = a.grid;
    out.remaining_halo = a.remaining_halo;
    out.values.assign(a.values.size(), invalid_series(a.order()));
    parallel_for(out.first_valid(), out.last_valid() + 1, [&](int i) {
        out.values[static_cast<size_t>(i)] = series_jalpha(a.values[static_cast<size_t>(i)], alpha);
    });
    return out;
}

}  // namespace qhatm
