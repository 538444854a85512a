#pragma once

#include <span>
#include <utility>
#include <vector>

#include "qhatm/models.hpp"
#include "qhatm/spatial.hpp"

namespace qhatm {

// Full solver configuration. H(x,t) == 1 and zero source term, matching
// both worked systems; the general source branch would enter qhatm_step
// alongside the initial-condition term.
struct QhatmParams {
    double alpha = 1.0;  // fractional order, (0, 1]
    double hbar = -1.0;  // auxiliary convergence-control parameter, nonzero
    int n = 1;           // asymptotic parameter, >= 1
    int order = 3;       // number of iterates beyond m = 0 (truncation M)
    GridSpec grid;

    void validate() const;
};

/// Deformation-equation factor: 0 for m = 1, n for m > 1.
int k_factor(int m, int n);

/// Halo cells one derivative chain consumes for this model (3 when the
/// u_xxx term is active, else 2).
int chain_half_width(const ModelSpec& model);

/// Grid with enough halo for `order` solver steps plus one residual
/// evaluation on the reported interior.
GridSpec default_grid(const ModelSpec& model, int order, double x_min = 0.0,
                      double x_max = 1.0, int n_interior = 257);

struct SolutionBundle {
    QhatmParams params;
    ModelSpec model;
    // iterates[m] = (u_m, v_m); iterates[0] is the sampled initial data.
    std::vector<std::pair<FieldSeries, FieldSeries>> iterates;
};

/// One recurrence step: builds (u_m, v_m) from iterates 0..m-1.
std::pair<FieldSeries, FieldSeries> qhatm_step(
    const ModelSpec& model, const QhatmParams& params,
    std::span<const std::pair<FieldSeries, FieldSeries>> prior);

/// Runs the recurrence for m = 0..order. Deterministic; validates the halo
/// budget up front.
SolutionBundle qhatm_solve(const ModelSpec& model, const QhatmParams& params);

/// Weighted sum of the iterates, Sum_m iterate_m (1/n)^m, per unknown.
std::pair<FieldSeries, FieldSeries> assemble(const SolutionBundle& bundle);

// Governing-equation residual of the assembled solution at time t, on the
// valid interior. The Caputo time derivative is taken analytically on the
// series; products are evaluated at extended order so no genuine
// contribution at the leading error order is truncated away.
struct ResidualField {
    std::vector<double> x, r_u, r_v;
};

ResidualField residual(const SolutionBundle& bundle, double t);

}  // namespace qhatm
