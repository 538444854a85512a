#include "qhatm/engine.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "qhatm/parallel.hpp"

namespace qhatm {

void QhatmParams::validate() const {
    if (!(alpha > 0.0 && alpha <= 1.0))
        throw std::domain_error("params: alpha must lie in (0, 1]");
    if (hbar == 0.0) throw std::domain_error("params: hbar must be nonzero");
    if (n < 1) throw std::domain_error("params: n must be >= 1");
    if (order < 0) throw std::domain_error("params: order must be >= 0");
    grid.validate();
}

int k_factor(int m, int n) {
    if (m < 1) throw std::invalid_argument("k_factor: m must be >= 1");
    return m == 1 ? 0 : n;
}

int chain_half_width(const ModelSpec& model) {
    return model.a != 0.0 ? 3 : 2;
}

GridSpec default_grid(const ModelSpec& model, int order, double x_min, double x_max,
                      int n_interior) {
    GridSpec g;
    g.x_min = x_min;
    g.x_max = x_max;
    g.n_interior = n_interior;
    // order chains for the solver plus one more for the residual pass.
    g.halo = chain_half_width(model) * (order + 1) * g.stride();
    g.validate();
    return g;
}

namespace {

// N-terms of the two equations at convolution index m-1 (Cauchy products of
// the prior iterates), before the J^alpha integral.
std::pair<FieldSeries, FieldSeries> nonlinear_terms(
    const ModelSpec& model,
    std::span<const std::pair<FieldSeries, FieldSeries>> prior) {
    int m = static_cast<int>(prior.size());
    const FieldSeries& u_prev = prior[static_cast<size_t>(m - 1)].first;
    const FieldSeries& v_prev = prior[static_cast<size_t>(m - 1)].second;

    FieldSeries nu = fd_derivative(v_prev, 1);  // dv_{m-1}/dx
    FieldSeries nv = field_scale(nu, 0.0);      // zero with matching halo shape
    for (int i = 0; i < m; ++i) {
        const FieldSeries& ui = prior[static_cast<size_t>(i)].first;
        const FieldSeries& vi = prior[static_cast<size_t>(i)].second;
        const FieldSeries& uj = prior[static_cast<size_t>(m - 1 - i)].first;
        const FieldSeries& vj = prior[static_cast<size_t>(m - 1 - i)].second;
        nu = field_axpy(nu, 1.0, field_mul(ui, fd_derivative(uj, 1)));
        nv = field_axpy(nv, 1.0, field_mul(ui, fd_derivative(vj, 1)));
        nv = field_axpy(nv, 1.0, field_mul(vi, fd_derivative(uj, 1)));
    }
    if (model.b != 0.0) {
        nu = field_axpy(nu, model.b, fd_derivative(u_prev, 2));
        nv = field_axpy(nv, -model.b, fd_derivative(v_prev, 2));
    }
    if (model.a != 0.0) nv = field_axpy(nv, model.a, fd_derivative(u_prev, 3));
    return {std::move(nu), std::move(nv)};
}

}  // namespace

std::pair<FieldSeries, FieldSeries> qhatm_step(
    const ModelSpec& model, const QhatmParams& params,
    std::span<const std::pair<FieldSeries, FieldSeries>> prior) {
    if (prior.empty())
        throw std::invalid_argument("qhatm_step: prior must contain the initial iterate");
    int m = static_cast<int>(prior.size());
    int km = k_factor(m, params.n);
    double lead = km + params.hbar;
    double ic_weight = params.hbar * (1.0 - static_cast<double>(km) / params.n);

    auto [nu, nv] = nonlinear_terms(model, prior);
    const auto& first = prior.front();
    const auto& last = prior.back();

    // u_m = (k_m + hbar) u_{m-1} - hbar (1 - k_m/n) u_0 + hbar J^alpha[N_u];
    // for m = 1 the first two terms cancel exactly, coefficient by coefficient.
    FieldSeries u_m = field_axpy(field_scale(last.first, lead), -ic_weight, first.first);
    u_m = field_axpy(u_m, params.hbar, field_jalpha(nu, params.alpha));
    FieldSeries v_m = field_axpy(field_scale(last.second, lead), -ic_weight, first.second);
    v_m = field_axpy(v_m, params.hbar, field_jalpha(nv, params.alpha));
    return {std::move(u_m), std::move(v_m)};
}

SolutionBundle qhatm_solve(const ModelSpec& model, const QhatmParams& params) {
    params.validate();
    int need = chain_half_width(model) * params.order * params.grid.stride();
    if (params.grid.halo < need)
        throw halo_error("qhatm_solve: grid halo " + std::to_string(params.grid.halo) +
                         " cannot feed " + std::to_string(params.order) +
                         " derivative chains (need " + std::to_string(need) + ")");
    auto guard = [&model](double x) { return model.in_domain(x); };
    SolutionBundle bundle;
    bundle.params = params;
    bundle.model = model;
    bundle.iterates.emplace_back(sample_field(params.grid, model.u0, params.order, guard),
                                 sample_field(params.grid, model.v0, params.order, guard));
    for (int m = 1; m <= params.order; ++m)
        bundle.iterates.push_back(qhatm_step(model, params, bundle.iterates));
    return bundle;
}

std::pair<FieldSeries, FieldSeries> assemble(const SolutionBundle& bundle) {
    const auto& it = bundle.iterates;
    FieldSeries u = it.front().first;
    FieldSeries v = it.front().second;
    double weight = 1.0;
    for (size_t m = 1; m < it.size(); ++m) {
        weight /= bundle.params.n;
        u = field_axpy(u, weight, it[m].first);
        v = field_axpy(v, weight, it[m].second);
    }
    return {std::move(u), std::move(v)};
}

ResidualField residual(const SolutionBundle& bundle, double t) {
    if (t < 0.0) throw std::domain_error("residual: t must be >= 0");
    auto [u, v] = assemble(bundle);
    int hw = chain_half_width(bundle.model) * bundle.params.grid.stride();
    if (u.remaining_halo < hw)
        throw halo_error("residual: assembled solution has remaining halo " +
                         std::to_string(u.remaining_halo) + ", needs " + std::to_string(hw) +
                         " for one more derivative chain");

    // Re-embed at order 2M so the Cauchy products keep every lattice order
    // the truncated solution can populate.
    int M = u.order();
    int ext = 2 * M;
    auto extend = [ext](const FieldSeries& f) {
        FieldSeries g;
        g.grid = f.grid;
        g.remaining_halo = f.remaining_halo;
        g.values.reserve(f.values.size());
        for (const auto& s : f.values) {
            AlphaSeries e(ext);
            for (int k = 0; k <= s.order(); ++k) e[k] = s[k];
            g.values.push_back(std::move(e));
        }
        return g;
    };
    FieldSeries ue = extend(u), ve = extend(v);
    double alpha = bundle.params.alpha;
    double a = bundle.model.a, b = bundle.model.b;

    FieldSeries ru = field_mul(ue, fd_derivative(ue, 1));
    ru = field_axpy(ru, 1.0, fd_derivative(ve, 1));
    if (b != 0.0) ru = field_axpy(ru, b, fd_derivative(ue, 2));
    FieldSeries rv = field_mul(ue, fd_derivative(ve, 1));
    rv = field_axpy(rv, 1.0, field_mul(ve, fd_derivative(ue, 1)));
    if (a != 0.0) rv = field_axpy(rv, a, fd_derivative(ue, 3));
    if (b != 0.0) rv = field_axpy(rv, -b, fd_derivative(ve, 2));

    const GridSpec& grid = bundle.params.grid;
    ResidualField out;
    out.x.resize(static_cast<size_t>(grid.n_interior));
    out.r_u.resize(static_cast<size_t>(grid.n_interior));
    out.r_v.resize(static_cast<size_t>(grid.n_interior));
    parallel_for(0, grid.n_interior, [&](int j) {
        int i = grid.halo + j;
        size_t si = static_cast<size_t>(i);
        out.x[static_cast<size_t>(j)] = grid.x_at(i);
        double du = series_eval(series_caputo(ue.values[si], alpha), t, alpha);
        double dv = series_eval(series_caputo(ve.values[si], alpha), t, alpha);
        out.r_u[static_cast<size_t>(j)] = du + series_eval(ru.values[si], t, alpha);
        out.r_v[static_cast<size_t>(j)] = dv + series_eval(rv.values[si], t, alpha);
    });
    return out;
}

}  // namespace qhatm
