#include "qhatm/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace qhatm {

double max_interior(const FieldSeries& f, double t, double alpha) {
    double best = 0.0;
    const GridSpec& g = f.grid;
    for (int j = 0; j < g.n_interior; ++j) {
        double v = std::abs(series_eval(f.values[static_cast<size_t>(g.halo + j)], t, alpha));
        if (v > best) best = v;
    }
    return best;
}

ErrorTable error_table(const ModelSpec& model, const QhatmParams& params,
                       const std::vector<std::pair<double, double>>& points) {
    if (!model.has_exact())
        throw std::invalid_argument("error_table: model has no exact solution");
    if (params.alpha != 1.0)
        throw std::invalid_argument(
            "error_table: exact comparison is defined for alpha = 1 only; "
            "use the residual diagnostic for fractional orders");
    SolutionBundle bundle = qhatm_solve(model, params);
    auto [u, v] = assemble(bundle);
    ErrorTable table;
    table.rows.reserve(points.size());
    for (auto [t, x] : points) {
        int i = params.grid.nearest_interior_index(x);
        double xg = params.grid.x_at(i);
        ErrorRow row;
        row.t = t;
        row.x = x;
        row.abs_err_u = std::abs(model.exact_u(xg, t) -
                                 series_eval(u.values[static_cast<size_t>(i)], t, params.alpha));
        row.abs_err_v = std::abs(model.exact_v(xg, t) -
                                 series_eval(v.values[static_cast<size_t>(i)], t, params.alpha));
        table.rows.push_back(row);
    }
    return table;
}

std::vector<HCurvePoint> hcurve(const ModelSpec& model, const QhatmParams& params,
                                double lo, double hi, int count, double x, double t) {
    if (count < 1) throw std::invalid_argument("hcurve: count must be >= 1");
    if (count > 1 && !(hi > lo) && hi != lo)
        throw std::invalid_argument("hcurve: hi must be >= lo");
    std::vector<HCurvePoint> curve;
    curve.reserve(static_cast<size_t>(count));
    int node = params.grid.nearest_interior_index(x);
    for (int k = 0; k < count; ++k) {
        double hb = count == 1 ? lo : lo + (hi - lo) * k / (count - 1);
        QhatmParams p = params;
        p.hbar = hb;
        auto [u, v] = assemble(qhatm_solve(model, p));
        curve.push_back({hb, series_eval(u.values[static_cast<size_t>(node)], t, p.alpha),
                         series_eval(v.values[static_cast<size_t>(node)], t, p.alpha)});
    }
    return curve;
}

std::vector<AlphaSweepSeries> alpha_sweep(const ModelSpec& model,
                                          const QhatmParams& params,
                                          const std::vector<double>& alphas, double x,
                                          double t_min, double t_max, int count) {
    if (count < 1) throw std::invalid_argument("alpha_sweep: count must be >= 1");
    int node = params.grid.nearest_interior_index(x);
    std::vector<AlphaSweepSeries> out;
    out.reserve(alphas.size());
    for (double alpha : alphas) {
        QhatmParams p = params;
        p.alpha = alpha;
        auto [u, v] = assemble(qhatm_solve(model, p));
        AlphaSweepSeries series;
        series.alpha = alpha;
        for (int k = 0; k < count; ++k) {
            double t = count == 1 ? t_min : t_min + (t_max - t_min) * k / (count - 1);
            series.t.push_back(t);
            series.u.push_back(series_eval(u.values[static_cast<size_t>(node)], t, alpha));
            series.v.push_back(series_eval(v.values[static_cast<size_t>(node)], t, alpha));
        }
        out.push_back(std::move(series));
    }
    return out;
}

ConvergenceReport convergence_report(const SolutionBundle& bundle, double t) {
    int M = static_cast<int>(bundle.iterates.size()) - 1;
    if (M < 2) throw std::invalid_argument("convergence_report: needs at least 2 iterates");
    double alpha = bundle.params.alpha;
    std::vector<double> norm_u, norm_v;
    std::vector<FieldSeries> wu, wv;  // weighted iterates
    double weight = 1.0;
    for (int m = 0; m <= M; ++m) {
        if (m > 0) weight /= bundle.params.n;
        wu.push_back(field_scale(bundle.iterates[static_cast<size_t>(m)].first, weight));
        wv.push_back(field_scale(bundle.iterates[static_cast<size_t>(m)].second, weight));
        norm_u.push_back(max_interior(wu.back(), t, alpha));
        norm_v.push_back(max_interior(wv.back(), t, alpha));
    }

    ConvergenceReport report;
    double rho_max = 0.0;
    bool any_rho = false;
    for (int m = 0; m < M; ++m) {
        auto ratio = [&](const std::vector<double>& norms) -> std::optional<double> {
            size_t i = static_cast<size_t>(m);
            if (norms[i] == 0.0 || norms[i + 1] == 0.0) return std::nullopt;
            return norms[i + 1] / norms[i];
        };
        report.rho_u.push_back(ratio(norm_u));
        report.rho_v.push_back(ratio(norm_v));
        for (const auto& r : {report.rho_u.back(), report.rho_v.back()})
            if (r) {
                rho_max = std::max(rho_max, *r);
                any_rho = true;
            }
    }
    if (!any_rho) return report;  // zero iterates: ratios absent, no bounds

    for (int i = 0; i < M; ++i) {
        // actual tail: || sum_{m > i} weighted iterate_m ||
        FieldSeries tail_u = wu[static_cast<size_t>(i) + 1];
        FieldSeries tail_v = wv[static_cast<size_t>(i) + 1];
        for (int m = i + 2; m <= M; ++m) {
            tail_u = field_axpy(tail_u, 1.0, wu[static_cast<size_t>(m)]);
            tail_v = field_axpy(tail_v, 1.0, wv[static_cast<size_t>(m)]);
        }
        ConvergenceReport::BoundRow row;
        row.i = i;
        row.applicable = rho_max < 1.0;
        row.tail_u = max_interior(tail_u, t, alpha);
        row.tail_v = max_interior(tail_v, t, alpha);
        double factor = row.applicable
                            ? std::pow(rho_max, i + 1) / (1.0 - rho_max)
                            : std::numeric_limits<double>::quiet_NaN();
        row.bound_u = factor * norm_u[0];
        row.bound_v = factor * norm_v[0];
        report.bounds.push_back(row);
    }
    return report;
}

}  // namespace qhatm
