#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qhatm/engine.hpp"

namespace qhatm {

// ---- absolute-error tables -------------------------------------------------

struct ErrorRow {
    double t, x;
    double abs_err_u, abs_err_v;
};

struct ErrorTable {
    std::vector<ErrorRow> rows;
};

/// |exact - assembled| for u and v at the grid node nearest each (t, x)
/// point, exact and approximate read at the identical node coordinate.
/// Requires exact solutions (alpha = 1 presets).
ErrorTable error_table(const ModelSpec& model, const QhatmParams& params,
                       const std::vector<std::pair<double, double>>& points);

// Reference data for the four published comparison tables. The competitor
// columns are static data, never recomputed; q-HATM is the column this
// solver reproduces. Tables 1-2 probe u and v of the MB system, 3-4 of ALW.
enum class TablePreset { table1, table2, table3, table4 };

struct ReferenceRow {
    double t, x;
    std::vector<double> baselines;  // one value per baseline_names entry
    double qhatm;                   // published q-HATM absolute error
};

struct TableReference {
    TablePreset id;
    char unknown;                            // 'u' or 'v'
    std::string model_name;                  // "mb" or "alw"
    std::vector<std::string> baseline_names;
    std::vector<ReferenceRow> rows;
};

const TableReference& table_reference(TablePreset preset);
TablePreset table_preset_from_name(const std::string& name);

// ---- parameter sweeps ------------------------------------------------------

struct HCurvePoint {
    double hbar, u, v;
};

/// Assembled solution at a probe point as hbar sweeps [lo, hi]; re-solves
/// per sample. count == 1 degenerates to the single sample at lo.
std::vector<HCurvePoint> hcurve(const ModelSpec& model, const QhatmParams& params,
                                double lo, double hi, int count, double x, double t);

struct AlphaSweepSeries {
    double alpha;
    std::vector<double> t, u, v;
};

/// Assembled u, v along a time range at fixed x, one series per alpha.
std::vector<AlphaSweepSeries> alpha_sweep(const ModelSpec& model,
                                          const QhatmParams& params,
                                          const std::vector<double>& alphas, double x,
                                          double t_min, double t_max, int count);

// ---- empirical convergence diagnostic --------------------------------------

struct ConvergenceReport {
    // rho[m] = ||w_{m+1} iterate_{m+1}|| / ||w_m iterate_m|| under the
    // max-interior norm, with assembly weights w_m = (1/n)^m folded in.
    // Absent (nullopt) when the denominator vanishes.
    std::vector<std::optional<double>> rho_u, rho_v;
    struct BoundRow {
        int i;
        double tail_u, bound_u;
        double tail_v, bound_v;
        bool applicable;  // false when rho >= 1 (bound says nothing)
    };
    std::vector<BoundRow> bounds;
};

/// Norms are taken at evaluation time t: the geometric-tail bound
/// tail_i <= rho^(i+1)/(1-rho) * ||U_0|| is checked at the probe time the
/// caller cares about rather than over a whole interval.
ConvergenceReport convergence_report(const SolutionBundle& bundle, double t = 0.5);

/// Max absolute value over the valid interior of a field's series at time t.
double max_interior(const FieldSeries& f, double t, double alpha);

}  // namespace qhatm
