#pragma once

#include <initializer_list>
#include <vector>

namespace qhatm {

/// Truncated series in the basis {t^(k*alpha)}, k = 0..M, at one spatial
/// point. Coefficient c_k multiplies t^(k*alpha) directly; Gamma factors
/// appear only inside the fractional operators. alpha itself is supplied
/// at evaluation / operator time, so one series can be swept over alpha.
///
/// Coefficients are carried in extended precision: the chained difference
/// stencils upstream subtract nearly equal values, and the recurrence then
/// re-differentiates whatever rounding noise survives, so the working type
/// needs more headroom than the double-precision results it feeds.
class AlphaSeries {
  public:
    explicit AlphaSeries(int order);  // all-zero series
    AlphaSeries(std::initializer_list<double> coeffs);

    int order() const { return static_cast<int>(c_.size()) - 1; }
    long double operator[](int k) const { return c_[static_cast<size_t>(k)]; }
    long double& operator[](int k) { return c_[static_cast<size_t>(k)]; }
    const std::vector<long double>& coeffs() const { return c_; }

  private:
    std::vector<long double> c_;
};

/// Coefficient-wise sum. Orders must match.
AlphaSeries series_add(const AlphaSeries& a, const AlphaSeries& b);

/// a + s*b, coefficient-wise. Orders must match.
AlphaSeries series_axpy(const AlphaSeries& a, double s, const AlphaSeries& b);

AlphaSeries series_scale(const AlphaSeries& a, double s);

/// Cauchy product on the t^(k*alpha) lattice; terms beyond order M are
/// dropped (hard truncation shared by the whole pipeline).
AlphaSeries series_mul(const AlphaSeries& a, const AlphaSeries& b);

/// Riemann-Liouville integral J^alpha on the basis:
/// c'_{k+1} = c_k * Gamma(k a + 1) / Gamma((k+1) a + 1); top coefficient drops.
AlphaSeries series_jalpha(const AlphaSeries& a, double alpha);

/// Caputo derivative on the basis:
/// c'_{k-1} = c_k * Gamma(k a + 1) / Gamma((k-1) a + 1); constant term annihilated.
AlphaSeries series_caputo(const AlphaSeries& a, double alpha);

/// Sum c_k t^(k*alpha), with t^0 := 1 at t = 0.
double series_eval(const AlphaSeries& a, double t, double alpha);

}  // namespace qhatm
