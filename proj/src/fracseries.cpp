#include "qhatm/fracseries.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "qhatm/specialfn.hpp"

namespace qhatm {

namespace {

void require_same_order(const AlphaSeries& a, const AlphaSeries& b) {
    if (a.order() != b.order())
        throw std::invalid_argument("AlphaSeries order mismatch: " +
                                    std::to_string(a.order()) + " vs " +
                                    std::to_string(b.order()));
}

void require_alpha(double alpha) {
    if (!(alpha > 0.0 && alpha <= 1.0))
        throw std::domain_error("alpha must lie in (0, 1]");
}

}  // namespace

AlphaSeries::AlphaSeries(int order) {
    if (order < 0) throw std::invalid_argument("AlphaSeries order must be >= 0");
    c_.assign(static_cast<size_t>(order) + 1, 0.0);
}

AlphaSeries::AlphaSeries(std::initializer_list<double> coeffs)
    : c_(coeffs.begin(), coeffs.end()) {
    if (c_.empty()) throw std::invalid_argument("AlphaSeries needs at least one coefficient");
    for (long double v : c_)
        if (!std::isfinite(v)) throw std::invalid_argument("AlphaSeries coefficient not finite");
}

AlphaSeries series_add(const AlphaSeries& a, const AlphaSeries& b) {
    return series_axpy(a, 1.0, b);
}

AlphaSeries series_axpy(const AlphaSeries& a, double s, const AlphaSeries& b) {
    require_same_order(a, b);
    AlphaSeries r(a.order());
    for (int k = 0; k <= a.order(); ++k) r[k] = a[k] + s * b[k];
    return r;
}

AlphaSeries series_scale(const AlphaSeries& a, double s) {
    AlphaSeries r(a.order());
    for (int k = 0; k <= a.order(); ++k) r[k] = s * a[k];
    return r;
}

AlphaSeries series_mul(const AlphaSeries& a, const AlphaSeries& b) {
    require_same_order(a, b);
    int m = a.order();
    AlphaSeries r(m);
    for (int k = 0; k <= m; ++k) {
        long double sum = 0.0L;
        for (int i = 0; i <= k; ++i) sum += a[i] * b[k - i];
        r[k] = sum;
    }
    return r;
}

AlphaSeries series_jalpha(const AlphaSeries& a, double alpha) {
    require_alpha(alpha);
    int m = a.order();
    AlphaSeries r(m);
    for (int k = 0; k < m; ++k)
        r[k + 1] = a[k] * gamma_fn(k * alpha + 1.0) / gamma_fn((k + 1) * alpha + 1.0);
    return r;
}

AlphaSeries series_caputo(const AlphaSeries& a, double alpha) {
    require_alpha(alpha);
    int m = a.order();
    AlphaSeries r(m);
    for (int k = 1; k <= m; ++k)
        r[k - 1] = a[k] * gamma_fn(k * alpha + 1.0) / gamma_fn((k - 1) * alpha + 1.0);
    return r;
}

double series_eval(const AlphaSeries& a, double t, double alpha) {
    if (t < 0.0) throw std::domain_error("series_eval: t must be >= 0");
    require_alpha(alpha);
    long double sum = a[0];
    if (t == 0.0) return static_cast<double>(sum);
    long double ta = std::pow(static_cast<long double>(t), static_cast<long double>(alpha));
    long double p = 1.0L;
    for (int k = 1; k <= a.order(); ++k) {
        p *= ta;
        sum += a[k] * p;
    }
    return static_cast<double>(sum);
}

}  // namespace qhatm
