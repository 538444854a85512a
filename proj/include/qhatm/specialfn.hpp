#pragma once

#include <functional>

namespace qhatm {

/// Gamma function for positive real arguments (Lanczos approximation,
/// 15-term coefficient set). Relative error below 1e-13 on (0, 50].
/// Throws std::domain_error for x <= 0 or non-finite x.
double gamma_fn(double x);

// Panel Gauss-Legendre quadrature after the endpoint substitution
// x = t - t*s^p that absorbs the weak kernel singularity. p must satisfy
// p*alpha >= 1 for the transformed integrand to stay bounded.
struct QuadratureSpec {
    int panel_count = 16;
    int nodes_per_panel = 10;
    double endpoint_substitution_exponent = 4.0;

    void validate() const;
};

/// Riemann-Liouville fractional integral J^alpha f(t), 0 < alpha <= 1,
/// computed by quadrature. Independent oracle for the series calculus.
double rl_integral_oracle(const std::function<double(double)>& f, double alpha,
                          double t, const QuadratureSpec& spec = {});

/// Caputo derivative D_t^alpha f(t) for 0 < alpha < 1, given f' (the
/// definition only involves the first derivative). alpha = 1 is the
/// ordinary derivative and is handled by the caller.
double caputo_oracle(const std::function<double(double)>& f_prime, double alpha,
                     double t, const QuadratureSpec& spec = {});

}  // namespace qhatm
