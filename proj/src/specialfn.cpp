#include "qhatm/specialfn.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace qhatm {

namespace {

// Godfrey's 15-term Lanczos coefficients, g = 607/128.
constexpr double kLanczosG = 4.7421875;
constexpr double kLanczos[15] = {
    0.99999999999999709182,     57.156235665862923517,
    -59.597960355475491248,     14.136097974741747174,
    -0.49191381609762019978,    0.33994649984811888699e-4,
    0.46523628927048575665e-4,  -0.98374475304879564677e-4,
    0.15808870322491248884e-3,  -0.21026444172410488319e-3,
    0.21743961811521264320e-3,  -0.16431810653676389022e-3,
    0.84418223983852743293e-4,  -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
};

// Gauss-Legendre nodes/weights on [-1, 1] by Newton iteration on P_n.
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
    nodes.resize(static_cast<size_t>(n));
    weights.resize(static_cast<size_t>(n));
    const double pi = std::acos(-1.0);
    for (int i = 0; i < n; ++i) {
        double x = std::cos(pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        nodes[static_cast<size_t>(i)] = x;
        weights[static_cast<size_t>(i)] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
}

// Integrate g over [0, 1] with composite Gauss panels.
double panel_quad(const std::function<double(double)>& g, const QuadratureSpec& spec) {
    std::vector<double> nodes, weights;
    gauss_legendre(spec.nodes_per_panel, nodes, weights);
    double total = 0.0;
    double width = 1.0 / spec.panel_count;
    for (int p = 0; p < spec.panel_count; ++p) {
        double lo = p * width;
        double mid = lo + 0.5 * width;
        double sum = 0.0;
        for (size_t i = 0; i < nodes.size(); ++i)
            sum += weights[i] * g(mid + 0.5 * width * nodes[i]);
        total += 0.5 * width * sum;
    }
    return total;
}

// J^alpha f(t) = (p t^alpha / Gamma(alpha)) * Int_0^1 s^(p*alpha-1) f(t - t s^p) ds
double rl_core(const std::function<double(double)>& f, double alpha, double t,
               const QuadratureSpec& spec) {
    double p = spec.endpoint_substitution_exponent;
    if (p * alpha < 1.0 - 1e-12)
        throw std::domain_error(
            "quadrature: endpoint_substitution_exponent must be >= 1/alpha (got " +
            std::to_string(p) + " for alpha=" + std::to_string(alpha) + ")");
    double power = p * alpha - 1.0;
    auto g = [&](double s) {
        double w = power == 0.0 ? 1.0 : std::pow(s, power);
        return w * f(t - t * std::pow(s, p));
    };
    return p * std::pow(t, alpha) / gamma_fn(alpha) * panel_quad(g, spec);
}

}  // namespace

double gamma_fn(double x) {
    if (!std::isfinite(x) || x <= 0.0)
        throw std::domain_error("gamma_fn: argument must be finite and positive");
    double sum = kLanczos[0];
    for (int k = 1; k < 15; ++k) sum += kLanczos[k] / (x + k - 1);
    double base = x + kLanczosG - 0.5;
    constexpr double kSqrt2Pi = 2.5066282746310005;
    return kSqrt2Pi * std::pow(base, x - 0.5) * std::exp(-base) * sum;
}

void QuadratureSpec::validate() const {
    if (panel_count < 1) throw std::domain_error("quadrature: panel_count must be >= 1");
    if (nodes_per_panel < 2) throw std::domain_error("quadrature: nodes_per_panel must be >= 2");
    if (!(endpoint_substitution_exponent > 0.0))
        throw std::domain_error("quadrature: endpoint_substitution_exponent must be > 0");
}

double rl_integral_oracle(const std::function<double(double)>& f, double alpha,
                          double t, const QuadratureSpec& spec) {
    spec.validate();
    if (!(t > 0.0)) throw std::domain_error("rl_integral_oracle: t must be > 0");
    if (!(alpha > 0.0 && alpha <= 1.0))
        throw std::domain_error("rl_integral_oracle: alpha must lie in (0, 1]");
    return rl_core(f, alpha, t, spec);
}

double caputo_oracle(const std::function<double(double)>& f_prime, double alpha,
                     double t, const QuadratureSpec& spec) {
    spec.validate();
    if (!(t > 0.0)) throw std::domain_error("caputo_oracle: t must be > 0");
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::domain_error("caputo_oracle: alpha must lie in (0, 1)");
    // D^alpha f = J^(1-alpha) f'
    return rl_core(f_prime, 1.0 - alpha, t, spec);
}

}  // namespace qhatm
