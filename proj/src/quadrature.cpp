#include "varextropy/quadrature.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

#include "varextropy/errors.hpp"

namespace varextropy {

namespace {

constexpr int kOrder = 20;

struct GaussLegendre {
    std::array<double, kOrder> nodes{};
    std::array<double, kOrder> weights{};
};

// Roots of P_20 by Newton iteration from the Chebyshev-like initial guesses.
GaussLegendre make_rule() {
    GaussLegendre rule;
    for (int i = 0; i < kOrder; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (kOrder + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0;
            double p1 = x;
            for (int k = 2; k <= kOrder; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = kOrder * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        rule.nodes[i] = x;
        rule.weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return rule;
}

const GaussLegendre& rule() {
    static const GaussLegendre instance = make_rule();
    return instance;
}

double composite(const std::function<double(double)>& f, double lo, double hi, int panels) {
    const auto& gl = rule();
    const double width = (hi - lo) / panels;
    double total = 0.0;
    for (int p = 0; p < panels; ++p) {
        const double mid = lo + (p + 0.5) * width;
        double panel_sum = 0.0;
        for (int i = 0; i < kOrder; ++i) {
            panel_sum += gl.weights[i] * f(mid + 0.5 * width * gl.nodes[i]);
        }
        total += 0.5 * width * panel_sum;
    }
    return total;
}

}  // namespace

double integrate(const std::function<double(double)>& f, double lo, double hi,
                 const QuadratureOptions& options) {
    if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi)) {
        throw InvalidParameter("integration range must be finite with lo < hi");
    }
    int panels = options.initial_panels;
    double previous = composite(f, lo, hi, panels);
    while (panels < options.max_panels) {
        panels *= 2;
        const double current = composite(f, lo, hi, panels);
        if (!std::isfinite(current)) break;
        if (std::abs(current - previous) <= options.abs_tol) return current;
        previous = current;
    }
    std::ostringstream os;
    os << "quadrature did not converge on [" << lo << ", " << hi << "] with " << panels
       << " panels (last estimate " << previous << ")";
    throw QuadratureError(os.str());
}

double integrate_endpoint_singular(const std::function<double(double)>& f, double lo, double hi,
                                   const QuadratureOptions& options) {
    if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi)) {
        throw InvalidParameter("integration range must be finite with lo < hi");
    }
    constexpr double kHalfPi = 0.5 * std::numbers::pi;
    constexpr double kTMax = 4.5;
    constexpr int kMaxLevel = 12;
    const double width = hi - lo;

    // Contribution of the node pair at +t and -t. The endpoint distance is
    // width / (1 + e^{2u}), formed directly so it does not round to zero.
    auto pair_term = [&](double t) {
        const double u = kHalfPi * std::sinh(t);
        const double dist = width / (1.0 + std::exp(2.0 * u));
        const double cosh_u = std::cosh(u);
        const double weight = 0.5 * width * kHalfPi * std::cosh(t) / (cosh_u * cosh_u);
        const double left = f(lo + dist);
        const double right = f(hi - dist);
        return weight * (left + right);
    };

    const double tail = std::abs(pair_term(kTMax));
    if (!std::isfinite(tail) || tail > options.abs_tol) {
        std::ostringstream os;
        os << "integrand does not decay at the ends of [" << lo << ", " << hi
           << "]; the integral is likely divergent";
        throw QuadratureError(os.str());
    }

    double h = 0.5;
    double sum = 0.5 * width * kHalfPi * f(lo + 0.5 * width);
    for (int j = 1; j * h <= kTMax; ++j) sum += pair_term(j * h);
    double previous = h * sum;
    for (int level = 1; level <= kMaxLevel; ++level) {
        h *= 0.5;
        // Only the odd multiples of the new step are new nodes.
        for (int j = 1; j * h <= kTMax; j += 2) sum += pair_term(j * h);
        const double current = h * sum;
        if (!std::isfinite(current)) break;
        if (std::abs(current - previous) <= options.abs_tol && level >= 3) return current;
        previous = current;
    }
    std::ostringstream os;
    os << "tanh-sinh quadrature did not converge on [" << lo << ", " << hi << "] (last estimate "
       << previous << ")";
    throw QuadratureError(os.str());
}

}  // namespace varextropy
