#include "varextropy/measures.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "varextropy/errors.hpp"
#include "varextropy/quadrature.hpp"
#include "varextropy/special.hpp"

namespace varextropy {

namespace {

double density_power_integral(const DistributionSpec& dist, int power) {
    const auto [lo, hi] = dist.integration_range();
    auto integrand = [&](double x) {
        const double f = dist.pdf(x);
        return power == 2 ? f * f : f * f * f;
    };
    // Beta densities can have algebraic behaviour at 0 and 1.
    if (dist.kind() == DistributionKind::beta) return integrate_endpoint_singular(integrand, lo, hi);
    return integrate(integrand, lo, hi);
}

void require_quantile_form(const DistributionSpec& dist) {
    const bool ok = dist.kind() == DistributionKind::uniform ||
                    dist.kind() == DistributionKind::exponential ||
                    (dist.kind() == DistributionKind::beta && dist.p1() == 1.0);
    if (!ok) {
        throw NoQuantileForm("no quantile form implemented for " + dist.to_string() +
                             " (available: uniform, exponential, beta with a = 1)");
    }
}

}  // namespace

const char* to_string(MeasureMethod method) {
    switch (method) {
        case MeasureMethod::closed_form: return "closed_form";
        case MeasureMethod::quadrature: return "quadrature";
        case MeasureMethod::quantile_form: return "quantile_form";
    }
    return "?";
}

double density_quantile(const DistributionSpec& dist, double p) {
    require_quantile_form(dist);
    switch (dist.kind()) {
        case DistributionKind::uniform:
            return 1.0 / (dist.p2() - dist.p1());
        case DistributionKind::exponential:
            return dist.p1() * (1.0 - p);
        case DistributionKind::beta: {
            // F^-1(p) = 1 - (1 - p)^(1/b)
            const double b = dist.p2();
            return b * std::pow(1.0 - p, 1.0 - 1.0 / b);
        }
        case DistributionKind::normal:
            break;
    }
    return 0.0;
}

MeasureValue extropy(const DistributionSpec& dist) {
    switch (dist.kind()) {
        case DistributionKind::uniform:
            return {-0.5 / (dist.p2() - dist.p1()), MeasureMethod::closed_form};
        case DistributionKind::exponential:
            return {-dist.p1() / 4.0, MeasureMethod::closed_form};
        case DistributionKind::normal:
            return {-1.0 / (4.0 * std::sqrt(dist.p2() * std::numbers::pi)),
                    MeasureMethod::closed_form};
        case DistributionKind::beta:
            break;
    }
    return extropy_quadrature(dist);
}

MeasureValue extropy_quadrature(const DistributionSpec& dist) {
    return {-0.5 * density_power_integral(dist, 2), MeasureMethod::quadrature};
}

MeasureValue extropy_quantile_form(const DistributionSpec& dist) {
    require_quantile_form(dist);
    const double mean_density =
        integrate_endpoint_singular([&](double p) { return density_quantile(dist, p); }, 0.0, 1.0);
    return {-0.5 * mean_density, MeasureMethod::quantile_form};
}

MeasureValue varextropy_closed(const DistributionSpec& dist) {
    switch (dist.kind()) {
        case DistributionKind::uniform:
            return {0.0, MeasureMethod::closed_form};
        case DistributionKind::exponential:
            return {dist.p1() * dist.p1() * (1.0 / 48.0), MeasureMethod::closed_form};
        case DistributionKind::normal: {
            const double sqrt3 = std::numbers::sqrt3;
            return {(2.0 - sqrt3) / (16.0 * std::numbers::pi * dist.p2() * sqrt3),
                    MeasureMethod::closed_form};
        }
        case DistributionKind::beta:
            break;
    }
    return varextropy_quadrature(dist);
}

MeasureValue varextropy_quadrature(const DistributionSpec& dist) {
    const double cube = density_power_integral(dist, 3);
    const double square = density_power_integral(dist, 2);
    return {0.25 * cube - 0.25 * square * square, MeasureMethod::quadrature};
}

MeasureValue varextropy_quantile_form(const DistributionSpec& dist) {
    require_quantile_form(dist);
    const double inv_sq = integrate_endpoint_singular(
        [&](double p) {
            const double d = density_quantile(dist, p);
            return d * d;
        },
        0.0, 1.0);
    const double inv =
        integrate_endpoint_singular([&](double p) { return density_quantile(dist, p); }, 0.0, 1.0);
    return {0.25 * (inv_sq - inv * inv), MeasureMethod::quantile_form};
}

MeasureValue extropy(const DistributionSpec& dist, MeasureMethod method) {
    switch (method) {
        case MeasureMethod::closed_form: return extropy(dist);
        case MeasureMethod::quadrature: return extropy_quadrature(dist);
        case MeasureMethod::quantile_form: return extropy_quantile_form(dist);
    }
    return extropy(dist);
}

MeasureValue varextropy(const DistributionSpec& dist, MeasureMethod method) {
    switch (method) {
        case MeasureMethod::closed_form: return varextropy_closed(dist);
        case MeasureMethod::quadrature: return varextropy_quadrature(dist);
        case MeasureMethod::quantile_form: return varextropy_quantile_form(dist);
    }
    return varextropy_closed(dist);
}

MeasureValue record_varextropy_exponential(std::int64_t n, double rate) {
    if (n < 1) throw InvalidParameter("record index n must be >= 1, got " + std::to_string(n));
    if (!(rate > 0.0) || !std::isfinite(rate)) {
        throw InvalidParameter("exponential rate must be > 0");
    }
    const double nn = static_cast<double>(n);
    const double lg_n = log_gamma(nn);
    const double log_cube_term = std::log(4.0) + log_gamma(3.0 * nn - 2.0) - 3.0 * lg_n -
                                 (3.0 * nn - 2.0) * std::log(3.0);
    const double log_square_term =
        2.0 * log_gamma(2.0 * nn - 1.0) - 4.0 * lg_n - (2.0 * nn - 2.0) * std::log(4.0);
    // The bracket is E[f^2] - (E f)^2 scaled; expm1 keeps the difference accurate for large n.
    const double bracket = std::exp(log_square_term) * std::expm1(log_cube_term - log_square_term);
    return {rate * rate / 16.0 * bracket, MeasureMethod::closed_form};
}

}  // namespace varextropy
