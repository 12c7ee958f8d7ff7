#include "varextropy/estimator.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "varextropy/errors.hpp"

namespace varextropy {

std::size_t default_window(std::size_t n) {
    const auto half = std::max<std::size_t>(1, n / 2);
    const auto root = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(n))));
    return std::clamp<std::size_t>(root, 1, half);
}

void validate_window(std::size_t n, std::size_t m) {
    if (n < 2) {
        throw InvalidParameter("estimation needs at least 2 observations, got " +
                               std::to_string(n));
    }
    if (m < 1 || 2 * m > n) {
        throw InvalidParameter("window m = " + std::to_string(m) + " must satisfy 1 <= m <= n/2 (n = " +
                               std::to_string(n) + ")");
    }
}

std::vector<double> jittered(const Sample& sample, std::optional<double> epsilon) {
    const auto sorted = sample.sorted();
    std::vector<double> out(sorted.begin(), sorted.end());
    double step = 0.0;
    if (epsilon) {
        step = *epsilon;
    } else if (!out.empty()) {
        const double range = out.back() - out.front();
        step = range > 0.0 ? 1e-10 * range : 1e-10;
    }
    if (!(step > 0.0) || !std::isfinite(step)) {
        throw InvalidParameter("jitter epsilon must be a positive finite number");
    }
    for (std::size_t k = 0; k < out.size(); ++k) out[k] += static_cast<double>(k) * step;
    return out;
}

namespace {

SpacingTerms terms_from_sorted(std::span<const double> x, std::size_t m) {
    const std::size_t n = x.size();
    const double scale = 2.0 * static_cast<double>(m) / static_cast<double>(n);
    SpacingTerms terms;
    terms.y.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t upper = std::min(i + m, n - 1);
        const std::size_t lower = i >= m ? i - m : 0;
        const double width = x[upper] - x[lower];
        if (!(width > 0.0)) throw TieError(i + 1, x[i]);
        terms.y[i] = scale / width;
    }
    return terms;
}

}  // namespace

SpacingTerms spacing_terms(const Sample& sample, const EstimatorConfig& config) {
    validate_window(sample.size(), config.m);
    if (config.tie_policy == TiePolicy::jitter) {
        const auto values = jittered(sample, config.jitter_epsilon);
        return terms_from_sorted(values, config.m);
    }
    return terms_from_sorted(sample.sorted(), config.m);
}

double varextropy_from_terms(const SpacingTerms& terms) {
    // Centered two-pass form of (1/(4n)) sum y^2 - (1/4) ybar^2; never negative.
    const double n = static_cast<double>(terms.y.size());
    double sum = 0.0;
    for (const double y : terms.y) sum += y;
    const double mean = sum / n;
    double sum_sq_dev = 0.0;
    for (const double y : terms.y) sum_sq_dev += (y - mean) * (y - mean);
    return sum_sq_dev / (4.0 * n);
}

double estimate_varextropy(const Sample& sample, const EstimatorConfig& config) {
    return varextropy_from_terms(spacing_terms(sample, config));
}

}  // namespace varextropy
