#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "varextropy/sample.hpp"

namespace varextropy {

enum class TiePolicy { error, jitter };

/// Window size and tie handling for the m-spacing estimator.
struct EstimatorConfig {
    std::size_t m = 1;
    TiePolicy tie_policy = TiePolicy::error;
    /// Jitter step; when unset, 1e-10 times the sample range.
    std::optional<double> jitter_epsilon;
};

/// round(sqrt(n)) clamped to [1, floor(n/2)].
std::size_t default_window(std::size_t n);

/// Throws InvalidParameter unless n >= 2 and 1 <= m <= n/2.
void validate_window(std::size_t n, std::size_t m);

/// Density estimates y_i = (2m/n) / (X_{i+m:n} - X_{i-m:n}) with the window
/// indices clamped to [1, n].
struct SpacingTerms {
    std::vector<double> y;
};

SpacingTerms spacing_terms(const Sample& sample, const EstimatorConfig& config);

/// Empirical variance of y/2 over the spacing terms:
///   (1/(4n)) sum y_i^2 - (1/4) ((1/n) sum y_i)^2
double varextropy_from_terms(const SpacingTerms& terms);

/// m-spacing estimate of varextropy from a sample.
double estimate_varextropy(const Sample& sample, const EstimatorConfig& config);

/// Sorted values shifted by k * epsilon at 0-based rank k, which breaks ties
/// while keeping the order.
std::vector<double> jittered(const Sample& sample, std::optional<double> epsilon);

}  // namespace varextropy
