#pragma once

namespace varextropy {

/// Natural log of the gamma function for x > 0 (Lanczos approximation,
/// g = 7, nine terms). Throws InvalidParameter for x <= 0 or non-finite x.
double log_gamma(double x);

/// ln B(a, b) for a, b > 0.
double log_beta(double a, double b);

}  // namespace varextropy
