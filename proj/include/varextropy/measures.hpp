#pragma once

#include <cstdint>

#include "varextropy/distribution.hpp"

namespace varextropy {

enum class MeasureMethod { closed_form, quadrature, quantile_form };

const char* to_string(MeasureMethod method);

struct MeasureValue {
    double value = 0.0;
    MeasureMethod method = MeasureMethod::closed_form;
};

// Extropy J(X) = -1/2 * integral of f^2. Closed forms for uniform, exponential
// and normal; beta goes through quadrature (reported in `method`).
MeasureValue extropy(const DistributionSpec& dist);
MeasureValue extropy_quadrature(const DistributionSpec& dist);
MeasureValue extropy_quantile_form(const DistributionSpec& dist);

// Varextropy VJ(X) = Var(-f(X)/2) = (1/4) int f^3 - (1/4) (int f^2)^2.
MeasureValue varextropy_closed(const DistributionSpec& dist);
MeasureValue varextropy_quadrature(const DistributionSpec& dist);

/// Quantile representation (1/4)[int q^-2 dp - (int q^-1 dp)^2] with
/// q(p) = d/dp F^-1(p). Available for uniform, exponential and beta(1, b);
/// other laws throw NoQuantileForm.
MeasureValue varextropy_quantile_form(const DistributionSpec& dist);

/// Dispatch on the requested method. Closed form on beta falls back to quadrature.
MeasureValue extropy(const DistributionSpec& dist, MeasureMethod method);
MeasureValue varextropy(const DistributionSpec& dist, MeasureMethod method);

/// Reciprocal quantile density 1/q(p) = f(F^-1(p)) for laws with a quantile form.
double density_quantile(const DistributionSpec& dist, double p);

/// Varextropy of the n-th upper record value of an exponential(rate) sequence:
///
///   (rate^2/16) [4 G(3n-2) / (G(n)^3 3^(3n-2)) - G(2n-1)^2 / (G(n)^4 4^(2n-2))]
///
/// with both gamma ratios evaluated in log space. n = 1 reduces to rate^2/48.
MeasureValue record_varextropy_exponential(std::int64_t n, double rate);

}  // namespace varextropy
