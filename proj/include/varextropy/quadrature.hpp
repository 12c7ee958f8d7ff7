#pragma once

#include <functional>

namespace varextropy {

struct QuadratureOptions {
    double abs_tol = 1e-9;
    int initial_panels = 4;
    int max_panels = 1 << 14;
};

/// Composite 20-point Gauss-Legendre rule on [lo, hi]. The panel count is
/// doubled until two successive estimates agree to abs_tol; throws
/// QuadratureError when max_panels is reached first or the integrand goes
/// non-finite.
double integrate(const std::function<double(double)>& f, double lo, double hi,
                 const QuadratureOptions& options = {});

}  // namespace varextropy

namespace varextropy {

/// Tanh-sinh (double exponential) rule on a finite [lo, hi]; tolerates
/// integrable algebraic singularities at either endpoint. The step is halved
/// until successive estimates agree to abs_tol. Throws QuadratureError when
/// the integrand fails to decay at the truncated ends (a divergent integral)
/// or the refinement budget runs out.
double integrate_endpoint_singular(const std::function<double(double)>& f, double lo, double hi,
                                   const QuadratureOptions& options = {});

}  // namespace varextropy
