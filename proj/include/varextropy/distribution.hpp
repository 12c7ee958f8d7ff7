#pragma once

#include <string>
#include <utility>

namespace varextropy {

enum class DistributionKind { uniform, exponential, normal, beta };

/// A parametric law on the real line. Construct through the named factories;
/// each rejects parameters outside the law's domain with InvalidParameter.
class DistributionSpec {
public:
    static DistributionSpec uniform(double a = 0.0, double b = 1.0);
    static DistributionSpec exponential(double rate);
    static DistributionSpec normal(double mean, double variance);
    static DistributionSpec beta(double a, double b);

    /// Parses "uniform", "uniform:a,b", "exponential:rate", "normal:mean,variance", "beta:a,b".
    static DistributionSpec parse(const std::string& text);

    DistributionKind kind() const noexcept { return kind_; }

    // uniform: endpoints; exponential: (rate, -); normal: (mean, variance); beta: shapes.
    double p1() const noexcept { return p1_; }
    double p2() const noexcept { return p2_; }

    double pdf(double x) const;
    double cdf(double x) const;

    /// Integration range covering the support; infinite tails are truncated.
    std::pair<double, double> integration_range() const;

    std::string to_string() const;

private:
    DistributionSpec(DistributionKind kind, double p1, double p2) : kind_(kind), p1_(p1), p2_(p2) {}

    DistributionKind kind_;
    double p1_;
    double p2_;
};

const char* to_string(DistributionKind kind);

}  // namespace varextropy
