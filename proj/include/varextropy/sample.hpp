#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace varextropy {

/// Immutable set of finite observations held in ascending order.
class Sample {
public:
    /// Sorts the observations; throws DataError on NaN or infinite entries.
    explicit Sample(std::vector<double> values);

    std::size_t size() const noexcept { return values_.size(); }
    bool empty() const noexcept { return values_.empty(); }

    /// Order statistics X_{1:n} <= ... <= X_{n:n}.
    std::span<const double> sorted() const noexcept { return values_; }

    /// 1-based order statistic X_{i:n}.
    double order_statistic(std::size_t i) const { return values_.at(i - 1); }

    double min() const { return values_.front(); }
    double max() const { return values_.back(); }

private:
    std::vector<double> values_;
};

/// Empirical distribution function F_n(x): the fraction of observations <= x.
double ecdf(const Sample& sample, double x);

}  // namespace varextropy
