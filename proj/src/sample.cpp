#include "varextropy/sample.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "varextropy/errors.hpp"

namespace varextropy {

Sample::Sample(std::vector<double> values) : values_(std::move(values)) {
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (!std::isfinite(values_[i])) {
            throw DataError("observation " + std::to_string(i + 1) + " is not finite");
        }
    }
    std::sort(values_.begin(), values_.end());
}

double ecdf(const Sample& sample, double x) {
    if (sample.empty()) return 0.0;
    const auto sorted = sample.sorted();
    const auto count = std::upper_bound(sorted.begin(), sorted.end(), x) - sorted.begin();
    return static_cast<double>(count) / static_cast<double>(sorted.size());
}

}  // namespace varextropy
