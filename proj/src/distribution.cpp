#include "varextropy/distribution.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include "varextropy/errors.hpp"
#include "varextropy/special.hpp"

namespace varextropy {

namespace {

void require(bool ok, const std::string& message) {
    if (!ok) throw InvalidParameter(message);
}

bool finite(double v) { return std::isfinite(v); }

std::vector<double> parse_params(const std::string& text, const std::string& whole) {
    std::vector<double> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto comma = text.find(',', start);
        const auto token = text.substr(start, comma == std::string::npos ? std::string::npos
                                                                          : comma - start);
        double value = 0.0;
        const auto* first = token.data();
        const auto* last = token.data() + token.size();
        const auto [ptr, ec] = std::from_chars(first, last, value);
        if (token.empty() || ec != std::errc() || ptr != last) {
            throw InvalidParameter("cannot parse parameter '" + token + "' in '" + whole + "'");
        }
        out.push_back(value);
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

}  // namespace

DistributionSpec DistributionSpec::uniform(double a, double b) {
    require(finite(a) && finite(b) && a < b, "uniform requires finite endpoints a < b");
    return {DistributionKind::uniform, a, b};
}

DistributionSpec DistributionSpec::exponential(double rate) {
    require(finite(rate) && rate > 0.0, "exponential requires rate > 0");
    return {DistributionKind::exponential, rate, 0.0};
}

DistributionSpec DistributionSpec::normal(double mean, double variance) {
    require(finite(mean) && finite(variance) && variance > 0.0,
            "normal requires finite mean and variance > 0");
    return {DistributionKind::normal, mean, variance};
}

DistributionSpec DistributionSpec::beta(double a, double b) {
    require(finite(a) && finite(b) && a > 0.0 && b > 0.0, "beta requires shapes a > 0, b > 0");
    return {DistributionKind::beta, a, b};
}

DistributionSpec DistributionSpec::parse(const std::string& text) {
    const auto colon = text.find(':');
    const auto name = text.substr(0, colon);
    const auto params = colon == std::string::npos ? std::vector<double>{}
                                                   : parse_params(text.substr(colon + 1), text);
    auto arity = [&](std::size_t n) {
        require(params.size() == n, "'" + name + "' takes " + std::to_string(n) +
                                        " parameter(s), got '" + text + "'");
    };
    if (name == "uniform") {
        if (params.empty()) return uniform();
        arity(2);
        return uniform(params[0], params[1]);
    }
    if (name == "exponential") {
        arity(1);
        return exponential(params[0]);
    }
    if (name == "normal") {
        arity(2);
        return normal(params[0], params[1]);
    }
    if (name == "beta") {
        arity(2);
        return beta(params[0], params[1]);
    }
    throw InvalidParameter("unknown distribution '" + name +
                           "' (expected uniform, exponential, normal or beta)");
}

double DistributionSpec::pdf(double x) const {
    switch (kind_) {
        case DistributionKind::uniform:
            return (x >= p1_ && x <= p2_) ? 1.0 / (p2_ - p1_) : 0.0;
        case DistributionKind::exponential:
            return x < 0.0 ? 0.0 : p1_ * std::exp(-p1_ * x);
        case DistributionKind::normal: {
            const double z = x - p1_;
            return std::exp(-0.5 * z * z / p2_) / std::sqrt(2.0 * std::numbers::pi * p2_);
        }
        case DistributionKind::beta:
            if (x <= 0.0 || x >= 1.0) return 0.0;
            return std::exp((p1_ - 1.0) * std::log(x) + (p2_ - 1.0) * std::log1p(-x) -
                            log_beta(p1_, p2_));
    }
    return 0.0;
}

double DistributionSpec::cdf(double x) const {
    switch (kind_) {
        case DistributionKind::uniform:
            if (x <= p1_) return 0.0;
            if (x >= p2_) return 1.0;
            return (x - p1_) / (p2_ - p1_);
        case DistributionKind::exponential:
            return x <= 0.0 ? 0.0 : -std::expm1(-p1_ * x);
        case DistributionKind::normal:
            return 0.5 * std::erfc(-(x - p1_) / std::sqrt(2.0 * p2_));
        case DistributionKind::beta: {
            if (x <= 0.0) return 0.0;
            if (x >= 1.0) return 1.0;
            if (p1_ == 1.0) return -std::expm1(p2_ * std::log1p(-x));
            throw InvalidParameter("beta cdf is only implemented for a = 1");
        }
    }
    return 0.0;
}

std::pair<double, double> DistributionSpec::integration_range() const {
    switch (kind_) {
        case DistributionKind::uniform:
            return {p1_, p2_};
        case DistributionKind::exponential:
            // F(x) = 1 - 1e-12
            return {0.0, std::log(1e12) / p1_};
        case DistributionKind::normal: {
            const double sd = std::sqrt(p2_);
            return {p1_ - 8.0 * sd, p1_ + 8.0 * sd};
        }
        case DistributionKind::beta:
            return {0.0, 1.0};
    }
    return {0.0, 1.0};
}

std::string DistributionSpec::to_string() const {
    std::ostringstream os;
    os.precision(10);
    os << varextropy::to_string(kind_) << ':' << p1_;
    if (kind_ != DistributionKind::exponential) os << ',' << p2_;
    return os.str();
}

const char* to_string(DistributionKind kind) {
    switch (kind) {
        case DistributionKind::uniform: return "uniform";
        case DistributionKind::exponential: return "exponential";
        case DistributionKind::normal: return "normal";
        case DistributionKind::beta: return "beta";
    }
    return "?";
}

}  // namespace varextropy
