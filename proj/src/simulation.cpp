#include "varextropy/simulation.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <functional>
#include <string>
#include <thread>

#include "varextropy/errors.hpp"
#include "varextropy/estimator.hpp"

namespace varextropy {

namespace {

unsigned resolve_workers(Parallelism par, std::size_t jobs) {
    unsigned workers = par.workers;
    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
    return static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(1, jobs)));
}

// Runs body(i) for i in [0, count). Each index writes only its own slot, so the
// outcome is independent of scheduling. The error from the lowest failing index
// is rethrown.
void parallel_for(std::size_t count, Parallelism par, const std::function<void(std::size_t)>& body) {
    const unsigned workers = resolve_workers(par, count);
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::size_t> error_index(workers, count);
    auto run_chunk = [&](unsigned w) {
        const std::size_t begin = count * w / workers;
        const std::size_t end = count * (w + 1) / workers;
        for (std::size_t i = begin; i < end; ++i) {
            try {
                body(i);
            } catch (...) {
                errors[w] = std::current_exception();
                error_index[w] = i;
                return;
            }
        }
    };
    if (workers == 1) {
        run_chunk(0);
    } else {
        std::vector<std::jthread> threads;
        threads.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) threads.emplace_back(run_chunk, w);
    }
    const auto first = std::min_element(error_index.begin(), error_index.end());
    if (*first < count) std::rethrow_exception(errors[first - error_index.begin()]);
}

void validate_simulation(std::size_t n, std::size_t m, double alpha, std::size_t reps) {
    validate_window(n, m);
    if (!(alpha > 0.0 && alpha < 1.0)) throw InvalidParameter("alpha must lie in (0, 1)");
    if (reps < 1000) {
        throw InvalidParameter("at least 1000 replications are required, got " + std::to_string(reps));
    }
}

std::vector<double> statistics_for(const DistributionSpec* alternative, std::uint64_t tag,
                                   std::size_t n, std::size_t m, std::size_t reps,
                                   std::uint64_t seed, Parallelism par) {
    std::vector<double> stats(reps);
    EstimatorConfig config;
    config.m = m;
    parallel_for(reps, par, [&](std::size_t r) {
        const RngSpec rng{seed, stream_key({tag, n, m, r})};
        const Sample sample = alternative ? sample_from(*alternative, n, rng) : sample_uniform(n, rng);
        stats[r] = estimate_varextropy(sample, config);
    });
    return stats;
}

}  // namespace

Sample sample_uniform(std::size_t n, RngSpec rng) {
    SubstreamRng gen(rng);
    std::vector<double> values(n);
    for (auto& v : values) v = gen.uniform();
    return Sample(std::move(values));
}

double beta_one_b_inverse_cdf(double b, double u) { return -std::expm1(std::log1p(-u) / b); }

Sample sample_beta(double a, double b, std::size_t n, RngSpec rng) {
    if (!(a > 0.0) || !(b > 0.0)) throw InvalidParameter("beta shapes must be positive");
    SubstreamRng gen(rng);
    std::vector<double> values(n);
    if (a == 1.0) {
        for (auto& v : values) v = beta_one_b_inverse_cdf(b, gen.uniform());
    } else {
        for (auto& v : values) {
            const double x = gen.gamma(a);
            const double y = gen.gamma(b);
            v = x / (x + y);
        }
    }
    return Sample(std::move(values));
}

Sample sample_from(const DistributionSpec& dist, std::size_t n, RngSpec rng) {
    switch (dist.kind()) {
        case DistributionKind::beta:
            return sample_beta(dist.p1(), dist.p2(), n, rng);
        case DistributionKind::uniform: {
            SubstreamRng gen(rng);
            std::vector<double> values(n);
            for (auto& v : values) v = dist.p1() + (dist.p2() - dist.p1()) * gen.uniform();
            return Sample(std::move(values));
        }
        case DistributionKind::exponential: {
            SubstreamRng gen(rng);
            std::vector<double> values(n);
            for (auto& v : values) v = -std::log(gen.uniform()) / dist.p1();
            return Sample(std::move(values));
        }
        case DistributionKind::normal: {
            SubstreamRng gen(rng);
            const double sd = std::sqrt(dist.p2());
            std::vector<double> values(n);
            for (auto& v : values) v = dist.p1() + sd * gen.normal();
            return Sample(std::move(values));
        }
    }
    throw InvalidParameter("no sampler for " + dist.to_string());
}

double upper_quantile(const std::vector<double>& sorted, double alpha) {
    if (sorted.empty()) throw InvalidParameter("quantile of an empty set");
    // The small offset absorbs representation error, e.g. 0.95 * 10000.
    const double target = (1.0 - alpha) * static_cast<double>(sorted.size());
    auto k = static_cast<std::size_t>(std::ceil(target - 1e-9));
    k = std::clamp<std::size_t>(k, 1, sorted.size());
    return sorted[k - 1];
}

std::vector<double> null_statistics(std::size_t n, std::size_t m, std::size_t reps,
                                    std::uint64_t seed, Parallelism par) {
    validate_window(n, m);
    auto stats = statistics_for(nullptr, kNullStreamTag, n, m, reps, seed, par);
    std::sort(stats.begin(), stats.end());
    return stats;
}

double critical_value(std::size_t n, std::size_t m, double alpha, std::size_t reps,
                      std::uint64_t seed, Parallelism par) {
    validate_simulation(n, m, alpha, reps);
    return upper_quantile(null_statistics(n, m, reps, seed, par), alpha);
}

double power(std::size_t n, std::size_t m, double alpha, const DistributionSpec& alternative,
             std::size_t reps, std::uint64_t seed, Parallelism par,
             std::optional<double> critical) {
    validate_simulation(n, m, alpha, reps);
    const double threshold = critical ? *critical : critical_value(n, m, alpha, reps, seed, par);
    const auto stats = statistics_for(&alternative, kAlternativeStreamTag, n, m, reps, seed, par);
    const auto rejections = std::count_if(stats.begin(), stats.end(),
                                          [&](double s) { return s >= threshold; });
    return static_cast<double>(rejections) / static_cast<double>(reps);
}

const char* to_string(TableKind kind) {
    return kind == TableKind::critical ? "critical" : "power";
}

std::optional<double> SimulationTable::at(std::size_t n, std::size_t m) const {
    const auto it = cells.find({n, m});
    if (it == cells.end()) return std::nullopt;
    return it->second;
}

SimulationTable build_table(TableKind kind, const std::vector<std::size_t>& n_list,
                            const std::vector<std::size_t>& m_list, double alpha,
                            std::size_t reps, const std::optional<DistributionSpec>& alternative,
                            std::uint64_t seed, Parallelism par, const SimulationTable* critical) {
    if (n_list.empty() || m_list.empty()) throw InvalidParameter("table grids must be non-empty");
    if (kind == TableKind::power && !alternative) {
        throw InvalidParameter("a power table needs an alternative distribution");
    }
    SimulationTable table;
    table.kind = kind;
    table.alpha = alpha;
    table.reps = reps;
    table.seed = seed;
    table.alternative = kind == TableKind::power ? alternative : std::nullopt;
    table.n_list = n_list;
    table.m_list = m_list;
    for (const auto m : m_list) {
        for (const auto n : n_list) {
            if (n < 2 || m < 1 || 2 * m > n) continue;
            double value = 0.0;
            if (kind == TableKind::critical) {
                value = critical_value(n, m, alpha, reps, seed, par);
            } else {
                std::optional<double> threshold;
                if (critical != nullptr) threshold = critical->at(n, m);
                value = power(n, m, alpha, *alternative, reps, seed, par, threshold);
            }
            table.cells[{n, m}] = value;
        }
    }
    return table;
}

}  // namespace varextropy
