#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "varextropy/distribution.hpp"
#include "varextropy/rng.hpp"
#include "varextropy/sample.hpp"

namespace varextropy {

/// Worker count for replicate fan-out. 0 picks std::thread::hardware_concurrency().
/// Results never depend on this value.
struct Parallelism {
    unsigned workers = 0;
};

// Experiment tags mixed into the per-replicate stream ids.
inline constexpr std::uint64_t kNullStreamTag = 1;
inline constexpr std::uint64_t kAlternativeStreamTag = 2;

Sample sample_uniform(std::size_t n, RngSpec rng);

/// Beta(1, b) via the exact inverse cdf, other shapes via two gamma variates.
Sample sample_beta(double a, double b, std::size_t n, RngSpec rng);

/// Draws n variates of any supported law.
Sample sample_from(const DistributionSpec& dist, std::size_t n, RngSpec rng);

/// F^-1(u) = 1 - (1 - u)^(1/b) for Beta(1, b).
double beta_one_b_inverse_cdf(double b, double u);

/// The ceil((1 - alpha) * count)-th smallest value of `sorted`.
double upper_quantile(const std::vector<double>& sorted, double alpha);

/// Statistic of each replicate under the uniform null, sorted ascending.
/// Replicate r uses stream stream_key({kNullStreamTag, n, m, r}).
std::vector<double> null_statistics(std::size_t n, std::size_t m, std::size_t reps,
                                    std::uint64_t seed, Parallelism par = {});

/// Monte Carlo critical value C_{1-alpha} of the m-spacing varextropy statistic
/// for uniform samples of size n. Requires reps >= 1000 and alpha in (0, 1).
double critical_value(std::size_t n, std::size_t m, double alpha, std::size_t reps,
                      std::uint64_t seed, Parallelism par = {});

/// Fraction of `reps` samples from `alternative` whose statistic reaches the
/// critical value. When `critical` is empty it is simulated from the null
/// substreams of the same seed.
double power(std::size_t n, std::size_t m, double alpha, const DistributionSpec& alternative,
             std::size_t reps, std::uint64_t seed, Parallelism par = {},
             std::optional<double> critical = std::nullopt);

enum class TableKind { critical, power };

const char* to_string(TableKind kind);

struct SimulationTable {
    TableKind kind = TableKind::critical;
    double alpha = 0.05;
    std::size_t reps = 0;
    std::uint64_t seed = 0;
    std::optional<DistributionSpec> alternative;
    std::vector<std::size_t> n_list;
    std::vector<std::size_t> m_list;
    /// (n, m) -> value; pairs violating 1 <= m <= n/2 are absent.
    std::map<std::pair<std::size_t, std::size_t>, double> cells;

    std::optional<double> at(std::size_t n, std::size_t m) const;
};

/// Fills every valid (n, m) cell of the grid. For power tables, `critical`
/// may supply precomputed critical values; missing cells are simulated.
SimulationTable build_table(TableKind kind, const std::vector<std::size_t>& n_list,
                            const std::vector<std::size_t>& m_list, double alpha,
                            std::size_t reps, const std::optional<DistributionSpec>& alternative,
                            std::uint64_t seed, Parallelism par = {},
                            const SimulationTable* critical = nullptr);

}  // namespace varextropy
