// Seed-conditional checks on the full default-seed tables (10,000 replications).

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "published_tables.hpp"
#include "varextropy/simulation.hpp"

using namespace varextropy;

namespace {

const std::vector<std::size_t> kNs(published::kN.begin(), published::kN.end());
const std::vector<std::size_t> kMs(published::kM.begin(), published::kM.end());

const SimulationTable& critical_table() {
    static const SimulationTable t =
        build_table(TableKind::critical, kNs, kMs, 0.05, 10000, std::nullopt, 0);
    return t;
}

}  // namespace

TEST(TableProperties, PublishedGridHas51Cells) {
    int populated = 0;
    for (const auto& row : published::kCritical)
        for (double v : row) populated += v > 0.0;
    EXPECT_EQ(populated, 51);
    EXPECT_EQ(critical_table().cells.size(), 51u);
}

// Along a row the critical value falls with n once n >= 4m. Closer to m = n/2
// the published table itself rises with n (e.g. m = 5: 0.4074 -> 0.4252).
TEST(TableProperties, CriticalValuesDecreaseInN) {
    for (const auto m : kMs) {
        double previous = INFINITY;
        for (const auto n : kNs) {
            if (n < 4 * m) continue;
            const double c = *critical_table().at(n, m);
            EXPECT_LT(c, previous) << "n=" << n << " m=" << m;
            previous = c;
        }
    }
}

TEST(TableProperties, PublishedCriticalValuesShowTheSameRegime) {
    for (std::size_t i = 0; i < published::kM.size(); ++i) {
        double previous = INFINITY;
        for (std::size_t j = 0; j < published::kN.size(); ++j) {
            if (published::kN[j] < 4 * published::kM[i]) continue;
            EXPECT_LT(published::kCritical[i][j], previous);
            previous = published::kCritical[i][j];
        }
    }
}

// Power rises with n for small windows, up to Monte Carlo noise: a drop is
// tolerated when it is within three standard errors of the difference. The
// published m = 2 row dips the same way (0.0966 -> 0.0960).
TEST(TableProperties, PowerIncreasesInNForSmallWindows) {
    const std::vector<std::size_t> ms = {2, 3, 4, 5};
    const auto t = build_table(TableKind::power, kNs, ms, 0.05, 10000, DistributionSpec::beta(1.0, 2.0), 0);
    for (const auto m : ms) {
        for (std::size_t j = 1; j < kNs.size(); ++j) {
            const double p0 = *t.at(kNs[j - 1], m);
            const double p1 = *t.at(kNs[j], m);
            const double se = std::sqrt((p0 * (1 - p0) + p1 * (1 - p1)) / 10000.0);
            EXPECT_GT(p1, p0 - 3.0 * se) << "n=" << kNs[j] << " m=" << m;
        }
        EXPECT_GT(*t.at(100, m), *t.at(10, m) + 0.05) << "m=" << m;
    }
}
