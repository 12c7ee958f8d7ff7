#include "commands.hpp"

#include <CLI11.hpp>

#include <optional>
#include <ostream>

#include "varextropy/errors.hpp"
#include "varextropy/estimator.hpp"
#include "varextropy/io.hpp"
#include "varextropy/measures.hpp"
#include "varextropy/simulation.hpp"
#include "varextropy/uniformity_test.hpp"

namespace varextropy::cli {

namespace {

const std::vector<std::size_t> kDefaultNs = {10, 20, 30, 40, 50, 80, 100};
const std::vector<std::size_t> kDefaultMs = {2, 3, 4, 5, 9, 14, 19, 24, 30, 39, 49};

struct DataOptions {
    std::string input;
    std::optional<std::size_t> m;
    std::string tie = "error";
    std::string format = "plain";
    bool rescale = false;
};

struct SimOptions {
    double alpha = 0.05;
    std::size_t reps = 10000;
    std::uint64_t seed = 0;
    unsigned workers = 0;
};

struct GridOptions {
    std::vector<std::size_t> n_list = kDefaultNs;
    std::vector<std::size_t> m_list = kDefaultMs;
    std::string alt = "beta:1,2";
};

struct MeasureOptions {
    std::string dist;
    std::string method = "closed";
    std::optional<std::int64_t> n_record;
};

void add_data_options(CLI::App& cmd, DataOptions& o) {
    cmd.add_option("-i,--input", o.input, "File of whitespace-separated observations")->required();
    cmd.add_option("-m,--window", o.m, "Spacing window m (default round(sqrt(n)))")
        ->check(CLI::PositiveNumber);
    cmd.add_option("--tie", o.tie, "Tie policy")->check(CLI::IsMember({"error", "jitter"}));
    cmd.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"plain", "csv"}));
}

void add_sim_options(CLI::App& cmd, SimOptions& o) {
    cmd.add_option("--alpha", o.alpha, "Significance level")->check(CLI::Range(0.0, 1.0));
    cmd.add_option("--reps", o.reps, "Monte Carlo replications");
    cmd.add_option("--seed", o.seed, "Base RNG seed");
    cmd.add_option("--workers", o.workers, "Worker threads (0 = all cores)");
}

void add_grid_options(CLI::App& cmd, GridOptions& o) {
    cmd.add_option("--n-list", o.n_list, "Sample sizes, comma separated")
        ->delimiter(',')
        ->check(CLI::PositiveNumber);
    cmd.add_option("--m-list", o.m_list, "Window sizes, comma separated")
        ->delimiter(',')
        ->check(CLI::PositiveNumber);
}

Sample load_sample(const DataOptions& o, std::ostream& err) {
    auto values = read_values_file(o.input);
    if (o.rescale) {
        err << "warning: rescaling observations onto [0, 1] by min-max; the test then treats "
               "the observed extremes as the support endpoints\n";
        values = rescale_to_unit(values);
    }
    return Sample(std::move(values));
}

TiePolicy tie_policy(const std::string& name) {
    return name == "jitter" ? TiePolicy::jitter : TiePolicy::error;
}

int cmd_estimate(const DataOptions& o, std::ostream& out, std::ostream& err) {
    const Sample sample = load_sample(o, err);
    const std::size_t m = o.m.value_or(default_window(sample.size()));
    const double value = estimate_varextropy(sample, {.m = m, .tie_policy = tie_policy(o.tie)});
    if (o.format == "csv") {
        out << "n,m,statistic\n" << sample.size() << ',' << m << ',' << format_significant(value) << '\n';
    } else {
        out << "statistic=" << format_significant(value) << '\n'
            << "n=" << sample.size() << '\n'
            << "m=" << m << '\n';
    }
    return kExitOk;
}

int cmd_test(const DataOptions& o, const SimOptions& s, std::ostream& out, std::ostream& err) {
    const Sample sample = load_sample(o, err);
    TestOptions options;
    options.m = o.m;
    options.alpha = s.alpha;
    options.reps = s.reps;
    options.seed = s.seed;
    options.tie_policy = tie_policy(o.tie);
    options.parallelism.workers = s.workers;
    const TestReport r = run_test(sample, options);
    if (o.format == "csv") {
        out << "statistic,critical_value,alpha,n,m,reps,seed,decision\n"
            << format_significant(r.statistic) << ',' << format_significant(r.critical_value) << ','
            << format_significant(r.alpha) << ',' << r.n << ',' << r.m << ',' << r.reps << ','
            << r.seed << ',' << to_string(r.decision) << '\n';
        return kExitOk;
    }
    const bool reject = r.decision == Decision::reject;
    out << "Varextropy uniformity test (H0: data ~ U(0,1))\n"
        << "  statistic " << format_significant(r.statistic) << (reject ? " >= " : " < ")
        << "critical value " << format_significant(r.critical_value) << '\n'
        << "  verdict: " << (reject ? "reject H0" : "fail to reject H0") << " at alpha = "
        << format_significant(r.alpha) << '\n'
        << '\n'
        << "statistic=" << format_significant(r.statistic) << '\n'
        << "critical_value=" << format_significant(r.critical_value) << '\n'
        << "alpha=" << format_significant(r.alpha) << '\n'
        << "n=" << r.n << '\n'
        << "m=" << r.m << '\n'
        << "reps=" << r.reps << '\n'
        << "seed=" << r.seed << '\n'
        << "decision=" << to_string(r.decision) << '\n';
    return kExitOk;
}

int cmd_table(TableKind kind, const GridOptions& g, const SimOptions& s, std::ostream& out) {
    std::optional<DistributionSpec> alt;
    if (kind == TableKind::power) {
        alt = DistributionSpec::parse(g.alt);
        if (alt->kind() != DistributionKind::beta) {
            throw InvalidParameter("power alternatives must be beta:a,b, got '" + g.alt + "'");
        }
    }
    const auto table =
        build_table(kind, g.n_list, g.m_list, s.alpha, s.reps, alt, s.seed, {.workers = s.workers});
    write_table_csv(out, table);
    return kExitOk;
}

MeasureMethod parse_method(const std::string& name) {
    if (name == "quadrature") return MeasureMethod::quadrature;
    if (name == "quantile") return MeasureMethod::quantile_form;
    return MeasureMethod::closed_form;
}

int cmd_measure(const MeasureOptions& o, std::ostream& out) {
    const auto dist = DistributionSpec::parse(o.dist);
    const auto method = parse_method(o.method);
    if (o.n_record && dist.kind() != DistributionKind::exponential) {
        throw InvalidParameter("--n-record is only defined for exponential laws");
    }
    const auto j = extropy(dist, method);
    const auto vj = varextropy(dist, method);
    out << "distribution=" << dist.to_string() << '\n'
        << "method=" << to_string(vj.method) << '\n'
        << "J=" << format_significant(j.value) << '\n'
        << "VJ=" << format_significant(vj.value) << '\n';
    if (o.n_record) {
        const auto rec = record_varextropy_exponential(*o.n_record, dist.p1());
        out << "n_record=" << *o.n_record << '\n'
            << "VJ_record=" << format_significant(rec.value) << '\n';
    }
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Varextropy measures, m-spacing estimation and uniformity testing", "varextropy"};
    app.require_subcommand(1);

    DataOptions est_data;
    auto* estimate = app.add_subcommand("estimate", "Estimate varextropy of a sample");
    add_data_options(*estimate, est_data);

    DataOptions test_data;
    SimOptions test_sim;
    auto* test = app.add_subcommand("test", "Monte Carlo uniformity test on [0, 1]");
    add_data_options(*test, test_data);
    add_sim_options(*test, test_sim);
    test->add_flag("--rescale", test_data.rescale, "Min-max rescale the data onto [0, 1] first");

    GridOptions crit_grid;
    SimOptions crit_sim;
    auto* critical = app.add_subcommand("critical-table", "Simulate a critical-value table (CSV)");
    add_grid_options(*critical, crit_grid);
    add_sim_options(*critical, crit_sim);

    GridOptions pow_grid;
    SimOptions pow_sim;
    auto* power_cmd = app.add_subcommand("power-table", "Simulate a power table (CSV)");
    add_grid_options(*power_cmd, pow_grid);
    add_sim_options(*power_cmd, pow_sim);
    power_cmd->add_option("--alt", pow_grid.alt, "Alternative, beta:a,b");

    MeasureOptions measure_opts;
    auto* measure = app.add_subcommand("measure", "Extropy and varextropy of a parametric law");
    measure->add_option("-d,--dist", measure_opts.dist,
                        "uniform[:a,b] | exponential:rate | normal:mean,variance | beta:a,b")
        ->required();
    measure->add_option("--method", measure_opts.method, "Evaluation route")
        ->check(CLI::IsMember({"closed", "quadrature", "quantile"}));
    measure->add_option("--n-record", measure_opts.n_record,
                        "Also report the n-th upper record value (exponential only)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) reversed.pop_back();  // program name
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*estimate) return cmd_estimate(est_data, out, err);
        if (*test) return cmd_test(test_data, test_sim, out, err);
        if (*critical) return cmd_table(TableKind::critical, crit_grid, crit_sim, out);
        if (*power_cmd) return cmd_table(TableKind::power, pow_grid, pow_sim, out);
        if (*measure) return cmd_measure(measure_opts, out);
    } catch (const InvalidParameter& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const NoQuantileForm& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const DataError& e) {
        err << "error: " << e.what() << '\n';
        return kExitData;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitUsage;
}

}  // namespace varextropy::cli
