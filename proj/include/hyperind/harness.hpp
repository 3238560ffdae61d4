#ifndef HYPERIND_HARNESS_HPP
#define HYPERIND_HARNESS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hyperind/algorithms.hpp"
#include "hyperind/generators.hpp"
#include "hyperind/schedule.hpp"

namespace hyperind {

enum class Algorithm { Spencer, Greedy, Akpss, KMinus2, AppendixA, AppendixB };
const char* to_string(Algorithm a);
Algorithm algorithm_from_string(const std::string& s);

/// Parameters of one solve call. Unset scales are derived from the input:
/// d = max(Δ_{k-2}(H), 1)/n, T = t = max(e^2, Δ_1(H_k)^{1/(k-1)}).
struct SolveConfig {
    Algorithm algorithm = Algorithm::Greedy;
    std::optional<double> d;
    std::optional<double> t;
    std::optional<double> T;
    bool strict = false;
    int retries = 16;
    double epsilon = 0.0;
    int appendix_case = 1;
    std::optional<double> delta;
    std::optional<double> beta;
    GreedyOrder greedy_order = GreedyOrder::MinDegree;
    std::optional<BoundKind> bound;  // default depends on the algorithm
};

struct SolveOutcome {
    VertexSet set;
    bool verified = false;
    bool accepted = true;
    BoundKind bound = BoundKind::Spencer;
    double reference = 0.0;  // NaN when the bound is undefined
    double scale = 0.0;      // d, t or T handed to the bound
    std::vector<RoundSummary> rounds;
    std::vector<std::string> warnings;
    std::map<std::string, double> diagnostics;
};

SolveOutcome solve(const LayeredHypergraph& h, const SolveConfig& config, const RngSpec& rng);

double default_d(const LayeredHypergraph& h);
double default_t(const LayeredHypergraph& h);

/// JSON config:
/// {
///   "schema": 1,
///   "generator": {"kind": "girth5", "n": 1000, "k": 3, "t": 8},   or "input": "<file>"
///   "algorithm": "akpss",
///   "params": {"T": 8, "d": .., "t": .., "epsilon": .., "delta": .., "beta": ..,
///              "case": 1, "retries": 16, "greedy": "min_degree" | "random"},
///   "bound": "Main",            optional
///   "strict": false,
///   "trials": 10, "seed": 7,
///   "csv": "out.csv", "json": "out.json", "threads": 4
/// }
struct ExperimentConfig {
    std::optional<GenSpec> generator;
    std::optional<std::string> input;
    SolveConfig solve;
    int trials = 1;
    std::uint64_t seed = 0;
    std::string csv_path;
    std::string json_path;
    int threads = 0;  // 0: hardware concurrency, capped by HYPERIND_THREADS
};

inline constexpr int report_schema_version = 1;

ExperimentConfig parse_experiment_config(const std::string& json_text);
ExperimentConfig load_experiment_config(const std::string& path);

struct TrialRow {
    int trial = 0;
    std::size_t n = 0;
    int k = 0;
    std::size_t edges = 0;
    std::size_t size = 0;
    double reference = 0.0;
    double ratio = 0.0;
    bool verified = false;
    bool accepted = false;
    std::size_t rounds = 0;
    std::size_t good_rounds = 0;
    double window_fraction = 0.0;  // rounds with |V_{m+1}| inside the window
    std::size_t warnings = 0;
    bool regime_warning = false;
    std::string error;
    double runtime_seconds = 0.0;  // JSON only
    std::vector<RoundSummary> round_log;
};

struct ExperimentReport {
    std::string algorithm;
    std::string bound;
    std::vector<TrialRow> rows;
    double min_ratio = 0.0, median_ratio = 0.0, mean_ratio = 0.0;
    std::size_t failures = 0;  // rows not verified
    double runtime_seconds = 0.0;
    bool ok() const noexcept { return failures == 0; }
};

/// Runs every trial (trial i uses stream (seed, "trial#i")), then writes the
/// CSV and JSON files named in the config when set.
ExperimentReport run_experiment(const ExperimentConfig& config);

std::string report_csv(const ExperimentReport& report);
std::string report_json(const ExperimentReport& report);

struct DiffEntry {
    std::string path;
    std::string left;
    std::string right;
};

/// Field-wise comparison of two JSON reports. Keys starting with "runtime"
/// are skipped. Throws SchemaError on differing or missing schema versions.
std::vector<DiffEntry> diff_reports(const std::string& left_json, const std::string& right_json);

/// Worker count: requested (0 means hardware), capped by HYPERIND_THREADS.
unsigned worker_count(int requested);

}  // namespace hyperind

#endif
