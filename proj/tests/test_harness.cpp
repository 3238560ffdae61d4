#include <doctest.h>

#include <cmath>
#include <fstream>
#include <sstream>

#include "hyperind/harness.hpp"
#include "hyperind/structure.hpp"

using namespace hyperind;

namespace {

std::string read_all(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::Internal;
}

const char* small_config = R"({
  "schema": 1,
  "generator": {"kind": "gnp", "n": 300, "k": 3, "t": 4},
  "algorithm": "greedy",
  "trials": 4, "seed": 11, "threads": 2
})";

}  // namespace

TEST_CASE("solve defaults and bounds") {
    LayeredHypergraph empty(50, 3);
    SolveConfig cfg;
    cfg.algorithm = Algorithm::Greedy;
    auto out = solve(empty, cfg, {1, "solve"});
    CHECK(out.verified);
    CHECK(out.set.size() == 50);
    CHECK(out.reference == 50.0);
    CHECK(algorithm_from_string("appB") == Algorithm::AppendixB);
    CHECK(std::string(to_string(Algorithm::KMinus2)) == "pkm2");
    CHECK(kind_of([] { algorithm_from_string("nope"); }) == ErrorKind::InvalidArguments);
}

TEST_CASE("edgeless experiment has ratio 1") {
    auto cfg = parse_experiment_config(R"({"schema": 1, "generator": {"kind": "gnp", "n": 40, "k": 3, "p": 0},
                                           "algorithm": "spencer", "trials": 1, "seed": 1})");
    auto rep = run_experiment(cfg);
    REQUIRE(rep.rows.size() == 1);
    CHECK(rep.ok());
    CHECK(rep.rows[0].size == 40);
    CHECK(rep.rows[0].ratio == doctest::Approx(1.0));
}

TEST_CASE("experiments are reproducible") {
    auto cfg = parse_experiment_config(small_config);
    auto a = run_experiment(cfg);
    cfg.threads = 1;
    auto b = run_experiment(cfg);
    CHECK(report_csv(a) == report_csv(b));
    CHECK(diff_reports(report_json(a), report_json(b)).empty());
    CHECK(a.ok());
    CHECK(a.rows.size() == 4);
}

TEST_CASE("CSV columns are pinned") {
    auto rep = run_experiment(parse_experiment_config(small_config));
    const std::string csv = report_csv(rep);
    const std::string golden = read_all(HYPERIND_GOLDEN_DIR "/greedy_gnp.csv");
    REQUIRE_FALSE(golden.empty());
    CHECK(csv.substr(0, csv.find('\n')) == golden.substr(0, golden.find('\n')));
    CHECK(csv == golden);
}

TEST_CASE("AKPSS experiments report the window fraction") {
    auto cfg = parse_experiment_config(R"({"schema": 1, "generator": {"kind": "girth5", "n": 1000, "k": 2, "t": 8},
                                           "algorithm": "akpss", "trials": 2, "seed": 3})");
    auto rep = run_experiment(cfg);
    CHECK(rep.ok());
    for (const auto& row : rep.rows) {
        CHECK(row.window_fraction >= 0.0);
        CHECK(row.window_fraction <= 1.0);
        CHECK(row.rounds > 0);
        CHECK(row.round_log.size() == row.rounds);
        std::size_t inside = 0;
        for (const auto& r : row.round_log) inside += r.window_ok;
        CHECK(row.window_fraction == doctest::Approx(static_cast<double>(inside) / row.rounds));
    }
}

TEST_CASE("config validation") {
    CHECK(kind_of([] { parse_experiment_config("{"); }) == ErrorKind::ParseError);
    CHECK(kind_of([] { parse_experiment_config(R"({"schema": 2, "algorithm": "greedy"})"); }) ==
          ErrorKind::SchemaError);
    CHECK(kind_of([] {
              parse_experiment_config(R"({"schema": 1, "generator": {"kind": "gnp", "n": 10, "k": 3, "p": 0},
                                          "algorithm": "magic"})");
          }) == ErrorKind::InvalidArguments);
}

TEST_CASE("diff_reports") {
    auto rep = run_experiment(parse_experiment_config(small_config));
    const std::string a = report_json(rep);
    CHECK(diff_reports(a, a).empty());

    auto changed = rep;
    changed.rows[1].ratio += 0.5;
    auto d = diff_reports(a, report_json(changed));
    REQUIRE(d.size() == 1);
    CHECK(d[0].path.find("ratio") != std::string::npos);

    auto slower = rep;
    slower.runtime_seconds += 10;
    for (auto& r : slower.rows) r.runtime_seconds += 3;
    CHECK(diff_reports(a, report_json(slower)).empty());

    CHECK(kind_of([&] { diff_reports(a, R"({"schema": 9})"); }) == ErrorKind::SchemaError);
    CHECK(kind_of([&] { diff_reports(a, R"({"rows": []})"); }) == ErrorKind::SchemaError);
}

TEST_CASE("worker count honours the environment cap") {
    CHECK(worker_count(3) >= 1);
    CHECK(worker_count(3) <= 3);
}
