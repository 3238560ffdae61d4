#include "hyperind/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "hyperind/io.hpp"

namespace hyperind {

using json = nlohmann::ordered_json;

namespace {

constexpr double nan = std::numeric_limits<double>::quiet_NaN();

std::string num(double v) {
    if (std::isnan(v)) return "nan";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

json num_json(double v) {
    if (!std::isfinite(v)) return nullptr;
    return v;
}

int bound_k(const LayeredHypergraph& h) { return h.top_layer() > 0 ? h.top_layer() : h.k(); }

BoundKind default_bound(Algorithm a) {
    switch (a) {
        case Algorithm::Spencer:
        case Algorithm::Greedy: return BoundKind::Spencer;
        case Algorithm::KMinus2: return BoundKind::LogLog;
        case Algorithm::AppendixA: return BoundKind::Log;
        case Algorithm::Akpss:
        case Algorithm::AppendixB: return BoundKind::Main;
    }
    return BoundKind::Spencer;
}

void absorb(SolveOutcome& out, const PipelineResult& r) {
    out.set = r.set;
    out.verified = r.verified;
    out.accepted = r.accepted;
    out.warnings = r.warnings;
    out.diagnostics = r.diagnostics;
    out.diagnostics["sample_size"] = static_cast<double>(r.sample_size);
    out.diagnostics["residue"] = static_cast<double>(r.residue.size());
    out.diagnostics["attempts"] = static_cast<double>(r.attempts);
    if (r.akpss) out.rounds = r.akpss->rounds;
}

PipelineOptions pipeline_options(const SolveConfig& c) {
    PipelineOptions o;
    o.strict = c.strict;
    o.retries = c.retries;
    o.epsilon = c.epsilon;
    o.appendix_case = c.appendix_case;
    o.delta = c.delta;
    o.beta = c.beta;
    o.akpss.retries_per_round = c.retries;
    return o;
}

}  // namespace

const char* to_string(Algorithm a) {
    switch (a) {
        case Algorithm::Spencer: return "spencer";
        case Algorithm::Greedy: return "greedy";
        case Algorithm::Akpss: return "akpss";
        case Algorithm::KMinus2: return "pkm2";
        case Algorithm::AppendixA: return "appA";
        case Algorithm::AppendixB: return "appB";
    }
    return "?";
}

Algorithm algorithm_from_string(const std::string& s) {
    if (s == "spencer") return Algorithm::Spencer;
    if (s == "greedy") return Algorithm::Greedy;
    if (s == "akpss") return Algorithm::Akpss;
    if (s == "pkm2") return Algorithm::KMinus2;
    if (s == "appA") return Algorithm::AppendixA;
    if (s == "appB") return Algorithm::AppendixB;
    throw Error(ErrorKind::InvalidArguments, "unknown algorithm '" + s + "'");
}

double default_d(const LayeredHypergraph& h) {
    const int k = h.k();
    std::size_t top = 0;
    if (k >= 3 && !h.layer(k).empty()) top = max_min_degree(h, k, k - 2).max;
    const double n = std::max<double>(1.0, static_cast<double>(h.n()));
    return static_cast<double>(std::max<std::size_t>(top, 1)) / n;
}

double default_t(const LayeredHypergraph& h) {
    const int k = bound_k(h);
    double t = std::exp(2.0);
    if (!h.layer(k).empty()) {
        const double d1 = static_cast<double>(max_min_degree(h, k, 1).max);
        t = std::max(t, std::pow(d1, 1.0 / (k - 1)));
    }
    return t;
}

SolveOutcome solve(const LayeredHypergraph& h, const SolveConfig& c, const RngSpec& rng) {
    SolveOutcome out;
    out.bound = c.bound ? *c.bound : default_bound(c.algorithm);
    switch (c.algorithm) {
        case Algorithm::Spencer: {
            Rng r(rng.child("spencer"));
            SpencerResult s = spencer_set(h, r);
            out.set = std::move(s.set);
            out.diagnostics["s"] = static_cast<double>(s.s);
            out.diagnostics["spanned_min"] = static_cast<double>(s.spanned_min);
            break;
        }
        case Algorithm::Greedy: {
            Rng r(rng.child("greedy"));
            out.set = greedy_set(h, r, c.greedy_order);
            break;
        }
        case Algorithm::Akpss: {
            const double T = c.T ? *c.T : default_t(h);
            out.diagnostics["T"] = T;
            if (h.n() < 2) {
                out.set.resize(h.n());
                for (VertexId x = 0; x < h.n(); ++x) out.set[x] = x;
                break;
            }
            const Schedule s = build_schedule(static_cast<double>(h.n()), T, h.k(), c.strict);
            RunOptions run;
            run.retries_per_round = c.retries;
            RunCertificate cert = akpss_run(h, s, rng.child("akpss"), run);
            out.set = std::move(cert.set);
            out.rounds = std::move(cert.rounds);
            out.warnings = std::move(cert.warnings);
            out.diagnostics["rounds"] = static_cast<double>(s.M);
            out.diagnostics["final_vertices"] = static_cast<double>(cert.final_vertices);
            break;
        }
        case Algorithm::KMinus2:
            absorb(out, pipeline_kminus2(h, c.d ? *c.d : default_d(h), rng, pipeline_options(c)));
            break;
        case Algorithm::AppendixA:
            absorb(out, pipeline_appendixA(h, c.d ? *c.d : default_d(h), rng, pipeline_options(c)));
            break;
        case Algorithm::AppendixB:
            absorb(out, pipeline_appendixB(h, c.t ? *c.t : default_t(h), rng, pipeline_options(c)));
            break;
    }
    const IndependenceResult check = is_independent(h, out.set);
    out.verified = check.independent;

    const double n = static_cast<double>(h.n());
    const int k = bound_k(h);
    switch (out.bound) {
        case BoundKind::Spencer:
            out.scale = n > 0 ? k * static_cast<double>(h.num_edges()) / n : 0.0;
            break;
        case BoundKind::LogLog:
        case BoundKind::Log: out.scale = c.d ? *c.d : default_d(h); break;
        case BoundKind::Main:
            out.scale = c.algorithm == Algorithm::AppendixB ? (c.t ? *c.t : default_t(h))
                                                            : (c.T ? *c.T : default_t(h));
            break;
    }
    if (h.num_edges() == 0) {
        out.reference = n;
    } else {
        try {
            out.reference = reference_bound(n, out.scale, k, out.bound);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::OutOfDomain) throw;
            out.reference = nan;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Config

namespace {

template <class T>
std::optional<T> opt_field(const json& j, const char* key) {
    if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
    return j.at(key).get<T>();
}

GenSpec parse_generator(const json& g) {
    GenSpec spec;
    spec.kind = gen_kind_from_string(g.at("kind").get<std::string>());
    spec.n = g.at("n").get<std::size_t>();
    spec.k = g.value("k", 3);
    spec.p = opt_field<double>(g, "p");
    spec.t = opt_field<double>(g, "t");
    spec.s = g.value("s", std::size_t{0});
    spec.T = g.value("T", 0.0);
    spec.density = g.value("density", 1.0);
    return spec;
}

}  // namespace

ExperimentConfig parse_experiment_config(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw Error(ErrorKind::ParseError, std::string("config: ") + e.what());
    }
    try {
        if (j.contains("schema") && j.at("schema").get<int>() != report_schema_version)
            throw Error(ErrorKind::SchemaError, "config schema " + j.at("schema").dump() + " is not supported");
        ExperimentConfig c;
        if (j.contains("generator")) c.generator = parse_generator(j.at("generator"));
        c.input = opt_field<std::string>(j, "input");
        if (c.generator.has_value() == c.input.has_value())
            throw Error(ErrorKind::InvalidArguments, "config needs exactly one of generator and input");
        c.solve.algorithm = algorithm_from_string(j.at("algorithm").get<std::string>());
        const json params = j.value("params", json::object());
        c.solve.d = opt_field<double>(params, "d");
        c.solve.t = opt_field<double>(params, "t");
        c.solve.T = opt_field<double>(params, "T");
        c.solve.epsilon = params.value("epsilon", 0.0);
        c.solve.delta = opt_field<double>(params, "delta");
        c.solve.beta = opt_field<double>(params, "beta");
        c.solve.appendix_case = params.value("case", 1);
        c.solve.retries = params.value("retries", 16);
        const std::string order = params.value("greedy", std::string("min_degree"));
        if (order == "random") c.solve.greedy_order = GreedyOrder::Random;
        else if (order != "min_degree") throw Error(ErrorKind::InvalidArguments, "unknown greedy order '" + order + "'");
        if (auto b = opt_field<std::string>(j, "bound")) c.solve.bound = bound_kind_from_string(*b);
        c.solve.strict = j.value("strict", false);
        c.trials = j.value("trials", 1);
        c.seed = j.value("seed", std::uint64_t{0});
        c.csv_path = j.value("csv", std::string());
        c.json_path = j.value("json", std::string());
        c.threads = j.value("threads", 0);
        if (c.trials < 1) throw Error(ErrorKind::InvalidArguments, "trials must be at least 1");
        return c;
    } catch (const json::exception& e) {
        throw Error(ErrorKind::InvalidArguments, std::string("config: ") + e.what());
    }
}

ExperimentConfig load_experiment_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::InvalidArguments, "cannot open config '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_experiment_config(ss.str());
}

unsigned worker_count(int requested) {
    unsigned n = requested > 0 ? static_cast<unsigned>(requested) : std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("HYPERIND_THREADS")) {
        const long cap = std::strtol(env, nullptr, 10);
        if (cap >= 1) n = std::min(n, static_cast<unsigned>(cap));
    }
    return n;
}

// ---------------------------------------------------------------------------
// Running

namespace {

TrialRow run_trial(const ExperimentConfig& c, const LayeredHypergraph* fixed, int index) {
    TrialRow row;
    row.trial = index;
    const RngSpec stream = RngSpec{c.seed, ""}.child("trial", static_cast<std::uint64_t>(index));
    const auto start = std::chrono::steady_clock::now();
    try {
        Generated gen;
        const LayeredHypergraph* h = fixed;
        if (!h) {
            gen = generate(*c.generator, stream.child("gen"));
            h = &gen.graph;
        }
        row.n = h->n();
        row.k = h->k();
        row.edges = h->num_edges();
        SolveOutcome out = solve(*h, c.solve, stream);
        row.size = out.set.size();
        row.reference = out.reference;
        row.ratio = std::isfinite(out.reference) && out.reference > 0.0
                        ? static_cast<double>(row.size) / out.reference
                        : nan;
        row.verified = out.verified;
        row.accepted = out.accepted;
        row.rounds = out.rounds.size();
        std::size_t in_window = 0;
        for (const RoundSummary& r : out.rounds) {
            row.good_rounds += r.good();
            in_window += r.window_ok;
        }
        row.window_fraction = out.rounds.empty() ? nan : static_cast<double>(in_window) / out.rounds.size();
        row.warnings = out.warnings.size() + gen.warnings.size();
        for (const std::string& w : out.warnings)
            if (w.find("outside [(log N)^3") != std::string::npos) row.regime_warning = true;
        row.round_log = std::move(out.rounds);
    } catch (const Error& e) {
        row.error = std::string(to_string(e.kind())) + ": " + e.what();
        row.reference = nan;
        row.ratio = nan;
        row.window_fraction = nan;
    }
    row.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return row;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
    if (!out) throw Error(ErrorKind::InvalidArguments, "cannot write '" + path + "'");
}

}  // namespace

ExperimentReport run_experiment(const ExperimentConfig& c) {
    if (c.trials < 1) throw Error(ErrorKind::InvalidArguments, "trials must be at least 1");
    const auto start = std::chrono::steady_clock::now();
    std::optional<LayeredHypergraph> fixed;
    if (c.input) fixed = read_hypergraph_file(*c.input);

    ExperimentReport rep;
    rep.algorithm = to_string(c.solve.algorithm);
    rep.bound = to_string(c.solve.bound ? *c.solve.bound : default_bound(c.solve.algorithm));
    rep.rows.resize(static_cast<std::size_t>(c.trials));
    std::atomic<int> next{0};
    auto worker = [&] {
        for (int i = next++; i < c.trials; i = next++)
            rep.rows[static_cast<std::size_t>(i)] = run_trial(c, fixed ? &*fixed : nullptr, i);
    };
    const unsigned workers = std::min<unsigned>(worker_count(c.threads), static_cast<unsigned>(c.trials));
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(worker);
    worker();
    for (std::thread& t : pool) t.join();

    std::vector<double> ratios;
    for (const TrialRow& r : rep.rows) {
        if (!r.verified) ++rep.failures;
        if (std::isfinite(r.ratio)) ratios.push_back(r.ratio);
    }
    if (ratios.empty()) {
        rep.min_ratio = rep.median_ratio = rep.mean_ratio = nan;
    } else {
        std::sort(ratios.begin(), ratios.end());
        rep.min_ratio = ratios.front();
        const std::size_t h = ratios.size() / 2;
        rep.median_ratio = ratios.size() % 2 ? ratios[h] : 0.5 * (ratios[h - 1] + ratios[h]);
        double sum = 0.0;
        for (double r : ratios) sum += r;
        rep.mean_ratio = sum / static_cast<double>(ratios.size());
    }
    rep.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!c.csv_path.empty()) write_file(c.csv_path, report_csv(rep));
    if (!c.json_path.empty()) write_file(c.json_path, report_json(rep));
    return rep;
}

std::string report_csv(const ExperimentReport& rep) {
    std::ostringstream out;
    out << "trial,n,k,edges,algorithm,bound,size,reference,ratio,verified,accepted,rounds,good_rounds,"
           "window_fraction,warnings,regime_warning,error\n";
    for (const TrialRow& r : rep.rows) {
        std::string err = r.error;
        std::replace(err.begin(), err.end(), '"', '\'');
        out << r.trial << ',' << r.n << ',' << r.k << ',' << r.edges << ',' << rep.algorithm << ',' << rep.bound
            << ',' << r.size << ',' << num(r.reference) << ',' << num(r.ratio) << ',' << (r.verified ? 1 : 0)
            << ',' << (r.accepted ? 1 : 0) << ',' << r.rounds << ',' << r.good_rounds << ','
            << num(r.window_fraction) << ',' << r.warnings << ',' << (r.regime_warning ? 1 : 0) << ",\"" << err
            << "\"\n";
    }
    return out.str();
}

std::string report_json(const ExperimentReport& rep) {
    json j;
    j["schema"] = report_schema_version;
    j["algorithm"] = rep.algorithm;
    j["bound"] = rep.bound;
    j["trials"] = rep.rows.size();
    j["failures"] = rep.failures;
    j["min_ratio"] = num_json(rep.min_ratio);
    j["median_ratio"] = num_json(rep.median_ratio);
    j["mean_ratio"] = num_json(rep.mean_ratio);
    j["runtime_seconds"] = rep.runtime_seconds;
    json rows = json::array();
    for (const TrialRow& r : rep.rows) {
        json row;
        row["trial"] = r.trial;
        row["n"] = r.n;
        row["k"] = r.k;
        row["edges"] = r.edges;
        row["size"] = r.size;
        row["reference"] = num_json(r.reference);
        row["ratio"] = num_json(r.ratio);
        row["verified"] = r.verified;
        row["accepted"] = r.accepted;
        row["warnings"] = r.warnings;
        row["regime_warning"] = r.regime_warning;
        row["error"] = r.error;
        row["runtime_seconds"] = r.runtime_seconds;
        json rounds = json::array();
        for (const RoundSummary& s : r.round_log)
            rounds.push_back({{"m", s.m},
                              {"n_before", s.n_before},
                              {"c", s.c},
                              {"d", s.d},
                              {"b", s.b},
                              {"z", s.z},
                              {"w", s.w},
                              {"i", s.i},
                              {"n_after", s.n_after},
                              {"attempts", s.attempts},
                              {"window_ok", s.window_ok},
                              {"i_ok", s.i_ok},
                              {"z_ok", s.z_ok}});
        row["rounds"] = std::move(rounds);
        rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    return j.dump(2) + "\n";
}

namespace {

void diff_value(const json& a, const json& b, const std::string& path, std::vector<DiffEntry>& out) {
    if (a.is_object() && b.is_object()) {
        for (auto it = a.begin(); it != a.end(); ++it) {
            if (it.key().rfind("runtime", 0) == 0) continue;
            const std::string sub = path + "/" + it.key();
            if (!b.contains(it.key())) out.push_back({sub, it.value().dump(), "<missing>"});
            else diff_value(it.value(), b.at(it.key()), sub, out);
        }
        for (auto it = b.begin(); it != b.end(); ++it)
            if (it.key().rfind("runtime", 0) != 0 && !a.contains(it.key()))
                out.push_back({path + "/" + it.key(), "<missing>", it.value().dump()});
        return;
    }
    if (a.is_array() && b.is_array()) {
        const std::size_t common = std::min(a.size(), b.size());
        for (std::size_t i = 0; i < common; ++i) diff_value(a[i], b[i], path + "/" + std::to_string(i), out);
        for (std::size_t i = common; i < a.size(); ++i)
            out.push_back({path + "/" + std::to_string(i), a[i].dump(), "<missing>"});
        for (std::size_t i = common; i < b.size(); ++i)
            out.push_back({path + "/" + std::to_string(i), "<missing>", b[i].dump()});
        return;
    }
    if (a != b) out.push_back({path.empty() ? "/" : path, a.dump(), b.dump()});
}

json parse_report(const std::string& text, const char* side) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw Error(ErrorKind::SchemaError, std::string(side) + " report is not JSON: " + e.what());
    }
}

}  // namespace

std::vector<DiffEntry> diff_reports(const std::string& left_json, const std::string& right_json) {
    const json a = parse_report(left_json, "left");
    const json b = parse_report(right_json, "right");
    if (!a.is_object() || !b.is_object() || !a.contains("schema") || !b.contains("schema"))
        throw Error(ErrorKind::SchemaError, "report without a schema version");
    if (a.at("schema") != b.at("schema"))
        throw Error(ErrorKind::SchemaError,
                    "schema versions differ: " + a.at("schema").dump() + " vs " + b.at("schema").dump());
    std::vector<DiffEntry> out;
    diff_value(a, b, "", out);
    return out;
}

}  // namespace hyperind
