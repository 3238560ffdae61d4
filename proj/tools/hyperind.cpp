// hyperind command-line front end.
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hyperind/harness.hpp"
#include "hyperind/io.hpp"
#include "hyperind/structure.hpp"

using namespace hyperind;
using json = nlohmann::ordered_json;

namespace {

std::string read_text(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::InvalidArguments, "cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json opt_number(double v) {
    if (!std::isfinite(v)) return nullptr;
    return v;
}

int cmd_check(const std::string& path, const std::string& property, bool as_json) {
    const LayeredHypergraph h = read_hypergraph_file(path);
    json j;
    j["n"] = h.n();
    j["k"] = h.k();
    j["edges"] = h.num_edges();
    json layers = json::array();
    for (int i = 2; i <= h.k(); ++i) {
        if (h.layer(i).empty()) continue;
        json l;
        l["uniformity"] = i;
        l["edges"] = h.layer(i).size();
        l["max_degree"] = max_min_degree(h, i, 1).max;
        if (i >= 3) l["max_codegree"] = max_min_degree(h, i, i - 1).max;
        layers.push_back(l);
    }
    j["layers"] = layers;
    json twos = json::object();
    for (int ell = 2; ell < h.k(); ++ell) twos[std::to_string(ell)] = count_two_cycles(h, ell, 0).count;
    j["two_cycles"] = twos;
    j["linear_three_cycles"] = find_linear_three_cycles(h, 0).count;
    j["clean_four_cycles"] = find_clean_four_cycles(h, 0).count;
    const BouquetReport rep = check_bouquet(h);
    j["bouquet"] = rep.holds();
    json viol = json::array();
    for (const BouquetViolation& v : rep.violations) {
        json w = json::array();
        for (const Edge& e : v.witness) w.push_back(e.vertices());
        viol.push_back({{"property", to_string(v.property)}, {"witness", w}});
    }
    j["violations"] = viol;
    const std::size_t vprime = check_property_vprime(h).size();
    j["vprime_witnesses"] = vprime;
    bool clean = rep.holds();
    if (property == "cycles") {
        clean = j["linear_three_cycles"] == 0 && j["clean_four_cycles"] == 0;
        for (auto it = twos.begin(); it != twos.end(); ++it) clean = clean && it.value() == 0;
    } else if (property == "vprime") {
        clean = vprime == 0;
    }
    j["property"] = property;
    j["clean"] = clean;
    const int code = clean ? 0 : 1;
    if (as_json) {
        std::cout << j.dump(2) << "\n";
        return code;
    }
    std::cout << "n=" << h.n() << " k=" << h.k() << " edges=" << h.num_edges() << "\n";
    for (const json& l : layers) {
        std::cout << "layer " << l["uniformity"] << ": edges=" << l["edges"] << " max_degree=" << l["max_degree"];
        if (l.contains("max_codegree")) std::cout << " max_codegree=" << l["max_codegree"];
        std::cout << "\n";
    }
    for (auto it = twos.begin(); it != twos.end(); ++it)
        std::cout << "(2," << it.key() << ")-cycles: " << it.value() << "\n";
    std::cout << "linear 3-cycles: " << j["linear_three_cycles"] << "\n";
    std::cout << "clean 4-cycles: " << j["clean_four_cycles"] << "\n";
    std::cout << "bouquet: " << (rep.holds() ? "yes" : "no") << "\n";
    for (const BouquetViolation& v : rep.violations) {
        std::cout << "  property " << to_string(v.property) << ":";
        for (const Edge& e : v.witness) {
            std::cout << " {";
            for (std::size_t t = 0; t < e.size(); ++t) std::cout << (t ? "," : "") << e[t];
            std::cout << "}";
        }
        std::cout << "\n";
    }
    std::cout << "v' witnesses: " << vprime << "\n";
    return code;
}

int cmd_schedule(double N, double T, int k, bool strict, bool as_json) {
    const Schedule s = build_schedule(N, T, k, strict);
    const ScheduleCheck chk = check_schedule(s);
    json j;
    j["N"] = s.N;
    j["T"] = s.T;
    j["k"] = s.k;
    j["epsilon"] = s.epsilon;
    j["beta"] = s.beta;
    j["M"] = s.M;
    json rows = json::array();
    for (int m = 0; m <= s.M; ++m)
        rows.push_back({{"m", m},
                        {"alpha", s.alpha[m]},
                        {"gamma", s.gamma[m]},
                        {"t", s.t[m]},
                        {"p", s.p[m]},
                        {"n_lo", s.n_lo[m]},
                        {"n_hi", s.n_hi[m]}});
    j["rounds"] = rows;
    j["checks_ok"] = chk.ok;
    j["check_failures"] = chk.failures;
    j["warnings"] = s.warnings;
    j["main_bound"] = opt_number(reference_bound(N, T, k, BoundKind::Main));
    if (as_json) {
        std::cout << j.dump(2) << "\n";
        return chk.ok ? 0 : 1;
    }
    std::cout << "N=" << s.N << " T=" << s.T << " k=" << s.k << " eps=" << s.epsilon << " beta=" << s.beta
              << " M=" << s.M << "\n";
    std::cout << "m alpha gamma t p n_lo n_hi\n";
    for (int m = 0; m <= s.M; ++m)
        std::cout << m << " " << s.alpha[m] << " " << s.gamma[m] << " " << s.t[m] << " " << s.p[m] << " "
                  << s.n_lo[m] << " " << s.n_hi[m] << "\n";
    std::cout << "Main bound (N/T)(log T)^{1/(k-1)} = " << reference_bound(N, T, k, BoundKind::Main) << "\n";
    for (const std::string& w : s.warnings) std::cout << "warning: " << w << "\n";
    for (const std::string& f : chk.failures) std::cout << "check failed: " << f << "\n";
    return chk.ok ? 0 : 1;
}

int cmd_solve(const std::string& path, const SolveConfig& cfg, std::uint64_t seed, bool as_json,
              const std::string& cert_path) {
    const LayeredHypergraph h = read_hypergraph_file(path);
    const SolveOutcome out = solve(h, cfg, RngSpec{seed, "solve"});
    if (!cert_path.empty()) write_certificate_file(cert_path, out.set, out.verified);
    if (as_json) {
        json j;
        j["algorithm"] = to_string(cfg.algorithm);
        j["size"] = out.set.size();
        j["verified"] = out.verified;
        j["accepted"] = out.accepted;
        j["bound"] = to_string(out.bound);
        j["scale"] = out.scale;
        j["reference"] = opt_number(out.reference);
        j["ratio"] = opt_number(out.reference > 0 ? static_cast<double>(out.set.size()) / out.reference : NAN);
        j["set"] = out.set;
        json diag = json::object();
        for (const auto& [k, v] : out.diagnostics) diag[k] = opt_number(v);
        j["diagnostics"] = diag;
        j["warnings"] = out.warnings;
        json rounds = json::array();
        for (const RoundSummary& r : out.rounds)
            rounds.push_back({{"m", r.m}, {"n_before", r.n_before}, {"b", r.b}, {"nb", r.nb}, {"c", r.c},
                              {"d", r.d}, {"z", r.z}, {"w", r.w}, {"i", r.i}, {"n_after", r.n_after},
                              {"completion_edges", r.completion_edges}, {"attempts", r.attempts},
                              {"window_ok", r.window_ok}, {"i_ok", r.i_ok}, {"z_ok", r.z_ok}});
        j["rounds"] = rounds;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << to_string(cfg.algorithm) << ": |I|=" << out.set.size()
                  << " verified=" << (out.verified ? "true" : "false") << " " << to_string(out.bound)
                  << "=" << out.reference << "\n";
        for (const std::string& w : out.warnings) std::cout << "warning: " << w << "\n";
    }
    return out.verified ? 0 : 1;
}

int cmd_experiment(const std::string& path, const std::string& csv, const std::string& json_out) {
    ExperimentConfig c = load_experiment_config(path);
    if (!csv.empty()) c.csv_path = csv;
    if (!json_out.empty()) c.json_path = json_out;
    const ExperimentReport rep = run_experiment(c);
    std::cout << rep.algorithm << ": trials=" << rep.rows.size() << " failures=" << rep.failures
              << " median_ratio=" << rep.median_ratio << "\n";
    for (const TrialRow& r : rep.rows)
        if (!r.error.empty()) std::cout << "trial " << r.trial << ": " << r.error << "\n";
    return rep.ok() ? 0 : 1;
}

int cmd_diff(const std::string& a, const std::string& b) {
    const std::vector<DiffEntry> d = diff_reports(read_text(a), read_text(b));
    for (const DiffEntry& e : d) std::cout << e.path << ": " << e.left << " -> " << e.right << "\n";
    return d.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Independent sets in sparse hypergraphs"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "Generate an instance");
    std::string kind = "gnp", out_path;
    GenSpec spec;
    double p = NAN, t = NAN;
    gen->add_option("--kind", kind, "gnp|girth5|cliques|bouquet")->check(CLI::IsMember({"gnp", "girth5", "cliques", "bouquet"}));
    gen->add_option("--n", spec.n)->required();
    gen->add_option("--k", spec.k)->required();
    gen->add_option("--p", p, "edge probability");
    gen->add_option("--t", t, "sets p = (t/n)^(k-1)");
    gen->add_option("--s", spec.s, "clique size");
    gen->add_option("--T", spec.T, "degree scale for bouquet");
    gen->add_option("--density", spec.density, "fraction of the bouquet caps");
    gen->add_option("--seed", spec.seed);
    gen->add_option("-o,--output", out_path)->required();

    // check
    auto* check = app.add_subcommand("check", "Report structure of a hypergraph file");
    std::string check_path, check_property = "bouquet";
    bool check_json = false;
    check->add_option("file", check_path)->required();
    check->add_option("--property", check_property, "exit status reflects this property")
        ->check(CLI::IsMember({"bouquet", "cycles", "vprime"}));
    check->add_flag("--json", check_json);

    // schedule
    auto* sched = app.add_subcommand("schedule", "Print the nibble schedule");
    double sN = 0, sT = 0;
    int sk = 3;
    bool s_strict = false, s_json = false;
    sched->add_option("--N", sN)->required();
    sched->add_option("--T", sT)->required();
    sched->add_option("--k", sk)->required();
    sched->add_flag("--strict", s_strict);
    sched->add_flag("--json", s_json);

    // solve
    auto* sol = app.add_subcommand("solve", "Find an independent set");
    std::string solve_path, algo = "greedy", cert_path, order = "min_degree";
    SolveConfig cfg;
    double sd = NAN, st = NAN, sTT = NAN, sdelta = NAN, sbeta = NAN;
    std::uint64_t seed = 0;
    bool solve_json = false;
    sol->add_option("file", solve_path)->required();
    sol->add_option("--algo", algo)->check(CLI::IsMember({"spencer", "greedy", "akpss", "pkm2", "appA", "appB"}));
    sol->add_option("--d", sd, "degree scale for pkm2 and appA");
    sol->add_option("--t", st, "degree scale for appB");
    sol->add_option("--T", sTT, "schedule scale for akpss");
    sol->add_option("--epsilon", cfg.epsilon);
    sol->add_option("--delta", sdelta);
    sol->add_option("--beta", sbeta);
    sol->add_option("--case", cfg.appendix_case)->check(CLI::IsMember({1, 2}));
    sol->add_option("--retries", cfg.retries)->check(CLI::PositiveNumber);
    sol->add_option("--greedy-order", order)->check(CLI::IsMember({"min_degree", "random"}));
    sol->add_flag("--strict", cfg.strict);
    sol->add_option("--seed", seed);
    sol->add_flag("--json", solve_json);
    sol->add_option("--cert", cert_path, "write a certificate file");

    // experiment
    auto* exp = app.add_subcommand("experiment", "Run a configured batch of trials");
    std::string exp_path, exp_csv, exp_json;
    exp->add_option("config", exp_path)->required();
    exp->add_option("--csv", exp_csv);
    exp->add_option("--json", exp_json);

    // diff
    auto* dif = app.add_subcommand("diff", "Compare two JSON reports");
    std::string da, db;
    dif->add_option("left", da)->required();
    dif->add_option("right", db)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*gen) {
            spec.kind = gen_kind_from_string(kind);
            if (!std::isnan(p)) spec.p = p;
            if (!std::isnan(t)) spec.t = t;
            const Generated g = generate(spec);
            write_hypergraph_file(out_path, g.graph);
            std::cout << "n=" << g.graph.n() << " edges=" << g.graph.num_edges();
            for (const auto& [k, v] : g.stats) std::cout << " " << k << "=" << v;
            std::cout << "\n";
            for (const std::string& w : g.warnings) std::cout << "warning: " << w << "\n";
            return 0;
        }
        if (*check) return cmd_check(check_path, check_property, check_json);
        if (*sched) return cmd_schedule(sN, sT, sk, s_strict, s_json);
        if (*sol) {
            cfg.algorithm = algorithm_from_string(algo);
            if (!std::isnan(sd)) cfg.d = sd;
            if (!std::isnan(st)) cfg.t = st;
            if (!std::isnan(sTT)) cfg.T = sTT;
            if (!std::isnan(sdelta)) cfg.delta = sdelta;
            if (!std::isnan(sbeta)) cfg.beta = sbeta;
            cfg.greedy_order = order == "random" ? GreedyOrder::Random : GreedyOrder::MinDegree;
            return cmd_solve(solve_path, cfg, seed, solve_json, cert_path);
        }
        if (*exp) return cmd_experiment(exp_path, exp_csv, exp_json);
        if (*dif) return cmd_diff(da, db);
    } catch (const Error& e) {
        std::cerr << "error: " << to_string(e.kind()) << ": " << e.what();
        if (e.line()) std::cerr << " (line " << *e.line() << ")";
        std::cerr << "\n";
        return 2;
    }
    return 0;
}
