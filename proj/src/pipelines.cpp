#include <algorithm>
#include <cmath>
#include <sstream>
#include <unordered_map>

#include "hyperind/algorithms.hpp"
#include "hyperind/structure.hpp"

namespace hyperind {

namespace {

using SetDegrees = std::unordered_map<Edge, std::size_t, EdgeHash>;

int require_uniform(const LayeredHypergraph& h, const char* name) {
    const int k = h.k();
    if (k < 4) throw Error(ErrorKind::InvalidArguments, std::string(name) + " needs k >= 4");
    for (int i = 2; i < k; ++i)
        if (!h.layer(i).empty())
            throw Error(ErrorKind::InvalidArguments, std::string(name) + " needs a k-uniform input");
    return k;
}

SetDegrees sub_degrees(const LayeredHypergraph& h, int layer, std::size_t r) {
    SetDegrees out;
    for (const Edge& e : h.layer(layer))
        for_each_subset(e.vertices(), r, [&](const std::vector<VertexId>& s) { ++out[Edge::from_sorted(s)]; });
    return out;
}

void note(PipelineResult& res, bool strict, const std::string& msg) {
    if (strict) throw Error(ErrorKind::PreconditionFailed, msg);
    res.warnings.push_back(msg);
}

void check_kminus2_degree(const LayeredHypergraph& h, int k, double d) {
    if (h.layer(k).empty()) return;
    const double top = static_cast<double>(max_min_degree(h, k, k - 2).max);
    if (top > d * static_cast<double>(h.n())) {
        std::ostringstream msg;
        msg << "Delta_" << k - 2 << "(H)=" << top << " exceeds d*n=" << d * static_cast<double>(h.n());
        throw Error(ErrorKind::PreconditionFailed, msg.str());
    }
}

VertexSet map_up(const VertexSet& local, const VertexSet& parent) {
    VertexSet out;
    out.reserve(local.size());
    for (VertexId x : local) out.push_back(parent[x]);
    return out;
}

// Keeps exactly `target` vertices of `alive`, chosen uniformly.
VertexSet trim(const VertexSet& alive, std::size_t target, Rng& rng) {
    if (alive.size() <= target) return alive;
    VertexSet out;
    for (VertexId pos : rng.sample_subset(alive.size(), target)) out.push_back(alive[pos]);
    return out;
}

// Drops vertices of `u` (ids of h) whose degree in the chosen layer of h[u]
// exceeds the per-layer limit.
VertexSet drop_heavy(const LayeredHypergraph& h, const VertexSet& u,
                     const std::function<bool(int layer, std::size_t deg, VertexId x)>& too_heavy, std::size_t& removed) {
    const Induced hu = induce(h, u);
    VertexSet keep;
    removed = 0;
    for (VertexId x = 0; x < hu.graph.n(); ++x) {
        bool heavy = false;
        for (int i = 2; i <= h.k() && !heavy; ++i) {
            if (hu.graph.layer(i).empty()) continue;
            std::size_t deg = 0;
            for (EdgeRef r : hu.graph.incident(x)) deg += (r.layer == i);
            heavy = too_heavy(i, deg, hu.to_parent[x]);
        }
        if (heavy) ++removed;
        else keep.push_back(hu.to_parent[x]);
    }
    return keep;
}

std::size_t max_layer_degree(const LayeredHypergraph& h, int layer, std::size_t ell) {
    if (layer > h.k() || h.layer(layer).empty()) return 0;
    return max_min_degree(h, layer, static_cast<int>(ell)).max;
}

void finish(PipelineResult& res, const LayeredHypergraph& h, VertexSet set) {
    res.set = make_vertex_set(std::move(set));
    const IndependenceResult check = is_independent(h, res.set);
    if (!check.independent)
        throw Error(ErrorKind::Internal, "pipeline output is not independent",
                    std::vector<std::vector<VertexId>>{check.witness->vertices()});
    res.verified = true;
}

// Spencer on the whole input when the degree scale leaves no room to sample.
void spencer_fallback(PipelineResult& res, const LayeredHypergraph& h, const RngSpec& spec) {
    res.warnings.push_back("sample target below one vertex; using the averaging bound on all of H");
    Rng rng(spec.child("spencer"));
    SpencerResult sp = spencer_set(h, rng);
    res.residue.resize(h.n());
    for (VertexId x = 0; x < h.n(); ++x) res.residue[x] = x;
    res.residue_graph = h;
    finish(res, h, std::move(sp.set));
}

// Runs the nibble on the residue and maps the result back to input ids.
void nibble_on_residue(PipelineResult& res, const LayeredHypergraph& h, double T, const RngSpec& spec,
                       const PipelineOptions& opt) {
    const LayeredHypergraph& g = res.residue_graph;
    res.diagnostics["T"] = T;
    res.diagnostics["N"] = static_cast<double>(g.n());
    if (g.num_edges() == 0 || g.n() < 2) {
        res.warnings.push_back("residue has no edges; returning it whole");
        finish(res, h, res.residue);
        return;
    }
    const Schedule s = build_schedule(static_cast<double>(g.n()), T, g.k(), opt.strict);
    RunOptions run = opt.akpss;
    run.verify_input = false;  // the residue was certified already
    RunCertificate cert = akpss_run(g, s, spec.child("akpss"), run);
    res.diagnostics["rounds"] = static_cast<double>(s.M);
    for (const std::string& w : cert.warnings) res.warnings.push_back(w);
    VertexSet set = map_up(cert.set, res.residue);
    res.akpss = std::move(cert);
    finish(res, h, std::move(set));
}

std::vector<std::vector<VertexId>> as_witness(const std::vector<Edge>& edges) {
    std::vector<std::vector<VertexId>> out;
    for (const Edge& e : edges) out.push_back(e.vertices());
    return out;
}

}  // namespace

PipelineResult pipeline_kminus2(const LayeredHypergraph& h, double d, const RngSpec& spec,
                                const PipelineOptions& opt) {
    const int k = require_uniform(h, "pipeline_kminus2");
    const double n = static_cast<double>(h.n());
    if (!(d > 0.0) || !(n / d > 1.0)) throw Error(ErrorKind::OutOfDomain, "pipeline_kminus2 needs n/d > 1");
    if (opt.retries < 1) throw Error(ErrorKind::InvalidArguments, "retries must be positive");
    check_kminus2_degree(h, k, d);

    PipelineResult res;
    const double beta = opt.beta ? *opt.beta : (3.0 * k - 2.0) / (4.0 * k - 4.0);
    const double beta_lo = k / (2.0 * k - 2.0);
    if (!(beta > beta_lo && beta < 1.0)) throw Error(ErrorKind::InvalidArguments, "beta outside (k/(2k-2), 1)");
    double p = std::pow(n, -(2.0 * k - 5.0) / (2.0 * k - 3.0)) * std::pow(d, -2.0 / (2.0 * k - 3.0));
    if (p > 1.0) {
        res.warnings.push_back("sampling probability above 1; clamped");
        p = 1.0;
    }
    const double M = std::pow(n / d, 2.0 / (2.0 * k - 3.0));
    const std::size_t m = static_cast<std::size_t>(std::floor(M / 9.0));
    const double heavy = 3.0 * k * std::sqrt(M);
    res.diagnostics["p"] = p;
    res.diagnostics["M"] = M;
    res.diagnostics["m"] = static_cast<double>(m);
    res.diagnostics["beta"] = beta;
    if (m == 0) {
        spencer_fallback(res, h, spec);
        return res;
    }

    VertexSet best;
    std::size_t best_sample = 0, best_heavy = 0;
    for (int a = 0; a < opt.retries; ++a) {
        Rng rng(spec.child("sample", static_cast<std::uint64_t>(a)));
        const VertexSet u = rng.bernoulli_subset(h.n(), p);
        std::size_t removed = 0;
        const VertexSet light = drop_heavy(
            h, u, [&](int, std::size_t deg, VertexId) { return static_cast<double>(deg) >= heavy; }, removed);
        const Induced hl = induce(h, light);
        const VertexSet clean = map_up(delete_short_cycles(hl.graph, {k - 2, false, false}), hl.to_parent);
        res.attempts = a + 1;
        if (a == 0 || clean.size() > best.size()) {
            best = clean;
            best_sample = u.size();
            best_heavy = removed;
        }
        if (clean.size() >= m) {
            Rng tr(spec.child("trim", static_cast<std::uint64_t>(a)));
            best = trim(clean, m, tr);
            best_sample = u.size();
            best_heavy = removed;
            res.accepted = true;
            break;
        }
    }
    if (!res.accepted)
        res.warnings.push_back("no sample reached m vertices after deletion; kept the largest residue");
    res.sample_size = best_sample;
    res.diagnostics["heavy_removed"] = static_cast<double>(best_heavy);
    res.residue = best;
    res.residue_graph = induce(h, best).graph;
    const LayeredHypergraph& r = res.residue_graph;
    const double mr = static_cast<double>(r.n());

    // Heavy (k-1)-sets and the edges avoiding them.
    const double thr = mr >= 2.0 ? std::pow(mr, 1.0 / (2.0 * k - 2.0)) / std::pow(std::log(mr), beta)
                                 : std::numeric_limits<double>::infinity();
    const SetDegrees codeg = sub_degrees(r, k, static_cast<std::size_t>(k - 1));
    LayeredHypergraph split(r.n(), k);
    std::vector<Edge> g1;
    for (const auto& [s, deg] : codeg)
        if (static_cast<double>(deg) >= thr) g1.push_back(s);
    std::sort(g1.begin(), g1.end());
    for (const Edge& s : g1) split.add_edge(s);
    LayeredHypergraph g2(r.n(), k);
    for (const Edge& e : r.layer(k)) {
        bool avoids = true;
        for_each_subset(e.vertices(), static_cast<std::size_t>(k - 1), [&](const std::vector<VertexId>& s) {
            if (avoids && split.contains(Edge::from_sorted(s))) avoids = false;
        });
        if (avoids) {
            g2.add_edge(e);
            split.add_edge(e);
        }
    }

    // Hypotheses of the external extraction theorem, reported only.
    const double c = 9.0 * k;
    const double logm = mr >= 2.0 ? std::log(mr) : 0.0;
    const double D = c * (k - 1) * std::pow(mr, (k - 2.0) / (2.0 * k - 2.0)) * std::pow(logm, beta);
    const double dd = c * std::sqrt(mr);
    const double eps = 0.5 * std::min((k - 2.0) / (2.0 * k - 2.0), 1.0 / (k - 2.0));
    const double omega = logm > 0.0 ? dd * std::pow(logm / D, (k - 1.0) / (k - 2.0)) : 0.0;
    LayeredHypergraph g1_only(r.n(), k);
    for (const Edge& s : g1) g1_only.add_edge(s);
    const double delta_g1 = static_cast<double>(max_layer_degree(g1_only, k - 1, 1));
    const double gamma_g1 = g1.empty() ? 0.0 : static_cast<double>(common_neighbor_max(g1_only, k - 1));
    const double delta_g2 = static_cast<double>(max_layer_degree(g2, k, static_cast<std::size_t>(k - 1)));
    bool ii = delta_g1 <= D && gamma_g1 < std::pow(D, 1.0 - eps);
    for (int i = 2; i <= k - 2; ++i) {
        const double di = static_cast<double>(max_layer_degree(g1_only, k - 1, static_cast<std::size_t>(i)));
        res.diagnostics["Delta_" + std::to_string(i) + "_G1"] = di;
        ii = ii && di < std::pow(D, (k - 1.0 - i) / (k - 2.0) - eps);
    }
    bool iii = static_cast<double>(k) * static_cast<double>(g2.num_edges()) <= dd * mr;
    for (int i = 2; i <= k - 1; ++i) {
        const double cycles = static_cast<double>(count_two_cycles(g2, i, 0).count);
        res.diagnostics["C_G2_2_" + std::to_string(i)] = cycles;
        if (i <= k - 2) iii = iii && cycles == 0.0;
        else
            res.diagnostics["C_G2_2_" + std::to_string(i) + "_scale"] =
                logm > 0.0 ? mr * std::pow(D / logm, (2.0 * k - i - 1.0) / (k - 2.0)) : 0.0;
    }
    res.diagnostics["threshold_G1"] = thr;
    res.diagnostics["D"] = D;
    res.diagnostics["omega"] = omega;
    res.diagnostics["Delta_G1"] = delta_g1;
    res.diagnostics["Gamma_G1"] = gamma_g1;
    res.diagnostics["Delta_k-1_G2"] = delta_g2;
    res.diagnostics["G1_edges"] = static_cast<double>(g1.size());
    res.diagnostics["G2_edges"] = static_cast<double>(g2.num_edges());
    res.diagnostics["hyp_i"] = (D > std::pow(mr, eps) && omega > 1.0) ? 1.0 : 0.0;
    res.diagnostics["hyp_ii"] = ii ? 1.0 : 0.0;
    res.diagnostics["hyp_iii"] = iii ? 1.0 : 0.0;

    Rng greedy(spec.child("greedy"));
    finish(res, h, map_up(greedy_set(split, greedy, GreedyOrder::MinDegree), res.residue));
    return res;
}

PipelineResult pipeline_appendixA(const LayeredHypergraph& h, double d, const RngSpec& spec,
                                  const PipelineOptions& opt) {
    const int k = require_uniform(h, "pipeline_appendixA");
    const double n = static_cast<double>(h.n());
    if (!(d > 0.0) || !(n / d > 1.0)) throw Error(ErrorKind::OutOfDomain, "pipeline_appendixA needs n/d > 1");
    if (opt.appendix_case != 1 && opt.appendix_case != 2)
        throw Error(ErrorKind::InvalidArguments, "appendix_case must be 1 or 2");
    if (opt.retries < 1) throw Error(ErrorKind::InvalidArguments, "retries must be positive");
    check_kminus2_degree(h, k, d);

    PipelineResult res;
    const double ratio = n / d;
    const double heavy = std::pow(n, (k - 2.0) / (k - 1.0)) * std::pow(d, 1.0 / (k - 1.0));
    const SetDegrees codeg = sub_degrees(h, k, static_cast<std::size_t>(k - 1));
    double below = 0.0;  // largest (k-1)-degree under the heavy threshold
    for (const auto& [s, deg] : codeg)
        if (static_cast<double>(deg) < heavy) below = std::max(below, static_cast<double>(deg));

    double delta = 0.0;
    if (opt.appendix_case == 1) {
        const double cap = 1.0 / (4.0 * k);
        double eps = opt.epsilon;
        if (eps == 0.0) {
            eps = cap;
            if (below > 0.0 && ratio > 1.0) eps = std::min(cap, std::log(heavy / below) / std::log(ratio));
            if (!(eps > 0.0)) {
                std::ostringstream msg;
                msg << "no degree gap below " << heavy << ": some (k-1)-set has degree " << below;
                note(res, opt.strict, msg.str());
                eps = cap;
            }
        } else {
            if (!(eps > 0.0)) throw Error(ErrorKind::InvalidArguments, "epsilon must be positive");
            const double lo = heavy / std::pow(ratio, eps);
            if (below > lo) {
                std::ostringstream msg;
                msg << "degree gap violated: a (k-1)-set has degree " << below << " in (" << lo << ", " << heavy << ")";
                note(res, opt.strict, msg.str());
            }
            eps = std::min(eps, cap);
        }
        delta = eps / (k + 1.0);
        res.diagnostics["epsilon"] = eps;
    } else {
        delta = opt.delta ? *opt.delta : 1.0 / (8.0 * k * k);
        if (!(delta > 0.0 && delta < 1.0 / (4.0 * k * k)))
            throw Error(ErrorKind::InvalidArguments, "case 2 needs 0 < delta < 1/(4k^2)");
        bool four = false;
        for_each_clean_four_cycle(h, [&](const std::array<EdgeRef, 4>&) {
            four = true;
            return false;
        });
        if (four) note(res, opt.strict, "input has a clean 4-cycle");
        const double lo = heavy / std::pow(std::log(ratio), k + 1);
        if (below > lo) {
            std::ostringstream msg;
            msg << "logarithmic degree gap violated: a (k-1)-set has degree " << below << " in (" << lo << ", "
                << heavy << ")";
            note(res, opt.strict, msg.str());
        }
    }
    res.diagnostics["delta"] = delta;

    // Two-layer family: heavy (k-1)-sets and the edges containing none.
    LayeredHypergraph fam(h.n(), k);
    for (const auto& [s, deg] : codeg)
        if (static_cast<double>(deg) >= heavy) fam.add_edge(s);
    for (const Edge& e : h.layer(k)) {
        bool avoids = true;
        for_each_subset(e.vertices(), static_cast<std::size_t>(k - 1), [&](const std::vector<VertexId>& s) {
            if (avoids && fam.contains(Edge::from_sorted(s))) avoids = false;
        });
        if (avoids) fam.add_edge(e);
    }
    fam = [&] {
        LayeredHypergraph sorted(h.n(), k);
        for (int i = k - 1; i <= k; ++i) {
            std::vector<Edge> es = fam.layer(i);
            std::sort(es.begin(), es.end());
            for (Edge& e : es) sorted.add_edge(std::move(e));
        }
        return sorted;
    }();
    res.diagnostics["heavy_threshold"] = heavy;
    res.diagnostics["H_k-1_edges"] = static_cast<double>(fam.layer(k - 1).size());
    res.diagnostics["H_k_edges"] = static_cast<double>(fam.layer(k).size());

    double p = std::pow(ratio, 1.0 / (k - 1.0) + delta) / n;
    if (p > 1.0) {
        res.warnings.push_back("sampling probability above 1; clamped");
        p = 1.0;
    }
    const std::size_t target = static_cast<std::size_t>(std::floor(0.5 * std::pow(ratio, 1.0 / (k - 1.0) + delta)));
    res.diagnostics["p"] = p;
    res.diagnostics["target"] = static_cast<double>(target);
    if (target == 0) {
        spencer_fallback(res, h, spec);
        return res;
    }
    std::vector<double> limit(static_cast<std::size_t>(k) + 1, 0.0);
    for (int i = k - 1; i <= k; ++i)
        limit[i] = 40.0 * std::pow(p, i - 1) * static_cast<double>(max_layer_degree(fam, i, 1));

    const CycleDeletion what = opt.appendix_case == 1 ? CycleDeletion{k - 1, true, true} : CycleDeletion{k - 2, true, false};
    std::optional<VertexSet> best;
    std::optional<BouquetViolation> last_violation;
    std::size_t best_sample = 0, best_z = 0;
    for (int a = 0; a < opt.retries; ++a) {
        Rng rng(spec.child("sample", static_cast<std::uint64_t>(a)));
        const VertexSet u = rng.bernoulli_subset(h.n(), p);
        std::size_t removed = 0;
        const VertexSet light = drop_heavy(
            fam, u, [&](int i, std::size_t deg, VertexId) { return static_cast<double>(deg) > limit[i]; }, removed);
        const Induced fl = induce(fam, light);
        VertexSet clean = map_up(delete_short_cycles(fl.graph, what), fl.to_parent);
        res.attempts = a + 1;
        const bool big = clean.size() >= target;
        if (big) {
            Rng tr(spec.child("trim", static_cast<std::uint64_t>(a)));
            clean = trim(clean, target, tr);
        }
        const BouquetReport rep = check_bouquet(induce(fam, clean).graph);
        if (!rep.holds()) {
            last_violation = rep.violations[0];
            continue;
        }
        if (!best || big || clean.size() > best->size()) {
            best = clean;
            best_sample = u.size();
            best_z = removed;
        }
        if (big) {
            res.accepted = true;
            break;
        }
    }
    if (!best)
        throw Error(ErrorKind::ResidueNotBouquet,
                    std::string("no sample left a BOUQUET residue; last violation of property ") +
                        to_string(last_violation->property),
                    as_witness(last_violation->witness));
    if (!res.accepted) res.warnings.push_back("no sample reached the target size; kept the largest residue");
    res.sample_size = best_sample;
    res.diagnostics["z_removed"] = static_cast<double>(best_z);
    res.residue = *best;
    res.residue_graph = induce(fam, res.residue).graph;

    const LayeredHypergraph& r = res.residue_graph;
    res.diagnostics["Delta_1_Hk"] = static_cast<double>(max_layer_degree(r, k, 1));
    res.diagnostics["Delta_1_Hk-1"] = static_cast<double>(max_layer_degree(r, k - 1, 1));
    if (opt.appendix_case == 2) {
        const double co = static_cast<double>(max_layer_degree(r, k, static_cast<std::size_t>(k - 1)));
        const double cap = 2.0 * std::pow(ratio, delta) / std::pow(std::log(ratio), k + 1);
        res.diagnostics["Delta_k-1_Hk"] = co;
        res.diagnostics["Delta_k-1_cap"] = cap;
        if (co > cap) {
            std::ostringstream msg;
            msg << "residue Delta_" << k - 1 << "=" << co << " above " << cap;
            res.warnings.push_back(msg.str());
        }
    }
    nibble_on_residue(res, h, 3.0 * std::pow(ratio, delta), spec, opt);
    return res;
}

PipelineResult pipeline_appendixB(const LayeredHypergraph& h, double t, const RngSpec& spec,
                                  const PipelineOptions& opt) {
    const int k = require_uniform(h, "pipeline_appendixB");
    if (!(t > 1.0)) throw Error(ErrorKind::OutOfDomain, "pipeline_appendixB needs t > 1");
    if (opt.retries < 1) throw Error(ErrorKind::InvalidArguments, "retries must be positive");
    const double eps = opt.epsilon == 0.0 ? 1.0 : opt.epsilon;
    if (!(eps > 0.0 && eps <= 1.0)) throw Error(ErrorKind::InvalidArguments, "epsilon must lie in (0, 1]");
    const double n = static_cast<double>(h.n());
    const double logt = std::log(t);

    PipelineResult res;
    const bool edges = !h.layer(k).empty();
    auto hyp = [&](std::size_t ell, double cap) {
        const double v = edges ? static_cast<double>(max_min_degree(h, k, static_cast<int>(ell)).max) : 0.0;
        if (v > cap) {
            std::ostringstream msg;
            msg << "Delta_" << ell << "(H)=" << v << " above " << cap;
            note(res, opt.strict, msg.str());
        }
    };
    hyp(1, std::pow(t, k - 1));
    for (int i = 2; i <= k - 2; ++i) hyp(static_cast<std::size_t>(i), std::pow(t, k - i - eps));
    hyp(static_cast<std::size_t>(k - 1), t / std::pow(logt, k + 1));
    bool four = false;
    for_each_clean_four_cycle(h, [&](const std::array<EdgeRef, 4>&) {
        four = true;
        return false;
    });
    if (four) note(res, opt.strict, "input has a clean 4-cycle");

    const double delta = eps / (4.0 * k);
    double p = std::pow(t, delta - 1.0);
    if (p >= 1.0) {
        res.warnings.push_back("sampling probability at least 1; clamped");
        p = 1.0;
    }
    const std::size_t target = static_cast<std::size_t>(std::floor(0.5 * n * std::pow(t, delta - 1.0)));
    const double co_cap = 2.0 * p * t / std::pow(logt, k + 1);
    res.diagnostics["epsilon"] = eps;
    res.diagnostics["delta"] = delta;
    res.diagnostics["p"] = p;
    res.diagnostics["target"] = static_cast<double>(target);
    res.diagnostics["Delta_k-1_cap"] = co_cap;
    if (target == 0) {
        spencer_fallback(res, h, spec);
        return res;
    }
    std::vector<std::size_t> deg(h.n(), 0);
    for (const Edge& e : h.layer(k))
        for (VertexId x : e) ++deg[x];
    const double scale = 10.0 * std::pow(p, k - 1);

    std::optional<VertexSet> best;
    std::optional<BouquetViolation> last_violation;
    std::size_t best_sample = 0, best_z = 0;
    for (int a = 0; a < opt.retries; ++a) {
        Rng rng(spec.child("sample", static_cast<std::uint64_t>(a)));
        const VertexSet u = rng.bernoulli_subset(h.n(), p);
        std::size_t removed = 0;
        const VertexSet light = drop_heavy(
            h, u,
            [&](int, std::size_t dv, VertexId x) { return static_cast<double>(dv) > scale * static_cast<double>(deg[x]); },
            removed);
        const Induced hl = induce(h, light);
        VertexSet clean = map_up(delete_short_cycles(hl.graph, {k - 2, true, false}), hl.to_parent);
        res.attempts = a + 1;
        const bool big = clean.size() >= target;
        if (big) {
            Rng tr(spec.child("trim", static_cast<std::uint64_t>(a)));
            clean = trim(clean, target, tr);
        }
        const LayeredHypergraph r = induce(h, clean).graph;
        const BouquetReport rep = check_bouquet(r);
        if (!rep.holds()) {
            last_violation = rep.violations[0];
            continue;
        }
        const double co = static_cast<double>(max_layer_degree(r, k, static_cast<std::size_t>(k - 1)));
        const bool ok = big && co <= co_cap;
        if (!best || ok || clean.size() > best->size()) {
            best = clean;
            best_sample = u.size();
            best_z = removed;
        }
        if (ok) {
            res.accepted = true;
            break;
        }
    }
    if (!best)
        throw Error(ErrorKind::ResidueNotBouquet,
                    std::string("no sample left a BOUQUET residue; last violation of property ") +
                        to_string(last_violation->property),
                    as_witness(last_violation->witness));
    if (!res.accepted)
        res.warnings.push_back("no sample met the size and (k-1)-degree tests; kept the largest residue");
    res.sample_size = best_sample;
    res.diagnostics["z_removed"] = static_cast<double>(best_z);
    res.residue = *best;
    res.residue_graph = induce(h, res.residue).graph;
    res.diagnostics["Delta_1_residue"] = static_cast<double>(max_layer_degree(res.residue_graph, k, 1));
    res.diagnostics["Delta_k-1_residue"] =
        static_cast<double>(max_layer_degree(res.residue_graph, k, static_cast<std::size_t>(k - 1)));
    nibble_on_residue(res, h, std::pow(10.0, 1.0 / (k - 1.0)) * std::pow(t, delta), spec, opt);
    return res;
}

}  // namespace hyperind
