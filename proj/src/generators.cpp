#include "hyperind/generators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <unordered_map>

#include "hyperind/algorithms.hpp"
#include "hyperind/structure.hpp"

namespace hyperind {

namespace {

constexpr double enumeration_budget = 1 << 20;
constexpr std::uint64_t rank_limit = std::uint64_t{1} << 62;

// table[j][c] = C(c, j) for j <= k, c <= n; saturates at rank_limit.
std::vector<std::vector<std::uint64_t>> binomial_table(std::size_t n, int k) {
    std::vector<std::vector<std::uint64_t>> table(static_cast<std::size_t>(k) + 1,
                                                  std::vector<std::uint64_t>(n + 1, 0));
    for (std::size_t c = 0; c <= n; ++c) table[0][c] = 1;
    for (int j = 1; j <= k; ++j)
        for (std::size_t c = 1; c <= n; ++c) {
            const std::uint64_t v = table[j - 1][c - 1] + table[j][c - 1];
            table[j][c] = std::min(v, rank_limit);
        }
    return table;
}

// Colex unranking: the k-set whose rank is r.
std::vector<VertexId> unrank(std::uint64_t r, std::size_t n, int k, const std::vector<std::vector<std::uint64_t>>& table) {
    std::vector<VertexId> out(static_cast<std::size_t>(k));
    std::size_t hi = n;
    for (int j = k; j >= 1; --j) {
        // largest c < hi with C(c, j) <= r
        std::size_t lo = static_cast<std::size_t>(j - 1), top = hi - 1;
        while (lo < top) {
            const std::size_t mid = (lo + top + 1) / 2;
            if (table[j][mid] <= r) lo = mid;
            else top = mid - 1;
        }
        out[static_cast<std::size_t>(j - 1)] = static_cast<VertexId>(lo);
        r -= table[j][lo];
        hi = lo;
    }
    return out;
}

}  // namespace

LayeredHypergraph gen_gnp(std::size_t n, int k, double p, Rng& rng) {
    if (k < 2) throw Error(ErrorKind::InvalidArguments, "gen_gnp needs k >= 2");
    if (!(p >= 0.0 && p <= 1.0)) throw Error(ErrorKind::InvalidArguments, "gen_gnp needs p in [0, 1]");
    LayeredHypergraph h(n, k);
    if (n < static_cast<std::size_t>(k) || p == 0.0) return h;
    const double total = binomial(n, static_cast<std::size_t>(k));
    if (total <= enumeration_budget) {
        std::vector<VertexId> all(n);
        std::iota(all.begin(), all.end(), 0);
        for_each_subset(all, static_cast<std::size_t>(k), [&](const std::vector<VertexId>& s) {
            if (rng.bernoulli(p)) h.add_edge(Edge::from_sorted(s));
        });
        return h;
    }
    if (total >= static_cast<double>(rank_limit))
        throw Error(ErrorKind::InvalidArguments, "C(n, k) too large for rank sampling");
    const auto table = binomial_table(n, k);
    const std::uint64_t count = table[k][n];
    if (p == 1.0) {
        for (std::uint64_t r = 0; r < count; ++r) h.add_edge(Edge::from_sorted(unrank(r, n, k, table)));
        return h;
    }
    const double log_q = std::log1p(-p);
    std::uint64_t r = 0;
    while (true) {
        const double skip = std::floor(std::log1p(-rng.uniform01()) / log_q);
        if (skip >= static_cast<double>(count - r)) break;
        r += static_cast<std::uint64_t>(skip);
        h.add_edge(Edge::from_sorted(unrank(r, n, k, table)));
        if (++r >= count) break;
    }
    return h;
}

Girth5Result gen_girth5(std::size_t n, int k, double p, Rng& rng) {
    const LayeredHypergraph raw = gen_gnp(n, k, p, rng);
    Girth5Result out;
    out.sampled_edges = raw.num_edges();
    out.kept = delete_short_cycles(raw, {k - 1, true, true});
    out.graph = induce(raw, out.kept).graph;
    const BouquetReport rep = check_bouquet(out.graph);
    if (!rep.holds()) throw Error(ErrorKind::Internal, "girth-5 pruning left a BOUQUET violation");
    return out;
}

LayeredHypergraph gen_disjoint_cliques(std::size_t n, int k, std::size_t s) {
    if (k < 2 || s < static_cast<std::size_t>(k))
        throw Error(ErrorKind::InvalidArguments, "gen_disjoint_cliques needs s >= k >= 2");
    LayeredHypergraph h(n, k);
    std::vector<VertexId> block(s);
    for (std::size_t b = 0; b + s <= n; b += s) {
        std::iota(block.begin(), block.end(), static_cast<VertexId>(b));
        for_each_subset(block, static_cast<std::size_t>(k),
                        [&](const std::vector<VertexId>& e) { h.add_edge(Edge::from_sorted(e)); });
    }
    return h;
}

std::size_t disjoint_cliques_alpha(std::size_t n, int k, std::size_t s) {
    if (k < 2 || s < static_cast<std::size_t>(k))
        throw Error(ErrorKind::InvalidArguments, "disjoint_cliques_alpha needs s >= k >= 2");
    return (n / s) * static_cast<std::size_t>(k - 1) + n % s;
}

std::vector<std::size_t> layer_degree_caps(int k, double T) {
    if (k < 2 || !(T > 1.0)) throw Error(ErrorKind::InvalidArguments, "degree caps need k >= 2, T > 1");
    std::vector<std::size_t> caps(static_cast<std::size_t>(k) + 1, 0);
    const double logT = std::log(T);
    for (int i = 2; i <= k; ++i)
        caps[i] = static_cast<std::size_t>(std::floor(std::pow(T, i - 1) * std::pow(logT, (k - i) / (k - 1.0))));
    return caps;
}

std::vector<std::size_t> layer_codegree_caps(int k, double T) {
    if (k < 2 || !(T > 1.0)) throw Error(ErrorKind::InvalidArguments, "codegree caps need k >= 2, T > 1");
    std::vector<std::size_t> caps(static_cast<std::size_t>(k) + 1, 0);
    const double logT = std::log(T);
    for (int i = 3; i <= k; ++i)
        caps[i] = std::max<std::size_t>(1, static_cast<std::size_t>(std::floor(T / std::pow(logT, i + 1))));
    return caps;
}

LayeredResult gen_layered_bouquet(std::size_t n, int k, const LayeredTargets& targets, Rng& rng) {
    LayeredResult out;
    out.graph = LayeredHypergraph(n, k);
    out.vertex_cap = layer_degree_caps(k, targets.T);
    out.codegree_cap = layer_codegree_caps(k, targets.T);
    out.achieved.assign(static_cast<std::size_t>(k) + 1, 0);
    std::vector<std::size_t> goal(static_cast<std::size_t>(k) + 1, 0);
    for (int i = 2; i <= k; ++i) {
        const std::size_t want = static_cast<std::size_t>(i) < targets.degree.size() ? targets.degree[i] : 0;
        goal[i] = std::min(want, out.vertex_cap[i]);
        if (want > out.vertex_cap[i])
            out.warnings.push_back("layer " + std::to_string(i) + " target " + std::to_string(want) +
                                   " clamped to cap " + std::to_string(out.vertex_cap[i]));
    }

    // Per layer: vertices still below their target, and (i-1)-set degrees.
    std::vector<std::vector<std::size_t>> deg(static_cast<std::size_t>(k) + 1, std::vector<std::size_t>(n, 0));
    std::vector<std::vector<VertexId>> open(static_cast<std::size_t>(k) + 1);
    std::vector<std::unordered_map<Edge, std::size_t, EdgeHash>> codeg(static_cast<std::size_t>(k) + 1);
    std::vector<std::size_t> misses(static_cast<std::size_t>(k) + 1, 0);
    std::vector<bool> done(static_cast<std::size_t>(k) + 1, false);
    // A layer stalls after `patience` consecutive misses or `budget` misses in total.
    const std::size_t patience = std::max<std::size_t>(500, n);
    const std::size_t budget = std::max<std::size_t>(2000, 20 * n);
    std::vector<std::size_t> total_misses(static_cast<std::size_t>(k) + 1, 0);
    for (int i = 2; i <= k; ++i) {
        if (goal[i] == 0 || n < static_cast<std::size_t>(i)) {
            done[i] = true;
            continue;
        }
        open[i].resize(n);
        std::iota(open[i].begin(), open[i].end(), 0);
    }

    auto close_vertex = [&](int i, VertexId x) {
        auto& v = open[i];
        auto it = std::find(v.begin(), v.end(), x);
        if (it != v.end()) {
            *it = v.back();
            v.pop_back();
        }
    };

    bool active = true;
    while (active) {
        active = false;
        for (int i = 2; i <= k; ++i) {
            if (done[i]) continue;
            if (open[i].size() < static_cast<std::size_t>(i) || misses[i] >= patience ||
                total_misses[i] >= budget) {
                done[i] = true;
                continue;
            }
            active = true;
            std::vector<VertexId> vs;
            for (VertexId pos : rng.sample_subset(open[i].size(), static_cast<std::size_t>(i)))
                vs.push_back(open[i][pos]);
            std::sort(vs.begin(), vs.end());
            Edge e = Edge::from_sorted(std::move(vs));
            bool ok = !out.graph.contains(e);
            std::vector<Edge> faces;
            if (ok && i >= 3) {
                for_each_subset(e.vertices(), static_cast<std::size_t>(i - 1), [&](const std::vector<VertexId>& s) {
                    faces.push_back(Edge::from_sorted(s));
                });
                for (const Edge& f : faces) {
                    auto it = codeg[i].find(f);
                    if (it != codeg[i].end() && it->second >= out.codegree_cap[i]) ok = false;
                }
            }
            if (ok && bouquet_violation_adding(out.graph, e)) ok = false;
            if (!ok) {
                ++misses[i];
                ++total_misses[i];
                continue;
            }
            misses[i] = 0;
            for (const Edge& f : faces) ++codeg[i][f];
            for (VertexId x : e)
                if (++deg[i][x] >= goal[i]) close_vertex(i, x);
            out.graph.add_edge(std::move(e));
        }
    }
    for (int i = 2; i <= k; ++i) {
        for (VertexId x = 0; x < n; ++x) out.achieved[i] = std::max(out.achieved[i], deg[i][x]);
        if (goal[i] > 0 && out.achieved[i] < goal[i])
            out.warnings.push_back("layer " + std::to_string(i) + " stalled at max degree " +
                                   std::to_string(out.achieved[i]) + " of " + std::to_string(goal[i]));
    }
    return out;
}

const char* to_string(GenKind kind) {
    switch (kind) {
        case GenKind::Gnp: return "gnp";
        case GenKind::Girth5: return "girth5";
        case GenKind::DisjointCliques: return "cliques";
        case GenKind::LayeredBouquet: return "bouquet";
    }
    return "?";
}

GenKind gen_kind_from_string(const std::string& s) {
    if (s == "gnp") return GenKind::Gnp;
    if (s == "girth5") return GenKind::Girth5;
    if (s == "cliques") return GenKind::DisjointCliques;
    if (s == "bouquet") return GenKind::LayeredBouquet;
    throw Error(ErrorKind::InvalidArguments, "unknown generator '" + s + "'");
}

double gen_edge_probability(const GenSpec& spec) {
    if (spec.p && spec.t) throw Error(ErrorKind::InvalidArguments, "give p or t, not both");
    if (spec.p) return *spec.p;
    if (spec.t) {
        if (spec.n == 0) return 0.0;
        return std::min(1.0, std::pow(*spec.t / static_cast<double>(spec.n), spec.k - 1));
    }
    throw Error(ErrorKind::InvalidArguments, "gnp and girth5 need p or t");
}

Generated generate(const GenSpec& spec) {
    return generate(spec, RngSpec{spec.seed, std::string("gen/") + to_string(spec.kind)});
}

Generated generate(const GenSpec& spec, const RngSpec& stream) {
    Generated out;
    Rng rng(stream);
    switch (spec.kind) {
        case GenKind::Gnp: {
            const double p = gen_edge_probability(spec);
            out.graph = gen_gnp(spec.n, spec.k, p, rng);
            out.stats["p"] = p;
            break;
        }
        case GenKind::Girth5: {
            const double p = gen_edge_probability(spec);
            Girth5Result g = gen_girth5(spec.n, spec.k, p, rng);
            out.stats["p"] = p;
            out.stats["sampled_edges"] = static_cast<double>(g.sampled_edges);
            out.stats["vertices_removed"] = static_cast<double>(spec.n - g.kept.size());
            out.stats["loss_fraction"] =
                spec.n == 0 ? 0.0 : static_cast<double>(spec.n - g.kept.size()) / static_cast<double>(spec.n);
            out.graph = std::move(g.graph);
            break;
        }
        case GenKind::DisjointCliques:
            out.graph = gen_disjoint_cliques(spec.n, spec.k, spec.s);
            out.stats["alpha"] = static_cast<double>(disjoint_cliques_alpha(spec.n, spec.k, spec.s));
            break;
        case GenKind::LayeredBouquet: {
            if (!(spec.density >= 0.0 && spec.density <= 1.0))
                throw Error(ErrorKind::InvalidArguments, "density must lie in [0, 1]");
            LayeredTargets targets{spec.T, layer_degree_caps(spec.k, spec.T)};
            for (std::size_t& d : targets.degree)
                d = static_cast<std::size_t>(std::floor(spec.density * static_cast<double>(d)));
            LayeredResult r = gen_layered_bouquet(spec.n, spec.k, targets, rng);
            for (int i = 2; i <= spec.k; ++i) {
                out.stats["target_" + std::to_string(i)] = static_cast<double>(targets.degree[i]);
                out.stats["achieved_" + std::to_string(i)] = static_cast<double>(r.achieved[i]);
            }
            out.warnings = std::move(r.warnings);
            out.graph = std::move(r.graph);
            break;
        }
    }
    out.stats["n"] = static_cast<double>(out.graph.n());
    out.stats["edges"] = static_cast<double>(out.graph.num_edges());
    return out;
}

}  // namespace hyperind
