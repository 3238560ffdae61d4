#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "hyperind/algorithms.hpp"
#include "hyperind/structure.hpp"

namespace hyperind {

SpencerResult spencer_set(const LayeredHypergraph& h, Rng& rng, std::size_t samples) {
    if (samples < 20) throw Error(ErrorKind::InvalidArguments, "spencer_set needs at least 20 samples");
    SpencerResult out;
    const std::size_t n = h.n();
    const int k = h.top_layer();
    if (k == 0 || n == 0) {
        out.s = n;
        out.set.resize(n);
        std::iota(out.set.begin(), out.set.end(), 0);
        return out;
    }
    out.d = static_cast<double>(k) * static_cast<double>(h.num_edges()) / static_cast<double>(n);
    const double raw = static_cast<double>(n) / std::pow(out.d, 1.0 / (k - 1));
    out.s = static_cast<std::size_t>(std::min(static_cast<double>(n), std::floor(raw)));

    VertexMask mask(n);
    auto spanned = [&](const VertexSet& s) {
        for (VertexId x : s) mask.set(x);
        std::size_t count = 0;
        h.for_each_edge([&](EdgeRef, const Edge& e) {
            for (VertexId x : e)
                if (!mask[x]) return;
            ++count;
        });
        for (VertexId x : s) mask.set(x, false);
        return count;
    };

    VertexSet best;
    std::size_t best_count = 0;
    for (std::size_t j = 0; j < samples; ++j) {
        VertexSet s = rng.sample_subset(n, out.s);
        const std::size_t c = spanned(s);
        if (j == 0 || c < best_count) {
            best = std::move(s);
            best_count = c;
        }
    }
    out.spanned_min = best_count;

    for (VertexId x : best) mask.set(x);
    h.for_each_edge([&](EdgeRef, const Edge& e) {
        for (VertexId x : e)
            if (!mask[x]) return;
        mask.set(e[0], false);
    });
    out.set = mask.members();
    return out;
}

VertexSet greedy_set(const LayeredHypergraph& h, Rng& rng, GreedyOrder order) {
    std::vector<VertexId> seq(h.n());
    std::iota(seq.begin(), seq.end(), 0);
    if (order == GreedyOrder::Random) {
        rng.shuffle(seq);
    } else {
        std::stable_sort(seq.begin(), seq.end(), [&](VertexId a, VertexId b) {
            return h.incident(a).size() < h.incident(b).size();
        });
    }
    VertexMask in_set(h.n());
    for (VertexId x : seq) {
        bool blocked = false;
        for (EdgeRef r : h.incident(x)) {
            blocked = true;
            for (VertexId y : h.edge(r))
                if (y != x && !in_set[y]) {
                    blocked = false;
                    break;
                }
            if (blocked) break;
        }
        if (!blocked) in_set.set(x);
    }
    return in_set.members();
}

std::size_t degree_i_to_j(const LayeredHypergraph& h, VertexId x, const VertexSet& vprime,
                          const VertexSet& c, int i, int j) {
    if (x >= h.n()) throw Error(ErrorKind::InvalidVertex, "vertex " + std::to_string(x));
    if (i < 2 || i > h.k() || j < 1 || j > i)
        throw Error(ErrorKind::InvalidArguments, "need 1 <= j <= i <= k");
    VertexMask in_vp(h.n(), vprime), in_c(h.n(), c);
    std::size_t count = 0;
    for (EdgeRef r : h.incident(x)) {
        if (r.layer != i) continue;
        int inside = 0;
        bool ok = true;
        for (VertexId y : h.edge(r)) {
            if (y == x) continue;
            if (in_vp[y]) ++inside;
            else if (!in_c[y]) {
                ok = false;
                break;
            }
        }
        if (ok && inside == j - 1) ++count;
    }
    return count;
}

double mu_i_to_j(std::size_t layer_degree, double p, int i, int j) {
    if (!(p > 0.0 && p <= 1.0)) throw Error(ErrorKind::InvalidArguments, "p must lie in (0, 1]");
    if (j < 1 || j > i) throw Error(ErrorKind::InvalidArguments, "need 1 <= j <= i");
    return binomial(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) *
           static_cast<double>(layer_degree) * std::pow(p, i - j) * std::exp(1.0 - j);
}

double mu_i_to_j(const LayeredHypergraph& h, VertexId x, double p, int i, int j) {
    std::size_t deg = 0;
    for (EdgeRef r : h.incident(x)) deg += (r.layer == i);
    return mu_i_to_j(deg, p, i, j);
}

VertexSet delete_short_cycles(const LayeredHypergraph& h, const CycleDeletion& what) {
    std::vector<std::uint8_t> alive(h.n(), 1);
    Induced cur{h, {}};
    cur.to_parent.resize(h.n());
    std::iota(cur.to_parent.begin(), cur.to_parent.end(), 0);

    // Deletes the lowest-id vertex of the witness if all its vertices survive.
    auto strike = [&](std::initializer_list<EdgeRef> refs) {
        VertexId low = std::numeric_limits<VertexId>::max();
        for (EdgeRef r : refs)
            for (VertexId x : cur.graph.edge(r)) {
                const VertexId orig = cur.to_parent[x];
                if (!alive[orig]) return;
                low = std::min(low, orig);
            }
        alive[low] = 0;
    };
    auto shrink = [&]() {
        VertexSet keep;
        for (VertexId x = 0; x < cur.graph.n(); ++x)
            if (alive[cur.to_parent[x]]) keep.push_back(x);
        if (keep.size() == cur.graph.n()) return;
        Induced next = induce(cur.graph, keep);
        for (VertexId& x : next.to_parent) x = cur.to_parent[x];
        cur = std::move(next);
    };

    const int top = std::min(what.max_two_cycle_ell, h.k() - 1);
    for (int ell = 2; ell <= top; ++ell)
        for_each_two_cycle(cur.graph, ell, [&](EdgeRef a, EdgeRef b) {
            strike({a, b});
            return true;
        });
    if (what.linear_three) {
        shrink();
        for_each_linear_three_cycle(cur.graph, [&](const std::array<EdgeRef, 3>& t) {
            strike({t[0], t[1], t[2]});
            return true;
        });
    }
    if (what.clean_four) {
        shrink();
        for_each_clean_four_cycle(cur.graph, [&](const std::array<EdgeRef, 4>& q) {
            strike({q[0], q[1], q[2], q[3]});
            return true;
        });
    }
    VertexSet out;
    for (VertexId x = 0; x < h.n(); ++x)
        if (alive[x]) out.push_back(x);
    return out;
}

}  // namespace hyperind
