#include <algorithm>

#include "hyperind/algorithms.hpp"
#include "hyperind/structure.hpp"

namespace hyperind {

namespace {

std::vector<std::vector<VertexId>> as_witness(const std::vector<Edge>& edges) {
    std::vector<std::vector<VertexId>> out;
    for (const Edge& e : edges) out.push_back(e.vertices());
    return out;
}

struct BallMarker {
    std::vector<std::uint32_t> seen;
    std::uint32_t visit = 0;
    std::vector<VertexId> frontier, next;

    // Sets blocked[z] = stamp for every z in N^3(y).
    void mark(const LayeredHypergraph& h, VertexId y, std::vector<std::uint32_t>& blocked, std::uint32_t stamp) {
        ++visit;
        frontier.assign(1, y);
        seen[y] = visit;
        blocked[y] = stamp;
        for (int step = 0; step < 3 && !frontier.empty(); ++step) {
            next.clear();
            for (VertexId x : frontier)
                for (EdgeRef r : h.incident(x))
                    for (VertexId z : h.edge(r))
                        if (seen[z] != visit) {
                            seen[z] = visit;
                            blocked[z] = stamp;
                            next.push_back(z);
                        }
            frontier.swap(next);
        }
    }
};

}  // namespace

Completion almost_regular_complete(const LayeredHypergraph& h, const Caps& caps, bool verify) {
    const int k = h.k();
    const std::size_t n = h.n();
    if (caps.vertex.size() < static_cast<std::size_t>(k) + 1 ||
        caps.codegree.size() < static_cast<std::size_t>(k) + 1)
        throw Error(ErrorKind::InvalidArguments, "caps must cover layers 2..k");

    if (verify) {
        BouquetReport rep = check_bouquet(h);
        if (!rep.holds())
            throw Error(ErrorKind::PreconditionFailed,
                        std::string("input violates BOUQUET property ") + to_string(rep.violations[0].property),
                        as_witness(rep.violations[0].witness));
    }

    std::vector<std::vector<std::size_t>> deg(static_cast<std::size_t>(k) + 1, std::vector<std::size_t>(n, 0));
    for (int i = 2; i <= k; ++i)
        for (const Edge& e : h.layer(i))
            for (VertexId x : e) ++deg[i][x];
    for (int i = 2; i <= k; ++i) {
        for (VertexId x = 0; x < n; ++x)
            if (deg[i][x] > caps.vertex[i]) {
                for (EdgeRef r : h.incident(x))
                    if (r.layer == i)
                        throw Error(ErrorKind::PreconditionFailed,
                                    "vertex " + std::to_string(x) + " exceeds the layer-" + std::to_string(i) +
                                        " degree cap " + std::to_string(caps.vertex[i]),
                                    std::vector<std::vector<VertexId>>{h.edge(r).vertices()});
            }
        if (i >= 3 && !h.layer(i).empty()) {
            const std::size_t co = max_min_degree(h, i, i - 1).max;
            if (co > caps.codegree[i])
                throw Error(ErrorKind::PreconditionFailed,
                            "layer " + std::to_string(i) + " has (i-1)-degree " + std::to_string(co) +
                                " above cap " + std::to_string(caps.codegree[i]));
        }
    }

    Completion out;
    out.graph = h;
    out.added.assign(static_cast<std::size_t>(k) + 1, 0);
    out.b = 1.0;
    for (int i = 2; i <= k; ++i) out.b += static_cast<double>(i - 1) * static_cast<double>(caps.vertex[i]);

    std::vector<std::uint32_t> blocked(n, 0);
    std::uint32_t stamp = 0;
    BallMarker balls;
    balls.seen.assign(n, 0);
    std::vector<VertexId> picks;
    for (int i = 2; i <= k; ++i) {
        const std::size_t cap = caps.vertex[i];
        if (cap == 0 || (i >= 3 && caps.codegree[i] == 0)) continue;
        for (VertexId x1 = 0; x1 < n; ++x1) {
            while (deg[i][x1] < cap) {
                ++stamp;
                picks.assign(1, x1);
                balls.mark(out.graph, x1, blocked, stamp);
                for (VertexId y = 0; y < n && picks.size() < static_cast<std::size_t>(i); ++y) {
                    if (blocked[y] == stamp || deg[i][y] >= cap) continue;
                    picks.push_back(y);
                    balls.mark(out.graph, y, blocked, stamp);
                }
                if (picks.size() < static_cast<std::size_t>(i)) break;
                std::vector<VertexId> vs = picks;
                std::sort(vs.begin(), vs.end());
                out.graph.add_edge(Edge::from_sorted(std::move(vs)));
                for (VertexId x : picks) ++deg[i][x];
                ++out.added[i];
            }
        }
    }

    for (VertexId x = 0; x < n; ++x)
        for (int i = 2; i <= k; ++i)
            if (deg[i][x] < caps.vertex[i]) {
                out.irregular.push_back(x);
                break;
            }
    return out;
}

}  // namespace hyperind
