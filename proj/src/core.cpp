#include "hyperind/core.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <unordered_set>

namespace hyperind {

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::InvalidVertex: return "InvalidVertex";
        case ErrorKind::InvalidUniformity: return "InvalidUniformity";
        case ErrorKind::InvalidArguments: return "InvalidArguments";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::OutOfRegime: return "OutOfRegime";
        case ErrorKind::OutOfDomain: return "OutOfDomain";
        case ErrorKind::PreconditionFailed: return "PreconditionFailed";
        case ErrorKind::RoundCollapsed: return "RoundCollapsed";
        case ErrorKind::ResidueNotBouquet: return "ResidueNotBouquet";
        case ErrorKind::SchemaError: return "SchemaError";
        case ErrorKind::Internal: return "Internal";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

Error::Error(ErrorKind kind, const std::string& message, std::size_t line)
    : std::runtime_error(std::string(to_string(kind)) + " (line " + std::to_string(line) +
                         "): " + message),
      kind_(kind), line_(line) {}

Error::Error(ErrorKind kind, const std::string& message,
             std::vector<std::vector<VertexId>> witness)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message),
      kind_(kind), witness_(std::move(witness)) {}

Edge::Edge(std::vector<VertexId> vertices) : v_(std::move(vertices)) {
    std::sort(v_.begin(), v_.end());
    if (std::adjacent_find(v_.begin(), v_.end()) != v_.end())
        throw Error(ErrorKind::InvalidArguments, "edge repeats a vertex");
}

Edge::Edge(std::initializer_list<VertexId> vertices) : Edge(std::vector<VertexId>(vertices)) {}

Edge Edge::from_sorted(std::vector<VertexId> vertices) {
    Edge e;
    e.v_ = std::move(vertices);
    return e;
}

bool Edge::contains(VertexId x) const { return std::binary_search(v_.begin(), v_.end(), x); }

std::size_t EdgeHash::operator()(const Edge& e) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (VertexId x : e) {
        h ^= x;
        h *= 1099511628211ull;
        h ^= h >> 29;
    }
    return static_cast<std::size_t>(h);
}

std::size_t intersection_size(const Edge& a, const Edge& b) {
    std::size_t i = 0, j = 0, c = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j]) ++i;
        else if (b[j] < a[i]) ++j;
        else { ++c; ++i; ++j; }
    }
    return c;
}

Edge intersection(const Edge& a, const Edge& b) {
    std::vector<VertexId> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return Edge::from_sorted(std::move(out));
}

bool is_subset(const Edge& small, const Edge& big) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

LayeredHypergraph::LayeredHypergraph() : LayeredHypergraph(0, 2) {}

LayeredHypergraph::LayeredHypergraph(std::size_t n, int k)
    : n_(n), k_(k), layers_(static_cast<std::size_t>(std::max(k, 2)) + 1),
      lookup_(static_cast<std::size_t>(std::max(k, 2)) + 1), incidence_(n) {
    if (k < 2) throw Error(ErrorKind::InvalidArguments, "k must be at least 2");
    if (n > std::numeric_limits<VertexId>::max())
        throw Error(ErrorKind::InvalidArguments, "too many vertices");
}

LayeredHypergraph::AddResult LayeredHypergraph::add_edge(std::vector<VertexId> vertices) {
    return add_edge(Edge(std::move(vertices)));
}

LayeredHypergraph::AddResult LayeredHypergraph::add_edge(std::initializer_list<VertexId> vertices) {
    return add_edge(Edge(std::vector<VertexId>(vertices)));
}

LayeredHypergraph::AddResult LayeredHypergraph::add_edge(const Edge& e) {
    const int i = static_cast<int>(e.size());
    if (i < 2 || i > k_)
        throw Error(ErrorKind::InvalidUniformity,
                    "edge of size " + std::to_string(i) + " outside [2, " + std::to_string(k_) + "]");
    for (VertexId x : e)
        if (x >= n_)
            throw Error(ErrorKind::InvalidVertex,
                        "vertex " + std::to_string(x) + " not below n=" + std::to_string(n_));
    auto [it, inserted] = lookup_[i].try_emplace(e, static_cast<std::uint32_t>(layers_[i].size()));
    EdgeRef ref{i, it->second};
    if (!inserted) return {ref, true};
    layers_[i].push_back(e);
    for (VertexId x : e) incidence_[x].push_back(ref);
    ++num_edges_;
    return {ref, false};
}

const std::vector<Edge>& LayeredHypergraph::layer(int i) const {
    static const std::vector<Edge> empty;
    if (i < 2 || i > k_) return empty;
    return layers_[i];
}

int LayeredHypergraph::top_layer() const {
    for (int i = k_; i >= 2; --i)
        if (!layers_[i].empty()) return i;
    return 0;
}

std::optional<EdgeRef> LayeredHypergraph::find(const Edge& e) const {
    const int i = static_cast<int>(e.size());
    if (i < 2 || i > k_) return std::nullopt;
    auto it = lookup_[i].find(e);
    if (it == lookup_[i].end()) return std::nullopt;
    return EdgeRef{i, it->second};
}

LayeredHypergraph LayeredHypergraph::canonical() const {
    LayeredHypergraph out(n_, k_);
    for (int i = 2; i <= k_; ++i) {
        std::vector<Edge> sorted = layers_[i];
        std::sort(sorted.begin(), sorted.end());
        for (const Edge& e : sorted) out.add_edge(e);
    }
    return out;
}

bool operator==(const LayeredHypergraph& a, const LayeredHypergraph& b) {
    if (a.n_ != b.n_ || a.k_ != b.k_ || a.num_edges_ != b.num_edges_) return false;
    for (int i = 2; i <= a.k_; ++i) {
        if (a.layers_[i].size() != b.layers_[i].size()) return false;
        for (const Edge& e : a.layers_[i])
            if (!b.lookup_[i].count(e)) return false;
    }
    return true;
}

VertexMask::VertexMask(std::size_t n, const VertexSet& members) : bits_(n, 0) {
    for (VertexId x : members) bits_[x] = 1;
}

VertexSet VertexMask::members() const {
    VertexSet out;
    for (std::size_t i = 0; i < bits_.size(); ++i)
        if (bits_[i]) out.push_back(static_cast<VertexId>(i));
    return out;
}

VertexSet make_vertex_set(std::vector<VertexId> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

namespace {

std::size_t degree_impl(const LayeredHypergraph& h, int only_layer, const VertexSet& s_in) {
    VertexSet s = make_vertex_set(s_in);
    for (VertexId x : s)
        if (x >= h.n()) throw Error(ErrorKind::InvalidVertex, "vertex " + std::to_string(x));
    if (s.empty()) {
        if (only_layer == 0) return h.num_edges();
        return h.layer(only_layer).size();
    }
    VertexId pivot = s[0];
    for (VertexId x : s)
        if (h.incident(x).size() < h.incident(pivot).size()) pivot = x;
    const Edge key = Edge::from_sorted(s);
    std::size_t count = 0;
    for (EdgeRef r : h.incident(pivot)) {
        if (only_layer != 0 && r.layer != only_layer) continue;
        if (is_subset(key, h.edge(r))) ++count;
    }
    return count;
}

}  // namespace

std::size_t degree(const LayeredHypergraph& h, const VertexSet& s) { return degree_impl(h, 0, s); }

std::size_t layer_degree(const LayeredHypergraph& h, int i, const VertexSet& s) {
    if (i < 2 || i > h.k()) return 0;
    return degree_impl(h, i, s);
}

double binomial(std::size_t n, std::size_t r) {
    if (r > n) return 0.0;
    r = std::min(r, n - r);
    double out = 1.0;
    for (std::size_t j = 1; j <= r; ++j) out = out * static_cast<double>(n - r + j) / static_cast<double>(j);
    return out;
}

DegreeExtremes max_min_degree(const LayeredHypergraph& h, int i, int ell) {
    if (i < 2 || i > h.k() || ell < 0 || ell >= i)
        throw Error(ErrorKind::InvalidArguments,
                    "need 0 <= ell < i <= k (ell=" + std::to_string(ell) + ", i=" + std::to_string(i) + ")");
    const auto& edges = h.layer(i);
    if (edges.empty()) return {0, 0};
    if (ell == 0) return {edges.size(), edges.size()};
    std::unordered_map<Edge, std::size_t, EdgeHash> counts;
    for (const Edge& e : edges)
        for_each_subset(e.vertices(), static_cast<std::size_t>(ell),
                        [&](const std::vector<VertexId>& sub) { ++counts[Edge::from_sorted(sub)]; });
    DegreeExtremes out;
    out.min = std::numeric_limits<std::size_t>::max();
    for (const auto& [s, c] : counts) {
        out.max = std::max(out.max, c);
        out.min = std::min(out.min, c);
    }
    if (static_cast<double>(counts.size()) < binomial(h.n(), static_cast<std::size_t>(ell))) out.min = 0;
    return out;
}

std::vector<LinkEdge> link(const LayeredHypergraph& h, VertexId x) {
    if (x >= h.n()) throw Error(ErrorKind::InvalidVertex, "vertex " + std::to_string(x));
    std::vector<LinkEdge> out;
    for (EdgeRef r : h.incident(x)) {
        LinkEdge le{r.layer, {}};
        for (VertexId y : h.edge(r))
            if (y != x) le.vertices.push_back(y);
        out.push_back(std::move(le));
    }
    std::sort(out.begin(), out.end());
    return out;
}

VertexSet neighborhood(const LayeredHypergraph& h, const VertexSet& s, int radius) {
    if (radius < 0) throw Error(ErrorKind::InvalidArguments, "negative radius");
    VertexMask seen(h.n());
    std::vector<VertexId> frontier;
    for (VertexId x : s) {
        if (x >= h.n()) throw Error(ErrorKind::InvalidVertex, "vertex " + std::to_string(x));
        if (!seen[x]) {
            seen.set(x);
            frontier.push_back(x);
        }
    }
    for (int step = 0; step < radius && !frontier.empty(); ++step) {
        std::vector<VertexId> next;
        for (VertexId x : frontier)
            for (EdgeRef r : h.incident(x))
                for (VertexId y : h.edge(r))
                    if (!seen[y]) {
                        seen.set(y);
                        next.push_back(y);
                    }
        frontier = std::move(next);
    }
    return seen.members();
}

std::optional<std::size_t> distance(const LayeredHypergraph& h, VertexId x, VertexId y) {
    if (x >= h.n() || y >= h.n())
        throw Error(ErrorKind::InvalidVertex, "vertex out of range");
    if (x == y) return 0;
    std::vector<std::size_t> dist(h.n(), std::numeric_limits<std::size_t>::max());
    std::deque<VertexId> queue{x};
    dist[x] = 0;
    while (!queue.empty()) {
        VertexId u = queue.front();
        queue.pop_front();
        for (EdgeRef r : h.incident(u))
            for (VertexId w : h.edge(r)) {
                if (dist[w] != std::numeric_limits<std::size_t>::max()) continue;
                dist[w] = dist[u] + 1;
                if (w == y) return dist[w];
                queue.push_back(w);
            }
    }
    return std::nullopt;
}

Induced induce(const LayeredHypergraph& h, const VertexSet& u_in) {
    VertexSet u = make_vertex_set(u_in);
    constexpr VertexId absent = std::numeric_limits<VertexId>::max();
    std::vector<VertexId> to_new(h.n(), absent);
    for (std::size_t j = 0; j < u.size(); ++j) {
        if (u[j] >= h.n()) throw Error(ErrorKind::InvalidVertex, "vertex " + std::to_string(u[j]));
        to_new[u[j]] = static_cast<VertexId>(j);
    }
    Induced out{LayeredHypergraph(u.size(), h.k()), u};
    h.for_each_edge([&](EdgeRef, const Edge& e) {
        std::vector<VertexId> mapped;
        mapped.reserve(e.size());
        for (VertexId x : e) {
            if (to_new[x] == absent) return;
            mapped.push_back(to_new[x]);
        }
        out.graph.add_edge(Edge::from_sorted(std::move(mapped)));
    });
    return out;
}

Contraction contract(const LayeredHypergraph& g, const VertexSet& vstar_in) {
    VertexMask in_star(g.n(), make_vertex_set(vstar_in));
    Contraction out;
    g.for_each_edge([&](EdgeRef r, const Edge& e) {
        std::vector<VertexId> kept;
        for (VertexId x : e)
            if (in_star[x]) kept.push_back(x);
        if (kept.size() < 2) {
            ++out.discarded_small;
            return;
        }
        out.bag.push_back(Edge::from_sorted(std::move(kept)));
        out.bag_sources.push_back(r);
    });

    // Distinct members, remembering the first source of each.
    std::unordered_map<Edge, std::size_t, EdgeHash> first;
    std::vector<std::size_t> distinct;
    for (std::size_t j = 0; j < out.bag.size(); ++j)
        if (first.try_emplace(out.bag[j], j).second) distinct.push_back(j);

    std::vector<std::vector<std::size_t>> members_at(g.n());
    for (std::size_t j : distinct)
        for (VertexId x : out.bag[j]) members_at[x].push_back(j);

    out.cleaned = LayeredHypergraph(g.n(), g.k());
    out.cleaned_sources.assign(static_cast<std::size_t>(g.k()) + 1, {});
    std::vector<std::size_t> order = distinct;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return out.bag[a] < out.bag[b]; });
    for (std::size_t j : order) {
        const Edge& f = out.bag[j];
        bool dominated = false;
        for (VertexId x : f) {
            for (std::size_t other : members_at[x]) {
                const Edge& s = out.bag[other];
                if (s.size() < f.size() && is_subset(s, f)) {
                    dominated = true;
                    break;
                }
            }
            if (dominated) break;
        }
        if (dominated) continue;
        auto res = out.cleaned.add_edge(f);
        auto& src = out.cleaned_sources[res.ref.layer];
        if (src.size() <= res.ref.index) src.resize(res.ref.index + 1);
        src[res.ref.index] = out.bag_sources[j];
    }
    return out;
}

IndependenceResult is_independent(const LayeredHypergraph& h, const VertexSet& s_in) {
    VertexSet s = make_vertex_set(s_in);
    VertexMask in_s(h.n());
    for (VertexId x : s) {
        if (x >= h.n()) throw Error(ErrorKind::InvalidVertex, "vertex " + std::to_string(x));
        in_s.set(x);
    }
    for (VertexId x : s)
        for (EdgeRef r : h.incident(x)) {
            const Edge& e = h.edge(r);
            if (e[0] != x) continue;  // test each edge once, from its smallest vertex
            bool inside = true;
            for (VertexId y : e)
                if (!in_s[y]) {
                    inside = false;
                    break;
                }
            if (inside) return {false, e};
        }
    return {};
}

}  // namespace hyperind
