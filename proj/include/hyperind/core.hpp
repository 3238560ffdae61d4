#ifndef HYPERIND_CORE_HPP
#define HYPERIND_CORE_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace hyperind {

using VertexId = std::uint32_t;

/// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<VertexId>;

enum class ErrorKind {
    InvalidVertex,
    InvalidUniformity,
    InvalidArguments,
    ParseError,
    OutOfRegime,
    OutOfDomain,
    PreconditionFailed,
    RoundCollapsed,
    ResidueNotBouquet,
    SchemaError,
    Internal
};

const char* to_string(ErrorKind kind);

/// Library-wide exception. `line` is set for parse errors; `witness` carries
/// the offending edges when a structural precondition fails.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message);
    Error(ErrorKind kind, const std::string& message, std::size_t line);
    Error(ErrorKind kind, const std::string& message,
          std::vector<std::vector<VertexId>> witness);

    ErrorKind kind() const noexcept { return kind_; }
    std::optional<std::size_t> line() const noexcept { return line_; }
    const std::vector<std::vector<VertexId>>& witness() const noexcept { return witness_; }

private:
    ErrorKind kind_;
    std::optional<std::size_t> line_;
    std::vector<std::vector<VertexId>> witness_;
};

/// A hyperedge: a strictly increasing list of vertex ids.
class Edge {
public:
    Edge() = default;
    /// Sorts the input. Throws InvalidArguments on a repeated vertex.
    explicit Edge(std::vector<VertexId> vertices);
    Edge(std::initializer_list<VertexId> vertices);

    /// Wraps an already strictly increasing list without checking it.
    static Edge from_sorted(std::vector<VertexId> vertices);

    std::size_t size() const noexcept { return v_.size(); }
    bool empty() const noexcept { return v_.empty(); }
    VertexId operator[](std::size_t i) const { return v_[i]; }
    auto begin() const noexcept { return v_.begin(); }
    auto end() const noexcept { return v_.end(); }
    const std::vector<VertexId>& vertices() const noexcept { return v_; }
    bool contains(VertexId x) const;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;

private:
    std::vector<VertexId> v_;
};

struct EdgeHash {
    std::size_t operator()(const Edge& e) const noexcept;
};

std::size_t intersection_size(const Edge& a, const Edge& b);
Edge intersection(const Edge& a, const Edge& b);
bool is_subset(const Edge& small, const Edge& big);

/// Position of an edge inside a layered hypergraph. Ordering is by layer,
/// then insertion index.
struct EdgeRef {
    int layer = 0;
    std::uint32_t index = 0;

    friend bool operator==(const EdgeRef&, const EdgeRef&) = default;
    friend auto operator<=>(const EdgeRef&, const EdgeRef&) = default;
};

/// Layered hypergraph on vertices 0..n-1 with layers of uniformity 2..k.
/// Every edge lives in the layer matching its size.
class LayeredHypergraph {
public:
    struct AddResult {
        EdgeRef ref;
        bool duplicate = false;
    };

    LayeredHypergraph();
    LayeredHypergraph(std::size_t n, int k);

    /// Inserts `e` into layer |e|. Re-adding an existing edge is a no-op and
    /// reports `duplicate`.
    AddResult add_edge(const Edge& e);
    AddResult add_edge(std::vector<VertexId> vertices);
    AddResult add_edge(std::initializer_list<VertexId> vertices);

    std::size_t n() const noexcept { return n_; }
    int k() const noexcept { return k_; }

    /// Edges of uniformity i, in insertion order. Empty for i outside [2, k].
    const std::vector<Edge>& layer(int i) const;
    const Edge& edge(EdgeRef r) const { return layers_[r.layer][r.index]; }
    std::size_t num_edges() const noexcept { return num_edges_; }
    /// Largest uniformity with at least one edge, or 0 if edgeless.
    int top_layer() const;

    const std::vector<EdgeRef>& incident(VertexId x) const { return incidence_[x]; }
    std::optional<EdgeRef> find(const Edge& e) const;
    bool contains(const Edge& e) const { return find(e).has_value(); }

    template <class F>
    void for_each_edge(F&& f) const {
        for (int i = 2; i <= k_; ++i)
            for (std::uint32_t j = 0; j < layers_[i].size(); ++j)
                f(EdgeRef{i, j}, layers_[i][j]);
    }

    /// Copy whose layers are sorted lexicographically.
    LayeredHypergraph canonical() const;

    /// Equality of vertex count, k and edge sets (insertion order ignored).
    friend bool operator==(const LayeredHypergraph& a, const LayeredHypergraph& b);

private:
    std::size_t n_ = 0;
    int k_ = 2;
    std::size_t num_edges_ = 0;
    std::vector<std::vector<Edge>> layers_;
    std::vector<std::unordered_map<Edge, std::uint32_t, EdgeHash>> lookup_;
    std::vector<std::vector<EdgeRef>> incidence_;
};

/// Byte mask over vertex ids; a cheap membership structure for hot loops.
class VertexMask {
public:
    VertexMask() = default;
    explicit VertexMask(std::size_t n) : bits_(n, 0) {}
    VertexMask(std::size_t n, const VertexSet& members);

    bool operator[](VertexId x) const { return bits_[x] != 0; }
    void set(VertexId x, bool value = true) { bits_[x] = value ? 1 : 0; }
    std::size_t size() const noexcept { return bits_.size(); }
    VertexSet members() const;

private:
    std::vector<std::uint8_t> bits_;
};

VertexSet make_vertex_set(std::vector<VertexId> v);
VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);

/// Number of edges (over all layers) containing S. deg(∅) is |H|.
std::size_t degree(const LayeredHypergraph& h, const VertexSet& s);
/// Degree of S counted in layer i only.
std::size_t layer_degree(const LayeredHypergraph& h, int i, const VertexSet& s);

struct DegreeExtremes {
    std::size_t max = 0;
    std::size_t min = 0;
};

/// Max and min of deg over ℓ-subsets of V, counting edges of layer i only.
/// Requires 0 <= ell < i.
DegreeExtremes max_min_degree(const LayeredHypergraph& h, int i, int ell);

struct LinkEdge {
    int layer = 0;
    VertexSet vertices;

    friend bool operator==(const LinkEdge&, const LinkEdge&) = default;
    friend auto operator<=>(const LinkEdge&, const LinkEdge&) = default;
};

/// {e \ {x} : x ∈ e}, each entry tagged with the layer of e. Sorted.
std::vector<LinkEdge> link(const LayeredHypergraph& h, VertexId x);

/// N^radius(S); N^0(S) = S and N(S) includes S.
VertexSet neighborhood(const LayeredHypergraph& h, const VertexSet& s, int radius = 1);

/// Length of the shortest vertex path using the neighbour relation.
std::optional<std::size_t> distance(const LayeredHypergraph& h, VertexId x, VertexId y);

struct Induced {
    LayeredHypergraph graph;
    std::vector<VertexId> to_parent;  // new id -> old id
};

/// Sub-hypergraph on U, relabelled to 0..|U|-1 in increasing order of old id.
Induced induce(const LayeredHypergraph& h, const VertexSet& u);

struct Contraction {
    /// Raw multiset {e ∩ V* : |e ∩ V*| >= 2}, one entry per source edge.
    std::vector<Edge> bag;
    std::vector<EdgeRef> bag_sources;
    /// Bag with duplicates dropped and every member that properly contains
    /// another member removed. Same vertex ids as the input.
    LayeredHypergraph cleaned;
    /// For each cleaned edge, one source edge of the input it came from.
    std::vector<std::vector<EdgeRef>> cleaned_sources;  // [layer][index]
    std::size_t discarded_small = 0;  // source edges with |e ∩ V*| <= 1
};

Contraction contract(const LayeredHypergraph& g, const VertexSet& vstar);

struct IndependenceResult {
    bool independent = true;
    std::optional<Edge> witness;
    explicit operator bool() const noexcept { return independent; }
};

IndependenceResult is_independent(const LayeredHypergraph& h, const VertexSet& s);

/// Binomial coefficient as a double.
double binomial(std::size_t n, std::size_t r);

/// Calls f(subset) for every r-subset of `items` in lexicographic order.
template <class F>
void for_each_subset(const std::vector<VertexId>& items, std::size_t r, F&& f) {
    const std::size_t n = items.size();
    if (r > n) return;
    std::vector<std::size_t> idx(r);
    for (std::size_t i = 0; i < r; ++i) idx[i] = i;
    std::vector<VertexId> cur(r);
    while (true) {
        for (std::size_t i = 0; i < r; ++i) cur[i] = items[idx[i]];
        f(cur);
        std::size_t i = r;
        while (i > 0 && idx[i - 1] == n - r + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace hyperind

#endif
