#ifndef HYPERIND_STRUCTURE_HPP
#define HYPERIND_STRUCTURE_HPP

#include <array>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "hyperind/core.hpp"

namespace hyperind {

inline constexpr std::size_t unlimited = std::numeric_limits<std::size_t>::max();

enum class CycleKind { Two, LinearThree, CleanFour };

const char* to_string(CycleKind kind);

struct CycleWitness {
    CycleKind kind = CycleKind::Two;
    std::vector<EdgeRef> refs;   // in cyclic order
    std::vector<Edge> edges;     // same order as refs
    /// Two-cycles: the shared set. Longer cycles: one vertex of each
    /// consecutive intersection, e_j ∩ e_{j+1}.
    std::vector<VertexId> meeting;
    int h2_edges = 0;            // how many witness edges come from layer 2
};

struct CycleReport {
    std::size_t count = 0;                 // exact
    std::vector<CycleWitness> witnesses;   // at most `limit`
};

// Visitors return false to stop the enumeration early.
using PairVisitor = std::function<bool(EdgeRef, EdgeRef)>;
using TripleVisitor = std::function<bool(const std::array<EdgeRef, 3>&)>;
using QuadVisitor = std::function<bool(const std::array<EdgeRef, 4>&)>;

/// Unordered pairs {e, f}, layers unrestricted, with |e ∩ f| = ell exactly.
/// Requires ell >= 2.
void for_each_two_cycle(const LayeredHypergraph& h, int ell, const PairVisitor& visit);
/// Triples with pairwise intersections being three distinct singletons.
void for_each_linear_three_cycle(const LayeredHypergraph& h, const TripleVisitor& visit);
/// (e1, e2, e3, e4) with consecutive intersections nonempty and
/// e1 ∩ e3 = e2 ∩ e4 = ∅; each cycle is visited once.
void for_each_clean_four_cycle(const LayeredHypergraph& h, const QuadVisitor& visit);

CycleReport count_two_cycles(const LayeredHypergraph& h, int ell, std::size_t limit = unlimited);
CycleReport find_linear_three_cycles(const LayeredHypergraph& h, std::size_t limit = unlimited);
CycleReport find_clean_four_cycles(const LayeredHypergraph& h, std::size_t limit = unlimited);

CycleWitness make_two_cycle_witness(const LayeredHypergraph& h, EdgeRef a, EdgeRef b);
CycleWitness make_three_cycle_witness(const LayeredHypergraph& h, const std::array<EdgeRef, 3>& t);
CycleWitness make_four_cycle_witness(const LayeredHypergraph& h, const std::array<EdgeRef, 4>& q);

// BOUQUET:
//   i   edges from different layers share at most one vertex
//   ii  two edges of layer i share 0, 1 or i-1 vertices
//   iii no linear 3-cycle with at most one edge from layer 2
//   iv  no clean 4-cycle
//   v   no e1, e2, e3 in layer 3 with |e1∩e2| = |e2∩e3| = 2, |e1∩e3| = 1
enum class BouquetProperty { CrossLayer, WithinLayer, LinearThree, CleanFour, TriplePattern };

const char* to_string(BouquetProperty p);

struct BouquetViolation {
    BouquetProperty property = BouquetProperty::CrossLayer;
    std::vector<Edge> witness;
};

struct BouquetReport {
    std::vector<BouquetViolation> violations;  // first witness per violated property
    bool holds() const noexcept { return violations.empty(); }
};

BouquetReport check_bouquet(const LayeredHypergraph& h);

/// First violation that appears in h ∪ {f}, assuming h itself satisfies
/// BOUQUET. Only structures through f are examined.
std::optional<BouquetViolation> bouquet_violation_adding(const LayeredHypergraph& h, const Edge& f);

/// Triples (e1, e2, e3) with |e1∩e2| = |e2∩e3| = ℓ-1 and |e1∩e3| = ℓ-2 for
/// some ℓ >= 3. Witness edges are listed as (e1, middle, e3) with e1 < e3.
std::vector<std::array<Edge, 3>> check_property_vprime(const LayeredHypergraph& h,
                                                       std::size_t limit = unlimited);

struct LinkComponent {
    std::vector<LinkEdge> members;  // sorted
    std::optional<int> layer;       // set when all members come from one layer
    VertexSet vertices;             // V(C)
};

/// Components of the link of x under "edges intersect". Sorted by first member.
std::vector<LinkComponent> link_components(const LayeredHypergraph& h, VertexId x);

/// Checks that every link component of x with at least two members comes from
/// a single layer i and has |V(C)| <= i or |C| <= Δ_{i-1}(H_i).
/// Returns a description of the first offending component.
std::optional<std::string> link_component_bound_violation(const LayeredHypergraph& h, VertexId x);

struct FamilyClass {
    enum class Kind { Clique, Sunflower, NotApplicable };
    Kind kind = Kind::NotApplicable;
    int uniformity = 0;                     // Clique(i): family inside K_{i+1}^i
    Edge core;                              // Sunflower: common (i-1)-set
    std::optional<std::pair<Edge, Edge>> witness;  // NotApplicable
};

/// Families whose members pairwise share at least two vertices.
FamilyClass classify_intersecting_family(const std::vector<Edge>& family);

/// Γ of layer i: max over x ≠ y of the number of (i-1)-sets S with S ∪ {x}
/// and S ∪ {y} both edges.
std::size_t common_neighbor_max(const LayeredHypergraph& h, int layer);

}  // namespace hyperind

#endif
