#ifndef HYPERIND_GENERATORS_HPP
#define HYPERIND_GENERATORS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hyperind/core.hpp"
#include "hyperind/rng.hpp"

namespace hyperind {

/// Every k-set is an edge independently with probability p. Small instances
/// enumerate all k-sets; larger ones skip geometrically through colex ranks.
LayeredHypergraph gen_gnp(std::size_t n, int k, double p, Rng& rng);

struct Girth5Result {
    LayeredHypergraph graph;  // on the kept vertices, relabelled 0..|kept|-1
    VertexSet kept;           // ids in the sampled hypergraph
    std::size_t sampled_edges = 0;
};

/// gen_gnp followed by deletion of one vertex per 2-cycle, linear 3-cycle
/// and clean 4-cycle. The result is checked against BOUQUET.
Girth5Result gen_girth5(std::size_t n, int k, double p, Rng& rng);

/// floor(n/s) disjoint copies of K_s^k on consecutive ids, the rest isolated.
LayeredHypergraph gen_disjoint_cliques(std::size_t n, int k, std::size_t s);
std::size_t disjoint_cliques_alpha(std::size_t n, int k, std::size_t s);

struct LayeredTargets {
    double T = 0.0;
    std::vector<std::size_t> degree;  // per layer i, target Δ_1(H_i)
};

struct LayeredResult {
    LayeredHypergraph graph;
    std::vector<std::size_t> vertex_cap;    // per layer, after clamping
    std::vector<std::size_t> codegree_cap;  // per layer i >= 3
    std::vector<std::size_t> achieved;      // per layer, max degree reached
    std::vector<std::string> warnings;
};

/// Caps implied by T: floor(T^{i-1} (log T)^{(k-i)/(k-1)}) and
/// max(1, floor(T / (log T)^{i+1})).
std::vector<std::size_t> layer_degree_caps(int k, double T);
std::vector<std::size_t> layer_codegree_caps(int k, double T);

/// Random insertions, rejecting any edge that would break a degree cap or
/// BOUQUET. Stops when every layer is full or stalls.
LayeredResult gen_layered_bouquet(std::size_t n, int k, const LayeredTargets& targets, Rng& rng);

enum class GenKind { Gnp, Girth5, DisjointCliques, LayeredBouquet };
const char* to_string(GenKind kind);
GenKind gen_kind_from_string(const std::string& s);

struct GenSpec {
    GenKind kind = GenKind::Gnp;
    std::size_t n = 0;
    int k = 3;
    std::optional<double> p;  // gnp / girth5
    std::optional<double> t;  // gnp / girth5: p = (t/n)^{k-1}
    std::size_t s = 0;        // clique size
    double T = 0.0;           // layered bouquet
    double density = 1.0;     // layered bouquet: fraction of the degree caps
    std::uint64_t seed = 0;
};

struct Generated {
    LayeredHypergraph graph;
    std::vector<std::string> warnings;
    std::map<std::string, double> stats;
};

/// Dispatches on kind; the RNG stream is (seed, "gen/<kind>").
Generated generate(const GenSpec& spec);
Generated generate(const GenSpec& spec, const RngSpec& stream);

/// Edge probability used for gnp and girth5.
double gen_edge_probability(const GenSpec& spec);

}  // namespace hyperind

#endif
