#ifndef HYPERIND_ALGORITHMS_HPP
#define HYPERIND_ALGORITHMS_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hyperind/core.hpp"
#include "hyperind/rng.hpp"
#include "hyperind/schedule.hpp"

namespace hyperind {

// ---------------------------------------------------------------------------
// Baselines

struct SpencerResult {
    VertexSet set;
    double d = 0.0;               // k |H| / n
    std::size_t s = 0;            // sample size floor(n / d^{1/(k-1)})
    std::size_t spanned_min = 0;  // fewest edges spanned by a sample
};

/// Best of `samples` uniform s-subsets, then one vertex removed per spanned
/// edge. k is the largest uniformity present. Requires samples >= 20.
SpencerResult spencer_set(const LayeredHypergraph& h, Rng& rng, std::size_t samples = 20);

enum class GreedyOrder { MinDegree, Random };

/// Maximal independent set built by scanning vertices in the given order.
VertexSet greedy_set(const LayeredHypergraph& h, Rng& rng, GreedyOrder order = GreedyOrder::MinDegree);

// ---------------------------------------------------------------------------
// Almost-regular completion

/// Degree caps indexed by uniformity i (entries below 2 are ignored).
/// vertex[i] bounds Δ_1(H_i); codegree[i] bounds Δ_{i-1}(H_i) for i >= 3.
struct Caps {
    std::vector<std::size_t> vertex;
    std::vector<std::size_t> codegree;
};

struct Completion {
    LayeredHypergraph graph;        // H' ⊇ H
    VertexSet irregular;            // B: vertices below a cap in some layer
    std::vector<std::size_t> added;  // new edges per layer
    double b = 0.0;                 // 1 + sum_i (i-1) a_{1,i}
};

/// Adds edges whose vertices are pairwise at distance >= 4 among vertices
/// still below their layer cap until none can be added. The input must
/// lie in BOUQUET (checked unless `verify` is false) and respect the caps.
Completion almost_regular_complete(const LayeredHypergraph& h, const Caps& caps, bool verify = true);

// ---------------------------------------------------------------------------
// Degree transfer

/// |{e ∈ (H_i)_x : e ⊆ V' ∪ C, |e ∩ V'| = j-1}|.
std::size_t degree_i_to_j(const LayeredHypergraph& h, VertexId x, const VertexSet& vprime,
                          const VertexSet& c, int i, int j);

/// C(i-1, j-1) deg_{H_i}(x) p^{i-j} e^{1-j}.
double mu_i_to_j(std::size_t layer_degree, double p, int i, int j);
double mu_i_to_j(const LayeredHypergraph& h, VertexId x, double p, int i, int j);

// ---------------------------------------------------------------------------
// One nibble round

struct StepOptions {
    std::optional<VertexSet> forced_c;  // replaces the random sample C
    std::optional<double> p_override;   // replaces p_{m+1}
    bool verify_bouquet = true;         // check H_m before completing it
    bool diagnostics = true;            // bag identity and (i-1)-set bounds
};

struct TransferStat {
    int i = 0;
    int j = 0;
    std::size_t z_count = 0;   // vertices exceeding (1 + eps/4)^2 mu
    std::size_t max_degree = 0;
    double max_ratio = 0.0;    // max deg / mu over vertices with mu > 0
};

struct StepState {
    int m = 0;
    double p = 0.0;
    Caps caps;
    std::vector<std::string> warnings;

    // All sets use vertex ids of H_m.
    VertexSet b, nb, c, d, vprime, z, w, i, vnext;
    std::size_t completion_edges = 0;

    std::vector<TransferStat> transfers;
    std::size_t bag_size = 0;
    std::size_t cleaned_size = 0;
    std::size_t discarded_small = 0;

    /// Edge of the completed H_m that each H_next edge was contracted from,
    /// indexed [layer][index] of H_next, in H_m ids.
    std::vector<std::vector<Edge>> preimage;
    /// H_next id -> H_m id.
    std::vector<VertexId> next_to_current;

    // Diagnostics (when enabled).
    bool bag_identity_holds = true;
    std::size_t bag_identity_checked = 0;
    /// Per layer i >= 3: max over (i-1)-sets of the layer-i degree in the
    /// contraction bag of H'[V' ∪ C] onto V', and the bound it is compared to.
    std::vector<std::pair<std::size_t, double>> codegree_bound;
};

struct StepResult {
    LayeredHypergraph next;
    StepState state;
};

/// Completion, sampling, waste and contraction for round m. Throws
/// RoundCollapsed when no vertex survives.
StepResult akpss_step(const LayeredHypergraph& hm, const Schedule& s, int m, Rng& rng,
                      const StepOptions& options = {});

// ---------------------------------------------------------------------------
// Full nibble

struct RoundSummary {
    int m = 0;
    std::size_t n_before = 0;
    std::size_t c = 0, d = 0, b = 0, nb = 0, z = 0, w = 0, i = 0, n_after = 0;
    std::size_t completion_edges = 0;
    int attempts = 0;
    bool window_ok = false;
    bool i_ok = false;
    bool z_ok = false;
    bool good() const noexcept { return window_ok && i_ok && z_ok; }
};

struct RunOptions {
    int retries_per_round = 16;
    bool verify_input = true;
    bool diagnostics = false;
    /// Called with every accepted round result.
    std::function<void(const StepResult&)> observer;
};

struct RunCertificate {
    VertexSet set;  // ids of the input hypergraph
    bool verified = false;
    std::vector<RoundSummary> rounds;
    std::vector<std::string> warnings;
    std::size_t final_vertices = 0;  // |V_M|
};

RunCertificate akpss_run(const LayeredHypergraph& h, const Schedule& s, const RngSpec& rng,
                         const RunOptions& options = {});

// ---------------------------------------------------------------------------
// Cycle deletion shared by generators and pipelines

struct CycleDeletion {
    int max_two_cycle_ell = 0;  // delete for every 2 <= ell <= this
    bool linear_three = false;
    bool clean_four = false;
};

/// Streams over the requested cycle types and, for every witness whose
/// vertices are all still present, deletes its lowest-id vertex. Returns the
/// surviving vertices; none of the requested cycles remain among them.
VertexSet delete_short_cycles(const LayeredHypergraph& h, const CycleDeletion& what);

// ---------------------------------------------------------------------------
// Pipelines

struct PipelineOptions {
    bool strict = false;
    int retries = 16;
    double epsilon = 0.0;            // 0 selects the documented default
    int appendix_case = 1;           // Appendix-A style pipeline: 1 or 2
    std::optional<double> delta;     // case 2 of the Appendix-A pipeline
    std::optional<double> beta;      // threshold exponent of the k-2 pipeline
    RunOptions akpss;
};

struct PipelineResult {
    VertexSet set;  // ids of the input hypergraph
    bool verified = false;
    bool accepted = false;  // some sample met every acceptance test
    int attempts = 0;
    std::size_t sample_size = 0;
    VertexSet residue;      // final vertex set handed to the last step
    LayeredHypergraph residue_graph;  // on 0..|residue|-1
    std::map<std::string, double> diagnostics;
    std::vector<std::string> warnings;
    std::optional<RunCertificate> akpss;
};

/// Sparsify, delete short 2-cycles, split into (k-1)-sets of high degree and
/// the remaining edges, then run greedy on the union.
PipelineResult pipeline_kminus2(const LayeredHypergraph& h, double d, const RngSpec& rng,
                                const PipelineOptions& options = {});

/// Split by (k-1)-degree, sparsify, delete short cycles, then run the nibble.
PipelineResult pipeline_appendixA(const LayeredHypergraph& h, double d, const RngSpec& rng,
                                  const PipelineOptions& options = {});

/// Sparsify with p = t^{δ-1}, delete short cycles, then run the nibble.
PipelineResult pipeline_appendixB(const LayeredHypergraph& h, double t, const RngSpec& rng,
                                  const PipelineOptions& options = {});

}  // namespace hyperind

#endif
