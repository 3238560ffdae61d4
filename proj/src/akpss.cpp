#include <algorithm>
#include <cmath>
#include <sstream>
#include <unordered_map>

#include "hyperind/algorithms.hpp"
#include "hyperind/structure.hpp"

namespace hyperind {

namespace {

struct RoundPrep {
    Caps caps;
    std::vector<std::string> warnings;
    Completion completion;
    VertexSet nb;
    std::vector<std::vector<std::size_t>> layer_deg;  // in the completed graph
};

std::size_t rounded_cap(double v) {
    if (!(v > 0.0)) return 0;
    return static_cast<std::size_t>(std::llround(v));
}

Caps round_caps(const Schedule& s, int m) {
    const int k = s.k;
    Caps caps;
    caps.vertex.assign(static_cast<std::size_t>(k) + 1, 0);
    caps.codegree.assign(static_cast<std::size_t>(k) + 1, 0);
    const double grow = std::pow(1.0 + s.epsilon, m);
    const double t = s.t[m];
    for (int i = 2; i <= k; ++i) {
        caps.vertex[i] = rounded_cap(grow * binomial(k - 1, k - i) * std::pow(s.alpha[m], k - i) * std::pow(t, i - 1));
        if (i >= 3) caps.codegree[i] = std::max<std::size_t>(1, rounded_cap(grow * t / std::pow(std::log(t), i + 1)));
    }
    return caps;
}

RoundPrep prepare_round(const LayeredHypergraph& hm, const Schedule& s, int m, bool verify) {
    RoundPrep prep;
    prep.caps = round_caps(s, m);
    const int k = hm.k();
    for (int i = 2; i <= k; ++i) {
        if (hm.layer(i).empty()) continue;
        const std::size_t d1 = max_min_degree(hm, i, 1).max;
        if (d1 > prep.caps.vertex[i]) {
            std::ostringstream msg;
            msg << "round " << m << ": Delta_1(H_" << i << ")=" << d1 << " exceeds cap " << prep.caps.vertex[i];
            if (s.strict) throw Error(ErrorKind::PreconditionFailed, msg.str());
            prep.warnings.push_back(msg.str() + "; cap raised");
            prep.caps.vertex[i] = d1;
        }
        if (i >= 3) {
            const std::size_t co = max_min_degree(hm, i, i - 1).max;
            if (co > prep.caps.codegree[i]) {
                std::ostringstream msg;
                msg << "round " << m << ": Delta_" << i - 1 << "(H_" << i << ")=" << co << " exceeds cap "
                    << prep.caps.codegree[i];
                if (s.strict) throw Error(ErrorKind::PreconditionFailed, msg.str());
                prep.warnings.push_back(msg.str() + "; cap raised");
                prep.caps.codegree[i] = co;
            }
        }
    }
    prep.completion = almost_regular_complete(hm, prep.caps, verify);
    prep.nb = neighborhood(prep.completion.graph, prep.completion.irregular, 1);
    const LayeredHypergraph& g = prep.completion.graph;
    prep.layer_deg.assign(static_cast<std::size_t>(k) + 1, std::vector<std::size_t>(g.n(), 0));
    for (int i = 2; i <= k; ++i)
        for (const Edge& e : g.layer(i))
            for (VertexId x : e) ++prep.layer_deg[i][x];
    return prep;
}

LayeredHypergraph restrict_to(const LayeredHypergraph& g, const VertexMask& allowed) {
    LayeredHypergraph out(g.n(), g.k());
    g.for_each_edge([&](EdgeRef, const Edge& e) {
        for (VertexId x : e)
            if (!allowed[x]) return;
        out.add_edge(e);
    });
    return out;
}

StepResult sample_round(const RoundPrep& prep, const Schedule& s, int m, Rng& rng, const StepOptions& opt) {
    const LayeredHypergraph& g = prep.completion.graph;
    const std::size_t n = g.n();
    const int k = g.k();
    StepResult res;
    StepState& st = res.state;
    st.m = m;
    st.caps = prep.caps;
    st.warnings = prep.warnings;
    st.completion_edges = 0;
    for (std::size_t a : prep.completion.added) st.completion_edges += a;
    st.b = prep.completion.irregular;
    st.nb = prep.nb;
    st.p = opt.p_override ? *opt.p_override : s.p[m + 1];

    if (opt.forced_c) {
        st.c = make_vertex_set(*opt.forced_c);
        for (VertexId x : st.c)
            if (x >= n) throw Error(ErrorKind::InvalidVertex, "forced C vertex " + std::to_string(x));
    } else {
        st.c = rng.bernoulli_subset(n, st.p);
    }
    const VertexMask in_c(n, st.c);

    VertexMask in_d(n);
    for (VertexId x = 0; x < n; ++x)
        for (EdgeRef r : g.incident(x)) {
            bool inside = true;
            for (VertexId y : g.edge(r))
                if (y != x && !in_c[y]) {
                    inside = false;
                    break;
                }
            if (inside) {
                in_d.set(x);
                break;
            }
        }
    st.d = in_d.members();

    const VertexMask in_b(n, st.b), in_nb(n, st.nb);
    VertexMask in_vp(n);
    for (VertexId x = 0; x < n; ++x)
        if (!in_b[x] && !in_c[x] && !in_d[x]) in_vp.set(x);
    st.vprime = in_vp.members();

    // deg_{i->j} for every vertex outside N(B) ∪ C; counts[x][i][j].
    const std::size_t width = static_cast<std::size_t>(k) + 1;
    std::vector<std::uint32_t> counts(n * width * width, 0);
    auto cnt = [&](VertexId x, int i, int j) -> std::uint32_t& {
        return counts[(static_cast<std::size_t>(x) * width + i) * width + j];
    };
    const double slack = (1.0 + s.epsilon / 4.0) * (1.0 + s.epsilon / 4.0);
    for (int i = 2; i <= k; ++i)
        for (int j = 2; j <= i; ++j) st.transfers.push_back({i, j, 0, 0, 0.0});
    auto stat = [&](int i, int j) -> TransferStat& {
        std::size_t idx = 0;
        for (int a = 2; a < i; ++a) idx += static_cast<std::size_t>(a - 1);
        return st.transfers[idx + static_cast<std::size_t>(j - 2)];
    };

    VertexMask in_z(n);
    for (VertexId x = 0; x < n; ++x) {
        if (in_nb[x] || in_c[x]) continue;
        for (EdgeRef r : g.incident(x)) {
            int inside = 0;
            bool ok = true;
            for (VertexId y : g.edge(r)) {
                if (y == x) continue;
                if (in_vp[y]) ++inside;
                else if (!in_c[y]) {
                    ok = false;
                    break;
                }
            }
            if (ok) ++cnt(x, r.layer, inside + 1);
        }
        for (int i = 2; i <= k; ++i) {
            const std::size_t deg = prep.layer_deg[i][x];
            for (int j = 2; j <= i; ++j) {
                const std::size_t value = cnt(x, i, j);
                const double mu = deg == 0 ? 0.0 : mu_i_to_j(deg, st.p, i, j);
                TransferStat& ts = stat(i, j);
                ts.max_degree = std::max<std::size_t>(ts.max_degree, value);
                if (mu > 0.0) ts.max_ratio = std::max(ts.max_ratio, static_cast<double>(value) / mu);
                if (static_cast<double>(value) > slack * mu) {
                    ++ts.z_count;
                    in_z.set(x);
                }
            }
        }
    }
    st.z = in_z.members();

    VertexMask in_w(n);
    for (VertexId x = 0; x < n; ++x)
        if (in_nb[x] || in_z[x]) in_w.set(x);
    st.w = in_w.members();

    VertexMask in_i(n), in_next(n), keep(n);
    for (VertexId x = 0; x < n; ++x) {
        if (in_c[x] && !in_d[x] && !in_w[x]) in_i.set(x);
        if (!in_c[x] && !in_d[x] && !in_w[x]) in_next.set(x);
        if (in_i[x] || in_next[x]) keep.set(x);
    }
    st.i = in_i.members();
    st.vnext = in_next.members();

    const LayeredHypergraph sub = restrict_to(g, keep);
    Contraction con = contract(sub, st.vnext);
    st.bag_size = con.bag.size();
    st.cleaned_size = con.cleaned.num_edges();
    st.discarded_small = con.discarded_small;

    Induced next = induce(con.cleaned, st.vnext);
    res.next = std::move(next.graph);
    st.next_to_current = std::move(next.to_parent);
    st.preimage.assign(width, {});
    for (int i = 2; i <= k; ++i)
        for (std::size_t j = 0; j < res.next.layer(i).size(); ++j)
            st.preimage[i].push_back(sub.edge(con.cleaned_sources[i][j]));

    if (opt.diagnostics) {
        VertexMask vp_or_c(n);
        for (VertexId x = 0; x < n; ++x)
            if (in_vp[x] || in_c[x]) vp_or_c.set(x);
        const Contraction prime = contract(restrict_to(g, vp_or_c), st.vprime);
        std::vector<std::uint32_t> bag_deg(n * width, 0);
        for (const Edge& e : prime.bag)
            for (VertexId x : e) ++bag_deg[static_cast<std::size_t>(x) * width + e.size()];
        for (VertexId x : st.vnext) {
            ++st.bag_identity_checked;
            for (int j = 2; j <= k; ++j) {
                std::size_t sum = 0;
                for (int ell = j; ell <= k; ++ell) sum += cnt(x, ell, j);
                if (sum != bag_deg[static_cast<std::size_t>(x) * width + j]) st.bag_identity_holds = false;
            }
        }
        const double t = s.t[m] / std::exp(1.0);
        st.codegree_bound.assign(width, {0, 0.0});
        for (int i = 3; i <= k; ++i) {
            std::unordered_map<Edge, std::size_t, EdgeHash> co;
            std::size_t best = 0;
            for (const Edge& e : prime.bag) {
                if (static_cast<int>(e.size()) != i) continue;
                for_each_subset(e.vertices(), static_cast<std::size_t>(i - 1), [&](const std::vector<VertexId>& sub_set) {
                    best = std::max(best, ++co[Edge::from_sorted(sub_set)]);
                });
            }
            const double bound = std::pow(1.0 + s.epsilon, m + 1) * t / std::pow(std::log(t), i + 1);
            st.codegree_bound[i] = {best, bound};
        }
    }
    return res;
}

void validate_round(const LayeredHypergraph& hm, const Schedule& s, int m) {
    if (hm.k() != s.k)
        throw Error(ErrorKind::InvalidArguments, "hypergraph k does not match the schedule");
    if (m < 0 || m >= s.M)
        throw Error(ErrorKind::InvalidArguments, "round index outside [0, M-1]");
}

}  // namespace

StepResult akpss_step(const LayeredHypergraph& hm, const Schedule& s, int m, Rng& rng, const StepOptions& options) {
    validate_round(hm, s, m);
    RoundPrep prep = prepare_round(hm, s, m, options.verify_bouquet);
    StepResult res = sample_round(prep, s, m, rng, options);
    if (res.state.vnext.empty())
        throw Error(ErrorKind::RoundCollapsed, "no vertex survives round " + std::to_string(m));
    return res;
}

RunCertificate akpss_run(const LayeredHypergraph& h, const Schedule& s, const RngSpec& spec, const RunOptions& opt) {
    if (h.k() != s.k) throw Error(ErrorKind::InvalidArguments, "hypergraph k does not match the schedule");
    if (opt.retries_per_round < 1) throw Error(ErrorKind::InvalidArguments, "retries_per_round must be positive");
    RunCertificate cert;
    cert.warnings = s.warnings;

    if (opt.verify_input) {
        BouquetReport rep = check_bouquet(h);
        if (!rep.holds()) {
            std::vector<std::vector<VertexId>> w;
            for (const Edge& e : rep.violations[0].witness) w.push_back(e.vertices());
            throw Error(ErrorKind::PreconditionFailed,
                        std::string("input violates BOUQUET property ") + to_string(rep.violations[0].property), w);
        }
    }
    const double logT = std::log(s.T);
    for (int i = 2; i <= s.k; ++i) {
        if (h.layer(i).empty()) continue;
        const double d1 = static_cast<double>(max_min_degree(h, i, 1).max);
        const double cap1 = std::pow(s.T, i - 1) * std::pow(logT, static_cast<double>(s.k - i) / (s.k - 1));
        std::vector<std::string> bad;
        if (d1 > cap1) {
            std::ostringstream msg;
            msg << "Delta_1(H_" << i << ")=" << d1 << " above " << cap1;
            bad.push_back(msg.str());
        }
        if (i >= 3) {
            const double co = static_cast<double>(max_min_degree(h, i, i - 1).max);
            const double cap2 = s.T / std::pow(logT, i + 1);
            if (co > cap2) {
                std::ostringstream msg;
                msg << "Delta_" << i - 1 << "(H_" << i << ")=" << co << " above " << cap2;
                bad.push_back(msg.str());
            }
        }
        for (const std::string& b : bad) {
            if (s.strict) throw Error(ErrorKind::PreconditionFailed, b);
            cert.warnings.push_back(b);
        }
    }

    LayeredHypergraph cur = h;
    std::vector<VertexId> labels(h.n());
    for (VertexId x = 0; x < h.n(); ++x) labels[x] = x;
    VertexSet total;

    for (int m = 0; m < s.M && cur.n() > 0; ++m) {
        RoundPrep prep = prepare_round(cur, s, m, false);
        for (const std::string& w : prep.warnings) cert.warnings.push_back(w);
        StepOptions sopt;
        sopt.verify_bouquet = false;
        sopt.diagnostics = opt.diagnostics;

        const double n = static_cast<double>(cur.n());
        const double gamma = s.gamma[m + 1];
        const double t = s.t[m];
        const double e = std::exp(1.0);
        std::optional<StepResult> best;
        RoundSummary best_sum;
        for (int a = 0; a < opt.retries_per_round; ++a) {
            Rng rng(spec.child("round", static_cast<std::uint64_t>(m)).child("attempt", static_cast<std::uint64_t>(a)));
            StepResult r = sample_round(prep, s, m, rng, sopt);
            RoundSummary sum;
            sum.m = m;
            sum.n_before = cur.n();
            sum.c = r.state.c.size();
            sum.d = r.state.d.size();
            sum.b = r.state.b.size();
            sum.nb = r.state.nb.size();
            sum.z = r.state.z.size();
            sum.w = r.state.w.size();
            sum.i = r.state.i.size();
            sum.n_after = r.state.vnext.size();
            sum.completion_edges = r.state.completion_edges;
            sum.attempts = a + 1;
            const double nv = static_cast<double>(sum.n_after);
            sum.window_ok = nv >= s.n_lo[m + 1] && nv <= s.n_hi[m + 1];
            sum.i_ok = static_cast<double>(sum.i) >= (1.0 - s.epsilon) * n * gamma / (e * t);
            sum.z_ok = static_cast<double>(sum.z) <= s.epsilon * gamma * n / (3.0 * e * t);
            const bool good = sum.good();
            if (!best || good || sum.i > best_sum.i) {
                best = std::move(r);
                best_sum = sum;
            }
            if (good) break;
        }
        if (!best_sum.good()) {
            std::ostringstream msg;
            msg << "round " << m << ": no attempt met the good events in " << opt.retries_per_round
                << " tries; kept the attempt with |I|=" << best_sum.i;
            cert.warnings.push_back(msg.str());
        }
        best_sum.attempts = best_sum.good() ? best_sum.attempts : opt.retries_per_round;
        cert.rounds.push_back(best_sum);
        if (opt.observer) opt.observer(*best);

        for (VertexId x : best->state.i) total.push_back(labels[x]);
        std::vector<VertexId> next_labels;
        next_labels.reserve(best->state.next_to_current.size());
        for (VertexId x : best->state.next_to_current) next_labels.push_back(labels[x]);
        labels = std::move(next_labels);
        cur = std::move(best->next);
        if (cur.n() == 0) {
            cert.warnings.push_back("round " + std::to_string(m) + " collapsed: no vertex survives");
            break;
        }
    }
    cert.final_vertices = cur.n();
    cert.set = make_vertex_set(std::move(total));
    IndependenceResult check = is_independent(h, cert.set);
    if (!check.independent)
        throw Error(ErrorKind::Internal, "nibble output is not independent",
                    std::vector<std::vector<VertexId>>{check.witness->vertices()});
    cert.verified = true;
    return cert;
}

}  // namespace hyperind
