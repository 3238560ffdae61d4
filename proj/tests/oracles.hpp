// Exhaustive reference implementations used by the tests. Everything here is
// deliberately naive: plain edge lists, all pairs / triples / quadruples.
#ifndef HYPERIND_TESTS_ORACLES_HPP
#define HYPERIND_TESTS_ORACLES_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <tuple>
#include <vector>

#include "hyperind/core.hpp"

namespace oracle {

using Set = std::vector<std::uint32_t>;

struct FlatEdge {
    int layer;
    Set v;
};

inline std::vector<FlatEdge> flatten(const hyperind::LayeredHypergraph& h) {
    std::vector<FlatEdge> out;
    for (int i = 2; i <= h.k(); ++i)
        for (const auto& e : h.layer(i)) out.push_back({i, e.vertices()});
    return out;
}

inline std::size_t meet(const Set& a, const Set& b) {
    std::size_t c = 0;
    for (auto x : a)
        for (auto y : b)
            if (x == y) ++c;
    return c;
}

inline Set meet_set(const Set& a, const Set& b) {
    Set out;
    for (auto x : a)
        if (std::find(b.begin(), b.end(), x) != b.end()) out.push_back(x);
    std::sort(out.begin(), out.end());
    return out;
}

inline bool has(const Set& s, std::uint32_t x) { return std::find(s.begin(), s.end(), x) != s.end(); }

inline bool contains_all(const Set& big, const Set& small) {
    for (auto x : small)
        if (!has(big, x)) return false;
    return true;
}

inline std::size_t degree(const hyperind::LayeredHypergraph& h, const Set& s, int only_layer = 0) {
    std::size_t c = 0;
    for (const auto& e : flatten(h))
        if ((only_layer == 0 || e.layer == only_layer) && contains_all(e.v, s)) ++c;
    return c;
}

inline void subsets(std::uint32_t n, std::size_t r, const std::function<void(const Set&)>& f) {
    Set cur;
    std::function<void(std::uint32_t)> rec = [&](std::uint32_t from) {
        if (cur.size() == r) {
            f(cur);
            return;
        }
        for (std::uint32_t x = from; x < n; ++x) {
            cur.push_back(x);
            rec(x + 1);
            cur.pop_back();
        }
    };
    rec(0);
}

inline std::pair<std::size_t, std::size_t> max_min(const hyperind::LayeredHypergraph& h, int i, int ell) {
    std::size_t mx = 0, mn = SIZE_MAX;
    subsets(static_cast<std::uint32_t>(h.n()), static_cast<std::size_t>(ell), [&](const Set& s) {
        std::size_t d = degree(h, s, i);
        mx = std::max(mx, d);
        mn = std::min(mn, d);
    });
    if (mn == SIZE_MAX) mn = 0;
    return {mx, mn};
}

inline std::size_t two_cycles(const hyperind::LayeredHypergraph& h, std::size_t ell) {
    auto es = flatten(h);
    std::size_t c = 0;
    for (std::size_t a = 0; a < es.size(); ++a)
        for (std::size_t b = a + 1; b < es.size(); ++b)
            if (meet(es[a].v, es[b].v) == ell) ++c;
    return c;
}

using Triple = std::array<Set, 3>;

inline Triple sorted_triple(Set a, Set b, Set c) {
    Triple t{a, b, c};
    std::sort(t.begin(), t.end());
    return t;
}

inline bool linear_triangle(const Set& a, const Set& b, const Set& c) {
    Set ab = meet_set(a, b), bc = meet_set(b, c), ca = meet_set(c, a);
    if (ab.size() != 1 || bc.size() != 1 || ca.size() != 1) return false;
    return ab[0] != bc[0] && bc[0] != ca[0] && ca[0] != ab[0];
}

/// Unordered triples, with the number of layer-2 members.
inline std::map<Triple, int> linear_three_cycles(const hyperind::LayeredHypergraph& h) {
    auto es = flatten(h);
    std::map<Triple, int> out;
    for (std::size_t a = 0; a < es.size(); ++a)
        for (std::size_t b = a + 1; b < es.size(); ++b)
            for (std::size_t c = b + 1; c < es.size(); ++c)
                if (linear_triangle(es[a].v, es[b].v, es[c].v))
                    out[sorted_triple(es[a].v, es[b].v, es[c].v)] =
                        (es[a].layer == 2) + (es[b].layer == 2) + (es[c].layer == 2);
    return out;
}

using Quad = std::array<Set, 4>;

inline bool clean_cycle(const Set& a, const Set& b, const Set& c, const Set& d) {
    return meet(a, b) > 0 && meet(b, c) > 0 && meet(c, d) > 0 && meet(d, a) > 0 && meet(a, c) == 0 &&
           meet(b, d) == 0;
}

/// Each clean 4-cycle as its edge set; the three cyclic orders of a
/// 4-set are tried separately.
inline std::multiset<Quad> clean_four_cycles(const hyperind::LayeredHypergraph& h) {
    auto es = flatten(h);
    std::multiset<Quad> out;
    const std::size_t m = es.size();
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a + 1; b < m; ++b)
            for (std::size_t c = b + 1; c < m; ++c)
                for (std::size_t d = c + 1; d < m; ++d) {
                    const Set &A = es[a].v, &B = es[b].v, &C = es[c].v, &D = es[d].v;
                    Quad q{A, B, C, D};
                    std::sort(q.begin(), q.end());
                    if (clean_cycle(A, B, C, D)) out.insert(q);
                    if (clean_cycle(A, B, D, C)) out.insert(q);
                    if (clean_cycle(A, C, B, D)) out.insert(q);
                }
    return out;
}

/// Indices 0..4 of the violated BOUQUET properties i)..v).
inline std::set<int> bouquet_violations(const hyperind::LayeredHypergraph& h) {
    auto es = flatten(h);
    std::set<int> bad;
    const std::size_t m = es.size();
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a + 1; b < m; ++b) {
            std::size_t s = meet(es[a].v, es[b].v);
            if (es[a].layer != es[b].layer && s > 1) bad.insert(0);
            if (es[a].layer == es[b].layer && s > 1 && s != static_cast<std::size_t>(es[a].layer - 1))
                bad.insert(1);
        }
    for (const auto& [t, h2] : linear_three_cycles(h))
        if (h2 <= 1) bad.insert(2);
    if (!clean_four_cycles(h).empty()) bad.insert(3);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b)
            for (std::size_t c = 0; c < m; ++c) {
                if (a == b || b == c || a == c) continue;
                if (es[a].layer != 3 || es[b].layer != 3 || es[c].layer != 3) continue;
                if (meet(es[a].v, es[b].v) == 2 && meet(es[b].v, es[c].v) == 2 && meet(es[a].v, es[c].v) == 1)
                    bad.insert(4);
            }
    return bad;
}

/// (min(e1,e3), middle, max(e1,e3)) for every strengthened-v) pattern.
inline std::multiset<Triple> vprime(const hyperind::LayeredHypergraph& h) {
    auto es = flatten(h);
    std::multiset<Triple> out;
    const std::size_t m = es.size();
    for (std::size_t mid = 0; mid < m; ++mid)
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t c = a + 1; c < m; ++c) {
                if (a == mid || c == mid) continue;
                std::size_t s1 = meet(es[a].v, es[mid].v), s2 = meet(es[c].v, es[mid].v);
                if (s1 != s2 || s1 < 2) continue;
                if (meet(es[a].v, es[c].v) + 1 != s1) continue;
                Set lo = std::min(es[a].v, es[c].v), hi = std::max(es[a].v, es[c].v);
                out.insert(Triple{lo, es[mid].v, hi});
            }
    return out;
}

struct LinkPiece {
    int layer;
    Set v;
    friend bool operator<(const LinkPiece& a, const LinkPiece& b) {
        return std::tie(a.layer, a.v) < std::tie(b.layer, b.v);
    }
    friend bool operator==(const LinkPiece& a, const LinkPiece& b) = default;
};

/// Components of the link of x by union-find over all pairs, each sorted.
inline std::set<std::vector<LinkPiece>> link_components(const hyperind::LayeredHypergraph& h, std::uint32_t x) {
    std::vector<LinkPiece> link;
    for (const auto& e : flatten(h))
        if (has(e.v, x)) {
            Set rest;
            for (auto y : e.v)
                if (y != x) rest.push_back(y);
            link.push_back({e.layer, rest});
        }
    std::vector<std::size_t> parent(link.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t a) {
        return parent[a] == a ? a : parent[a] = find(parent[a]);
    };
    for (std::size_t a = 0; a < link.size(); ++a)
        for (std::size_t b = a + 1; b < link.size(); ++b)
            if (meet(link[a].v, link[b].v) > 0) parent[find(a)] = find(b);
    std::map<std::size_t, std::vector<LinkPiece>> groups;
    for (std::size_t a = 0; a < link.size(); ++a) groups[find(a)].push_back(link[a]);
    std::set<std::vector<LinkPiece>> out;
    for (auto& [r, g] : groups) {
        std::sort(g.begin(), g.end());
        out.insert(g);
    }
    return out;
}

enum class Family { Clique, Sunflower, NotApplicable };

/// Sunflower: a common (i-1)-set in every member (or the single edge).
/// Clique: all members are i-subsets of one (i+1)-set.
inline Family classify(const std::vector<Set>& f, Set* core = nullptr) {
    const std::size_t i = f[0].size();
    for (const auto& e : f)
        if (e.size() != i) return Family::NotApplicable;
    if (f.size() == 1) {
        if (core) *core = f[0];
        return Family::Sunflower;
    }
    std::vector<std::uint32_t> firsts = f[0];
    bool found = false;
    for (std::size_t drop = 0; drop < i && !found; ++drop) {
        Set s;
        for (std::size_t t = 0; t < i; ++t)
            if (t != drop) s.push_back(firsts[t]);
        bool all = true;
        for (const auto& e : f) all = all && contains_all(e, s);
        if (all) {
            found = true;
            if (core) *core = s;
        }
    }
    if (found) return Family::Sunflower;
    std::set<std::uint32_t> u;
    for (const auto& e : f) u.insert(e.begin(), e.end());
    return u.size() == i + 1 ? Family::Clique : Family::NotApplicable;
}

/// Γ of layer i: all pairs x ≠ y and all (i-1)-sets avoiding both.
inline std::size_t gamma(const hyperind::LayeredHypergraph& h, int i) {
    std::set<Set> edges;
    for (const auto& e : h.layer(i)) edges.insert(e.vertices());
    const auto n = static_cast<std::uint32_t>(h.n());
    std::size_t best = 0;
    for (std::uint32_t x = 0; x < n; ++x)
        for (std::uint32_t y = x + 1; y < n; ++y) {
            std::size_t c = 0;
            subsets(n, static_cast<std::size_t>(i - 1), [&](const Set& s) {
                if (has(s, x) || has(s, y)) return;
                Set a = s, b = s;
                a.push_back(x);
                b.push_back(y);
                std::sort(a.begin(), a.end());
                std::sort(b.begin(), b.end());
                if (edges.count(a) && edges.count(b)) ++c;
            });
            best = std::max(best, c);
        }
    return best;
}

inline bool independent(const hyperind::LayeredHypergraph& h, const Set& s) {
    for (const auto& e : flatten(h))
        if (contains_all(s, e.v)) return false;
    return true;
}

/// Exact α by scanning every vertex subset; n <= 24.
inline std::size_t alpha(const hyperind::LayeredHypergraph& h) {
    std::vector<std::uint32_t> masks;
    for (const auto& e : flatten(h)) {
        std::uint32_t m = 0;
        for (auto x : e.v) m |= 1u << x;
        masks.push_back(m);
    }
    const std::uint32_t n = static_cast<std::uint32_t>(h.n());
    std::size_t best = 0;
    for (std::uint32_t s = 0; s < (1u << n); ++s) {
        bool ok = true;
        for (auto m : masks)
            if ((s & m) == m) {
                ok = false;
                break;
            }
        if (ok) best = std::max<std::size_t>(best, static_cast<std::size_t>(__builtin_popcount(s)));
    }
    return best;
}

/// Closed neighbourhood of S iterated r times.
inline Set neighborhood(const hyperind::LayeredHypergraph& h, Set s, int r) {
    auto es = flatten(h);
    for (int step = 0; step < r; ++step) {
        std::set<std::uint32_t> next(s.begin(), s.end());
        for (const auto& e : es)
            for (auto x : s)
                if (has(e.v, x)) next.insert(e.v.begin(), e.v.end());
        s.assign(next.begin(), next.end());
    }
    return s;
}

/// Random layered hypergraph with layers 2..k, edges drawn around a few hub
/// sets so that cycles and shared subsets actually occur.
inline hyperind::LayeredHypergraph random_layered(std::mt19937_64& g, std::size_t n, int k,
                                                  std::size_t max_edges) {
    hyperind::LayeredHypergraph h(n, k);
    std::uniform_int_distribution<std::size_t> count(0, max_edges);
    const std::size_t target = count(g);
    std::uniform_int_distribution<int> layer(2, k);
    std::uniform_int_distribution<std::uint32_t> vert(0, static_cast<std::uint32_t>(n - 1));
    std::vector<Set> seen;
    for (std::size_t tries = 0; h.num_edges() < target && tries < 20 * max_edges + 20; ++tries) {
        int i = layer(g);
        if (static_cast<std::size_t>(i) > n) continue;
        std::set<std::uint32_t> e;
        if (!seen.empty() && g() % 2 == 0) {
            const Set& base = seen[g() % seen.size()];
            std::size_t keep = g() % (base.size() + 1);
            for (std::size_t t = 0; t < keep && e.size() < static_cast<std::size_t>(i); ++t)
                e.insert(base[g() % base.size()]);
        }
        while (e.size() < static_cast<std::size_t>(i)) e.insert(vert(g));
        Set v(e.begin(), e.end());
        seen.push_back(v);
        h.add_edge(hyperind::Edge(v));
    }
    return h;
}

}  // namespace oracle

#endif
