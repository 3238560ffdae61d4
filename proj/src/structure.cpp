#include "hyperind/structure.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace hyperind {

namespace {

std::uint64_t pair_key(VertexId a, VertexId b) {
    if (a > b) std::swap(a, b);
    return (static_cast<std::uint64_t>(a) << 32) | b;
}

using PairIndex = std::unordered_map<std::uint64_t, std::vector<EdgeRef>>;

PairIndex build_pair_index(const LayeredHypergraph& h) {
    PairIndex idx;
    h.for_each_edge([&](EdgeRef r, const Edge& e) {
        for (std::size_t a = 0; a < e.size(); ++a)
            for (std::size_t b = a + 1; b < e.size(); ++b) idx[pair_key(e[a], e[b])].push_back(r);
    });
    return idx;
}

const std::vector<EdgeRef>& bucket(const PairIndex& idx, VertexId a, VertexId b) {
    static const std::vector<EdgeRef> empty;
    auto it = idx.find(pair_key(a, b));
    return it == idx.end() ? empty : it->second;
}

template <class F>
void for_each_ref(const LayeredHypergraph& h, F&& f) {
    for (int i = 2; i <= h.k(); ++i)
        for (std::uint32_t j = 0; j < h.layer(i).size(); ++j)
            if (!f(EdgeRef{i, j})) return;
}

bool disjoint_from_mask(const Edge& e, const VertexMask& mask) {
    for (VertexId x : e)
        if (mask[x]) return false;
    return true;
}

std::vector<EdgeRef> edges_through(const LayeredHypergraph& h, const Edge& e, const EdgeRef* skip) {
    std::vector<EdgeRef> out;
    for (VertexId v : e)
        for (EdgeRef r : h.incident(v))
            if (!skip || r != *skip) out.push_back(r);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Edge> edges_of(const LayeredHypergraph& h, std::initializer_list<EdgeRef> refs) {
    std::vector<Edge> out;
    for (EdgeRef r : refs) out.push_back(h.edge(r));
    return out;
}

}  // namespace

const char* to_string(CycleKind kind) {
    switch (kind) {
        case CycleKind::Two: return "two";
        case CycleKind::LinearThree: return "linear3";
        case CycleKind::CleanFour: return "clean4";
    }
    return "?";
}

const char* to_string(BouquetProperty p) {
    switch (p) {
        case BouquetProperty::CrossLayer: return "i";
        case BouquetProperty::WithinLayer: return "ii";
        case BouquetProperty::LinearThree: return "iii";
        case BouquetProperty::CleanFour: return "iv";
        case BouquetProperty::TriplePattern: return "v";
    }
    return "?";
}

void for_each_two_cycle(const LayeredHypergraph& h, int ell, const PairVisitor& visit) {
    if (ell < 2) throw Error(ErrorKind::InvalidArguments, "two-cycles need ell >= 2");
    std::unordered_map<Edge, std::vector<EdgeRef>, EdgeHash> index;
    h.for_each_edge([&](EdgeRef r, const Edge& e) {
        if (static_cast<int>(e.size()) < ell) return;
        for_each_subset(e.vertices(), static_cast<std::size_t>(ell),
                        [&](const std::vector<VertexId>& s) { index[Edge::from_sorted(s)].push_back(r); });
    });
    bool go = true;
    for_each_ref(h, [&](EdgeRef er) {
        const Edge& e = h.edge(er);
        if (static_cast<int>(e.size()) < ell) return true;
        for_each_subset(e.vertices(), static_cast<std::size_t>(ell), [&](const std::vector<VertexId>& s) {
            if (!go) return;
            for (EdgeRef fr : index[Edge::from_sorted(s)]) {
                if (!(er < fr)) continue;
                if (static_cast<int>(intersection_size(e, h.edge(fr))) != ell) continue;
                if (!visit(er, fr)) {
                    go = false;
                    return;
                }
            }
        });
        return go;
    });
}

void for_each_linear_three_cycle(const LayeredHypergraph& h, const TripleVisitor& visit) {
    for_each_ref(h, [&](EdgeRef r1) {
        const Edge& e1 = h.edge(r1);
        for (VertexId v : e1)
            for (EdgeRef r2 : h.incident(v)) {
                if (!(r1 < r2)) continue;
                const Edge& e2 = h.edge(r2);
                if (intersection_size(e1, e2) != 1) continue;
                for (VertexId a : e1) {
                    if (a == v) continue;
                    for (VertexId b : e2) {
                        if (b == v) continue;
                        const bool a_short = h.incident(a).size() <= h.incident(b).size();
                        const VertexId other = a_short ? b : a;
                        for (EdgeRef r3 : h.incident(a_short ? a : b)) {
                            if (!(r2 < r3)) continue;
                            const Edge& e3 = h.edge(r3);
                            if (!e3.contains(other)) continue;
                            if (intersection_size(e3, e1) != 1 || intersection_size(e3, e2) != 1) continue;
                            if (!visit({r1, r2, r3})) return false;
                        }
                    }
                }
            }
        return true;
    });
}

void for_each_clean_four_cycle(const LayeredHypergraph& h, const QuadVisitor& visit) {
    VertexMask in_e1(h.n());
    std::vector<std::pair<EdgeRef, EdgeRef>> wedges;  // (e3, e2)
    for_each_ref(h, [&](EdgeRef r1) {
        const Edge& e1 = h.edge(r1);
        for (VertexId x : e1) in_e1.set(x);
        std::vector<EdgeRef> nbrs;
        for (VertexId v : e1)
            for (EdgeRef r : h.incident(v))
                if (r1 < r) nbrs.push_back(r);
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
        wedges.clear();
        for (EdgeRef r2 : nbrs)
            for (VertexId u : h.edge(r2)) {
                if (in_e1[u]) continue;
                for (EdgeRef r3 : h.incident(u))
                    if (r1 < r3 && disjoint_from_mask(h.edge(r3), in_e1)) wedges.emplace_back(r3, r2);
            }
        for (VertexId x : e1) in_e1.set(x, false);
        std::sort(wedges.begin(), wedges.end());
        wedges.erase(std::unique(wedges.begin(), wedges.end()), wedges.end());
        for (std::size_t g = 0; g < wedges.size();) {
            std::size_t end = g;
            while (end < wedges.size() && wedges[end].first == wedges[g].first) ++end;
            for (std::size_t a = g; a < end; ++a)
                for (std::size_t b = a + 1; b < end; ++b) {
                    EdgeRef r2 = wedges[a].second, r4 = wedges[b].second;
                    if (intersection_size(h.edge(r2), h.edge(r4)) != 0) continue;
                    if (!visit({r1, r2, wedges[g].first, r4})) return false;
                }
            g = end;
        }
        return true;
    });
}

CycleWitness make_two_cycle_witness(const LayeredHypergraph& h, EdgeRef a, EdgeRef b) {
    CycleWitness w;
    w.kind = CycleKind::Two;
    w.refs = {a, b};
    w.edges = edges_of(h, {a, b});
    w.meeting = intersection(w.edges[0], w.edges[1]).vertices();
    w.h2_edges = (a.layer == 2) + (b.layer == 2);
    return w;
}

namespace {

CycleWitness make_cyclic_witness(const LayeredHypergraph& h, CycleKind kind, std::vector<EdgeRef> refs) {
    CycleWitness w;
    w.kind = kind;
    w.refs = std::move(refs);
    for (EdgeRef r : w.refs) {
        w.edges.push_back(h.edge(r));
        w.h2_edges += (r.layer == 2);
    }
    for (std::size_t j = 0; j < w.edges.size(); ++j) {
        Edge meet = intersection(w.edges[j], w.edges[(j + 1) % w.edges.size()]);
        w.meeting.push_back(meet.empty() ? 0 : meet[0]);
    }
    return w;
}

}  // namespace

CycleWitness make_three_cycle_witness(const LayeredHypergraph& h, const std::array<EdgeRef, 3>& t) {
    return make_cyclic_witness(h, CycleKind::LinearThree, {t.begin(), t.end()});
}

CycleWitness make_four_cycle_witness(const LayeredHypergraph& h, const std::array<EdgeRef, 4>& q) {
    return make_cyclic_witness(h, CycleKind::CleanFour, {q.begin(), q.end()});
}

CycleReport count_two_cycles(const LayeredHypergraph& h, int ell, std::size_t limit) {
    if (ell < 2 || ell > h.k() - 1)
        throw Error(ErrorKind::InvalidArguments, "two-cycles need 2 <= ell <= k-1");
    CycleReport rep;
    for_each_two_cycle(h, ell, [&](EdgeRef a, EdgeRef b) {
        if (rep.witnesses.size() < limit) rep.witnesses.push_back(make_two_cycle_witness(h, a, b));
        ++rep.count;
        return true;
    });
    return rep;
}

CycleReport find_linear_three_cycles(const LayeredHypergraph& h, std::size_t limit) {
    CycleReport rep;
    for_each_linear_three_cycle(h, [&](const std::array<EdgeRef, 3>& t) {
        if (rep.witnesses.size() < limit) rep.witnesses.push_back(make_three_cycle_witness(h, t));
        ++rep.count;
        return true;
    });
    return rep;
}

CycleReport find_clean_four_cycles(const LayeredHypergraph& h, std::size_t limit) {
    CycleReport rep;
    for_each_clean_four_cycle(h, [&](const std::array<EdgeRef, 4>& q) {
        if (rep.witnesses.size() < limit) rep.witnesses.push_back(make_four_cycle_witness(h, q));
        ++rep.count;
        return true;
    });
    return rep;
}

BouquetReport check_bouquet(const LayeredHypergraph& h) {
    BouquetReport rep;
    const PairIndex pairs = build_pair_index(h);

    std::optional<BouquetViolation> cross, within;
    for_each_ref(h, [&](EdgeRef er) {
        const Edge& e = h.edge(er);
        for (std::size_t a = 0; a < e.size(); ++a)
            for (std::size_t b = a + 1; b < e.size(); ++b)
                for (EdgeRef fr : bucket(pairs, e[a], e[b])) {
                    if (!(er < fr)) continue;
                    const Edge& f = h.edge(fr);
                    Edge meet = intersection(e, f);
                    if (meet[0] != e[a] || meet[1] != e[b]) continue;  // handle each pair once
                    const int s = static_cast<int>(meet.size());
                    if (er.layer != fr.layer) {
                        if (!cross) cross = BouquetViolation{BouquetProperty::CrossLayer, {e, f}};
                    } else if (s <= er.layer - 2) {
                        if (!within) within = BouquetViolation{BouquetProperty::WithinLayer, {e, f}};
                    }
                }
        return !(cross && within);
    });
    if (cross) rep.violations.push_back(*cross);
    if (within) rep.violations.push_back(*within);

    for_each_linear_three_cycle(h, [&](const std::array<EdgeRef, 3>& t) {
        int h2 = 0;
        for (EdgeRef r : t) h2 += (r.layer == 2);
        if (h2 > 1) return true;
        rep.violations.push_back({BouquetProperty::LinearThree, edges_of(h, {t[0], t[1], t[2]})});
        return false;
    });

    for_each_clean_four_cycle(h, [&](const std::array<EdgeRef, 4>& q) {
        rep.violations.push_back({BouquetProperty::CleanFour, edges_of(h, {q[0], q[1], q[2], q[3]})});
        return false;
    });

    bool found_v = false;
    for (std::uint32_t j = 0; j < h.layer(3).size() && !found_v; ++j) {
        const EdgeRef mid{3, j};
        const Edge& e2 = h.edge(mid);
        std::vector<EdgeRef> around;
        for (std::size_t a = 0; a < 3; ++a)
            for (std::size_t b = a + 1; b < 3; ++b)
                for (EdgeRef fr : bucket(pairs, e2[a], e2[b]))
                    if (fr.layer == 3 && fr != mid) around.push_back(fr);
        std::sort(around.begin(), around.end());
        around.erase(std::unique(around.begin(), around.end()), around.end());
        for (std::size_t a = 0; a < around.size() && !found_v; ++a)
            for (std::size_t b = a + 1; b < around.size(); ++b)
                if (intersection_size(h.edge(around[a]), h.edge(around[b])) == 1) {
                    rep.violations.push_back(
                        {BouquetProperty::TriplePattern, edges_of(h, {around[a], mid, around[b]})});
                    found_v = true;
                    break;
                }
    }
    return rep;
}

std::optional<BouquetViolation> bouquet_violation_adding(const LayeredHypergraph& h, const Edge& f) {
    const int fl = static_cast<int>(f.size());
    if (fl < 2 || fl > h.k()) throw Error(ErrorKind::InvalidUniformity, "edge size outside [2, k]");
    for (VertexId x : f)
        if (x >= h.n()) throw Error(ErrorKind::InvalidVertex, "vertex " + std::to_string(x));
    if (h.contains(f)) return std::nullopt;

    // i, ii
    for (VertexId u : f)
        for (EdgeRef gr : h.incident(u)) {
            const Edge& g = h.edge(gr);
            Edge meet = intersection(f, g);
            if (meet[0] != u || meet.size() < 2) continue;
            if (gr.layer != fl) return BouquetViolation{BouquetProperty::CrossLayer, {f, g}};
            if (static_cast<int>(meet.size()) <= fl - 2)
                return BouquetViolation{BouquetProperty::WithinLayer, {f, g}};
        }

    // iii, with f in the role of e1
    for (VertexId v : f)
        for (EdgeRef r2 : h.incident(v)) {
            const Edge& e2 = h.edge(r2);
            if (intersection_size(f, e2) != 1) continue;
            for (VertexId a : f) {
                if (a == v) continue;
                for (VertexId b : e2) {
                    if (b == v) continue;
                    for (EdgeRef r3 : h.incident(a)) {
                        if (r3 == r2) continue;
                        const Edge& e3 = h.edge(r3);
                        if (!e3.contains(b)) continue;
                        if (intersection_size(e3, f) != 1 || intersection_size(e3, e2) != 1) continue;
                        const int h2 = (fl == 2) + (r2.layer == 2) + (r3.layer == 2);
                        if (h2 <= 1) return BouquetViolation{BouquetProperty::LinearThree, {f, e2, e3}};
                    }
                }
            }
        }

    // iv, with f in the role of e1
    {
        VertexMask in_f(h.n(), f.vertices());
        const std::vector<EdgeRef> nbrs = edges_through(h, f, nullptr);
        std::vector<std::pair<EdgeRef, EdgeRef>> wedges;
        for (EdgeRef r2 : nbrs)
            for (VertexId u : h.edge(r2)) {
                if (in_f[u]) continue;
                for (EdgeRef r3 : h.incident(u))
                    if (disjoint_from_mask(h.edge(r3), in_f)) wedges.emplace_back(r3, r2);
            }
        std::sort(wedges.begin(), wedges.end());
        wedges.erase(std::unique(wedges.begin(), wedges.end()), wedges.end());
        for (std::size_t g = 0; g < wedges.size();) {
            std::size_t end = g;
            while (end < wedges.size() && wedges[end].first == wedges[g].first) ++end;
            for (std::size_t a = g; a < end; ++a)
                for (std::size_t b = a + 1; b < end; ++b) {
                    const Edge& e2 = h.edge(wedges[a].second);
                    const Edge& e4 = h.edge(wedges[b].second);
                    if (intersection_size(e2, e4) == 0)
                        return BouquetViolation{BouquetProperty::CleanFour,
                                                {f, e2, h.edge(wedges[g].first), e4}};
                }
            g = end;
        }
    }

    // v
    if (fl == 3) {
        std::vector<EdgeRef> share2;
        for (EdgeRef r : edges_through(h, f, nullptr))
            if (r.layer == 3 && intersection_size(f, h.edge(r)) == 2) share2.push_back(r);
        for (std::size_t a = 0; a < share2.size(); ++a)
            for (std::size_t b = a + 1; b < share2.size(); ++b)
                if (intersection_size(h.edge(share2[a]), h.edge(share2[b])) == 1)
                    return BouquetViolation{BouquetProperty::TriplePattern,
                                            {h.edge(share2[a]), f, h.edge(share2[b])}};
        for (EdgeRef mid : share2) {
            const Edge& g = h.edge(mid);
            for (EdgeRef r3 : edges_through(h, g, &mid)) {
                if (r3.layer != 3) continue;
                const Edge& e3 = h.edge(r3);
                if (intersection_size(g, e3) == 2 && intersection_size(f, e3) == 1)
                    return BouquetViolation{BouquetProperty::TriplePattern, {f, g, e3}};
            }
        }
    }
    return std::nullopt;
}

std::vector<std::array<Edge, 3>> check_property_vprime(const LayeredHypergraph& h, std::size_t limit) {
    std::vector<std::array<Edge, 3>> out;
    const PairIndex pairs = build_pair_index(h);
    for_each_ref(h, [&](EdgeRef mid) {
        const Edge& e2 = h.edge(mid);
        std::vector<EdgeRef> around;
        for (std::size_t a = 0; a < e2.size(); ++a)
            for (std::size_t b = a + 1; b < e2.size(); ++b)
                for (EdgeRef fr : bucket(pairs, e2[a], e2[b]))
                    if (fr != mid) around.push_back(fr);
        std::sort(around.begin(), around.end());
        around.erase(std::unique(around.begin(), around.end()), around.end());
        std::vector<std::pair<std::size_t, EdgeRef>> by_size;
        for (EdgeRef r : around) by_size.emplace_back(intersection_size(e2, h.edge(r)), r);
        std::sort(by_size.begin(), by_size.end());
        for (std::size_t g = 0; g < by_size.size();) {
            std::size_t end = g;
            while (end < by_size.size() && by_size[end].first == by_size[g].first) ++end;
            const std::size_t s = by_size[g].first;
            for (std::size_t a = g; a < end; ++a)
                for (std::size_t b = a + 1; b < end; ++b) {
                    const Edge& e1 = h.edge(by_size[a].second);
                    const Edge& e3 = h.edge(by_size[b].second);
                    if (intersection_size(e1, e3) != s - 1) continue;
                    out.push_back({e1, e2, e3});
                    if (out.size() >= limit) return false;
                }
            g = end;
        }
        return true;
    });
    return out;
}

std::vector<LinkComponent> link_components(const LayeredHypergraph& h, VertexId x) {
    const std::vector<LinkEdge> entries = link(h, x);
    std::vector<std::size_t> parent(entries.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    std::unordered_map<VertexId, std::size_t> first_at;
    for (std::size_t j = 0; j < entries.size(); ++j)
        for (VertexId y : entries[j].vertices) {
            auto [it, fresh] = first_at.try_emplace(y, j);
            if (!fresh) {
                std::size_t a = find(it->second), b = find(j);
                if (a != b) parent[std::max(a, b)] = std::min(a, b);
            }
        }
    std::vector<LinkComponent> comps;
    std::unordered_map<std::size_t, std::size_t> slot;
    for (std::size_t j = 0; j < entries.size(); ++j) {
        auto [it, fresh] = slot.try_emplace(find(j), comps.size());
        if (fresh) comps.emplace_back();
        LinkComponent& c = comps[it->second];
        c.members.push_back(entries[j]);
        c.vertices = set_union(c.vertices, entries[j].vertices);
    }
    for (LinkComponent& c : comps) {
        c.layer = c.members.front().layer;
        for (const LinkEdge& m : c.members)
            if (m.layer != *c.layer) c.layer.reset();
    }
    return comps;
}

std::optional<std::string> link_component_bound_violation(const LayeredHypergraph& h, VertexId x) {
    std::unordered_map<int, std::size_t> delta;
    for (const LinkComponent& c : link_components(h, x)) {
        if (c.members.size() < 2) continue;
        if (!c.layer) return "component of the link of " + std::to_string(x) + " mixes layers";
        const int i = *c.layer;
        if (!delta.count(i)) delta[i] = max_min_degree(h, i, i - 1).max;
        if (c.vertices.size() > static_cast<std::size_t>(i) && c.members.size() > delta[i])
            return "component of the link of " + std::to_string(x) + " in layer " + std::to_string(i) +
                   " has " + std::to_string(c.members.size()) + " members on " +
                   std::to_string(c.vertices.size()) + " vertices";
    }
    return std::nullopt;
}

FamilyClass classify_intersecting_family(const std::vector<Edge>& family) {
    if (family.empty()) throw Error(ErrorKind::InvalidArguments, "empty family");
    FamilyClass out;
    const std::size_t i = family[0].size();
    out.uniformity = static_cast<int>(i);
    if (family.size() == 1) {
        out.kind = FamilyClass::Kind::Sunflower;
        out.core = family[0];
        return out;
    }
    for (const Edge& e : family)
        if (e.size() != i) {
            out.witness = std::make_pair(family[0], e);
            return out;
        }
    for (std::size_t a = 0; a < family.size(); ++a)
        for (std::size_t b = a + 1; b < family.size(); ++b)
            if (intersection_size(family[a], family[b]) + 1 != i) {
                out.witness = std::make_pair(family[a], family[b]);
                return out;
            }
    Edge common = family[0];
    std::vector<VertexId> all = family[0].vertices();
    for (const Edge& e : family) {
        common = intersection(common, e);
        all = set_union(all, e.vertices());
    }
    if (common.size() + 1 == i) {
        out.kind = FamilyClass::Kind::Sunflower;
        out.core = common;
    } else if (all.size() == i + 1) {
        out.kind = FamilyClass::Kind::Clique;
    } else {
        out.witness = std::make_pair(family[0], family[1]);
    }
    return out;
}

std::size_t common_neighbor_max(const LayeredHypergraph& h, int layer) {
    if (layer < 2 || layer > h.k()) throw Error(ErrorKind::InvalidArguments, "layer outside [2, k]");
    std::unordered_map<Edge, std::vector<VertexId>, EdgeHash> apexes;
    for (const Edge& e : h.layer(layer))
        for (std::size_t j = 0; j < e.size(); ++j) {
            std::vector<VertexId> rest;
            for (std::size_t t = 0; t < e.size(); ++t)
                if (t != j) rest.push_back(e[t]);
            apexes[Edge::from_sorted(std::move(rest))].push_back(e[j]);
        }
    std::unordered_map<std::uint64_t, std::size_t> shared;
    std::size_t best = 0;
    for (const auto& [s, xs] : apexes)
        for (std::size_t a = 0; a < xs.size(); ++a)
            for (std::size_t b = a + 1; b < xs.size(); ++b)
                best = std::max(best, ++shared[pair_key(xs[a], xs[b])]);
    return best;
}

}  // namespace hyperind
