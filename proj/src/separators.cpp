#include "t1p/separators.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace t1p {

std::string to_string(SeparatorKind k) {
    switch (k) {
        case SeparatorKind::SepCycle3: return "SepCycle3";
        case SeparatorKind::SepEdge: return "SepEdge";
        case SeparatorKind::SepTriple: return "SepTriple";
        case SeparatorKind::K5Triple: return "K5Triple";
        case SeparatorKind::SepCycle4: return "SepCycle4";
        case SeparatorKind::UniqueQuadruple: return "UniqueQuadruple";
        case SeparatorKind::SmallPartQuadruple: return "SmallPartQuadruple";
        case SeparatorKind::MultiBridgeQuadruple: return "MultiBridgeQuadruple";
        case SeparatorKind::BridgeIndepTriangle: return "BridgeIndepTriangle";
        case SeparatorKind::SingularTriangle: return "SingularTriangle";
        case SeparatorKind::K5Destroyer: return "K5Destroyer";
        case SeparatorKind::AmbiguousQuadruple: return "AmbiguousQuadruple";
        case SeparatorKind::AmbiguousTriangle: return "AmbiguousTriangle";
        case SeparatorKind::SepCycle5: return "SepCycle5";
        case SeparatorKind::Tripod: return "Tripod";
        case SeparatorKind::StrongTripod: return "StrongTripod";
        case SeparatorKind::AmbiguousTripod: return "AmbiguousTripod";
    }
    return "?";
}

const std::vector<SeparatorKind>& separator_order() {
    static const std::vector<SeparatorKind> order{
        SeparatorKind::SepCycle3,          SeparatorKind::SepEdge,
        SeparatorKind::SepTriple,          SeparatorKind::K5Triple,
        SeparatorKind::SepCycle4,          SeparatorKind::UniqueQuadruple,
        SeparatorKind::SmallPartQuadruple, SeparatorKind::MultiBridgeQuadruple,
        SeparatorKind::BridgeIndepTriangle, SeparatorKind::SingularTriangle,
        SeparatorKind::K5Destroyer,        SeparatorKind::AmbiguousQuadruple,
        SeparatorKind::AmbiguousTriangle,  SeparatorKind::SepCycle5,
        SeparatorKind::Tripod,             SeparatorKind::StrongTripod,
        SeparatorKind::AmbiguousTripod,
    };
    return order;
}

namespace {

VertexSet sorted_set(std::vector<Vertex> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

EdgeSet cycle_edges(const Cycle& c) {
    EdgeSet out;
    for (std::size_t i = 0; i < c.size(); ++i) out.push_back(make_edge(c[i], c[(i + 1) % c.size()]));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Cycle> cycles_sorted(const Graph& g, int k) {
    auto cs = list_induced_cycles(g, k);
    std::sort(cs.begin(), cs.end());
    return cs;
}

EdgeSet union_of(const EdgeSet& a, const EdgeSet& b) {
    EdgeSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

GraphDelta start(SeparatorKind kind, Cycle carrier) {
    GraphDelta d;
    d.instance.kind = kind;
    d.instance.carrier = std::move(carrier);
    return d;
}

void mark(GraphDelta& d, const EdgeSet& es) { d.marked_edges.insert(d.marked_edges.end(), es.begin(), es.end()); }

void add_faces(GraphDelta& d, Edge e, Edge partner) {
    d.required_faces.push_back({partner.u, partner.v, e.u});
    d.required_faces.push_back({partner.u, partner.v, e.v});
}

// e is deleted and recorded as crossing `partner`; the partner and the kite are marked.
void remove_with_partner(GraphDelta& d, Edge e, Edge partner, EdgeSet alternatives = {}) {
    d.removed_edges.push_back({e, partner, std::move(alternatives)});
    d.marked_edges.push_back(partner);
    for (Vertex a : {partner.u, partner.v})
        for (Vertex x : {e.u, e.v}) d.marked_edges.push_back(make_edge(a, x));
    add_faces(d, e, partner);
}

GraphDelta finish(GraphDelta d) {
    auto& m = d.marked_edges;
    std::sort(m.begin(), m.end());
    m.erase(std::unique(m.begin(), m.end()), m.end());
    for (const auto& r : d.removed_edges) m.erase(std::remove(m.begin(), m.end(), r.edge), m.end());
    for (Cycle& f : d.required_faces) std::sort(f.begin(), f.end());
    std::sort(d.required_faces.begin(), d.required_faces.end());
    d.required_faces.erase(std::unique(d.required_faces.begin(), d.required_faces.end()), d.required_faces.end());
    return d;
}

GraphDelta rejected(SeparatorKind kind, Cycle carrier, std::string why) {
    GraphDelta d = start(kind, std::move(carrier));
    d.reject = std::move(why);
    return d;
}

// True when some 5-clique of h contains both ends of e.
bool in_k5(const Graph& h, Edge e) {
    VertexSet common;
    std::set_intersection(h.neighbors(e.u).begin(), h.neighbors(e.u).end(), h.neighbors(e.v).begin(),
                          h.neighbors(e.v).end(), std::back_inserter(common));
    for (std::size_t i = 0; i < common.size(); ++i)
        for (std::size_t j = i + 1; j < common.size(); ++j) {
            if (!h.has_edge(common[i], common[j])) continue;
            for (std::size_t l = j + 1; l < common.size(); ++l)
                if (h.has_edge(common[i], common[l]) && h.has_edge(common[j], common[l])) return true;
        }
    return false;
}

// Chords triangulating the outer side of C in one side graph; prefers a choice that
// does not close a 5-clique.
EdgeSet choose_chords(const Graph& g, const Cycle& c, const VertexSet& interior) {
    const int k = static_cast<int>(c.size());
    if (k == 3) return {};
    VertexSet keep = interior;
    keep.insert(keep.end(), c.begin(), c.end());
    Graph side = g.induced(sorted_set(keep));
    std::vector<EdgeSet> options;
    for (int apex = 0; apex < k; ++apex) {
        EdgeSet ch;
        for (int j = 2; j <= k - 2; ++j) ch.push_back(make_edge(c[apex], c[(apex + j) % k]));
        std::sort(ch.begin(), ch.end());
        if (std::find(options.begin(), options.end(), ch) == options.end()) options.push_back(ch);
    }
    for (const EdgeSet& ch : options) {
        Graph h = side;
        for (Edge e : ch) h.add_edge(e.u, e.v);
        bool bad = false;
        for (Edge e : ch) bad = bad || in_k5(h, e);
        if (!bad) return ch;
    }
    return options.front();
}

std::optional<Edge> unique_owner(const std::vector<Edge>& owners, const CrossableIndex& idx, Edge b) {
    std::optional<Edge> out;
    for (Edge e : owners)
        if (idx.contains(e, b)) {
            if (out) return std::nullopt;
            out = e;
        }
    return out;
}

// The two-star shortcut when g is one of the variants, otherwise an exhaustive
// branch on `fallback`.
GraphDelta family_or_branch(const Graph& g, const ReductionContext& ctx, SeparatorKind kind, Cycle carrier,
                            std::vector<TwoStarVariant> variants, std::optional<Edge> fallback) {
    static const std::vector<Cycle> none;
    const auto& faces = ctx.required_faces ? *ctx.required_faces : none;
    for (TwoStarVariant v : variants)
        if (auto fr = recognize_two_star_family(g, faces, v)) {
            GraphDelta d = family_delta(g, *fr, kind);
            d.instance.carrier = carrier;
            return d;
        }
    if (!fallback) return rejected(kind, std::move(carrier), "no crossable edge left in " + to_string(kind));
    GraphDelta d = branch_on(g, *fallback, kind);
    d.instance.carrier = std::move(carrier);
    return d;
}

}  // namespace

EdgeSet k4_partners(const Graph& g, Edge e) {
    EdgeSet out;
    if (g.marked(e)) return out;
    VertexSet common;
    std::set_intersection(g.neighbors(e.u).begin(), g.neighbors(e.u).end(), g.neighbors(e.v).begin(),
                          g.neighbors(e.v).end(), std::back_inserter(common));
    for (std::size_t i = 0; i < common.size(); ++i)
        for (std::size_t j = i + 1; j < common.size(); ++j)
            if (g.has_edge(common[i], common[j]) && !g.marked({common[i], common[j]}))
                out.push_back({common[i], common[j]});
    return out;
}

GraphDelta branch_on(const Graph& g, Edge e, SeparatorKind kind) {
    GraphDelta d = start(kind, {e.u, e.v});
    BranchSpec b;
    b.edge = e;
    b.options.push_back(std::nullopt);
    for (Edge f : k4_partners(g, e)) b.options.push_back(f);
    d.branch = std::move(b);
    return d;
}

GraphDelta family_delta(const Graph& g, const FamilyResult& fr, SeparatorKind kind) {
    GraphDelta d = start(kind, {});
    FamilyShortcut fs;
    fs.variant = fr.variant;
    fs.k = fr.k;
    fs.count = fr.embeddings.size();
    if (fs.count == 0) {
        d.reject = "two-star family (" + to_string(fr.variant) + ") has no embedding respecting the marks";
        d.family = fs;
        return d;
    }
    fs.chosen = fr.embeddings.front();
    for (const auto& [a, b] : fs.chosen) d.removed_edges.push_back({b, a, {}});
    Edge carrier = fs.chosen.front().first;
    for (Edge e : g.edges())
        if (!g.marked(e)) {
            carrier = e;
            break;
        }
    d.label_assignments.push_back({carrier, fs.count});
    d.family = fs;
    return finish(std::move(d));
}

std::optional<GraphDelta> resolve_separating_cycle(const Graph& g, int k) {
    if (k < 3 || k > 5) throw GraphError("separating cycles have length 3, 4 or 5");
    const SeparatorKind kind =
        k == 3 ? SeparatorKind::SepCycle3 : k == 4 ? SeparatorKind::SepCycle4 : SeparatorKind::SepCycle5;
    for (const Cycle& c : cycles_sorted(g, k)) {
        VertexSet s = sorted_set(c);
        auto parts = components_after_removal(g, s, {});
        if (parts.size() < 2) continue;
        if (parts.size() > 2)
            return rejected(kind, c, "separating " + std::to_string(k) + "-cycle with " +
                                         std::to_string(parts.size()) + " parts");
        GraphDelta d = start(kind, c);
        d.instance.parts = parts;
        mark(d, cycle_edges(c));
        SplitSpec sp;
        sp.cycle = c;
        sp.sides = parts;
        for (const VertexSet& side : parts) sp.chords.push_back(choose_chords(g, c, side));
        d.split = std::move(sp);
        return finish(std::move(d));
    }
    return std::nullopt;
}

std::optional<GraphDelta> resolve_separating_edge(const Graph& g, const CrossableIndex& idx) {
    for (Edge e : g.edges()) {
        const EdgeSet& ee = idx.of(e);
        if (ee.empty()) continue;
        BridgeResult br = bridge_set(g, {e.u, e.v}, ee);
        if (br.parts.size() < 2 || br.bridges.size() < 2) continue;
        GraphDelta d = start(SeparatorKind::SepEdge, {e.u, e.v});
        d.instance.bridges = br.bridges;
        d.instance.parts = br.parts;
        EdgeSet alts(br.bridges.begin() + 1, br.bridges.end());
        remove_with_partner(d, e, br.bridges.front(), alts);
        for (Edge b : br.bridges) {
            d.marked_edges.push_back(b);
            for (Vertex a : {b.u, b.v})
                for (Vertex x : {e.u, e.v}) d.marked_edges.push_back(make_edge(a, x));
            add_faces(d, e, b);
        }
        d.label_assignments.push_back({br.bridges.front(), br.bridges.size()});
        return finish(std::move(d));
    }
    return std::nullopt;
}

std::optional<GraphDelta> resolve_separating_triple(const Graph& g, const CrossableIndex& idx) {
    for (const Cycle& c : cycles_sorted(g, 3)) {
        VertexSet s = sorted_set(c);
        for (Edge e : cycle_edges(c)) {
            const EdgeSet& ee = idx.of(e);
            if (ee.empty()) continue;
            BridgeResult br = bridge_set(g, s, ee);
            if (br.parts.size() < 2 || br.bridges.size() != 1) continue;
            GraphDelta d = start(SeparatorKind::SepTriple, c);
            d.instance.bridges = br.bridges;
            d.instance.parts = br.parts;
            mark(d, cycle_edges(c));
            remove_with_partner(d, br.bridges.front(), e);
            return finish(std::move(d));
        }
    }
    return std::nullopt;
}

std::optional<GraphDelta> resolve_k5_triple(const Graph& g, const CrossableIndex&, const ReductionContext& ctx) {
    CliqueListing cl = list_maximal_cliques_4_5(g);
    for (const auto& k5 : cl.k5) {
        bool low = false;
        for (Vertex v : k5) low = low || g.degree(v) == 4;
        if (!low) continue;
        Cycle carrier(k5.begin(), k5.end());
        std::optional<Edge> fallback;
        for (std::size_t i = 0; i < 5 && !fallback; ++i)
            for (std::size_t j = i + 1; j < 5 && !fallback; ++j)
                if (!k4_partners(g, make_edge(k5[i], k5[j])).empty()) fallback = make_edge(k5[i], k5[j]);
        return family_or_branch(g, ctx, SeparatorKind::K5Triple, carrier, {TwoStarVariant::handle}, fallback);
    }
    return std::nullopt;
}

std::optional<GraphDelta> resolve_unique_quadruple(const Graph& g, const CrossableIndex& idx) {
    for (const Cycle& c : cycles_sorted(g, 4)) {
        BridgePattern bp = bridge_pattern(g, c, idx);
        int defined = 0, at = -1;
        for (int i = 0; i < 4; ++i)
            if (bp.beta[i]) {
                ++defined;
                at = i;
            }
        if (defined != 1 || (*bp.beta[at])[at] != 1) continue;
        Edge e = make_edge(c[at], c[(at + 1) % 4]);
        BridgeResult br = bridge_set(g, sorted_set(c), idx.of(e));
        GraphDelta d = start(SeparatorKind::UniqueQuadruple, c);
        d.instance.pattern = bp;
        d.instance.bridges = br.bridges;
        d.instance.parts = br.parts;
        mark(d, cycle_edges(c));
        remove_with_partner(d, br.bridges.front(), e);
        return finish(std::move(d));
    }
    return std::nullopt;
}

std::optional<GraphDelta> resolve_small_part_quadruple(const Graph& g, const CrossableIndex& idx) {
    for (const Cycle& c : cycles_sorted(g, 4)) {
        VertexSet s = sorted_set(c);
        int best = -1;
        std::size_t best_bridges = 0;
        BridgeResult best_br;
        for (int i = 0; i < 4; ++i) {
            Edge e = make_edge(c[i], c[(i + 1) % 4]);
            if (idx.of(e).empty()) continue;
            BridgeResult br = bridge_set(g, s, idx.of(e));
            if (br.parts.size() < 2) continue;
            std::size_t smallest = br.parts.front().size();
            for (const auto& p : br.parts) smallest = std::min(smallest, p.size());
            if (smallest > 2) continue;
            if (best < 0 || br.bridges.size() > best_bridges) {
                best = i;
                best_bridges = br.bridges.size();
                best_br = br;
            }
        }
        if (best < 0) continue;
        GraphDelta d = branch_on(g, make_edge(c[best], c[(best + 1) % 4]), SeparatorKind::SmallPartQuadruple);
        d.instance.carrier = c;
        d.instance.pattern = bridge_pattern(g, c, idx);
        d.instance.bridges = best_br.bridges;
        d.instance.parts = best_br.parts;
        return d;
    }
    return std::nullopt;
}

std::optional<GraphDelta> resolve_multi_bridge_quadruple(const Graph& g, const CrossableIndex& idx) {
    for (const Cycle& c : cycles_sorted(g, 4)) {
        VertexSet s = sorted_set(c);
        for (int i = 0; i < 4; ++i) {
            Edge e = make_edge(c[i], c[(i + 1) % 4]);
            if (idx.of(e).empty()) continue;
            BridgeResult br = bridge_set(g, s, idx.of(e));
            if (br.parts.size() < 2 || br.bridges.size() < 2) continue;
            bool each_needed = true;
            for (Edge b : br.bridges)
                if (components_after_removal(g, s, {b}).size() != 1) each_needed = false;
            if (!each_needed) continue;
            GraphDelta d = branch_on(g, e, SeparatorKind::MultiBridgeQuadruple);
            d.instance.carrier = c;
            d.instance.pattern = bridge_pattern(g, c, idx);
            d.instance.bridges = br.bridges;
            d.instance.parts = br.parts;
            return d;
        }
    }
    return std::nullopt;
}

std::optional<GraphDelta> resolve_bridge_independent_triangle(const Graph& g, const CrossableIndex& idx) {
    for (const Cycle& c : cycles_sorted(g, 3)) {
        VertexSet s = sorted_set(c);
        for (int j = 0; j < 3; ++j) {
            Vertex a = c[(j + 2) % 3], b = c[j], cc = c[(j + 1) % 3];
            Edge ab = make_edge(a, b), bc = make_edge(b, cc);
            EdgeSet t = union_of(idx.of(ab), idx.of(bc));
            if (t.empty()) continue;
            BridgeResult br = bridge_set(g, s, t);
            if (br.parts.size() != 2 || br.parts[0].size() < 2 || br.parts[1].size() < 2) continue;
            if (br.bridges.size() != 2 || !independent(br.bridges[0], br.bridges[1])) continue;
            auto o0 = unique_owner({ab, bc}, idx, br.bridges[0]);
            auto o1 = unique_owner({ab, bc}, idx, br.bridges[1]);
            if (!o0 || !o1 || *o0 == *o1) continue;
            GraphDelta d = start(SeparatorKind::BridgeIndepTriangle, c);
            d.instance.bridges = br.bridges;
            d.instance.parts = br.parts;
            mark(d, cycle_edges(c));
            remove_with_partner(d, br.bridges[0], *o0);
            remove_with_partner(d, br.bridges[1], *o1);
            return finish(std::move(d));
        }
    }
    return std::nullopt;
}

namespace {

// Maximal 4-cliques through d, as the triangles they leave in N(d).
std::vector<VertexSet> k4_triangles_at(const Graph& g, Vertex d) {
    std::vector<VertexSet> out;
    const auto& nb = g.neighbors(d);
    for (std::size_t i = 0; i < nb.size(); ++i)
        for (std::size_t j = i + 1; j < nb.size(); ++j) {
            if (!g.has_edge(nb[i], nb[j])) continue;
            for (std::size_t l = j + 1; l < nb.size(); ++l) {
                if (!g.has_edge(nb[i], nb[l]) || !g.has_edge(nb[j], nb[l])) continue;
                VertexSet k{d, nb[i], nb[j], nb[l]};
                std::sort(k.begin(), k.end());
                if (common_neighbors(g, k).empty()) out.push_back({nb[i], nb[j], nb[l]});
            }
        }
    return out;
}

bool contains(const VertexSet& s, Vertex v) { return std::find(s.begin(), s.end(), v) != s.end(); }

}  // namespace

std::optional<GraphDelta> resolve_singular_triangle(const Graph& g, const CrossableIndex& idx) {
    for (Vertex d : g.vertices()) {
        if (g.degree(d) != 5) continue;
        auto tris = k4_triangles_at(g, d);
        if (tris.size() != 3) continue;
        std::map<Vertex, int> occ;
        for (const auto& t : tris)
            for (Vertex v : t) ++occ[v];
        if (occ.size() != 5) continue;
        std::vector<Vertex> twice, once;
        Vertex b = -1;
        for (auto [v, n] : occ) {
            if (n == 3) b = v;
            else if (n == 2) twice.push_back(v);
            else once.push_back(v);
        }
        if (b < 0 || twice.size() != 2 || once.size() != 2) continue;
        // abc holds both doubly used vertices; abx and bcy hold one each.
        const VertexSet* abc = nullptr;
        for (const auto& t : tris)
            if (contains(t, twice[0]) && contains(t, twice[1])) abc = &t;
        if (!abc) continue;
        Vertex a = twice[0], c = twice[1], x = -1, y = -1;
        for (const auto& t : tris) {
            if (&t == abc) continue;
            Vertex single = contains(t, once[0]) ? once[0] : once[1];
            if (contains(t, a)) x = single;
            else y = single;
        }
        if (x < 0 || y < 0 || x == y || g.has_edge(x, y)) continue;
        Edge ab = make_edge(a, b), bc = make_edge(b, c), dx = make_edge(d, x), dy = make_edge(d, y);
        if (!idx.contains(ab, dx) || !idx.contains(bc, dy)) continue;
        GraphDelta d0 = start(SeparatorKind::SingularTriangle, {a, b, c});
        d0.instance.center = d;
        d0.instance.bridges = {std::min(dx, dy), std::max(dx, dy)};
        mark(d0, cycle_edges({a, b, c}));
        mark(d0, {make_edge(d, a), make_edge(d, b), make_edge(d, c)});
        remove_with_partner(d0, dx, ab);
        remove_with_partner(d0, dy, bc);
        return finish(std::move(d0));
    }
    return std::nullopt;
}

std::optional<GraphDelta> resolve_k5_destroyer(const Graph& g, const CrossableIndex& idx) {
    CliqueListing cl = list_maximal_cliques_4_5(g);
    std::set<VertexSet> k5s;
    for (const auto& k : cl.k5) k5s.insert(VertexSet(k.begin(), k.end()));
    for (const auto& k5 : cl.k5) {
        VertexSet u(k5.begin(), k5.end());
        std::vector<Vertex> low;
        for (Vertex v : u)
            if (g.degree(v) == 5) low.push_back(v);
        if (low.size() != 2) continue;
        for (int role = 0; role < 2; ++role) {
            Vertex x = low[role], y = low[1 - role];
            std::vector<Vertex> rest;
            for (Vertex v : u)
                if (v != x && v != y) rest.push_back(v);
            for (int bi = 0; bi < 3; ++bi) {
                Vertex b = rest[bi], a = rest[(bi + 1) % 3], c = rest[(bi + 2) % 3];
                Edge ac = make_edge(a, c);
                for (Vertex uu : g.neighbors(x)) {
                    if (contains(u, uu) || !idx.contains(ac, make_edge(x, uu))) continue;
                    bool have_z = false;
                    for (Vertex z : g.neighbors(y)) {
                        if (contains(u, z)) continue;
                        if (!k5s.count(sorted_set({a, b, c, y, z}))) continue;
                        for (Vertex v : common_neighbors(g, sorted_set({a, b, z})))
                            if (!contains(u, v) && v != z) have_z = true;
                    }
                    if (!have_z) continue;
                    GraphDelta d = start(SeparatorKind::K5Destroyer, Cycle(k5.begin(), k5.end()));
                    remove_with_partner(d, make_edge(x, uu), ac);
                    return finish(std::move(d));
                }
            }
        }
    }
    return std::nullopt;
}

std::optional<GraphDelta> resolve_ambiguous_quadruple(const Graph& g, const CrossableIndex& idx,
                                                      const ReductionContext& ctx) {
    for (const Cycle& c : cycles_sorted(g, 4)) {
        BridgePattern bp = bridge_pattern(g, c, idx);
        for (int r = 0; r < 4; ++r) {
            auto want = [&](int i) {
                std::array<int, 4> l{0, 0, 0, 0};
                l[r] = l[(r + 1) % 4] = 1;
                return bp.beta[i] && *bp.beta[i] == l;
            };
            if (!want(r) || !want((r + 1) % 4) || bp.beta[(r + 2) % 4] || bp.beta[(r + 3) % 4]) continue;
            Edge e = make_edge(c[r], c[(r + 1) % 4]);
            GraphDelta d = family_or_branch(g, ctx, SeparatorKind::AmbiguousQuadruple, c,
                                            {TwoStarVariant::circle, TwoStarVariant::semi}, e);
            d.instance.pattern = bp;
            return d;
        }
    }
    return std::nullopt;
}

std::optional<GraphDelta> resolve_ambiguous_triangle(const Graph& g, const CrossableIndex&) {
    for (Vertex d : g.vertices()) {
        if (g.degree(d) != 5) continue;
        auto tris = k4_triangles_at(g, d);
        if (tris.size() != 4) continue;
        std::map<Vertex, int> occ;
        for (const auto& t : tris)
            for (Vertex v : t) ++occ[v];
        if (occ.size() != 5) continue;
        Vertex v2 = -1;
        std::vector<Vertex> ring;
        for (auto [v, n] : occ) {
            if (n == 4) v2 = v;
            else if (n == 2) ring.push_back(v);
        }
        if (v2 < 0 || ring.size() != 4) continue;
        // The other pairs of the four triangles form the 4-cycle v1 v3 v5 v4.
        std::set<Edge> pairs;
        for (const auto& t : tris) {
            std::vector<Vertex> o;
            for (Vertex v : t)
                if (v != v2) o.push_back(v);
            pairs.insert(make_edge(o[0], o[1]));
        }
        if (pairs.size() != 4) continue;
        Vertex v1 = ring[0], v3 = -1, v4 = -1, v5 = -1;
        for (Vertex w : ring) {
            if (w == v1) continue;
            if (!pairs.count(make_edge(v1, w))) v5 = w;
            else if (v3 < 0) v3 = w;
            else v4 = w;
        }
        if (v3 < 0 || v4 < 0 || v5 < 0 || !pairs.count(make_edge(v3, v5)) || !pairs.count(make_edge(v4, v5)))
            continue;
        if (g.has_edge(v1, v5) || g.has_edge(v3, v4)) continue;
        Edge v1v2 = make_edge(v1, v2), dv5 = make_edge(d, v5);
        auto usable = [&](std::initializer_list<Edge> es) {
            for (Edge e : es)
                if (g.marked(e)) return false;
            return true;
        };
        const bool alt_a = usable({v1v2, make_edge(d, v4), dv5, make_edge(v2, v4)});
        const bool alt_b = usable({v1v2, make_edge(d, v3), dv5, make_edge(v2, v3)});
        Cycle carrier{d, v1, v2, v3, v4, v5};
        if (!alt_a && !alt_b) {
            if (g.marked(v1v2) && g.marked(dv5)) continue;
            GraphDelta br = branch_on(g, g.marked(v1v2) ? dv5 : v1v2, SeparatorKind::AmbiguousTriangle);
            br.instance.carrier = carrier;
            br.instance.center = d;
            return br;
        }
        GraphDelta out = start(SeparatorKind::AmbiguousTriangle, carrier);
        out.instance.center = d;
        mark(out, {make_edge(d, v1), make_edge(d, v2), make_edge(d, v3), make_edge(d, v4), make_edge(v1, v3),
                   make_edge(v1, v4), make_edge(v2, v3), make_edge(v2, v4)});
        Vertex first = alt_a ? v4 : v3;
        remove_with_partner(out, v1v2, make_edge(d, first), alt_a && alt_b ? EdgeSet{make_edge(d, v3)} : EdgeSet{});
        remove_with_partner(out, dv5, make_edge(v2, first),
                            alt_a && alt_b ? EdgeSet{make_edge(v2, v3)} : EdgeSet{});
        if (alt_a && alt_b) {
            add_faces(out, v1v2, make_edge(d, v3));
            add_faces(out, dv5, make_edge(v2, v3));
        }
        out.label_assignments.push_back({make_edge(d, v2), alt_a && alt_b ? 2u : 1u});
        return finish(std::move(out));
    }
    return std::nullopt;
}

namespace {

struct TripodShape {
    Cycle c;
    BridgeResult br;
    std::array<Edge, 3> owner;  // owner[i] is the triangle edge bridge i crosses
};

// Triangles whose three edges each own exactly one bridge of G - C - E(C).
std::vector<TripodShape> tripods(const Graph& g, const CrossableIndex& idx) {
    std::vector<TripodShape> out;
    for (const Cycle& c : cycles_sorted(g, 3)) {
        EdgeSet ce = cycle_edges(c);
        EdgeSet t;
        for (Edge e : ce) t = union_of(t, idx.of(e));
        if (t.empty()) continue;
        BridgeResult br = bridge_set(g, sorted_set(c), t);
        if (br.parts.size() != 2 || br.bridges.size() != 3) continue;
        TripodShape sh{c, br, {}};
        std::set<Edge> owners;
        bool ok = true;
        for (int i = 0; i < 3 && ok; ++i) {
            auto o = unique_owner(ce, idx, br.bridges[i]);
            if (!o) ok = false;
            else {
                sh.owner[i] = *o;
                owners.insert(*o);
            }
        }
        if (ok && owners.size() == 3) out.push_back(sh);
    }
    return out;
}

GraphDelta tripod_delta(SeparatorKind kind, const TripodShape& sh) {
    GraphDelta d = start(kind, sh.c);
    d.instance.bridges = sh.br.bridges;
    d.instance.parts = sh.br.parts;
    mark(d, cycle_edges(sh.c));
    for (int i = 0; i < 3; ++i) remove_with_partner(d, sh.br.bridges[i], sh.owner[i]);
    return d;
}

// For a single-vertex side {d}: the far ends x, y, z of its bridges.
std::optional<Vertex> lone_centre(const TripodShape& sh) {
    for (const auto& p : sh.br.parts)
        if (p.size() == 1) return p.front();
    return std::nullopt;
}

int edges_among_far_ends(const Graph& g, const TripodShape& sh, Vertex d) {
    std::vector<Vertex> far;
    for (Edge b : sh.br.bridges) far.push_back(b.u == d ? b.v : b.u);
    int n = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) n += g.has_edge(far[i], far[j]);
    return n;
}

}  // namespace

std::optional<GraphDelta> resolve_tripod(const Graph& g, const CrossableIndex& idx) {
    for (const TripodShape& sh : tripods(g, idx)) {
        if (sh.br.parts[0].size() < 2 || sh.br.parts[1].size() < 2) continue;
        return finish(tripod_delta(SeparatorKind::Tripod, sh));
    }
    return std::nullopt;
}

std::optional<GraphDelta> resolve_strong_tripod(const Graph& g, const CrossableIndex& idx) {
    for (const TripodShape& sh : tripods(g, idx)) {
        auto d = lone_centre(sh);
        if (!d || g.degree(*d) != 6 || edges_among_far_ends(g, sh, *d) > 1) continue;
        GraphDelta out = tripod_delta(SeparatorKind::StrongTripod, sh);
        out.instance.center = *d;
        for (Vertex v : sh.c) out.marked_edges.push_back(make_edge(*d, v));
        return finish(std::move(out));
    }
    return std::nullopt;
}

std::optional<GraphDelta> resolve_ambiguous_tripod(const Graph& g, const CrossableIndex& idx,
                                                   const ReductionContext& ctx) {
    for (const TripodShape& sh : tripods(g, idx)) {
        auto d = lone_centre(sh);
        if (!d || g.degree(*d) != 6 || edges_among_far_ends(g, sh, *d) < 2) continue;
        GraphDelta out = family_or_branch(g, ctx, SeparatorKind::AmbiguousTripod, sh.c, {TwoStarVariant::full},
                                          sh.br.bridges.front());
        out.instance.center = *d;
        return out;
    }
    return std::nullopt;
}

std::optional<GraphDelta> find_separator(const Graph& g, const CrossableIndex& idx, const ReductionContext& ctx) {
    for (SeparatorKind k : separator_order()) {
        std::optional<GraphDelta> d;
        switch (k) {
            case SeparatorKind::SepCycle3: d = resolve_separating_cycle(g, 3); break;
            case SeparatorKind::SepEdge: d = resolve_separating_edge(g, idx); break;
            case SeparatorKind::SepTriple: d = resolve_separating_triple(g, idx); break;
            case SeparatorKind::K5Triple: d = resolve_k5_triple(g, idx, ctx); break;
            case SeparatorKind::SepCycle4: d = resolve_separating_cycle(g, 4); break;
            case SeparatorKind::UniqueQuadruple: d = resolve_unique_quadruple(g, idx); break;
            case SeparatorKind::SmallPartQuadruple: d = resolve_small_part_quadruple(g, idx); break;
            case SeparatorKind::MultiBridgeQuadruple: d = resolve_multi_bridge_quadruple(g, idx); break;
            case SeparatorKind::BridgeIndepTriangle: d = resolve_bridge_independent_triangle(g, idx); break;
            case SeparatorKind::SingularTriangle: d = resolve_singular_triangle(g, idx); break;
            case SeparatorKind::K5Destroyer: d = resolve_k5_destroyer(g, idx); break;
            case SeparatorKind::AmbiguousQuadruple: d = resolve_ambiguous_quadruple(g, idx, ctx); break;
            case SeparatorKind::AmbiguousTriangle: d = resolve_ambiguous_triangle(g, idx); break;
            case SeparatorKind::SepCycle5: d = resolve_separating_cycle(g, 5); break;
            case SeparatorKind::Tripod: d = resolve_tripod(g, idx); break;
            case SeparatorKind::StrongTripod: d = resolve_strong_tripod(g, idx); break;
            case SeparatorKind::AmbiguousTripod: d = resolve_ambiguous_tripod(g, idx, ctx); break;
        }
        if (d) return d;
    }
    return std::nullopt;
}

}  // namespace t1p
