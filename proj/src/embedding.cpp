#include "t1p/embedding.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace t1p {

CrossingPair make_pair_of(Edge a, Edge b) { return a < b ? CrossingPair{a, b} : CrossingPair{b, a}; }

CrossingSet T1PEmbedding::crossing_set() const {
    CrossingSet cs;
    for (const Crossing& c : crossings) cs.push_back(make_pair_of(c.first, c.second));
    std::sort(cs.begin(), cs.end());
    return cs;
}

Vertex T1PEmbedding::max_id() const {
    return skeleton.empty() ? -1 : skeleton.rbegin()->first;
}

std::string ValidationReport::summary() const {
    if (ok) return "ok";
    std::ostringstream out;
    for (std::size_t i = 0; i < violations.size() && i < 5; ++i) {
        if (i) out << "; ";
        out << violations[i].kind << " at " << violations[i].where;
    }
    if (violations.size() > 5) out << "; +" << violations.size() - 5 << " more";
    return out.str();
}

Graph planarization_graph(const Graph& g, const CrossingSet& cs, std::vector<Vertex>* dummies) {
    Graph p;
    for (Vertex v : g.vertices()) p.add_vertex(v);
    std::set<Edge> crossed;
    for (auto& [a, b] : cs) {
        crossed.insert(a);
        crossed.insert(b);
    }
    for (Edge e : g.edges())
        if (!crossed.count(e)) p.add_edge(e.u, e.v);
    Vertex next = g.id_bound();
    if (dummies) dummies->clear();
    for (auto& [a, b] : cs) {
        Vertex d = next++;
        p.add_vertex(d);
        for (Vertex x : {a.u, a.v, b.u, b.v}) p.add_edge(d, x);
        if (dummies) dummies->push_back(d);
    }
    return p;
}

Graph planarize(const T1PEmbedding& e) {
    Graph p;
    for (const auto& [v, nb] : e.skeleton) {
        p.add_vertex(v);
        for (Vertex w : nb) p.add_edge(v, w);
    }
    return p;
}

std::optional<T1PEmbedding> embed_with_crossings(const Graph& g, const CrossingSet& cs) {
    std::vector<Vertex> dummies;
    Graph p = planarization_graph(g, cs, &dummies);
    auto res = planarity_check(p);
    if (!res.planar) return std::nullopt;
    T1PEmbedding emb;
    emb.skeleton = std::move(*res.embedding);
    for (std::size_t i = 0; i < cs.size(); ++i) emb.crossings.push_back({cs[i].first, cs[i].second, dummies[i]});
    return emb;
}

std::optional<T1PEmbedding> triangulated_embedding(const Graph& g, const CrossingSet& cs,
                                                   const std::vector<Cycle>& required_faces) {
    std::set<Edge> used;
    for (auto& [a, b] : cs) {
        if (!independent(a, b)) return std::nullopt;
        for (Edge x : {a, b})
            if (!g.has_edge(x) || g.marked(x) || !used.insert(x).second) return std::nullopt;
    }
    auto emb = embed_with_crossings(g, cs);
    if (!emb) return std::nullopt;
    auto faces = faces_of(emb->skeleton);
    for (const Face& f : faces)
        if (f.size() != 3) return std::nullopt;
    for (const Cycle& c : required_faces)
        if (find_face(faces, c) < 0) return std::nullopt;
    return emb;
}

int forced_crossing_count(int n, int m) {
    if (n < 3) throw GraphError("not T1P by counting: fewer than 3 vertices");
    int c = m - (3 * n - 6);
    if (c < 0 || c > n - 2) throw GraphError("not T1P by counting");
    return c;
}

ValidationReport validate_t1p(const Graph& g, const T1PEmbedding& e) {
    ValidationReport rep;
    std::vector<Face> faces;
    try {
        faces = faces_of(e.skeleton);
    } catch (const GraphError& err) {
        rep.add("rotation", err.what());
        return rep;
    }
    for (Vertex v : g.vertices())
        if (!e.skeleton.count(v)) rep.add("missing-vertex", std::to_string(v));

    std::map<Vertex, const Crossing*> by_dummy;
    std::set<Edge> crossed;
    for (const Crossing& c : e.crossings) {
        std::string where = to_string(c.first) + "x" + to_string(c.second);
        if (g.has_vertex(c.dummy) || !e.skeleton.count(c.dummy)) {
            rep.add("bad-dummy", where);
            continue;
        }
        if (!by_dummy.emplace(c.dummy, &c).second) rep.add("dummy-reused", where);
        for (Edge x : {c.first, c.second}) {
            if (!g.has_edge(x)) rep.add("crossing-non-edge", to_string(x));
            else if (g.marked(x)) rep.add("marked-crossed", to_string(x));
            if (!crossed.insert(x).second) rep.add("edge-crossed-twice", to_string(x));
        }
        if (!independent(c.first, c.second)) rep.add("crossing-adjacent-edges", where);
        const auto& rd = e.skeleton.at(c.dummy);
        if (rd.size() != 4) {
            rep.add("dummy-degree", where);
            continue;
        }
        Edge d1 = make_edge(rd[0], rd[2]), d2 = make_edge(rd[1], rd[3]);
        if (make_pair_of(d1, d2) != make_pair_of(c.first, c.second)) rep.add("dummy-rotation", where);
        for (int i = 0; i < 4; ++i) {
            Vertex a = rd[i], b = rd[(i + 1) % 4];
            const auto it = e.skeleton.find(a);
            bool kite = it != e.skeleton.end() &&
                        std::find(it->second.begin(), it->second.end(), b) != it->second.end();
            if (!kite) rep.add("kite-missing", to_string(make_edge(a, b)));
        }
    }
    for (const auto& [v, nb] : e.skeleton) {
        bool orig = g.has_vertex(v);
        if (!orig && !by_dummy.count(v)) rep.add("unknown-vertex", std::to_string(v));
        for (Vertex w : nb) {
            if (!orig || !g.has_vertex(w) || v > w) continue;
            Edge x{v, w};
            if (!g.has_edge(x)) rep.add("skeleton-non-edge", to_string(x));
            if (crossed.count(x)) rep.add("crossed-edge-in-skeleton", to_string(x));
        }
    }
    long skeleton_edges = 0;
    for (const auto& [v, nb] : e.skeleton)
        if (g.has_vertex(v))
            for (Vertex w : nb)
                if (g.has_vertex(w) && v < w) ++skeleton_edges;
    if (skeleton_edges + static_cast<long>(crossed.size()) != g.edge_count())
        rep.add("edge-set-mismatch", std::to_string(skeleton_edges + crossed.size()) + " vs " +
                                         std::to_string(g.edge_count()));

    if (!is_spherical(e.skeleton)) rep.add("not-spherical", "euler");
    const int n = g.vertex_count();
    for (const Face& f : faces) {
        if (f.size() == 3) continue;
        bool allowed = false;
        if (n == 4 && f.size() == 4 && e.crossings.size() == 1) {
            const Crossing& c = e.crossings[0];
            std::set<Edge> kite;
            const auto& rd = e.skeleton.at(c.dummy);
            for (int i = 0; i < 4; ++i) kite.insert(make_edge(rd[i], rd[(i + 1) % 4]));
            std::set<Edge> fe;
            for (std::size_t i = 0; i < 4; ++i) fe.insert(make_edge(f[i], f[(i + 1) % 4]));
            allowed = fe == kite;
        }
        if (!allowed) {
            std::string w;
            for (Vertex v : f) w += std::to_string(v) + " ";
            rep.add("non-triangular-face", w);
        }
    }
    if (n >= 5 && static_cast<long>(e.crossings.size()) != g.edge_count() - (3L * n - 6))
        rep.add("crossing-count", std::to_string(e.crossings.size()));
    return rep;
}

namespace {

std::vector<Vertex>::iterator find_in(std::vector<Vertex>& v, Vertex x) {
    auto it = std::find(v.begin(), v.end(), x);
    if (it == v.end()) throw GraphError("rotation lacks " + std::to_string(x));
    return it;
}

Vertex successor(const RotationSystem& rot, Vertex v, Vertex after) {
    const auto& r = rot.at(v);
    auto it = std::find(r.begin(), r.end(), after);
    if (it == r.end()) throw GraphError("rotation lacks " + std::to_string(after));
    ++it;
    return it == r.end() ? r.front() : *it;
}

}  // namespace

Vertex fresh_dummy_id(const T1PEmbedding& emb) { return emb.max_id() + 1; }

void insert_crossing(T1PEmbedding& emb, Edge e, Edge partner, Vertex dummy) {
    auto& rot = emb.skeleton;
    const Vertex a = partner.u, b = partner.v;
    if (!rot.count(a) || !rot.count(b)) throw GraphError("insert_crossing: partner not embedded");
    auto& ra = rot.at(a);
    if (std::find(ra.begin(), ra.end(), b) == ra.end())
        throw GraphError("insert_crossing: partner " + to_string(partner) + " not an uncrossed edge");
    const auto& re = rot.count(e.u) ? rot.at(e.u) : std::vector<Vertex>{};
    if (std::find(re.begin(), re.end(), e.v) != re.end())
        throw GraphError("insert_crossing: edge " + to_string(e) + " already present");
    for (const Crossing& c : emb.crossings)
        if (c.first == e || c.second == e)
            throw GraphError("insert_crossing: edge " + to_string(e) + " already present");
    if (rot.count(dummy)) throw GraphError("insert_crossing: dummy id in use");
    Vertex w1 = successor(rot, b, a);  // apex of face a -> b -> w1
    Vertex w2 = successor(rot, a, b);  // apex of face b -> a -> w2
    if (make_edge(w1, w2) != e)
        throw GraphError("insert_crossing: kite edge missing for " + to_string(e) + " over " +
                         to_string(partner));
    if (successor(rot, w1, b) != a || successor(rot, w2, a) != b)
        throw GraphError("insert_crossing: faces beside partner are not triangles");
    *find_in(rot.at(a), b) = dummy;
    *find_in(rot.at(b), a) = dummy;
    auto& r1 = rot.at(w1);
    r1.insert(find_in(r1, b) + 1, dummy);
    auto& r2 = rot.at(w2);
    r2.insert(find_in(r2, a) + 1, dummy);
    rot[dummy] = {a, w1, b, w2};
    emb.crossings.push_back({partner, e, dummy});
}

StarRecord replace_clique_with_star(Graph& g, const std::array<Vertex, 4>& k, Edge a, Edge b) {
    StarRecord rec;
    rec.clique = k;
    std::sort(rec.clique.begin(), rec.clique.end());
    VertexSet ks(rec.clique.begin(), rec.clique.end());
    if (!is_clique(g, ks)) throw ContractError("star replacement on a non-clique");
    if (!independent(a, b)) throw ContractError("star pair not independent");
    for (Edge x : {a, b})
        if (!std::binary_search(ks.begin(), ks.end(), x.u) || !std::binary_search(ks.begin(), ks.end(), x.v))
            throw ContractError("star pair outside the clique");
    if (g.marked(a) || g.marked(b)) throw ContractError("star pair has a marked edge");
    g.remove_edge(a.u, a.v);
    g.remove_edge(b.u, b.v);
    rec.center = g.add_fresh_vertex();
    for (Vertex v : rec.clique) g.add_edge(rec.center, v);
    rec.removed_a = std::min(a, b);
    rec.removed_b = std::max(a, b);
    return rec;
}

void restore_star(T1PEmbedding& emb, const StarRecord& rec) {
    auto it = emb.skeleton.find(rec.center);
    if (it == emb.skeleton.end() || it->second.size() != 4) throw GraphError("restore_star: centre not embedded");
    const auto& rz = it->second;
    Edge d1 = make_edge(rz[0], rz[2]), d2 = make_edge(rz[1], rz[3]);
    if (make_pair_of(d1, d2) != make_pair_of(rec.removed_a, rec.removed_b))
        throw GraphError("restore_star: star order disagrees with the removed pair");
    emb.crossings.push_back({rec.removed_a, rec.removed_b, rec.center});
}

void delete_skeleton_edge(T1PEmbedding& emb, Edge e) {
    auto& ru = emb.skeleton.at(e.u);
    auto& rv = emb.skeleton.at(e.v);
    ru.erase(find_in(ru, e.v));
    rv.erase(find_in(rv, e.u));
}

int find_face(const std::vector<Face>& faces, const Cycle& c, bool* same_direction) {
    const std::size_t k = c.size();
    for (std::size_t i = 0; i < faces.size(); ++i) {
        const Face& f = faces[i];
        if (f.size() != k) continue;
        auto start = std::find(f.begin(), f.end(), c[0]);
        if (start == f.end()) continue;
        std::size_t s = static_cast<std::size_t>(start - f.begin());
        bool fwd = true, bwd = true;
        for (std::size_t j = 0; j < k; ++j) {
            if (f[(s + j) % k] != c[j]) fwd = false;
            if (f[(s + k - j) % k] != c[j]) bwd = false;
        }
        if (fwd || bwd) {
            if (same_direction) *same_direction = fwd;
            return static_cast<int>(i);
        }
    }
    return -1;
}

T1PEmbedding compose_at_cycle(const T1PEmbedding& e1, const T1PEmbedding& e2, const Cycle& c) {
    const std::size_t k = c.size();
    bool dir1 = false, dir2 = false;
    if (find_face(faces_of(e1.skeleton), c, &dir1) < 0 || find_face(faces_of(e2.skeleton), c, &dir2) < 0)
        throw GraphError("compose_at_cycle: cycle is not a face on both sides");
    // Orient so that e1 traverses c forwards and e2 backwards.
    RotationSystem r1 = dir1 ? e1.skeleton : reflect(e1.skeleton);
    RotationSystem r2 = dir2 ? reflect(e2.skeleton) : e2.skeleton;
    std::set<Vertex> on_cycle(c.begin(), c.end());
    T1PEmbedding out;
    out.skeleton = r1;
    for (const auto& [v, nb] : r2) {
        if (on_cycle.count(v)) continue;
        if (out.skeleton.count(v)) throw GraphError("compose_at_cycle: sides share vertex " + std::to_string(v));
        out.skeleton[v] = nb;
    }
    auto rotate_to = [](const std::vector<Vertex>& r, Vertex first) {
        auto it = std::find(r.begin(), r.end(), first);
        if (it == r.end()) throw GraphError("compose_at_cycle: rotation lacks cycle neighbour");
        std::vector<Vertex> out(it, r.end());
        out.insert(out.end(), r.begin(), it);
        return out;
    };
    for (std::size_t i = 0; i < k; ++i) {
        Vertex v = c[i], prev = c[(i + k - 1) % k], next = c[(i + 1) % k];
        // side 1: [next, ..., prev]; side 2: [prev, ..., next]
        std::vector<Vertex> a = rotate_to(r1.at(v), next);
        std::vector<Vertex> b = rotate_to(r2.at(v), prev);
        if (a.back() != prev || b.back() != next)
            throw GraphError("compose_at_cycle: cycle corner is not a face corner at " + std::to_string(v));
        std::vector<Vertex> merged = a;
        merged.insert(merged.end(), b.begin() + 1, b.end() - 1);
        out.skeleton[v] = std::move(merged);
    }
    out.crossings = e1.crossings;
    out.crossings.insert(out.crossings.end(), e2.crossings.begin(), e2.crossings.end());
    return out;
}

}  // namespace t1p
