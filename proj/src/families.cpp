#include "t1p/families.hpp"

#include <algorithm>

namespace t1p {

std::string to_string(TwoStarVariant v) {
    switch (v) {
        case TwoStarVariant::base: return "base";
        case TwoStarVariant::handle: return "handle";
        case TwoStarVariant::circle: return "circle";
        case TwoStarVariant::x: return "x";
        case TwoStarVariant::semi: return "semi";
        case TwoStarVariant::full: return "full";
    }
    return "?";
}

TwoStarVariant parse_two_star_variant(const std::string& name) {
    for (auto v : {TwoStarVariant::base, TwoStarVariant::handle, TwoStarVariant::circle, TwoStarVariant::x,
                   TwoStarVariant::semi, TwoStarVariant::full})
        if (to_string(v) == name) return v;
    throw GraphError("unknown two-star variant \"" + name + "\"");
}

Graph gen_two_star(TwoStarVariant variant, int k) {
    if (k < 5) throw GraphError("two-star needs k >= 5");
    if (variant == TwoStarVariant::semi && k % 2 != 0) throw GraphError("semi two-star needs even k");
    Graph g;
    const Vertex p = 0, q = 1;
    auto v = [](int i) { return static_cast<Vertex>(i + 1); };
    g.add_vertex(p);
    g.add_vertex(q);
    for (int i = 1; i <= k; ++i) {
        g.add_edge(p, v(i));
        g.add_edge(q, v(i));
        if (i + 1 <= k) g.add_edge(v(i), v(i + 1));
        if (i + 2 <= k) g.add_edge(v(i), v(i + 2));
    }
    switch (variant) {
        case TwoStarVariant::base: break;
        case TwoStarVariant::handle: g.add_edge(p, q); break;
        case TwoStarVariant::circle: g.add_edge(v(1), v(k)); break;
        case TwoStarVariant::x:
            g.add_edge(p, q);
            g.add_edge(v(1), v(k));
            break;
        case TwoStarVariant::semi:
            g.add_edge(v(1), v(k));
            g.add_edge(v(2), v(k));
            break;
        case TwoStarVariant::full:
            g.add_edge(v(1), v(k));
            g.add_edge(v(1), v(k - 1));
            g.add_edge(v(2), v(k));
            break;
    }
    return g;
}

const std::vector<std::string>& catalog_names() {
    static const std::vector<std::string> names{"K3", "K4", "K5e", "K5", "H1", "H2", "H3",
                                                "H4", "H5", "H6", "H7", "K6e", "K6", "K7"};
    return names;
}

Graph catalog_small(const std::string& name) {
    auto complete = [](int n) {
        Graph g;
        for (Vertex a = 0; a < n; ++a)
            for (Vertex b = a + 1; b < n; ++b) g.add_edge(a, b);
        return g;
    };
    auto without = [&](int n, std::initializer_list<std::pair<Vertex, Vertex>> drop) {
        Graph g = complete(n);
        for (auto [a, b] : drop) g.remove_edge(a, b);
        return g;
    };
    if (name == "K3") return complete(3);
    if (name == "K4") return complete(4);
    if (name == "K5e") return without(5, {{0, 1}});
    if (name == "K5") return complete(5);
    if (name == "H1") return without(6, {{0, 1}, {1, 2}, {0, 2}});
    if (name == "H2") return without(6, {{0, 1}, {1, 2}, {2, 3}});
    if (name == "H3") return without(6, {{0, 1}, {0, 2}, {0, 3}});
    if (name == "H4") return without(6, {{0, 1}, {1, 2}, {3, 4}});
    if (name == "H5") return without(6, {{0, 1}, {2, 3}, {4, 5}});
    if (name == "H6") return without(6, {{0, 1}, {0, 2}});
    if (name == "H7") return without(6, {{0, 2}, {1, 3}});
    if (name == "K6e") return without(6, {{0, 1}});
    if (name == "K6") return complete(6);
    if (name == "K7") return complete(7);
    throw GraphError("unknown catalog graph \"" + name + "\"");
}

std::uint64_t Rng::next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t Rng::below(std::uint64_t bound) {
    if (bound == 0) return 0;
    const std::uint64_t limit = ~0ULL - (~0ULL % bound);
    std::uint64_t x;
    do x = next();
    while (x >= limit);
    return x % bound;
}

namespace {

using Tri = std::array<Vertex, 3>;  // oriented: a -> b -> c is a face walk

Vertex succ(const RotationSystem& rot, Vertex v, Vertex after) {
    const auto& r = rot.at(v);
    auto it = std::find(r.begin(), r.end(), after);
    ++it;
    return it == r.end() ? r.front() : *it;
}

void insert_after(std::vector<Vertex>& r, Vertex after, Vertex x) {
    r.insert(std::find(r.begin(), r.end(), after) + 1, x);
}

}  // namespace

Triangulation gen_planar_triangulation_embedded(int n, std::uint64_t seed, int flips) {
    if (n < 3) throw GraphError("triangulation needs n >= 3");
    Rng rng(seed);
    Triangulation t;
    auto& rot = t.rotation;
    // triangle 0,1,2: faces 0->1->2 and 0->2->1
    rot[0] = {1, 2};
    rot[1] = {2, 0};
    rot[2] = {0, 1};
    std::vector<Tri> faces{{0, 1, 2}, {0, 2, 1}};
    for (Vertex v = 3; v < n; ++v) {
        std::size_t fi = rng.below(faces.size());
        Tri f = faces[fi];
        // face a->b->c: succ of a at b is c. New vertex v inside.
        Vertex a = f[0], b = f[1], c = f[2];
        insert_after(rot[b], a, v);  // a, v, c around b
        insert_after(rot[c], b, v);
        insert_after(rot[a], c, v);
        rot[v] = {a, c, b};
        faces[fi] = {a, b, v};
        faces.push_back({b, c, v});
        faces.push_back({c, a, v});
    }
    if (flips < 0) flips = n;
    for (int i = 0; i < flips && n >= 5; ++i) {
        // pick a random dart a->b
        Vertex a = static_cast<Vertex>(rng.below(n));
        const auto& ra = rot[a];
        Vertex b = ra[rng.below(ra.size())];
        Vertex x = succ(rot, b, a);  // face a -> b -> x
        Vertex y = succ(rot, a, b);  // face b -> a -> y
        if (rot[a].size() <= 3 || rot[b].size() <= 3) continue;
        const auto& rx = rot[x];
        if (x == y || std::find(rx.begin(), rx.end(), y) != rx.end()) continue;
        auto& r1 = rot[a];
        r1.erase(std::find(r1.begin(), r1.end(), b));
        auto& r2 = rot[b];
        r2.erase(std::find(r2.begin(), r2.end(), a));
        insert_after(rot[x], b, y);  // around x: b, y, a
        insert_after(rot[y], a, x);  // around y: a, x, b
    }
    for (const auto& [v, nb] : rot) {
        t.graph.add_vertex(v);
        for (Vertex w : nb) t.graph.add_edge(v, w);
    }
    return t;
}

Graph gen_planar_triangulation(int n, std::uint64_t seed, int flips) {
    return gen_planar_triangulation_embedded(n, seed, flips).graph;
}

Planted gen_planted_t1p(int n, int crossings, std::uint64_t seed, int flips) {
    Triangulation t = gen_planar_triangulation_embedded(n, seed, flips);
    Planted out;
    out.requested = crossings;
    out.graph = t.graph;
    out.embedding.skeleton = t.rotation;
    Rng rng(seed ^ 0x5bd1e995ULL);
    auto is_original = [&](Vertex v) { return v < n; };
    int placed = 0;
    for (int attempt = 0; placed < crossings && attempt < 200 * (crossings + 1); ++attempt) {
        Vertex a = static_cast<Vertex>(rng.below(n));
        const auto& ra = out.embedding.skeleton.at(a);
        Vertex b = ra[rng.below(ra.size())];
        if (!is_original(b)) continue;
        const auto& rot = out.embedding.skeleton;
        Vertex x = succ(rot, b, a), y = succ(rot, a, b);
        if (!is_original(x) || !is_original(y) || x == y || out.graph.has_edge(x, y)) continue;
        insert_crossing(out.embedding, make_edge(x, y), make_edge(a, b), n + placed);
        out.graph.add_edge(x, y);
        ++placed;
    }
    out.short_of_request = placed < crossings;
    return out;
}

}  // namespace t1p
