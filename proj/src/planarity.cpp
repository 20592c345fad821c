#include "t1p/planarity.hpp"

#include <algorithm>
#include <unordered_map>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/graph_traits.hpp>
#include <boost/property_map/property_map.hpp>

namespace t1p {

namespace {

using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                         boost::property<boost::vertex_index_t, int>,
                                         boost::property<boost::edge_index_t, int>>;
using BoostEdge = boost::graph_traits<BoostGraph>::edge_descriptor;

std::uint64_t dart(Vertex a, Vertex b) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
           static_cast<std::uint32_t>(b);
}

}  // namespace

PlanarityResult planarity_check(const Graph& g) {
    PlanarityResult res;
    VertexSet verts = g.vertices();
    std::unordered_map<Vertex, int> dense;
    for (std::size_t i = 0; i < verts.size(); ++i) dense[verts[i]] = static_cast<int>(i);

    BoostGraph bg(verts.size());
    int ei = 0;
    auto index = get(boost::edge_index, bg);
    for (Edge e : g.edges()) {
        auto [d, ok] = boost::add_edge(dense[e.u], dense[e.v], bg);
        (void)ok;
        put(index, d, ei++);
    }
    std::vector<std::vector<BoostEdge>> emb(verts.size());
    bool planar = boost::boyer_myrvold_planarity_test(
        boost::boyer_myrvold_params::graph = bg,
        boost::boyer_myrvold_params::embedding =
            boost::make_iterator_property_map(emb.begin(), get(boost::vertex_index, bg)));
    res.planar = planar;
    if (!planar) return res;
    RotationSystem rot;
    for (std::size_t i = 0; i < verts.size(); ++i) {
        auto& out = rot[verts[i]];
        out.reserve(emb[i].size());
        for (const BoostEdge& e : emb[i]) {
            int s = static_cast<int>(boost::source(e, bg));
            int t = static_cast<int>(boost::target(e, bg));
            out.push_back(verts[s == static_cast<int>(i) ? t : s]);
        }
    }
    if (!is_spherical(rot)) throw ContractError("planarity embedding failed face check");
    res.embedding = std::move(rot);
    return res;
}

std::vector<Face> faces_of(const RotationSystem& rot) {
    // position of each neighbour inside its owner's rotation
    std::unordered_map<std::uint64_t, std::size_t> pos;
    std::size_t darts = 0;
    for (const auto& [v, nb] : rot) {
        for (std::size_t i = 0; i < nb.size(); ++i) {
            if (!pos.emplace(dart(v, nb[i]), i).second)
                throw GraphError("rotation of " + std::to_string(v) + " repeats a neighbour");
            ++darts;
        }
    }
    for (const auto& [v, nb] : rot)
        for (Vertex w : nb)
            if (!pos.count(dart(w, v)))
                throw GraphError("rotation not symmetric at " + to_string(make_edge(v, w)));

    std::unordered_map<std::uint64_t, char> used;
    used.reserve(darts);
    std::vector<Face> faces;
    for (const auto& [v0, nb] : rot) {
        for (Vertex w0 : nb) {
            if (used.count(dart(v0, w0))) continue;
            Face f;
            Vertex u = v0, v = w0;
            while (!used.count(dart(u, v))) {
                used[dart(u, v)] = 1;
                f.push_back(u);
                const auto& rv = rot.at(v);
                std::size_t i = pos.at(dart(v, u));
                Vertex w = rv[(i + 1) % rv.size()];
                u = v;
                v = w;
            }
            if (u != v0 || v != w0) throw GraphError("face walk does not close");
            faces.push_back(std::move(f));
        }
    }
    return faces;
}

bool is_spherical(const RotationSystem& rot) {
    auto faces = faces_of(rot);
    long n = 0, m2 = 0;
    // components by union over rotation adjacency
    std::unordered_map<Vertex, Vertex> parent;
    auto find = [&](Vertex x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& [v, nb] : rot) parent[v] = v;
    long comps = static_cast<long>(rot.size());
    for (const auto& [v, nb] : rot) {
        ++n;
        m2 += static_cast<long>(nb.size());
        for (Vertex w : nb) {
            Vertex a = find(v), b = find(w);
            if (a != b) {
                parent[a] = b;
                --comps;
            }
        }
    }
    long isolated = 0;
    for (const auto& [v, nb] : rot)
        if (nb.empty()) ++isolated;
    // an isolated vertex has no face walk; count its sphere as one face
    long f = static_cast<long>(faces.size()) + isolated;
    return n - m2 / 2 + f == 2 * comps;
}

bool is_triangulated_planar(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 3 || g.edge_count() != 3 * n - 6) return false;
    auto res = planarity_check(g);
    if (!res.planar) return false;
    for (const Face& f : faces_of(*res.embedding))
        if (f.size() != 3) return false;
    return true;
}

RotationSystem reflect(const RotationSystem& rot) {
    RotationSystem out = rot;
    for (auto& [v, nb] : out) std::reverse(nb.begin(), nb.end());
    return out;
}

RotationSystem rotation_of(const Graph& g, const RotationSystem& rot) {
    RotationSystem out;
    for (const auto& [v, nb] : rot) {
        if (!g.has_vertex(v)) continue;
        auto& o = out[v];
        for (Vertex w : nb)
            if (g.has_edge(v, w)) o.push_back(w);
    }
    return out;
}

}  // namespace t1p
