#include "t1p/enumeration.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace t1p {

namespace {

VertexSet intersect(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
    VertexSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

}  // namespace

std::vector<Cycle> list_induced_cycles(const Graph& g, int k) {
    std::vector<Cycle> out;
    if (k == 3) {
        for (Edge e : g.edges())
            for (Vertex w : intersect(g.neighbors(e.u), g.neighbors(e.v)))
                if (w > e.v) out.push_back({e.u, e.v, w});
    } else if (k == 4) {
        for (Vertex a : g.vertices()) {
            std::map<Vertex, std::vector<Vertex>> via;  // c -> middle vertices b
            for (Vertex b : g.neighbors(a)) {
                if (b < a) continue;
                for (Vertex c : g.neighbors(b))
                    if (c > a && !g.has_edge(a, c)) via[c].push_back(b);
            }
            for (auto& [c, mids] : via)
                for (std::size_t i = 0; i < mids.size(); ++i)
                    for (std::size_t j = i + 1; j < mids.size(); ++j)
                        if (!g.has_edge(mids[i], mids[j])) out.push_back({a, mids[i], c, mids[j]});
        }
    } else if (k == 5) {
        for (Vertex a : g.vertices())
            for (Vertex b : g.neighbors(a)) {
                if (b < a) continue;
                for (Vertex c : g.neighbors(b)) {
                    if (c < a || g.has_edge(a, c)) continue;
                    for (Vertex d : g.neighbors(c)) {
                        if (d < a || d == b || g.has_edge(a, d) || g.has_edge(b, d)) continue;
                        for (Vertex e : intersect(g.neighbors(d), g.neighbors(a))) {
                            if (e <= b || e == c || g.has_edge(e, b) || g.has_edge(e, c)) continue;
                            out.push_back({a, b, c, d, e});
                        }
                    }
                }
            }
    } else {
        throw GraphError("list_induced_cycles supports k = 3, 4, 5");
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Vertex> degeneracy_order(const Graph& g, int* degeneracy) {
    const Vertex bound = g.id_bound();
    std::vector<int> deg(bound, -1);
    int maxdeg = 0;
    for (Vertex v : g.vertices()) {
        deg[v] = g.degree(v);
        maxdeg = std::max(maxdeg, deg[v]);
    }
    std::vector<std::vector<Vertex>> bucket(maxdeg + 1);
    for (Vertex v : g.vertices()) bucket[deg[v]].push_back(v);
    std::vector<char> done(bound, 0);
    std::vector<Vertex> order;
    int best = 0;
    int d = 0;
    while (static_cast<int>(order.size()) < g.vertex_count()) {
        d = std::max(0, d - 1);
        while (bucket[d].empty()) ++d;
        Vertex v = bucket[d].back();
        bucket[d].pop_back();
        if (done[v] || deg[v] != d) continue;
        done[v] = 1;
        best = std::max(best, d);
        order.push_back(v);
        for (Vertex w : g.neighbors(v))
            if (!done[w]) bucket[--deg[w]].push_back(w);
    }
    if (degeneracy) *degeneracy = best;
    return order;
}

VertexSet common_neighbors(const Graph& g, const VertexSet& s) {
    if (s.empty()) return g.vertices();
    VertexSet acc = g.neighbors(s[0]);
    for (std::size_t i = 1; i < s.size() && !acc.empty(); ++i) acc = intersect(acc, g.neighbors(s[i]));
    return acc;
}

bool is_clique(const Graph& g, const VertexSet& s) {
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (!g.has_edge(s[i], s[j])) return false;
    return true;
}

namespace {

// Calls f(clique) for every clique of size `want` (sorted), via forward neighbourhoods
// in degeneracy order.
template <class F>
void for_each_clique(const Graph& g, int want, F&& f) {
    auto order = degeneracy_order(g);
    std::vector<int> rank(g.id_bound(), -1);
    for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = static_cast<int>(i);
    VertexSet cur;
    std::function<void(const VertexSet&)> grow = [&](const VertexSet& cand) {
        if (static_cast<int>(cur.size()) == want) {
            VertexSet s = cur;
            std::sort(s.begin(), s.end());
            f(s);
            return;
        }
        for (std::size_t i = 0; i < cand.size(); ++i) {
            Vertex w = cand[i];
            VertexSet next;
            for (std::size_t j = i + 1; j < cand.size(); ++j)
                if (g.has_edge(w, cand[j])) next.push_back(cand[j]);
            if (static_cast<int>(cur.size() + 1 + next.size()) < want) continue;
            cur.push_back(w);
            grow(next);
            cur.pop_back();
        }
    };
    for (Vertex v : order) {
        VertexSet fwd;
        for (Vertex w : g.neighbors(v))
            if (rank[w] > rank[v]) fwd.push_back(w);
        if (static_cast<int>(fwd.size()) + 1 < want) continue;
        cur.assign(1, v);
        grow(fwd);
    }
}

}  // namespace

bool has_k_clique(const Graph& g, int k) {
    bool found = false;
    struct Stop {};
    try {
        for_each_clique(g, k, [&](const VertexSet&) {
            found = true;
            throw Stop{};
        });
    } catch (const Stop&) {
    }
    return found;
}

CliqueListing list_maximal_cliques_4_5(const Graph& g) {
    CliqueListing out;
    for_each_clique(g, 4, [&](const VertexSet& s) {
        if (common_neighbors(g, s).empty()) out.k4.push_back({s[0], s[1], s[2], s[3]});
    });
    for_each_clique(g, 5, [&](const VertexSet& s) {
        if (common_neighbors(g, s).empty())
            out.k5.push_back({s[0], s[1], s[2], s[3], s[4]});
        else
            out.oversize = true;
    });
    std::sort(out.k4.begin(), out.k4.end());
    std::sort(out.k5.begin(), out.k5.end());
    return out;
}

EdgeSet crossable_set(const Graph& g, Edge e) {
    EdgeSet out;
    if (g.marked(e)) return out;
    VertexSet common = intersect(g.neighbors(e.u), g.neighbors(e.v));
    for (std::size_t i = 0; i < common.size(); ++i)
        for (std::size_t j = i + 1; j < common.size(); ++j) {
            Vertex x = common[i], y = common[j];
            if (!g.has_edge(x, y) || g.marked({x, y})) continue;
            VertexSet k{e.u, e.v, x, y};
            std::sort(k.begin(), k.end());
            if (common_neighbors(g, k).empty()) out.push_back({x, y});
        }
    return out;
}

void CrossableIndex::rebuild(const Graph& g) {
    sets_.clear();
    for (Edge e : g.edges()) {
        EdgeSet s = crossable_set(g, e);
        if (!s.empty()) sets_[key(e)] = std::move(s);
    }
}

void CrossableIndex::refresh(const Graph& g, const VertexSet& touched) {
    std::vector<char> near(g.id_bound() + 1, 0);
    for (Vertex t : touched) {
        if (t < static_cast<Vertex>(near.size())) near[t] = 1;
        if (!g.has_vertex(t)) continue;
        for (Vertex w : g.neighbors(t)) near[w] = 1;
    }
    for (auto it = sets_.begin(); it != sets_.end();) {
        Edge e{static_cast<Vertex>(it->first >> 32), static_cast<Vertex>(it->first & 0xffffffffu)};
        bool hit = (e.u < static_cast<Vertex>(near.size()) && near[e.u]) ||
                   (e.v < static_cast<Vertex>(near.size()) && near[e.v]);
        if (hit)
            it = sets_.erase(it);
        else
            ++it;
    }
    for (Vertex v = 0; v < static_cast<Vertex>(near.size()); ++v) {
        if (!near[v] || !g.has_vertex(v)) continue;
        for (Vertex w : g.neighbors(v)) {
            if (near[w] && w < v) continue;  // handled from w
            Edge e = make_edge(v, w);
            EdgeSet s = crossable_set(g, e);
            if (!s.empty()) sets_[key(e)] = std::move(s);
        }
    }
}

const EdgeSet& CrossableIndex::of(Edge e) const {
    static const EdgeSet none;
    auto it = sets_.find(key(e));
    return it == sets_.end() ? none : it->second;
}

bool CrossableIndex::contains(Edge e, Edge f) const {
    const EdgeSet& s = of(e);
    return std::binary_search(s.begin(), s.end(), f);
}

bool CrossableIndex::empty() const { return sets_.empty(); }

BridgeResult bridge_set(const Graph& g, const VertexSet& s, const EdgeSet& t) {
    BridgeResult out;
    out.parts = components_after_removal(g, s, t);
    if (out.parts.size() < 2) return out;
    std::vector<int> part(g.id_bound(), -1);
    for (std::size_t i = 0; i < out.parts.size(); ++i)
        for (Vertex v : out.parts[i]) part[v] = static_cast<int>(i);
    for (Edge e : t)
        if (part[e.u] >= 0 && part[e.v] >= 0 && part[e.u] != part[e.v]) out.bridges.push_back(e);
    return out;
}

BridgePattern bridge_pattern(const Graph& g, const Cycle& c, const CrossableIndex& idx) {
    if (c.size() != 4) throw GraphError("bridge pattern needs a 4-cycle");
    if (g.has_edge(c[0], c[2]) || g.has_edge(c[1], c[3]))
        throw GraphError("bridge pattern: cycle has a chord");
    VertexSet s(c.begin(), c.end());
    std::sort(s.begin(), s.end());
    std::array<Edge, 4> ce;
    for (int i = 0; i < 4; ++i) ce[i] = make_edge(c[i], c[(i + 1) % 4]);
    BridgePattern bp;
    for (int i = 0; i < 4; ++i) {
        const EdgeSet& ei = idx.of(ce[i]);
        BridgeResult br = bridge_set(g, s, ei);
        if (br.parts.size() < 2) continue;
        std::array<int, 4> l{0, 0, 0, 0};
        for (int j = 0; j < 4; ++j)
            for (Edge b : br.bridges)
                if (j == i || idx.contains(ce[j], b)) ++l[j];
        bp.beta[i] = l;
    }
    return bp;
}

BridgePattern bridge_pattern(const Graph& g, const Cycle& c) {
    CrossableIndex idx(g);
    return bridge_pattern(g, c, idx);
}

}  // namespace t1p
