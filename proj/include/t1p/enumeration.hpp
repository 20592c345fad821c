#pragma once

#include <array>
#include <optional>
#include <unordered_map>
#include <vector>

#include "t1p/graph.hpp"

namespace t1p {

using Cycle = std::vector<Vertex>;

// Chordless k-cycles (k = 3, 4, 5), each once, starting at its smallest vertex and
// continuing towards the smaller of that vertex's two cycle neighbours.
std::vector<Cycle> list_induced_cycles(const Graph& g, int k);

struct CliqueListing {
    std::vector<std::array<Vertex, 4>> k4;  // maximal 4-cliques, sorted
    std::vector<std::array<Vertex, 5>> k5;  // maximal 5-cliques, sorted
    bool oversize = false;                  // some 6-clique exists
};
CliqueListing list_maximal_cliques_4_5(const Graph& g);

VertexSet common_neighbors(const Graph& g, const VertexSet& s);
bool is_clique(const Graph& g, const VertexSet& s);
bool has_k_clique(const Graph& g, int k);

// Unmarked edges independent of e that form a maximal 4-clique with it.
EdgeSet crossable_set(const Graph& g, Edge e);

class CrossableIndex {
public:
    CrossableIndex() = default;
    explicit CrossableIndex(const Graph& g) { rebuild(g); }
    void rebuild(const Graph& g);
    // Recompute the entries of edges with an endpoint in the closed neighbourhood
    // of `touched` (enough after an edge removal or mark among `touched`).
    void refresh(const Graph& g, const VertexSet& touched);
    const EdgeSet& of(Edge e) const;
    bool contains(Edge e, Edge f) const;
    bool empty() const;  // no edge has a crossable partner

private:
    static std::uint64_t key(Edge e) {
        return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(e.u)) << 32) |
               static_cast<std::uint32_t>(e.v);
    }
    std::unordered_map<std::uint64_t, EdgeSet> sets_;
};

struct BridgeResult {
    EdgeSet bridges;
    std::vector<VertexSet> parts;
};
BridgeResult bridge_set(const Graph& g, const VertexSet& s, const EdgeSet& t);

// beta[i] is empty when G - C - E(e_i) is connected; e_i = (c_i, c_{i+1}).
struct BridgePattern {
    std::array<std::optional<std::array<int, 4>>, 4> beta;
    friend bool operator==(const BridgePattern&, const BridgePattern&) = default;
};
BridgePattern bridge_pattern(const Graph& g, const Cycle& c, const CrossableIndex& idx);
BridgePattern bridge_pattern(const Graph& g, const Cycle& c);

// Degeneracy order (smallest-last); used for orienting clique searches.
std::vector<Vertex> degeneracy_order(const Graph& g, int* degeneracy = nullptr);

}  // namespace t1p
