#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace t1p {

using Vertex = int;

// Undirected edge, always stored with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

Edge make_edge(Vertex a, Vertex b);
inline bool independent(Edge a, Edge b) {
    return a.u != b.u && a.u != b.v && a.v != b.u && a.v != b.v;
}
inline bool touches(Edge e, Vertex x) { return e.u == x || e.v == x; }
std::string to_string(Edge e);

using VertexSet = std::vector<Vertex>;  // sorted, unique
using EdgeSet = std::vector<Edge>;      // sorted, unique

class GraphError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Thrown when an internal invariant is broken; always a bug, never bad input.
class ContractError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

struct EdgeState {
    bool marked = false;
    std::uint64_t label = 1;
};

class Graph {
public:
    Graph() = default;

    void add_vertex(Vertex v);
    Vertex add_fresh_vertex();
    // Returns false when the edge already exists. Loops throw GraphError.
    bool add_edge(Vertex a, Vertex b);
    void remove_edge(Vertex a, Vertex b);
    void remove_vertex(Vertex v);

    bool has_vertex(Vertex v) const {
        return v >= 0 && v < static_cast<Vertex>(present_.size()) && present_[v];
    }
    bool has_edge(Vertex a, Vertex b) const;
    bool has_edge(Edge e) const { return has_edge(e.u, e.v); }
    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
    int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }
    // One past the largest id ever present; ids of removed vertices stay reserved.
    Vertex id_bound() const { return static_cast<Vertex>(present_.size()); }

    VertexSet vertices() const;
    EdgeSet edges() const;

    bool marked(Edge e) const;
    void mark(Edge e);
    std::uint64_t label(Edge e) const;
    void set_label(Edge e, std::uint64_t t);
    EdgeState state(Edge e) const;

    // Subgraph induced by `keep`, inheriting edge states. Ids are preserved.
    Graph induced(const VertexSet& keep) const;

private:
    static std::uint64_t key(Edge e) {
        return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(e.u)) << 32) |
               static_cast<std::uint32_t>(e.v);
    }
    void require_edge(Edge e) const;

    std::vector<std::vector<Vertex>> adj_;
    std::vector<char> present_;
    int n_ = 0;
    int m_ = 0;
    std::unordered_map<std::uint64_t, EdgeState> state_;
};

Graph build_graph(const std::vector<std::pair<Vertex, Vertex>>& edges);

void mark_edge(Graph& g, Edge e);
void set_label(Graph& g, Edge e, std::uint64_t t);

bool is_connected(const Graph& g);

// Components of G - S - F, each sorted, ordered by smallest member.
std::vector<VertexSet> components_after_removal(const Graph& g, const VertexSet& s,
                                                const EdgeSet& f);

// Max number of internally disjoint s-t paths, capped at `cap`. s and t non-adjacent.
int local_vertex_connectivity(const Graph& g, Vertex s, Vertex t, int cap);

// True iff no vertex cut of size < k exists; K_n counts as (n-1)-connected.
bool vertex_connectivity_at_least(const Graph& g, int k);

}  // namespace t1p
