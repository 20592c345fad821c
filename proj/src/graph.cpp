#include "t1p/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>

namespace t1p {

Edge make_edge(Vertex a, Vertex b) {
    return a < b ? Edge{a, b} : Edge{b, a};
}

std::string to_string(Edge e) {
    return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

void Graph::add_vertex(Vertex v) {
    if (v < 0) throw GraphError("negative vertex id " + std::to_string(v));
    if (v >= id_bound()) {
        adj_.resize(v + 1);
        present_.resize(v + 1, 0);
    }
    if (!present_[v]) {
        present_[v] = 1;
        ++n_;
    }
}

Vertex Graph::add_fresh_vertex() {
    Vertex v = id_bound();
    add_vertex(v);
    return v;
}

bool Graph::has_edge(Vertex a, Vertex b) const {
    if (!has_vertex(a) || !has_vertex(b)) return false;
    const auto& na = adj_[a].size() <= adj_[b].size() ? adj_[a] : adj_[b];
    Vertex other = adj_[a].size() <= adj_[b].size() ? b : a;
    return std::binary_search(na.begin(), na.end(), other);
}

bool Graph::add_edge(Vertex a, Vertex b) {
    if (a == b) throw GraphError("loop edge (" + std::to_string(a) + "," + std::to_string(b) + ")");
    add_vertex(a);
    add_vertex(b);
    auto& na = adj_[a];
    auto it = std::lower_bound(na.begin(), na.end(), b);
    if (it != na.end() && *it == b) return false;
    na.insert(it, b);
    auto& nb = adj_[b];
    nb.insert(std::lower_bound(nb.begin(), nb.end(), a), a);
    state_.emplace(key(make_edge(a, b)), EdgeState{});
    ++m_;
    return true;
}

void Graph::remove_edge(Vertex a, Vertex b) {
    Edge e = make_edge(a, b);
    require_edge(e);
    auto& na = adj_[a];
    na.erase(std::lower_bound(na.begin(), na.end(), b));
    auto& nb = adj_[b];
    nb.erase(std::lower_bound(nb.begin(), nb.end(), a));
    state_.erase(key(e));
    --m_;
}

void Graph::remove_vertex(Vertex v) {
    if (!has_vertex(v)) throw GraphError("no vertex " + std::to_string(v));
    auto nbrs = adj_[v];
    for (Vertex w : nbrs) remove_edge(v, w);
    present_[v] = 0;
    --n_;
}

VertexSet Graph::vertices() const {
    VertexSet out;
    out.reserve(n_);
    for (Vertex v = 0; v < id_bound(); ++v)
        if (present_[v]) out.push_back(v);
    return out;
}

EdgeSet Graph::edges() const {
    EdgeSet out;
    out.reserve(m_);
    for (Vertex v = 0; v < id_bound(); ++v)
        for (Vertex w : adj_[v])
            if (v < w) out.push_back({v, w});
    return out;
}

void Graph::require_edge(Edge e) const {
    if (!has_edge(e)) throw GraphError("no edge " + to_string(e));
}

bool Graph::marked(Edge e) const {
    auto it = state_.find(key(e));
    if (it == state_.end()) throw GraphError("no edge " + to_string(e));
    return it->second.marked;
}

void Graph::mark(Edge e) {
    auto it = state_.find(key(e));
    if (it == state_.end()) throw GraphError("no edge " + to_string(e));
    it->second.marked = true;
}

std::uint64_t Graph::label(Edge e) const {
    auto it = state_.find(key(e));
    if (it == state_.end()) throw GraphError("no edge " + to_string(e));
    return it->second.label;
}

void Graph::set_label(Edge e, std::uint64_t t) {
    auto it = state_.find(key(e));
    if (it == state_.end()) throw GraphError("no edge " + to_string(e));
    if (t < 1) throw ContractError("label must be positive on " + to_string(e));
    if (it->second.label > 1)
        throw ContractError("relabeling " + to_string(e) + " which already has label " +
                            std::to_string(it->second.label));
    it->second.label = t;
}

EdgeState Graph::state(Edge e) const {
    auto it = state_.find(key(e));
    if (it == state_.end()) throw GraphError("no edge " + to_string(e));
    return it->second;
}

Graph Graph::induced(const VertexSet& keep) const {
    Graph h;
    std::vector<char> in(id_bound(), 0);
    for (Vertex v : keep) {
        if (!has_vertex(v)) throw GraphError("no vertex " + std::to_string(v));
        in[v] = 1;
        h.add_vertex(v);
    }
    for (Vertex v : keep)
        for (Vertex w : adj_[v])
            if (v < w && in[w]) {
                h.add_edge(v, w);
                h.state_[key({v, w})] = state_.at(key({v, w}));
            }
    return h;
}

Graph build_graph(const std::vector<std::pair<Vertex, Vertex>>& edges) {
    Graph g;
    for (auto [a, b] : edges) g.add_edge(a, b);
    return g;
}

void mark_edge(Graph& g, Edge e) { g.mark(e); }
void set_label(Graph& g, Edge e, std::uint64_t t) { g.set_label(e, t); }

bool is_connected(const Graph& g) {
    return components_after_removal(g, {}, {}).size() <= 1;
}

std::vector<VertexSet> components_after_removal(const Graph& g, const VertexSet& s,
                                                const EdgeSet& f) {
    const Vertex bound = g.id_bound();
    std::vector<int> comp(bound, -1);
    for (Vertex v : s) comp[v] = -2;
    auto removed = [&](Vertex a, Vertex b) {
        return !f.empty() && std::binary_search(f.begin(), f.end(), make_edge(a, b));
    };
    std::vector<VertexSet> out;
    std::vector<Vertex> stack;
    for (Vertex r = 0; r < bound; ++r) {
        if (!g.has_vertex(r) || comp[r] != -1) continue;
        int id = static_cast<int>(out.size());
        out.emplace_back();
        comp[r] = id;
        stack.push_back(r);
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            out.back().push_back(v);
            for (Vertex w : g.neighbors(v))
                if (comp[w] == -1 && !removed(v, w)) {
                    comp[w] = id;
                    stack.push_back(w);
                }
        }
        std::sort(out.back().begin(), out.back().end());
    }
    return out;
}

namespace {

// Vertex-split unit-capacity network: v_in = 2v, v_out = 2v+1.
class SplitNetwork {
public:
    explicit SplitNetwork(const Graph& g) {
        const Vertex bound = g.id_bound();
        head_.assign(2 * bound, -1);
        for (Vertex v = 0; v < bound; ++v) {
            if (!g.has_vertex(v)) continue;
            add_arc(2 * v, 2 * v + 1);
            for (Vertex w : g.neighbors(v)) add_arc(2 * v + 1, 2 * w);
        }
        flow_.assign(to_.size(), 0);
        parent_.assign(head_.size(), -1);
    }

    int max_flow(Vertex s, Vertex t, int cap) {
        std::fill(flow_.begin(), flow_.end(), 0);
        const int src = 2 * s + 1, dst = 2 * t;
        int total = 0;
        std::deque<int> q;
        while (total < cap) {
            std::fill(parent_.begin(), parent_.end(), -1);
            parent_[src] = -2;
            q.assign(1, src);
            bool found = false;
            while (!q.empty() && !found) {
                int x = q.front();
                q.pop_front();
                for (int a = head_[x]; a != -1; a = next_[a]) {
                    int y = to_[a];
                    if (parent_[y] != -1 || residual(a) <= 0) continue;
                    parent_[y] = a;
                    if (y == dst) {
                        found = true;
                        break;
                    }
                    q.push_back(y);
                }
            }
            if (!found) break;
            for (int y = dst; y != src;) {
                int a = parent_[y];
                flow_[a] += 1;
                flow_[a ^ 1] -= 1;
                y = to_[a ^ 1];
            }
            ++total;
        }
        return total;
    }

private:
    void add_arc(int a, int b) {
        to_.push_back(b);
        cap_.push_back(1);
        next_.push_back(head_[a]);
        head_[a] = static_cast<int>(to_.size()) - 1;
        to_.push_back(a);
        cap_.push_back(0);
        next_.push_back(head_[b]);
        head_[b] = static_cast<int>(to_.size()) - 1;
    }
    int residual(int a) const { return cap_[a] - flow_[a]; }

    std::vector<int> head_, next_, to_, cap_, flow_, parent_;
};

}  // namespace

int local_vertex_connectivity(const Graph& g, Vertex s, Vertex t, int cap) {
    if (g.has_edge(s, t)) throw GraphError("local connectivity of adjacent vertices");
    SplitNetwork net(g);
    return net.max_flow(s, t, cap);
}

bool vertex_connectivity_at_least(const Graph& g, int k) {
    const int n = g.vertex_count();
    if (k <= 0) return true;
    if (n <= k) return false;
    if (k == 1) return is_connected(g);
    for (Vertex v : g.vertices())
        if (g.degree(v) < k) return false;
    // Any cut S with |S| < k misses one of k fixed vertices x; S then separates x
    // from some non-adjacent vertex, so testing the pairs (x, v) suffices.
    VertexSet all = g.vertices();
    SplitNetwork net(g);
    for (int i = 0; i < k; ++i) {
        Vertex x = all[i];
        for (Vertex v : all) {
            if (v == x || g.has_edge(x, v)) continue;
            if (v < x && std::find(all.begin(), all.begin() + k, v) != all.begin() + k)
                continue;  // pair already tested from the other side
            if (net.max_flow(x, v, k) < k) return false;
        }
    }
    return true;
}

}  // namespace t1p
