#include "t1p/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <map>

namespace t1p {

namespace {

struct Candidate {
    int e1, e2;             // edge indices
    std::array<int, 4> kite;
};

class Search {
public:
    Search(const Graph& g, const OracleConstraints& c) : g_(g), c_(c) {
        edges_ = g.edges();
        for (std::size_t i = 0; i < edges_.size(); ++i) index_[edges_[i]] = static_cast<int>(i);
        crossed_.assign(edges_.size(), 0);
        pinned_.assign(edges_.size(), 0);
        for (Edge e : c.uncrossed_edges) {
            auto it = index_.find(e);
            if (it == index_.end()) throw GraphError("constraint edge " + to_string(e) + " not in graph");
            pinned_[it->second] = 1;
        }
        if (c.required_face) faces_.push_back(*c.required_face);
        faces_.insert(faces_.end(), c.required_faces.begin(), c.required_faces.end());
        for (const Cycle& f : faces_) {
            for (std::size_t i = 0; i < f.size(); ++i) {
                auto it = index_.find(make_edge(f[i], f[(i + 1) % f.size()]));
                if (it == index_.end()) throw GraphError("required face uses a non-edge");
                pinned_[it->second] = 1;
            }
        }
        build_candidates();
        deadline_ = std::chrono::steady_clock::now() +
                    std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                        std::chrono::duration<double>(c.time_budget_s));
    }

    std::vector<CrossingSet> run(int k, bool quad_exception) {
        quad_exception_ = quad_exception;
        want_ = k;
        chosen_.clear();
        dfs(0);
        return found_;
    }

private:
    int idx(Vertex a, Vertex b) const { return index_.at(make_edge(a, b)); }

    void build_candidates() {
        for (std::size_t i = 0; i < edges_.size(); ++i) {
            Edge a = edges_[i];
            if (pinned_[i]) continue;
            for (std::size_t j = i + 1; j < edges_.size(); ++j) {
                Edge b = edges_[j];
                if (pinned_[j] || !independent(a, b)) continue;
                if (!g_.has_edge(a.u, b.u) || !g_.has_edge(a.u, b.v) || !g_.has_edge(a.v, b.u) ||
                    !g_.has_edge(a.v, b.v))
                    continue;
                cands_.push_back({static_cast<int>(i), static_cast<int>(j),
                                  {idx(a.u, b.u), idx(b.u, a.v), idx(a.v, b.v), idx(b.v, a.u)}});
            }
        }
    }

    void dfs(std::size_t from) {
        if (++nodes_ % 1024 == 0 && std::chrono::steady_clock::now() > deadline_)
            throw OracleTimeout("oracle time budget exceeded");
        if (static_cast<int>(chosen_.size()) == want_) {
            check_leaf();
            return;
        }
        for (std::size_t i = from; i < cands_.size(); ++i) {
            if (cands_.size() - i < static_cast<std::size_t>(want_) - chosen_.size()) return;
            const Candidate& c = cands_[i];
            if (crossed_[c.e1] || crossed_[c.e2] || pinned_[c.e1] || pinned_[c.e2]) continue;
            bool ok = true;
            for (int k : c.kite)
                if (crossed_[k]) ok = false;
            if (!ok) continue;
            crossed_[c.e1] = crossed_[c.e2] = 1;
            for (int k : c.kite) ++pinned_[k];
            chosen_.push_back(i);
            dfs(i + 1);
            chosen_.pop_back();
            for (int k : c.kite) --pinned_[k];
            crossed_[c.e1] = crossed_[c.e2] = 0;
        }
    }

    void check_leaf() {
        CrossingSet cs;
        for (std::size_t i : chosen_) cs.push_back(make_pair_of(edges_[cands_[i].e1], edges_[cands_[i].e2]));
        std::sort(cs.begin(), cs.end());
        std::vector<Vertex> dummies;
        Graph p = planarization_graph(g_, cs, &dummies);
        auto res = planarity_check(p);
        if (!res.planar) return;
        auto faces = faces_of(*res.embedding);
        for (const Face& f : faces) {
            if (f.size() == 3) continue;
            if (!quad_exception_ || f.size() != 4 || cs.size() != 1) return;
            // the only non-triangle must be the kite cycle; dummies are never on it
            for (Vertex v : f)
                if (!g_.has_vertex(v)) return;
        }
        for (const Cycle& f : faces_)
            if (find_face(faces, f) < 0) return;
        if (g_.vertex_count() >= 5) {
            Graph skel = g_;
            for (auto& [a, b] : cs) {
                skel.remove_edge(a.u, a.v);
                skel.remove_edge(b.u, b.v);
            }
            if (!vertex_connectivity_at_least(skel, 3))
                throw ContractError("oracle: accepted embedding has a skeleton that is not 3-connected");
        }
        found_.push_back(std::move(cs));
    }

    const Graph& g_;
    const OracleConstraints& c_;
    std::vector<Cycle> faces_;
    EdgeSet edges_;
    std::map<Edge, int> index_;
    std::vector<Candidate> cands_;
    std::vector<int> crossed_, pinned_;
    std::vector<std::size_t> chosen_;
    std::vector<CrossingSet> found_;
    int want_ = 0;
    bool quad_exception_ = false;
    long nodes_ = 0;
    std::chrono::steady_clock::time_point deadline_;
};

}  // namespace

std::vector<CrossingSet> oracle_crossing_sets(const Graph& g, const OracleConstraints& c) {
    const int n = g.vertex_count();
    const int m = g.edge_count();
    if (n > c.max_vertices)
        throw OracleLimit("oracle limited to " + std::to_string(c.max_vertices) + " vertices, got " +
                          std::to_string(n));
    if (n < 3 || !is_connected(g)) return {};
    const int k = m - (3 * n - 6);
    std::vector<CrossingSet> out;
    if (k >= 0 && k <= std::max(0, n - 2)) out = Search(g, c).run(k, false);
    if (n == 4 && k == 0) {
        // K4 may also be drawn as an X-quadrangle with its quadrilateral as the back face.
        auto more = Search(g, c).run(1, true);
        out.insert(out.end(), more.begin(), more.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<T1PEmbedding> oracle_enumerate(const Graph& g, const OracleConstraints& c) {
    std::vector<T1PEmbedding> out;
    for (const CrossingSet& cs : oracle_crossing_sets(g, c)) {
        auto emb = embed_with_crossings(g, cs);
        if (!emb) throw ContractError("oracle: accepted crossing set is not planar");
        out.push_back(std::move(*emb));
    }
    return out;
}

long oracle_count(const Graph& g, const OracleConstraints& c) {
    return static_cast<long>(oracle_crossing_sets(g, c).size());
}

bool oracle_decide(const Graph& g) { return oracle_count(g) > 0; }

}  // namespace t1p
