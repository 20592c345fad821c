#include "t1p/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/max_cardinality_matching.hpp>

#include "t1p/oracle.hpp"
#include "t1p/two_star.hpp"

namespace t1p {

PreprocessResult preprocess(const Graph& g) {
    PreprocessResult r;
    const long n = g.vertex_count(), m = g.edge_count();
    if (n < 3) {
        r.reason = "too few vertices";
        return r;
    }
    if (has_k_clique(g, 7)) {
        r.reason = "contains K7";
        return r;
    }
    if (m < 3 * n - 6 || m > std::max(3 * n - 6, 4 * n - 8)) {
        r.reason = "edge count";
        return r;
    }
    if (!is_connected(g)) {
        r.reason = "disconnected";
        return r;
    }
    if (n >= 5 && !vertex_connectivity_at_least(g, 3)) {
        r.reason = "not 3-connected";
        return r;
    }
    r.contains_k6 = has_k_clique(g, 6);
    r.ok = true;
    return r;
}

GraphDelta mark_non_clique_edges(Graph& g) {
    GraphDelta d;
    for (Edge e : g.edges()) {
        VertexSet common;
        std::set_intersection(g.neighbors(e.u).begin(), g.neighbors(e.u).end(), g.neighbors(e.v).begin(),
                              g.neighbors(e.v).end(), std::back_inserter(common));
        bool in_k4 = false;
        for (std::size_t i = 0; i < common.size() && !in_k4; ++i)
            for (std::size_t j = i + 1; j < common.size() && !in_k4; ++j)
                in_k4 = g.has_edge(common[i], common[j]);
        if (!in_k4) {
            g.mark(e);
            d.marked_edges.push_back(e);
        }
    }
    return d;
}

LeafRecord handle_small(const Graph& g, const std::vector<Cycle>& required_faces, int oracle_limit) {
    OracleConstraints c;
    for (Edge e : g.edges())
        if (g.marked(e)) c.uncrossed_edges.push_back(e);
    c.required_faces = required_faces;
    c.max_vertices = oracle_limit;
    auto sets = oracle_crossing_sets(g, c);
    LeafRecord leaf;
    leaf.method = "oracle";
    leaf.count = sets.size();
    if (!sets.empty()) leaf.chosen = sets.front();
    return leaf;
}

CrossingSet finalize_candidates(const Graph& g) {
    CrossingSet out;
    for (Edge e : g.edges())
        for (Edge f : k4_partners(g, e))
            if (e < f) out.push_back(make_pair_of(e, f));
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<CrossingSet> finalize_xquads(const Graph& g) {
    CrossingSet cand = finalize_candidates(g);
    const long want = g.edge_count() - (3L * g.vertex_count() - 6);
    if (static_cast<long>(cand.size()) != want) return std::nullopt;
    std::set<Edge> used;
    for (auto& [a, b] : cand)
        if (!used.insert(a).second || !used.insert(b).second) return std::nullopt;
    return cand;
}

std::optional<T1PEmbedding> reconstruct_witness(const Graph& original, const CrossingSet& crossings) {
    CrossingSet cs = crossings;
    std::sort(cs.begin(), cs.end());
    auto emb = embed_with_crossings(original, cs);
    if (!emb || !validate_t1p(original, *emb).ok) return std::nullopt;
    return emb;
}

Count count_embeddings(const ReductionTrace& trace) {
    std::map<int, std::vector<const TraceEntry*>> by;
    for (const auto& e : trace.entries) by[e.component].push_back(&e);
    if (by.empty()) return 0;
    std::map<int, Count> memo;
    auto value = [&](auto&& self, int c) -> Count {
        if (auto it = memo.find(c); it != memo.end()) return it->second;
        Count mult = 1;
        std::optional<Count> result;
        for (const TraceEntry* e : by[c])
            if (e->kind == "Reject") result = 0;
        for (const TraceEntry* e : by[c]) {
            if (result) break;
            if (e->delta)
                for (const auto& [edge, t] : e->delta->label_assignments) mult *= t;
            if (e->kind == "Reject") {
                result = 0;
            } else if (e->leaf) {
                result = mult * e->leaf->count;
            } else if (e->delta && e->delta->family) {
                result = mult;
            } else if (e->delta && e->delta->split) {
                Count p = mult;
                for (int ch : e->children) p *= self(self, ch);
                result = p;
            } else if (e->delta && e->delta->branch) {
                Count s = 0;
                for (int ch : e->children) s += self(self, ch);
                result = mult * s;
            }
            if (result) break;
        }
        if (!result) throw ContractError("trace: component " + std::to_string(c) + " has no outcome");
        memo[c] = *result;
        return *result;
    };
    return value(value, by.begin()->first);
}

namespace {

struct Component {
    int id = 0;
    Graph g;
    std::vector<Cycle> faces;  // each sorted
};

struct Res {
    Count count = 0;
    CrossingSet crossings;
    std::string reason;
};

Cycle sorted_face(Cycle f) {
    std::sort(f.begin(), f.end());
    return f;
}

void add_face(std::vector<Cycle>& faces, const Cycle& f) {
    Cycle s = sorted_face(f);
    if (std::find(faces.begin(), faces.end(), s) == faces.end()) faces.push_back(s);
}

SeparatorKind family_kind(TwoStarVariant v) {
    switch (v) {
        case TwoStarVariant::handle: return SeparatorKind::K5Triple;
        case TwoStarVariant::x: return SeparatorKind::K5Destroyer;
        case TwoStarVariant::full: return SeparatorKind::AmbiguousTripod;
        default: return SeparatorKind::AmbiguousQuadruple;
    }
}

// Largest set of candidate pairs with no edge in two of them.
long max_pair_matching(const CrossingSet& cand, const std::set<Edge>& crossable) {
    using PairGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
    std::map<Edge, int> id;
    for (Edge e : crossable) id.emplace(e, static_cast<int>(id.size()));
    PairGraph pg(id.size());
    for (auto& [a, b] : cand) boost::add_edge(id[a], id[b], pg);
    std::vector<boost::graph_traits<PairGraph>::vertex_descriptor> mate(id.size());
    boost::edmonds_maximum_cardinality_matching(pg, &mate[0]);
    return static_cast<long>(boost::matching_size(pg, &mate[0]));
}

class Engine {
public:
    explicit Engine(const RecognizeOptions& opt) : opt_(opt), start_(std::chrono::steady_clock::now()) {}

    ReductionOutcome run(const Graph& g) {
        Component root{0, g, {}};
        next_id_ = 1;
        Res r = solve(std::move(root), std::nullopt, "");
        ReductionOutcome out;
        out.count = r.count;
        out.crossings = r.crossings;
        std::sort(out.crossings.begin(), out.crossings.end());
        out.reason = r.reason;
        out.trace = std::move(trace_);
        return out;
    }

private:
    void tick() {
        if (++components_ > opt_.max_components) throw RecognitionBudget("component budget exceeded");
        if (opt_.time_budget_s > 0) {
            std::chrono::duration<double> el = std::chrono::steady_clock::now() - start_;
            if (el.count() > opt_.time_budget_s) throw RecognitionBudget("time budget exceeded");
        }
    }

    TraceEntry& record(const Component& c, std::string kind) {
        TraceEntry e;
        e.component = c.id;
        e.kind = std::move(kind);
        e.vertices = c.g.vertex_count();
        e.edges = c.g.edge_count();
        trace_.entries.push_back(std::move(e));
        return trace_.entries.back();
    }

    Res reject(const Component& c, const std::string& why) {
        record(c, "Reject").note = why;
        return {0, {}, why};
    }

    Res leaf(const Component& c, LeafRecord lr, const Count& mult, CrossingSet local, const std::string& why) {
        Res r;
        r.count = mult * lr.count;
        if (lr.count > 0) {
            local.insert(local.end(), lr.chosen.begin(), lr.chosen.end());
            r.crossings = std::move(local);
        } else {
            r.reason = why;
        }
        record(c, "Leaf").leaf = std::move(lr);
        return r;
    }

    // Applies the non-structural part of a delta; false when a required face lost an edge.
    void apply_local(Component& c, const GraphDelta& d, Count& mult, CrossingSet& local) {
        for (const auto& [e, t] : d.label_assignments) mult *= t;
        for (const RemovedEdge& r : d.removed_edges) {
            c.g.remove_edge(r.edge.u, r.edge.v);
            if (r.partner) local.push_back(make_pair_of(r.edge, *r.partner));
        }
        for (Edge e : d.marked_edges) {
            if (!c.g.has_edge(e)) throw ContractError("delta marks missing edge " + to_string(e));
            c.g.mark(e);
        }
        for (const Cycle& f : d.required_faces) add_face(c.faces, f);
    }

    std::string faces_intact(const Component& c) const {
        for (const Cycle& f : c.faces)
            for (std::size_t i = 0; i < f.size(); ++i)
                for (std::size_t j = i + 1; j < f.size(); ++j)
                    if (!c.g.has_edge(f[i], f[j])) return "required face lost an edge";
        return {};
    }

    GraphDelta option_delta(const Graph& g, Edge e, const std::optional<Edge>& partner) {
        GraphDelta d;
        d.instance.carrier = {e.u, e.v};
        if (!partner) {
            d.marked_edges.push_back(e);
            return d;
        }
        d.removed_edges.push_back({e, *partner, {}});
        d.marked_edges.push_back(*partner);
        for (Vertex a : {partner->u, partner->v})
            for (Vertex x : {e.u, e.v}) d.marked_edges.push_back(make_edge(a, x));
        d.required_faces.push_back({partner->u, partner->v, e.u});
        d.required_faces.push_back({partner->u, partner->v, e.v});
        (void)g;
        return d;
    }

    // Necessary conditions: enough crossable pairs, and the edges that can never be
    // crossed (together with the required faces) embed in the plane.
    std::string infeasible(const Component& c, long cr) const {
        const Graph& g = c.g;
        CrossingSet cand = finalize_candidates(g);
        std::set<Edge> crossable;
        for (auto& [a, b] : cand) {
            crossable.insert(a);
            crossable.insert(b);
        }
        if (static_cast<long>(crossable.size()) < 2 * cr) return "too few crossable pairs";
        if (max_pair_matching(cand, crossable) < cr) return "too few disjoint crossable pairs";
        Graph fixed;
        for (Vertex v : g.vertices()) fixed.add_vertex(v);
        for (Edge e : g.edges())
            if (!crossable.count(e)) fixed.add_edge(e.u, e.v);
        Vertex hub = fixed.id_bound();
        for (const Cycle& f : c.faces) {
            // a face stays empty: a new vertex inside it keeps the test exact
            for (Vertex v : f) fixed.add_edge(hub, v);
            ++hub;
        }
        if (!planarity_check(fixed).planar) return "uncrossable edges are not planar";
        return {};
    }

    Res solve(Component c, std::optional<GraphDelta> initial, const std::string& initial_kind) {
        tick();
        Count mult = 1;
        CrossingSet local;
        if (initial) {
            apply_local(c, *initial, mult, local);
            record(c, initial_kind).delta = std::move(*initial);
        }
        while (true) {
            if (opt_.time_budget_s > 0) {
                std::chrono::duration<double> el = std::chrono::steady_clock::now() - start_;
                if (el.count() > opt_.time_budget_s) throw RecognitionBudget("time budget exceeded");
            }
            Graph& g = c.g;
            if (auto why = faces_intact(c); !why.empty()) return reject(c, why);
            const long n = g.vertex_count(), m = g.edge_count();
            if (n <= 6) return leaf(c, handle_small(g, c.faces, opt_.oracle_limit), mult, local, "small component has no embedding");
            const long cr = m - (3 * n - 6);
            if (cr < 0 || cr > n - 2) return reject(c, "edge count");
            if (cr == 0) {
                LeafRecord lr;
                lr.method = "planar";
                lr.count = triangulated_embedding(g, {}, c.faces) ? 1 : 0;
                return leaf(c, std::move(lr), mult, local, "remainder is not a triangulated planar graph");
            }

            if (auto why = infeasible(c, cr); !why.empty()) return reject(c, why);

            std::optional<GraphDelta> d;
            std::string kind;
            if (auto fr = recognize_two_star_family(g, c.faces)) {
                d = family_delta(g, *fr, family_kind(fr->variant));
                kind = "FamilyProbe";
            }
            if (!d) {
                CrossableIndex idx(g);
                ReductionContext ctx{&c.faces};
                d = find_separator(g, idx, ctx);
                if (d) kind = to_string(d->instance.kind);
            }
            if (!d) {
                if (auto forced = finalize_xquads(g)) {
                    GraphDelta fd;
                    for (auto& [a, b] : *forced) {
                        GraphDelta od = option_delta(g, b, a);
                        fd.removed_edges.insert(fd.removed_edges.end(), od.removed_edges.begin(), od.removed_edges.end());
                        fd.marked_edges.insert(fd.marked_edges.end(), od.marked_edges.begin(), od.marked_edges.end());
                        fd.required_faces.insert(fd.required_faces.end(), od.required_faces.begin(), od.required_faces.end());
                    }
                    std::set<Edge> gone;
                    for (auto& r : fd.removed_edges) gone.insert(r.edge);
                    std::erase_if(fd.marked_edges, [&](Edge e) { return gone.count(e) > 0; });
                    d = std::move(fd);
                    kind = "Finalize";
                } else {
                    CrossingSet cand = finalize_candidates(g);
                    std::map<Edge, int> deg;
                    for (auto& [a, b] : cand) {
                        ++deg[a];
                        ++deg[b];
                    }
                    if (static_cast<long>(deg.size()) < 2 * cr) return reject(c, "too few crossable pairs");
                    Edge pick = deg.begin()->first;
                    int best = deg.begin()->second;
                    for (auto& [e, k] : deg)
                        if (k > best) {
                            best = k;
                            pick = e;
                        }
                    d = branch_on(g, pick, SeparatorKind::SepCycle3);
                    kind = "Branch";
                }
            }

            if (!d->reject.empty()) {
                TraceEntry& te = record(c, kind);
                te.delta = *d;
                return reject(c, d->reject);
            }
            if (d->family) {
                TraceEntry& te = record(c, kind);
                te.delta = *d;
                for (const auto& [e, t] : d->label_assignments) mult *= t;
                Res r;
                r.count = mult;
                r.crossings = local;
                r.crossings.insert(r.crossings.end(), d->family->chosen.begin(), d->family->chosen.end());
                return r;
            }
            if (d->branch) {
                const BranchSpec br = *d->branch;
                for (const auto& [e, t] : d->label_assignments) mult *= t;
                std::size_t at = trace_.entries.size();
                record(c, kind).delta = *d;
                std::vector<int> kids;
                Res best;
                Count sum = 0;
                for (const auto& opt : br.options) {
                    Component child{next_id_++, c.g, c.faces};
                    kids.push_back(child.id);
                    trace_.entries[at].children = kids;
                    GraphDelta od = option_delta(c.g, br.edge, opt);
                    Res r = solve(std::move(child), std::move(od), "BranchOption");
                    sum += r.count;
                    if (r.count > 0 && best.count == 0) best = r;
                    if (best.reason.empty() && r.count == 0) best.reason = r.reason;
                }
                Res out;
                out.count = mult * sum;
                if (out.count > 0) {
                    out.crossings = local;
                    out.crossings.insert(out.crossings.end(), best.crossings.begin(), best.crossings.end());
                } else {
                    out.reason = best.reason.empty() ? "no branch admits an embedding" : best.reason;
                }
                return out;
            }

            const long before_m = g.edge_count();
            long before_marked = 0;
            for (Edge e : g.edges()) before_marked += g.marked(e);
            apply_local(c, *d, mult, local);

            if (d->split) {
                const SplitSpec& sp = *d->split;
                Cycle cyc_sorted = sorted_face(sp.cycle);
                std::vector<Component> kids;
                for (std::size_t i = 0; i < sp.sides.size(); ++i) {
                    VertexSet keep = sp.sides[i];
                    keep.insert(keep.end(), sp.cycle.begin(), sp.cycle.end());
                    std::sort(keep.begin(), keep.end());
                    Component child{next_id_++, c.g.induced(keep), {}};
                    for (Edge ch : sp.chords[i]) {
                        child.g.add_edge(ch.u, ch.v);
                        child.g.mark(ch);
                    }
                    const std::size_t k = sp.cycle.size();
                    if (k == 3) {
                        add_face(child.faces, sp.cycle);
                    } else {
                        // fan triangles of the chords
                        Vertex apex = sp.chords[i].front().u;
                        for (Edge ch : sp.chords[i])
                            if (ch.u != apex && ch.v != apex) apex = -1;
                        if (apex < 0) apex = sp.chords[i].front().v;
                        auto pos = std::find(sp.cycle.begin(), sp.cycle.end(), apex) - sp.cycle.begin();
                        for (std::size_t j = 1; j + 1 < k; ++j)
                            add_face(child.faces, {apex, sp.cycle[(pos + j) % k], sp.cycle[(pos + j + 1) % k]});
                    }
                    kids.push_back(std::move(child));
                }
                for (const Cycle& f : c.faces) {
                    if (f == cyc_sorted) {
                        record(c, kind).delta = *d;
                        return reject(c, "required face is a separating triangle");
                    }
                    bool placed = false;
                    for (Component& kid : kids) {
                        bool inside = true;
                        for (Vertex v : f) inside = inside && kid.g.has_vertex(v);
                        if (inside && !placed) {
                            add_face(kid.faces, f);
                            placed = true;
                        }
                    }
                    if (!placed) throw ContractError("required face spans both sides of a split");
                }
                TraceEntry& te = record(c, kind);
                te.delta = *d;
                for (const Component& kid : kids) te.children.push_back(kid.id);
                Res out;
                out.count = mult;
                out.crossings = local;
                bool dead = false;
                for (Component& kid : kids) {
                    if (dead) {
                        reject(kid, "sibling has no embedding");
                        continue;
                    }
                    Res r = solve(std::move(kid), std::nullopt, "");
                    out.count *= r.count;
                    out.crossings.insert(out.crossings.end(), r.crossings.begin(), r.crossings.end());
                    if (r.count == 0) {
                        dead = true;
                        out.reason = r.reason;
                    }
                }
                if (dead) out.crossings.clear();
                return out;
            }

            record(c, kind).delta = *d;
            long after_marked = 0;
            for (Edge e : g.edges()) after_marked += g.marked(e);
            if (g.edge_count() == before_m && after_marked == before_marked)
                throw ContractError(kind + " made no progress");
        }
    }

    RecognizeOptions opt_;
    std::chrono::steady_clock::time_point start_;
    long components_ = 0;
    int next_id_ = 1;
    ReductionTrace trace_;
};

}  // namespace

ReductionOutcome run_reduction(const Graph& g, const RecognizeOptions& opt) {
    Engine e(opt);
    return e.run(g);
}

RecognitionResult recognize(const Graph& g, const RecognizeOptions& opt) {
    RecognitionResult res;
    PreprocessResult pre = preprocess(g);
    if (!pre.ok) {
        res.reason = pre.reason;
        return res;
    }
    Graph work = g;
    TraceEntry mark;
    mark.kind = "MarkNonClique";
    mark.vertices = work.vertex_count();
    mark.edges = work.edge_count();
    mark.delta = mark_non_clique_edges(work);
    if (pre.contains_k6) mark.note = "contains K6";
    ReductionOutcome out;
    try {
        out = run_reduction(work, opt);
    } catch (const RecognitionBudget& b) {
        res.reason = b.what();
        res.budget_exceeded = true;
        return res;
    }
    res.trace.entries.push_back(std::move(mark));
    for (auto& e : out.trace.entries) res.trace.entries.push_back(std::move(e));
    res.count = out.count;
    if (out.count == 0) {
        res.reason = out.reason.empty() ? "no embedding" : out.reason;
        return res;
    }
    res.witness = reconstruct_witness(g, out.crossings);
    if (!res.witness) {
        res.count = 0;
        res.reason = "internal error: witness failed validation";
        return res;
    }
    res.is_t1p = true;
    return res;
}

}  // namespace t1p
