#include "t1p/json_io.hpp"

#include <limits>

namespace t1p {

namespace {

Json edge_json(Edge e) { return Json::array({e.u, e.v}); }

Json edges_json(const EdgeSet& es) {
    Json out = Json::array();
    for (Edge e : es) out.push_back(edge_json(e));
    return out;
}

Json cycle_json(const Cycle& c) {
    Json out = Json::array();
    for (Vertex v : c) out.push_back(v);
    return out;
}

Edge edge_from(const Json& j) {
    if (!j.is_array() || j.size() != 2) throw GraphError("edge must be a pair");
    return make_edge(j[0].get<Vertex>(), j[1].get<Vertex>());
}

}  // namespace

Json embedding_to_json(const T1PEmbedding& e) {
    Json rot = Json::object();
    for (const auto& [v, nb] : e.skeleton) rot[std::to_string(v)] = nb;
    Json cr = Json::array();
    Json dummies = Json::array();
    for (const Crossing& c : e.crossings) {
        cr.push_back(Json::array({edge_json(c.first), edge_json(c.second)}));
        dummies.push_back(c.dummy);
    }
    Json out;
    out["skeleton_rotations"] = std::move(rot);
    out["crossings"] = std::move(cr);
    out["dummies"] = std::move(dummies);
    return out;
}

T1PEmbedding embedding_from_json(const Json& j) {
    T1PEmbedding e;
    for (const auto& [k, nb] : j.at("skeleton_rotations").items()) {
        std::size_t used = 0;
        Vertex v = std::stoi(k, &used);
        if (used != k.size()) throw GraphError("bad vertex key \"" + k + "\"");
        e.skeleton[v] = nb.get<std::vector<Vertex>>();
    }
    const Json& cr = j.at("crossings");
    const Json* dummies = j.contains("dummies") ? &j.at("dummies") : nullptr;
    if (dummies && dummies->size() != cr.size()) throw GraphError("dummies and crossings differ in length");
    for (std::size_t i = 0; i < cr.size(); ++i) {
        Crossing c;
        c.first = edge_from(cr[i].at(0));
        c.second = edge_from(cr[i].at(1));
        if (dummies) {
            c.dummy = (*dummies)[i].get<Vertex>();
        } else {
            // locate the degree-4 vertex whose rotation alternates the two edges
            for (const auto& [v, nb] : e.skeleton) {
                if (nb.size() != 4) continue;
                if (make_pair_of(make_edge(nb[0], nb[2]), make_edge(nb[1], nb[3])) ==
                    make_pair_of(c.first, c.second))
                    c.dummy = v;
            }
        }
        e.crossings.push_back(c);
    }
    return e;
}

Json count_to_json(const Count& c) {
    if (c >= 0 && c <= std::numeric_limits<std::uint64_t>::max()) return static_cast<std::uint64_t>(c);
    return c.str();
}

Json delta_to_json(const GraphDelta& d) {
    Json out;
    out["separator"] = to_string(d.instance.kind);
    out["carrier"] = cycle_json(d.instance.carrier);
    if (d.instance.center) out["center"] = *d.instance.center;
    if (!d.instance.bridges.empty()) out["bridges"] = edges_json(d.instance.bridges);
    if (d.instance.pattern) {
        Json bp = Json::array();
        for (const auto& b : d.instance.pattern->beta) bp.push_back(b ? Json(*b) : Json(nullptr));
        out["beta"] = std::move(bp);
    }
    Json removed = Json::array();
    for (const RemovedEdge& r : d.removed_edges) {
        Json x;
        x["edge"] = edge_json(r.edge);
        x["partner"] = r.partner ? edge_json(*r.partner) : Json(nullptr);
        if (!r.alternatives.empty()) x["alternatives"] = edges_json(r.alternatives);
        removed.push_back(std::move(x));
    }
    out["removed"] = std::move(removed);
    out["marked"] = edges_json(d.marked_edges);
    Json labels = Json::array();
    for (const auto& [e, t] : d.label_assignments) labels.push_back(Json::array({edge_json(e), t}));
    out["labels"] = std::move(labels);
    if (!d.required_faces.empty()) {
        Json f = Json::array();
        for (const Cycle& c : d.required_faces) f.push_back(cycle_json(c));
        out["faces"] = std::move(f);
    }
    if (d.split) {
        Json s;
        s["cycle"] = cycle_json(d.split->cycle);
        s["sides"] = d.split->sides;
        Json ch = Json::array();
        for (const EdgeSet& c : d.split->chords) ch.push_back(edges_json(c));
        s["chords"] = std::move(ch);
        out["split"] = std::move(s);
    }
    if (d.branch) {
        Json b;
        b["edge"] = edge_json(d.branch->edge);
        Json opts = Json::array();
        for (const auto& o : d.branch->options) opts.push_back(o ? edge_json(*o) : Json(nullptr));
        b["options"] = std::move(opts);
        out["branch"] = std::move(b);
    }
    if (d.family) {
        Json f;
        f["variant"] = to_string(d.family->variant);
        f["k"] = d.family->k;
        f["count"] = d.family->count;
        out["family"] = std::move(f);
    }
    if (!d.reject.empty()) out["reject"] = d.reject;
    return out;
}

Json trace_entry_to_json(const TraceEntry& e) {
    Json out;
    out["component"] = e.component;
    out["kind"] = e.kind;
    out["n"] = e.vertices;
    out["m"] = e.edges;
    if (e.delta) {
        Json d = delta_to_json(*e.delta);
        // these entries are not produced by a separator rule
        for (const char* k : {"MarkNonClique", "Finalize", "Branch", "BranchOption"})
            if (e.kind == k) d.erase("separator");
        out["delta"] = std::move(d);
    }
    if (!e.children.empty()) out["children"] = e.children;
    if (e.leaf) {
        Json l;
        l["method"] = e.leaf->method;
        l["count"] = count_to_json(e.leaf->count);
        Json cs = Json::array();
        for (const auto& [a, b] : e.leaf->chosen) cs.push_back(Json::array({edge_json(a), edge_json(b)}));
        l["chosen"] = std::move(cs);
        out["leaf"] = std::move(l);
    }
    if (!e.note.empty()) out["note"] = e.note;
    return out;
}

std::string trace_to_jsonl(const ReductionTrace& t) {
    std::string out;
    for (const TraceEntry& e : t.entries) {
        out += trace_entry_to_json(e).dump();
        out += '\n';
    }
    return out;
}

Json result_to_json(const RecognitionResult& r) {
    Json out;
    out["schema"] = 1;
    out["is_t1p"] = r.is_t1p;
    out["count"] = count_to_json(r.count);
    out["witness"] = r.witness ? embedding_to_json(*r.witness) : Json(nullptr);
    out["reason"] = r.reason.empty() ? Json(nullptr) : Json(r.reason);
    out["trace_len"] = r.trace.entries.size();
    return out;
}

}  // namespace t1p
