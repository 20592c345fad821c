#include <gtest/gtest.h>

#include <map>
#include <set>

#include "support.hpp"
#include "t1p/families.hpp"
#include "t1p/io.hpp"
#include "t1p/oracle.hpp"
#include "t1p/pipeline.hpp"
#include "t1p/separators.hpp"

using namespace t1p;

namespace {

EdgeSet marked_edges(const Graph& g) {
    EdgeSet out;
    for (Edge e : g.edges())
        if (g.marked(e)) out.push_back(e);
    return out;
}

long constrained_count(const Graph& g, const std::vector<Cycle>& faces) {
    OracleConstraints c;
    c.uncrossed_edges = marked_edges(g);
    c.required_faces = faces;
    c.max_vertices = 14;
    c.time_budget_s = 60;
    return oracle_count(g, c);
}

// Independent check of one reduction step on a freshly marked graph: the labels times
// the constrained oracle count of the reduced graph (or the product over split sides)
// equals the oracle count of the input.
struct StepChecker {
    std::map<std::string, int> seen;

    void check(const Graph& input, const std::string& name) {
        Graph g = input;
        if (!preprocess(g).ok) return;
        mark_non_clique_edges(g);
        CrossableIndex idx(g);
        auto d = find_separator(g, idx, {});
        if (!d) return;
        const std::string kind = to_string(d->instance.kind);
        const long expected = oracle_count(input, testkit::wide_oracle());
        if (!d->reject.empty()) {
            EXPECT_EQ(expected, 0) << name << " " << kind << ": " << d->reject;
            ++seen[kind + "/reject"];
            return;
        }
        if (d->branch || d->family) return;  // exercised through the pipeline tests
        long mult = 1;
        for (const auto& [e, t] : d->label_assignments) mult *= static_cast<long>(t);
        Graph r = g;
        for (const auto& re : d->removed_edges) r.remove_edge(re.edge.u, re.edge.v);
        for (Edge e : d->marked_edges)
            if (r.has_edge(e)) r.mark(e);
        if (!d->split) {
            EXPECT_EQ(mult * constrained_count(r, d->required_faces), expected) << name << " " << kind;
            ++seen[kind];
            return;
        }
        const SplitSpec& sp = *d->split;
        long product = mult;
        for (size_t i = 0; i < sp.sides.size(); ++i) {
            VertexSet keep = sp.sides[i];
            keep.insert(keep.end(), sp.cycle.begin(), sp.cycle.end());
            std::sort(keep.begin(), keep.end());
            Graph side = r.induced(keep);
            for (Edge ch : sp.chords[i]) {
                side.add_edge(ch.u, ch.v);
                side.mark(ch);
            }
            std::vector<Cycle> faces;
            const size_t k = sp.cycle.size();
            if (k == 3) {
                faces.push_back(sp.cycle);
            } else {
                std::map<Vertex, int> deg;
                for (Edge ch : sp.chords[i]) ++deg[ch.u], ++deg[ch.v];
                Vertex apex = std::max_element(deg.begin(), deg.end(), [](auto& a, auto& b) {
                                  return a.second < b.second;
                              })->first;
                size_t pos = std::find(sp.cycle.begin(), sp.cycle.end(), apex) - sp.cycle.begin();
                for (size_t j = 1; j + 1 < k; ++j)
                    faces.push_back({apex, sp.cycle[(pos + j) % k], sp.cycle[(pos + j + 1) % k]});
            }
            for (const Cycle& f : d->required_faces) {
                bool inside = true;
                for (Vertex v : f) inside = inside && std::binary_search(keep.begin(), keep.end(), v);
                if (inside) faces.push_back(f);
            }
            product *= constrained_count(side, faces);
        }
        EXPECT_EQ(product, expected) << name << " " << kind;
        ++seen[kind + "/split"];
    }
};

}  // namespace

TEST(Separators, OrderIsFixed) {
    const auto& order = separator_order();
    ASSERT_EQ(order.size(), 17u);
    EXPECT_EQ(order.front(), SeparatorKind::SepCycle3);
    EXPECT_EQ(order.back(), SeparatorKind::AmbiguousTripod);
    EXPECT_EQ(to_string(SeparatorKind::K5Destroyer), "K5Destroyer");
}

TEST(Separators, SeparatingTriangleSplits) {
    // two copies of K4 glued along the triangle 0 1 2
    Graph g = build_graph({{0, 1}, {1, 2}, {2, 0}, {3, 0}, {3, 1}, {3, 2}, {4, 0}, {4, 1}, {4, 2}});
    auto d = resolve_separating_cycle(g, 3);
    ASSERT_TRUE(d.has_value());
    ASSERT_TRUE(d->split.has_value());
    EXPECT_EQ(d->split->sides.size(), 2u);
    EXPECT_EQ(d->instance.carrier, (Cycle{0, 1, 2}));
    EXPECT_FALSE(resolve_separating_cycle(catalog_small("K5e"), 4).has_value());
}

TEST(Separators, K4PartnersIncludeNonMaximal) {
    Graph k5 = catalog_small("K5");
    EXPECT_EQ(k4_partners(k5, {0, 1}), (EdgeSet{{2, 3}, {2, 4}, {3, 4}}));
    k5.mark({2, 3});
    EXPECT_EQ(k4_partners(k5, {0, 1}), (EdgeSet{{2, 4}, {3, 4}}));
    GraphDelta br = branch_on(k5, {0, 1}, SeparatorKind::K5Triple);
    ASSERT_TRUE(br.branch.has_value());
    EXPECT_EQ(br.branch->options.size(), 3u);
    EXPECT_FALSE(br.branch->options[0].has_value());
}

TEST(Separators, FamilyDeltaCarriesCount) {
    Graph g = gen_two_star(TwoStarVariant::x, 6);
    auto fr = recognize_two_star_family(g);
    ASSERT_TRUE(fr.has_value());
    GraphDelta d = family_delta(g, *fr, SeparatorKind::AmbiguousQuadruple);
    ASSERT_TRUE(d.family.has_value());
    EXPECT_EQ(d.family->count, fr->embeddings.size());
    ASSERT_EQ(d.label_assignments.size(), 1u);
    EXPECT_EQ(d.label_assignments[0].second, fr->embeddings.size());
}

TEST(Separators, SingleStepPreservesOracleCount) {
    StepChecker chk;
    for (const auto& name : catalog_names()) chk.check(catalog_small(name), name);
    for (int n = 6; n <= 10; ++n)
        for (int c = 0; c <= n - 2; ++c)
            for (int s = 0; s < 4; ++s) {
                Planted p = gen_planted_t1p(n, c, 7000 + 100 * n + 10 * c + s);
                chk.check(p.graph, "planted");
                Graph h = p.graph;
                Rng rng(s + n);
                VertexSet vs = h.vertices();
                for (int t = 0; t < 20; ++t) {
                    Vertex a = vs[rng.below(vs.size())], b = vs[rng.below(vs.size())];
                    if (a != b && !h.has_edge(a, b)) {
                        h.add_edge(a, b);
                        chk.check(h, "planted+edge");
                        break;
                    }
                }
            }
    for (const std::string& f : testkit::fixture_files()) chk.check(read_graph_file(f), f);
    for (const auto& [kind, hits] : chk.seen) std::cout << "  " << kind << " " << hits << "\n";
    EXPECT_GE(chk.seen.size(), 3u);
}
