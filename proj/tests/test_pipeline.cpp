#include <gtest/gtest.h>

#include <algorithm>

#include "support.hpp"
#include "t1p/families.hpp"
#include "t1p/io.hpp"
#include "t1p/oracle.hpp"
#include "t1p/pipeline.hpp"

using namespace t1p;

namespace {

void expect_agrees_with_oracle(const Graph& g, const std::string& name) {
    std::vector<CrossingSet> sets;
    try {
        sets = oracle_crossing_sets(g, testkit::wide_oracle());
    } catch (const OracleTimeout&) {
        return;
    }
    RecognitionResult r = recognize(g);
    ASSERT_EQ(r.count, Count(sets.size())) << name << " reason=" << r.reason;
    ASSERT_EQ(r.is_t1p, !sets.empty()) << name;
    if (!r.is_t1p) {
        EXPECT_FALSE(r.reason.empty()) << name;
        EXPECT_FALSE(r.witness.has_value()) << name;
        return;
    }
    ASSERT_TRUE(r.witness.has_value()) << name;
    ValidationReport rep = validate_t1p(g, *r.witness);
    EXPECT_TRUE(rep.ok) << name << ": " << rep.summary();
    EXPECT_TRUE(std::binary_search(sets.begin(), sets.end(), r.witness->crossing_set())) << name;
    EXPECT_EQ(count_embeddings(r.trace), r.count) << name;
}

Graph relabel(const Graph& g, std::uint64_t seed) {
    std::vector<Vertex> perm = g.vertices();
    Rng rng(seed);
    for (size_t i = perm.size(); i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
    Graph h;
    for (Edge e : g.edges()) h.add_edge(perm[e.u] * 3 + 1, perm[e.v] * 3 + 1);
    return h;
}

}  // namespace

TEST(Pipeline, PreprocessReasons) {
    Graph c6 = build_graph({{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}});
    EXPECT_EQ(preprocess(c6).reason, "edge count");
    EXPECT_EQ(preprocess(catalog_small("K7")).reason, "contains K7");
    EXPECT_EQ(preprocess(build_graph({{0, 1}})).reason, "too few vertices");
    PreprocessResult k6 = preprocess(catalog_small("K6"));
    EXPECT_TRUE(k6.ok);
    EXPECT_TRUE(k6.contains_k6);
    auto k6_on = [](Graph& g, std::vector<Vertex> vs) {
        for (size_t i = 0; i < vs.size(); ++i)
            for (size_t j = i + 1; j < vs.size(); ++j) g.add_edge(vs[i], vs[j]);
    };
    Graph two;
    k6_on(two, {0, 1, 2, 3, 4, 5});
    k6_on(two, {4, 5, 6, 7, 8, 9});
    EXPECT_EQ(preprocess(two).reason, "not 3-connected");
    Graph apart;
    k6_on(apart, {0, 1, 2, 3, 4, 5});
    k6_on(apart, {6, 7, 8, 9, 10, 11});
    EXPECT_EQ(preprocess(apart).reason, "disconnected");
}

TEST(Pipeline, MarkNonCliqueEdges) {
    Graph g = gen_planar_triangulation(12, 5);
    GraphDelta d = mark_non_clique_edges(g);
    for (Edge e : g.edges()) {
        bool in_k4 = false;
        VertexSet cn;
        std::set_intersection(g.neighbors(e.u).begin(), g.neighbors(e.u).end(), g.neighbors(e.v).begin(),
                              g.neighbors(e.v).end(), std::back_inserter(cn));
        for (size_t i = 0; i < cn.size() && !in_k4; ++i)
            for (size_t j = i + 1; j < cn.size() && !in_k4; ++j) in_k4 = g.has_edge(cn[i], cn[j]);
        EXPECT_EQ(g.marked(e), !in_k4) << to_string(e);
        EXPECT_EQ(std::binary_search(d.marked_edges.begin(), d.marked_edges.end(), e), !in_k4);
    }
}

TEST(Pipeline, CatalogAndTwoStars) {
    for (const auto& name : catalog_names()) expect_agrees_with_oracle(catalog_small(name), name);
    for (auto v : {TwoStarVariant::base, TwoStarVariant::handle, TwoStarVariant::circle, TwoStarVariant::x,
                   TwoStarVariant::semi, TwoStarVariant::full})
        for (int k = 5; k <= 8; ++k) {
            if ((v == TwoStarVariant::semi || v == TwoStarVariant::full) && k % 2) continue;
            expect_agrees_with_oracle(gen_two_star(v, k), to_string(v) + std::to_string(k));
        }
}

TEST(Pipeline, PlantedAndEdits) {
    for (int n = 5; n <= 10; ++n)
        for (int c = 0; c <= n - 2; c += 1)
            for (int s = 0; s < 3; ++s) {
                Planted p = gen_planted_t1p(n, c, 31000 + 100 * n + 10 * c + s);
                std::string name = "planted " + std::to_string(n) + "/" + std::to_string(c) + "/" + std::to_string(s);
                expect_agrees_with_oracle(p.graph, name);
                EdgeSet es = p.graph.edges();
                Graph del = p.graph;
                Edge e = es[(7 * s + c) % es.size()];
                del.remove_edge(e.u, e.v);
                expect_agrees_with_oracle(del, name + " -edge");
            }
}

TEST(Pipeline, Fixtures) {
    for (const std::string& f : testkit::fixture_files()) {
        Graph g = read_graph_file(f);
        expect_agrees_with_oracle(g, f);
        EXPECT_EQ(recognize(g).count, Count(testkit::read_expectation(f))) << f;
    }
}

TEST(Pipeline, IdempotentAndLabelFree) {
    for (int s = 0; s < 10; ++s) {
        Planted p = gen_planted_t1p(30, 6, 77 + s);
        RecognitionResult a = recognize(p.graph), b = recognize(p.graph);
        EXPECT_EQ(a.count, b.count);
        EXPECT_EQ(a.witness->crossing_set(), b.witness->crossing_set());
        EXPECT_EQ(a.trace.entries.size(), b.trace.entries.size());
        RecognitionResult c = recognize(relabel(p.graph, s));
        EXPECT_EQ(c.count, a.count);
        EXPECT_TRUE(validate_t1p(relabel(p.graph, s), *c.witness).ok);
    }
}

TEST(Pipeline, LargePlantedWitness) {
    for (int s = 0; s < 5; ++s) {
        Planted p = gen_planted_t1p(200, 40, s);
        RecognitionResult r = recognize(p.graph);
        ASSERT_TRUE(r.is_t1p) << r.reason;
        EXPECT_GE(r.count, 1);
        EXPECT_TRUE(validate_t1p(p.graph, *r.witness).ok);
        EXPECT_EQ(static_cast<int>(r.witness->crossings.size()), forced_crossing_count(200, p.graph.edge_count()));
    }
}

TEST(Pipeline, TriangulationIsUnique) {
    Graph g = gen_planar_triangulation(300, 1);
    RecognitionResult r = recognize(g);
    EXPECT_EQ(r.count, 1);
    EXPECT_TRUE(r.witness->crossings.empty());
}

TEST(Pipeline, TimeBudget) {
    Graph g = gen_planar_triangulation(800, 3);
    RecognizeOptions opt;
    opt.time_budget_s = 1e-6;
    RecognitionResult r = recognize(g, opt);
    EXPECT_TRUE(r.budget_exceeded);
    EXPECT_FALSE(r.is_t1p);
}

TEST(Pipeline, FinalizeHelpers) {
    Graph k5 = catalog_small("K5");
    mark_non_clique_edges(k5);
    EXPECT_EQ(finalize_candidates(k5).size(), 15u);
    EXPECT_FALSE(finalize_xquads(k5).has_value());
    Planted p = gen_planted_t1p(8, 1, 12);
    auto w = reconstruct_witness(p.graph, p.embedding.crossing_set());
    ASSERT_TRUE(w.has_value());
    EXPECT_TRUE(validate_t1p(p.graph, *w).ok);
    LeafRecord leaf = handle_small(catalog_small("H6"), {});
    EXPECT_EQ(leaf.count, 6);
    EXPECT_EQ(leaf.method, "oracle");
}
