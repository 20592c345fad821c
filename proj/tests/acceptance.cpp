// Acceptance run: one PASS/FAIL line per criterion. `t1p_acceptance N` runs only N.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "support.hpp"
#include "t1p/families.hpp"
#include "t1p/io.hpp"
#include "t1p/oracle.hpp"
#include "t1p/pipeline.hpp"

using namespace t1p;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
    bool pass = true;
    std::ostringstream detail;
    std::vector<std::string> failures;
    void fail(const std::string& what) {
        pass = false;
        if (failures.size() < 8) failures.push_back(what);
    }
};

OracleConstraints oracle_opts() { return testkit::wide_oracle(); }

std::string str(const Count& c) { return c.str(); }

// Criterion 1: small catalog counts.
void small_catalog(Outcome& o) {
    const std::vector<std::pair<std::string, long>> expected{
        {"K3", 1}, {"K4", 4}, {"H2", 1}, {"H5", 1}, {"K5e", 1}, {"K5", 15}, {"H6", 6}, {"H7", 4}, {"K6e", 12},
        {"H1", 0}, {"H3", 0}, {"H4", 0}};
    auto t0 = Clock::now();
    for (const auto& [name, want] : expected) {
        Graph g = catalog_small(name);
        Count got = recognize(g).count;
        long oc = oracle_count(g);
        if (got != want) o.fail(name + " pipeline " + str(got) + " expected " + std::to_string(want));
        if (oc != want) o.fail(name + " oracle " + std::to_string(oc) + " expected " + std::to_string(want));
    }
    Graph k6 = catalog_small("K6");
    Count got = recognize(k6).count;
    long oc = oracle_count(k6);
    if (got != oc || oc < 1) o.fail("K6 pipeline " + str(got) + " oracle " + std::to_string(oc));
    double dt = seconds_since(t0);
    if (dt >= 1.0) o.fail("runtime " + std::to_string(dt) + " s");
    o.detail << "13 graphs, K6 " << str(got) << ", " << dt << " s";
}

// Criterion 2: triangulations have exactly one embedding.
void triangulations(Outcome& o) {
    auto t0 = Clock::now();
    int oracle_checked = 0;
    for (int i = 0; i < 100; ++i) {
        int n = 4 + i % 47;
        Graph g = gen_planar_triangulation(n, 1000 + i);
        RecognitionResult r = recognize(g);
        if (!r.is_t1p || r.count != 1) o.fail("n=" + std::to_string(n) + " count " + str(r.count));
        if (n <= 10) {
            ++oracle_checked;
            long oc = oracle_count(g, oracle_opts());
            if (oc != 1) o.fail("oracle n=" + std::to_string(n) + " count " + std::to_string(oc));
        }
    }
    double dt = seconds_since(t0);
    if (dt >= 10.0) o.fail("runtime " + std::to_string(dt) + " s");
    o.detail << "100 instances, " << oracle_checked << " oracle-checked, " << dt << " s";
}

// Criterion 3: two-star family counts.
void two_stars(Outcome& o) {
    struct Case {
        TwoStarVariant v;
        int k;
        long want;
    };
    std::vector<Case> cases;
    for (int k = 5; k <= 12; ++k) cases.push_back({TwoStarVariant::handle, k, 4});
    cases.push_back({TwoStarVariant::full, 6, 8});
    for (int k = 8; k <= 14; k += 2) cases.push_back({TwoStarVariant::full, k, 2});
    for (int k = 6; k <= 12; ++k) cases.push_back({TwoStarVariant::circle, k, 2});
    int oracle_checked = 0;
    for (const Case& c : cases) {
        Graph g = gen_two_star(c.v, c.k);
        Count got = recognize(g).count;
        std::string name = to_string(c.v) + "G2S_" + std::to_string(c.k);
        if (got != c.want) o.fail(name + " pipeline " + str(got) + " expected " + std::to_string(c.want));
        if (c.k <= 8) {
            ++oracle_checked;
            long oc = oracle_count(g, oracle_opts());
            if (oc != c.want) o.fail(name + " oracle " + std::to_string(oc) + " expected " + std::to_string(c.want));
        }
    }
    o.detail << cases.size() << " graphs, " << oracle_checked << " oracle-checked";
}

struct CorpusEntry {
    std::string name;
    Graph g;
};

std::vector<CorpusEntry> build_corpus() {
    std::vector<CorpusEntry> out;
    for (const auto& name : catalog_names()) out.push_back({name, catalog_small(name)});
    for (int n = 5; n <= 10; ++n)
        for (int c = 0; c <= n - 2; ++c)
            for (int s = 0; s < 5; ++s) {
                Planted p = gen_planted_t1p(n, c, 90000 + 1000 * n + 10 * c + s);
                std::string base = "planted-" + std::to_string(n) + "-" + std::to_string(c) + "-" + std::to_string(s);
                out.push_back({base, p.graph});
                Rng rng(17 * n + 3 * c + s);
                EdgeSet es = p.graph.edges();
                Graph del = p.graph;
                Edge e = es[rng.below(es.size())];
                del.remove_edge(e.u, e.v);
                out.push_back({base + "-del", del});
                VertexSet vs = p.graph.vertices();
                for (int t = 0; t < 50; ++t) {
                    Vertex a = vs[rng.below(vs.size())], b = vs[rng.below(vs.size())];
                    if (a == b || p.graph.has_edge(a, b)) continue;
                    Graph add = p.graph;
                    add.add_edge(a, b);
                    out.push_back({base + "-add", add});
                    break;
                }
            }
    return out;
}

// Criteria 4 and 5 share the corpus.
void oracle_equivalence(Outcome& o, bool witnesses) {
    auto corpus = build_corpus();
    int compared = 0, timeouts = 0, accepted = 0;
    for (const auto& [name, g] : corpus) {
        RecognitionResult r = recognize(g);
        if (witnesses) {
            if (!r.is_t1p) continue;
            ++accepted;
            if (!r.witness) {
                o.fail(name + " no witness");
                continue;
            }
            ValidationReport rep = validate_t1p(g, *r.witness);
            if (!rep.ok) o.fail(name + " " + rep.summary());
            const int n = g.vertex_count();
            if (n >= 5 && static_cast<int>(r.witness->crossings.size()) != g.edge_count() - (3 * n - 6))
                o.fail(name + " crossing count " + std::to_string(r.witness->crossings.size()));
            continue;
        }
        long oc = 0;
        try {
            oc = oracle_count(g, oracle_opts());
        } catch (const OracleTimeout&) {
            ++timeouts;
            continue;
        }
        ++compared;
        if (r.count != oc || r.is_t1p != (oc > 0))
            o.fail(name + " pipeline " + str(r.count) + " oracle " + std::to_string(oc));
    }
    if (witnesses) {
        o.detail << accepted << " accepted of " << corpus.size();
    } else {
        if (compared < 500) o.fail("corpus has only " + std::to_string(compared) + " compared graphs");
        o.detail << compared << " compared, " << timeouts << " oracle timeouts";
    }
}

// Criterion 6: planted instances are recovered.
void planted_round_trip(Outcome& o) {
    int small = 0;
    for (int i = 0; i < 100; ++i) {
        int n = 5 + (i * 37) % 56;
        int c = std::min({12, (i * 7) % 13, n - 2});
        Planted p = gen_planted_t1p(n, c, 5000 + i);
        std::string name = "planted n=" + std::to_string(n) + " c=" + std::to_string(c);
        RecognitionResult r = recognize(p.graph);
        if (!r.is_t1p) {
            o.fail(name + " rejected: " + r.reason);
            continue;
        }
        if (n <= 10) {
            ++small;
            auto sets = oracle_crossing_sets(p.graph, oracle_opts());
            if (!std::binary_search(sets.begin(), sets.end(), p.embedding.crossing_set()))
                o.fail(name + " planted set not among oracle embeddings");
            if (r.count != Count(sets.size())) o.fail(name + " count " + str(r.count));
        }
    }
    o.detail << "100 instances, " << small << " oracle-checked";
}

// Criterion 7: shapes that defeat marking heuristics.
void false_positive_regression(Outcome& o) {
    int checked = 0;
    for (const std::string& path : testkit::fixture_files()) {
        std::string f = path.substr(path.rfind('/') + 1);
        Graph g = read_graph_file(path);
        long want = testkit::read_expectation(path);
        long oc = oracle_count(g, oracle_opts());
        Count got = recognize(g).count;
        if (oc != want) o.fail(f + " oracle " + std::to_string(oc) + " fixture " + std::to_string(want));
        if (got != want) o.fail(f + " pipeline " + str(got) + " expected " + std::to_string(want));
        ++checked;
    }
    for (int k = 6; k <= 12; ++k) {
        Graph g = gen_two_star(TwoStarVariant::circle, k);
        Count got = recognize(g).count;
        if (got != 2) o.fail("cG2S_" + std::to_string(k) + " count " + str(got));
        ++checked;
    }
    o.detail << checked << " graphs";
}

// Criterion 8: runtime growth on triangulations.
void scaling(Outcome& o) {
    const std::vector<int> sizes{250, 500, 1000, 2000};
    std::vector<double> xs, ys;
    for (int n : sizes) {
        Graph g = gen_planar_triangulation(n, 42);
        auto t0 = Clock::now();
        RecognitionResult r = recognize(g);
        double dt = seconds_since(t0);
        if (r.count != 1) o.fail("n=" + std::to_string(n) + " count " + str(r.count));
        xs.push_back(std::log(n));
        ys.push_back(std::log(std::max(dt, 1e-6)));
        o.detail << "n=" << n << ":" << dt << "s ";
        if (n == 2000 && dt >= 300) o.fail("n=2000 took " + std::to_string(dt) + " s");
    }
    double mx = 0, my = 0;
    for (size_t i = 0; i < xs.size(); ++i) mx += xs[i], my += ys[i];
    mx /= xs.size();
    my /= ys.size();
    double sxy = 0, sxx = 0;
    for (size_t i = 0; i < xs.size(); ++i) {
        sxy += (xs[i] - mx) * (ys[i] - my);
        sxx += (xs[i] - mx) * (xs[i] - mx);
    }
    double slope = sxy / sxx;
    if (slope > 3.3) o.fail("slope " + std::to_string(slope));
    o.detail << "slope " << slope;
}

}  // namespace

int main(int argc, char** argv) {
    const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
        {"small catalog counts", small_catalog},
        {"triangulations have one embedding", triangulations},
        {"two-star family counts", two_stars},
        {"oracle equivalence on corpus", [](Outcome& o) { oracle_equivalence(o, false); }},
        {"witness soundness on corpus", [](Outcome& o) { oracle_equivalence(o, true); }},
        {"planted round trip", planted_round_trip},
        {"false-positive regression", false_positive_regression},
        {"scaling on triangulations", scaling},
    };
    int only = argc > 1 ? std::atoi(argv[1]) : 0;
    int failed = 0;
    for (size_t i = 0; i < criteria.size(); ++i) {
        if (only && static_cast<int>(i + 1) != only) continue;
        Outcome o;
        try {
            criteria[i].second(o);
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        std::cout << "criterion " << i + 1 << ": " << (o.pass ? "PASS" : "FAIL") << " " << criteria[i].first
                  << " (" << o.detail.str() << ")\n";
        for (const auto& f : o.failures) std::cout << "    " << f << "\n";
        failed += !o.pass;
    }
    return failed ? 1 : 0;
}
