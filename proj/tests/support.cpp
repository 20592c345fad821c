#include "support.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <set>
#include <sys/wait.h>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "t1p/families.hpp"

namespace t1p::testkit {

std::string data_path(const std::string& name) { return std::string(T1P_TEST_DATA) + "/" + name; }
std::string cli_path() { return T1P_CLI_PATH; }

std::vector<std::string> fixture_files() {
    std::vector<std::string> out;
    for (const auto& e : std::filesystem::directory_iterator(T1P_TEST_DATA))
        if (e.path().extension() == ".txt") out.push_back(e.path().string());
    std::sort(out.begin(), out.end());
    return out;
}

int run_command(const std::string& cmd, std::string* out) {
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return -1;
    std::string buf;
    char chunk[4096];
    size_t got;
    while ((got = fread(chunk, 1, sizeof chunk, p)) > 0) buf.append(chunk, got);
    int status = pclose(p);
    if (out) *out = buf;
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

namespace {

bool boost_planar(int n, const std::vector<std::pair<int, int>>& edges) {
    using G = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
    G b(n);
    for (auto [x, y] : edges) boost::add_edge(x, y, b);
    return boost::boyer_myrvold_planarity_test(b);
}

}  // namespace

std::vector<CrossingSet> naive_crossing_sets(const Graph& g) {
    const int n = g.vertex_count(), m = g.edge_count();
    const int c = m - (3 * n - 6);
    std::vector<CrossingSet> out;
    if (n < 5 || c < 0) return out;
    VertexSet vs = g.vertices();
    std::vector<int> idx(g.id_bound(), -1);
    for (int i = 0; i < n; ++i) idx[vs[i]] = i;
    EdgeSet es = g.edges();
    std::vector<std::pair<int, int>> pairs;  // indices into es
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (independent(es[i], es[j])) pairs.push_back({i, j});

    std::vector<char> used(m, 0);
    std::vector<int> chosen;
    std::function<void(size_t)> rec = [&](size_t from) {
        if (static_cast<int>(chosen.size()) == c) {
            std::vector<std::pair<int, int>> pe;
            for (int i = 0; i < m; ++i)
                if (!used[i]) pe.push_back({idx[es[i].u], idx[es[i].v]});
            int d = n;
            for (int k : chosen) {
                for (int side : {pairs[k].first, pairs[k].second}) {
                    pe.push_back({d, idx[es[side].u]});
                    pe.push_back({d, idx[es[side].v]});
                }
                ++d;
            }
            // A planar simple graph with 3n' - 6 edges is a triangulation.
            if (boost_planar(d, pe)) {
                CrossingSet cs;
                for (int k : chosen) cs.push_back(make_pair_of(es[pairs[k].first], es[pairs[k].second]));
                std::sort(cs.begin(), cs.end());
                out.push_back(cs);
            }
            return;
        }
        for (size_t k = from; k < pairs.size(); ++k) {
            auto [a, b] = pairs[k];
            if (used[a] || used[b]) continue;
            used[a] = used[b] = 1;
            chosen.push_back(static_cast<int>(k));
            rec(k + 1);
            chosen.pop_back();
            used[a] = used[b] = 0;
        }
    };
    rec(0);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

using Adj = std::vector<std::uint16_t>;  // bitmask adjacency, n <= 16

int popcount(std::uint16_t x) { return __builtin_popcount(x); }

int edge_total(const Adj& a) {
    int s = 0;
    for (auto r : a) s += popcount(r);
    return s / 2;
}

Adj drop_vertex(const Adj& a, int v) {
    Adj out;
    for (int i = 0; i < static_cast<int>(a.size()); ++i) {
        if (i == v) continue;
        std::uint16_t r = 0;
        int j2 = 0;
        for (int j = 0; j < static_cast<int>(a.size()); ++j) {
            if (j == v) continue;
            if (a[i] >> j & 1) r |= static_cast<std::uint16_t>(1u << j2);
            ++j2;
        }
        out.push_back(r);
    }
    return out;
}

Adj contract(const Adj& a, int u, int v) {  // merge v into u
    Adj b = a;
    for (int j = 0; j < static_cast<int>(a.size()); ++j)
        if (j != u && (a[v] >> j & 1)) {
            b[u] |= static_cast<std::uint16_t>(1u << j);
            b[j] |= static_cast<std::uint16_t>(1u << u);
        }
    b[u] &= static_cast<std::uint16_t>(~(1u << v));
    return drop_vertex(b, v);
}

bool is_k5(const Adj& a) {
    if (a.size() != 5) return false;
    for (auto r : a)
        if (popcount(r) != 4) return false;
    return true;
}

bool is_k33(const Adj& a) {
    if (a.size() != 6 || edge_total(a) != 9) return false;
    for (auto r : a)
        if (popcount(r) != 3) return false;
    // bipartite with both sides of size 3: vertex 0's neighbours form one side
    std::uint16_t side = a[0];
    for (int i = 0; i < 6; ++i)
        if ((side >> i & 1) && a[i] != static_cast<std::uint16_t>(0x3F & ~side)) return false;
    return true;
}

Adj simplify(Adj a) {
    for (bool changed = true; changed;) {
        changed = false;
        for (int v = 0; v < static_cast<int>(a.size()); ++v) {
            int d = popcount(a[v]);
            if (d <= 1) {
                a = drop_vertex(a, v);
                changed = true;
                break;
            }
            if (d == 2) {
                int x = __builtin_ctz(a[v]);
                a = contract(a, x, v);
                changed = true;
                break;
            }
        }
    }
    return a;
}

bool nonplanar(const Adj& a0, std::set<Adj>& planar_seen) {
    Adj a = simplify(a0);
    const int n = static_cast<int>(a.size());
    if (n < 5) return false;
    if (edge_total(a) > 3 * n - 6) return true;
    if (is_k5(a) || is_k33(a)) return true;
    if (planar_seen.count(a)) return false;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (!(a[u] >> v & 1)) continue;
            Adj del = a;
            del[u] &= static_cast<std::uint16_t>(~(1u << v));
            del[v] &= static_cast<std::uint16_t>(~(1u << u));
            if (nonplanar(del, planar_seen)) return true;
            if (nonplanar(contract(a, u, v), planar_seen)) return true;
        }
    planar_seen.insert(a);
    return false;
}

}  // namespace

bool minor_planar(const Graph& g) {
    VertexSet vs = g.vertices();
    if (vs.size() > 16) throw GraphError("minor_planar: too many vertices");
    std::vector<int> idx(g.id_bound(), -1);
    for (size_t i = 0; i < vs.size(); ++i) idx[vs[i]] = static_cast<int>(i);
    Adj a(vs.size(), 0);
    for (Edge e : g.edges()) {
        a[idx[e.u]] |= static_cast<std::uint16_t>(1u << idx[e.v]);
        a[idx[e.v]] |= static_cast<std::uint16_t>(1u << idx[e.u]);
    }
    std::set<Adj> seen;
    return !nonplanar(a, seen);
}

bool brute_connectivity_at_least(const Graph& g, int k) {
    VertexSet vs = g.vertices();
    const int n = static_cast<int>(vs.size());
    if (n <= k) return false;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (__builtin_popcount(mask) >= k) continue;
        VertexSet keep;
        for (int i = 0; i < n; ++i)
            if (!(mask >> i & 1)) keep.push_back(vs[i]);
        Graph h = g.induced(keep);
        // flood fill from the first kept vertex
        std::set<Vertex> seen{keep[0]};
        std::vector<Vertex> st{keep[0]};
        while (!st.empty()) {
            Vertex v = st.back();
            st.pop_back();
            for (Vertex w : h.neighbors(v))
                if (seen.insert(w).second) st.push_back(w);
        }
        if (seen.size() != keep.size()) return false;
    }
    return true;
}

long read_expectation(const std::string& path) {
    std::ifstream in(path);
    std::string line;
    while (std::getline(in, line)) {
        auto pos = line.find("# expect:");
        if (pos == std::string::npos) continue;
        std::string rest = line.substr(pos + 9);
        if (rest.find("reject") != std::string::npos) return -1;
        auto eq = rest.find("count=");
        if (eq != std::string::npos) return std::stol(rest.substr(eq + 6));
    }
    throw std::runtime_error("no expectation in " + path);
}

OracleConstraints wide_oracle() {
    OracleConstraints c;
    c.max_vertices = 14;
    c.time_budget_s = 60;
    return c;
}

Graph random_graph(int n, double p, std::uint64_t seed) {
    Rng rng(seed);
    Graph g;
    for (int v = 0; v < n; ++v) g.add_vertex(v);
    const auto threshold = static_cast<std::uint64_t>(p * 1'000'000);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.below(1'000'000) < threshold) g.add_edge(u, v);
    return g;
}

}  // namespace t1p::testkit
