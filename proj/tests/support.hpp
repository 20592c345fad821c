#pragma once

#include <string>
#include <vector>

#include "t1p/embedding.hpp"
#include "t1p/graph.hpp"
#include "t1p/oracle.hpp"

namespace t1p::testkit {

std::string data_path(const std::string& name);
std::string cli_path();
// Every fixture graph in the data directory, sorted by name.
std::vector<std::string> fixture_files();

// Runs a shell command; returns the exit status and captures stdout.
int run_command(const std::string& cmd, std::string* out = nullptr);

// Tries every set of c = m - (3n - 6) pairwise disjoint pairs of independent edges
// and keeps those whose planarization is a plane triangulation. No clique pruning,
// no shared code with the oracle beyond the graph type. n >= 5 only.
std::vector<CrossingSet> naive_crossing_sets(const Graph& g);

// Planarity by searching for a K5 or K3,3 minor (deletions and contractions). n <= 9.
bool minor_planar(const Graph& g);

// Vertex connectivity at least k by trying every vertex subset of size < k.
bool brute_connectivity_at_least(const Graph& g, int k);

// "# expect: count=N" or "# expect: reject" from a fixture file; -1 for reject.
long read_expectation(const std::string& path);

// Oracle options for n <= 14 with a generous time budget.
OracleConstraints wide_oracle();

Graph random_graph(int n, double p, std::uint64_t seed);

}  // namespace t1p::testkit
