#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "t1p/embedding.hpp"
#include "t1p/separators.hpp"

namespace t1p {

using Count = boost::multiprecision::cpp_int;

struct PreprocessResult {
    bool ok = false;
    std::string reason;  // reason code when !ok
    bool contains_k6 = false;
};

// Connectivity, edge bounds and clique checks. Reason codes: "too few vertices",
// "edge count", "contains K7", "disconnected", "not 3-connected".
PreprocessResult preprocess(const Graph& g);

// Marks every edge that lies in no 4-clique; returns the marked edges.
GraphDelta mark_non_clique_edges(Graph& g);

struct LeafRecord {
    std::string method;  // "oracle", "planar", "family"
    Count count = 0;
    CrossingSet chosen;  // empty if count == 0
};

// Kinds beyond the separator names: "MarkNonClique", "Finalize", "Branch",
// "BranchOption", "Leaf", "Reject".
struct TraceEntry {
    int component = 0;
    std::string kind;
    int vertices = 0;
    int edges = 0;
    std::optional<GraphDelta> delta;
    std::vector<int> children;  // split sides (product) or branch options (sum)
    std::optional<LeafRecord> leaf;
    std::string note;
};

struct ReductionTrace {
    std::vector<TraceEntry> entries;
};

struct RecognizeOptions {
    double time_budget_s = 0;  // 0: unlimited
    long max_components = 1'000'000;
    int oracle_limit = 12;
};

class RecognitionBudget : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ReductionOutcome {
    Count count = 0;
    CrossingSet crossings;  // crossing pairs of one embedding when count > 0
    std::string reason;     // first rejection met
    ReductionTrace trace;
};

// Separator loop with splits, exhaustive branches and leaves. g must have passed
// preprocess and carry its marks.
ReductionOutcome run_reduction(const Graph& g, const RecognizeOptions& opt = {});

// Oracle with the component's marks and required faces.
LeafRecord handle_small(const Graph& g, const std::vector<Cycle>& required_faces, int oracle_limit = 12);

// Unmarked independent pairs spanning a 4-clique: every crossing of any embedding
// is among them.
CrossingSet finalize_candidates(const Graph& g);

// The forced crossing set when the candidates form a matching of size m - (3n - 6).
std::optional<CrossingSet> finalize_xquads(const Graph& g);

// Embedding of the original graph from the collected crossing pairs.
std::optional<T1PEmbedding> reconstruct_witness(const Graph& original, const CrossingSet& crossings);

// Product of labels and leaf counts over the decomposition, summing over branches.
Count count_embeddings(const ReductionTrace& trace);

struct RecognitionResult {
    bool is_t1p = false;
    Count count = 0;
    std::optional<T1PEmbedding> witness;
    std::string reason;
    bool budget_exceeded = false;
    ReductionTrace trace;
};

RecognitionResult recognize(const Graph& g, const RecognizeOptions& opt = {});

}  // namespace t1p
