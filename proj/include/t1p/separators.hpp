#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "t1p/embedding.hpp"
#include "t1p/enumeration.hpp"
#include "t1p/two_star.hpp"

namespace t1p {

// Listed in the order the reduction tries them.
enum class SeparatorKind {
    SepCycle3,
    SepEdge,
    SepTriple,
    K5Triple,
    SepCycle4,
    UniqueQuadruple,
    SmallPartQuadruple,
    MultiBridgeQuadruple,
    BridgeIndepTriangle,
    SingularTriangle,
    K5Destroyer,
    AmbiguousQuadruple,
    AmbiguousTriangle,
    SepCycle5,
    Tripod,
    StrongTripod,
    AmbiguousTripod,
};

std::string to_string(SeparatorKind k);
const std::vector<SeparatorKind>& separator_order();

struct SeparatorInstance {
    SeparatorKind kind = SeparatorKind::SepCycle3;
    Cycle carrier;  // separating cycle, or the edge / clique / centre the rule is anchored at
    EdgeSet bridges;
    std::vector<VertexSet> parts;
    std::optional<Vertex> center;
    std::optional<BridgePattern> pattern;
};

// e is deleted; in the recorded embedding it crosses `partner`. `alternatives` lists
// the other partners the label accounts for.
struct RemovedEdge {
    Edge edge;
    std::optional<Edge> partner;
    EdgeSet alternatives;
};

// Split along a separating cycle; each side keeps the cycle plus its chords (marked).
struct SplitSpec {
    Cycle cycle;
    std::vector<VertexSet> sides;  // interiors, without the cycle
    std::vector<EdgeSet> chords;   // per side
};

// Exhaustive case split on one edge: it stays uncrossed (nullopt) or crosses one option.
struct BranchSpec {
    Edge edge;
    std::vector<std::optional<Edge>> options;
};

struct FamilyShortcut {
    TwoStarVariant variant = TwoStarVariant::base;
    int k = 0;
    std::uint64_t count = 0;
    CrossingSet chosen;  // empty when count == 0
};

struct GraphDelta {
    SeparatorInstance instance;
    std::vector<RemovedEdge> removed_edges;
    EdgeSet marked_edges;
    std::vector<std::pair<Edge, std::uint64_t>> label_assignments;
    std::vector<Cycle> required_faces;  // triangles that must stay faces of the remainder
    std::optional<SplitSpec> split;
    std::optional<BranchSpec> branch;
    std::optional<FamilyShortcut> family;
    std::string reject;  // non-empty: the component has no embedding
};

// Context for the rules that consult the two-star shortcut.
struct ReductionContext {
    const std::vector<Cycle>* required_faces = nullptr;
};

std::optional<GraphDelta> resolve_separating_cycle(const Graph& g, int k);
std::optional<GraphDelta> resolve_separating_edge(const Graph& g, const CrossableIndex& idx);
std::optional<GraphDelta> resolve_separating_triple(const Graph& g, const CrossableIndex& idx);
std::optional<GraphDelta> resolve_k5_triple(const Graph& g, const CrossableIndex& idx, const ReductionContext& ctx = {});
std::optional<GraphDelta> resolve_unique_quadruple(const Graph& g, const CrossableIndex& idx);
std::optional<GraphDelta> resolve_small_part_quadruple(const Graph& g, const CrossableIndex& idx);
std::optional<GraphDelta> resolve_multi_bridge_quadruple(const Graph& g, const CrossableIndex& idx);
std::optional<GraphDelta> resolve_bridge_independent_triangle(const Graph& g, const CrossableIndex& idx);
std::optional<GraphDelta> resolve_singular_triangle(const Graph& g, const CrossableIndex& idx);
std::optional<GraphDelta> resolve_k5_destroyer(const Graph& g, const CrossableIndex& idx);
std::optional<GraphDelta> resolve_ambiguous_quadruple(const Graph& g, const CrossableIndex& idx,
                                                      const ReductionContext& ctx = {});
std::optional<GraphDelta> resolve_ambiguous_triangle(const Graph& g, const CrossableIndex& idx);
std::optional<GraphDelta> resolve_tripod(const Graph& g, const CrossableIndex& idx);
std::optional<GraphDelta> resolve_strong_tripod(const Graph& g, const CrossableIndex& idx);
std::optional<GraphDelta> resolve_ambiguous_tripod(const Graph& g, const CrossableIndex& idx,
                                                   const ReductionContext& ctx = {});

// First applicable rule in separator_order().
std::optional<GraphDelta> find_separator(const Graph& g, const CrossableIndex& idx, const ReductionContext& ctx = {});

// Every unmarked edge f independent of e whose endpoints together with e's form a
// 4-clique (maximal or not). A superset of the partners e can have in any embedding.
EdgeSet k4_partners(const Graph& g, Edge e);

// Branch on e over all of k4_partners(g, e) plus the uncrossed case.
GraphDelta branch_on(const Graph& g, Edge e, SeparatorKind kind);

// Delta from the two-star shortcut (count may be zero). The count is carried as the
// label of the smallest unmarked edge of g.
GraphDelta family_delta(const Graph& g, const FamilyResult& fr, SeparatorKind kind);

}  // namespace t1p
