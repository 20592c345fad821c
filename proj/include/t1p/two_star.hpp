#pragma once

#include <optional>
#include <vector>

#include "t1p/embedding.hpp"
#include "t1p/families.hpp"

namespace t1p {

// One way of reading g as gen_two_star(variant, k): poles and the path order.
struct TwoStarMatch {
    TwoStarVariant variant = TwoStarVariant::base;
    int k = 0;
    Vertex p = -1, q = -1;
    std::vector<Vertex> order;  // v_1 .. v_k
};

std::vector<TwoStarMatch> match_two_star(const Graph& g, TwoStarVariant variant);

struct FamilyResult {
    TwoStarVariant variant = TwoStarVariant::base;
    int k = 0;
    std::vector<CrossingSet> embeddings;  // distinct, sorted; respects marks and faces
    std::vector<TwoStarMatch> matches;
};

// Closed-form crossing sets of every match (alternating arches, both parities, with
// the end alternatives), filtered by the marks of g and the required faces.
std::optional<FamilyResult> recognize_two_star_family(const Graph& g,
                                                      const std::vector<Cycle>& required_faces = {},
                                                      std::optional<TwoStarVariant> only = std::nullopt);

}  // namespace t1p
