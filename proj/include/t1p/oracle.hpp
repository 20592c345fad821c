#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "t1p/embedding.hpp"

namespace t1p {

struct OracleConstraints {
    EdgeSet uncrossed_edges;
    std::optional<Cycle> required_face;
    std::vector<Cycle> required_faces;  // in addition to required_face
    int max_vertices = 12;
    double time_budget_s = 10.0;
};

class OracleTimeout : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class OracleLimit : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// All T1P embeddings, ordered by crossing set. Exhaustive over matchings of
// K4-inducing independent edge pairs.
std::vector<T1PEmbedding> oracle_enumerate(const Graph& g, const OracleConstraints& c = {});
std::vector<CrossingSet> oracle_crossing_sets(const Graph& g, const OracleConstraints& c = {});
long oracle_count(const Graph& g, const OracleConstraints& c = {});
bool oracle_decide(const Graph& g);

}  // namespace t1p
