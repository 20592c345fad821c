#pragma once

#include <map>
#include <optional>
#include <vector>

#include "t1p/graph.hpp"

namespace t1p {

// Cyclic neighbour order per vertex. Faces follow the convention: arriving at v
// from u, leave towards the successor of u in the rotation of v.
using RotationSystem = std::map<Vertex, std::vector<Vertex>>;
using Face = std::vector<Vertex>;

struct PlanarityResult {
    bool planar = false;
    std::optional<RotationSystem> embedding;
};

PlanarityResult planarity_check(const Graph& g);

// Throws GraphError when the rotation is not symmetric.
std::vector<Face> faces_of(const RotationSystem& rot);

// Euler check n - m + f == 1 + #components; throws on inconsistent rotations.
bool is_spherical(const RotationSystem& rot);

bool is_triangulated_planar(const Graph& g);

RotationSystem reflect(const RotationSystem& rot);
RotationSystem rotation_of(const Graph& g, const RotationSystem& rot);  // restricted copy

}  // namespace t1p
