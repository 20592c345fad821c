#pragma once

#include <cstdint>
#include <string>

#include "t1p/embedding.hpp"

namespace t1p {

enum class TwoStarVariant { base, handle, circle, x, semi, full };

std::string to_string(TwoStarVariant v);
TwoStarVariant parse_two_star_variant(const std::string& name);

// Poles p = 0, q = 1, path vertices v_i = i + 1.
Graph gen_two_star(TwoStarVariant variant, int k);

// K3 K4 K5e K5 H1..H7 K6e K6 K7
Graph catalog_small(const std::string& name);
const std::vector<std::string>& catalog_names();

// Small deterministic generator (splitmix64) so outputs do not depend on the
// standard library's distribution implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next();
    std::uint64_t below(std::uint64_t bound);  // uniform in [0, bound)

private:
    std::uint64_t state_;
};

struct Triangulation {
    Graph graph;
    RotationSystem rotation;
};

// Stacked triangulation on n >= 3 vertices followed by `flips` random edge-flip
// attempts (flips < 0 means n attempts).
Triangulation gen_planar_triangulation_embedded(int n, std::uint64_t seed, int flips = -1);
Graph gen_planar_triangulation(int n, std::uint64_t seed, int flips = -1);

struct Planted {
    Graph graph;
    T1PEmbedding embedding;
    int requested = 0;
    bool short_of_request = false;
};

Planted gen_planted_t1p(int n, int crossings, std::uint64_t seed, int flips = -1);

}  // namespace t1p
