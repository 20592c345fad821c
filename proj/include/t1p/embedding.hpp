#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "t1p/enumeration.hpp"
#include "t1p/graph.hpp"
#include "t1p/planarity.hpp"

namespace t1p {

// A crossing (a,c) x (b,d) drawn at a degree-4 dummy vertex.
struct Crossing {
    Edge first;
    Edge second;
    Vertex dummy = -1;
};

using CrossingPair = std::pair<Edge, Edge>;  // first < second
using CrossingSet = std::vector<CrossingPair>;  // sorted

CrossingPair make_pair_of(Edge a, Edge b);

// Sphere embedding: rotation system of the planarization (original vertices plus one
// dummy per crossing) and the crossing list.
struct T1PEmbedding {
    RotationSystem skeleton;
    std::vector<Crossing> crossings;

    CrossingSet crossing_set() const;
    Vertex max_id() const;
};

struct Violation {
    std::string kind;
    std::string where;
};

struct ValidationReport {
    bool ok = true;
    std::vector<Violation> violations;
    void add(std::string kind, std::string where) {
        ok = false;
        violations.push_back({std::move(kind), std::move(where)});
    }
    std::string summary() const;
};

// Planarization with dummies numbered from g.id_bound() upward (in crossing-set order).
Graph planarization_graph(const Graph& g, const CrossingSet& cs, std::vector<Vertex>* dummies = nullptr);

// Graph of the embedding's rotation system (originals plus dummies).
Graph planarize(const T1PEmbedding& e);

// Builds the embedding for a crossing set when its planarization is planar.
std::optional<T1PEmbedding> embed_with_crossings(const Graph& g, const CrossingSet& cs);

// embed_with_crossings plus: crossed edges unmarked and pairwise distinct, every face a
// triangle, every cycle of `required_faces` a face.
std::optional<T1PEmbedding> triangulated_embedding(const Graph& g, const CrossingSet& cs,
                                                   const std::vector<Cycle>& required_faces = {});
ValidationReport validate_t1p(const Graph& g, const T1PEmbedding& e);

// c = m - (3n - 6); throws GraphError("not T1P by counting") outside [0, n-2].
int forced_crossing_count(int n, int m);

// Inserts edge e so that it crosses the uncrossed skeleton edge `partner`; the two
// faces beside partner must be triangles whose apexes are e's endpoints.
void insert_crossing(T1PEmbedding& emb, Edge e, Edge partner, Vertex dummy);
Vertex fresh_dummy_id(const T1PEmbedding& emb);

struct StarRecord {
    Vertex center = -1;
    std::array<Vertex, 4> clique{};  // sorted
    Edge removed_a;                  // the crossing pair removed from the clique
    Edge removed_b;
};

// Removes the unmarked pair (a,b) x (c,d) of K and attaches a new vertex to all of K.
StarRecord replace_clique_with_star(Graph& g, const std::array<Vertex, 4>& k, Edge a, Edge b);
// Turns the star centre into the dummy of the removed pair.
void restore_star(T1PEmbedding& emb, const StarRecord& rec);

// Removes an uncrossed skeleton edge (used for bookkeeping chords).
void delete_skeleton_edge(T1PEmbedding& emb, Edge e);

// Glues two embeddings that share only the cycle c, which must bound a face in both.
T1PEmbedding compose_at_cycle(const T1PEmbedding& e1, const T1PEmbedding& e2, const Cycle& c);

// Returns the index of the face equal to cycle c (either direction), or -1.
int find_face(const std::vector<Face>& faces, const Cycle& c, bool* same_direction = nullptr);

}  // namespace t1p
