#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rigidcert/matrix.hpp"

namespace rigidcert {

struct Graph {
    size_t vertex_count = 0;
    std::vector<std::pair<size_t, size_t>> edges; // each (i, j) with i < j
};

struct BipartitePartition {
    std::vector<size_t> part_U;
    std::vector<size_t> part_V;
};

struct Configuration {
    size_t dimension = 0;
    std::vector<VecQ> points; // one length-d coordinate vector per vertex
};

struct Framework {
    Graph graph;
    std::optional<BipartitePartition> partition;
    Configuration config;
};

struct BipartiteGraph {
    Graph graph;
    BipartitePartition partition;
};

// K_{u,v} with part U = {0..u-1}, part V = {u..u+v-1}, edges lexicographic.
BipartiteGraph complete_bipartite(size_t u, size_t v);

// Checks structural invariants (simple graph, coordinates cover all vertices,
// partition consistent and crossed by every edge); throws on violation.
void validate_framework(const Framework& f);

// n x (d+1) matrix; row i is vertex i's coordinates followed by 1.
RatMatrix config_matrix(const Framework& f);

// Dimension of the affine span of a nonempty point list.
size_t affine_span_dim(const std::vector<VecQ>& points);

// True iff every (d+1)-subset of the points is affinely independent.
bool is_general_position(const Configuration& c);

// Edge direction p(j) - p(i) per edge (i < j); zero directions are rejected.
std::vector<VecQ> edge_directions(const Framework& f);

// Canonical JSON: fixed key order, ids ascending, edges lexicographic,
// rationals in lowest terms; parse . serialize is byte-identical.
std::string framework_to_json(const Framework& f, int indent = 2);
Framework framework_from_json(const std::string& text);

} // namespace rigidcert
