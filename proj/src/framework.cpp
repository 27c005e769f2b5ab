#include "rigidcert/framework.hpp"

#include <algorithm>
#include <set>

#include "rigidcert/elimination.hpp"
#include "rigidcert/errors.hpp"

namespace rigidcert {

BipartiteGraph complete_bipartite(size_t u, size_t v) {
    if (u == 0 || v == 0) throw HypothesisError("complete_bipartite: parts must be nonempty");
    BipartiteGraph g;
    g.graph.vertex_count = u + v;
    for (size_t i = 0; i < u; ++i) {
        g.partition.part_U.push_back(i);
        for (size_t j = 0; j < v; ++j) g.graph.edges.emplace_back(i, u + j);
    }
    for (size_t j = 0; j < v; ++j) g.partition.part_V.push_back(u + j);
    std::sort(g.graph.edges.begin(), g.graph.edges.end());
    return g;
}

void validate_framework(const Framework& f) {
    const size_t n = f.graph.vertex_count;
    std::set<std::pair<size_t, size_t>> seen;
    for (const auto& [i, j] : f.graph.edges) {
        if (i >= j) throw Error("framework: edge endpoints must satisfy i < j");
        if (j >= n) throw Error("framework: edge endpoint out of range");
        if (!seen.insert({i, j}).second) throw Error("framework: duplicate edge");
    }
    if (f.config.points.size() != n) throw Error("framework: coordinates must cover all vertices");
    for (const auto& p : f.config.points)
        if (p.size() != f.config.dimension)
            throw Error("framework: point dimension mismatch");
    if (f.partition) {
        std::vector<int> side(n, -1);
        for (size_t v : f.partition->part_U) {
            if (v >= n || side[v] != -1) throw Error("framework: bad partition");
            side[v] = 0;
        }
        for (size_t v : f.partition->part_V) {
            if (v >= n || side[v] != -1) throw Error("framework: bad partition");
            side[v] = 1;
        }
        for (size_t v = 0; v < n; ++v)
            if (side[v] == -1) throw Error("framework: partition misses a vertex");
        for (const auto& [i, j] : f.graph.edges)
            if (side[i] == side[j]) throw Error("framework: edge inside one part");
    }
}

RatMatrix config_matrix(const Framework& f) {
    const size_t n = f.graph.vertex_count, d = f.config.dimension;
    RatMatrix m(n, d + 1);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < d; ++j) m.at(i, j) = f.config.points[i][j];
        m.at(i, d) = Rational(1);
    }
    return m;
}

size_t affine_span_dim(const std::vector<VecQ>& points) {
    if (points.empty()) throw HypothesisError("affine_span_dim: empty point set");
    const size_t d = points[0].size();
    RatMatrix m(points.size(), d + 1);
    for (size_t i = 0; i < points.size(); ++i) {
        if (points[i].size() != d) throw Error("affine_span_dim: mixed dimensions");
        for (size_t j = 0; j < d; ++j) m.at(i, j) = points[i][j];
        m.at(i, d) = Rational(1);
    }
    return rank(m) - 1;
}

bool is_general_position(const Configuration& c) {
    const size_t n = c.points.size(), d = c.dimension;
    if (n < d + 1) throw HypothesisError("is_general_position: needs at least d+1 points");
    std::vector<size_t> idx(d + 1);
    for (size_t i = 0; i <= d; ++i) idx[i] = i;
    for (;;) {
        std::vector<VecQ> sub;
        sub.reserve(d + 1);
        for (size_t i : idx) sub.push_back(c.points[i]);
        if (affine_span_dim(sub) != d) return false;
        // next (d+1)-combination of {0..n-1}
        size_t k = d + 1;
        while (k-- > 0) {
            if (idx[k] != k + n - (d + 1)) {
                ++idx[k];
                for (size_t t = k + 1; t <= d; ++t) idx[t] = idx[t - 1] + 1;
                break;
            }
            if (k == 0) return true;
        }
    }
}

std::vector<VecQ> edge_directions(const Framework& f) {
    std::vector<VecQ> dirs;
    dirs.reserve(f.graph.edges.size());
    for (const auto& [i, j] : f.graph.edges) {
        VecQ e(f.config.dimension);
        for (size_t k = 0; k < f.config.dimension; ++k)
            e[k] = f.config.points[j][k] - f.config.points[i][k];
        if (is_zero_vector(e))
            throw HypothesisError("edge_directions: coincident endpoints on edge (" +
                                  std::to_string(i) + "," + std::to_string(j) +
                                  "), framework degenerate");
        dirs.push_back(std::move(e));
    }
    return dirs;
}

} // namespace rigidcert
