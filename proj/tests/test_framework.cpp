#include <doctest.h>

#include <utility>
#include <vector>

#include "rigidcert/construct.hpp"
#include "rigidcert/elimination.hpp"
#include "rigidcert/errors.hpp"
#include "rigidcert/framework.hpp"

using namespace rigidcert;

namespace {

Framework unit_square() {
    Framework f;
    f.graph.vertex_count = 4;
    f.graph.edges = {{0, 2}, {0, 3}, {1, 2}, {1, 3}};
    f.partition = BipartitePartition{{0, 1}, {2, 3}};
    f.config.dimension = 2;
    f.config.points = {
        {Rational(0), Rational(0)},
        {Rational(1), Rational(1)},
        {Rational(1), Rational(0)},
        {Rational(0), Rational(1)},
    };
    return f;
}

} // namespace

TEST_CASE("complete bipartite graph shape") {
    BipartiteGraph g11 = complete_bipartite(1, 1);
    CHECK(g11.graph.vertex_count == 2);
    CHECK(g11.graph.edges == std::vector<std::pair<size_t, size_t>>{{0, 1}});

    BipartiteGraph g33 = complete_bipartite(3, 3);
    CHECK(g33.graph.vertex_count == 6);
    CHECK(g33.graph.edges.size() == 9);
    CHECK(g33.partition.part_U == std::vector<size_t>{0, 1, 2});
    CHECK(g33.partition.part_V == std::vector<size_t>{3, 4, 5});

    BipartiteGraph g56 = complete_bipartite(5, 6);
    CHECK(g56.graph.vertex_count == 11);
    CHECK(g56.graph.edges.size() == 30);
    // lexicographic edge order
    for (size_t e = 1; e < g56.graph.edges.size(); ++e)
        CHECK(g56.graph.edges[e - 1] < g56.graph.edges[e]);

    CHECK_THROWS_AS(complete_bipartite(0, 3), HypothesisError);
    CHECK_THROWS_AS(complete_bipartite(3, 0), HypothesisError);
}

TEST_CASE("framework validation catches structural defects") {
    CHECK_NOTHROW(validate_framework(unit_square()));

    Framework bad = unit_square();
    bad.config.points.pop_back(); // coordinates missing for a vertex
    CHECK_THROWS_AS(validate_framework(bad), Error);

    bad = unit_square();
    bad.graph.edges.push_back({0, 1}); // edge inside part U
    CHECK_THROWS_AS(validate_framework(bad), Error);

    bad = unit_square();
    bad.graph.edges.push_back({2, 2}); // loop
    CHECK_THROWS_AS(validate_framework(bad), Error);

    bad = unit_square();
    bad.graph.edges.push_back({0, 2}); // duplicate edge
    CHECK_THROWS_AS(validate_framework(bad), Error);
}

TEST_CASE("configuration matrix homogenizes coordinates") {
    RatMatrix m = config_matrix(unit_square());
    REQUIRE(m.rows() == 4);
    REQUIRE(m.cols() == 3);
    for (size_t i = 0; i < 4; ++i) CHECK(m.at(i, 2) == Rational(1));
    CHECK(m.at(1, 0) == Rational(1));
    CHECK(m.at(1, 1) == Rational(1));
    CHECK(rank(m) == 3);

    // the planar alternating core: 6 points, full affine span
    RatMatrix core = config_matrix(build_core(2));
    CHECK(core.rows() == 6);
    CHECK(core.cols() == 3);
    CHECK(rank(core) == 3);
}

TEST_CASE("affine span dimension") {
    CHECK(affine_span_dim({{Rational(5), Rational(7)}}) == 0);

    // three collinear points
    std::vector<VecQ> line = {
        {Rational(0), Rational(0)},
        {Rational(1), Rational(2)},
        {Rational(2), Rational(4)},
    };
    CHECK(affine_span_dim(line) == 1);

    Framework core3 = build_core(3);
    CHECK(affine_span_dim(part_points(core3, Side::U)) == 3);
    CHECK(affine_span_dim(part_points(core3, Side::V)) == 3);

    CHECK_THROWS_AS(affine_span_dim({}), HypothesisError);
}

TEST_CASE("general position predicate") {
    Configuration good;
    good.dimension = 2;
    good.points = {
        {Rational(0), Rational(0)},
        {Rational(1), Rational(0)},
        {Rational(0), Rational(1)},
        {Rational(2), Rational(3)},
    };
    CHECK(is_general_position(good));

    Configuration collinear = good;
    collinear.points.push_back({Rational(2), Rational(0)}); // on the x-axis with two others
    CHECK(!is_general_position(collinear));

    // removing points cannot break general position
    Configuration fewer = good;
    fewer.points.pop_back();
    CHECK(is_general_position(fewer));

    Configuration tiny;
    tiny.dimension = 2;
    tiny.points = {{Rational(0), Rational(0)}, {Rational(1), Rational(1)}};
    CHECK_THROWS_AS(is_general_position(tiny), HypothesisError);
}

TEST_CASE("moment-curve points are always in general position") {
    for (size_t d = 1; d <= 3; ++d) {
        Framework core = build_core(d);
        CHECK(is_general_position(core.config));
    }
}

TEST_CASE("edge directions") {
    Framework seg;
    seg.graph.vertex_count = 2;
    seg.graph.edges = {{0, 1}};
    seg.config.dimension = 1;
    seg.config.points = {{Rational(2)}, {Rational(5)}};
    auto dirs = edge_directions(seg);
    REQUIRE(dirs.size() == 1);
    CHECK(dirs[0] == VecQ{Rational(3)});

    auto sq = edge_directions(unit_square());
    REQUIRE(sq.size() == 4);
    CHECK(sq[0] == VecQ{Rational(1), Rational(0)});   // 0 -> 2
    CHECK(sq[1] == VecQ{Rational(0), Rational(1)});   // 0 -> 3
    CHECK(sq[2] == VecQ{Rational(0), Rational(-1)});  // 1 -> 2
    CHECK(sq[3] == VecQ{Rational(-1), Rational(0)});  // 1 -> 3

    Framework coincident = seg;
    coincident.config.points[1] = coincident.config.points[0];
    CHECK_THROWS_AS(edge_directions(coincident), HypothesisError);
}

TEST_CASE("planar core edge directions match hand-computed values") {
    // parameters 1..6 on t -> (t, t^2); U = {1,3,5}, V = {2,4,6};
    // direction for (s, t) is (t - s, t^2 - s^2), scaled here by its actual values
    Framework core = build_core(2);
    auto dirs = edge_directions(core);
    const std::vector<VecQ> expected = {
        {Rational(1), Rational(3)},    // (0,3): 1 -> 2
        {Rational(3), Rational(15)},   // (0,4): 1 -> 4
        {Rational(5), Rational(35)},   // (0,5): 1 -> 6
        {Rational(-1), Rational(-5)},  // (1,3): 3 -> 2
        {Rational(1), Rational(7)},    // (1,4): 3 -> 4
        {Rational(3), Rational(27)},   // (1,5): 3 -> 6
        {Rational(-3), Rational(-21)}, // (2,3): 5 -> 2
        {Rational(-1), Rational(-9)},  // (2,4): 5 -> 4
        {Rational(1), Rational(11)},   // (2,5): 5 -> 6
    };
    REQUIRE(dirs.size() == expected.size());
    for (size_t i = 0; i < dirs.size(); ++i) CHECK(dirs[i] == expected[i]);
}

TEST_CASE("JSON serialization round-trips byte-identically") {
    Framework f = unit_square();
    const std::string once = framework_to_json(f);
    const std::string twice = framework_to_json(framework_from_json(once));
    CHECK(once == twice);

    Framework core = build_core(3);
    const std::string c1 = framework_to_json(core);
    Framework parsed = framework_from_json(c1);
    CHECK(framework_to_json(parsed) == c1);
    CHECK(parsed.graph.edges == core.graph.edges);
    CHECK(parsed.config.points == core.config.points);
    REQUIRE(parsed.partition.has_value());
    CHECK(parsed.partition->part_U == core.partition->part_U);
}

TEST_CASE("JSON parsing canonicalizes edge order") {
    const std::string scrambled = R"({
      "dimension": 1,
      "parts": {"U": [0, 1], "V": [2, 3]},
      "edges": [[1, 3], [0, 2], [1, 2], [0, 3]],
      "coords": {"0": ["1"], "1": ["3"], "2": ["2"], "3": ["4"]}
    })";
    Framework f = framework_from_json(scrambled);
    CHECK(f.graph.edges ==
          std::vector<std::pair<size_t, size_t>>{{0, 2}, {0, 3}, {1, 2}, {1, 3}});
    CHECK(f.config.points[3] == VecQ{Rational(4)});
    // serializing the canonical form and reparsing is stable
    CHECK(framework_to_json(framework_from_json(framework_to_json(f))) == framework_to_json(f));
}

TEST_CASE("JSON parse errors") {
    CHECK_THROWS_AS(framework_from_json("not json"), ParseError);
    CHECK_THROWS_AS(framework_from_json("{}"), ParseError);
    CHECK_THROWS_AS(framework_from_json(R"({"dimension": 1})"), ParseError);
    // malformed rational inside coords
    CHECK_THROWS_AS(framework_from_json(R"({
      "dimension": 1,
      "edges": [[0, 1]],
      "coords": {"0": ["1/0"], "1": ["2"]}
    })"),
                    ParseError);
    // vertex ids must be dense 0..n-1
    CHECK_THROWS_AS(framework_from_json(R"({
      "dimension": 1,
      "edges": [[0, 2]],
      "coords": {"0": ["1"], "2": ["2"]}
    })"),
                    ParseError);
}
