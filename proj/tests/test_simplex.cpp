#include <doctest.h>

#include <vector>

#include "rigidcert/construct.hpp"
#include "rigidcert/errors.hpp"
#include "rigidcert/matrix.hpp"
#include "rigidcert/simplex.hpp"
#include "rigidcert/veronese.hpp"

using namespace rigidcert;

namespace {

// Convex-combination tableau over the Veronese images of two point sets:
// upper-triangle rows of sum(lambda V(p)) - sum(mu V(q)) = 0, then the two
// normalization rows sum(lambda) = 1, sum(mu) = 1. Mirrors the geometry LP so
// the solver can be exercised directly on hand-sized instances.
void veronese_lp(const std::vector<VecQ>& p, const std::vector<VecQ>& q, size_t d, RatMatrix& a,
                 VecQ& b) {
    const size_t np = p.size(), nq = q.size();
    std::vector<VecQ> rows;
    for (size_t i = 0; i <= d; ++i)
        for (size_t j = i; j <= d; ++j) {
            VecQ row;
            for (const VecQ& x : p) row.push_back(veronese(x).at(i, j));
            for (const VecQ& y : q) row.push_back(-veronese(y).at(i, j));
            rows.push_back(row);
        }
    VecQ norm_p(np + nq), norm_q(np + nq);
    for (size_t i = 0; i < np; ++i) norm_p[i] = Rational(1);
    for (size_t j = 0; j < nq; ++j) norm_q[np + j] = Rational(1);
    rows.push_back(norm_p);
    rows.push_back(norm_q);
    a = RatMatrix::from_rows(rows);
    b = VecQ(rows.size());
    b[rows.size() - 2] = Rational(1);
    b[rows.size() - 1] = Rational(1);
}

} // namespace

TEST_CASE("one-variable minimum") {
    // min -x s.t. x + s = 1 -> x = 1, objective -1
    RatMatrix a = RatMatrix::from_rows({{Rational(1), Rational(1)}});
    SimplexResult r = simplex_min(a, {Rational(1)}, {Rational(-1), Rational(0)});
    REQUIRE(r.status == SimplexStatus::Optimal);
    CHECK(r.objective == Rational(-1));
    CHECK(r.x == VecQ{Rational(1), Rational(0)});
}

TEST_CASE("two-variable optimum with fractional answer") {
    // min -x - y s.t. 2x + y + s1 = 3, x + 3y + s2 = 4
    RatMatrix a = RatMatrix::from_rows({
        {Rational(2), Rational(1), Rational(1), Rational(0)},
        {Rational(1), Rational(3), Rational(0), Rational(1)},
    });
    SimplexResult r = simplex_min(a, {Rational(3), Rational(4)},
                                  {Rational(-1), Rational(-1), Rational(0), Rational(0)});
    REQUIRE(r.status == SimplexStatus::Optimal);
    // vertex x = 1, y = 1
    CHECK(r.x[0] == Rational(1));
    CHECK(r.x[1] == Rational(1));
    CHECK(r.objective == Rational(-2));
    // feasibility of the reported point, exactly
    CHECK(a.apply(r.x) == VecQ{Rational(3), Rational(4)});
}

TEST_CASE("infeasible system is detected") {
    // x = -1 with x >= 0
    RatMatrix a = RatMatrix::from_rows({{Rational(1)}});
    SimplexResult r = simplex_min(a, {Rational(-1)}, {Rational(0)});
    CHECK(r.status == SimplexStatus::Infeasible);
}

TEST_CASE("unbounded objective is detected after dropping a redundant row") {
    // constraint 0*x = 0 carries no information; min -x is unbounded
    RatMatrix a(1, 1); // single zero row
    SimplexResult r = simplex_min(a, {Rational(0)}, {Rational(-1)});
    CHECK(r.status == SimplexStatus::Unbounded);
}

TEST_CASE("degenerate pivots terminate under Bland's rule") {
    // Degenerate vertex: both slack basics hit zero ratio simultaneously.
    // min -x - 2y s.t. x + y + s1 = 1, x + s2 = 1 -> optimum at (0,1), obj -2.
    RatMatrix a = RatMatrix::from_rows({
        {Rational(1), Rational(1), Rational(1), Rational(0)},
        {Rational(1), Rational(0), Rational(0), Rational(1)},
    });
    SimplexResult r = simplex_min(a, {Rational(1), Rational(1)},
                                  {Rational(-1), Rational(-2), Rational(0), Rational(0)});
    REQUIRE(r.status == SimplexStatus::Optimal);
    CHECK(r.objective == Rational(-2));
    CHECK(r.x[0] == Rational(0));
    CHECK(r.x[1] == Rational(1));
}

TEST_CASE("equality-only system with a unique solution") {
    // x + y = 2, x - y = 0 has the single nonnegative solution (1,1)
    RatMatrix a = RatMatrix::from_rows({
        {Rational(1), Rational(1)},
        {Rational(1), Rational(-1)},
    });
    SimplexResult r = simplex_min(a, {Rational(2), Rational(0)}, {Rational(5), Rational(7)});
    REQUIRE(r.status == SimplexStatus::Optimal);
    CHECK(r.x == VecQ{Rational(1), Rational(1)});
    CHECK(r.objective == Rational(12));
}

TEST_CASE("max-min-weight on a single shared point gives t* = 1") {
    const std::vector<VecQ> p = {{Rational(3)}};
    const std::vector<VecQ> q = {{Rational(3)}};
    RatMatrix a;
    VecQ b;
    veronese_lp(p, q, 1, a, b);
    LpWeightResult r = lp_max_min_weight(a, b);
    REQUIRE(r.status == LpStatus::Optimal);
    CHECK(r.t_star == Rational(1));
    CHECK(r.solution == VecQ{Rational(1), Rational(1)});
}

TEST_CASE("max-min-weight is infeasible for separated segments") {
    // Veronese hulls of {0,1} and {5,6} on the line do not meet
    const std::vector<VecQ> p = {{Rational(0)}, {Rational(1)}};
    const std::vector<VecQ> q = {{Rational(5)}, {Rational(6)}};
    RatMatrix a;
    VecQ b;
    veronese_lp(p, q, 1, a, b);
    CHECK(lp_max_min_weight(a, b).status == LpStatus::Infeasible);
}

TEST_CASE("max-min-weight finds interior crossing weights exactly") {
    // Alternating parameters 1,3 / 2,4 on the line: parabola chords cross
    const std::vector<VecQ> p = {{Rational(1)}, {Rational(3)}};
    const std::vector<VecQ> q = {{Rational(2)}, {Rational(4)}};
    RatMatrix a;
    VecQ b;
    veronese_lp(p, q, 1, a, b);
    LpWeightResult r = lp_max_min_weight(a, b);
    REQUIRE(r.status == LpStatus::Optimal);
    CHECK(r.t_star == Rational(1, 4));
    REQUIRE(r.solution.size() == 4);
    CHECK(r.solution[0] == Rational(1, 4));
    CHECK(r.solution[1] == Rational(3, 4));
    CHECK(r.solution[2] == Rational(3, 4));
    CHECK(r.solution[3] == Rational(1, 4));
    // the two convex combinations reconstruct the same Veronese point
    CHECK(a.apply(r.solution) == b);
}

TEST_CASE("positive t* reconstructs a common point of both hulls") {
    const std::vector<VecQ> p = {{Rational(1)}, {Rational(3)}};
    const std::vector<VecQ> q = {{Rational(2)}, {Rational(4)}};
    RatMatrix a;
    VecQ b;
    veronese_lp(p, q, 1, a, b);
    LpWeightResult r = lp_max_min_weight(a, b);
    REQUIRE(r.status == LpStatus::Optimal);
    REQUIRE(r.t_star > Rational(0));
    CHECK(a.apply(r.solution) == b);
    for (const Rational& w : r.solution) CHECK(w >= r.t_star);
}

TEST_CASE("touching hulls give t* = 0") {
    // {0} vs {0,1}: the single point sits on the boundary of the segment
    const std::vector<VecQ> p = {{Rational(0)}};
    const std::vector<VecQ> q = {{Rational(0)}, {Rational(1)}};
    RatMatrix a;
    VecQ b;
    veronese_lp(p, q, 1, a, b);
    LpWeightResult r = lp_max_min_weight(a, b);
    REQUIRE(r.status == LpStatus::Optimal);
    CHECK(r.t_star == Rational(0));
    CHECK(a.apply(r.solution) == b);
}
