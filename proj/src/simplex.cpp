#include "rigidcert/simplex.hpp"

#include <utility>

#include "rigidcert/errors.hpp"

namespace rigidcert {

namespace {

// Dense tableau kept in canonical form: basis columns are unit columns and the
// reduced-cost row is maintained incrementally.
struct Tableau {
    size_t nvars = 0;
    std::vector<VecQ> t; // rows of constraints
    VecQ rhs;
    std::vector<size_t> basis; // basis[r] = variable basic in row r
    VecQ red;                  // reduced costs
    Rational obj;              // current objective value

    void pivot(size_t r, size_t j) {
        const Rational inv = Rational(1) / t[r][j];
        for (auto& v : t[r]) v = v * inv;
        rhs[r] = rhs[r] * inv;
        for (size_t i = 0; i < t.size(); ++i) {
            if (i == r || t[i][j].is_zero()) continue;
            const Rational f = t[i][j];
            for (size_t k = 0; k < nvars; ++k)
                if (!t[r][k].is_zero()) t[i][k] -= f * t[r][k];
            rhs[i] -= f * rhs[r];
        }
        if (!red[j].is_zero()) {
            // obj tracks c_B^T rhs; the entering variable takes value rhs[r].
            const Rational f = red[j];
            for (size_t k = 0; k < nvars; ++k)
                if (!t[r][k].is_zero()) red[k] -= f * t[r][k];
            obj += f * rhs[r];
        }
        basis[r] = j;
    }

    // Bland's rule iteration; `allowed(j)` restricts the entering candidates.
    template <typename Allowed>
    SimplexStatus iterate(const Allowed& allowed) {
        for (;;) {
            size_t enter = nvars;
            for (size_t j = 0; j < nvars; ++j)
                if (allowed(j) && red[j] < Rational(0)) { enter = j; break; }
            if (enter == nvars) return SimplexStatus::Optimal;
            size_t leave = t.size();
            Rational best;
            for (size_t r = 0; r < t.size(); ++r) {
                if (!(t[r][enter] > Rational(0))) continue;
                const Rational ratio = rhs[r] / t[r][enter];
                if (leave == t.size() || ratio < best ||
                    (ratio == best && basis[r] < basis[leave])) {
                    leave = r;
                    best = ratio;
                }
            }
            if (leave == t.size()) return SimplexStatus::Unbounded;
            pivot(leave, enter);
        }
    }
};

} // namespace

SimplexResult simplex_min(const RatMatrix& a, const VecQ& b, const VecQ& c) {
    const size_t m = a.rows(), n = a.cols();
    if (b.size() != m || c.size() != n) throw Error("simplex_min: dimension mismatch");

    Tableau tab;
    tab.nvars = n + m; // real variables then one artificial per row
    tab.t.assign(m, VecQ(tab.nvars));
    tab.rhs.resize(m);
    tab.basis.resize(m);
    for (size_t r = 0; r < m; ++r) {
        const bool neg = b[r] < Rational(0);
        for (size_t j = 0; j < n; ++j) tab.t[r][j] = neg ? -a.at(r, j) : a.at(r, j);
        tab.rhs[r] = neg ? -b[r] : b[r];
        tab.t[r][n + r] = Rational(1);
        tab.basis[r] = n + r;
    }

    // Phase 1: minimize the sum of artificials.
    tab.red.assign(tab.nvars, Rational());
    tab.obj = Rational();
    for (size_t r = 0; r < m; ++r) {
        for (size_t j = 0; j < n; ++j) tab.red[j] -= tab.t[r][j];
        tab.obj += tab.rhs[r];
    }
    const auto all_vars = [](size_t) { return true; };
    if (tab.iterate(all_vars) != SimplexStatus::Optimal)
        throw InternalError("simplex: phase 1 unbounded (this is a bug)");
    if (!tab.obj.is_zero()) return {SimplexStatus::Infeasible, Rational(), {}};

    // Drive artificials out of the basis; rows that cannot pivot onto a real
    // variable are redundant and dropped.
    for (size_t r = tab.t.size(); r-- > 0;) {
        if (tab.basis[r] < n) continue;
        size_t j = n;
        for (size_t k = 0; k < n; ++k)
            if (!tab.t[r][k].is_zero()) { j = k; break; }
        if (j < n) {
            tab.pivot(r, j);
        } else {
            tab.t.erase(tab.t.begin() + static_cast<std::ptrdiff_t>(r));
            tab.rhs.erase(tab.rhs.begin() + static_cast<std::ptrdiff_t>(r));
            tab.basis.erase(tab.basis.begin() + static_cast<std::ptrdiff_t>(r));
        }
    }

    // Phase 2: real objective, artificials barred from entering.
    tab.red.assign(tab.nvars, Rational());
    for (size_t j = 0; j < n; ++j) tab.red[j] = c[j];
    tab.obj = Rational();
    for (size_t r = 0; r < tab.t.size(); ++r) {
        const size_t bj = tab.basis[r];
        if (tab.red[bj].is_zero()) continue;
        const Rational f = tab.red[bj];
        for (size_t k = 0; k < tab.nvars; ++k)
            if (!tab.t[r][k].is_zero()) tab.red[k] -= f * tab.t[r][k];
        tab.obj += f * tab.rhs[r];
    }
    const auto real_vars = [n](size_t j) { return j < n; };
    const SimplexStatus st = tab.iterate(real_vars);
    if (st == SimplexStatus::Unbounded) return {SimplexStatus::Unbounded, Rational(), {}};

    SimplexResult res;
    res.status = SimplexStatus::Optimal;
    res.x.assign(n, Rational());
    for (size_t r = 0; r < tab.t.size(); ++r)
        if (tab.basis[r] < n) res.x[tab.basis[r]] = tab.rhs[r];
    for (size_t j = 0; j < n; ++j)
        if (!res.x[j].is_zero()) res.objective += c[j] * res.x[j];
    return res;
}

LpWeightResult lp_max_min_weight(const RatMatrix& a, const VecQ& b) {
    const size_t k = a.rows(), n = a.cols();
    if (b.size() != k) throw Error("lp_max_min_weight: dimension mismatch");

    // Substitute w = t*1 + u with t, u >= 0: variables are (t, u_1..u_n) and
    // the constraints become [A*1 | A] (t,u) = b. Maximizing t is then a
    // standard-form minimization of -t.
    RatMatrix std_a(k, n + 1);
    for (size_t r = 0; r < k; ++r) {
        Rational rowsum;
        for (size_t j = 0; j < n; ++j) {
            std_a.at(r, j + 1) = a.at(r, j);
            rowsum += a.at(r, j);
        }
        std_a.at(r, 0) = rowsum;
    }
    VecQ c(n + 1);
    c[0] = Rational(-1);
    const SimplexResult res = simplex_min(std_a, b, c);
    if (res.status == SimplexStatus::Infeasible) return {LpStatus::Infeasible, Rational(), {}};
    if (res.status == SimplexStatus::Unbounded)
        throw InternalError("lp_max_min_weight: unbounded (missing convexity rows?)");

    LpWeightResult out;
    out.status = LpStatus::Optimal;
    out.t_star = res.x[0];
    out.solution.assign(n, Rational());
    for (size_t j = 0; j < n; ++j) out.solution[j] = res.x[0] + res.x[j + 1];
    return out;
}

} // namespace rigidcert
