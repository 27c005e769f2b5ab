#include "rigidcert/psd.hpp"

#include <algorithm>
#include <utility>

#include "rigidcert/errors.hpp"

namespace rigidcert {

namespace {

struct SchurStep {
    size_t idx;
    Rational val;
    std::vector<std::pair<size_t, Rational>> row; // entries over the active set after removing idx
};

Rational quadratic_form(const RatMatrix& s, const VecQ& x) {
    Rational acc;
    for (size_t i = 0; i < s.rows(); ++i) {
        if (x[i].is_zero()) continue;
        for (size_t j = 0; j < s.cols(); ++j) {
            if (x[j].is_zero() || s.at(i, j).is_zero()) continue;
            acc += x[i] * s.at(i, j) * x[j];
        }
    }
    return acc;
}

// Lift a witness for the current Schur complement back to the original
// coordinates: for each completed pivot step, taken in reverse, the pivot
// coordinate is chosen so the step's cross terms cancel and the quadratic form
// value is preserved.
VecQ lift_witness(VecQ x, const std::vector<SchurStep>& steps) {
    for (size_t k = steps.size(); k-- > 0;) {
        const SchurStep& st = steps[k];
        Rational dot;
        for (const auto& [j, w] : st.row)
            if (!x[j].is_zero()) dot += w * x[j];
        x[st.idx] = -dot / st.val;
    }
    return x;
}

} // namespace

PsdReport psd_certify(const RatMatrix& s) {
    if (!s.is_symmetric()) throw Error("psd_certify: matrix is not symmetric");
    const size_t n = s.rows();

    RatMatrix w = s;
    std::vector<bool> active(n, true);
    std::vector<size_t> act;
    act.reserve(n);
    for (size_t i = 0; i < n; ++i) act.push_back(i);
    std::vector<SchurStep> steps;

    PsdReport rep;
    const auto fail_with = [&](VecQ reduced) {
        VecQ x = lift_witness(std::move(reduced), steps);
        rep.is_psd = false;
        rep.rank = rep.pivot_values.size();
        rep.witness_value = quadratic_form(s, x);
        if (!(rep.witness_value < Rational(0)))
            throw InternalError("psd_certify: lifted witness is not negative (this is a bug)");
        rep.failure_witness = std::move(x);
        return rep;
    };

    while (!act.empty()) {
        // Any negative diagonal in a Schur complement already refutes PSD.
        for (size_t k : act) {
            if (w.at(k, k) < Rational(0)) {
                VecQ e(n);
                e[k] = Rational(1);
                return fail_with(std::move(e));
            }
        }
        size_t piv = n;
        for (size_t k : act)
            if (w.at(k, k) > Rational(0)) { piv = k; break; }
        if (piv == n) {
            // All active diagonals are zero; PSD forces the whole block to be zero.
            for (size_t a = 0; a < act.size(); ++a)
                for (size_t b = a + 1; b < act.size(); ++b) {
                    const size_t k = act[a], l = act[b];
                    if (!w.at(k, l).is_zero()) {
                        VecQ e(n);
                        e[k] = Rational(1);
                        e[l] = w.at(k, l) > Rational(0) ? Rational(-1) : Rational(1);
                        return fail_with(std::move(e));
                    }
                }
            break;
        }

        const Rational pv = w.at(piv, piv);
        SchurStep st;
        st.idx = piv;
        st.val = pv;
        for (size_t j : act)
            if (j != piv && !w.at(piv, j).is_zero()) st.row.emplace_back(j, w.at(piv, j));
        for (size_t i : act) {
            if (i == piv || w.at(i, piv).is_zero()) continue;
            const Rational f = w.at(i, piv) / pv;
            for (size_t j : act) {
                if (j == piv) continue;
                if (!w.at(piv, j).is_zero()) w.at(i, j) -= f * w.at(piv, j);
            }
        }
        steps.push_back(std::move(st));
        rep.pivot_permutation.push_back(piv);
        rep.pivot_values.push_back(pv);
        active[piv] = false;
        act.erase(std::find(act.begin(), act.end(), piv));
    }

    rep.is_psd = true;
    rep.rank = rep.pivot_values.size();
    return rep;
}

} // namespace rigidcert
