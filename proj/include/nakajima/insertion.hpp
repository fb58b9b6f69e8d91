#pragma once

#include "kappa.hpp"

namespace nakajima {

// Zero columns between the two blocks of a star product.
inline int star_gap(const rank_spec& s) { return s.fam == family::A ? 1 : s.rank; }

// M2's block on the left, `gap` zero columns, then M1 at its own columns.
inline expo_matrix star(const expo_matrix& m1, const expo_matrix& m2) {
    if (!(m1.spec() == m2.spec())) throw precondition_error("star of matrices with different specs");
    auto r1 = m1.column_range();
    auto r2 = m2.column_range();
    if (!r1) return m2;
    if (!r2) return m1;
    const int by = (r1->first - star_gap(m1.spec()) - 1) - r2->second;
    expo_matrix out = m1 + m2.shifted(by);
    if (!is_reduced(out)) throw reduction_violated("star product is not reduced");
    return out;
}

inline monomial insert(const rank_spec& s, const monomial& m1, const monomial& m2) {
    expo_matrix x = compress(star(psi(s, m1), psi(s, m2)));
    if (!is_n_member(x)) throw invariant_violation("insertion ended outside N");
    return psi_inv(x);
}

}  // namespace nakajima
