#pragma once

#include <optional>

#include "matrix.hpp"
#include "monomial.hpp"

namespace nakajima::type_a {

inline void check_spec(const rank_spec& s) {
    if (s.fam != family::A) throw precondition_error("expected a type A spec");
}

// Y_i(j)^y as a product of X's; positive y fills rows 1..i on a falling
// diagonal, negative y fills rows i+1..n+1.
inline expo_matrix expand_y(const rank_spec& s, int i, int j, integer y) {
    check_spec(s);
    s.check_index(i);
    if (y == 0) throw precondition_error("exponent must be nonzero");
    expo_matrix m(s);
    if (y > 0)
        for (int k = 1; k <= i; ++k) m.add(k - 1, j + i - k, y);
    else
        for (int k = i + 1; k <= s.rank + 1; ++k) m.add(k - 1, j - k + i, -y);
    return m;
}

inline expo_matrix expand(const rank_spec& s, const monomial& mono) {
    check_fits(s, mono);
    expo_matrix m(s);
    for (const auto& [sl, y] : mono.terms()) m += expand_y(s, sl.first, sl.second, y);
    return m;
}

// Diagonal cancellation. Anti-diagonals are anchored at their row-1 column and visited in
// descending column order until none is full.
inline expo_matrix reduce_a1(expo_matrix m) {
    check_spec(m.spec());
    const int rows = m.rows();
    for (bool changed = true; changed;) {
        changed = false;
        std::vector<int> anchors;
        for (const auto& [c, v] : m.cells())
            if (c.first == 0) anchors.push_back(c.second);
        for (auto it = anchors.rbegin(); it != anchors.rend(); ++it) {
            const int c = *it;
            integer low = m.at(0, c);
            for (int k = 1; k < rows && low > 0; ++k) low = std::min(low, m.at(k, c - k));
            if (low == 0) continue;
            for (int k = 0; k < rows; ++k) m.add(k, c - k, -low);
            changed = true;
        }
    }
    return m;
}

inline bool has_full_diagonal(const expo_matrix& m) {
    for (const auto& [c, v] : m.cells()) {
        if (c.first != 0) continue;
        bool full = true;
        for (int k = 1; k < m.rows() && full; ++k) full = m.at(k, c.second - k) > 0;
        if (full) return true;
    }
    return false;
}

inline expo_matrix psi(const rank_spec& s, const monomial& mono) { return reduce_a1(expand(s, mono)); }

// X_i(j) = Y_i(j) Y_{i-1}(j+1)^{-1} with Y_0 = Y_{n+1} = 1.
inline monomial psi_inv(const expo_matrix& m) {
    check_spec(m.spec());
    const int n = m.spec().rank;
    monomial out;
    for (const auto& [c, v] : m.cells()) {
        const int i = c.first + 1, j = c.second;
        if (i <= n) out.add(i, j, v);
        if (i >= 2) out.add(i - 1, j + 1, -v);
    }
    return out;
}

inline weight mat_wt(const expo_matrix& m) {
    check_spec(m.spec());
    std::vector<integer> b(static_cast<std::size_t>(m.spec().beta_size()), 0);
    for (const auto& [c, v] : m.cells()) b[c.first] += v;
    return weight::from_beta(m.spec(), b);
}

inline matrix_string mat_string(const expo_matrix& m, int i) {
    check_spec(m.spec());
    m.spec().check_index(i);
    auto range = m.column_range();
    if (!range) return {};
    return string_of(
        range->first, range->second, [&](int j) { return m.at(i - 1, j); }, [&](int j) { return m.at(i, j); });
}

inline integer mat_phi(const expo_matrix& m, int i) { return mat_string(m, i).phi; }
inline integer mat_eps(const expo_matrix& m, int i) { return mat_string(m, i).eps; }

inline std::optional<expo_matrix> mat_f(const expo_matrix& m, int i) {
    auto st = mat_string(m, i);
    if (st.phi == 0) return std::nullopt;
    expo_matrix out = m;
    out.move(i - 1, st.k, i, st.k);
    if (has_full_diagonal(out)) throw reduction_violated("f" + std::to_string(i) + " produced a full diagonal");
    return out;
}

inline std::optional<expo_matrix> mat_e(const expo_matrix& m, int i) {
    auto st = mat_string(m, i);
    if (st.eps == 0) return std::nullopt;
    expo_matrix out = m;
    out.move(i, st.p, i - 1, st.p);
    if (has_full_diagonal(out)) throw reduction_violated("e" + std::to_string(i) + " produced a full diagonal");
    return out;
}

inline lower_decomposition lower_decompose_a(const expo_matrix& m) {
    check_spec(m.spec());
    return lower_decompose(m);
}

inline expo_matrix compress_step_a(const expo_matrix& m) {
    check_spec(m.spec());
    return compress_step(m, reduce_a1);
}

inline expo_matrix compress_a(const expo_matrix& m) {
    check_spec(m.spec());
    return compress(m, reduce_a1);
}

}  // namespace nakajima::type_a
