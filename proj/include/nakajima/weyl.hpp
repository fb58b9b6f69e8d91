#pragma once

#include <numeric>
#include <vector>

#include "cartan.hpp"

namespace nakajima {

namespace detail {

struct exact_fraction {
    integer num = 1;
    integer den = 1;

    void times(integer a, integer b) {
        integer g1 = std::gcd(a, den), g2 = std::gcd(b, num);
        a /= g1;
        den /= g1;
        b /= g2;
        num /= g2;
        if (__builtin_mul_overflow(num, a, &num) || __builtin_mul_overflow(den, b, &den))
            throw precondition_error("dimension overflows 64-bit arithmetic");
        integer g = std::gcd(num, den);
        num /= g;
        den /= g;
    }
};

}  // namespace detail

// Weyl dimension formula in orthogonal coordinates. The positive roots are
// e_i - e_j (both families), e_i + e_j and 2 e_i (type C only).
inline integer dim_b_lambda(const rank_spec& s, const weight& lambda) {
    if (!(lambda.spec() == s)) throw precondition_error("weight spec mismatch");
    if (!lambda.dominant()) throw precondition_error("weight is not dominant");

    const int m = s.fam == family::A ? s.rank + 1 : s.rank;
    std::vector<integer> lr(static_cast<std::size_t>(m), 0), rho(static_cast<std::size_t>(m), 0);
    integer acc = 0;
    for (int k = s.rank; k >= 1; --k) {
        acc += lambda[k];
        lr[k - 1] = acc;
    }
    for (int k = 0; k < m; ++k) {
        rho[k] = m - k;
        lr[k] += rho[k];
    }

    detail::exact_fraction d;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            d.times(lr[i] - lr[j], rho[i] - rho[j]);
            if (s.fam == family::C) d.times(lr[i] + lr[j], rho[i] + rho[j]);
        }
    if (s.fam == family::C)
        for (int i = 0; i < m; ++i) d.times(lr[i], rho[i]);
    if (d.den != 1) throw invariant_violation("Weyl formula gave a non-integer");
    return d.num;
}

}  // namespace nakajima
