#pragma once

#include <random>
#include <vector>

#include <nakajima/nakajima.hpp>

namespace nakajima::testing {

inline const std::vector<rank_spec>& property_specs() {
    static const std::vector<rank_spec> specs{
        {family::A, 2}, {family::A, 3}, {family::C, 2}, {family::C, 3}};
    return specs;
}

// At most six factors, exponents in [-2,2], slots in [-3,3].
class monomial_source {
public:
    explicit monomial_source(std::uint64_t seed) : rng_(seed) {}

    monomial next(const rank_spec& s) {
        std::uniform_int_distribution<int> count(1, 6), index(1, s.rank), slot(-3, 3), exp(-2, 2);
        monomial m;
        for (int k = count(rng_); k > 0; --k) {
            int e = 0;
            while (e == 0) e = exp(rng_);
            m.add(index(rng_), slot(rng_), e);
        }
        return m;
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

inline expo_matrix dense(const rank_spec& s, int offset, std::vector<std::vector<integer>> rows) {
    return from_dense(s, offset, rows);
}

// Worked examples, rows in B-order.
struct golden {
    static rank_spec a4() { return {family::A, 4}; }
    static rank_spec c3() { return {family::C, 3}; }

    static monomial a4_input() { return parse_monomial("Y1(4)^-1*Y3(1)*Y1(3)^-1*Y4(1)^-1*Y2(0)^2*Y3(2)^2"); }
    static expo_matrix a4_raw() {
        return dense(a4(), -1,
                     {{0, 0, 2, 0, 1, 2}, {0, 2, 0, 2, 3, 0}, {0, 0, 2, 3, 0, 0}, {0, 1, 1, 0, 0, 0}, {1, 2, 0, 0, 0, 0}});
    }
    static expo_matrix a4_reduced() {
        return dense(a4(), 0, {{0, 2, 0, 0, 1}, {2, 0, 1, 2, 0}, {0, 1, 2, 0, 0}, {0, 0, 0, 0, 0}, {1, 0, 0, 0, 0}});
    }
    static expo_matrix a4_m1_part() {
        return dense(a4(), 0, {{0, 2, 0, 0, 0}, {2, 0, 1, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, 0, 0, 0}, {1, 0, 0, 0, 0}});
    }
    static expo_matrix a4_m2_part() {
        return dense(a4(), 0, {{0, 0, 0, 0, 1}, {0, 0, 0, 2, 0}, {0, 0, 2, 0, 0}, {0, 0, 0, 0, 0}, {0, 0, 0, 0, 0}});
    }
    static expo_matrix a4_step1() {
        return dense(a4(), 0, {{0, 2, 0, 1}, {2, 0, 3, 0}, {0, 3, 0, 0}, {0, 0, 0, 0}, {1, 0, 0, 0}});
    }
    static expo_matrix a4_step2() {
        return dense(a4(), 0, {{0, 2, 0, 1}, {2, 2, 1, 0}, {2, 1, 0, 0}, {0, 0, 0, 0}, {1, 0, 0, 0}});
    }
    // As printed; differs from psi_inv(a4_step2()) by a factor Y1(3).
    static monomial a4_printed_n() { return parse_monomial("Y1(3)*Y2(0)^2*Y1(2)^-2*Y3(0)^2*Y3(1)*Y4(1)^-1"); }
    static monomial a4_n() { return parse_monomial("Y1(2)^-2*Y2(0)^2*Y3(0)^2*Y3(1)*Y4(1)^-1"); }

    static monomial c3a_input() {
        return parse_monomial("Y1(0)*Y1(2)*Y1(1)^-1*Y1(5)^-1*Y1(3)^-1*Y1(4)^-2*Y2(0)*Y2(3)*Y2(5)^-2*Y3(0)*Y3(4)");
    }
    static expo_matrix c3a_reduced() {
        return dense(c3(), 0,
                     {{1, 0, 2, 0, 0}, {1, 1, 0, 1, 0}, {1, 0, 0, 0, 1}, {0, 0, 0, 0, 0}, {0, 0, 0, 1, 0}, {1, 1, 2, 0, 0}});
    }
    static expo_matrix c3a_m1_part() {
        return dense(c3(), 0,
                     {{1, 0, 1, 0, 0}, {1, 1, 0, 0, 0}, {1, 0, 0, 0, 0}, {0, 0, 0, 0, 0}, {0, 0, 0, 0, 0}, {1, 0, 0, 0, 0}});
    }
    static expo_matrix c3a_m2_part() {
        return dense(c3(), 0,
                     {{0, 0, 1, 0, 0}, {0, 0, 0, 1, 0}, {0, 0, 0, 0, 1}, {0, 0, 0, 0, 0}, {0, 0, 0, 1, 0}, {0, 1, 2, 0, 0}});
    }
    static expo_matrix c3a_step1() {
        return dense(c3(), 0, {{1, 1, 1, 0}, {1, 1, 1, 0}, {1, 0, 0, 1}, {0, 0, 0, 0}, {0, 0, 1, 0}, {2, 2, 0, 0}});
    }
    static expo_matrix c3a_final() {
        return dense(c3(), 0, {{1, 1, 1}, {1, 2, 0}, {1, 0, 1}, {0, 0, 0}, {0, 1, 0}, {4, 0, 0}});
    }
    static monomial c3a_n() { return parse_monomial("Y1(0)*Y1(2)^-1*Y1(3)^-3*Y2(0)*Y2(1)*Y2(3)^-2*Y3(0)*Y3(2)"); }

    static monomial c3b_input() { return parse_monomial("Y2(2)^2*Y2(1)^-1*Y3(0)*Y1(0)*Y3(3)^-1"); }
    static expo_matrix c3b_printed() {
        return dense(c3(), 0, {{1, 0, 1, 0}, {1, 1, 0, 0}, {1, 0, 0, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}, {1, 0, 0, 0}});
    }
};

}  // namespace nakajima::testing
