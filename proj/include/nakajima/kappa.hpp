#pragma once

#include "crystal.hpp"
#include "matrix_a.hpp"
#include "matrix_c.hpp"

namespace nakajima {

// Family-dispatching front for the two codecs.

inline expo_matrix expand(const rank_spec& s, const monomial& m) {
    return s.fam == family::A ? type_a::expand(s, m) : type_c::expand(s, m);
}

inline expo_matrix reduce(const expo_matrix& m) {
    return m.spec().fam == family::A ? type_a::reduce_a1(m) : type_c::reduce_c(m);
}

inline bool is_reduced(const expo_matrix& m) {
    return m.spec().fam == family::A ? !type_a::has_full_diagonal(m) : type_c::is_reduced_c(m);
}

inline expo_matrix psi(const rank_spec& s, const monomial& m) { return reduce(expand(s, m)); }

inline monomial psi_inv(const expo_matrix& m) {
    return m.spec().fam == family::A ? type_a::psi_inv(m) : type_c::psi_inv_c(m);
}

inline weight mat_wt(const expo_matrix& m) {
    return m.spec().fam == family::A ? type_a::mat_wt(m) : type_c::mat_wt_c(m);
}

inline matrix_string mat_string(const expo_matrix& m, int i) {
    return m.spec().fam == family::A ? type_a::mat_string(m, i) : type_c::mat_string_c(m, i);
}

inline std::optional<expo_matrix> mat_f(const expo_matrix& m, int i) {
    return m.spec().fam == family::A ? type_a::mat_f(m, i) : type_c::mat_f_c(m, i);
}

inline std::optional<expo_matrix> mat_e(const expo_matrix& m, int i,
                                        type_c::e_split split = type_c::e_split::printed) {
    return m.spec().fam == family::A ? type_a::mat_e(m, i) : type_c::mat_e_c(m, i, split);
}

inline expo_matrix compress_step(const expo_matrix& m) {
    return compress_step(m, [](const expo_matrix& x) { return reduce(x); });
}

inline std::vector<expo_matrix> compress_trace(const expo_matrix& m) {
    return compress_trace(m, [](const expo_matrix& x) { return reduce(x); });
}

inline expo_matrix compress(const expo_matrix& m) { return compress_trace(m).back(); }

struct kappa_result {
    expo_matrix matrix;     // Phi(Psi(M)), a member of N
    monomial image;         // kappa(M)
    n_membership identity;  // kappa(M) lies in M_s(lambda)
};

inline kappa_result kappa_full(const rank_spec& s, const monomial& m) {
    expo_matrix x = compress(psi(s, m));
    auto id = is_n_member(x);
    if (!id) throw invariant_violation("compression ended outside N");
    return {x, psi_inv(x), *id};
}

inline monomial kappa(const rank_spec& s, const monomial& m) { return kappa_full(s, m).image; }

class matrix_crystal {
public:
    using element_type = expo_matrix;

    explicit matrix_crystal(rank_spec s, type_c::e_split split = type_c::e_split::printed)
        : spec_(s), split_(split) {}

    const rank_spec& spec() const { return spec_; }
    weight wt(const expo_matrix& m) const { return mat_wt(m); }
    integer phi(const expo_matrix& m, int i) const { return mat_string(m, i).phi; }
    integer eps(const expo_matrix& m, int i) const { return mat_string(m, i).eps; }
    std::optional<expo_matrix> f(const expo_matrix& m, int i) const { return mat_f(m, i); }
    std::optional<expo_matrix> e(const expo_matrix& m, int i) const { return mat_e(m, i, split_); }
    std::string key(const expo_matrix& m) const { return to_key(m); }

private:
    rank_spec spec_;
    type_c::e_split split_;
};

static_assert(crystal_model<monomial_crystal>);
static_assert(crystal_model<matrix_crystal>);

}  // namespace nakajima
