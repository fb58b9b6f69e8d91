#pragma once

#include <concepts>
#include <optional>
#include <string>
#include <utility>

#include "cartan.hpp"
#include "monomial.hpp"

namespace nakajima {

// A crystal model is a stateless-ish context object that knows how to act on
// values of its element_type.
template <class C>
concept crystal_model = requires(const C& c, const typename C::element_type& x, int i) {
    typename C::element_type;
    { c.spec() } -> std::convertible_to<rank_spec>;
    { c.wt(x) } -> std::same_as<weight>;
    { c.phi(x, i) } -> std::convertible_to<integer>;
    { c.eps(x, i) } -> std::convertible_to<integer>;
    { c.f(x, i) } -> std::same_as<std::optional<typename C::element_type>>;
    { c.e(x, i) } -> std::same_as<std::optional<typename C::element_type>>;
    { c.key(x) } -> std::convertible_to<std::string>;
};

class monomial_crystal {
public:
    using element_type = monomial;

    explicit monomial_crystal(rank_spec s) : spec_(s) {}

    const rank_spec& spec() const { return spec_; }
    weight wt(const monomial& m) const { return mono_wt(spec_, m); }
    integer phi(const monomial& m, int i) const { return mono_phi(spec_, m, i); }
    integer eps(const monomial& m, int i) const { return mono_eps(spec_, m, i); }
    std::optional<monomial> f(const monomial& m, int i) const { return mono_f(spec_, m, i); }
    std::optional<monomial> e(const monomial& m, int i) const { return mono_e(spec_, m, i); }
    std::string key(const monomial& m) const { return to_string(m); }

private:
    rank_spec spec_;
};

// Kashiwara's convention: f acts on the left factor iff phi(b1) > eps(b2).
template <crystal_model L, crystal_model R>
class tensor_crystal {
public:
    using element_type = std::pair<typename L::element_type, typename R::element_type>;

    tensor_crystal(L left, R right) : left_(std::move(left)), right_(std::move(right)) {
        if (!(rank_spec(left_.spec()) == rank_spec(right_.spec())))
            throw precondition_error("tensor factors have different specs");
    }

    rank_spec spec() const { return left_.spec(); }

    weight wt(const element_type& t) const { return left_.wt(t.first) + right_.wt(t.second); }

    integer phi(const element_type& t, int i) const {
        return std::max<integer>(left_.phi(t.first, i) + pairing(spec(), i, right_.wt(t.second)),
                                 right_.phi(t.second, i));
    }
    integer eps(const element_type& t, int i) const {
        return std::max<integer>(left_.eps(t.first, i),
                                 right_.eps(t.second, i) - pairing(spec(), i, left_.wt(t.first)));
    }

    std::optional<element_type> f(const element_type& t, int i) const {
        if (left_.phi(t.first, i) > right_.eps(t.second, i)) {
            auto x = left_.f(t.first, i);
            if (!x) return std::nullopt;
            return element_type{std::move(*x), t.second};
        }
        auto y = right_.f(t.second, i);
        if (!y) return std::nullopt;
        return element_type{t.first, std::move(*y)};
    }
    std::optional<element_type> e(const element_type& t, int i) const {
        if (left_.phi(t.first, i) < right_.eps(t.second, i)) {
            auto y = right_.e(t.second, i);
            if (!y) return std::nullopt;
            return element_type{t.first, std::move(*y)};
        }
        auto x = left_.e(t.first, i);
        if (!x) return std::nullopt;
        return element_type{std::move(*x), t.second};
    }

    std::string key(const element_type& t) const {
        return left_.key(t.first) + " (x) " + right_.key(t.second);
    }

    const L& left() const { return left_; }
    const R& right() const { return right_; }

private:
    L left_;
    R right_;
};

}  // namespace nakajima
