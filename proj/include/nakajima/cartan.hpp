#pragma once

#include <algorithm>
#include <compare>
#include <cstdlib>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"

namespace nakajima {

using integer = std::int64_t;

enum class family { A, C };

inline char family_char(family f) { return f == family::A ? 'A' : 'C'; }

struct rank_spec {
    family fam = family::A;
    int rank = 1;

    constexpr rank_spec() = default;
    rank_spec(family f, int n) : fam(f), rank(n) {
        if (n < 1) throw precondition_error("rank must be at least 1");
    }

    // Size of the alphabet B.
    int alphabet_size() const { return fam == family::A ? rank + 1 : 2 * rank; }
    // Length of a beta-coordinate vector.
    int beta_size() const { return fam == family::A ? rank + 1 : rank; }

    void check_index(int i) const {
        if (i < 1 || i > rank)
            throw precondition_error("index " + std::to_string(i) + " outside 1.." + std::to_string(rank));
    }

    friend bool operator==(const rank_spec&, const rank_spec&) = default;
};

inline std::string to_string(const rank_spec& s) {
    return std::string(1, family_char(s.fam)) + std::to_string(s.rank);
}

// <h_j, alpha_i>
inline int cartan_entry(const rank_spec& s, int j, int i) {
    if (i == j) return 2;
    if (std::abs(i - j) != 1) return 0;
    if (s.fam == family::C && j == s.rank - 1 && i == s.rank) return -2;
    return -1;
}

// Letters of B. Type A uses unbarred 1..n+1 only; type C uses 1..n and their bars.
struct letter {
    int index = 1;
    bool barred = false;

    // Position in the total order 1 < 2 < ... < n < n~ < ... < 1~.
    int position(const rank_spec& s) const {
        return barred ? 2 * s.rank - index : index - 1;
    }
    static letter at(const rank_spec& s, int pos) {
        if (s.fam == family::A || pos < s.rank) return {pos + 1, false};
        return {2 * s.rank - pos, true};
    }

    friend bool operator==(const letter&, const letter&) = default;
};

inline std::string to_string(const letter& l) {
    return std::to_string(l.index) + (l.barred ? "~" : "");
}

// Weight stored in Lambda-coordinates; beta-coordinates are derived.
class weight {
public:
    weight() = default;
    explicit weight(rank_spec s) : spec_(s), lambda_(static_cast<std::size_t>(s.rank), 0) {}
    weight(rank_spec s, std::vector<integer> lambda) : spec_(s), lambda_(std::move(lambda)) {
        if (lambda_.size() != static_cast<std::size_t>(s.rank))
            throw precondition_error("lambda vector length does not match rank");
    }

    static weight fundamental(rank_spec s, int k) {
        s.check_index(k);
        weight w(s);
        w.lambda_[k - 1] = 1;
        return w;
    }
    static weight simple_root(rank_spec s, int i) {
        s.check_index(i);
        weight w(s);
        for (int j = 1; j <= s.rank; ++j) w.lambda_[j - 1] = cartan_entry(s, j, i);
        return w;
    }

    // Type A: beta_1 = L1, beta_i = L_i - L_{i-1}, beta_{n+1} = -L_n.
    // Type C: beta_i = L_i - L_{i-1}.
    static weight from_beta(rank_spec s, const std::vector<integer>& b) {
        if (b.size() != static_cast<std::size_t>(s.beta_size()))
            throw precondition_error("beta vector length does not match spec");
        weight w(s);
        for (int k = 1; k <= s.rank; ++k) {
            integer next = k < static_cast<int>(b.size()) ? b[k] : 0;
            w.lambda_[k - 1] = b[k - 1] - next;
        }
        return w;
    }
    static weight beta_unit(rank_spec s, int k, integer coeff = 1) {
        std::vector<integer> b(static_cast<std::size_t>(s.beta_size()), 0);
        b.at(static_cast<std::size_t>(k - 1)) = coeff;
        return from_beta(s, b);
    }

    // Type A representatives are normalised to have minimum entry 0.
    std::vector<integer> beta() const {
        std::vector<integer> b(static_cast<std::size_t>(spec_.beta_size()), 0);
        integer acc = 0;
        for (int k = spec_.rank; k >= 1; --k) {
            acc += lambda_[k - 1];
            b[k - 1] = acc;
        }
        if (spec_.fam == family::A) {
            integer m = *std::min_element(b.begin(), b.end());
            for (auto& x : b) x -= m;
        }
        return b;
    }

    const rank_spec& spec() const { return spec_; }
    const std::vector<integer>& lambda() const { return lambda_; }
    integer operator[](int k) const { return lambda_.at(static_cast<std::size_t>(k - 1)); }

    bool dominant() const {
        return std::all_of(lambda_.begin(), lambda_.end(), [](integer x) { return x >= 0; });
    }
    bool is_zero() const {
        return std::all_of(lambda_.begin(), lambda_.end(), [](integer x) { return x == 0; });
    }

    weight& operator+=(const weight& o) {
        same_spec(o);
        for (std::size_t k = 0; k < lambda_.size(); ++k) lambda_[k] += o.lambda_[k];
        return *this;
    }
    weight& operator-=(const weight& o) {
        same_spec(o);
        for (std::size_t k = 0; k < lambda_.size(); ++k) lambda_[k] -= o.lambda_[k];
        return *this;
    }
    friend weight operator+(weight a, const weight& b) { return a += b; }
    friend weight operator-(weight a, const weight& b) { return a -= b; }
    friend bool operator==(const weight&, const weight&) = default;

private:
    void same_spec(const weight& o) const {
        if (!(spec_ == o.spec_)) throw precondition_error("weights of different specs");
    }

    rank_spec spec_{};
    std::vector<integer> lambda_;
};

inline integer pairing(const rank_spec& s, int j, const weight& w) {
    s.check_index(j);
    if (!(w.spec() == s)) throw precondition_error("weight spec mismatch");
    return w[j];
}

inline weight beta_to_lambda(const rank_spec& s, const std::vector<integer>& b) {
    return weight::from_beta(s, b);
}
inline std::vector<integer> lambda_to_beta(const rank_spec& s, const std::vector<integer>& l) {
    return weight(s, l).beta();
}

// "2L1+L3", "0" for the zero weight.
inline std::string to_string(const weight& w) {
    std::ostringstream os;
    bool first = true;
    for (int k = 1; k <= w.spec().rank; ++k) {
        integer c = w[k];
        if (c == 0) continue;
        if (c < 0) os << '-';
        else if (!first) os << '+';
        if (c != 1 && c != -1) os << (c < 0 ? -c : c);
        os << 'L' << k;
        first = false;
    }
    if (first) os << '0';
    return os.str();
}

inline std::ostream& operator<<(std::ostream& os, const weight& w) { return os << to_string(w); }

}  // namespace nakajima
