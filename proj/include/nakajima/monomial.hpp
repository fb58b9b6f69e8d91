#pragma once

#include <cctype>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "cartan.hpp"

namespace nakajima {

// Laurent monomial in the Y_i(n). Zero exponents are never stored.
class monomial {
public:
    using slot = std::pair<int, int>;  // (i, n)
    using map_type = std::map<slot, integer>;

    monomial() = default;
    static monomial y(int i, int n, integer e = 1) {
        monomial m;
        m.add(i, n, e);
        return m;
    }

    integer exponent(int i, int n) const {
        auto it = exps_.find({i, n});
        return it == exps_.end() ? 0 : it->second;
    }
    void add(int i, int n, integer e) {
        if (e == 0) return;
        auto [it, fresh] = exps_.try_emplace({i, n}, e);
        if (!fresh && (it->second += e) == 0) exps_.erase(it);
    }

    monomial& operator*=(const monomial& o) {
        for (const auto& [s, e] : o.exps_) add(s.first, s.second, e);
        return *this;
    }
    monomial& divide(const monomial& o) {
        for (const auto& [s, e] : o.exps_) add(s.first, s.second, -e);
        return *this;
    }
    friend monomial operator*(monomial a, const monomial& b) { return a *= b; }

    monomial shifted(int by) const {
        monomial m;
        for (const auto& [s, e] : exps_) m.exps_.emplace(slot{s.first, s.second + by}, e);
        return m;
    }

    bool empty() const { return exps_.empty(); }
    const map_type& terms() const { return exps_; }
    int max_index() const {
        int r = 0;
        for (const auto& [s, e] : exps_) r = std::max(r, s.first);
        return r;
    }

    friend bool operator==(const monomial&, const monomial&) = default;
    friend auto operator<=>(const monomial& a, const monomial& b) { return a.exps_ <=> b.exps_; }

private:
    map_type exps_;
};

inline std::string to_string(const monomial& m) {
    if (m.empty()) return "1";
    std::string out;
    for (const auto& [s, e] : m.terms()) {
        if (!out.empty()) out += '*';
        out += 'Y' + std::to_string(s.first) + '(' + std::to_string(s.second) + ')';
        if (e != 1) out += '^' + std::to_string(e);
    }
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const monomial& m) { return os << to_string(m); }

namespace detail {

class monomial_parser {
public:
    explicit monomial_parser(std::string_view t) : text_(t) {}

    monomial run() {
        skip();
        if (peek() == '1') {
            std::size_t at = pos_;
            ++pos_;
            skip();
            if (pos_ == text_.size()) return {};
            pos_ = at;
        }
        monomial m;
        term(m);
        while (skip(), pos_ < text_.size()) {
            expect('*');
            term(m);
        }
        return m;
    }

private:
    void term(monomial& m) {
        skip();
        expect('Y');
        integer i = number();
        expect('(');
        integer n = number();
        expect(')');
        integer e = 1;
        skip();
        if (peek() == '^') {
            ++pos_;
            e = number();
        }
        if (i < 1) throw parse_error("index must be positive", index_pos_);
        m.add(static_cast<int>(i), static_cast<int>(n), e);
    }

    integer number() {
        skip();
        index_pos_ = pos_;
        bool neg = false;
        if (peek() == '-' || peek() == '+') {
            neg = peek() == '-';
            ++pos_;
            skip();
        }
        if (!std::isdigit(static_cast<unsigned char>(peek()))) throw parse_error("expected integer", pos_);
        integer v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + (peek() - '0');
            if (v > 1'000'000'000) throw parse_error("integer too large", index_pos_);
            ++pos_;
        }
        return neg ? -v : v;
    }

    void expect(char c) {
        skip();
        if (peek() != c) throw parse_error(std::string("expected '") + c + "'", pos_);
        ++pos_;
    }
    void skip() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t index_pos_ = 0;
};

}  // namespace detail

inline monomial parse_monomial(std::string_view text) { return detail::monomial_parser(text).run(); }

// c_ij of the monomial realisation: 0 if i > j, 1 otherwise.
inline int c_value(int i, int j) { return i > j ? 0 : 1; }

inline monomial a_monomial(const rank_spec& s, int i, int n) {
    s.check_index(i);
    monomial a;
    a.add(i, n, 1);
    a.add(i, n + 1, 1);
    for (int j = 1; j <= s.rank; ++j)
        if (j != i) a.add(j, n + c_value(j, i), cartan_entry(s, j, i));
    return a;
}

inline void check_fits(const rank_spec& s, const monomial& m) {
    if (m.max_index() > s.rank)
        throw precondition_error("monomial uses index " + std::to_string(m.max_index()) +
                                 " beyond rank " + std::to_string(s.rank));
}

inline weight mono_wt(const rank_spec& s, const monomial& m) {
    check_fits(s, m);
    std::vector<integer> l(static_cast<std::size_t>(s.rank), 0);
    for (const auto& [sl, e] : m.terms()) l[sl.first - 1] += e;
    return weight(s, std::move(l));
}

struct string_data {
    integer phi = 0;
    integer eps = 0;
    std::optional<int> n_f;  // minimal achiever, set when phi > 0
    std::optional<int> n_e;  // maximal achiever, set when eps > 0
};

// phi_i = max_n sum_{k<=n} y_i(k); the prefix sum is constant on plateaus
// between support points, so only plateau starts and ends matter.
inline string_data mono_string(const monomial& m, int i) {
    std::vector<std::pair<int, integer>> pts;
    for (const auto& [sl, e] : m.terms())
        if (sl.first == i) pts.emplace_back(sl.second, e);
    string_data d;
    if (pts.empty()) return d;

    integer run = 0, total = 0;
    for (const auto& p : pts) total += p.second;
    for (const auto& p : pts) {
        run += p.second;
        d.phi = std::max(d.phi, run);
    }
    d.eps = d.phi - total;

    run = 0;
    std::optional<int> last_end;  // end of the latest plateau at height phi
    if (d.phi == 0) last_end = pts.front().first - 1;
    for (std::size_t k = 0; k < pts.size(); ++k) {
        run += pts[k].second;
        if (run != d.phi) continue;
        if (!d.n_f && d.phi > 0) d.n_f = pts[k].first;
        if (k + 1 < pts.size()) last_end = pts[k + 1].first - 1;
        else last_end.reset();
    }
    if (d.eps > 0) d.n_e = last_end;
    return d;
}

inline integer mono_phi(const rank_spec& s, const monomial& m, int i) {
    s.check_index(i);
    check_fits(s, m);
    return mono_string(m, i).phi;
}
inline integer mono_eps(const rank_spec& s, const monomial& m, int i) {
    s.check_index(i);
    check_fits(s, m);
    return mono_string(m, i).eps;
}

inline std::optional<monomial> mono_f(const rank_spec& s, const monomial& m, int i) {
    s.check_index(i);
    check_fits(s, m);
    auto d = mono_string(m, i);
    if (d.phi == 0) return std::nullopt;
    return monomial(m).divide(a_monomial(s, i, *d.n_f));
}

inline std::optional<monomial> mono_e(const rank_spec& s, const monomial& m, int i) {
    s.check_index(i);
    check_fits(s, m);
    auto d = mono_string(m, i);
    if (d.eps == 0) return std::nullopt;
    return m * a_monomial(s, i, *d.n_e);
}

inline bool is_highest_weight(const rank_spec& s, const monomial& m) {
    for (int i = 1; i <= s.rank; ++i)
        if (mono_string(m, i).eps != 0) return false;
    return true;
}

// Y_1(slot)^{a_1} ... Y_n(slot)^{a_n}
inline monomial highest_weight_monomial(const weight& lambda, int slot = 1) {
    if (!lambda.dominant()) throw precondition_error("weight is not dominant");
    monomial m;
    for (int k = 1; k <= lambda.spec().rank; ++k) m.add(k, slot, lambda[k]);
    return m;
}

}  // namespace nakajima
