#pragma once

#include <limits>
#include <optional>
#include <vector>

#include "matrix.hpp"
#include "monomial.hpp"

namespace nakajima::type_c {

inline void check_spec(const rank_spec& s) {
    if (s.fam != family::C) throw precondition_error("expected a type C spec");
}

// Row positions of b and b~.
inline int ub(const rank_spec& s, int b) { return letter{b, false}.position(s); }
inline int bb(const rank_spec& s, int b) { return letter{b, true}.position(s); }

inline expo_matrix expand_y(const rank_spec& s, int i, int j, integer y) {
    check_spec(s);
    s.check_index(i);
    if (y == 0) throw precondition_error("exponent must be nonzero");
    const int n = s.rank;
    expo_matrix m(s);
    for (int k = 1; k <= i; ++k) {
        if (y > 0) m.add(ub(s, k), j + i - k, y);
        else m.add(bb(s, k), j - n + k - 1, -y);
    }
    return m;
}

inline expo_matrix expand(const rank_spec& s, const monomial& mono) {
    check_fits(s, mono);
    expo_matrix m(s);
    for (const auto& [sl, y] : mono.terms()) m += expand_y(s, sl.first, sl.second, y);
    return m;
}

// X_i(j) = Y_i(j) Y_{i-1}(j+1)^{-1},  X_i~(j) = Y_{i-1}(t) Y_i(t)^{-1} with t = j+n-i+1.
inline monomial psi_inv_c(const expo_matrix& m) {
    check_spec(m.spec());
    const rank_spec& s = m.spec();
    const int n = s.rank;
    monomial out;
    for (const auto& [c, v] : m.cells()) {
        letter l = letter::at(s, c.first);
        const int i = l.index, j = c.second;
        if (!l.barred) {
            out.add(i, j, v);
            if (i >= 2) out.add(i - 1, j + 1, -v);
        } else {
            const int t = j + n - i + 1;
            if (i >= 2) out.add(i - 1, t, v);
            out.add(i, t, -v);
        }
    }
    return out;
}

// ---- local rules ----

inline void require(bool ok, const char* what) {
    if (!ok) throw precondition_error(what);
}

inline bool lower_pair_applies(const expo_matrix& m, int b, int p, int q) {
    const rank_spec& s = m.spec();
    return b >= 1 && b < s.rank && p - q == s.rank - b && m.at(ub(s, b), p) > 0 && m.at(bb(s, b), q) > 0;
}
inline bool raise_pair_applies(const expo_matrix& m, int b, int p, int q) {
    const rank_spec& s = m.spec();
    return b > 1 && b <= s.rank && p - q == s.rank - b + 1 && m.at(ub(s, b), p) > 0 && m.at(bb(s, b), q) > 0;
}

inline expo_matrix lower_pair(expo_matrix m, int b, int p, int q) {
    check_spec(m.spec());
    require(lower_pair_applies(m, b, p, q), "lower_pair preconditions fail");
    const rank_spec s = m.spec();
    integer mu = std::min(m.at(ub(s, b), p), m.at(bb(s, b), q));
    m.move(ub(s, b), p, ub(s, b + 1), p, mu);
    m.move(bb(s, b), q, bb(s, b + 1), q, mu);
    return m;
}

inline expo_matrix raise_pair(expo_matrix m, int b, int p, int q) {
    check_spec(m.spec());
    require(raise_pair_applies(m, b, p, q), "raise_pair preconditions fail");
    const rank_spec s = m.spec();
    integer mu = std::min(m.at(ub(s, b), p), m.at(bb(s, b), q));
    m.move(ub(s, b), p, ub(s, b - 1), p, mu);
    m.move(bb(s, b), q, bb(s, b - 1), q, mu);
    return m;
}

// The two halves of the generalized diagonal at m_{i,k}.
struct diagonal {
    std::vector<expo_matrix::cell> unbarred;  // (i-s, k+s)
    std::vector<expo_matrix::cell> barred;    // ((i-s)~, k-n+i-1-s)
};

inline diagonal diagonal_at(const rank_spec& s, int i, int k) {
    diagonal d;
    for (int t = 0; t < i; ++t) {
        d.unbarred.push_back({ub(s, i - t), k + t});
        d.barred.push_back({bb(s, i - t), k - s.rank + i - 1 - t});
    }
    return d;
}

inline integer min_over(const expo_matrix& m, const std::vector<expo_matrix::cell>& cells) {
    integer r = std::numeric_limits<integer>::max();
    for (const auto& c : cells) r = std::min(r, m.at(c.first, c.second));
    return r;
}

inline bool cancel_diagonal_applies(const expo_matrix& m, int i, int k) {
    if (i < 1 || i > m.spec().rank) return false;
    auto d = diagonal_at(m.spec(), i, k);
    return min_over(m, d.unbarred) > 0 && min_over(m, d.barred) > 0;
}

inline expo_matrix cancel_diagonal(expo_matrix m, int i, int k) {
    check_spec(m.spec());
    require(cancel_diagonal_applies(m, i, k), "cancel_diagonal preconditions fail");
    auto d = diagonal_at(m.spec(), i, k);
    integer mu = std::min(min_over(m, d.unbarred), min_over(m, d.barred));
    for (const auto& c : d.unbarred) m.add(c.first, c.second, -mu);
    for (const auto& c : d.barred) m.add(c.first, c.second, -mu);
    return m;
}

// Variant 1 has the unbarred anchor m_{i,k} and the full barred half;
// variant 2 has the barred anchor m_{i~,k-n+i-1} and the full unbarred half.
enum class completion_variant { unbarred_anchor = 1, barred_anchor = 2 };

inline bool complete_diagonal_applies(const expo_matrix& m, int i, int k, completion_variant v) {
    if (i < 2 || i > m.spec().rank) return false;
    auto d = diagonal_at(m.spec(), i, k);
    if (v == completion_variant::unbarred_anchor)
        return m.at(d.unbarred[0].first, d.unbarred[0].second) > 0 && min_over(m, d.barred) > 0;
    return m.at(d.barred[0].first, d.barred[0].second) > 0 && min_over(m, d.unbarred) > 0;
}

// Filling in the missing half multiplies the monomial by Y_{i-1}(k+1)
// (variant 1) or Y_{i-1}(k)^{-1} (variant 2); the opposite expansion of that
// factor is inserted too, so the monomial is unchanged.
inline expo_matrix complete_diagonal(expo_matrix m, int i, int k, completion_variant v) {
    check_spec(m.spec());
    require(complete_diagonal_applies(m, i, k, v), "complete_diagonal preconditions fail");
    const rank_spec s = m.spec();
    const int n = s.rank;
    auto d = diagonal_at(s, i, k);
    if (v == completion_variant::unbarred_anchor) {
        integer mu = std::min(m.at(d.unbarred[0].first, d.unbarred[0].second), min_over(m, d.barred));
        m.add(d.unbarred[0].first, d.unbarred[0].second, -mu);
        for (const auto& c : d.barred) m.add(c.first, c.second, -mu);
        for (int kk = 1; kk < i; ++kk) m.add(bb(s, kk), k - n + kk, mu);
    } else {
        integer mu = std::min(m.at(d.barred[0].first, d.barred[0].second), min_over(m, d.unbarred));
        m.add(d.barred[0].first, d.barred[0].second, -mu);
        for (const auto& c : d.unbarred) m.add(c.first, c.second, -mu);
        for (int kk = 1; kk < i; ++kk) m.add(ub(s, kk), k + i - 1 - kk, mu);
    }
    return m;
}

// ---- reduction ----

struct reduce_stats {
    std::size_t scan_cancellations = 0;
    std::size_t scan_enabling_moves = 0;
    std::size_t cycles_cancelled = 0;
    std::size_t raise_pushes = 0;
};

namespace detail {

inline bool try_cancel_at(expo_matrix& m, int i, int k) {
    if (cancel_diagonal_applies(m, i, k)) {
        m = cancel_diagonal(std::move(m), i, k);
        return true;
    }
    for (auto v : {completion_variant::unbarred_anchor, completion_variant::barred_anchor})
        if (complete_diagonal_applies(m, i, k, v)) {
            m = complete_diagonal(std::move(m), i, k, v);
            return true;
        }
    return false;
}

// A pair move that creates the missing cell `target`.
struct rule_move {
    bool c1;
    int b, p, q;
};

inline std::vector<rule_move> moves_creating(const rank_spec& s, expo_matrix::cell target) {
    const int n = s.rank;
    letter l = letter::at(s, target.first);
    const int r = l.index, c = target.second;
    std::vector<rule_move> out;
    if (!l.barred) {
        if (r >= 2) out.push_back({true, r - 1, c, c - (n - r + 1)});
        if (r + 1 <= n) out.push_back({false, r + 1, c, c - (n - r)});
    } else {
        if (r >= 2) out.push_back({true, r - 1, c + n - r + 1, c});
        if (r + 1 <= n) out.push_back({false, r + 1, c + n - r, c});
    }
    return out;
}

// Scan phase: anchors m_{b,j}, rows n..1, columns right to left.
inline void scan_phase(expo_matrix& m, reduce_stats& st) {
    const rank_spec s = m.spec();
    auto range = m.column_range();
    if (!range) return;
    for (int b = s.rank; b >= 1; --b) {
        for (int j = range->second; j >= range->first; --j) {
            while (m.at(ub(s, b), j) > 0) {
                if (try_cancel_at(m, b, j)) {
                    ++st.scan_cancellations;
                    continue;
                }
                auto d = diagonal_at(s, b, j);
                std::vector<expo_matrix::cell> missing;
                for (const auto& c : d.unbarred)
                    if (m.at(c.first, c.second) == 0) missing.push_back(c);
                for (const auto& c : d.barred)
                    if (m.at(c.first, c.second) == 0) missing.push_back(c);
                std::sort(missing.begin(), missing.end());
                bool enabled = false;
                for (const auto& target : missing) {
                    for (const auto& mv : moves_creating(s, target)) {
                        bool ok = mv.c1 ? lower_pair_applies(m, mv.b, mv.p, mv.q) : raise_pair_applies(m, mv.b, mv.p, mv.q);
                        if (!ok) continue;
                        expo_matrix trial = mv.c1 ? lower_pair(m, mv.b, mv.p, mv.q) : raise_pair(m, mv.b, mv.p, mv.q);
                        if (try_cancel_at(trial, b, j)) {
                            m = std::move(trial);
                            ++st.scan_enabling_moves;
                            ++st.scan_cancellations;
                            enabled = true;
                            break;
                        }
                    }
                    if (enabled) break;
                }
                if (!enabled) break;
            }
        }
    }
}

// Flow view: nodes (i,t) for i=1..n plus a ground node 0. Entry (b,j) is a
// unit-cost edge (b-1,j+1) -> (b,j); entry (b~,j) is (b,t) -> (b-1,t) with
// t = j+n-b+1. Row 0 means ground. The monomial is the node divergence, so a
// negative cycle in the residual graph is a cheaper equivalent matrix.
class flow_view {
public:
    explicit flow_view(const expo_matrix& m) : m_(m), s_(m.spec()) {
        const int n = s_.rank;
        int tmin = std::numeric_limits<int>::max(), tmax = std::numeric_limits<int>::min();
        for (const auto& [c, v] : m.cells()) {
            letter l = letter::at(s_, c.first);
            int t1, t2;
            if (!l.barred) {
                t1 = c.second;
                t2 = c.second + 1;
            } else {
                t1 = t2 = c.second + n - l.index + 1;
            }
            tmin = std::min({tmin, t1, t2});
            tmax = std::max({tmax, t1, t2});
        }
        lo_ = tmin - n - 3;
        hi_ = tmax + n + 3;
        width_ = hi_ - lo_ + 1;
        build();
    }

    // Cells and signed unit changes along one negative cycle, if any.
    std::optional<std::vector<std::pair<expo_matrix::cell, integer>>> negative_cycle() const {
        const std::size_t nv = static_cast<std::size_t>(1 + s_.rank * width_);
        std::vector<integer> dist(nv, 0);
        std::vector<std::ptrdiff_t> pred(nv, -1);
        std::ptrdiff_t x = -1;
        for (std::size_t it = 0; it < nv; ++it) {
            x = -1;
            for (std::size_t e = 0; e < edges_.size(); ++e) {
                const auto& ed = edges_[e];
                if (dist[ed.u] + ed.cost < dist[ed.v]) {
                    dist[ed.v] = dist[ed.u] + ed.cost;
                    pred[ed.v] = static_cast<std::ptrdiff_t>(e);
                    x = static_cast<std::ptrdiff_t>(ed.v);
                }
            }
            if (x < 0) return std::nullopt;
        }
        std::size_t v = static_cast<std::size_t>(x);
        for (std::size_t it = 0; it < nv; ++it) v = edges_[pred[v]].u;
        std::vector<std::pair<expo_matrix::cell, integer>> cyc;
        std::size_t w = v;
        do {
            const auto& ed = edges_[pred[w]];
            cyc.push_back({ed.cell, ed.delta});
            w = ed.u;
        } while (w != v);
        return cyc;
    }

private:
    struct edge {
        std::size_t u, v;
        integer cost;
        expo_matrix::cell cell;
        integer delta;
    };

    std::size_t node(int i, int t) const {
        if (i == 0) return 0;
        return static_cast<std::size_t>(1 + (i - 1) * width_ + (t - lo_));
    }
    bool inside(int t) const { return t >= lo_ && t <= hi_; }

    void build() {
        const int n = s_.rank;
        for (int i = 1; i <= n; ++i)
            for (int t = lo_; t <= hi_; ++t) {
                // X_i(t): (i-1,t+1) -> (i,t)
                if (i == 1 || inside(t + 1)) {
                    expo_matrix::cell c{ub(s_, i), t};
                    std::size_t u = node(i - 1, t + 1), v = node(i, t);
                    edges_.push_back({u, v, 1, c, 1});
                    if (m_.at(c.first, c.second) > 0) edges_.push_back({v, u, -1, c, -1});
                }
                // X_i~(t-n+i-1): (i,t) -> (i-1,t)
                expo_matrix::cell c{bb(s_, i), t - n + i - 1};
                std::size_t u = node(i, t), v = node(i - 1, t);
                edges_.push_back({u, v, 1, c, 1});
                if (m_.at(c.first, c.second) > 0) edges_.push_back({v, u, -1, c, -1});
            }
    }

    const expo_matrix& m_;
    rank_spec s_;
    int lo_ = 0, hi_ = 0, width_ = 0;
    std::vector<edge> edges_;
};

inline void cycle_phase(expo_matrix& m, reduce_stats& st) {
    while (!m.empty()) {
        auto cyc = flow_view(m).negative_cycle();
        if (!cyc) return;
        for (const auto& [c, d] : *cyc)
            if (d > 0) m.add(c.first, c.second, d);
        for (const auto& [c, d] : *cyc)
            if (d < 0) m.add(c.first, c.second, d);
        ++st.cycles_cancelled;
    }
}

// Exhaustive raise passes: no m_{b,p}, m_{b~,q} with p-q = n-b+1 both nonzero.
inline void raise_phase(expo_matrix& m, reduce_stats& st) {
    const rank_spec s = m.spec();
    for (bool changed = true; changed;) {
        changed = false;
        for (const auto& [c, v] : m.cells()) {
            letter l = letter::at(s, c.first);
            if (l.barred || l.index < 2) continue;
            const int q = c.second - (s.rank - l.index + 1);
            if (m.at(bb(s, l.index), q) > 0) {
                m = raise_pair(std::move(m), l.index, c.second, q);
                ++st.raise_pushes;
                changed = true;
                break;
            }
        }
    }
}

}  // namespace detail

// Condition (ii) of the reduced form, for every b including b = 1.
inline bool satisfies_condition_ii(const expo_matrix& m) {
    const rank_spec& s = m.spec();
    for (const auto& [c, v] : m.cells()) {
        letter l = letter::at(s, c.first);
        if (l.barred) continue;
        if (m.at(bb(s, l.index), c.second - (s.rank - l.index + 1)) > 0) return false;
    }
    return true;
}

inline bool is_reduced_c(const expo_matrix& m) {
    check_spec(m.spec());
    return satisfies_condition_ii(m) && (m.empty() || !detail::flow_view(m).negative_cycle());
}

inline expo_matrix reduce_c(expo_matrix m, reduce_stats* stats = nullptr) {
    check_spec(m.spec());
    reduce_stats local;
    reduce_stats& st = stats ? *stats : local;
    detail::scan_phase(m, st);
    detail::cycle_phase(m, st);
    detail::raise_phase(m, st);
    if (!satisfies_condition_ii(m)) throw reduction_violated("reduce_c left a raisable pair");
    return m;
}

inline expo_matrix psi_c(const rank_spec& s, const monomial& mono) { return reduce_c(expand(s, mono)); }

// ---- crystal structure ----

inline weight mat_wt_c(const expo_matrix& m) {
    check_spec(m.spec());
    const rank_spec& s = m.spec();
    std::vector<integer> b(static_cast<std::size_t>(s.rank), 0);
    for (const auto& [c, v] : m.cells()) {
        letter l = letter::at(s, c.first);
        b[l.index - 1] += l.barred ? -v : v;
    }
    return weight::from_beta(s, b);
}

// Aligned at unbarred column j: for i < n, plus(j) = m_{i,j} + m_{(i+1)~, j-n+i}
// and minus(j) = m_{i+1,j} + m_{i~, j-n+i}; for i = n, m_{n,j} against m_{n~,j}.
inline matrix_string mat_string_c(const expo_matrix& m, int i) {
    check_spec(m.spec());
    const rank_spec& s = m.spec();
    s.check_index(i);
    auto range = m.column_range();
    if (!range) return {};
    const int n = s.rank;
    if (i == n)
        return string_of(
            range->first, range->second, [&](int j) { return m.at(ub(s, n), j); },
            [&](int j) { return m.at(bb(s, n), j); });
    const int sh = n - i;
    return string_of(
        range->first, range->second + sh,
        [&](int j) { return m.at(ub(s, i), j) + m.at(bb(s, i + 1), j - sh); },
        [&](int j) { return m.at(ub(s, i + 1), j) + m.at(bb(s, i), j - sh); });
}

inline integer mat_phi_c(const expo_matrix& m, int i) { return mat_string_c(m, i).phi; }
inline integer mat_eps_c(const expo_matrix& m, int i) { return mat_string_c(m, i).eps; }

inline void assert_reduced(const expo_matrix& m, const char* op, int i) {
    if (!is_reduced_c(m)) throw reduction_violated(std::string(op) + std::to_string(i) + " left a non-reduced matrix");
}

inline std::optional<expo_matrix> mat_f_c(const expo_matrix& m, int i) {
    auto st = mat_string_c(m, i);
    if (st.phi == 0) return std::nullopt;
    const rank_spec& s = m.spec();
    const int n = s.rank, k = st.k;
    expo_matrix out = m;
    if (i == n) out.move(ub(s, n), k, bb(s, n), k);
    else if (m.at(bb(s, i + 1), k - n + i) == 0) out.move(ub(s, i), k, ub(s, i + 1), k);
    else out.move(bb(s, i + 1), k - n + i, bb(s, i), k - n + i);
    assert_reduced(out, "f", i);
    return out;
}

enum class e_split {
    printed,   // case 1 when m_{(i+1)~, p-n+i} != 0, as printed
    mirrored,  // case 1 when m_{i+1,p} != 0, mirroring f
};

// The transfer itself, without guards. Empty when it would make an entry negative.
inline std::optional<expo_matrix> e_transfer(const expo_matrix& m, int i, int p, e_split split) {
    const rank_spec& s = m.spec();
    const int n = s.rank;
    expo_matrix out = m;
    bool unbarred;
    if (i == n) {
        if (m.at(bb(s, n), p) == 0) return std::nullopt;
        out.move(bb(s, n), p, ub(s, n), p);
        return out;
    }
    if (split == e_split::printed) unbarred = m.at(bb(s, i + 1), p - n + i) != 0;
    else unbarred = m.at(ub(s, i + 1), p) != 0;
    if (unbarred) {
        if (m.at(ub(s, i + 1), p) == 0) return std::nullopt;
        out.move(ub(s, i + 1), p, ub(s, i), p);
    } else {
        if (m.at(bb(s, i), p - n + i) == 0) return std::nullopt;
        out.move(bb(s, i), p - n + i, bb(s, i + 1), p - n + i);
    }
    return out;
}

// e_i with the inverse law checked: the result must be a valid matrix that
// f_i sends back to the input.
inline std::optional<expo_matrix> mat_e_c(const expo_matrix& m, int i, e_split split = e_split::printed) {
    auto st = mat_string_c(m, i);
    if (st.eps == 0) return std::nullopt;
    auto out = e_transfer(m, i, st.p, split);
    auto fail = [&](const char* why) {
        return inverse_law_violated("e" + std::to_string(i) + " on " + to_key(m) + ": " + why);
    };
    if (!out) throw fail("transfer from an empty cell");
    std::optional<expo_matrix> back;
    try {
        back = mat_f_c(*out, i);
    } catch (const invariant_violation&) {
        throw fail("f does not apply to the result");
    }
    if (!back || !(*back == m)) throw fail("f does not return to the input");
    return out;
}

inline std::optional<expo_matrix> mat_e_c_mirrored(const expo_matrix& m, int i) {
    return mat_e_c(m, i, e_split::mirrored);
}

inline lower_decomposition lower_decompose_c(const expo_matrix& m) {
    check_spec(m.spec());
    return lower_decompose(m);
}

// Pairs m1_{i,p} != 0, m2_{i~,q} != 0 with p - q = n - i.
inline std::vector<std::pair<int, int>> decomposition_clashes(const lower_decomposition& d) {
    const rank_spec& s = d.m1.spec();
    std::vector<std::pair<int, int>> out;
    for (const auto& [c, v] : d.m1.cells()) {
        letter l = letter::at(s, c.first);
        if (l.barred) continue;
        if (d.m2.at(bb(s, l.index), c.second - (s.rank - l.index)) > 0) out.emplace_back(l.index, c.second);
    }
    return out;
}

inline void assert_no_clash(const lower_decomposition& d) {
    if (!decomposition_clashes(d).empty()) throw decomposition_violated("lower decomposition has an M1/M2 pair at distance n-i");
}

inline expo_matrix reduce_for_compress(const expo_matrix& m) { return reduce_c(m); }

inline expo_matrix compress_step_c(const expo_matrix& m) {
    check_spec(m.spec());
    return compress_step(m, reduce_for_compress);
}

inline expo_matrix compress_c(const expo_matrix& m) {
    check_spec(m.spec());
    return compress(m, reduce_for_compress);
}

}  // namespace nakajima::type_c
