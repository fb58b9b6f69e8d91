#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cartan.hpp"

namespace nakajima {

// Nonnegative integer matrix with rows indexed by B (by position in the
// total order) and columns by Z. Only positive entries are stored.
class expo_matrix {
public:
    using cell = std::pair<int, int>;  // (row position, column)

    expo_matrix() = default;
    explicit expo_matrix(rank_spec s) : spec_(s) {}

    const rank_spec& spec() const { return spec_; }
    int rows() const { return spec_.alphabet_size(); }

    integer at(int row, int col) const {
        auto it = cells_.find({row, col});
        return it == cells_.end() ? 0 : it->second;
    }
    integer at(letter l, int col) const { return at(l.position(spec_), col); }

    // Entries never go negative; a transfer that would do so is a bug.
    void add(int row, int col, integer v) {
        if (row < 0 || row >= rows()) throw precondition_error("row position out of range");
        if (v == 0) return;
        auto [it, fresh] = cells_.try_emplace({row, col}, 0);
        it->second += v;
        if (it->second < 0) {
            it->second -= v;
            if (it->second == 0) cells_.erase(it);
            throw invariant_violation("matrix entry would become negative");
        }
        if (it->second == 0) cells_.erase(it);
    }
    void add(letter l, int col, integer v) { add(l.position(spec_), col, v); }
    void move(int from_row, int from_col, int to_row, int to_col, integer v = 1) {
        add(from_row, from_col, -v);
        add(to_row, to_col, v);
    }

    bool empty() const { return cells_.empty(); }
    const std::map<cell, integer>& cells() const { return cells_; }

    std::optional<std::pair<int, int>> column_range() const {
        if (cells_.empty()) return std::nullopt;
        int lo = cells_.begin()->first.second, hi = lo;
        for (const auto& [c, v] : cells_) {
            lo = std::min(lo, c.second);
            hi = std::max(hi, c.second);
        }
        return std::pair{lo, hi};
    }
    std::vector<int> nonzero_columns() const {
        std::vector<int> cols;
        for (const auto& [c, v] : cells_) cols.push_back(c.second);
        std::sort(cols.begin(), cols.end());
        cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
        return cols;
    }
    integer column_sum(int col) const {
        integer s = 0;
        for (int r = 0; r < rows(); ++r) s += at(r, col);
        return s;
    }
    integer total() const {
        integer s = 0;
        for (const auto& [c, v] : cells_) s += v;
        return s;
    }

    expo_matrix shifted(int by) const {
        expo_matrix m(spec_);
        for (const auto& [c, v] : cells_) m.cells_.emplace(cell{c.first, c.second + by}, v);
        return m;
    }
    expo_matrix& operator+=(const expo_matrix& o) {
        for (const auto& [c, v] : o.cells_) add(c.first, c.second, v);
        return *this;
    }
    friend expo_matrix operator+(expo_matrix a, const expo_matrix& b) { return a += b; }
    expo_matrix& operator-=(const expo_matrix& o) {
        for (const auto& [c, v] : o.cells_) add(c.first, c.second, -v);
        return *this;
    }
    friend expo_matrix operator-(expo_matrix a, const expo_matrix& b) { return a -= b; }

    friend bool operator==(const expo_matrix&, const expo_matrix&) = default;

private:
    rank_spec spec_{};
    std::map<cell, integer> cells_;
};

inline std::string row_label(const rank_spec& s, int pos) { return to_string(letter::at(s, pos)); }

// Canonical key: "label@col^value" tokens in (row, column) order.
inline std::string to_key(const expo_matrix& m) {
    if (m.empty()) return "0";
    std::string k;
    for (const auto& [c, v] : m.cells()) {
        if (!k.empty()) k += ' ';
        k += row_label(m.spec(), c.first) + '@' + std::to_string(c.second);
        if (v != 1) k += '^' + std::to_string(v);
    }
    return k;
}

// Dense block: rows in B-order, columns from the first to the last nonzero one.
inline std::vector<std::vector<integer>> dense_rows(const expo_matrix& m, int lo, int hi) {
    std::vector<std::vector<integer>> rows(static_cast<std::size_t>(m.rows()));
    for (int r = 0; r < m.rows(); ++r)
        for (int c = lo; c <= hi; ++c) rows[r].push_back(m.at(r, c));
    return rows;
}

inline std::vector<std::vector<integer>> dense_rows(const expo_matrix& m) {
    auto range = m.column_range();
    if (!range) return std::vector<std::vector<integer>>(static_cast<std::size_t>(m.rows()));
    return dense_rows(m, range->first, range->second);
}

inline int col_offset(const expo_matrix& m) {
    auto range = m.column_range();
    return range ? range->first : 0;
}

inline expo_matrix from_dense(const rank_spec& s, int offset, const std::vector<std::vector<integer>>& rows) {
    if (rows.size() != static_cast<std::size_t>(s.alphabet_size()))
        throw precondition_error("row count does not match the alphabet");
    expo_matrix m(s);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < rows[r].size(); ++c) {
            if (rows[r][c] < 0) throw precondition_error("negative matrix entry");
            m.add(static_cast<int>(r), offset + static_cast<int>(c), rows[r][c]);
        }
    return m;
}

inline nlohmann::ordered_json to_json(const expo_matrix& m) {
    nlohmann::ordered_json j;
    j["family"] = std::string(1, family_char(m.spec().fam));
    j["rank"] = m.spec().rank;
    j["col_offset"] = col_offset(m);
    j["rows"] = dense_rows(m);
    return j;
}

inline expo_matrix matrix_from_json(const nlohmann::json& j) {
    try {
        std::string f = j.at("family").get<std::string>();
        if (f != "A" && f != "C") throw precondition_error("family must be A or C");
        rank_spec s(f == "A" ? family::A : family::C, j.at("rank").get<int>());
        return from_dense(s, j.at("col_offset").get<int>(), j.at("rows").get<std::vector<std::vector<integer>>>());
    } catch (const nlohmann::json::exception& e) {
        throw precondition_error(std::string("bad matrix json: ") + e.what());
    }
}

// Grid with row labels; the header names the first column.
inline std::string to_text(const expo_matrix& m) {
    std::ostringstream os;
    auto rows = dense_rows(m);
    os << "col_offset " << col_offset(m) << '\n';
    for (int r = 0; r < m.rows(); ++r) {
        std::string label = row_label(m.spec(), r);
        os << label << std::string(label.size() < 3 ? 3 - label.size() : 0, ' ') << '|';
        for (integer v : rows[r]) os << ' ' << v;
        os << '\n';
    }
    return os.str();
}

struct lower_decomposition {
    expo_matrix m1;
    expo_matrix m2;
};

// M1 copies the leftmost column; later columns are filled bottom-up, keeping
// as much of each entry as the staircase condition allows.
inline lower_decomposition lower_decompose(const expo_matrix& m) {
    const rank_spec s = m.spec();
    lower_decomposition d{expo_matrix(s), expo_matrix(s)};
    auto range = m.column_range();
    if (!range) return d;
    const auto [lo, hi] = *range;
    const int rows = m.rows();

    for (int r = 0; r < rows; ++r) d.m1.add(r, lo, m.at(r, lo));
    for (int j = lo + 1; j <= hi; ++j) {
        integer below_prev = 0, below_cur = 0;
        for (int r = rows - 1; r >= 0; --r) {
            integer v = m.at(r, j);
            if (below_prev < v + below_cur) v = below_prev - below_cur;
            if (v < 0) throw invariant_violation("lower decomposition produced a negative entry");
            d.m1.add(r, j, v);
            below_prev += d.m1.at(r, j - 1);
            below_cur += v;
        }
    }
    d.m2 = m - d.m1;

    if (auto r1 = d.m1.column_range(); r1 && r1->second - r1->first + 1 > s.rank)
        throw decomposition_violated("lower decomposition part spans more than n columns");
    return d;
}

struct n_membership {
    weight lambda;
    int s = 0;
    friend bool operator==(const n_membership&, const n_membership&) = default;
};

inline std::optional<n_membership> is_n_member(const expo_matrix& m) {
    const rank_spec spec = m.spec();
    auto range = m.column_range();
    if (!range) return n_membership{weight(spec), 0};
    const int s = range->first;
    const int n = spec.rank;
    if (range->second > s + n - 1) return std::nullopt;

    for (int j = s + 1; j <= s + n - 1; ++j) {
        integer here = 0, left = 0;  // suffix sums from the bottom row
        for (int r = m.rows() - 1; r >= 0; --r) {
            here += m.at(r, j);
            if (here > left) return std::nullopt;
            left += m.at(r, j - 1);
        }
    }
    std::vector<integer> a(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k) a[k - 1] = m.column_sum(s + k - 1) - m.column_sum(s + k);
    return n_membership{weight(spec, std::move(a)), s};
}

template <class Reduce>
expo_matrix compress_step(const expo_matrix& m, Reduce&& reduce) {
    auto d = lower_decompose(m);
    return reduce(d.m1 + d.m2.shifted(-1));
}

// Every intermediate matrix, starting with the input and ending in N.
template <class Reduce>
std::vector<expo_matrix> compress_trace(const expo_matrix& m, Reduce&& reduce) {
    std::vector<expo_matrix> steps{m};
    std::size_t cap = 0;
    if (auto r = m.column_range()) cap = 2 * static_cast<std::size_t>(r->second - r->first + 1 + m.spec().rank);
    while (!is_n_member(steps.back())) {
        if (steps.size() > cap) throw non_termination(cap);
        steps.push_back(compress_step(steps.back(), reduce));
    }
    return steps;
}

template <class Reduce>
expo_matrix compress(const expo_matrix& m, Reduce&& reduce) {
    return compress_trace(m, reduce).back();
}

// Shared prefix/suffix-sum computation of phi and eps. plus(j) counts toward
// phi at aligned column j, minus(j) against it.
struct matrix_string {
    integer phi = 0;
    integer eps = 0;
    int k = 0;  // minimal phi achiever
    int p = 0;  // maximal eps achiever
};

template <class Plus, class Minus>
matrix_string string_of(int lo, int hi, Plus&& plus, Minus&& minus) {
    matrix_string r;
    // phi(k) = sum_{j<=k} plus - sum_{j<k} minus, for k in [lo-1, hi+1]
    integer sp = 0, sm = 0;
    r.k = lo - 1;
    for (int k = lo; k <= hi + 1; ++k) {
        sp += plus(k);
        integer v = sp - sm;
        if (v > r.phi) {
            r.phi = v;
            r.k = k;
        }
        sm += minus(k);
    }
    // eps(k) = -(sum_{j>k} plus - sum_{j>=k} minus)
    sp = 0;
    sm = 0;
    r.p = hi + 1;
    for (int k = hi + 1; k >= lo - 1; --k) {
        sm += minus(k);
        integer v = sm - sp;
        if (v > r.eps) {
            r.eps = v;
            r.p = k;
        }
        sp += plus(k);
    }
    return r;
}

}  // namespace nakajima
