#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "matrix.hpp"

namespace nakajima {

// Rows are kept in display order: the top row comes from the rightmost
// nonzero column, the bottom row from column s. Each row is sorted by the
// order on B.
struct reversed_tableau {
    rank_spec spec;
    int shift = 0;
    std::vector<std::vector<letter>> rows;
    bool unnormalized = false;

    std::size_t boxes() const {
        std::size_t n = 0;
        for (const auto& r : rows) n += r.size();
        return n;
    }
    friend bool operator==(const reversed_tableau&, const reversed_tableau&) = default;
};

inline void sort_row(const rank_spec& s, std::vector<letter>& row) {
    std::sort(row.begin(), row.end(), [&](letter a, letter b) { return a.position(s) < b.position(s); });
}

inline reversed_tableau omega(const expo_matrix& m) {
    auto id = is_n_member(m);
    if (!id) throw not_in_n();
    const rank_spec& s = m.spec();
    reversed_tableau t{s, id->s, {}, s.fam == family::C};
    auto range = m.column_range();
    if (!range) return t;
    for (int j = range->second; j >= range->first; --j) {
        std::vector<letter> row;
        for (int r = 0; r < m.rows(); ++r)
            for (integer k = 0; k < m.at(r, j); ++k) row.push_back(letter::at(s, r));
        t.rows.push_back(std::move(row));
    }

    for (std::size_t r = 1; r < t.rows.size(); ++r)
        if (t.rows[r].size() < t.rows[r - 1].size())
            throw invariant_violation("tableau row lengths must not shrink downward");
    if (s.fam == family::A)
        for (std::size_t r = 1; r < t.rows.size(); ++r) {
            const auto& up = t.rows[r - 1];
            const auto& down = t.rows[r];
            for (std::size_t l = 0; l < up.size(); ++l)
                if (up[up.size() - 1 - l].index >= down[down.size() - 1 - l].index)
                    throw invariant_violation("tableau columns must strictly increase downward");
        }
    return t;
}

// Signed beta unit for one letter.
inline std::vector<integer> letter_beta(const rank_spec& s, letter l) {
    std::vector<integer> b(static_cast<std::size_t>(s.beta_size()), 0);
    b[l.index - 1] = l.barred ? -1 : 1;
    return b;
}

inline weight tableau_wt(const reversed_tableau& t) {
    std::vector<integer> b(static_cast<std::size_t>(t.spec.beta_size()), 0);
    for (const auto& row : t.rows)
        for (letter l : row) b[l.index - 1] += l.barred ? -1 : 1;
    return weight::from_beta(t.spec, b);
}

// Column reading: columns of the right-justified diagram from right to left,
// each read top to bottom. Entries are (row, index within row).
inline std::vector<std::pair<std::size_t, std::size_t>> reading_order(const reversed_tableau& t) {
    std::size_t width = 0;
    for (const auto& r : t.rows) width = std::max(width, r.size());
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t l = 0; l < width; ++l)
        for (std::size_t r = 0; r < t.rows.size(); ++r)
            if (t.rows[r].size() > l) out.emplace_back(r, t.rows[r].size() - 1 - l);
    return out;
}

enum class signature_pick { standard, rightmost_plus };

namespace detail {

// i gives '+', i+1 gives '-'; a '+' cancels against a later '-'.
// Returns positions (in reading order) of the unmatched '+' and '-'.
inline std::pair<std::vector<std::size_t>, std::vector<std::size_t>> unmatched(const reversed_tableau& t, int i,
                                                                               const auto& order) {
    std::vector<std::size_t> plus, minus;
    for (std::size_t k = 0; k < order.size(); ++k) {
        letter l = t.rows[order[k].first][order[k].second];
        if (l.barred) continue;
        if (l.index == i) plus.push_back(k);
        else if (l.index == i + 1) {
            if (!plus.empty()) plus.pop_back();
            else minus.push_back(k);
        }
    }
    return {plus, minus};
}

}  // namespace detail

// Signature rule for type A tableaux. The standard pick acts on the leftmost
// unmatched '+'; rightmost_plus is kept only for comparison.
inline std::optional<reversed_tableau> tableau_f_a(const reversed_tableau& t, int i,
                                                   signature_pick pick = signature_pick::standard) {
    if (t.spec.fam != family::A) throw precondition_error("tableau_f_a needs a type A tableau");
    t.spec.check_index(i);
    auto order = reading_order(t);
    auto [plus, minus] = detail::unmatched(t, i, order);
    if (plus.empty()) return std::nullopt;
    auto at = order[pick == signature_pick::standard ? plus.front() : plus.back()];
    reversed_tableau out = t;
    out.rows[at.first][at.second] = letter{i + 1, false};
    sort_row(out.spec, out.rows[at.first]);
    return out;
}

inline std::optional<reversed_tableau> tableau_e_a(const reversed_tableau& t, int i) {
    if (t.spec.fam != family::A) throw precondition_error("tableau_e_a needs a type A tableau");
    t.spec.check_index(i);
    auto order = reading_order(t);
    auto [plus, minus] = detail::unmatched(t, i, order);
    if (minus.empty()) return std::nullopt;
    auto at = order[minus.back()];
    reversed_tableau out = t;
    out.rows[at.first][at.second] = letter{i, false};
    sort_row(out.spec, out.rows[at.first]);
    return out;
}

struct path_polyline {
    rank_spec spec;
    std::vector<std::vector<integer>> segments;  // beta coordinates

    std::vector<integer> endpoint() const {
        std::vector<integer> e(static_cast<std::size_t>(spec.beta_size()), 0);
        for (const auto& s : segments)
            for (std::size_t k = 0; k < e.size(); ++k) e[k] += s[k];
        return e;
    }
    weight endpoint_weight() const { return weight::from_beta(spec, endpoint()); }
};

inline path_polyline tableau_to_path(const reversed_tableau& t) {
    path_polyline p{t.spec, {}};
    for (auto [r, c] : reading_order(t)) p.segments.push_back(letter_beta(t.spec, t.rows[r][c]));
    return p;
}

inline std::string to_text(const reversed_tableau& t) {
    std::size_t width = 0;
    for (const auto& r : t.rows) width = std::max(width, r.size());
    std::ostringstream os;
    for (const auto& r : t.rows) {
        for (std::size_t k = 0; k < width; ++k) {
            if (k) os << ' ';
            os << (k < width - r.size() ? std::string(".") : to_string(r[k - (width - r.size())]));
        }
        os << '\n';
    }
    return os.str();
}

inline nlohmann::ordered_json to_json(const reversed_tableau& t) {
    nlohmann::ordered_json j;
    j["shift"] = t.shift;
    j["rows"] = nlohmann::ordered_json::array();
    for (const auto& r : t.rows) {
        auto row = nlohmann::ordered_json::array();
        for (letter l : r) row.push_back(to_string(l));
        j["rows"].push_back(row);
    }
    j["unnormalized"] = t.unnormalized;
    return j;
}

inline nlohmann::ordered_json to_json(const path_polyline& p) {
    nlohmann::ordered_json j;
    j["segments"] = p.segments;
    j["endpoint"] = p.endpoint();
    return j;
}

inline std::string to_text(const path_polyline& p) {
    std::ostringstream os;
    std::vector<integer> at(static_cast<std::size_t>(p.spec.beta_size()), 0);
    auto put = [&](const std::vector<integer>& v) {
        os << '(';
        for (std::size_t k = 0; k < v.size(); ++k) os << (k ? "," : "") << v[k];
        os << ')';
    };
    put(at);
    for (const auto& s : p.segments) {
        for (std::size_t k = 0; k < at.size(); ++k) at[k] += s[k];
        os << " -> ";
        put(at);
    }
    os << '\n';
    return os.str();
}

}  // namespace nakajima
