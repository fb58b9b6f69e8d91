#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "crystal.hpp"

namespace nakajima {

inline constexpr std::size_t default_node_cap = 100000;

struct crystal_graph {
    struct node {
        std::string key;
        weight wt;
    };
    struct edge {
        std::size_t src;
        int label;
        std::size_t dst;
        friend bool operator==(const edge&, const edge&) = default;
    };

    rank_spec spec;
    std::vector<node> nodes;
    std::vector<edge> edges;  // src --label--> dst means f_label(src) = dst
    std::size_t root = 0;

    std::size_t size() const { return nodes.size(); }
};

template <crystal_model C>
struct component {
    crystal_graph graph;
    std::vector<typename C::element_type> elements;  // parallel to graph.nodes
};

// BFS closure under all f_i and e_i. Each layer is ordered by key, so the
// result does not depend on hash order.
template <crystal_model C>
component<C> explore_component(const C& model, const typename C::element_type& start,
                               std::size_t node_cap = default_node_cap) {
    if (node_cap == 0) throw precondition_error("node cap must be positive");
    using element = typename C::element_type;
    const rank_spec spec = model.spec();

    component<C> out;
    out.graph.spec = spec;
    std::unordered_map<std::string, std::size_t> index;

    auto admit = [&](std::string key, element x) {
        if (out.elements.size() >= node_cap) throw cap_exceeded(node_cap);
        index.emplace(key, out.elements.size());
        out.graph.nodes.push_back({std::move(key), model.wt(x)});
        out.elements.push_back(std::move(x));
    };

    admit(model.key(start), start);
    std::size_t layer_begin = 0;
    while (layer_begin < out.elements.size()) {
        std::size_t layer_end = out.elements.size();
        std::map<std::string, element> next;
        for (std::size_t v = layer_begin; v < layer_end; ++v) {
            for (int i = 1; i <= spec.rank; ++i) {
                for (auto y : {model.f(out.elements[v], i), model.e(out.elements[v], i)}) {
                    if (!y) continue;
                    std::string k = model.key(*y);
                    if (!index.contains(k)) next.emplace(std::move(k), std::move(*y));
                }
            }
        }
        for (auto& [k, x] : next) admit(k, std::move(x));
        layer_begin = layer_end;
    }

    for (std::size_t v = 0; v < out.elements.size(); ++v)
        for (int i = 1; i <= spec.rank; ++i)
            if (auto y = model.f(out.elements[v], i)) out.graph.edges.push_back({v, i, index.at(model.key(*y))});
    return out;
}

// Counts of axiom failures over every node of an explored component.
struct axiom_report {
    std::size_t nodes = 0;
    std::size_t inverse_law = 0;    // e(f(x)) != x or f(e(x)) != x
    std::size_t weight_law = 0;     // wt(f x) != wt x - alpha_i, or phi - eps != <h_i, wt>
    std::size_t semi_normal = 0;    // phi/eps differ from string lengths
    std::size_t failures() const { return inverse_law + weight_law + semi_normal; }
};

template <crystal_model C>
axiom_report check_axioms(const C& model, const std::vector<typename C::element_type>& elements) {
    const rank_spec spec = model.spec();
    axiom_report r;
    r.nodes = elements.size();
    for (const auto& x : elements) {
        const std::string kx = model.key(x);
        const weight wx = model.wt(x);
        for (int i = 1; i <= spec.rank; ++i) {
            integer ph = model.phi(x, i), ep = model.eps(x, i);
            if (ph - ep != pairing(spec, i, wx)) ++r.weight_law;

            integer fs = 0;
            for (auto y = model.f(x, i); y; y = model.f(*y, i)) ++fs;
            integer es = 0;
            for (auto y = model.e(x, i); y; y = model.e(*y, i)) ++es;
            if (fs != ph || es != ep) ++r.semi_normal;

            if (auto y = model.f(x, i)) {
                auto back = model.e(*y, i);
                if (!back || model.key(*back) != kx) ++r.inverse_law;
                if (model.wt(*y) != wx - weight::simple_root(spec, i)) ++r.weight_law;
            }
            if (auto y = model.e(x, i)) {
                auto back = model.f(*y, i);
                if (!back || model.key(*back) != kx) ++r.inverse_law;
            }
        }
    }
    return r;
}

// Structure-only canonical form. Node ids come from a BFS that starts at the
// unique source and follows out-edges then in-edges, label by label.
inline std::string canonical_form(const crystal_graph& g) {
    const std::size_t n = g.nodes.size();
    if (n == 0) return "n=0";
    const int rank = g.spec.rank;
    std::vector<std::vector<std::ptrdiff_t>> out(n, std::vector<std::ptrdiff_t>(rank + 1, -1));
    std::vector<std::vector<std::ptrdiff_t>> in(n, std::vector<std::ptrdiff_t>(rank + 1, -1));
    for (const auto& e : g.edges) {
        out[e.src][e.label] = static_cast<std::ptrdiff_t>(e.dst);
        in[e.dst][e.label] = static_cast<std::ptrdiff_t>(e.src);
    }

    std::vector<std::size_t> sources;
    for (std::size_t v = 0; v < n; ++v)
        if (std::all_of(in[v].begin() + 1, in[v].end(), [](auto x) { return x < 0; })) sources.push_back(v);
    if (sources.size() > 1) throw multiple_sources();

    std::size_t start = 0;
    if (!sources.empty()) start = sources.front();
    else
        for (std::size_t v = 1; v < n; ++v)
            if (g.nodes[v].key < g.nodes[start].key) start = v;

    std::vector<std::ptrdiff_t> id(n, -1);
    std::vector<std::size_t> order;
    std::deque<std::size_t> queue{start};
    id[start] = 0;
    order.push_back(start);
    while (!queue.empty()) {
        std::size_t v = queue.front();
        queue.pop_front();
        for (int i = 1; i <= rank; ++i)
            for (auto w : {out[v][i], in[v][i]})
                if (w >= 0 && id[w] < 0) {
                    id[w] = static_cast<std::ptrdiff_t>(order.size());
                    order.push_back(static_cast<std::size_t>(w));
                    queue.push_back(static_cast<std::size_t>(w));
                }
    }

    std::ostringstream os;
    os << "n=" << n << ";r=" << order.size();
    for (std::size_t v : order) {
        os << ';';
        for (int i = 1; i <= rank; ++i)
            if (out[v][i] >= 0) os << i << '>' << id[out[v][i]] << ',';
    }
    return os.str();
}

inline bool is_isomorphic(const crystal_graph& a, const crystal_graph& b) {
    return a.spec == b.spec && canonical_form(a) == canonical_form(b);
}

inline std::string to_dot(const crystal_graph& g) {
    auto quote = [](const std::string& s) {
        std::string q = "\"";
        for (char c : s) {
            if (c == '"' || c == '\\') q += '\\';
            q += c;
        }
        return q + '"';
    };
    std::ostringstream os;
    os << "digraph crystal {\n";
    for (std::size_t v = 0; v < g.nodes.size(); ++v) {
        os << "  n" << v << " [label=" << quote(g.nodes[v].key) << ", wt=" << quote(to_string(g.nodes[v].wt));
        if (v == g.root) os << ", root=true";
        os << "];\n";
    }
    for (const auto& e : g.edges) os << "  n" << e.src << " -> n" << e.dst << " [label=" << e.label << "];\n";
    os << "}\n";
    return os.str();
}

inline nlohmann::ordered_json to_json(const crystal_graph& g) {
    nlohmann::ordered_json j;
    j["nodes"] = nlohmann::ordered_json::array();
    for (const auto& v : g.nodes) j["nodes"].push_back({{"key", v.key}, {"wt", v.wt.lambda()}});
    j["edges"] = nlohmann::ordered_json::array();
    for (const auto& e : g.edges)
        j["edges"].push_back(nlohmann::ordered_json::array({g.nodes[e.src].key, e.label, g.nodes[e.dst].key}));
    j["root"] = g.nodes.empty() ? std::string() : g.nodes[g.root].key;
    return j;
}

}  // namespace nakajima
