#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include <nakajima/nakajima.hpp>

namespace {

using namespace nakajima;
using json = nlohmann::ordered_json;

enum exit_code : int { ok = 0, usage = 1, unverified = 2, internal = 3 };

struct globals {
    std::string family = "A";
    std::optional<int> rank;
    std::string format = "text";
    std::optional<std::size_t> cap;
};

std::size_t node_cap(const globals& g) {
    if (g.cap) return *g.cap;
    if (const char* env = std::getenv("CRYSTAL_NODE_CAP")) {
        try {
            std::size_t used = 0;
            long long v = std::stoll(env, &used);
            if (used == std::string(env).size() && v > 0) return static_cast<std::size_t>(v);
        } catch (const std::exception&) {
        }
        throw usage_error("CRYSTAL_NODE_CAP must be a positive integer");
    }
    return default_node_cap;
}

// Rank defaults to the largest index present; an explicit smaller rank is rejected.
rank_spec resolve(const globals& g, std::initializer_list<const monomial*> inputs) {
    int needed = 1;
    for (const monomial* m : inputs) needed = std::max(needed, m->max_index());
    int rank = g.rank.value_or(needed);
    if (rank < 1) throw usage_error("--rank must be at least 1");
    if (rank < needed)
        throw usage_error("monomial uses index " + std::to_string(needed) + " but --rank is " + std::to_string(rank));
    return {g.family == "A" ? family::A : family::C, rank};
}

void no_dot(const globals& g) {
    if (g.format == "dot") throw usage_error("--format dot only applies to graph");
}

void print(const json& j) { std::cout << j.dump(2) << '\n'; }

std::string identity_text(const n_membership& id) {
    return "lambda: " + to_string(id.lambda) + "\ns: " + std::to_string(id.s) + "\n";
}

json identity_json(const n_membership& id) {
    return {{"lambda", id.lambda.lambda()}, {"lambda_text", to_string(id.lambda)}, {"s", id.s}};
}

int cmd_normalize(const globals& g, const std::string& in) {
    no_dot(g);
    monomial m = parse_monomial(in);
    resolve(g, {&m});
    if (g.format == "json")
        print({{"monomial", to_string(m)}});
    else
        std::cout << to_string(m) << '\n';
    return ok;
}

int cmd_compress(const globals& g, const std::string& in) {
    no_dot(g);
    monomial m = parse_monomial(in);
    rank_spec s = resolve(g, {&m});
    auto k = kappa_full(s, m);
    if (g.format == "json") {
        json j{{"family", std::string(1, family_char(s.fam))}, {"rank", s.rank}, {"N", to_string(k.image)}};
        j.update(identity_json(k.identity));
        j["matrix"] = to_json(k.matrix);
        print(j);
    } else {
        std::cout << "N: " << to_string(k.image) << '\n' << identity_text(k.identity) << "matrix:\n";
        if (!k.matrix.empty()) std::cout << to_text(k.matrix);
    }
    return ok;
}

int cmd_act(const globals& g, const std::string& op, int i, const std::string& in) {
    no_dot(g);
    monomial m = parse_monomial(in);
    rank_spec s = resolve(g, {&m});
    s.check_index(i);
    auto r = op == "f" ? mono_f(s, m, i) : mono_e(s, m, i);
    if (g.format == "json")
        print({{"result", r ? json(to_string(*r)) : json(nullptr)}});
    else
        std::cout << (r ? to_string(*r) : std::string("undefined")) << '\n';
    return ok;
}

int cmd_tableau(const globals& g, const std::string& in) {
    no_dot(g);
    monomial m = parse_monomial(in);
    auto t = omega(kappa_full(resolve(g, {&m}), m).matrix);
    if (g.format == "json")
        print(to_json(t));
    else
        std::cout << to_text(t) << (t.unnormalized ? "unnormalized\n" : "");
    return ok;
}

int cmd_path(const globals& g, const std::string& in) {
    no_dot(g);
    monomial m = parse_monomial(in);
    auto p = tableau_to_path(omega(kappa_full(resolve(g, {&m}), m).matrix));
    if (g.format == "json")
        print(to_json(p));
    else
        std::cout << to_text(p) << "endpoint: " << to_string(p.endpoint_weight()) << '\n';
    return ok;
}

int cmd_graph(const globals& g, const std::string& in) {
    monomial m = parse_monomial(in);
    rank_spec s = resolve(g, {&m});
    auto c = explore_component(monomial_crystal{s}, m, node_cap(g));
    const auto& gr = c.graph;
    if (g.format == "dot") {
        std::cout << to_dot(gr);
    } else if (g.format == "json") {
        print(to_json(gr));
    } else {
        std::cout << "nodes: " << gr.size() << "\nedges: " << gr.edges.size() << '\n';
        for (const auto& e : gr.edges)
            std::cout << gr.nodes[e.src].key << " -" << e.label << "-> " << gr.nodes[e.dst].key << '\n';
    }
    return ok;
}

int cmd_verify(const globals& g, const std::string& in) {
    no_dot(g);
    monomial m = parse_monomial(in);
    rank_spec s = resolve(g, {&m});
    const std::size_t cap = node_cap(g);
    auto k = kappa_full(s, m);
    monomial_crystal mc{s};
    auto a = explore_component(mc, m, cap);
    auto b = explore_component(mc, k.image, cap);
    const bool iso = is_isomorphic(a.graph, b.graph);
    if (g.format == "json") {
        json j{{"source_size", a.graph.size()}, {"image_size", b.graph.size()}, {"isomorphic", iso},
               {"N", to_string(k.image)}};
        j.update(identity_json(k.identity));
        print(j);
    } else {
        std::cout << "source component: " << a.graph.size() << " nodes\n"
                  << "image component: " << b.graph.size() << " nodes\n"
                  << "isomorphic: " << (iso ? "true" : "false") << "\nN: " << to_string(k.image) << '\n'
                  << identity_text(k.identity);
    }
    return iso ? ok : unverified;
}

int cmd_insert(const globals& g, const std::string& in1, const std::string& in2, bool verify) {
    no_dot(g);
    monomial m1 = parse_monomial(in1), m2 = parse_monomial(in2);
    rank_spec s = resolve(g, {&m1, &m2});
    monomial r = insert(s, m1, m2);
    auto id = *is_n_member(psi(s, r));
    std::optional<bool> iso;
    std::size_t tensor_size = 0, result_size = 0;
    if (verify) {
        const std::size_t cap = node_cap(g);
        monomial_crystal mc{s};
        tensor_crystal<monomial_crystal, monomial_crystal> tc(mc, mc);
        auto a = explore_component(tc, std::pair{m1, m2}, cap);
        auto b = explore_component(mc, r, cap);
        tensor_size = a.graph.size();
        result_size = b.graph.size();
        iso = is_isomorphic(a.graph, b.graph);
    }
    if (g.format == "json") {
        json j{{"result", to_string(r)}};
        j.update(identity_json(id));
        if (iso) {
            j["tensor_size"] = tensor_size;
            j["result_size"] = result_size;
            j["isomorphic"] = *iso;
        }
        print(j);
    } else {
        std::cout << "result: " << to_string(r) << '\n' << identity_text(id);
        if (iso)
            std::cout << "tensor component: " << tensor_size << " nodes\nresult component: " << result_size
                      << " nodes\nisomorphic: " << (*iso ? "true" : "false") << '\n';
    }
    return iso.value_or(true) ? ok : unverified;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Compress Nakajima monomials into highest-weight crystal components (types A and C)"};
    app.require_subcommand(1);
    globals g;
    app.add_option("--family", g.family, "Lie type")->check(CLI::IsMember({"A", "C"}));
    app.add_option("--rank", g.rank, "rank n (defaults to the largest index used)");
    app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"text", "json", "dot"}));
    app.add_option("--cap", g.cap, "node cap for graph exploration (env CRYSTAL_NODE_CAP)");

    std::string in1, in2, op = "f";
    int index = 1;
    bool verify = false;
    int rc = ok;

    auto one = [&](const char* name, const char* help, auto fn) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("monomial", in1, "e.g. Y1(4)^-1*Y2(0)^2")->required();
        sub->callback([&, fn] { rc = fn(g, in1); });
        return sub;
    };
    one("normalize", "print a monomial in canonical order", cmd_normalize);
    one("compress", "run the compression and print N, its matrix and (lambda, s)", cmd_compress);
    one("tableau", "reversed tableau of the compressed matrix", cmd_tableau);
    one("path", "path polyline read off the tableau", cmd_path);
    one("graph", "crystal graph of the component of a monomial", cmd_graph);
    one("verify", "compare the components of M and of its compression", cmd_verify);

    auto* act = app.add_subcommand("act", "apply one Kashiwara operator to a monomial");
    act->add_option("--op", op, "f or e")->check(CLI::IsMember({"f", "e"}));
    act->add_option("--index", index, "operator index")->required();
    act->add_option("monomial", in1)->required();
    act->callback([&] { rc = cmd_act(g, op, index, in1); });

    auto* ins = app.add_subcommand("insert", "insertion of M2 into M1");
    ins->add_option("m1", in1)->required();
    ins->add_option("m2", in2)->required();
    ins->add_flag("--verify", verify, "compare with the tensor product component");
    ins->callback([&] { rc = cmd_insert(g, in1, in2, verify); });

    try {
        app.parse(argc, argv);
        return rc;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? ok : usage;
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return usage;
    } catch (const usage_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return usage;
    } catch (const cap_exceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return usage;
    } catch (const invariant_violation& e) {
        std::cerr << "invariant violated: " << e.what() << '\n';
        return internal;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return internal;
    }
}
