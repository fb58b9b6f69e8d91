#include <gtest/gtest.h>

#include <nakajima/nakajima.hpp>

#include "support.hpp"

using namespace nakajima;

namespace {
const rank_spec A1{family::A, 1};
const rank_spec A2{family::A, 2};

monomial M(const char* s) { return parse_monomial(s); }

crystal_graph graph_of(const rank_spec& s, const char* m, std::size_t cap = default_node_cap) {
    return explore_component(monomial_crystal{s}, M(m), cap).graph;
}
}  // namespace

TEST(Explore, SingleStep) {
    auto g = graph_of(A1, "Y1(1)");
    EXPECT_EQ(g.size(), 2u);
    ASSERT_EQ(g.edges.size(), 1u);
    EXPECT_EQ(g.edges[0].label, 1);
}

TEST(Explore, EmptyMonomialIsASingleNode) {
    auto g = graph_of(A2, "1");
    EXPECT_EQ(g.size(), 1u);
    EXPECT_TRUE(g.edges.empty());
}

TEST(Explore, ChainsInA1) {
    for (int a = 0; a <= 5; ++a) {
        monomial m;
        if (a) m.add(1, 1, a);
        auto g = explore_component(monomial_crystal{A1}, m);
        EXPECT_EQ(g.graph.size(), static_cast<std::size_t>(a + 1));
        EXPECT_EQ(g.graph.edges.size(), static_cast<std::size_t>(a));
    }
}

TEST(Explore, CapIsEnforced) { EXPECT_THROW(graph_of(A2, "Y1(1)^3*Y2(1)^3", 10), cap_exceeded); }

TEST(Explore, StartNeedNotBeHighestWeight) {
    auto g = graph_of(A2, "Y1(2)^-1*Y2(1)");
    EXPECT_EQ(g.size(), 3u);
}

TEST(Canonical, Isomorphism) {
    auto a = graph_of(A1, "Y1(1)");
    EXPECT_TRUE(is_isomorphic(a, a));
    EXPECT_TRUE(is_isomorphic(a, graph_of(A1, "Y1(5)")));
    EXPECT_FALSE(is_isomorphic(a, graph_of(A1, "Y1(1)^2")));
    EXPECT_TRUE(is_isomorphic(graph_of(A2, "Y1(1)"), graph_of(A2, "Y2(3)^-1")));
    EXPECT_FALSE(is_isomorphic(graph_of(A2, "Y1(1)"), graph_of(A2, "Y2(1)")));
}

TEST(Canonical, IgnoresKeysAndDiscoveryOrder) {
    auto a = graph_of(A2, "Y1(1)*Y2(1)");
    auto start = *mono_f(A2, *mono_f(A2, M("Y1(3)*Y2(3)"), 2), 1);
    auto b = explore_component(monomial_crystal{A2}, start).graph;
    EXPECT_EQ(a.size(), 8u);
    EXPECT_EQ(b.size(), 8u);
    EXPECT_TRUE(is_isomorphic(a, b));
}

TEST(Canonical, TwoSourcesAreRejected) {
    crystal_graph g{A1, {{"a", weight(A1)}, {"b", weight(A1)}}, {}, 0};
    EXPECT_THROW(canonical_form(g), multiple_sources);
}

TEST(Weyl, Dimensions) {
    for (int n = 1; n <= 5; ++n) {
        EXPECT_EQ(dim_b_lambda({family::A, n}, weight::fundamental({family::A, n}, 1)), n + 1);
        EXPECT_EQ(dim_b_lambda({family::C, n}, weight::fundamental({family::C, n}, 1)), 2 * n);
    }
    EXPECT_EQ(dim_b_lambda(A2, weight(A2, {1, 1})), 8);
    EXPECT_EQ(dim_b_lambda({family::C, 3}, weight({family::C, 3}, {0, 0, 1})), 14);
    EXPECT_EQ(dim_b_lambda({family::C, 2}, weight({family::C, 2}, {0, 1})), 5);
    EXPECT_EQ(dim_b_lambda(A2, weight(A2)), 1);
}

TEST(Weyl, RejectsNonDominant) { EXPECT_THROW(dim_b_lambda(A2, weight(A2, {1, -1})), precondition_error); }

TEST(Weyl, MatchesExploration) {
    for (const auto& s : nakajima::testing::property_specs())
        for (int a = 0; a <= 2; ++a)
            for (int b = 0; b <= 2; ++b) {
                std::vector<integer> l(static_cast<std::size_t>(s.rank), 0);
                l[0] = a;
                l[static_cast<std::size_t>(s.rank) - 1] += b;
                weight w(s, l);
                auto c = explore_component(monomial_crystal{s}, highest_weight_monomial(w));
                EXPECT_EQ(static_cast<integer>(c.graph.size()), dim_b_lambda(s, w)) << to_string(s) << " " << w;
            }
}

TEST(Tensor, LeftFactorWhenPhiExceedsEps) {
    // b1 = Y1(1)^2: phi 2, eps 0; b2 = Y1(2)^-1: phi 0, eps 1.
    monomial_crystal mc{A1};
    tensor_crystal<monomial_crystal, monomial_crystal> tc(mc, mc);
    std::pair t{M("Y1(1)^2"), M("Y1(2)^-1")};
    EXPECT_EQ(mc.phi(t.first, 1), 2);
    EXPECT_EQ(mc.eps(t.second, 1), 1);
    auto f = tc.f(t, 1);
    ASSERT_TRUE(f);
    EXPECT_EQ(f->first, *mc.f(t.first, 1));
    EXPECT_EQ(f->second, t.second);
    EXPECT_EQ(tc.phi(t, 1), 2 - 1 + 0);
    EXPECT_EQ(tc.wt(t), mc.wt(t.first) + mc.wt(t.second));
}

TEST(Tensor, EmptyFactors) {
    monomial_crystal mc{A2};
    tensor_crystal<monomial_crystal, monomial_crystal> tc(mc, mc);
    std::pair t{monomial{}, monomial{}};
    for (int i = 1; i <= 2; ++i) {
        EXPECT_EQ(tc.phi(t, i), 0);
        EXPECT_FALSE(tc.f(t, i));
    }
}

TEST(Tensor, ComponentOfVectorSquared) {
    // V (x) V in A2 splits as 6 + 3; the component of the highest element is the 6.
    monomial_crystal mc{A2};
    tensor_crystal<monomial_crystal, monomial_crystal> tc(mc, mc);
    auto c = explore_component(tc, std::pair{M("Y1(1)"), M("Y1(1)")});
    EXPECT_EQ(c.graph.size(), 6u);
    EXPECT_EQ(check_axioms(tc, c.elements).failures(), 0u);
}

TEST(Axioms, HoldOnMonomialComponents) {
    nakajima::testing::monomial_source src(3);
    for (const auto& s : nakajima::testing::property_specs())
        for (int k = 0; k < 10; ++k) {
            monomial m = src.next(s);
            try {
                auto c = explore_component(monomial_crystal{s}, m, 3000);
                EXPECT_EQ(check_axioms(monomial_crystal{s}, c.elements).failures(), 0u) << to_string(m);
            } catch (const cap_exceeded&) {
            }
        }
}

TEST(Export, DotAndJson) {
    auto g = graph_of(A1, "Y1(1)");
    std::string dot = to_dot(g);
    EXPECT_NE(dot.find("digraph"), std::string::npos);
    EXPECT_NE(dot.find("n0 -> n1 [label=1]"), std::string::npos);
    auto j = to_json(g);
    EXPECT_EQ(j["nodes"].size(), 2u);
    EXPECT_EQ(j["edges"][0][1], 1);
    EXPECT_EQ(j["root"], "Y1(1)");
    EXPECT_EQ(j["edges"][0][2], "Y1(2)^-1");
}
