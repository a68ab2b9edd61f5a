/*
 * Copyright 2026 The muller authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace muller;

namespace {

/// Parity automaton for F with every state duplicated: each copy moves to the other copy's successor.
Automaton inflate(const Automaton& a) {
    std::vector<Transition> d;
    for (std::size_t c = 0; c < 2; ++c)
        for (std::size_t q = 0; q < a.states; ++q)
            for (std::size_t x = 0; x < a.input.size(); ++x) {
                auto t = a.step(q, x);
                d.push_back({(1 - c) * a.states + t.next, t.out});
            }
    return Automaton(2 * a.states, a.input, a.output, a.initial, d, a.acceptance);
}

/// Same language, with a transient prefix state in front of the initial state.
Automaton with_transient(const Automaton& a) {
    std::vector<Transition> d;
    for (std::size_t x = 0; x < a.input.size(); ++x) d.push_back({1 + a.step(a.initial, x).next, a.step(a.initial, x).out});
    for (auto t : a.delta) d.push_back({t.next + 1, t.out});
    return Automaton(a.states + 1, a.input, a.output, 0, d, a.acceptance);
}

} // namespace

TEST(CompleteScc, AGAlternationComponent) {
    const auto ag = build_A_G(SimpleGraph::complete(3));
    const auto s = complete_scc(ColourSet{0, 1}, ASubgraph::full(ag));
    EXPECT_EQ(s.vertex_list(), (std::vector<std::size_t>{0, 1}));
    EXPECT_EQ(s.letters(), (ColourSet{0, 1}));
    std::size_t edges = 0;
    for (auto e : s.edges) edges += e;
    EXPECT_EQ(edges, 4U);
}

TEST(CompleteScc, WholeAndSingleLoop) {
    const auto a = zt_to_parity(min2_condition(3));
    const auto full = ASubgraph::full(a);
    const auto s = complete_scc(full.letters(), full);
    EXPECT_EQ(s.edges, full.edges);

    Alphabet in({"a"});
    Automaton loop(1, in, Alphabet({"0"}), 0, {{0, 0}}, Acceptance::parity({0}));
    const auto l = complete_scc(ColourSet{0}, ASubgraph::full(loop));
    EXPECT_EQ(l.edges, std::vector<char>{1});
}

TEST(CompleteScc, MissingComponentIsAPreconditionError) {
    // Both letters swap the two states; with the b-edge at state 1 removed, no b-cycle is left.
    Alphabet in({"a", "b"});
    Automaton a(2, in, Alphabet({"0"}), 0, {{1, 0}, {1, 0}, {0, 0}, {0, 0}}, Acceptance::parity({0}));
    auto s = ASubgraph::full(a);
    s.edges[a.edge(1, 1)] = 0;
    try {
        complete_scc(ColourSet{1}, s);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::Precondition);
    }
}

TEST(AlternatingSets, Examples) {
    const auto a = zt_to_parity(min2_condition(3));
    EXPECT_EQ(alternating_sets(ASubgraph::full(a)), (std::vector<ColourSet>{ColourSet{0}, ColourSet{1}, ColourSet{2}}));
    const auto b = zt_to_parity(clique_condition(3));
    EXPECT_EQ(alternating_sets(ASubgraph::full(b)),
              (std::vector<ColourSet>{ColourSet{0, 1}, ColourSet{0, 2}, ColourSet{1, 2}}));
    Alphabet in({"a", "b"});
    Automaton flat(1, in, Alphabet({"2"}), 0, {{0, 0}, {0, 0}}, Acceptance::parity({2}));
    EXPECT_TRUE(alternating_sets(ASubgraph::full(flat)).empty());
}

TEST(AlternatingSets, RejectingRelativeToParentAndMaximal) {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 100; ++i) {
        const auto f = oracle::random_condition(rng, 1 + rng() % 4);
        const auto a = zt_to_parity(f);
        const auto sets = alternating_sets(ASubgraph::full(a));
        const bool root = f.accepts(f.alphabet().all());
        for (auto c : sets) {
            EXPECT_NE(f.accepts(c), root);
            for (auto d : sets) EXPECT_TRUE(c == d || !c.subset_of(d));
        }
    }
}

TEST(ZielonkaFromParity, Examples) {
    EXPECT_EQ(zielonka_tree_from_parity(zt_to_parity(clique_condition(3))), zielonka_tree(clique_condition(3)));
    Alphabet in({"a", "b"});
    Automaton flat(1, in, Alphabet({"0"}), 0, {{0, 0}, {0, 0}}, Acceptance::parity({0}));
    const auto t = zielonka_tree_from_parity(flat);
    EXPECT_TRUE(t.is_leaf());
    EXPECT_TRUE(t.accepting);
    EXPECT_EQ(t.label, ColourSet::full(2));
}

TEST(ZielonkaFromParity, RoundTripRandomConditions) {
    std::mt19937_64 rng(37);
    for (int i = 0; i < 150; ++i) {
        const auto f = oracle::random_condition(rng, 2 + rng() % 3);
        EXPECT_EQ(zielonka_tree_from_parity(zt_to_parity(f)), zielonka_tree(f));
        EXPECT_EQ(zielonka_tree_from_parity(with_transient(zt_to_parity(f))), zielonka_tree(f));
    }
}

TEST(MinimizeParity, Examples) {
    const auto f3 = clique_condition(3);
    EXPECT_EQ(minimize_parity(inflate(zt_to_parity(f3))).states, 6U);
    const auto direct = zt_to_parity(f3);
    EXPECT_EQ(minimize_parity(direct).states, direct.states);
    const auto m = minimize_parity(inflate(zt_to_parity(min2_condition(3))));
    EXPECT_EQ(m.states, 3U);
    EXPECT_TRUE(oracle::recognises_condition(m, min2_condition(3), oracle::up_words(3, 1, 4)));
}

TEST(MinimizeParity, EquivalentOnWords) {
    std::mt19937_64 rng(41);
    for (int i = 0; i < 40; ++i) {
        const auto f = oracle::random_condition(rng, 2 + rng() % 2);
        const auto big = with_transient(inflate(zt_to_parity(f)));
        const auto m = minimize_parity(big);
        EXPECT_EQ(m.states, zielonka_tree(f).leaves());
        EXPECT_TRUE(oracle::agree_on_words(big, m, oracle::up_words(f.alphabet().size(), 2, 4)));
    }
}

TEST(MinimizeGenBuchi, MinTwoColours) {
    const auto f = min2_condition(3);
    // Generalised Büchi automaton for F'_3: identity output, B = {b,c}, {a,c}, {a,b}.
    const auto big = inflate(Automaton(1, f.alphabet(), f.alphabet(), 0, {{0, 0}, {0, 1}, {0, 2}},
                                       Acceptance::gen_buchi(3, {ColourSet{1, 2}, ColourSet{0, 2}, ColourSet{0, 1}})));
    const auto m = minimize_genbuchi(big);
    EXPECT_EQ(m.states, 1U);
    const auto& sets = m.acceptance.as<GenBuchiAcc>().sets;
    EXPECT_EQ(std::set<ColourSet>(sets.begin(), sets.end()),
              (std::set<ColourSet>{ColourSet{1, 2}, ColourSet{0, 2}, ColourSet{0, 1}}));
}

TEST(MinimizeGenBuchi, AcceptEverything) {
    Alphabet in({"a", "b"});
    Automaton a(2, in, in, 0, {{1, 0}, {0, 1}, {0, 0}, {1, 1}}, Acceptance::gen_buchi(2, {}));
    const auto m = minimize_genbuchi(a);
    EXPECT_EQ(m.states, 1U);
    EXPECT_TRUE(m.acceptance.as<GenBuchiAcc>().sets.empty());
}
