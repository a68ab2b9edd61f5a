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

/// Same transition structure, outputs = inputs, Muller condition F.
Automaton muller_on(const Automaton& a, const MullerCondition& f) {
    std::vector<Transition> d;
    for (std::size_t e = 0; e < a.edges(); ++e) d.push_back({a.delta[e].next, a.letter(e)});
    return Automaton(a.states, a.input, f.alphabet(), a.initial, d, Acceptance::muller(f));
}

/// The automaton with the same outputs and its acceptance rewritten as an explicit Muller family.
Automaton as_muller(const Automaton& a) {
    MullerCondition f(a.output, {});
    for (auto c : accepting_family(a.acceptance)) f.add(c);
    auto m = a;
    m.acceptance = Acceptance::muller(f);
    return m;
}

Automaton two_loops(const MullerCondition& f) {
    return Automaton(1, f.alphabet(), f.alphabet(), 0, {{0, 0}, {0, 1}}, Acceptance::muller(f));
}

} // namespace

TEST(CheckRabinTypeable, ColouringAutomatonIsTypeable) {
    const auto g = SimpleGraph::complete(3);
    const auto ac = muller_on(colouring_to_rabin(g, chromatic_number(g).colouring), condition_F_G(g));
    EXPECT_TRUE(check_rabin_typeable(ac).typeable);
    const auto p = SimpleGraph::path(4);
    EXPECT_TRUE(check_rabin_typeable(muller_on(colouring_to_rabin(p, chromatic_number(p).colouring), condition_F_G(p))).typeable);
}

TEST(CheckRabinTypeable, TwoRejectingLoops) {
    const MullerCondition f(oracle::letters(2), {ColourSet{0, 1}});
    const auto r = check_rabin_typeable(two_loops(f));
    EXPECT_FALSE(r.typeable);
    ASSERT_TRUE(r.witness);
    EXPECT_EQ(r.witness->state, 0U);
    EXPECT_EQ(std::set<ColourSet>({r.witness->first, r.witness->second}), (std::set<ColourSet>{ColourSet{0}, ColourSet{1}}));
    EXPECT_TRUE(witness_holds(two_loops(f), *r.witness));
}

TEST(CheckRabinTypeable, ParityViewedAsMullerIsTypeable) {
    std::mt19937_64 rng(43);
    for (int i = 0; i < 100; ++i) {
        const auto a = oracle::random_automaton(rng, 1 + rng() % 4, 1 + rng() % 3, 1 + rng() % 4, "parity");
        EXPECT_TRUE(check_rabin_typeable(as_muller(a)).typeable);
    }
}

TEST(CheckRabinTypeable, WitnessesSurviveWalkCheck) {
    std::mt19937_64 rng(47);
    int seen = 0;
    for (int i = 0; i < 300; ++i) {
        const auto a = oracle::random_automaton(rng, 1 + rng() % 4, 1 + rng() % 3, 1 + rng() % 3, "muller");
        const auto r = check_rabin_typeable(a);
        EXPECT_EQ(r.typeable, !r.witness.has_value());
        if (!r.witness) continue;
        ++seen;
        const auto walks = oracle::closed_walk_sets(a, r.witness->state);
        const auto& fam = a.acceptance.as<MullerAcc>().accepting;
        EXPECT_TRUE(walks.contains(r.witness->first));
        EXPECT_TRUE(walks.contains(r.witness->second));
        EXPECT_FALSE(fam.contains(r.witness->first));
        EXPECT_FALSE(fam.contains(r.witness->second));
        EXPECT_TRUE(fam.contains(r.witness->first | r.witness->second));
    }
    EXPECT_GT(seen, 10);
}

TEST(SynthesizeRabinPairs, SingleLoop) {
    const MullerCondition f(oracle::letters(1), {ColourSet{0}});
    const Automaton a(1, f.alphabet(), f.alphabet(), 0, {{0, 0}}, Acceptance::muller(f));
    const auto r = synthesize_rabin_pairs(a);
    const auto& pairs = r.acceptance.as<RabinAcc>().pairs;
    ASSERT_EQ(pairs.size(), 1U);
    EXPECT_EQ(pairs[0].e, ColourSet{0});
    EXPECT_TRUE(pairs[0].f.empty());
    EXPECT_EQ(r.delta, a.delta);
}

TEST(SynthesizeRabinPairs, ColouringAutomatonMatchesAG) {
    const auto g = SimpleGraph::complete(3);
    const auto ac = muller_on(colouring_to_rabin(g, chromatic_number(g).colouring), condition_F_G(g));
    const auto r = synthesize_rabin_pairs(ac);
    EXPECT_EQ(r.states, 3U);
    EXPECT_TRUE(rabin_equivalent(r, build_A_G(g)));
    EXPECT_TRUE(muller_equivalent(r, ac));
}

TEST(SynthesizeRabinPairs, RefusesWithWitness) {
    const MullerCondition f(oracle::letters(2), {ColourSet{0, 1}});
    try {
        synthesize_rabin_pairs(two_loops(f));
        FAIL();
    } catch (const NotRabinTypeable& e) {
        EXPECT_TRUE(witness_holds(two_loops(f), e.witness()));
        EXPECT_EQ(e.kind(), ErrorKind::Precondition);
    }
}

TEST(SynthesizeRabinPairs, EquivalentAndTypeableOnRandomInputs) {
    std::mt19937_64 rng(53);
    int done = 0;
    for (int i = 0; done < 100 && i < 5000; ++i) {
        const auto a = oracle::random_automaton(rng, 1 + rng() % 4, 1 + rng() % 3, 1 + rng() % 3, "muller");
        if (!check_rabin_typeable(a).typeable) continue;
        ++done;
        const auto r = synthesize_rabin_pairs(a);
        EXPECT_TRUE(muller_equivalent(a, r));
        EXPECT_TRUE(check_rabin_typeable(as_muller(r)).typeable);
    }
    EXPECT_EQ(done, 100);
}

TEST(RabinEquivalent, Examples) {
    const auto k3 = build_A_G(SimpleGraph::complete(3));
    EXPECT_TRUE(rabin_equivalent(k3, k3));
    const auto ac = colouring_to_rabin(SimpleGraph::complete(3), Colouring{{1, 2, 3}});
    EXPECT_TRUE(rabin_equivalent(k3, ac));
    const auto p3 = build_A_G(SimpleGraph::path(3));
    EXPECT_FALSE(rabin_equivalent(k3, p3));
    // The separating word alternates the two endpoints of the path.
    EXPECT_NE(accepts_up_word(k3, {{}, {0, 2}}), accepts_up_word(p3, {{}, {0, 2}}));
}

TEST(RabinEquivalent, InputAlphabetMismatch) {
    EXPECT_THROW(rabin_equivalent(build_A_G(SimpleGraph::complete(3)), build_A_G(SimpleGraph::complete(2))), Error);
}

TEST(MullerEquivalent, Examples) {
    std::mt19937_64 rng(59);
    for (int i = 0; i < 50; ++i) {
        const auto a = oracle::random_automaton(rng, 1 + rng() % 4, 2, 1 + rng() % 3, "rabin");
        EXPECT_TRUE(muller_equivalent(a, a));
        auto d = a;
        d.acceptance = dualise(a.acceptance);
        EXPECT_FALSE(muller_equivalent(a, d));
    }
}

TEST(MullerEquivalent, AgreesWithRabinEquivalentAndWords) {
    std::mt19937_64 rng(61);
    int equal = 0;
    for (int i = 0; i < 300; ++i) {
        const std::size_t in = 1 + rng() % 2;
        const auto a = oracle::random_automaton(rng, 1 + rng() % 3, in, 1 + rng() % 2, "rabin");
        const auto b = oracle::random_automaton(rng, 1 + rng() % 3, in, 1 + rng() % 2, "rabin");
        const bool m = muller_equivalent(a, b);
        EXPECT_EQ(m, rabin_equivalent(a, b));
        if (m) {
            ++equal;
            EXPECT_TRUE(oracle::agree_on_words(a, b, oracle::up_words(in, 2, 4)));
        }
    }
    EXPECT_GT(equal, 5);
}

TEST(MullerEquivalent, ScaleGuard) {
    const auto a = build_A_G(SimpleGraph::complete(5));
    try {
        muller_equivalent(a, a, 3);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::ScaleGuard);
    }
}

TEST(MinRabinSize, Examples) {
    EXPECT_EQ(min_rabin_size(condition_F_G(SimpleGraph::complete(3)), 4).size, 3U);
    EXPECT_EQ(min_rabin_size(MullerCondition(oracle::letters(1), {ColourSet{0}}), 3).size, 1U);
    EXPECT_EQ(min_rabin_size(min2_condition(3), 4).size, 3U);
    EXPECT_FALSE(min_rabin_size(condition_F_G(SimpleGraph::complete(3)), 2).size.has_value());
}

TEST(MinRabinSize, WitnessIsTypeableAndRecognisesF) {
    const auto f = condition_F_G(SimpleGraph::cycle(4));
    const auto r = min_rabin_size(f, 4);
    ASSERT_EQ(r.size, 2U);
    ASSERT_TRUE(r.witness);
    EXPECT_EQ(r.witness->states, 2U);
    EXPECT_TRUE(check_rabin_typeable(*r.witness).typeable);
    EXPECT_TRUE(oracle::recognises_condition(*r.witness, f, oracle::up_words(4, 1, 3)));
}

TEST(MinRabinSize, ThreadCountDoesNotChangeResult) {
    const auto f = condition_F_G(SimpleGraph::path(4));
    const auto one = min_rabin_size(f, 3, 1);
    const auto four = min_rabin_size(f, 3, 4);
    ASSERT_TRUE(one.witness && four.witness);
    EXPECT_EQ(one.size, four.size);
    EXPECT_EQ(one.witness->delta, four.witness->delta);
}

TEST(MinRabinSize, BetweenMemGenAndLeafCount) {
    std::mt19937_64 rng(67);
    for (int i = 0; i < 60; ++i) {
        const auto f = oracle::random_condition(rng, 1 + rng() % 3);
        const auto t = zielonka_tree(f);
        const auto r = min_rabin_size(f, t.leaves());
        ASSERT_TRUE(r.size);
        EXPECT_GE(*r.size, mem_gen(t));
        EXPECT_LE(*r.size, t.leaves());
    }
}

TEST(MemChrom, Values) {
    EXPECT_EQ(mem_chrom(clique_condition(3), 4), 3U);
    EXPECT_EQ(mem_chrom(clique_condition(Alphabet({"a", "b", "c"})), 4), 3U);
    MullerCondition buchi(oracle::letters(2), {ColourSet{0}, ColourSet{0, 1}});
    EXPECT_EQ(mem_chrom(buchi, 3), 1U);
}
