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

// Acceptance suite: one PASS/FAIL line per criterion, each with its own time limit.
// Usage: acceptance [fixtures-dir]

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>

#include "oracles.hpp"

#include <muller/io.hpp>

#ifndef MULLER_FIXTURES
#define MULLER_FIXTURES "fixtures"
#endif

namespace {

using namespace muller;
using oracle::letters;

std::string fixtures = MULLER_FIXTURES;

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw malformed("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// Product of `a` with a random k-state letter counter; same outputs, same language.
Automaton inflate(const Automaton& a, std::size_t k, std::mt19937_64& rng) {
    const std::size_t n = a.input.size();
    std::vector<std::size_t> sigma(k * n);
    for (auto& s : sigma) s = rng() % k;
    std::vector<Transition> delta;
    for (std::size_t q = 0; q < a.states; ++q)
        for (std::size_t r = 0; r < k; ++r)
            for (std::size_t x = 0; x < n; ++x) {
                const auto& t = a.step(q, x);
                delta.push_back({t.next * k + sigma[r * n + x], t.out});
            }
    return normalise(Automaton(a.states * k, a.input, a.output, a.initial * k, std::move(delta), a.acceptance));
}

struct Outcome {
    bool ok = true;
    std::string detail;
};

int failures = 0;

void criterion(int id, const char* name, double limit_s, const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome r;
    try {
        r = body();
    } catch (const std::exception& e) {
        r = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool pass = r.ok && secs < limit_s;
    if (!pass) ++failures;
    std::printf("%s %d %s: %s [%.2f s, limit %.0f s]\n", pass ? "PASS" : "FAIL", id, name, r.detail.c_str(), secs,
                limit_s);
    std::fflush(stdout);
}

Outcome reduction_equality() {
    std::size_t graphs = 0, four = 0, connected = 0, edgeless = 0, bad = 0;
    for (std::size_t n = 1; n <= 4; ++n) {
        for (const auto& g : oracle::graphs_up_to_iso(n)) {
            ++graphs;
            four += n == 4;
            connected += oracle::connected(g);
            edgeless += g.edges().empty();
            const auto chi = chromatic_number(g).k;
            const auto r = min_rabin_size(condition_F_G(g), n);
            if (chi != oracle::brute_chromatic(g) || !r.size || *r.size != chi) ++bad;
        }
    }
    return {bad == 0 && graphs == 18 && four == 11 && connected == 10,
            std::to_string(graphs) + " graphs on 1-4 vertices (" + std::to_string(four) + " on four, " +
                std::to_string(connected) + " connected, " +
                std::to_string(edgeless) + " edgeless), min Rabin = chi(G) on " + std::to_string(graphs - bad)};
}

Outcome tree_round_trip() {
    std::mt19937_64 rng(2);
    std::size_t total = 0, bad = 0;
    for (std::size_t n = 2; n <= 4; ++n)
        for (int i = 0; i < 50; ++i) {
            const auto f = oracle::random_condition(rng, n);
            auto expected = zielonka_tree(f);
            auto got = zielonka_tree_from_parity(zt_to_parity(f));
            expected.canonicalise();
            got.canonicalise();
            ++total;
            bad += !(expected == got);
        }
    return {bad == 0 && total >= 100, std::to_string(total - bad) + "/" + std::to_string(total) + " trees recovered"};
}

Outcome parity_minimality() {
    std::mt19937_64 rng(3);
    std::size_t total = 0, bad = 0, inflated_states = 0;
    for (std::size_t n = 2; n <= 4; ++n) {
        const auto words = oracle::up_words(n, 2, 5);
        for (int i = 0; i < 20; ++i) {
            const auto f = oracle::random_condition(rng, n);
            const auto input = inflate(zt_to_parity(f), 2 + rng() % 2, rng);
            const auto m = minimize_parity(input);
            inflated_states += input.states;
            ++total;
            bad += m.states != zielonka_tree(f).leaves() || !oracle::agree_on_words(input, m, words) ||
                   !oracle::recognises_condition(m, f, words);
        }
    }
    return {bad == 0, std::to_string(total - bad) + "/" + std::to_string(total) + " inputs (" +
                          std::to_string(inflated_states) + " states in total) minimised to #leaves, equal on " +
                          "words u v^w with |u| <= 2, |v| <= 5"};
}

Outcome genbuchi_minimality() {
    std::mt19937_64 rng(4);
    std::size_t total = 0, bad = 0;
    while (total < 60) {
        const std::size_t n = 2 + rng() % 3;
        std::vector<ColourSet> maximal_rejecting;
        for (std::size_t i = 1 + rng() % 3; i > 0; --i) maximal_rejecting.push_back(oracle::random_set(rng, n));
        const auto f = MullerCondition::from_predicate(letters(n), [&](ColourSet c) {
            return std::none_of(maximal_rejecting.begin(), maximal_rejecting.end(), [&](ColourSet r) { return c.subset_of(r); });
        });
        if (!is_genbuchi_recognizable(f)) return {false, "a condition built from rejecting sets is not gen-Buchi"};
        // Input: k states, outputs are (state, letter) pairs, B_i = pairs whose letter avoids A_i.
        const std::size_t k = 1 + rng() % 3;
        std::vector<Transition> delta;
        for (std::size_t q = 0; q < k; ++q)
            for (std::size_t x = 0; x < n; ++x) delta.push_back({rng() % k, q * n + x});
        std::vector<ColourSet> sets;
        for (auto r : maximal_rejecting) {
            ColourSet b;
            for (std::size_t q = 0; q < k; ++q)
                for (std::size_t x = 0; x < n; ++x)
                    if (!r.contains(x)) b.insert(q * n + x);
            sets.push_back(b);
        }
        const auto input = normalise(Automaton(k, letters(n), Alphabet::numbered(k * n, 0, "o"), 0, std::move(delta),
                                               Acceptance::gen_buchi(k * n, sets)));
        const auto words = oracle::up_words(n, 2, 4);
        if (!oracle::recognises_condition(input, f, words)) return {false, "generated input does not recognise F"};
        const auto m = minimize_genbuchi(input);
        ++total;
        bad += m.states != 1 || !oracle::agree_on_words(input, m, words);
    }
    return {bad == 0, std::to_string(total - bad) + "/" + std::to_string(total) +
                          " gen-Buchi inputs reduced to one equivalent state"};
}

Outcome separation() {
    const auto f3 = clique_condition(3);
    const auto gen = mem_gen(f3);
    const auto chrom = mem_chrom(f3, 4);
    const auto game = io::arena_from_json(io::parse(slurp(fixtures + "/example22.json")));
    const auto cond = io::condition_from_json(io::parse(slurp(fixtures + "/example22.json")).at("condition"));
    const auto search = min_chromatic_memory_exhaustive(game, cond, 3);
    const auto general = io::strategy_from_json(io::parse(slurp(fixtures + "/example22-general-strategy.json")), game);
    const bool general_wins = general.memory.states == 2 && general.memory.kind == MemoryKind::General &&
                              verify_strategy(game, cond, general.memory, general.table);
    const bool ok = gen == 2 && chrom == 3u && search.size == 3u && general_wins &&
                    verify_strategy(game, cond, *search.memory, *search.table);
    return {ok, "mem_gen(F3) = " + std::to_string(gen) + ", mem_chrom(F3) = " +
                    (chrom ? std::to_string(*chrom) : "none") + ", example game chromatic minimum = " +
                    (search.size ? std::to_string(*search.size) : "none") + ", 2-state general fixture " +
                    (general_wins ? "wins" : "loses")};
}

Outcome epsilon_gap() {
    std::string gens;
    bool ok = true;
    for (std::size_t n = 2; n <= 6; ++n) {
        const auto m = mem_gen(min2_condition(n));
        ok = ok && m == n;
        gens += (n > 2 ? "," : "") + std::to_string(m);
    }
    std::mt19937_64 rng(6);
    const auto abc = letters(3);
    const auto f = min2_condition(abc);
    std::size_t solved = 0, won = 0;
    for (int i = 0; solved < 20 && i < 10000; ++i) {
        const auto g = oracle::random_arena(rng, 3 + rng() % 10, abc);
        if (solve_muller_game(g, f).winner != Player::Eve) continue;
        ++solved;
        const auto s = two_state_memory_min2(g, 3);
        won += s.memory.states == 2 && verify_strategy(g, f, s.memory, s.table);
    }
    return {ok && solved == 20 && won == 20,
            "mem_gen(F'_n) for n=2..6: " + gens + "; two-state memory wins " + std::to_string(won) + "/" +
                std::to_string(solved) + " solvable games"};
}

Outcome oracle_agreement() {
    std::mt19937_64 rng(7);
    std::size_t pairs = 0, equal_pairs = 0, disagree = 0;
    while (pairs < 200) {
        const std::size_t letters_n = 1 + rng() % 3;
        const auto a = oracle::random_automaton(rng, 1 + rng() % 4, letters_n, 1 + rng() % 3, "rabin");
        Automaton b = pairs % 2 ? oracle::random_automaton(rng, 1 + rng() % 4, letters_n, 1 + rng() % 3, "rabin")
                                : inflate(a, 2, rng);
        if (pairs % 4 == 2) {
            auto pr = b.acceptance.as<RabinAcc>().pairs;
            pr.push_back({oracle::random_set(rng, b.output.size()), oracle::random_set(rng, b.output.size())});
            b.acceptance = Acceptance::rabin(b.output.size(), pr);
        }
        const bool r = rabin_equivalent(a, b), m = muller_equivalent(a, b);
        ++pairs;
        equal_pairs += m;
        disagree += r != m;
    }
    std::size_t typeable = 0, synth_bad = 0, witnesses = 0, witness_bad = 0;
    const char* kinds[] = {"muller", "parity", "streett", "genbuchi", "gencobuchi", "rabin"};
    for (int i = 0; (typeable < 100 || witnesses < 30) && i < 20000; ++i) {
        const auto a = oracle::random_automaton(rng, 1 + rng() % 4, 1 + rng() % 3, 1 + rng() % 3, kinds[i % 6]);
        const auto report = check_rabin_typeable(a);
        if (report.typeable) {
            if (typeable == 100) continue;
            ++typeable;
            synth_bad += !muller_equivalent(a, synthesize_rabin_pairs(a));
            continue;
        }
        // Hand check: both sets are colour sets of closed walks through the state, both rejecting,
        // and their union is accepting.
        ++witnesses;
        const auto& w = *report.witness;
        const auto walks = oracle::closed_walk_sets(a, w.state);
        witness_bad += !(walks.contains(w.first) && walks.contains(w.second) &&
                         !accepting_colour_set(a.acceptance, w.first) && !accepting_colour_set(a.acceptance, w.second) &&
                         accepting_colour_set(a.acceptance, w.first | w.second) && witness_holds(a, w));
    }
    return {disagree == 0 && typeable == 100 && synth_bad == 0 && witness_bad == 0 && witnesses >= 30,
            std::to_string(pairs - disagree) + "/" + std::to_string(pairs) + " pairs agree (" +
                std::to_string(equal_pairs) + " equivalent); synthesis equivalent on " +
                std::to_string(typeable - synth_bad) + "/" + std::to_string(typeable) + "; " +
                std::to_string(witnesses - witness_bad) + "/" + std::to_string(witnesses) + " witnesses hold"};
}

Outcome a_g_behaviour() {
    std::size_t graphs = 0, checks = 0, bad = 0;
    for (const char* name : {"k3", "p4", "diamond", "c5", "w5"}) {
        const auto g = parse_dimacs(slurp(fixtures + "/" + name + ".col"));
        const auto a = build_A_G(g);
        const std::size_t n = g.vertices();
        ++graphs;
        bad += a.states != n || a.acceptance.as<RabinAcc>().pairs.size() != g.edges().size();
        auto adjacent = [&](std::size_t u, std::size_t v) { return (g.neighbours(u) >> v) & 1U; };
        for (std::size_t v = 0; v < n; ++v) {
            ++checks;
            bad += accepts_up_word(a, {{}, {v}});
            for (std::size_t u = 0; u < n; ++u) {
                if (u == v) continue;
                if (adjacent(u, v)) {
                    ++checks;
                    bad += !accepts_up_word(a, {{}, {v, u}});
                    continue;
                }
                for (std::size_t x = 0; x < n; ++x) {
                    ++checks;
                    bad += accepts_up_word(a, {{x}, {v, u}});
                }
            }
        }
    }
    return {bad == 0, std::to_string(graphs) + " fixture graphs, " + std::to_string(checks - bad) + "/" +
                          std::to_string(checks) + " word checks"};
}

} // namespace

int main(int argc, char** argv) {
    if (argc > 1) fixtures = argv[1];
    criterion(1, "reduction equality", 60, reduction_equality);
    criterion(2, "Zielonka tree round trip", 30, tree_round_trip);
    criterion(3, "minimal parity automaton", 60, parity_minimality);
    criterion(4, "one-state generalised Buchi", 30, genbuchi_minimality);
    criterion(5, "general vs chromatic memory", 120, separation);
    criterion(6, "epsilon gap", 60, epsilon_gap);
    criterion(7, "Rabin oracle agreement", 60, oracle_agreement);
    criterion(8, "A_G unit behaviour", 10, a_g_behaviour);
    std::printf("%d of 8 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
