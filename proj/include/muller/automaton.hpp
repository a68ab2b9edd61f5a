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

#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "acceptance.hpp"
#include "graph.hpp"

namespace muller {

struct Transition {
    std::size_t next = 0;
    std::size_t out = 0;
    bool operator==(const Transition&) const = default;
};

/// Deterministic, complete, transition-based automaton. The edge leaving state q on input
/// letter a has identifier q * |input| + a, which is also its arc index in graph().
struct Automaton {
    std::size_t states = 0;
    Alphabet input;
    Alphabet output;
    std::size_t initial = 0;
    std::vector<Transition> delta;
    Acceptance acceptance;

    Automaton() = default;
    Automaton(std::size_t n, Alphabet in, Alphabet out, std::size_t init, std::vector<Transition> d, Acceptance acc)
        : states(n), input(std::move(in)), output(std::move(out)), initial(init), delta(std::move(d)),
          acceptance(std::move(acc)) {
        validate();
    }

    std::size_t edges() const { return delta.size(); }
    std::size_t edge(std::size_t q, std::size_t a) const { return q * input.size() + a; }
    const Transition& step(std::size_t q, std::size_t a) const { return delta[edge(q, a)]; }
    std::size_t source(std::size_t e) const { return e / input.size(); }
    std::size_t letter(std::size_t e) const { return e % input.size(); }

    Digraph graph() const {
        Digraph g(states);
        for (std::size_t e = 0; e < delta.size(); ++e) g.add_arc(source(e), delta[e].next);
        return g;
    }
    std::vector<ColourSet> output_labels() const {
        std::vector<ColourSet> l(delta.size());
        for (std::size_t e = 0; e < delta.size(); ++e) l[e] = ColourSet::singleton(delta[e].out);
        return l;
    }
    std::vector<ColourSet> input_labels() const {
        std::vector<ColourSet> l(delta.size());
        for (std::size_t e = 0; e < delta.size(); ++e) l[e] = ColourSet::singleton(letter(e));
        return l;
    }

    void validate() const {
        if (states == 0) throw malformed("automaton needs at least one state");
        if (initial >= states) throw malformed("initial state out of range");
        if (delta.size() != states * input.size()) throw malformed("transition function is not complete");
        for (const auto& t : delta) {
            if (t.next >= states) throw malformed("transition target out of range");
            if (t.out >= output.size()) throw malformed("transition output outside the output alphabet");
        }
        if (acceptance.colours != output.size())
            throw malformed("acceptance condition and output alphabet disagree on the number of colours");
        acceptance.validate();
    }

    bool operator==(const Automaton&) const = default;
};

/// Drops unreachable states and renumbers the rest in BFS order from the initial state.
inline Automaton normalise(const Automaton& a) {
    const std::size_t npos = static_cast<std::size_t>(-1);
    std::vector<std::size_t> rename(a.states, npos), order{a.initial};
    rename[a.initial] = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (std::size_t x = 0; x < a.input.size(); ++x) {
            auto t = a.step(order[i], x).next;
            if (rename[t] == npos) {
                rename[t] = order.size();
                order.push_back(t);
            }
        }
    }
    std::vector<Transition> delta;
    delta.reserve(order.size() * a.input.size());
    for (auto q : order)
        for (std::size_t x = 0; x < a.input.size(); ++x) {
            auto t = a.step(q, x);
            delta.push_back({rename[t.next], t.out});
        }
    return Automaton(order.size(), a.input, a.output, 0, std::move(delta), a.acceptance);
}

/// The ω-word prefix · period^ω, as letter indices.
struct UltimatelyPeriodicWord {
    std::vector<std::size_t> prefix;
    std::vector<std::size_t> period;
};

/// Output colours seen infinitely often on the run over the word.
inline ColourSet inf_colours(const Automaton& a, const UltimatelyPeriodicWord& w) {
    if (w.period.empty()) throw malformed("ultimately periodic word needs a non-empty period");
    auto check = [&](std::size_t x) {
        if (x >= a.input.size()) throw malformed("word letter outside the input alphabet");
    };
    std::size_t q = a.initial;
    for (auto x : w.prefix) {
        check(x);
        q = a.step(q, x).next;
    }
    for (auto x : w.period) check(x);
    // State at the start of each period pass; the run is periodic once one repeats.
    std::vector<std::size_t> seen_at(a.states, static_cast<std::size_t>(-1));
    std::vector<ColourSet> pass_colours;
    for (std::size_t pass = 0;; ++pass) {
        if (seen_at[q] != static_cast<std::size_t>(-1)) {
            ColourSet inf;
            for (std::size_t i = seen_at[q]; i < pass; ++i) inf |= pass_colours[i];
            return inf;
        }
        seen_at[q] = pass;
        ColourSet c;
        for (auto x : w.period) {
            const auto& t = a.step(q, x);
            c.insert(t.out);
            q = t.next;
        }
        pass_colours.push_back(c);
    }
}

/// Reference language oracle.
inline bool accepts_up_word(const Automaton& a, const UltimatelyPeriodicWord& w) {
    return accepting_colour_set(a.acceptance, inf_colours(a, w));
}

enum class Labelling { Output, Input };

/// For every state q: { C : some cycle through q has label set exactly C }.
/// One restriction + SCC pass per candidate C, shared by all states.
inline std::vector<std::vector<ColourSet>> realizable_cycle_sets_all(const Automaton& a,
                                                                     Labelling by = Labelling::Output) {
    const std::size_t width = by == Labelling::Output ? a.output.size() : a.input.size();
    if (width > 24) throw scale_guard("cycle set enumeration is exponential in the alphabet; at most 24 symbols");
    const auto g = a.graph();
    const auto label = by == Labelling::Output ? a.output_labels() : a.input_labels();
    std::vector<std::vector<ColourSet>> result(a.states);
    std::vector<char> active(a.edges());
    const std::uint64_t limit = std::uint64_t{1} << width;
    for (std::uint64_t bits = 1; bits < limit; ++bits) {
        const ColourSet c(bits);
        for (std::size_t e = 0; e < a.edges(); ++e) active[e] = label[e].subset_of(c);
        auto scc = scc_decomposition(g, active);
        for (const auto& comp : scc.components) {
            ColourSet seen;
            for (auto e : comp.arcs) seen |= label[e];
            if (seen != c) continue;
            for (auto v : comp.vertices) result[v].push_back(c);
        }
    }
    return result;
}

inline std::vector<ColourSet> realizable_cycle_sets(const Automaton& a, std::size_t q,
                                                    Labelling by = Labelling::Output) {
    if (q >= a.states) throw malformed("state out of range");
    return realizable_cycle_sets_all(a, by)[q];
}

/// A non-empty set of edges that some closed path traverses exactly.
struct Cycle {
    std::vector<std::size_t> edges;
};

/// True iff the edges form a non-empty strongly connected sub-multigraph.
inline bool is_cycle(const Automaton& a, const Cycle& c) {
    if (c.edges.empty()) return false;
    Digraph g(a.states);
    std::vector<char> vert(a.states, 0);
    for (auto e : c.edges) {
        if (e >= a.edges()) return false;
        g.add_arc(a.source(e), a.delta[e].next);
        vert[a.source(e)] = 1;
    }
    auto scc = scc_decomposition(g, {}, vert);
    for (auto e : c.edges)
        if (scc.component_of[a.delta[e].next] != scc.component_of[a.source(c.edges.front())]) return false;
    for (auto e : c.edges)
        if (scc.component_of[a.source(e)] != scc.component_of[a.source(c.edges.front())]) return false;
    return true;
}

inline ColourSet cycle_colours(const Automaton& a, const Cycle& c) {
    ColourSet s;
    for (auto e : c.edges) s.insert(a.delta[e].out);
    return s;
}

inline ColourSet cycle_letters(const Automaton& a, const Cycle& c) {
    ColourSet s;
    for (auto e : c.edges) s.insert(a.letter(e));
    return s;
}

inline bool cycle_accepting(const Automaton& a, const Cycle& c) {
    return accepting_colour_set(a.acceptance, cycle_colours(a, c));
}

} // namespace muller
