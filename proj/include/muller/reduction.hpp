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
#include <vector>

#include "automaton.hpp"
#include "zielonka.hpp"

namespace muller {

/// Subgraph of G(A): a vertex subset and an edge subset (edges identified as in Automaton).
struct ASubgraph {
    const Automaton* automaton = nullptr;
    std::vector<char> vertices;
    std::vector<char> edges;

    static ASubgraph full(const Automaton& a) {
        return {&a, std::vector<char>(a.states, 1), std::vector<char>(a.edges(), 1)};
    }
    static ASubgraph of(const Automaton& a, const Component& comp) {
        ASubgraph s{&a, std::vector<char>(a.states, 0), std::vector<char>(a.edges(), 0)};
        for (auto v : comp.vertices) s.vertices[v] = 1;
        for (auto e : comp.arcs) s.edges[e] = 1;
        return s;
    }

    bool has_edges() const { return std::find(edges.begin(), edges.end(), 1) != edges.end(); }

    ColourSet letters() const {
        ColourSet c;
        for (std::size_t e = 0; e < edges.size(); ++e)
            if (edges[e]) c.insert(automaton->letter(e));
        return c;
    }

    unsigned priority(std::size_t e) const {
        return automaton->acceptance.as<ParityAcc>().priority[automaton->delta[e].out];
    }

    unsigned max_priority() const {
        unsigned p = 0;
        for (std::size_t e = 0; e < edges.size(); ++e)
            if (edges[e]) p = std::max(p, priority(e));
        return p;
    }

    std::vector<std::size_t> vertex_list() const {
        std::vector<std::size_t> v;
        for (std::size_t q = 0; q < vertices.size(); ++q)
            if (vertices[q]) v.push_back(q);
        return v;
    }
};

/// Strongly connected, complete subgraph of S whose letters are exactly C: the ergodic component
/// (smallest vertex first) of S restricted to C-labelled edges.
inline ASubgraph complete_scc(ColourSet c, const ASubgraph& s) {
    const Automaton& a = *s.automaton;
    std::vector<char> active(a.edges(), 0);
    for (std::size_t e = 0; e < a.edges(); ++e)
        active[e] = s.edges[e] && s.vertices[a.source(e)] && s.vertices[a.delta[e].next] && c.contains(a.letter(e));
    const auto g = a.graph();
    auto scc = scc_decomposition(g, active, s.vertices);
    // Ergodic: no active edge leaves the component.
    std::vector<char> leaks(scc.components.size(), 0);
    for (std::size_t e = 0; e < a.edges(); ++e) {
        if (!active[e]) continue;
        auto from = scc.component_of[a.source(e)], to = scc.component_of[a.delta[e].next];
        if (from != to) leaks[from] = 1;
    }
    const Component* best = nullptr;
    for (std::size_t i = 0; i < scc.components.size(); ++i) {
        const auto& comp = scc.components[i];
        if (leaks[i] || !comp.nontrivial()) continue;
        if (!best || comp.vertices.front() < best->vertices.front()) best = &comp;
    }
    if (!best) throw precondition("subgraph contains no C-SCC for the requested letters");
    auto out = ASubgraph::of(a, *best);
    // Completeness: every vertex has an edge for every letter of C inside the component.
    for (auto v : best->vertices) {
        ColourSet seen;
        for (std::size_t x = 0; x < a.input.size(); ++x)
            if (out.edges[a.edge(v, x)]) seen.insert(x);
        if (seen != c) throw precondition("subgraph contains no C-SCC for the requested letters");
    }
    return out;
}

/// Labels of the children of the Zielonka-tree node represented by the strongly connected S.
inline std::vector<ColourSet> alternating_sets(const ASubgraph& s) {
    if (!s.has_edges()) return {};
    const Automaton& a = *s.automaton;
    const unsigned p = s.max_priority();

    std::vector<char> edges(a.edges(), 0), verts(a.states, 0);
    for (std::size_t e = 0; e < a.edges(); ++e) {
        if (s.edges[e] && s.priority(e) < p) {
            edges[e] = 1;
            verts[a.source(e)] = 1;
        }
    }
    const auto g = a.graph();
    auto scc = scc_decomposition(g, edges, verts);

    std::vector<ColourSet> alt;
    for (const auto& comp : scc.components) {
        if (!comp.nontrivial()) continue;
        auto sub = ASubgraph::of(a, comp);
        if (sub.max_priority() % 2 != p % 2) {
            alt.push_back(sub.letters());
        } else {
            auto deeper = alternating_sets(sub);
            alt.insert(alt.end(), deeper.begin(), deeper.end());
        }
    }
    return max_inclusion(std::move(alt));
}

namespace detail {

inline ZielonkaTree zielonka_from_subgraph(const ASubgraph& s) {
    ZielonkaTree node{s.letters(), s.max_priority() % 2 == 0, {}};
    for (auto c : alternating_sets(s)) node.children.push_back(zielonka_from_subgraph(complete_scc(c, s)));
    node.canonicalise();
    return node;
}

/// Ergodic SCC of G(A) reachable from the initial state; smallest state id wins ties.
inline ASubgraph ergodic_part(const Automaton& a) {
    const auto g = a.graph();
    const auto reach = reachable_from(g, a.initial);
    auto scc = scc_decomposition(g, {}, reach);
    std::vector<char> leaks(scc.components.size(), 0);
    for (std::size_t e = 0; e < a.edges(); ++e) {
        if (!reach[a.source(e)]) continue;
        auto from = scc.component_of[a.source(e)], to = scc.component_of[a.delta[e].next];
        if (from != to) leaks[from] = 1;
    }
    const Component* best = nullptr;
    for (std::size_t i = 0; i < scc.components.size(); ++i) {
        const auto& comp = scc.components[i];
        if (leaks[i] || !comp.nontrivial()) continue;
        if (!best || comp.vertices.front() < best->vertices.front()) best = &comp;
    }
    // A complete automaton always has a non-trivial ergodic component.
    return ASubgraph::of(a, *best);
}

} // namespace detail

/// Zielonka tree of the Muller language recognised by a parity automaton (unchecked
/// precondition: the language is a Muller language).
inline ZielonkaTree zielonka_tree_from_parity(const Automaton& a) {
    a.acceptance.as<ParityAcc>();
    return detail::zielonka_from_subgraph(detail::ergodic_part(a));
}

/// Minimal parity automaton for the Muller language recognised by `a`.
inline Automaton minimize_parity(const Automaton& a) {
    return zt_to_parity(zielonka_tree_from_parity(a), a.input);
}

/// Maximal rejecting letter sets of a generalised Büchi automaton recognising a Muller language.
inline std::vector<ColourSet> maximal_rejecting_sets(const Automaton& input) {
    const auto a = normalise(input);
    const auto& acc = a.acceptance.as<GenBuchiAcc>();
    const auto g = a.graph();
    std::vector<ColourSet> found;
    std::vector<char> active(a.edges());
    for (auto b : acc.sets) {
        for (std::size_t e = 0; e < a.edges(); ++e) active[e] = !b.contains(a.delta[e].out);
        auto scc = scc_decomposition(g, active);
        for (const auto& comp : scc.components) {
            if (!comp.nontrivial()) continue;
            ColourSet letters;
            for (auto e : comp.arcs) letters.insert(a.letter(e));
            found.push_back(letters);
        }
    }
    return max_inclusion(std::move(found));
}

/// One-state generalised Büchi automaton (identity output) equivalent to the input.
inline Automaton minimize_genbuchi(const Automaton& a) {
    std::vector<ColourSet> sets;
    for (auto r : maximal_rejecting_sets(a)) sets.push_back(a.input.all() - r);
    std::vector<Transition> delta;
    for (std::size_t x = 0; x < a.input.size(); ++x) delta.push_back({0, x});
    return Automaton(1, a.input, a.input, 0, std::move(delta), Acceptance::gen_buchi(a.input.size(), std::move(sets)));
}

} // namespace muller
