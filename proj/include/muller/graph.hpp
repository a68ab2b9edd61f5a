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
#include <span>
#include <unordered_set>
#include <vector>

#include "colour_set.hpp"

namespace muller {

/// Directed multigraph with arcs addressed by index.
struct Digraph {
    struct Arc {
        std::size_t from;
        std::size_t to;
    };

    explicit Digraph(std::size_t n = 0) : out(n) {}

    std::size_t add_arc(std::size_t from, std::size_t to) {
        arcs.push_back({from, to});
        out[from].push_back(arcs.size() - 1);
        return arcs.size() - 1;
    }
    std::size_t vertices() const { return out.size(); }

    std::vector<Arc> arcs;
    std::vector<std::vector<std::size_t>> out;
};

/// One strongly connected component together with its internal arcs.
struct Component {
    std::vector<std::size_t> vertices;
    std::vector<std::size_t> arcs;

    bool nontrivial() const { return !arcs.empty(); }
};

struct SccDecomposition {
    std::vector<Component> components;
    /// Component index per vertex; npos for inactive vertices.
    std::vector<std::size_t> component_of;

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

/// Tarjan's algorithm restricted to the active arcs (and active vertices, if given).
/// Components are emitted in reverse topological order; members are sorted.
inline SccDecomposition scc_decomposition(const Digraph& g, std::span<const char> arc_active = {},
                                          std::span<const char> vertex_active = {}) {
    const std::size_t n = g.vertices();
    constexpr std::size_t npos = SccDecomposition::npos;
    auto arc_on = [&](std::size_t a) { return arc_active.empty() || arc_active[a]; };
    auto vertex_on = [&](std::size_t v) { return vertex_active.empty() || vertex_active[v]; };

    SccDecomposition result;
    result.component_of.assign(n, npos);
    std::vector<std::size_t> index(n, npos), low(n, 0), stack;
    std::vector<char> on_stack(n, 0);
    std::size_t counter = 0;

    struct Frame {
        std::size_t v;
        std::size_t next;
    };
    std::vector<Frame> call;

    for (std::size_t root = 0; root < n; ++root) {
        if (!vertex_on(root) || index[root] != npos) continue;
        call.push_back({root, 0});
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = 1;
        while (!call.empty()) {
            auto& f = call.back();
            const auto& outs = g.out[f.v];
            if (f.next < outs.size()) {
                const std::size_t a = outs[f.next++];
                if (!arc_on(a)) continue;
                const std::size_t w = g.arcs[a].to;
                if (!vertex_on(w)) continue;
                if (index[w] == npos) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = 1;
                    call.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[f.v] = std::min(low[f.v], index[w]);
                }
                continue;
            }
            const std::size_t v = f.v;
            call.pop_back();
            if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
            if (low[v] != index[v]) continue;
            Component comp;
            const std::size_t id = result.components.size();
            std::size_t w;
            do {
                w = stack.back();
                stack.pop_back();
                on_stack[w] = 0;
                result.component_of[w] = id;
                comp.vertices.push_back(w);
            } while (w != v);
            std::sort(comp.vertices.begin(), comp.vertices.end());
            result.components.push_back(std::move(comp));
        }
    }

    for (std::size_t a = 0; a < g.arcs.size(); ++a) {
        if (!arc_on(a)) continue;
        const auto [from, to] = g.arcs[a];
        if (!vertex_on(from) || !vertex_on(to)) continue;
        if (result.component_of[from] == result.component_of[to])
            result.components[result.component_of[from]].arcs.push_back(a);
    }
    return result;
}

/// Vertices reachable from `start` through active arcs.
inline std::vector<char> reachable_from(const Digraph& g, std::size_t start, std::span<const char> arc_active = {}) {
    std::vector<char> seen(g.vertices(), 0);
    std::vector<std::size_t> todo{start};
    seen[start] = 1;
    while (!todo.empty()) {
        auto v = todo.back();
        todo.pop_back();
        for (auto a : g.out[v]) {
            if (!arc_active.empty() && !arc_active[a]) continue;
            auto w = g.arcs[a].to;
            if (!seen[w]) {
                seen[w] = 1;
                todo.push_back(w);
            }
        }
    }
    return seen;
}

/// Every label set γ(ℓ) of a cycle ℓ made of active arcs, where each arc carries a label set
/// (possibly empty). Cycles whose label union is empty are not reported.
///
/// Works by refinement: a realizable set D lives in some SCC S of the restriction to arcs
/// labelled within D; either D = labels(S) or D avoids some label of S, so recursing on
/// labels(S) minus one label at a time reaches it.
inline std::vector<ColourSet> cycle_label_sets(const Digraph& g, std::span<const ColourSet> label,
                                               std::span<const char> arc_active = {}) {
    std::unordered_set<ColourSet, ColourSetHash> found, visited;
    std::vector<char> active(g.arcs.size());
    ColourSet universe;
    for (std::size_t a = 0; a < g.arcs.size(); ++a)
        if (arc_active.empty() || arc_active[a]) universe |= label[a];

    std::vector<ColourSet> todo{universe};
    visited.insert(universe);
    while (!todo.empty()) {
        const ColourSet allowed = todo.back();
        todo.pop_back();
        for (std::size_t a = 0; a < g.arcs.size(); ++a)
            active[a] = (arc_active.empty() || arc_active[a]) && label[a].subset_of(allowed);
        auto scc = scc_decomposition(g, active);
        for (const auto& comp : scc.components) {
            if (!comp.nontrivial()) continue;
            ColourSet l;
            for (auto a : comp.arcs) l |= label[a];
            if (l.empty()) continue;
            found.insert(l);
            for (auto x : l.members()) {
                ColourSet next = l;
                next.erase(x);
                if (visited.insert(next).second) todo.push_back(next);
            }
        }
    }
    std::vector<ColourSet> out(found.begin(), found.end());
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace muller
