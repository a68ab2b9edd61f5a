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
#include <bit>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "automaton.hpp"
#include "zielonka.hpp"

namespace muller {

/// Simple undirected graph on vertices 0..n-1 (named "1".."n" externally).
class SimpleGraph {
public:
    SimpleGraph() = default;
    explicit SimpleGraph(std::size_t n) : n_(n), adj_(n, 0) {
        if (n > 64) throw scale_guard("graphs are limited to 64 vertices");
    }

    static SimpleGraph complete(std::size_t n) {
        SimpleGraph g(n);
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = u + 1; v < n; ++v) g.add_edge(u, v);
        return g;
    }
    static SimpleGraph path(std::size_t n) {
        SimpleGraph g(n);
        for (std::size_t u = 0; u + 1 < n; ++u) g.add_edge(u, u + 1);
        return g;
    }
    static SimpleGraph cycle(std::size_t n) {
        auto g = path(n);
        if (n > 2) g.add_edge(n - 1, 0);
        return g;
    }

    void add_edge(std::size_t u, std::size_t v) {
        if (u >= n_ || v >= n_) throw malformed("edge endpoint out of range");
        if (u == v) throw malformed("self-loop on vertex " + std::to_string(u + 1));
        if (adjacent(u, v)) throw malformed("duplicate edge " + std::to_string(u + 1) + "-" + std::to_string(v + 1));
        adj_[u] |= std::uint64_t{1} << v;
        adj_[v] |= std::uint64_t{1} << u;
        edges_.emplace_back(std::min(u, v), std::max(u, v));
        std::sort(edges_.begin(), edges_.end());
    }

    std::size_t vertices() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }
    /// Unordered edges as (smaller, larger), sorted.
    const std::vector<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }
    bool adjacent(std::size_t u, std::size_t v) const { return (adj_[u] >> v) & 1U; }
    std::uint64_t neighbours(std::size_t u) const { return adj_[u]; }
    std::size_t degree(std::size_t u) const { return static_cast<std::size_t>(std::popcount(adj_[u])); }
    Alphabet vertex_alphabet() const { return Alphabet::numbered(n_, 1); }

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> adj_;
    std::vector<std::pair<std::size_t, std::size_t>> edges_;
};

/// colour[v] in [1, k].
struct Colouring {
    std::vector<std::size_t> colour;

    std::size_t size() const { return colour.empty() ? 0 : *std::max_element(colour.begin(), colour.end()); }
    bool proper(const SimpleGraph& g) const {
        if (colour.size() != g.vertices()) return false;
        for (auto c : colour)
            if (c == 0) return false;
        return std::all_of(g.edges().begin(), g.edges().end(),
                           [&](const auto& e) { return colour[e.first] != colour[e.second]; });
    }
};

/// DIMACS .col: `c` comment lines, one `p edge n m` header, `e u v` edges (1-indexed).
inline SimpleGraph parse_dimacs(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::optional<SimpleGraph> g;
    std::size_t lineno = 0;
    auto fail = [&](const std::string& why) { return malformed("DIMACS line " + std::to_string(lineno) + ": " + why); };
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag) || tag == "c") continue;
        if (tag == "p") {
            std::string format;
            long long n = -1, m = -1;
            if (g) throw fail("duplicate problem line");
            if (!(ls >> format >> n >> m) || format != "edge" || n < 0 || m < 0) throw fail("expected 'p edge <n> <m>'");
            if (std::string rest; ls >> rest) throw fail("trailing tokens");
            g.emplace(static_cast<std::size_t>(n));
        } else if (tag == "e") {
            if (!g) throw fail("edge before problem line");
            long long u = 0, v = 0;
            if (!(ls >> u >> v)) throw fail("expected 'e <u> <v>'");
            if (std::string rest; ls >> rest) throw fail("trailing tokens");
            const auto n = static_cast<long long>(g->vertices());
            if (u < 1 || v < 1 || u > n || v > n) throw fail("vertex out of range");
            if (u == v) throw fail("self-loop");
            try {
                g->add_edge(static_cast<std::size_t>(u - 1), static_cast<std::size_t>(v - 1));
            } catch (const Error& e) {
                throw fail(e.what());
            }
        } else {
            throw fail("unknown line type '" + tag + "'");
        }
    }
    if (!g) throw malformed("DIMACS input has no problem line");
    return *g;
}

inline std::string to_dimacs(const SimpleGraph& g) {
    std::string s = "p edge " + std::to_string(g.vertices()) + " " + std::to_string(g.edge_count()) + "\n";
    for (auto [u, v] : g.edges()) s += "e " + std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
    return s;
}

struct ChromaticResult {
    std::size_t k = 0;
    Colouring colouring;
};

namespace detail {

class DsaturSolver {
public:
    explicit DsaturSolver(const SimpleGraph& g) : g_(g), n_(g.vertices()), colour_(n_, 0) {}

    ChromaticResult solve() {
        best_ = greedy();
        best_k_ = best_.size();
        const std::size_t lower = clique_bound();
        if (best_k_ > lower) {
            std::fill(colour_.begin(), colour_.end(), 0);
            search(0, 0, lower);
        }
        return {best_k_, best_};
    }

private:
    std::size_t saturation(std::size_t v) const {
        std::uint64_t used = 0;
        for (auto b = g_.neighbours(v); b != 0; b &= b - 1) {
            auto c = colour_[static_cast<std::size_t>(std::countr_zero(b))];
            if (c) used |= std::uint64_t{1} << (c - 1);
        }
        return static_cast<std::size_t>(std::popcount(used));
    }

    /// Uncoloured vertex of maximum saturation; ties by degree, then smallest index.
    std::size_t pick() const {
        std::size_t best = n_, bs = 0, bd = 0;
        for (std::size_t v = 0; v < n_; ++v) {
            if (colour_[v]) continue;
            auto s = saturation(v), d = g_.degree(v);
            if (best == n_ || s > bs || (s == bs && d > bd)) {
                best = v;
                bs = s;
                bd = d;
            }
        }
        return best;
    }

    bool allowed(std::size_t v, std::size_t c) const {
        for (auto b = g_.neighbours(v); b != 0; b &= b - 1)
            if (colour_[static_cast<std::size_t>(std::countr_zero(b))] == c) return false;
        return true;
    }

    Colouring greedy() {
        std::fill(colour_.begin(), colour_.end(), 0);
        for (std::size_t i = 0; i < n_; ++i) {
            auto v = pick();
            std::size_t c = 1;
            while (!allowed(v, c)) ++c;
            colour_[v] = c;
        }
        return {colour_};
    }

    std::size_t clique_bound() const {
        std::size_t best = n_ ? 1 : 0;
        for (std::size_t start = 0; start < n_; ++start) {
            std::uint64_t cand = g_.neighbours(start);
            std::size_t size = 1;
            while (cand) {
                // Greedy: extend by the candidate with most candidate neighbours.
                std::size_t pickv = 0;
                int best_deg = -1;
                for (auto b = cand; b != 0; b &= b - 1) {
                    auto v = static_cast<std::size_t>(std::countr_zero(b));
                    int d = std::popcount(cand & g_.neighbours(v));
                    if (d > best_deg) {
                        best_deg = d;
                        pickv = v;
                    }
                }
                ++size;
                cand &= g_.neighbours(pickv);
            }
            best = std::max(best, size);
        }
        return best;
    }

    bool search(std::size_t coloured, std::size_t used, std::size_t lower) {
        if (coloured == n_) {
            best_k_ = used;
            best_ = {colour_};
            return best_k_ <= lower;
        }
        const auto v = pick();
        // Opening colour used+1 only: colour classes are interchangeable.
        const std::size_t top = std::min(used + 1, best_k_ - 1);
        for (std::size_t c = 1; c <= top; ++c) {
            if (!allowed(v, c)) continue;
            colour_[v] = c;
            if (search(coloured + 1, std::max(used, c), lower)) return true;
            colour_[v] = 0;
            if (best_k_ <= lower) return true;
        }
        colour_[v] = 0;
        return false;
    }

    const SimpleGraph& g_;
    std::size_t n_;
    std::vector<std::size_t> colour_;
    Colouring best_;
    std::size_t best_k_ = 0;
};

} // namespace detail

/// Exact chromatic number with a witness colouring (DSATUR branch and bound).
inline ChromaticResult chromatic_number(const SimpleGraph& g) {
    if (g.vertices() == 0) throw precondition("graph needs at least one vertex");
    return detail::DsaturSolver(g).solve();
}

/// F_G over the vertices: the accepting sets are exactly the edges {u, v}.
inline MullerCondition condition_F_G(const SimpleGraph& g) {
    std::vector<ColourSet> acc;
    for (auto [u, v] : g.edges()) acc.push_back(ColourSet{u, v});
    return MullerCondition(g.vertex_alphabet(), acc);
}

/// Zielonka tree of F_G written down directly: the vertex set with one two-leaf subtree per edge.
inline ZielonkaTree zielonka_tree_F_G(const SimpleGraph& g) {
    const auto all = ColourSet::full(g.vertices());
    auto edge_tree = [](std::size_t u, std::size_t v) {
        return ZielonkaTree{ColourSet{u, v}, true,
                            {ZielonkaTree{ColourSet{u}, false, {}}, ZielonkaTree{ColourSet{v}, false, {}}}};
    };
    if (g.edge_count() == 0) return ZielonkaTree{all, false, {}};
    // With two vertices joined by an edge the vertex set itself is accepting.
    if (g.vertices() == 2) return edge_tree(0, 1);
    ZielonkaTree root{all, false, {}};
    for (auto [u, v] : g.edges()) root.children.push_back(edge_tree(u, v));
    root.canonicalise();
    return root;
}

/// A_G: states are vertices, δ(v, x) = (x, (v, x)), and one Rabin pair per edge {v, u}:
/// E = {(v,u)}, F = V×V minus {(v,u), (u,v), (v,v), (u,u)}.
inline Automaton build_A_G(const SimpleGraph& g) {
    const std::size_t n = g.vertices();
    if (n == 0) throw precondition("graph needs at least one vertex");
    if (n * n > kMaxAlphabet) throw scale_guard("A_G needs n^2 output colours; at most 8 vertices");
    const auto names = g.vertex_alphabet();
    std::vector<std::string> out;
    for (std::size_t v = 0; v < n; ++v)
        for (std::size_t x = 0; x < n; ++x) out.push_back(names.name(v) + ":" + names.name(x));
    auto pair_colour = [n](std::size_t v, std::size_t x) { return v * n + x; };
    std::vector<Transition> delta;
    for (std::size_t v = 0; v < n; ++v)
        for (std::size_t x = 0; x < n; ++x) delta.push_back({x, pair_colour(v, x)});
    std::vector<RabinPair> pairs;
    const auto all = ColourSet::full(n * n);
    for (auto [v, u] : g.edges()) {
        RabinPair p;
        p.e.insert(pair_colour(v, u));
        p.f = all - ColourSet{pair_colour(v, u), pair_colour(u, v), pair_colour(v, v), pair_colour(u, u)};
        pairs.push_back(p);
    }
    return Automaton(n, names, Alphabet(std::move(out)), 0, std::move(delta), Acceptance::rabin(n * n, std::move(pairs)));
}

/// Rabin automaton with one state per colour: δ(q, x) = (c(x), (q, x)); per edge {v, u}
/// E = {(c(v),u), (c(u),v)}, F = Q×V minus {(c(v),v), (c(v),u), (c(u),v), (c(u),u)}.
/// Unused colour indices are dropped, so every state is reachable.
inline Automaton colouring_to_rabin(const SimpleGraph& g, const Colouring& c) {
    if (!c.proper(g)) throw precondition("colouring is not proper");
    const std::size_t n = g.vertices();
    std::vector<std::size_t> used;
    for (auto x : c.colour) used.push_back(x);
    std::sort(used.begin(), used.end());
    used.erase(std::unique(used.begin(), used.end()), used.end());
    const std::size_t k = used.size();
    auto state = [&](std::size_t v) {
        return static_cast<std::size_t>(std::lower_bound(used.begin(), used.end(), c.colour[v]) - used.begin());
    };
    if (k * n > kMaxAlphabet) throw scale_guard("colouring automaton needs k*n output colours; at most 64");
    const auto names = g.vertex_alphabet();
    std::vector<std::string> out;
    for (std::size_t q = 0; q < k; ++q)
        for (std::size_t x = 0; x < n; ++x) out.push_back(std::to_string(q + 1) + ":" + names.name(x));
    auto colour_of = [n](std::size_t q, std::size_t x) { return q * n + x; };
    std::vector<Transition> delta;
    for (std::size_t q = 0; q < k; ++q)
        for (std::size_t x = 0; x < n; ++x) delta.push_back({state(x), colour_of(q, x)});
    std::vector<RabinPair> pairs;
    const auto all = ColourSet::full(k * n);
    for (auto [v, u] : g.edges()) {
        const auto cv = state(v), cu = state(u);
        RabinPair p;
        p.e = ColourSet{colour_of(cv, u), colour_of(cu, v)};
        p.f = all - ColourSet{colour_of(cv, v), colour_of(cv, u), colour_of(cu, v), colour_of(cu, u)};
        pairs.push_back(p);
    }
    return Automaton(k, names, Alphabet(std::move(out)), 0, std::move(delta), Acceptance::rabin(k * n, std::move(pairs)));
}

/// Colouring read off an automaton for L_G: v gets the smallest state lying on a cycle that reads
/// only v. Improper results mean the automaton does not recognise L_G.
inline Colouring rabin_to_colouring(const Automaton& a, const SimpleGraph& g) {
    if (!(a.input == g.vertex_alphabet())) throw malformed("automaton input alphabet is not the vertex set of the graph");
    const auto sets = realizable_cycle_sets_all(a, Labelling::Input);
    Colouring c{std::vector<std::size_t>(g.vertices(), 0)};
    for (std::size_t v = 0; v < g.vertices(); ++v) {
        for (std::size_t q = 0; q < a.states && !c.colour[v]; ++q)
            if (std::find(sets[q].begin(), sets[q].end(), ColourSet::singleton(v)) != sets[q].end()) c.colour[v] = q + 1;
        if (!c.colour[v]) throw precondition("no cycle reads only vertex " + std::to_string(v + 1));
    }
    for (auto [u, v] : g.edges())
        if (c.colour[u] == c.colour[v])
            throw precondition("input does not recognise L_G: adjacent vertices " + std::to_string(u + 1) + " and " +
                               std::to_string(v + 1) + " share state " + std::to_string(c.colour[u]));
    return c;
}

} // namespace muller
