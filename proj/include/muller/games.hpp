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
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "automaton.hpp"
#include "parity_game.hpp"
#include "zielonka.hpp"

namespace muller {

/// Two-player arena; edges carry a colour or ε (no colour).
struct Arena {
    struct Edge {
        std::size_t from = 0;
        std::size_t to = 0;
        std::optional<std::size_t> colour;
        bool operator==(const Edge&) const = default;
    };

    Alphabet colours;
    std::vector<Player> owner;
    std::size_t initial = 0;
    std::vector<Edge> edges;
    std::vector<std::vector<std::size_t>> out;

    Arena() = default;
    Arena(Alphabet c, std::vector<Player> own, std::size_t init, std::vector<Edge> e)
        : colours(std::move(c)), owner(std::move(own)), initial(init), edges(std::move(e)) {
        out.assign(owner.size(), {});
        for (std::size_t i = 0; i < edges.size(); ++i) {
            if (edges[i].from >= owner.size() || edges[i].to >= owner.size())
                throw malformed("arena edge " + std::to_string(i) + " has an endpoint out of range");
            out[edges[i].from].push_back(i);
        }
        validate();
    }

    std::size_t vertices() const { return owner.size(); }

    bool epsilon_free() const {
        return std::all_of(edges.begin(), edges.end(), [](const Edge& e) { return e.colour.has_value(); });
    }

    Digraph graph() const {
        Digraph g(vertices());
        for (const auto& e : edges) g.add_arc(e.from, e.to);
        return g;
    }

    void validate() const {
        if (owner.empty()) throw malformed("arena has no vertices");
        if (initial >= vertices()) throw malformed("arena initial vertex out of range");
        for (const auto& e : edges)
            if (e.colour && *e.colour >= colours.size()) throw malformed("arena edge colour out of range");
        for (std::size_t v = 0; v < vertices(); ++v)
            if (out[v].empty()) throw malformed("arena vertex " + std::to_string(v) + " has no outgoing edge");
        std::vector<char> eps(edges.size());
        for (std::size_t i = 0; i < edges.size(); ++i) eps[i] = !edges[i].colour;
        for (const auto& comp : scc_decomposition(graph(), eps).components)
            if (comp.nontrivial()) throw malformed("arena has a cycle coloured only with epsilon");
    }
};

enum class MemoryKind { General, Chromatic };

/// Memory (M, m0, μ). General memories update on edges, chromatic ones on colours (and never on ε).
struct MemoryStructure {
    std::size_t states = 1;
    std::size_t initial = 0;
    MemoryKind kind = MemoryKind::Chromatic;
    /// Row-major: update[m * width + i] with i an edge id (general) or a colour (chromatic).
    std::size_t width = 0;
    std::vector<std::size_t> update;

    static MemoryStructure trivial(const Arena& g) { return {1, 0, MemoryKind::Chromatic, g.colours.size(), std::vector<std::size_t>(g.colours.size(), 0)}; }

    std::size_t next(std::size_t m, const Arena& g, std::size_t e) const {
        if (kind == MemoryKind::General) return update[m * width + e];
        const auto& c = g.edges[e].colour;
        return c ? update[m * width + *c] : m;
    }

    void validate(const Arena& g) const {
        if (states == 0 || initial >= states) throw malformed("memory initial state out of range");
        const std::size_t w = kind == MemoryKind::General ? g.edges.size() : g.colours.size();
        if (width != w || update.size() != states * w) throw malformed("memory update table has the wrong shape");
        for (auto m : update)
            if (m >= states) throw malformed("memory update leads outside the memory");
    }
};

/// next-move(v, m) for Eve's vertices; kNoEdge where undefined.
struct StrategyTable {
    std::size_t memory_states = 1;
    std::vector<std::size_t> moves;

    StrategyTable() = default;
    StrategyTable(std::size_t vertices, std::size_t k) : memory_states(k), moves(vertices * k, kNoEdge) {}

    std::size_t& at(std::size_t v, std::size_t m) { return moves[v * memory_states + m]; }
    std::size_t at(std::size_t v, std::size_t m) const { return moves[v * memory_states + m]; }
};

namespace detail {

/// Index of each arena colour in `target`, matched by name.
inline std::vector<std::size_t> colour_map(const Alphabet& from, const Alphabet& target) {
    std::vector<std::size_t> map;
    for (const auto& s : from.symbols()) {
        if (!target.has(s)) throw malformed("game colour '" + s + "' is not in the condition's alphabet");
        map.push_back(target.index(s));
    }
    return map;
}

} // namespace detail

/// Game × parity automaton. Vertex (v, q) has id v * |Q| + q.
struct ProductGame {
    ParityGame game;
    std::size_t automaton_states = 0;
    /// Arena edge behind each product edge.
    std::vector<std::size_t> arena_edge;

    std::size_t vertex(std::size_t v, std::size_t q) const { return v * automaton_states + q; }
};

namespace detail {

inline ProductGame product_with_parity(const Arena& g, const Automaton& a, const std::vector<std::size_t>& letter) {
    const auto& prio = a.acceptance.as<ParityAcc>().priority;
    unsigned neutral = ~0U;
    for (const auto& t : a.delta) neutral = std::min(neutral, prio[t.out]);
    ProductGame p;
    p.automaton_states = a.states;
    for (std::size_t v = 0; v < g.vertices(); ++v)
        for (std::size_t q = 0; q < a.states; ++q) p.game.add_vertex(g.owner[v]);
    for (std::size_t v = 0; v < g.vertices(); ++v) {
        for (std::size_t q = 0; q < a.states; ++q) {
            for (auto e : g.out[v]) {
                const auto& edge = g.edges[e];
                if (edge.colour) {
                    const auto& t = a.step(q, letter[*edge.colour]);
                    p.game.add_edge(p.vertex(v, q), p.vertex(edge.to, t.next), prio[t.out]);
                } else {
                    p.game.add_edge(p.vertex(v, q), p.vertex(edge.to, q), neutral);
                }
                p.arena_edge.push_back(e);
            }
        }
    }
    return p;
}

} // namespace detail

/// Product G ⋉ A; ε edges leave A in place and carry A's smallest priority.
inline ProductGame product_with_parity(const Arena& g, const Automaton& a) {
    if (g.colours.size() != a.input.size()) throw malformed("automaton input alphabet differs from the game colours");
    return detail::product_with_parity(g, a, detail::colour_map(g.colours, a.input));
}

struct MullerGameSolution {
    Player winner = Player::Adam;
    /// Winner when the play starts at each vertex.
    std::vector<Player> winning_from;
    std::optional<MemoryStructure> memory;
    std::optional<StrategyTable> table;
};

/// Solves the game through the Zielonka-tree parity automaton of F. Eve's strategy uses the
/// automaton as a chromatic memory.
inline MullerGameSolution solve_muller_game(const Arena& g, const MullerCondition& f) {
    const auto letter = detail::colour_map(g.colours, f.alphabet());
    const auto a = zt_to_parity(f);
    const auto p = detail::product_with_parity(g, a, letter);
    const auto sol = solve_parity_game(p.game);

    MullerGameSolution out;
    for (std::size_t v = 0; v < g.vertices(); ++v) out.winning_from.push_back(sol.winner[p.vertex(v, a.initial)]);
    out.winner = out.winning_from[g.initial];
    if (out.winner != Player::Eve) return out;

    MemoryStructure m{a.states, a.initial, MemoryKind::Chromatic, g.colours.size(), {}};
    for (std::size_t q = 0; q < a.states; ++q)
        for (std::size_t x = 0; x < g.colours.size(); ++x) m.update.push_back(a.step(q, letter[x]).next);
    StrategyTable t(g.vertices(), a.states);
    for (std::size_t v = 0; v < g.vertices(); ++v) {
        if (g.owner[v] != Player::Eve) continue;
        for (std::size_t q = 0; q < a.states; ++q) t.at(v, q) = p.arena_edge[sol.strategy[p.vertex(v, q)]];
    }
    out.memory = std::move(m);
    out.table = std::move(t);
    return out;
}

struct VerifyReport {
    bool winning = false;
    std::string reason;
};

/// Checks that every cycle reachable in the strategy-restricted product G × M is accepting.
inline VerifyReport verify_strategy_report(const Arena& g, const MullerCondition& f, const MemoryStructure& m,
                                           const StrategyTable& s) {
    m.validate(g);
    if (s.memory_states != m.states || s.moves.size() != g.vertices() * m.states)
        throw malformed("strategy table does not match the memory size");
    const auto letter = detail::colour_map(g.colours, f.alphabet());
    const std::size_t k = m.states;
    constexpr std::size_t unseen = static_cast<std::size_t>(-1);

    std::vector<std::size_t> id(g.vertices() * k, unseen);
    std::vector<std::pair<std::size_t, std::size_t>> configs;
    Digraph prod;
    std::vector<ColourSet> labels;
    auto visit = [&](std::size_t v, std::size_t mem) {
        auto& slot = id[v * k + mem];
        if (slot == unseen) {
            slot = configs.size();
            configs.emplace_back(v, mem);
            prod.out.emplace_back();
        }
        return slot;
    };
    visit(g.initial, m.initial);
    for (std::size_t i = 0; i < configs.size(); ++i) {
        const auto [v, mem] = configs[i];
        auto follow = [&](std::size_t e) {
            const auto j = visit(g.edges[e].to, m.next(mem, g, e));
            prod.add_arc(i, j);
            const auto& c = g.edges[e].colour;
            labels.push_back(c ? ColourSet::singleton(letter[*c]) : ColourSet{});
        };
        if (g.owner[v] == Player::Eve) {
            const auto e = s.at(v, mem);
            if (e == kNoEdge)
                return {false, "no move for vertex " + std::to_string(v) + " in memory state " + std::to_string(mem)};
            if (e >= g.edges.size() || g.edges[e].from != v)
                throw malformed("strategy move for vertex " + std::to_string(v) + " does not leave it");
            follow(e);
        } else {
            for (auto e : g.out[v]) follow(e);
        }
    }
    for (auto c : cycle_label_sets(prod, labels)) {
        if (f.accepts(c)) continue;
        std::string names;
        for (const auto& n : f.alphabet().names_of(c)) names += (names.empty() ? "" : ",") + n;
        return {false, "reachable cycle with rejecting colour set {" + names + "}"};
    }
    return {true, {}};
}

inline bool verify_strategy(const Arena& g, const MullerCondition& f, const MemoryStructure& m, const StrategyTable& s) {
    return verify_strategy_report(g, f, m, s).winning;
}

/// Product memory M × N (state (i, j) is i * |N| + j); chromatic iff both are.
inline MemoryStructure memory_product(const Arena& g, const MemoryStructure& a, const MemoryStructure& b) {
    const bool chromatic = a.kind == MemoryKind::Chromatic && b.kind == MemoryKind::Chromatic;
    MemoryStructure m;
    m.states = a.states * b.states;
    m.initial = a.initial * b.states + b.initial;
    m.kind = chromatic ? MemoryKind::Chromatic : MemoryKind::General;
    m.width = chromatic ? g.colours.size() : g.edges.size();
    for (std::size_t i = 0; i < a.states; ++i) {
        for (std::size_t j = 0; j < b.states; ++j) {
            if (chromatic) {
                for (std::size_t x = 0; x < m.width; ++x)
                    m.update.push_back(a.update[i * a.width + x] * b.states + b.update[j * b.width + x]);
            } else {
                for (std::size_t e = 0; e < m.width; ++e) m.update.push_back(a.next(i, g, e) * b.states + b.next(j, g, e));
            }
        }
    }
    return m;
}

/// The table of M used on M × N, ignoring the N component.
inline StrategyTable lift_strategy(const Arena& g, const StrategyTable& s, std::size_t other_states) {
    StrategyTable t(g.vertices(), s.memory_states * other_states);
    for (std::size_t v = 0; v < g.vertices(); ++v)
        for (std::size_t m = 0; m < t.memory_states; ++m) t.at(v, m) = s.at(v, m / other_states);
    return t;
}

struct MemorySearchResult {
    std::optional<std::size_t> size;
    std::optional<MemoryStructure> memory;
    std::optional<StrategyTable> table;
};

namespace detail {

/// Depth-first search over chromatic memories with k states and strategy tables, filling in
/// only the entries that the configurations reachable so far actually use. Memory states are
/// numbered by first use, so the initial state is 0 and a fresh state is always the next index.
class ChromaticMemorySearch {
public:
    ChromaticMemorySearch(const Arena& g, const MullerCondition& f, std::size_t k, std::size_t& budget)
        : g_(g), f_(f), letter_(colour_map(g.colours, f.alphabet())), k_(k), budget_(budget),
          update_(k * g.colours.size(), kNoEdge), table_(g.vertices() * k, kNoEdge) {}

    std::optional<std::pair<MemoryStructure, StrategyTable>> run() {
        if (!dfs(1)) return std::nullopt;
        MemoryStructure m{k_, 0, MemoryKind::Chromatic, g_.colours.size(), update_};
        for (std::size_t i = 0; i < m.update.size(); ++i)
            if (m.update[i] == kNoEdge) m.update[i] = i / g_.colours.size();
        StrategyTable t(g_.vertices(), k_);
        for (std::size_t v = 0; v < g_.vertices(); ++v)
            if (g_.owner[v] == Player::Eve)
                for (std::size_t q = 0; q < k_; ++q) {
                    const auto e = table_[v * k_ + q];
                    t.at(v, q) = e == kNoEdge ? g_.out[v].front() : e;
                }
        return std::make_pair(std::move(m), std::move(t));
    }

private:
    struct Open {
        bool is_move;
        std::size_t index;
    };

    /// Explores what is determined so far. Returns false if a determined cycle rejects;
    /// otherwise sets `open` to the first undetermined entry met in BFS order, if any.
    bool explore(std::optional<Open>& open) {
        const std::size_t n = g_.vertices();
        std::vector<std::size_t> id(n * k_, kNoEdge);
        std::vector<std::size_t> queue;
        Digraph prod;
        std::vector<ColourSet> labels;
        auto visit = [&](std::size_t c) {
            if (id[c] == kNoEdge) {
                id[c] = queue.size();
                queue.push_back(c);
                prod.out.emplace_back();
            }
            return id[c];
        };
        visit(g_.initial * k_);
        for (std::size_t i = 0; i < queue.size(); ++i) {
            const auto v = queue[i] / k_, m = queue[i] % k_;
            auto follow = [&](std::size_t e) {
                const auto& c = g_.edges[e].colour;
                std::size_t next = m;
                if (c) {
                    next = update_[m * g_.colours.size() + *c];
                    if (next == kNoEdge) {
                        if (!open) open = Open{false, m * g_.colours.size() + *c};
                        return;
                    }
                }
                prod.add_arc(i, visit(g_.edges[e].to * k_ + next));
                labels.push_back(c ? ColourSet::singleton(letter_[*c]) : ColourSet{});
            };
            if (g_.owner[v] == Player::Eve) {
                const auto e = table_[v * k_ + m];
                if (e == kNoEdge) {
                    if (!open) open = Open{true, v * k_ + m};
                    continue;
                }
                follow(e);
            } else {
                for (auto e : g_.out[v]) follow(e);
            }
        }
        for (auto c : cycle_label_sets(prod, labels))
            if (!f_.accepts(c)) return false;
        return true;
    }

    bool dfs(std::size_t used) {
        if (budget_ == 0) throw scale_guard("chromatic memory search exceeded its node budget");
        --budget_;
        std::optional<Open> open;
        if (!explore(open)) return false;
        if (!open) return true;
        if (open->is_move) {
            const auto v = open->index / k_;
            for (auto e : g_.out[v]) {
                table_[open->index] = e;
                if (dfs(used)) return true;
            }
            table_[open->index] = kNoEdge;
            return false;
        }
        const std::size_t top = std::min(k_, used + 1);
        for (std::size_t m = 0; m < top; ++m) {
            update_[open->index] = m;
            if (dfs(std::max(used, m + 1))) return true;
        }
        update_[open->index] = kNoEdge;
        return false;
    }

    const Arena& g_;
    const MullerCondition& f_;
    std::vector<std::size_t> letter_;
    std::size_t k_;
    std::size_t& budget_;
    std::vector<std::size_t> update_;
    std::vector<std::size_t> table_;
};

} // namespace detail

/// Least k ≤ k_max such that some chromatic memory with k states and some table win the game.
inline MemorySearchResult min_chromatic_memory_exhaustive(const Arena& g, const MullerCondition& f, std::size_t k_max,
                                                          std::size_t node_budget = 5'000'000) {
    for (std::size_t k = 1; k <= k_max; ++k) {
        auto found = detail::ChromaticMemorySearch(g, f, k, node_budget).run();
        if (found) return {k, std::move(found->first), std::move(found->second)};
    }
    return {};
}

/// F_n = {A : |A| = 2}.
inline MullerCondition clique_condition(const Alphabet& colours) {
    return MullerCondition::from_predicate(colours, [](ColourSet c) { return c.size() == 2; });
}
inline MullerCondition clique_condition(std::size_t n) { return clique_condition(Alphabet::numbered(n, 1)); }

/// F'_n = {A : |A| > 1}.
inline MullerCondition min2_condition(const Alphabet& colours) {
    return MullerCondition::from_predicate(colours, [](ColourSet c) { return c.size() > 1; });
}
inline MullerCondition min2_condition(std::size_t n) { return min2_condition(Alphabet::numbered(n, 1)); }

enum class Min2Update {
    /// m1 exactly when the last edge entered an Eve vertex v' with colour c(v').
    LastEdge,
    /// Five-case update carried through Adam's moves; loses on some arenas (kept for comparison).
    Basic,
};

/// A memory together with a next-move table for it.
struct MemoryStrategy {
    MemoryStructure memory;
    StrategyTable table;
};

/// Two-state general memory for ε-free F'_n games. m0 plays an edge of colour c(v); m1 follows
/// σ_{c(v)}, a positional strategy forcing a colour other than c(v), restricted to Eve's winning
/// region.
///
/// With the LastEdge update, a play showing only x from some point on would meet only Eve vertices
/// with c(v) = x, always in m1, so Eve would follow the attractor strategy σ_x and force a colour
/// other than x.
inline MemoryStrategy two_state_memory_min2(const Arena& g, std::size_t n, Min2Update variant = Min2Update::LastEdge) {
    if (!g.epsilon_free()) throw precondition("arena has epsilon edges");
    if (g.colours.size() != n) throw precondition("arena colour count differs from n");
    const auto sol = solve_muller_game(g, min2_condition(g.colours));
    if (sol.winner != Player::Eve) throw precondition("Adam wins from the initial vertex");

    const std::size_t nv = g.vertices();
    std::vector<char> win(nv);
    for (std::size_t v = 0; v < nv; ++v) win[v] = sol.winning_from[v] == Player::Eve;
    auto inside = [&](std::size_t e) { return win[g.edges[e].from] && win[g.edges[e].to]; };
    auto colour = [&](std::size_t e) { return *g.edges[e].colour; };

    constexpr std::size_t none = static_cast<std::size_t>(-1);
    std::vector<std::size_t> c(nv, none), sigma0(nv, kNoEdge);
    for (std::size_t v = 0; v < nv; ++v) {
        if (!win[v] || g.owner[v] != Player::Eve) continue;
        for (auto e : g.out[v])
            if (inside(e) && (c[v] == none || colour(e) < c[v] || (colour(e) == c[v] && e < sigma0[v]))) {
                c[v] = colour(e);
                sigma0[v] = e;
            }
    }

    // σ_x on V_x: attractor to "an edge coloured other than x", within the winning region.
    std::vector<std::vector<std::size_t>> sigma(n, std::vector<std::size_t>(nv, kNoEdge));
    for (std::size_t x = 0; x < n; ++x) {
        std::vector<char> attr(nv, 0);
        auto& sx = sigma[x];
        for (bool changed = true; changed;) {
            changed = false;
            const auto snapshot = attr;
            for (std::size_t v = 0; v < nv; ++v) {
                if (!win[v] || attr[v]) continue;
                if (g.owner[v] == Player::Eve) {
                    if (c[v] != x) {
                        sx[v] = sigma0[v];
                    } else {
                        for (auto e : g.out[v])
                            if (inside(e) && (colour(e) != x || snapshot[g.edges[e].to])) {
                                sx[v] = e;
                                break;
                            }
                    }
                    if (sx[v] != kNoEdge) attr[v] = changed = true;
                } else if (std::all_of(g.out[v].begin(), g.out[v].end(),
                                       [&](std::size_t e) { return colour(e) != x || snapshot[g.edges[e].to]; })) {
                    attr[v] = changed = true;
                }
            }
        }
        for (std::size_t v = 0; v < nv; ++v)
            if (win[v] && !attr[v])
                throw precondition("Eve cannot force a colour other than " + g.colours.name(x) + " from vertex " +
                                   std::to_string(v));
    }

    MemoryStructure m{2, 0, MemoryKind::General, g.edges.size(), std::vector<std::size_t>(2 * g.edges.size())};
    const std::size_t ne = g.edges.size();
    for (std::size_t e = 0; e < ne; ++e) {
        const auto v = g.edges[e].from, w = g.edges[e].to;
        const bool eve_target = g.owner[w] == Player::Eve;
        if (variant == Min2Update::LastEdge) {
            m.update[e] = m.update[ne + e] = eve_target && c[w] != none && colour(e) == c[w] ? 1 : 0;
        } else if (g.owner[v] == Player::Adam) {
            m.update[e] = 0;
            m.update[ne + e] = 1;
        } else {
            m.update[e] = 1;
            const bool reset = (eve_target && c[v] != c[w]) || colour(e) != c[v];
            m.update[ne + e] = reset ? 0 : 1;
        }
    }
    StrategyTable t(nv, 2);
    for (std::size_t v = 0; v < nv; ++v) {
        if (g.owner[v] != Player::Eve) continue;
        if (!win[v]) {
            t.at(v, 0) = t.at(v, 1) = g.out[v].front();
            continue;
        }
        t.at(v, 0) = sigma0[v];
        t.at(v, 1) = sigma[c[v]][v];
    }
    return {std::move(m), std::move(t)};
}

/// Adam's v0 sends the play (colour a) to one of three Eve vertices, each offering two loops
/// through an intermediate Eve vertex: v1 {a, b}, v2 {b, c}, v3 {a, c}.
/// Vertices: 0 = v0, 1..3 = v1..v3, 4..9 = intermediates.
inline Arena example22_game() {
    const Alphabet abc({"a", "b", "c"});
    std::vector<Player> owner(10, Player::Eve);
    owner[0] = Player::Adam;
    std::vector<Arena::Edge> edges{{0, 1, 0}, {0, 2, 0}, {0, 3, 0}};
    auto loop = [&](std::size_t v, std::size_t mid, std::size_t colour) {
        edges.push_back({v, mid, colour});
        edges.push_back({mid, v, colour});
    };
    loop(1, 4, 0);
    loop(1, 5, 1);
    loop(2, 6, 1);
    loop(2, 7, 2);
    loop(3, 8, 0);
    loop(3, 9, 2);
    return Arena(abc, std::move(owner), 0, std::move(edges));
}

/// Three-state chromatic strategy: remember the last colour, leave v_i by a loop of another colour.
inline MemoryStrategy example22_chromatic_strategy(const Arena& g) {
    MemoryStructure m{3, 0, MemoryKind::Chromatic, 3, {}};
    for (std::size_t q = 0; q < 3; ++q)
        for (std::size_t x = 0; x < 3; ++x) m.update.push_back(x);
    StrategyTable t(g.vertices(), 3);
    for (std::size_t v = 1; v < g.vertices(); ++v)
        for (std::size_t q = 0; q < 3; ++q)
            for (auto e : g.out[v])
                if (*g.edges[e].colour != q || g.out[v].size() == 1) {
                    t.at(v, q) = e;
                    break;
                }
    return {std::move(m), std::move(t)};
}

/// Two-state general strategy: flip the memory whenever Eve leaves v1, v2 or v3 and take the
/// first loop in m0, the second in m1.
inline MemoryStrategy example22_general_strategy(const Arena& g) {
    MemoryStructure m{2, 0, MemoryKind::General, g.edges.size(), {}};
    for (std::size_t q = 0; q < 2; ++q)
        for (std::size_t e = 0; e < g.edges.size(); ++e) {
            const auto from = g.edges[e].from;
            m.update.push_back(from >= 1 && from <= 3 ? 1 - q : q);
        }
    StrategyTable t(g.vertices(), 2);
    for (std::size_t v = 1; v < g.vertices(); ++v)
        for (std::size_t q = 0; q < 2; ++q) t.at(v, q) = g.out[v][std::min(q, g.out[v].size() - 1)];
    return {std::move(m), std::move(t)};
}

} // namespace muller
