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
#include <array>
#include <cstdint>
#include <deque>
#include <vector>

#include "error.hpp"
#include "graph.hpp"

namespace muller {

enum class Player : std::uint8_t { Eve = 0, Adam = 1 };

inline Player opponent(Player p) { return p == Player::Eve ? Player::Adam : Player::Eve; }

/// Parity game with priorities on edges (max-even: Eve wins iff the largest priority seen
/// infinitely often is even).
struct ParityGame {
    struct Edge {
        std::size_t from;
        std::size_t to;
        unsigned priority;
    };

    std::vector<Player> owner;
    std::vector<Edge> edges;
    std::vector<std::vector<std::size_t>> out;

    std::size_t vertices() const { return owner.size(); }

    std::size_t add_vertex(Player p) {
        owner.push_back(p);
        out.emplace_back();
        return owner.size() - 1;
    }
    std::size_t add_edge(std::size_t from, std::size_t to, unsigned priority) {
        if (from >= vertices() || to >= vertices()) throw malformed("parity game edge endpoint out of range");
        edges.push_back({from, to, priority});
        out[from].push_back(edges.size() - 1);
        return edges.size() - 1;
    }

    Digraph graph() const {
        Digraph g(vertices());
        for (const auto& e : edges) g.add_arc(e.from, e.to);
        return g;
    }
};

inline constexpr std::size_t kNoEdge = static_cast<std::size_t>(-1);

struct ParitySolution {
    /// Winner from each vertex.
    std::vector<Player> winner;
    /// Positional choice (edge index) of the owner at each vertex. Winning for the owner on its
    /// own region; some out-edge elsewhere.
    std::vector<std::size_t> strategy;
};

namespace detail {

/// Vertex-priority game obtained by splitting every edge through a fresh vertex carrying the
/// edge's priority. Original vertices get priority 0, which never decides a cycle's maximum.
class ZielonkaSolver {
public:
    explicit ZielonkaSolver(const ParityGame& pg) : n_(pg.vertices()) {
        const std::size_t total = n_ + pg.edges.size();
        owner_.resize(total, Player::Eve);
        prio_.assign(total, 0);
        succ_.resize(total);
        pred_.resize(total);
        for (std::size_t v = 0; v < n_; ++v) {
            owner_[v] = pg.owner[v];
            if (pg.out[v].empty()) throw malformed("parity game vertex " + std::to_string(v) + " has no outgoing edge");
        }
        for (std::size_t e = 0; e < pg.edges.size(); ++e) {
            const std::size_t mid = n_ + e;
            prio_[mid] = pg.edges[e].priority;
            link(pg.edges[e].from, mid);
            link(mid, pg.edges[e].to);
        }
        choice_.assign(total, kNoEdge);
    }

    ParitySolution solve() {
        std::vector<char> all(owner_.size(), 1);
        auto regions = solve(all);
        ParitySolution s;
        s.winner.resize(n_);
        s.strategy.resize(n_);
        for (std::size_t v = 0; v < n_; ++v) {
            s.winner[v] = regions[0][v] ? Player::Eve : Player::Adam;
            // choice_ points at an intermediate vertex n + e.
            s.strategy[v] = choice_[v] == kNoEdge ? succ_[v].front() - n_ : choice_[v] - n_;
        }
        return s;
    }

private:
    void link(std::size_t a, std::size_t b) {
        succ_[a].push_back(b);
        pred_[b].push_back(a);
    }

    /// Attractor for p towards target inside the sub-game; records p's attracting choices.
    std::vector<char> attractor(const std::vector<char>& game, const std::vector<char>& target, Player p) {
        std::vector<char> attr = target;
        std::vector<std::size_t> count(owner_.size(), 0);
        std::deque<std::size_t> queue;
        for (std::size_t v = 0; v < owner_.size(); ++v) {
            if (!game[v]) continue;
            if (attr[v]) queue.push_back(v);
            for (auto w : succ_[v])
                if (game[w]) ++count[v];
        }
        while (!queue.empty()) {
            const auto w = queue.front();
            queue.pop_front();
            for (auto v : pred_[w]) {
                if (!game[v] || attr[v]) continue;
                if (owner_[v] == p) {
                    attr[v] = 1;
                    choice_[v] = w;
                    queue.push_back(v);
                } else if (--count[v] == 0) {
                    attr[v] = 1;
                    queue.push_back(v);
                }
            }
        }
        return attr;
    }

    /// regions[0] = Eve's winning set, regions[1] = Adam's, both within `game`.
    std::array<std::vector<char>, 2> solve(const std::vector<char>& game) {
        const std::size_t total = owner_.size();
        std::array<std::vector<char>, 2> w{std::vector<char>(total, 0), std::vector<char>(total, 0)};
        unsigned top = 0;
        bool empty = true;
        for (std::size_t v = 0; v < total; ++v) {
            if (!game[v]) continue;
            empty = false;
            top = std::max(top, prio_[v]);
        }
        if (empty) return w;

        const Player p = top % 2 == 0 ? Player::Eve : Player::Adam;
        const auto pi = static_cast<std::size_t>(p), oi = 1 - pi;
        std::vector<char> target(total, 0);
        for (std::size_t v = 0; v < total; ++v)
            if (game[v] && prio_[v] == top) target[v] = 1;
        // Top-priority vertices owned by p may move anywhere inside the sub-game.
        for (std::size_t v = 0; v < total; ++v) {
            if (!target[v] || owner_[v] != p) continue;
            for (auto s : succ_[v])
                if (game[s]) {
                    choice_[v] = s;
                    break;
                }
        }
        const auto a = attractor(game, target, p);
        std::vector<char> rest(total, 0);
        for (std::size_t v = 0; v < total; ++v) rest[v] = game[v] && !a[v];
        auto sub = solve(rest);

        if (std::none_of(sub[oi].begin(), sub[oi].end(), [](char c) { return c != 0; })) {
            w[pi] = game;
            return w;
        }
        const auto b = attractor(game, sub[oi], opponent(p));
        for (std::size_t v = 0; v < total; ++v) rest[v] = game[v] && !b[v];
        auto sub2 = solve(rest);
        for (std::size_t v = 0; v < total; ++v) {
            w[oi][v] = b[v] || sub2[oi][v];
            w[pi][v] = sub2[pi][v];
        }
        return w;
    }

    std::size_t n_;
    std::vector<Player> owner_;
    std::vector<unsigned> prio_;
    std::vector<std::vector<std::size_t>> succ_, pred_;
    std::vector<std::size_t> choice_;
};

} // namespace detail

/// Recursive attractor-based solver (Zielonka's algorithm).
inline ParitySolution solve_parity_game(const ParityGame& pg) {
    if (pg.vertices() == 0) return {};
    return detail::ZielonkaSolver(pg).solve();
}

/// Does the positional strategy of `p` win from every vertex of `region`? Checks that no cycle
/// reachable in the induced one-player graph has a maximum priority of the opponent's parity.
inline bool positional_strategy_wins(const ParityGame& pg, Player p, const std::vector<std::size_t>& strategy,
                                     const std::vector<char>& region) {
    const auto g = pg.graph();
    std::vector<char> arc(pg.edges.size(), 0);
    for (std::size_t e = 0; e < pg.edges.size(); ++e) {
        const auto v = pg.edges[e].from;
        arc[e] = pg.owner[v] != p || strategy[v] == e;
    }
    std::vector<char> reach(pg.vertices(), 0);
    for (std::size_t v = 0; v < pg.vertices(); ++v) {
        if (!region[v] || reach[v]) continue;
        auto r = reachable_from(g, v, arc);
        for (std::size_t u = 0; u < r.size(); ++u) reach[u] |= r[u];
    }
    const unsigned bad_parity = p == Player::Eve ? 1 : 0;
    unsigned top = 0;
    for (const auto& e : pg.edges) top = std::max(top, e.priority);
    std::vector<char> sub(pg.edges.size());
    for (unsigned q = bad_parity; q <= top; q += 2) {
        for (std::size_t e = 0; e < pg.edges.size(); ++e) sub[e] = arc[e] && pg.edges[e].priority <= q;
        auto scc = scc_decomposition(g, sub, reach);
        for (const auto& comp : scc.components)
            for (auto e : comp.arcs)
                if (pg.edges[e].priority == q) return false;
    }
    return true;
}

} // namespace muller
