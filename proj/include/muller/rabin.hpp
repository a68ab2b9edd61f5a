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
#include <atomic>
#include <optional>
#include <thread>
#include <unordered_map>
#include <vector>

#include "automaton.hpp"
#include "zielonka.hpp"

namespace muller {

/// Two rejecting cycle colour sets through a common state whose union is accepting.
struct TypenessWitness {
    std::size_t state = 0;
    ColourSet first;
    ColourSet second;
    bool operator==(const TypenessWitness&) const = default;
};

struct RabinTypenessReport {
    bool typeable = true;
    std::optional<TypenessWitness> witness;
};

/// Raised when a Rabin condition cannot be put on top of an automaton.
class NotRabinTypeable : public Error {
public:
    explicit NotRabinTypeable(TypenessWitness w)
        : Error(ErrorKind::Precondition, "automaton is not Rabin-typeable (witness at state " +
                                             std::to_string(w.state) + ")"),
          witness_(w) {}
    const TypenessWitness& witness() const { return witness_; }

private:
    TypenessWitness witness_;
};

namespace detail {

inline std::optional<TypenessWitness> first_violation(const std::vector<std::vector<ColourSet>>& realizable,
                                                      const Acceptance& acc) {
    for (std::size_t q = 0; q < realizable.size(); ++q) {
        std::vector<ColourSet> rejecting;
        for (auto c : realizable[q])
            if (!accepting_colour_set(acc, c)) rejecting.push_back(c);
        std::sort(rejecting.begin(), rejecting.end());
        for (std::size_t i = 0; i < rejecting.size(); ++i)
            for (std::size_t j = i + 1; j < rejecting.size(); ++j)
                if (accepting_colour_set(acc, rejecting[i] | rejecting[j]))
                    return TypenessWitness{q, rejecting[i], rejecting[j]};
    }
    return std::nullopt;
}

} // namespace detail

/// Rabin-typeness: no two rejecting cycles sharing a state have an accepting union.
/// Cycles sharing a state reduce to colour sets realizable at a common state.
inline RabinTypenessReport check_rabin_typeable(const Automaton& a) {
    auto w = detail::first_violation(realizable_cycle_sets_all(a), a.acceptance);
    return {!w.has_value(), w};
}

/// Re-derives a witness from scratch: both sets realizable at the state, rejecting, union accepting.
inline bool witness_holds(const Automaton& a, const TypenessWitness& w) {
    if (w.state >= a.states) return false;
    const auto sets = realizable_cycle_sets(a, w.state);
    auto realizable = [&](ColourSet c) { return std::find(sets.begin(), sets.end(), c) != sets.end(); };
    return realizable(w.first) && realizable(w.second) && !accepting_colour_set(a.acceptance, w.first) &&
           !accepting_colour_set(a.acceptance, w.second) && accepting_colour_set(a.acceptance, w.first | w.second);
}

/// Puts a Rabin condition on top of `a`: every transition is recoloured with its own edge, and
/// each accepting cycle ℓ contributes the pair (ℓ minus every rejecting cycle inside ℓ, all
/// edges outside ℓ). Exponential in the size of the strongly connected components.
inline Automaton synthesize_rabin_pairs(const Automaton& a, std::size_t max_component_edges = 20) {
    if (auto report = check_rabin_typeable(a); !report.typeable) throw NotRabinTypeable(*report.witness);
    if (a.edges() > kMaxAlphabet) throw scale_guard("too many transitions to use them as colours");

    const auto g = a.graph();
    const auto reach = reachable_from(g, a.initial);
    auto scc = scc_decomposition(g, {}, reach);

    std::vector<RabinPair> pairs;
    const ColourSet all_edges = ColourSet::full(a.edges());
    for (const auto& comp : scc.components) {
        if (!comp.nontrivial()) continue;
        const auto& arcs = comp.arcs;
        const std::size_t m = arcs.size();
        if (m > max_component_edges)
            throw scale_guard("component with " + std::to_string(m) + " edges exceeds the cycle enumeration limit");
        const std::uint64_t limit = std::uint64_t{1} << m;

        std::vector<std::uint64_t> src(m), dst(m);
        for (std::size_t i = 0; i < m; ++i) {
            src[i] = std::uint64_t{1} << a.source(arcs[i]);
            dst[i] = std::uint64_t{1} << a.delta[arcs[i]].next;
        }
        auto closure = [&](std::uint64_t mask, std::uint64_t start, bool forward) {
            std::uint64_t seen = start;
            for (bool grew = true; grew;) {
                grew = false;
                for (std::size_t i = 0; i < m; ++i) {
                    if (!((mask >> i) & 1U)) continue;
                    const auto from = forward ? src[i] : dst[i], to = forward ? dst[i] : src[i];
                    if ((seen & from) && !(seen & to)) {
                        seen |= to;
                        grew = true;
                    }
                }
            }
            return seen;
        };

        // 0 = not a cycle, 1 = rejecting cycle, 2 = accepting cycle.
        std::vector<std::uint8_t> status(limit, 0);
        for (std::uint64_t mask = 1; mask < limit; ++mask) {
            std::uint64_t verts = 0, targets = 0;
            ColourSet colours;
            for (std::size_t i = 0; i < m; ++i)
                if ((mask >> i) & 1U) {
                    verts |= src[i];
                    targets |= dst[i];
                    colours.insert(a.delta[arcs[i]].out);
                }
            if (targets != verts) continue;
            const std::uint64_t start = verts & (~verts + 1);
            if (closure(mask, start, true) != verts || closure(mask, start, false) != verts) continue;
            status[mask] = accepting_colour_set(a.acceptance, colours) ? 2 : 1;
        }

        // covered[S] = union of the rejecting cycles contained in S.
        std::vector<std::uint64_t> covered(limit, 0);
        for (std::uint64_t mask = 1; mask < limit; ++mask) {
            std::uint64_t u = status[mask] == 1 ? mask : 0;
            for (auto b = mask; b != 0; b &= b - 1) u |= covered[mask & ~(b & (~b + 1))];
            covered[mask] = u;
        }

        auto to_edges = [&](std::uint64_t mask) {
            ColourSet c;
            for (std::size_t i = 0; i < m; ++i)
                if ((mask >> i) & 1U) c.insert(arcs[i]);
            return c;
        };
        for (std::uint64_t mask = 1; mask < limit; ++mask) {
            if (status[mask] != 2) continue;
            const ColourSet cyc = to_edges(mask);
            RabinPair p{to_edges(mask & ~covered[mask]), all_edges - cyc};
            if (!p.e.empty() && std::find(pairs.begin(), pairs.end(), p) == pairs.end()) pairs.push_back(p);
        }
    }

    std::vector<std::string> names;
    std::vector<Transition> delta;
    for (std::size_t e = 0; e < a.edges(); ++e) {
        names.push_back(std::to_string(a.source(e)) + ":" + a.input.name(a.letter(e)));
        delta.push_back({a.delta[e].next, e});
    }
    return Automaton(a.states, a.input, Alphabet(std::move(names)), a.initial, std::move(delta),
                     Acceptance::rabin(a.edges(), std::move(pairs)));
}

/// Parity condition rewritten as Rabin pairs: for each even p, (colours of priority p, colours above p).
inline Automaton parity_as_rabin(const Automaton& a) {
    const auto& pr = a.acceptance.as<ParityAcc>().priority;
    std::vector<RabinPair> pairs;
    for (std::size_t i = 0; i < pr.size(); ++i) {
        if (pr[i] % 2) continue;
        RabinPair p;
        for (std::size_t j = 0; j < pr.size(); ++j) {
            if (pr[j] == pr[i]) p.e.insert(j);
            if (pr[j] > pr[i]) p.f.insert(j);
        }
        if (std::find(pairs.begin(), pairs.end(), p) == pairs.end()) pairs.push_back(p);
    }
    auto r = a;
    r.acceptance = Acceptance::rabin(a.output.size(), std::move(pairs));
    return r;
}

/// Synchronous product restricted to the part reachable from the pair of initial states.
struct Product {
    std::vector<std::pair<std::size_t, std::size_t>> states;
    Digraph graph;
    std::vector<std::size_t> left_out;
    std::vector<std::size_t> right_out;
};

inline Product synchronous_product(const Automaton& a, const Automaton& b, std::size_t max_states = 1u << 20) {
    if (!(a.input == b.input)) throw malformed("automata have different input alphabets");
    Product p;
    std::unordered_map<std::size_t, std::size_t> id;
    auto key = [&](std::size_t x, std::size_t y) { return x * b.states + y; };
    auto intern = [&](std::size_t x, std::size_t y) {
        auto [it, fresh] = id.emplace(key(x, y), p.states.size());
        if (fresh) {
            if (p.states.size() >= max_states) throw scale_guard("product exceeds " + std::to_string(max_states) + " states");
            p.states.push_back({x, y});
            p.graph.out.emplace_back();
        }
        return it->second;
    };
    intern(a.initial, b.initial);
    for (std::size_t i = 0; i < p.states.size(); ++i) {
        const auto [x, y] = p.states[i];
        for (std::size_t l = 0; l < a.input.size(); ++l) {
            const auto& ta = a.step(x, l);
            const auto& tb = b.step(y, l);
            const auto j = intern(ta.next, tb.next);
            p.graph.add_arc(i, j);
            p.left_out.push_back(ta.out);
            p.right_out.push_back(tb.out);
        }
    }
    return p;
}

namespace detail {

/// Is there a cycle within `active` that meets the Rabin pair's E (left colours) and satisfies
/// every Streett pair (right colours)? Classical recursive SCC refinement.
inline bool rabin_streett_nonempty(const Product& p, std::vector<char> active, const RabinPair& rabin,
                                   const std::vector<RabinPair>& streett) {
    std::vector<std::vector<char>> work{std::move(active)};
    while (!work.empty()) {
        auto cur = std::move(work.back());
        work.pop_back();
        auto scc = scc_decomposition(p.graph, cur);
        for (const auto& comp : scc.components) {
            if (!comp.nontrivial()) continue;
            ColourSet right;
            bool meets_e = false;
            for (auto e : comp.arcs) {
                right.insert(p.right_out[e]);
                meets_e = meets_e || rabin.e.contains(p.left_out[e]);
            }
            if (!meets_e) continue;
            ColourSet remove;
            for (const auto& s : streett)
                if (right.intersects(s.e) && !right.intersects(s.f)) remove |= s.e;
            if (remove.empty()) return true;
            std::vector<char> next(cur.size(), 0);
            for (auto e : comp.arcs) next[e] = !remove.contains(p.right_out[e]);
            work.push_back(std::move(next));
        }
    }
    return false;
}

/// L(a) ⊆ L(b) for Rabin automata: no reachable cycle is Rabin-accepted by a and accepted by
/// the Streett dual of b.
inline bool rabin_contained(const Automaton& a, const Automaton& b) {
    const auto& ra = a.acceptance.as<RabinAcc>();
    const auto& rb = b.acceptance.as<RabinAcc>();
    const auto p = synchronous_product(a, b);
    for (const auto& pair : ra.pairs) {
        std::vector<char> active(p.graph.arcs.size());
        for (std::size_t e = 0; e < active.size(); ++e) active[e] = !pair.f.contains(p.left_out[e]);
        if (rabin_streett_nonempty(p, std::move(active), pair, rb.pairs)) return false;
    }
    return true;
}

} // namespace detail

/// Language equivalence of deterministic Rabin automata in polynomial time.
inline bool rabin_equivalent(const Automaton& a, const Automaton& b) {
    if (!(a.input == b.input)) throw malformed("automata have different input alphabets");
    return detail::rabin_contained(a, b) && detail::rabin_contained(b, a);
}

/// Brute-force equivalence for any acceptance kinds: every realizable pair of output colour
/// sets in the product must be accepted by both or by neither.
inline bool muller_equivalent(const Automaton& a, const Automaton& b, std::size_t max_product_states = 4096) {
    if (!(a.input == b.input)) throw malformed("automata have different input alphabets");
    const std::size_t shift = a.output.size();
    if (shift + b.output.size() > kMaxAlphabet) throw scale_guard("combined output alphabets exceed 64 colours");
    const auto p = synchronous_product(a, b, max_product_states);
    std::vector<ColourSet> label(p.graph.arcs.size());
    for (std::size_t e = 0; e < label.size(); ++e)
        label[e] = ColourSet::singleton(p.left_out[e]) | ColourSet::singleton(p.right_out[e] + shift);
    const ColourSet left_mask = ColourSet::full(shift);
    for (auto d : cycle_label_sets(p.graph, label)) {
        const ColourSet left = d & left_mask;
        const ColourSet right(d.bits() >> shift);
        if (accepting_colour_set(a.acceptance, left) != accepting_colour_set(b.acceptance, right)) return false;
    }
    return true;
}

struct RabinSizeResult {
    /// Least size found; empty when no structure of size <= k_max admits a Rabin condition.
    std::optional<std::size_t> size;
    /// Muller automaton (output = input, condition F) on the witness transition structure.
    std::optional<Automaton> witness;
};

namespace detail {

/// Partial transition structure over the letters of F; -1 marks an undefined transition.
/// Detects two rejecting cycles through a common state with accepting union, using only the
/// defined transitions (such a violation survives any completion).
class StructureChecker {
public:
    StructureChecker(const MullerCondition& f, std::size_t k) : f_(f), k_(k), n_(f.alphabet().size()) {
        if (n_ > 16) throw scale_guard("structure search enumerates colour subsets; at most 16 colours");
        if (k_ > 64) throw scale_guard("structure search supports at most 64 states");
        conflicts_.resize(std::size_t{1} << n_);
        const std::uint64_t limit = std::uint64_t{1} << n_;
        for (std::uint64_t x = 1; x < limit; ++x) {
            if (f_.accepts(ColourSet(x))) continue;
            for (std::uint64_t y = x + 1; y < limit; ++y)
                if (!f_.accepts(ColourSet(y)) && f_.accepts(ColourSet(x | y))) conflicts_[x].push_back(y);
        }
    }

    bool violates(const std::vector<int>& delta) const {
        const std::uint64_t limit = std::uint64_t{1} << n_;
        // rejecting[q] = rejecting sets realizable at q, as masks.
        std::vector<std::vector<std::uint64_t>> rejecting(k_);
        std::vector<std::uint64_t> reach(k_);
        for (std::uint64_t c = 1; c < limit; ++c) {
            if (f_.accepts(ColourSet(c))) continue;
            for (std::size_t q = 0; q < k_; ++q) {
                std::uint64_t r = 0;
                for (std::size_t x = 0; x < n_; ++x) {
                    const int t = delta[q * n_ + x];
                    if (t >= 0 && ((c >> x) & 1U)) r |= std::uint64_t{1} << t;
                }
                reach[q] = r;
            }
            for (bool grew = true; grew;) {
                grew = false;
                for (std::size_t q = 0; q < k_; ++q) {
                    std::uint64_t r = reach[q];
                    for (auto b = reach[q]; b != 0; b &= b - 1) r |= reach[static_cast<std::size_t>(std::countr_zero(b))];
                    if (r != reach[q]) {
                        reach[q] = r;
                        grew = true;
                    }
                }
            }
            for (std::size_t q = 0; q < k_; ++q) {
                if (!((reach[q] >> q) & 1U)) continue;
                std::uint64_t comp = 0;
                for (auto b = reach[q]; b != 0; b &= b - 1) {
                    auto r = static_cast<std::size_t>(std::countr_zero(b));
                    if ((reach[r] >> q) & 1U) comp |= std::uint64_t{1} << r;
                }
                std::uint64_t letters = 0;
                for (auto b = comp; b != 0; b &= b - 1) {
                    auto r = static_cast<std::size_t>(std::countr_zero(b));
                    for (std::size_t x = 0; x < n_; ++x) {
                        const int t = delta[r * n_ + x];
                        if (t >= 0 && ((c >> x) & 1U) && ((comp >> t) & 1U)) letters |= std::uint64_t{1} << x;
                    }
                }
                if (letters == c) rejecting[q].push_back(c);
            }
        }
        for (std::size_t q = 0; q < k_; ++q) {
            const auto& r = rejecting[q];
            for (std::size_t i = 0; i < r.size(); ++i) {
                const auto& partners = conflicts_[r[i]];
                if (partners.empty()) continue;
                for (std::size_t j = i + 1; j < r.size(); ++j)
                    if (std::binary_search(partners.begin(), partners.end(), r[j])) return true;
            }
        }
        return false;
    }

private:
    const MullerCondition& f_;
    std::size_t k_;
    std::size_t n_;
    std::vector<std::vector<std::uint64_t>> conflicts_;
};

/// Canonical (BFS-numbered, all states reachable) transition structures with k states,
/// filled row-major; returns the first one passing the typeness check, starting from a prefix.
class StructureSearch {
public:
    StructureSearch(const MullerCondition& f, std::size_t k)
        : checker_(f, k), k_(k), n_(f.alphabet().size()), delta_(k * n_, -1) {}

    /// All canonical prefixes of the given length, in search order.
    std::vector<std::vector<int>> prefixes(std::size_t length) {
        std::vector<std::vector<int>> out;
        collect(0, 0, length, out);
        return out;
    }

    std::optional<std::vector<int>> search_from(const std::vector<int>& prefix) {
        std::fill(delta_.begin(), delta_.end(), -1);
        int max_used = 0;
        for (std::size_t i = 0; i < prefix.size(); ++i) {
            delta_[i] = prefix[i];
            max_used = std::max(max_used, prefix[i]);
        }
        if (checker_.violates(delta_)) return std::nullopt;
        if (dfs(prefix.size(), max_used)) return delta_;
        return std::nullopt;
    }

private:
    bool row_reachable(std::size_t pos, int max_used) const {
        return pos % n_ != 0 || static_cast<int>(pos / n_) <= max_used;
    }

    void collect(std::size_t pos, int max_used, std::size_t length, std::vector<std::vector<int>>& out) {
        if (pos == length || pos == delta_.size()) {
            out.emplace_back(delta_.begin(), delta_.begin() + static_cast<std::ptrdiff_t>(pos));
            return;
        }
        if (!row_reachable(pos, max_used)) return;
        const int top = std::min<int>(static_cast<int>(k_) - 1, max_used + 1);
        for (int t = 0; t <= top; ++t) {
            delta_[pos] = t;
            collect(pos + 1, std::max(max_used, t), length, out);
        }
        delta_[pos] = -1;
    }

    bool dfs(std::size_t pos, int max_used) {
        if (pos == delta_.size()) return max_used == static_cast<int>(k_) - 1;
        if (!row_reachable(pos, max_used)) return false;
        // Each remaining transition introduces at most one new state.
        if (static_cast<std::size_t>(static_cast<int>(k_) - 1 - max_used) > delta_.size() - pos) return false;
        const int top = std::min<int>(static_cast<int>(k_) - 1, max_used + 1);
        for (int t = 0; t <= top; ++t) {
            delta_[pos] = t;
            if (!checker_.violates(delta_) && dfs(pos + 1, std::max(max_used, t))) return true;
        }
        delta_[pos] = -1;
        return false;
    }

    StructureChecker checker_;
    std::size_t k_;
    std::size_t n_;
    std::vector<int> delta_;
};

inline Automaton structure_automaton(const MullerCondition& f, std::size_t k, const std::vector<int>& delta) {
    const std::size_t n = f.alphabet().size();
    std::vector<Transition> d;
    for (std::size_t i = 0; i < k * n; ++i) d.push_back({static_cast<std::size_t>(delta[i]), i % n});
    return Automaton(k, f.alphabet(), f.alphabet(), 0, std::move(d), Acceptance::muller(f));
}

} // namespace detail

/// Least k <= k_max such that some k-state transition structure, read as the Muller automaton
/// δ(m, a) = (μ(m, a), a) with condition F, admits a Rabin condition on top.
/// The search for each k is split by transition prefix across `threads` workers; the reported
/// witness is the first one in sequential search order whatever the thread count.
inline RabinSizeResult min_rabin_size(const MullerCondition& f, std::size_t k_max, std::size_t threads = 1) {
    if (k_max == 0) throw precondition("k_max must be at least 1");
    threads = std::max<std::size_t>(threads, 1);
    const std::size_t n = f.alphabet().size();
    for (std::size_t k = 1; k <= k_max; ++k) {
        detail::StructureSearch planner(f, k);
        const auto prefixes = planner.prefixes(std::min<std::size_t>(k * n, 2 * n));
        std::vector<std::optional<std::vector<int>>> found(prefixes.size());
        std::atomic<std::size_t> best{prefixes.size()};
        std::atomic<std::size_t> next{0};
        auto worker = [&]() {
            detail::StructureSearch search(f, k);
            for (std::size_t i; (i = next.fetch_add(1)) < prefixes.size();) {
                if (i > best.load()) break;
                found[i] = search.search_from(prefixes[i]);
                if (found[i]) {
                    auto cur = best.load();
                    while (i < cur && !best.compare_exchange_weak(cur, i)) {}
                }
            }
        };
        if (threads == 1) {
            worker();
        } else {
            std::vector<std::thread> pool;
            for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
            for (auto& th : pool) th.join();
        }
        for (std::size_t i = 0; i < found.size(); ++i)
            if (found[i]) return {k, detail::structure_automaton(f, k, *found[i])};
    }
    return {};
}

/// Chromatic memory requirements of F; equal to the least Rabin automaton size for L_F.
inline std::optional<std::size_t> mem_chrom(const MullerCondition& f, std::size_t k_max, std::size_t threads = 1) {
    return min_rabin_size(f, k_max, threads).size;
}

} // namespace muller
