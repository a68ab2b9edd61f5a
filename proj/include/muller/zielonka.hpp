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
#include <functional>
#include <string>
#include <vector>

#include "acceptance.hpp"
#include "automaton.hpp"

namespace muller {

/// Zielonka tree of a Muller condition. Children are the maximal subsets of the label whose
/// membership in F is opposite to the label's, ordered by ascending bitmask.
struct ZielonkaTree {
    ColourSet label;
    bool accepting = false;
    std::vector<ZielonkaTree> children;

    bool is_leaf() const { return children.empty(); }

    /// Number of nodes on the longest root-to-leaf path; a leaf has height 1.
    std::size_t height() const {
        std::size_t h = 0;
        for (const auto& c : children) h = std::max(h, c.height());
        return h + 1;
    }

    std::size_t leaves() const {
        if (is_leaf()) return 1;
        std::size_t n = 0;
        for (const auto& c : children) n += c.leaves();
        return n;
    }

    std::size_t nodes() const {
        std::size_t n = 1;
        for (const auto& c : children) n += c.nodes();
        return n;
    }

    void canonicalise() {
        for (auto& c : children) c.canonicalise();
        std::sort(children.begin(), children.end(),
                  [](const ZielonkaTree& x, const ZielonkaTree& y) { return x.label < y.label; });
    }

    bool operator==(const ZielonkaTree&) const = default;
};

/// ⊆-maximal members, ascending by bitmask.
inline std::vector<ColourSet> max_inclusion(std::vector<ColourSet> family) {
    std::sort(family.begin(), family.end());
    family.erase(std::unique(family.begin(), family.end()), family.end());
    std::vector<ColourSet> out;
    // A strict superset has a strictly larger mask, so scanning downwards sees supersets first.
    for (auto it = family.rbegin(); it != family.rend(); ++it) {
        const ColourSet c = *it;
        if (std::none_of(out.begin(), out.end(), [c](ColourSet m) { return c.subset_of(m); })) out.push_back(c);
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace detail {

inline ZielonkaTree zielonka_node(const MullerCondition& f, ColourSet label) {
    ZielonkaTree node{label, f.accepts(label), {}};
    std::vector<ColourSet> maximal;
    // Proper non-empty submasks, descending: supersets come before their subsets.
    for (std::uint64_t sub = (label.bits() - 1) & label.bits(); sub != 0; sub = (sub - 1) & label.bits()) {
        const ColourSet c(sub);
        if (f.accepts(c) == node.accepting) continue;
        if (std::any_of(maximal.begin(), maximal.end(), [c](ColourSet m) { return c.subset_of(m); })) continue;
        maximal.push_back(c);
    }
    std::sort(maximal.begin(), maximal.end());
    for (auto c : maximal) node.children.push_back(zielonka_node(f, c));
    return node;
}

} // namespace detail

inline ZielonkaTree zielonka_tree(const MullerCondition& f) {
    if (f.alphabet().size() > 24) throw scale_guard("Zielonka tree construction enumerates subsets; at most 24 colours");
    return detail::zielonka_node(f, f.alphabet().all());
}

/// The memory number m_Z: 1 at leaves, max below rejecting nodes, sum below accepting nodes.
inline std::size_t mem_gen(const ZielonkaTree& t) {
    if (t.is_leaf()) return 1;
    std::size_t acc = 0;
    for (const auto& c : t.children) acc = t.accepting ? acc + mem_gen(c) : std::max(acc, mem_gen(c));
    return acc;
}
inline std::size_t mem_gen(const MullerCondition& f) { return mem_gen(zielonka_tree(f)); }

inline bool is_half_positional(const ZielonkaTree& t) {
    if (t.accepting && t.children.size() > 1) return false;
    return std::all_of(t.children.begin(), t.children.end(), [](const ZielonkaTree& c) { return is_half_positional(c); });
}
inline bool is_half_positional(const MullerCondition& f) { return is_half_positional(zielonka_tree(f)); }

inline bool is_genbuchi_recognizable(const ZielonkaTree& t) {
    const auto h = t.height();
    return h == 1 || (h == 2 && t.accepting);
}
inline bool is_genbuchi_recognizable(const MullerCondition& f) { return is_genbuchi_recognizable(zielonka_tree(f)); }

struct PriorityUsage {
    std::size_t count = 0;
    bool top_even = false;
};

/// Priority span of the Zielonka-tree parity automaton: its height, top parity from the root.
inline PriorityUsage parity_priorities_used(const ZielonkaTree& t) { return {t.height(), t.accepting}; }
inline PriorityUsage parity_priorities_used(const MullerCondition& f) { return parity_priorities_used(zielonka_tree(f)); }

struct MemoryRequirements {
    std::size_t mem_gen = 1;
    bool half_positional = true;
    bool genbuchi_recognizable = true;
    std::size_t parity_priorities_used = 1;
};

inline MemoryRequirements memory_requirements(const MullerCondition& f) {
    const auto t = zielonka_tree(f);
    return {mem_gen(t), is_half_positional(t), is_genbuchi_recognizable(t), t.height()};
}

/// Parity automaton whose states are the leaves of the tree (in left-to-right order).
/// On letter a from leaf l, the deepest ancestor n of l containing a emits its priority; the run
/// stays at l if n = l and otherwise moves to the leftmost leaf of the child of n after the one
/// holding l (cyclically).
inline Automaton zt_to_parity(const ZielonkaTree& tree, const Alphabet& input) {
    struct Node {
        const ZielonkaTree* t;
        std::size_t parent;
        std::size_t depth;
        std::size_t index_in_parent;
        std::vector<std::size_t> children;
        std::size_t leftmost_leaf = 0;
    };
    constexpr std::size_t none = static_cast<std::size_t>(-1);
    std::vector<Node> nodes;
    std::vector<std::size_t> leaf_nodes;

    std::function<std::size_t(const ZielonkaTree&, std::size_t, std::size_t, std::size_t)> flatten =
        [&](const ZielonkaTree& t, std::size_t parent, std::size_t depth, std::size_t idx) {
            const std::size_t id = nodes.size();
            nodes.push_back({&t, parent, depth, idx, {}, 0});
            if (t.is_leaf()) {
                nodes[id].leftmost_leaf = leaf_nodes.size();
                leaf_nodes.push_back(id);
            }
            for (std::size_t i = 0; i < t.children.size(); ++i) {
                auto c = flatten(t.children[i], id, depth + 1, i);
                nodes[id].children.push_back(c);
            }
            if (!t.is_leaf()) nodes[id].leftmost_leaf = nodes[nodes[id].children.front()].leftmost_leaf;
            return id;
        };
    flatten(tree, none, 0, 0);

    const std::size_t h = tree.height();
    const std::size_t offset = ((h - 1) % 2 == 0) == tree.accepting ? 0 : 1;
    auto priority = [&](std::size_t node) { return h - 1 - nodes[node].depth + offset; };

    for (std::size_t x = 0; x < input.size(); ++x)
        if (!tree.label.contains(x)) throw malformed("tree root does not cover input letter '" + input.name(x) + "'");

    std::vector<Transition> delta;
    delta.reserve(leaf_nodes.size() * input.size());
    for (std::size_t l = 0; l < leaf_nodes.size(); ++l) {
        for (std::size_t x = 0; x < input.size(); ++x) {
            std::size_t n = leaf_nodes[l], below = none;
            while (!nodes[n].t->label.contains(x)) {
                below = n;
                n = nodes[n].parent;
            }
            std::size_t next = l;
            if (below != none) {
                const auto& sib = nodes[n].children;
                const auto succ = sib[(nodes[below].index_in_parent + 1) % sib.size()];
                next = nodes[succ].leftmost_leaf;
            }
            delta.push_back({next, priority(n) - offset});
        }
    }

    std::vector<std::string> names;
    std::vector<unsigned> prio;
    for (std::size_t p = offset; p < h + offset; ++p) {
        names.push_back(std::to_string(p));
        prio.push_back(static_cast<unsigned>(p));
    }
    return Automaton(leaf_nodes.size(), input, Alphabet(std::move(names)), 0, std::move(delta),
                     Acceptance::parity(std::move(prio)));
}

inline Automaton zt_to_parity(const MullerCondition& f) { return zt_to_parity(zielonka_tree(f), f.alphabet()); }

/// ASCII rendering; accepting labels in round brackets, rejecting ones in square brackets.
inline std::string render_tree(const ZielonkaTree& t, const Alphabet& alphabet) {
    std::string out;
    auto label = [&](const ZielonkaTree& n) {
        std::string s = n.accepting ? "(" : "[";
        const auto names = alphabet.names_of(n.label);
        for (std::size_t i = 0; i < names.size(); ++i) s += (i ? "," : "") + names[i];
        return s + (n.accepting ? ")" : "]");
    };
    std::function<void(const ZielonkaTree&, const std::string&, bool, bool)> walk =
        [&](const ZielonkaTree& n, const std::string& indent, bool last, bool root) {
            out += root ? "" : indent + (last ? "`-- " : "|-- ");
            out += label(n) + "\n";
            const std::string child_indent = root ? "" : indent + (last ? "    " : "|   ");
            for (std::size_t i = 0; i < n.children.size(); ++i)
                walk(n.children[i], child_indent, i + 1 == n.children.size(), false);
        };
    walk(t, "", true, true);
    return out;
}

} // namespace muller
