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

#include <string>
#include <vector>

#include <json.hpp>

#include "automaton.hpp"
#include "games.hpp"
#include "graph_reduction.hpp"
#include "zielonka.hpp"

namespace muller::io {

using nlohmann::json;

namespace detail {

inline json names(const Alphabet& a, ColourSet c) { return a.names_of(c); }

inline ColourSet set_from(const Alphabet& a, const json& j) {
    if (!j.is_array()) throw malformed("expected a list of symbols");
    ColourSet c;
    for (const auto& s : j) c.insert(a.index(s.get<std::string>()));
    return c;
}

inline Alphabet alphabet_from(const json& j) {
    if (!j.is_array()) throw malformed("expected a list of symbols");
    return Alphabet(j.get<std::vector<std::string>>());
}

inline std::size_t index_from(const json& j, std::size_t bound, const char* what) {
    if (!j.is_number_integer() || j.get<long long>() < 0 || static_cast<std::size_t>(j.get<long long>()) >= bound)
        throw malformed(std::string(what) + " out of range");
    return j.get<std::size_t>();
}

/// Runs a conversion, reporting any JSON type or key error as malformed input.
template <class F>
auto guarded(const char* what, F&& f) {
    try {
        return f();
    } catch (const json::exception& e) {
        throw malformed(std::string("invalid ") + what + ": " + e.what());
    }
}

} // namespace detail

inline json parse(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw malformed(std::string("not valid JSON: ") + e.what());
    }
}

// --- conditions ---

inline json to_json(const MullerCondition& f) {
    json acc = json::array();
    for (auto c : f.sets()) acc.push_back(detail::names(f.alphabet(), c));
    return {{"alphabet", f.alphabet().symbols()}, {"accepting", acc}};
}

inline MullerCondition condition_from_json(const json& j) {
    return detail::guarded("condition", [&] {
        auto alphabet = detail::alphabet_from(j.at("alphabet"));
        std::vector<ColourSet> acc;
        for (const auto& s : j.at("accepting")) {
            auto c = detail::set_from(alphabet, s);
            if (c.empty()) throw malformed("accepting sets must be non-empty");
            acc.push_back(c);
        }
        return MullerCondition(std::move(alphabet), acc);
    });
}

// --- automata ---

inline json to_json(const Acceptance& acc, const Alphabet& out) {
    auto set = [&](ColourSet c) { return detail::names(out, c); };
    return std::visit([&](const auto& k) -> json {
        using T = std::decay_t<decltype(k)>;
        json j{{"kind", acc.kind_name()}};
        if constexpr (std::is_same_v<T, MullerAcc>) {
            std::vector<ColourSet> sets(k.accepting.begin(), k.accepting.end());
            std::sort(sets.begin(), sets.end());
            j["accepting"] = json::array();
            for (auto c : sets) j["accepting"].push_back(set(c));
        } else if constexpr (std::is_same_v<T, ParityAcc>) {
            j["priorities"] = json::object();
            for (std::size_t i = 0; i < k.priority.size(); ++i) j["priorities"][out.name(i)] = k.priority[i];
        } else if constexpr (std::is_same_v<T, RabinAcc> || std::is_same_v<T, StreettAcc>) {
            j["pairs"] = json::array();
            for (const auto& p : k.pairs) j["pairs"].push_back({{"E", set(p.e)}, {"F", set(p.f)}});
        } else {
            j["sets"] = json::array();
            for (auto c : k.sets) j["sets"].push_back(set(c));
        }
        return j;
    }, acc.kind);
}

inline Acceptance acceptance_from_json(const json& j, const Alphabet& out) {
    const auto kind = j.at("kind").get<std::string>();
    const auto n = out.size();
    auto set = [&](const json& s) { return detail::set_from(out, s); };
    if (kind == "muller") {
        MullerAcc m;
        for (const auto& s : j.at("accepting")) m.accepting.insert(set(s));
        return {n, std::move(m)};
    }
    if (kind == "parity") {
        const auto& pr = j.at("priorities");
        if (!pr.is_object() || pr.size() != n) throw malformed("parity acceptance needs one priority per output symbol");
        std::vector<unsigned> p(n);
        for (const auto& [name, value] : pr.items()) {
            if (!value.is_number_unsigned()) throw malformed("priorities must be non-negative integers");
            p[out.index(name)] = value.get<unsigned>();
        }
        return Acceptance::parity(std::move(p));
    }
    if (kind == "rabin" || kind == "streett") {
        std::vector<RabinPair> pairs;
        for (const auto& p : j.at("pairs")) pairs.push_back({set(p.at("E")), set(p.at("F"))});
        return kind == "rabin" ? Acceptance::rabin(n, std::move(pairs)) : Acceptance::streett(n, std::move(pairs));
    }
    if (kind == "genbuchi" || kind == "gencobuchi") {
        std::vector<ColourSet> sets;
        for (const auto& s : j.at("sets")) sets.push_back(set(s));
        return kind == "genbuchi" ? Acceptance::gen_buchi(n, std::move(sets)) : Acceptance::gen_co_buchi(n, std::move(sets));
    }
    throw malformed("unknown acceptance kind '" + kind + "'");
}

inline json to_json(const Automaton& a) {
    json delta = json::array();
    for (std::size_t e = 0; e < a.edges(); ++e)
        delta.push_back({a.source(e), a.input.name(a.letter(e)), a.delta[e].next, a.output.name(a.delta[e].out)});
    return {{"states", a.states},
            {"initial", a.initial},
            {"input", a.input.symbols()},
            {"output", a.output.symbols()},
            {"delta", delta},
            {"acceptance", to_json(a.acceptance, a.output)}};
}

inline Automaton automaton_from_json(const json& j) {
    return detail::guarded("automaton", [&] {
        const auto states = j.at("states").get<std::size_t>();
        if (states == 0) throw malformed("automaton needs at least one state");
        auto input = detail::alphabet_from(j.at("input"));
        auto output = detail::alphabet_from(j.at("output"));
        const auto initial = detail::index_from(j.at("initial"), states, "initial state");
        std::vector<Transition> delta(states * input.size());
        std::vector<char> seen(delta.size(), 0);
        for (const auto& row : j.at("delta")) {
            if (!row.is_array() || row.size() != 4) throw malformed("delta rows are [state, input, next, output]");
            const auto q = detail::index_from(row[0], states, "delta state");
            const auto x = input.index(row[1].get<std::string>());
            const auto e = q * input.size() + x;
            if (seen[e]) throw malformed("delta has two rows for one state and input symbol");
            seen[e] = 1;
            delta[e] = {detail::index_from(row[2], states, "delta target"), output.index(row[3].get<std::string>())};
        }
        if (std::find(seen.begin(), seen.end(), 0) != seen.end()) throw malformed("delta is not complete");
        auto acc = acceptance_from_json(j.at("acceptance"), output);
        return Automaton(states, std::move(input), std::move(output), initial, std::move(delta), std::move(acc));
    });
}

// --- Zielonka trees ---

inline json to_json(const ZielonkaTree& t, const Alphabet& a) {
    json children = json::array();
    for (const auto& c : t.children) children.push_back(to_json(c, a));
    return {{"label", detail::names(a, t.label)}, {"accepting", t.accepting}, {"children", children}};
}

inline ZielonkaTree tree_from_json(const json& j, const Alphabet& a) {
    return detail::guarded("tree", [&] {
        ZielonkaTree t{detail::set_from(a, j.at("label")), j.at("accepting").get<bool>(), {}};
        for (const auto& c : j.at("children")) t.children.push_back(tree_from_json(c, a));
        return t;
    });
}

// --- games and strategies ---

inline json to_json(const Arena& g) {
    json vertices = json::array(), edges = json::array();
    for (std::size_t v = 0; v < g.vertices(); ++v)
        vertices.push_back({{"id", v}, {"owner", g.owner[v] == Player::Eve ? "eve" : "adam"}});
    for (const auto& e : g.edges)
        edges.push_back({{"from", e.from}, {"to", e.to}, {"colour", e.colour ? json(g.colours.name(*e.colour)) : json(nullptr)}});
    return {{"colours", g.colours.symbols()}, {"vertices", vertices}, {"initial", g.initial}, {"edges", edges}};
}

inline Arena arena_from_json(const json& j) {
    return detail::guarded("game", [&] {
        auto colours = detail::alphabet_from(j.at("colours"));
        const auto& vs = j.at("vertices");
        if (!vs.is_array() || vs.empty()) throw malformed("game needs a non-empty vertex list");
        std::vector<Player> owner(vs.size());
        std::vector<char> seen(vs.size(), 0);
        for (const auto& v : vs) {
            const auto id = detail::index_from(v.at("id"), vs.size(), "vertex id");
            if (seen[id]) throw malformed("duplicate vertex id " + std::to_string(id));
            seen[id] = 1;
            const auto o = v.at("owner").get<std::string>();
            if (o != "eve" && o != "adam") throw malformed("vertex owner must be \"eve\" or \"adam\"");
            owner[id] = o == "eve" ? Player::Eve : Player::Adam;
        }
        std::vector<Arena::Edge> edges;
        for (const auto& e : j.at("edges")) {
            Arena::Edge edge{detail::index_from(e.at("from"), vs.size(), "edge source"),
                             detail::index_from(e.at("to"), vs.size(), "edge target"), std::nullopt};
            const auto& c = e.at("colour");
            if (!c.is_null()) edge.colour = colours.index(c.get<std::string>());
            edges.push_back(edge);
        }
        const auto initial = detail::index_from(j.at("initial"), vs.size(), "initial vertex");
        return Arena(std::move(colours), std::move(owner), initial, std::move(edges));
    });
}

inline json to_json(const MemoryStrategy& s, const Arena& g) {
    const auto& m = s.memory;
    json update = json::array();
    for (std::size_t q = 0; q < m.states; ++q)
        for (std::size_t i = 0; i < m.width; ++i) {
            json key = m.kind == MemoryKind::Chromatic ? json(g.colours.name(i)) : json(i);
            update.push_back({q, key, m.update[q * m.width + i]});
        }
    json table = json::array();
    for (std::size_t v = 0; v < g.vertices(); ++v)
        for (std::size_t q = 0; q < m.states; ++q)
            if (s.table.at(v, q) != kNoEdge) table.push_back({{"vertex", v}, {"mstate", q}, {"edge", s.table.at(v, q)}});
    return {{"memory",
             {{"states", m.states},
              {"initial", m.initial},
              {"kind", m.kind == MemoryKind::Chromatic ? "chromatic" : "general"},
              {"update", update}}},
            {"table", table}};
}

inline MemoryStrategy strategy_from_json(const json& j, const Arena& g) {
    return detail::guarded("strategy", [&] {
        const auto& mj = j.at("memory");
        MemoryStrategy s;
        auto& m = s.memory;
        m.states = mj.at("states").get<std::size_t>();
        if (m.states == 0) throw malformed("memory needs at least one state");
        m.initial = detail::index_from(mj.at("initial"), m.states, "initial memory state");
        const auto kind = mj.at("kind").get<std::string>();
        if (kind != "chromatic" && kind != "general") throw malformed("memory kind must be \"chromatic\" or \"general\"");
        m.kind = kind == "chromatic" ? MemoryKind::Chromatic : MemoryKind::General;
        m.width = m.kind == MemoryKind::Chromatic ? g.colours.size() : g.edges.size();
        m.update.assign(m.states * m.width, kNoEdge);
        for (const auto& row : mj.at("update")) {
            if (!row.is_array() || row.size() != 3) throw malformed("update rows are [state, colour-or-edge, next]");
            const auto q = detail::index_from(row[0], m.states, "memory state");
            const auto i = m.kind == MemoryKind::Chromatic ? g.colours.index(row[1].get<std::string>())
                                                           : detail::index_from(row[1], g.edges.size(), "edge");
            auto& slot = m.update[q * m.width + i];
            if (slot != kNoEdge) throw malformed("memory update has two rows for one entry");
            slot = detail::index_from(row[2], m.states, "memory state");
        }
        if (std::find(m.update.begin(), m.update.end(), kNoEdge) != m.update.end())
            throw malformed("memory update is not total");
        s.table = StrategyTable(g.vertices(), m.states);
        for (const auto& row : j.at("table")) {
            const auto v = detail::index_from(row.at("vertex"), g.vertices(), "table vertex");
            const auto q = detail::index_from(row.at("mstate"), m.states, "table memory state");
            const auto e = detail::index_from(row.at("edge"), g.edges.size(), "table edge");
            if (g.owner[v] != Player::Eve) throw malformed("table entry for a vertex Eve does not own");
            if (g.edges[e].from != v) throw malformed("table edge does not leave its vertex");
            s.table.at(v, q) = e;
        }
        return s;
    });
}

// --- colourings ---

inline json to_json(const Colouring& c) { return {{"k", c.size()}, {"colouring", c.colour}}; }

inline Colouring colouring_from_json(const json& j) {
    return detail::guarded("colouring", [&] {
        Colouring c{j.at("colouring").get<std::vector<std::size_t>>()};
        for (auto x : c.colour)
            if (x == 0) throw malformed("colours are numbered from 1");
        return c;
    });
}

} // namespace muller::io
