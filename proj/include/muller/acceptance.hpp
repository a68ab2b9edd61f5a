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
#include <string>
#include <unordered_set>
#include <variant>
#include <vector>

#include "colour_set.hpp"

namespace muller {

using ColourFamily = std::unordered_set<ColourSet, ColourSetHash>;

/// Family F of accepting colour sets over an explicit alphabet.
class MullerCondition {
public:
    MullerCondition() = default;
    MullerCondition(Alphabet alphabet, const std::vector<ColourSet>& accepting)
        : alphabet_(std::move(alphabet)) {
        for (auto c : accepting) add(c);
    }

    /// All non-empty subsets satisfying the predicate.
    template <class Pred>
    static MullerCondition from_predicate(Alphabet alphabet, Pred&& accept) {
        if (alphabet.size() > 24) throw scale_guard("predicate conditions are enumerated; alphabet too large");
        MullerCondition m(std::move(alphabet), {});
        const std::uint64_t limit = std::uint64_t{1} << m.alphabet_.size();
        for (std::uint64_t b = 1; b < limit; ++b)
            if (accept(ColourSet(b))) m.family_.insert(ColourSet(b));
        return m;
    }

    void add(ColourSet c) {
        if (!alphabet_.covers(c)) throw malformed("accepting set uses a colour outside the alphabet");
        family_.insert(c);
    }

    const Alphabet& alphabet() const { return alphabet_; }
    const ColourFamily& family() const { return family_; }
    bool accepts(ColourSet c) const { return family_.contains(c); }

    /// Accepting sets in ascending bitmask order.
    std::vector<ColourSet> sets() const {
        std::vector<ColourSet> v(family_.begin(), family_.end());
        std::sort(v.begin(), v.end());
        return v;
    }

    /// Restriction F ∩ P(sub), still over the full alphabet.
    MullerCondition restricted(ColourSet sub) const {
        MullerCondition m(alphabet_, {});
        for (auto c : family_)
            if (c.subset_of(sub)) m.family_.insert(c);
        return m;
    }

    /// Family complement within the non-empty subsets of the alphabet.
    MullerCondition complement() const {
        return from_predicate(alphabet_, [this](ColourSet c) { return !accepts(c); });
    }

    bool operator==(const MullerCondition& o) const { return alphabet_ == o.alphabet_ && family_ == o.family_; }

private:
    Alphabet alphabet_;
    ColourFamily family_;
};

struct RabinPair {
    ColourSet e;
    ColourSet f;
    bool operator==(const RabinPair&) const = default;
};

struct MullerAcc {
    ColourFamily accepting;
    bool operator==(const MullerAcc&) const = default;
};
/// Max-even parity; one priority per output colour.
struct ParityAcc {
    std::vector<unsigned> priority;
    bool operator==(const ParityAcc&) const = default;
};
struct RabinAcc {
    std::vector<RabinPair> pairs;
    bool operator==(const RabinAcc&) const = default;
};
struct StreettAcc {
    std::vector<RabinPair> pairs;
    bool operator==(const StreettAcc&) const = default;
};
struct GenBuchiAcc {
    std::vector<ColourSet> sets;
    bool operator==(const GenBuchiAcc&) const = default;
};
struct GenCoBuchiAcc {
    std::vector<ColourSet> sets;
    bool operator==(const GenCoBuchiAcc&) const = default;
};

/// Acceptance condition over an output alphabet of `colours` symbols.
struct Acceptance {
    using Kind = std::variant<MullerAcc, ParityAcc, RabinAcc, StreettAcc, GenBuchiAcc, GenCoBuchiAcc>;

    std::size_t colours = 0;
    Kind kind;

    bool operator==(const Acceptance&) const = default;

    static Acceptance muller(const MullerCondition& m) {
        return {m.alphabet().size(), MullerAcc{m.family()}};
    }
    static Acceptance parity(std::vector<unsigned> priority) {
        auto n = priority.size();
        return {n, ParityAcc{std::move(priority)}};
    }
    static Acceptance rabin(std::size_t colours, std::vector<RabinPair> pairs) { return {colours, RabinAcc{std::move(pairs)}}; }
    static Acceptance streett(std::size_t colours, std::vector<RabinPair> pairs) { return {colours, StreettAcc{std::move(pairs)}}; }
    static Acceptance gen_buchi(std::size_t colours, std::vector<ColourSet> sets) { return {colours, GenBuchiAcc{std::move(sets)}}; }
    static Acceptance gen_co_buchi(std::size_t colours, std::vector<ColourSet> sets) { return {colours, GenCoBuchiAcc{std::move(sets)}}; }

    template <class T> bool is() const { return std::holds_alternative<T>(kind); }
    template <class T> const T& as() const {
        if (auto* p = std::get_if<T>(&kind)) return *p;
        throw unsupported("acceptance condition is a " + kind_name() + " condition");
    }

    std::string kind_name() const {
        static const char* names[] = {"muller", "parity", "rabin", "streett", "genbuchi", "gencobuchi"};
        return names[kind.index()];
    }

    /// Throws unless every referenced colour lies in the output alphabet.
    void validate() const {
        const auto all = ColourSet::full(colours);
        auto check = [&](ColourSet c) {
            if (!c.subset_of(all)) throw malformed("acceptance refers to a colour outside the output alphabet");
        };
        std::visit([&](const auto& k) {
            using T = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<T, MullerAcc>) {
                for (auto c : k.accepting) check(c);
            } else if constexpr (std::is_same_v<T, ParityAcc>) {
                if (k.priority.size() != colours) throw malformed("parity acceptance needs one priority per colour");
            } else if constexpr (std::is_same_v<T, RabinAcc> || std::is_same_v<T, StreettAcc>) {
                for (auto& p : k.pairs) { check(p.e); check(p.f); }
            } else {
                for (auto c : k.sets) check(c);
            }
        }, kind);
    }
};

/// Whether a run whose infinitely-often colours are exactly `c` is accepted.
inline bool accepting_colour_set(const Acceptance& acc, ColourSet c) {
    if (c.empty()) throw precondition("acceptance queried on the empty colour set");
    if (!c.subset_of(ColourSet::full(acc.colours))) throw malformed("colour set has a colour outside the alphabet");
    return std::visit([c](const auto& k) -> bool {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, MullerAcc>) {
            return k.accepting.contains(c);
        } else if constexpr (std::is_same_v<T, ParityAcc>) {
            unsigned top = 0;
            for (auto i : c.members()) top = std::max(top, k.priority[i]);
            return top % 2 == 0;
        } else if constexpr (std::is_same_v<T, RabinAcc>) {
            return std::any_of(k.pairs.begin(), k.pairs.end(),
                               [c](const RabinPair& p) { return c.intersects(p.e) && !c.intersects(p.f); });
        } else if constexpr (std::is_same_v<T, StreettAcc>) {
            return std::all_of(k.pairs.begin(), k.pairs.end(),
                               [c](const RabinPair& p) { return !c.intersects(p.e) || c.intersects(p.f); });
        } else if constexpr (std::is_same_v<T, GenBuchiAcc>) {
            return std::all_of(k.sets.begin(), k.sets.end(), [c](ColourSet b) { return c.intersects(b); });
        } else {
            return std::any_of(k.sets.begin(), k.sets.end(), [c](ColourSet b) { return !c.intersects(b); });
        }
    }, acc.kind);
}

inline bool accepting_colour_set(const MullerCondition& m, ColourSet c) {
    return accepting_colour_set(Acceptance::muller(m), c);
}

/// Rabin <-> Streett and GenBuchi <-> GenCoBuchi with identical data: the complement condition.
inline Acceptance dualise(const Acceptance& acc) {
    return std::visit([&](const auto& k) -> Acceptance {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, RabinAcc>) return Acceptance::streett(acc.colours, k.pairs);
        else if constexpr (std::is_same_v<T, StreettAcc>) return Acceptance::rabin(acc.colours, k.pairs);
        else if constexpr (std::is_same_v<T, GenBuchiAcc>) return Acceptance::gen_co_buchi(acc.colours, k.sets);
        else if constexpr (std::is_same_v<T, GenCoBuchiAcc>) return Acceptance::gen_buchi(acc.colours, k.sets);
        else throw unsupported("cannot dualise a " + acc.kind_name() + " condition");
    }, acc.kind);
}

/// Explicit family of accepting sets described by any acceptance condition.
inline ColourFamily accepting_family(const Acceptance& acc) {
    if (acc.colours > 24) throw scale_guard("cannot enumerate subsets of more than 24 colours");
    ColourFamily out;
    const std::uint64_t limit = std::uint64_t{1} << acc.colours;
    for (std::uint64_t b = 1; b < limit; ++b)
        if (accepting_colour_set(acc, ColourSet(b))) out.insert(ColourSet(b));
    return out;
}

} // namespace muller
