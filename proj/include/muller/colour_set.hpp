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

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <unordered_map>
#include <vector>

#include "error.hpp"

namespace muller {

/// Maximum number of symbols in any alphabet. Colour sets are 64-bit masks.
inline constexpr std::size_t kMaxAlphabet = 64;

/// A subset of an alphabet, stored as a bitmask over symbol indices.
class ColourSet {
public:
    constexpr ColourSet() = default;
    constexpr explicit ColourSet(std::uint64_t bits) : bits_(bits) {}
    constexpr ColourSet(std::initializer_list<std::size_t> members) {
        for (auto m : members) bits_ |= std::uint64_t{1} << m;
    }

    static constexpr ColourSet singleton(std::size_t i) { return ColourSet(std::uint64_t{1} << i); }
    static constexpr ColourSet full(std::size_t n) {
        return ColourSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr bool contains(std::size_t i) const { return (bits_ >> i) & 1U; }
    constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
    constexpr bool subset_of(ColourSet o) const { return (bits_ & ~o.bits_) == 0; }
    constexpr bool intersects(ColourSet o) const { return (bits_ & o.bits_) != 0; }

    constexpr void insert(std::size_t i) { bits_ |= std::uint64_t{1} << i; }
    constexpr void erase(std::size_t i) { bits_ &= ~(std::uint64_t{1} << i); }

    constexpr ColourSet operator|(ColourSet o) const { return ColourSet(bits_ | o.bits_); }
    constexpr ColourSet operator&(ColourSet o) const { return ColourSet(bits_ & o.bits_); }
    constexpr ColourSet operator-(ColourSet o) const { return ColourSet(bits_ & ~o.bits_); }
    constexpr ColourSet& operator|=(ColourSet o) { bits_ |= o.bits_; return *this; }
    constexpr ColourSet& operator&=(ColourSet o) { bits_ &= o.bits_; return *this; }

    constexpr auto operator<=>(const ColourSet&) const = default;

    /// Member indices in ascending order.
    std::vector<std::size_t> members() const {
        std::vector<std::size_t> out;
        for (auto b = bits_; b != 0; b &= b - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
        return out;
    }

    /// Highest member; the set must be non-empty.
    constexpr std::size_t max() const { return 63U - static_cast<std::size_t>(std::countl_zero(bits_)); }
    constexpr std::size_t min() const { return static_cast<std::size_t>(std::countr_zero(bits_)); }

private:
    std::uint64_t bits_ = 0;
};

struct ColourSetHash {
    std::size_t operator()(ColourSet c) const noexcept { return std::hash<std::uint64_t>{}(c.bits()); }
};

/// Ordered list of distinct symbol names. The order is canonical.
class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
        if (symbols_.empty()) throw malformed("alphabet must be non-empty");
        if (symbols_.size() > kMaxAlphabet)
            throw malformed("alphabet has " + std::to_string(symbols_.size()) + " symbols; at most " +
                            std::to_string(kMaxAlphabet) + " are supported");
        for (std::size_t i = 0; i < symbols_.size(); ++i) {
            if (!index_.emplace(symbols_[i], i).second)
                throw malformed("duplicate symbol '" + symbols_[i] + "' in alphabet");
        }
    }

    /// Alphabet {"0", ..., "n-1"} or with a prefix, e.g. {"1", ..., "n"} for offset 1.
    static Alphabet numbered(std::size_t n, std::size_t offset = 0, const std::string& prefix = "") {
        std::vector<std::string> s;
        s.reserve(n);
        for (std::size_t i = 0; i < n; ++i) s.push_back(prefix + std::to_string(i + offset));
        return Alphabet(std::move(s));
    }

    std::size_t size() const { return symbols_.size(); }
    const std::string& name(std::size_t i) const { return symbols_.at(i); }
    const std::vector<std::string>& symbols() const { return symbols_; }
    ColourSet all() const { return ColourSet::full(size()); }

    std::size_t index(const std::string& s) const {
        auto it = index_.find(s);
        if (it == index_.end()) throw malformed("symbol '" + s + "' is not in the alphabet");
        return it->second;
    }
    bool has(const std::string& s) const { return index_.contains(s); }

    ColourSet set_of(const std::vector<std::string>& names) const {
        ColourSet c;
        for (const auto& n : names) c.insert(index(n));
        return c;
    }
    std::vector<std::string> names_of(ColourSet c) const {
        std::vector<std::string> out;
        for (auto i : c.members()) {
            if (i >= size()) throw malformed("colour index " + std::to_string(i) + " outside alphabet");
            out.push_back(symbols_[i]);
        }
        return out;
    }
    bool covers(ColourSet c) const { return c.subset_of(all()); }

    bool operator==(const Alphabet& o) const { return symbols_ == o.symbols_; }

private:
    std::vector<std::string> symbols_;
    std::unordered_map<std::string, std::size_t> index_;
};

} // namespace muller
