#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "minstable/coalition.hpp"
#include "minstable/errors.hpp"
#include "minstable/voting_rule.hpp"

namespace minstable {

// All 2^n coalition masks sorted by (size, lexicographic members); the
// canonical reporting and enumeration order of the whole library.
inline std::vector<std::uint32_t> coalition_order(int n) {
    std::vector<std::uint32_t> order(1ULL << n);
    for (std::uint32_t m = 0; m < order.size(); ++m) order[m] = m;
    std::sort(order.begin(), order.end(),
              [](std::uint32_t a, std::uint32_t b) { return size_lex_less_mask(a, b); });
    return order;
}

// Truth table read as a big-endian integer over coalition_order; 128 bits
// covers n <= 7.
struct TableKey {
    std::uint64_t hi = 0;
    std::uint64_t lo = 0;
    bool operator==(const TableKey&) const = default;
    bool operator<(const TableKey& o) const { return hi != o.hi ? hi < o.hi : lo < o.lo; }
};

inline TableKey table_key(const TruthTable& t) {
    int n = t.players();
    if (n > 7) throw too_large("table keys limited to n <= 7");
    std::vector<std::uint32_t> order = coalition_order(n);
    std::uint64_t width = t.coalition_count();
    TableKey k;
    for (std::uint64_t pos = 0; pos < width; ++pos) {
        if (!t.test(order[pos])) continue;
        std::uint64_t sig = width - 1 - pos;
        if (sig >= 64)
            k.hi |= 1ULL << (sig - 64);
        else
            k.lo |= 1ULL << sig;
    }
    return k;
}

namespace detail {

// Depth-first assignment of truth values in (size, lex) coalition order,
// 0-branch before 1-branch, with monotonicity forcing. Visits every monotone
// table with v(empty)=0, v(N)=1 exactly once, in increasing TableKey order.
template <typename Fn>
void enumerate_monotone(int n, Fn&& emit) {
    std::vector<std::uint32_t> order = coalition_order(n);
    std::uint64_t count = 1ULL << n;
    std::uint64_t assigned = 0; // current table, bit per coalition mask

    auto rec = [&](auto&& self, std::uint64_t pos) -> void {
        if (pos == count) {
            emit(assigned);
            return;
        }
        std::uint32_t m = order[pos];
        bool forced = false;
        std::uint32_t rest = m;
        while (rest) {
            std::uint32_t sub = m ^ static_cast<std::uint32_t>(lowest_bit(rest));
            if ((assigned >> sub) & 1ULL) { forced = true; break; }
            rest &= rest - 1;
        }
        bool last = pos + 1 == count; // the grand coalition, which must win
        if (!forced && !last) self(self, pos + 1);
        assigned |= 1ULL << m;
        self(self, pos + 1);
        assigned &= ~(1ULL << m);
    };
    rec(rec, 1); // coalition 0 (the empty set) stays losing
}

} // namespace detail

// Calls `emit(bits)` with the compact truth table of every voting rule on n
// players (n <= 6), in deterministic enumeration order.
template <typename Fn>
void for_each_rule_table(int n, Fn&& emit) {
    if (n < 1) throw out_of_range_player("player count must be >= 1");
    if (n > 6) throw too_large("rule enumeration limited to n <= 6");
    detail::enumerate_monotone(n, emit);
}

// The deterministic stream of all voting rules on n players. Materializes the
// compact tables (one 64-bit word per rule) and builds VotingRule values on
// demand, so n = 6 (7,828,352 rules) stays affordable. Chunk by index ranges
// for parallel consumption.
class RuleStream {
public:
    explicit RuleStream(int n) : n_(n) {
        for_each_rule_table(n, [this](std::uint64_t bits) { tables_.push_back(bits); });
    }

    int players() const { return n_; }
    std::size_t size() const { return tables_.size(); }
    std::uint64_t compact(std::size_t i) const { return tables_[i]; }
    const std::vector<std::uint64_t>& compact_tables() const { return tables_; }

    VotingRule rule(std::size_t i) const { return VotingRule::from_compact_unchecked(n_, tables_[i]); }

private:
    int n_;
    std::vector<std::uint64_t> tables_;
};

inline RuleStream enumerate_rules(int n) { return RuleStream(n); }

} // namespace minstable
