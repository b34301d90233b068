#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "minstable/errors.hpp"

namespace minstable {

// A subset of the player set {1..n}. Players are 1-indexed throughout the
// library. Backed by a fixed-width bit vector so it scales to the symbolic
// regime (n up to 1000) as well as the explicit one (n <= 20).
class Coalition {
public:
    Coalition() = default;

    explicit Coalition(int n) : n_(check_n(n)), bits_(word_count(n), 0) {}

    Coalition(int n, std::initializer_list<int> members) : Coalition(n) {
        for (int p : members) add(p);
    }

    static Coalition of(int n, const std::vector<int>& members) {
        Coalition c(n);
        for (int p : members) c.add(p);
        return c;
    }

    static Coalition full(int n) {
        Coalition c(n);
        for (int w = 0; w < static_cast<int>(c.bits_.size()); ++w) c.bits_[w] = ~0ULL;
        c.trim();
        return c;
    }

    // Interprets bit i-1 of `mask` as membership of player i. Requires n <= 64.
    static Coalition from_mask(int n, std::uint64_t mask) {
        Coalition c(n);
        c.bits_[0] = mask;
        c.trim();
        return c;
    }

    int players() const { return n_; }

    bool contains(int player) const {
        check_player(player);
        return (bits_[word(player)] >> bit(player)) & 1ULL;
    }

    Coalition& add(int player) {
        check_player(player);
        bits_[word(player)] |= 1ULL << bit(player);
        return *this;
    }

    Coalition& remove(int player) {
        check_player(player);
        bits_[word(player)] &= ~(1ULL << bit(player));
        return *this;
    }

    int size() const {
        int c = 0;
        for (std::uint64_t w : bits_) c += std::popcount(w);
        return c;
    }

    bool empty() const {
        for (std::uint64_t w : bits_) if (w) return false;
        return true;
    }

    std::vector<int> members() const {
        std::vector<int> out;
        out.reserve(size());
        for (int p = 1; p <= n_; ++p)
            if ((bits_[word(p)] >> bit(p)) & 1ULL) out.push_back(p);
        return out;
    }

    std::uint64_t mask() const {
        if (n_ > 64) throw too_large("coalition mask requires n <= 64, got n=" + std::to_string(n_));
        return bits_.empty() ? 0 : bits_[0];
    }

    Coalition operator|(const Coalition& o) const {
        Coalition r = aligned(o);
        for (std::size_t w = 0; w < r.bits_.size(); ++w) r.bits_[w] = bits_[w] | o.bits_[w];
        return r;
    }

    Coalition operator&(const Coalition& o) const {
        Coalition r = aligned(o);
        for (std::size_t w = 0; w < r.bits_.size(); ++w) r.bits_[w] = bits_[w] & o.bits_[w];
        return r;
    }

    // Set difference.
    Coalition operator-(const Coalition& o) const {
        Coalition r = aligned(o);
        for (std::size_t w = 0; w < r.bits_.size(); ++w) r.bits_[w] = bits_[w] & ~o.bits_[w];
        return r;
    }

    Coalition complement() const {
        Coalition r(n_);
        for (std::size_t w = 0; w < r.bits_.size(); ++w) r.bits_[w] = ~bits_[w];
        r.trim();
        return r;
    }

    bool subset_of(const Coalition& o) const {
        aligned(o);
        for (std::size_t w = 0; w < bits_.size(); ++w)
            if (bits_[w] & ~o.bits_[w]) return false;
        return true;
    }

    bool intersects(const Coalition& o) const {
        aligned(o);
        for (std::size_t w = 0; w < bits_.size(); ++w)
            if (bits_[w] & o.bits_[w]) return true;
        return false;
    }

    bool operator==(const Coalition& o) const { return n_ == o.n_ && bits_ == o.bits_; }
    bool operator!=(const Coalition& o) const { return !(*this == o); }

    std::string to_string() const {
        std::string s = "{";
        bool first = true;
        for (int p : members()) {
            if (!first) s += ",";
            s += std::to_string(p);
            first = false;
        }
        return s + "}";
    }

private:
    static int check_n(int n) {
        if (n < 1 || n > 1000) throw out_of_range_player("player count must be in [1,1000], got " + std::to_string(n));
        return n;
    }

    void check_player(int p) const {
        if (p < 1 || p > n_)
            throw out_of_range_player("player " + std::to_string(p) + " outside {1.." + std::to_string(n_) + "}");
    }

    Coalition aligned(const Coalition& o) const {
        if (n_ != o.n_)
            throw mismatched_player_sets("coalitions on different player sets: n=" + std::to_string(n_) +
                                         " vs n=" + std::to_string(o.n_));
        return Coalition(n_);
    }

    static std::size_t word_count(int n) { return static_cast<std::size_t>((n + 63) / 64); }
    static std::size_t word(int p) { return static_cast<std::size_t>((p - 1) / 64); }
    static unsigned bit(int p) { return static_cast<unsigned>((p - 1) % 64); }

    void trim() {
        unsigned used = static_cast<unsigned>(n_ % 64);
        if (used) bits_.back() &= (1ULL << used) - 1;
    }

    int n_ = 0;
    std::vector<std::uint64_t> bits_;
};

// Orders coalitions by (size, lexicographic member list): {1,4} < {2,3}.
// For same-size masks the lexicographically smaller one owns the lowest
// differing player.
inline bool size_lex_less(const Coalition& a, const Coalition& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    auto ma = a.members(), mb = b.members();
    return ma < mb;
}

inline std::uint64_t lowest_bit(std::uint64_t x) { return x & (0 - x); }

// Mask-level (size, lex) comparison; used in the hot enumeration paths.
inline bool size_lex_less_mask(std::uint64_t a, std::uint64_t b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    if (pa != pb) return pa < pb;
    if (a == b) return false;
    return (lowest_bit(a ^ b) & a) != 0;
}

} // namespace minstable
