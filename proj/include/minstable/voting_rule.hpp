#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <memory>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "minstable/coalition.hpp"
#include "minstable/errors.hpp"
#include "minstable/permutation.hpp"

namespace minstable {

// Rules with at most this many players carry an explicit truth table
// (2^20 bits = 128 KiB); larger rules stay symbolic and are answered
// analytically.
inline constexpr int max_explicit_players = 20;

// Truth table over all 2^n coalitions; bit at position `mask` is v(T) for the
// coalition whose member bits form `mask` (bit i-1 = player i).
class TruthTable {
public:
    TruthTable() = default;
    explicit TruthTable(int n) : n_(n), words_(word_count(n), 0) {}

    int players() const { return n_; }
    std::uint64_t coalition_count() const { return 1ULL << n_; }

    bool test(std::uint64_t mask) const { return (words_[mask >> 6] >> (mask & 63)) & 1ULL; }

    void set(std::uint64_t mask, bool value) {
        if (value)
            words_[mask >> 6] |= 1ULL << (mask & 63);
        else
            words_[mask >> 6] &= ~(1ULL << (mask & 63));
    }

    std::uint64_t winning_count() const {
        std::uint64_t c = 0;
        for (std::uint64_t w : words_) c += static_cast<std::uint64_t>(std::popcount(w));
        return c;
    }

    // Compact form for n <= 6 (the census regime).
    std::uint64_t compact() const { return words_[0]; }

    const std::vector<std::uint64_t>& words() const { return words_; }

    bool operator==(const TruthTable& o) const { return n_ == o.n_ && words_ == o.words_; }

private:
    static std::size_t word_count(int n) { return static_cast<std::size_t>(((1ULL << n) + 63) / 64); }
    int n_ = 0;
    std::vector<std::uint64_t> words_;
};

// S(v), N(v), V(v), O(v) of a rule.
struct PlayerSets {
    Coalition swing;
    Coalition null_set;
    Coalition veto;
    Coalition oligarchic;
};

struct RuleFlags {
    bool is_veto = false;
    bool is_oligarchic = false;
};

enum class RuleKind { explicit_table, weighted, quota_required, intersection };

// A voting rule: a monotone simple game with v(empty)=0 and v(N)=1.
// Immutable after construction; all queries are pure.
class VotingRule {
public:
    int players() const { return n_; }
    RuleKind kind() const { return kind_; }
    bool has_table() const { return table_ != nullptr; }

    const TruthTable& table() const {
        if (!table_)
            throw too_large_for_enumeration("rule on n=" + std::to_string(n_) +
                                            " players has no explicit truth table");
        return *table_;
    }

    // --- constructors ---------------------------------------------------

    // Explicit rule whose winning coalitions are exactly the up-closure of a
    // nonempty antichain of minimal winning coalitions.
    static VotingRule from_minimal_winning(int n, const std::vector<Coalition>& mwcs) {
        if (mwcs.empty()) throw empty_family("minimal winning family is empty");
        require_explicit_scale(n, "from_minimal_winning");
        std::vector<std::uint64_t> masks;
        masks.reserve(mwcs.size());
        for (const Coalition& c : mwcs) {
            if (c.players() != n)
                throw out_of_range_player("coalition " + c.to_string() + " not on {1.." + std::to_string(n) + "}");
            if (c.empty()) throw empty_family("empty coalition cannot be minimal winning");
            masks.push_back(c.mask());
        }
        for (std::size_t i = 0; i < masks.size(); ++i)
            for (std::size_t j = 0; j < masks.size(); ++j) {
                if (i == j) continue;
                if ((masks[i] & masks[j]) == masks[i])
                    throw not_antichain("not an antichain: " + Coalition::from_mask(n, masks[i]).to_string() +
                                        " is contained in " + Coalition::from_mask(n, masks[j]).to_string());
            }
        TruthTable t(n);
        for (std::uint64_t m : masks) t.set(m, true);
        // Superset-of-set DP: one pass per player spreads membership upward.
        up_close(t);
        VotingRule v(n, RuleKind::explicit_table);
        v.table_ = std::make_shared<const TruthTable>(std::move(t));
        return v;
    }

    // Weighted majority rule [quota; w_1,...,w_n].
    static VotingRule from_weighted(std::int64_t quota, std::vector<std::int64_t> weights) {
        int n = static_cast<int>(weights.size());
        if (n < 1 || n > 1000) throw out_of_range_player("weighted rule needs 1..1000 players");
        std::int64_t total = 0;
        for (std::int64_t w : weights) {
            if (w < 0) throw out_of_range_player("weights must be nonnegative");
            total += w;
        }
        if (quota <= 0) throw quota_unreachable("quota must be positive");
        if (quota > total)
            throw quota_unreachable("quota " + std::to_string(quota) + " exceeds total weight " +
                                    std::to_string(total));
        VotingRule v(n, RuleKind::weighted);
        v.quota_ = quota;
        v.weights_ = std::move(weights);
        if (n <= max_explicit_players) {
            TruthTable t(n);
            std::vector<std::int64_t> sum(t.coalition_count(), 0);
            for (std::uint64_t m = 1; m < t.coalition_count(); ++m) {
                sum[m] = sum[m & (m - 1)] + v.weights_[static_cast<std::size_t>(std::countr_zero(m))];
                if (sum[m] >= quota) t.set(m, true);
            }
            v.table_ = std::make_shared<const TruthTable>(std::move(t));
        }
        return v;
    }

    // Count quota with a required membership set: v(T)=1 iff |T| >= count_quota
    // and required is contained in T. Player-set queries stay analytic for any n.
    static VotingRule quota_with_required(int n, int count_quota, const Coalition& required) {
        if (n < 1 || n > 1000) throw out_of_range_player("player count must be in [1,1000]");
        if (required.players() != n)
            throw out_of_range_player("required set not on {1.." + std::to_string(n) + "}");
        if (count_quota < 1 || count_quota > n)
            throw infeasible_quota("count quota " + std::to_string(count_quota) + " infeasible for n=" +
                                   std::to_string(n));
        if (required.size() > count_quota)
            throw infeasible_quota("required set larger than the count quota");
        VotingRule v(n, RuleKind::quota_required);
        v.count_quota_ = count_quota;
        v.required_ = required;
        if (n <= max_explicit_players) {
            TruthTable t(n);
            std::uint64_t req = required.mask();
            for (std::uint64_t m = 0; m < t.coalition_count(); ++m)
                if (std::popcount(m) >= count_quota && (m & req) == req) t.set(m, true);
            v.table_ = std::make_shared<const TruthTable>(std::move(t));
        }
        return v;
    }

    // Pointwise minimum of component rules on the same player set (e.g. a
    // bicameral legislature: winning means winning in every chamber).
    static VotingRule intersection(std::vector<VotingRule> components) {
        if (components.empty()) throw empty_family("intersection needs at least one component");
        int n = components.front().players();
        for (const VotingRule& c : components)
            if (c.players() != n)
                throw mismatched_player_sets("intersection components on different player sets");
        VotingRule v(n, RuleKind::intersection);
        if (n <= max_explicit_players) {
            TruthTable t(n);
            for (std::uint64_t m = 0; m < t.coalition_count(); ++m) {
                bool all = true;
                for (const VotingRule& c : components)
                    if (!c.table().test(m)) { all = false; break; }
                if (all) t.set(m, true);
            }
            v.table_ = std::make_shared<const TruthTable>(std::move(t));
        }
        v.components_ = std::move(components);
        return v;
    }

    // Explicit rule from a full truth table; validates v(empty)=0, v(N)=1 and
    // monotonicity by full scan.
    static VotingRule from_truth_table(TruthTable t) {
        int n = t.players();
        require_explicit_scale(n, "from_truth_table");
        if (t.test(0)) throw error("v(empty) must be 0");
        std::uint64_t full = t.coalition_count() - 1;
        if (!t.test(full)) throw error("v(N) must be 1");
        for (std::uint64_t m = 1; m <= full; ++m) {
            if (!t.test(m)) continue;
            // monotone: no superset of a winning coalition may lose
            std::uint64_t absent = full & ~m;
            while (absent) {
                std::uint64_t b = lowest_bit(absent);
                if (!t.test(m | b))
                    throw error("not monotone at coalition mask " + std::to_string(m));
                absent &= absent - 1;
            }
        }
        VotingRule v(n, RuleKind::explicit_table);
        v.table_ = std::make_shared<const TruthTable>(std::move(t));
        return v;
    }

    // Compact constructor for the census regime (n <= 6); no revalidation.
    static VotingRule from_compact_unchecked(int n, std::uint64_t bits) {
        TruthTable t(n);
        for (std::uint64_t m = 0; m < t.coalition_count(); ++m)
            if ((bits >> m) & 1ULL) t.set(m, true);
        VotingRule v(n, RuleKind::explicit_table);
        v.table_ = std::make_shared<const TruthTable>(std::move(t));
        return v;
    }

    // --- evaluation -------------------------------------------------------

    bool wins(const Coalition& t) const {
        if (t.players() != n_) throw mismatched_player_sets("coalition on wrong player set");
        if (table_) return table_->test(t.mask());
        switch (kind_) {
            case RuleKind::weighted: {
                std::int64_t s = 0;
                for (int p : t.members()) s += weights_[static_cast<std::size_t>(p - 1)];
                return s >= quota_;
            }
            case RuleKind::quota_required:
                return t.size() >= count_quota_ && required_.subset_of(t);
            case RuleKind::intersection:
                for (const VotingRule& c : components_)
                    if (!c.wins(t)) return false;
                return true;
            case RuleKind::explicit_table: break;
        }
        throw too_large_for_enumeration("unreachable");
    }

    bool wins_mask(std::uint64_t mask) const { return table().test(mask); }

    std::uint64_t winning_count() const { return table().winning_count(); }

    std::vector<std::uint64_t> winning_masks() const {
        const TruthTable& t = table();
        std::vector<std::uint64_t> out;
        for (std::uint64_t m = 0; m < t.coalition_count(); ++m)
            if (t.test(m)) out.push_back(m);
        return out;
    }

    // --- structure ----------------------------------------------------------

    // Minimal winning coalitions, sorted by (size, lexicographic members).
    std::vector<Coalition> minimal_winning() const {
        std::vector<std::uint64_t> masks = minimal_winning_masks();
        std::vector<Coalition> out;
        out.reserve(masks.size());
        for (std::uint64_t m : masks) out.push_back(Coalition::from_mask(n_, m));
        return out;
    }

    std::vector<std::uint64_t> minimal_winning_masks() const {
        const TruthTable& t = table();
        std::vector<std::uint64_t> out;
        for (std::uint64_t m = 1; m < t.coalition_count(); ++m) {
            if (!t.test(m)) continue;
            bool minimal = true;
            std::uint64_t rest = m;
            while (rest) {
                std::uint64_t b = lowest_bit(rest);
                if (t.test(m ^ b)) { minimal = false; break; }
                rest &= rest - 1;
            }
            if (minimal) out.push_back(m);
        }
        std::sort(out.begin(), out.end(), size_lex_less_mask);
        return out;
    }

    PlayerSets player_sets() const {
        if (table_) return scan_player_sets();
        switch (kind_) {
            case RuleKind::weighted: return weighted_player_sets(quota_, weights_);
            case RuleKind::quota_required: return quota_required_player_sets(n_, count_quota_, required_);
            default:
                throw too_large_for_enumeration(
                    "player sets of a large intersection rule have no analytic path; expand components");
        }
    }

    RuleFlags classify() const {
        PlayerSets ps = player_sets();
        return RuleFlags{!ps.veto.empty(), !ps.oligarchic.empty()};
    }

    // Analytic player sets of a weighted rule, valid for any n.
    static PlayerSets weighted_player_sets(std::int64_t quota, const std::vector<std::int64_t>& weights) {
        int n = static_cast<int>(weights.size());
        std::int64_t total = std::accumulate(weights.begin(), weights.end(), std::int64_t{0});
        if (n > max_explicit_players && total > 4'000'000)
            throw too_large("weighted swing-set query beyond desk scale (total weight too large)");
        PlayerSets ps{Coalition(n), Coalition(n), Coalition(n), Coalition(n)};
        // swing test: some coalition avoiding i has weight in [quota-w_i, quota-1]
        std::vector<std::uint64_t> reach(static_cast<std::size_t>(quota + 63) / 64 + 1);
        for (int i = 1; i <= n; ++i) {
            std::int64_t wi = weights[static_cast<std::size_t>(i - 1)];
            if (total - wi < quota) ps.veto.add(i);
            if (wi == 0) { ps.null_set.add(i); continue; }
            // achievable subset sums of the other players, capped at quota-1
            std::fill(reach.begin(), reach.end(), 0);
            reach[0] = 1;
            std::int64_t cap = quota - 1;
            for (int j = 1; j <= n; ++j) {
                if (j == i) continue;
                std::int64_t wj = weights[static_cast<std::size_t>(j - 1)];
                if (wj == 0 || wj > cap) continue;
                shift_or(reach, wj, cap);
            }
            bool swings = false;
            for (std::int64_t s = std::max<std::int64_t>(quota - wi, 0); s <= cap; ++s)
                if ((reach[static_cast<std::size_t>(s >> 6)] >> (s & 63)) & 1ULL) { swings = true; break; }
            if (swings)
                ps.swing.add(i);
            else
                ps.null_set.add(i);
        }
        std::int64_t veto_weight = 0;
        for (int p : ps.veto.members()) veto_weight += weights[static_cast<std::size_t>(p - 1)];
        if (veto_weight >= quota && !ps.veto.empty()) ps.oligarchic = ps.veto;
        return ps;
    }

    // Analytic player sets of a quota-with-required rule, valid for any n.
    static PlayerSets quota_required_player_sets(int n, int count_quota, const Coalition& required) {
        PlayerSets ps{Coalition(n), Coalition(n), Coalition(n), Coalition(n)};
        if (count_quota == n) {
            ps.swing = Coalition::full(n);
            ps.veto = ps.swing;
            ps.oligarchic = ps.swing;
        } else if (count_quota == required.size()) {
            ps.swing = required;
            ps.null_set = required.complement();
            ps.veto = required;
            ps.oligarchic = required;
        } else {
            ps.swing = Coalition::full(n);
            ps.veto = required;
        }
        return ps;
    }

    // --- isomorphism --------------------------------------------------------

    // The relabelled rule pv with pv(T) = v(p(T)).
    VotingRule permuted(const Permutation& p) const {
        if (p.players() != n_) throw mismatched_player_sets("permutation on wrong player set");
        switch (kind_) {
            case RuleKind::weighted: {
                std::vector<std::int64_t> w(weights_.size());
                for (int i = 1; i <= n_; ++i) w[static_cast<std::size_t>(i - 1)] = weights_[static_cast<std::size_t>(p(i) - 1)];
                return from_weighted(quota_, std::move(w));
            }
            case RuleKind::quota_required:
                return quota_with_required(n_, count_quota_, p.inverse().image_of(required_));
            case RuleKind::intersection: {
                std::vector<VotingRule> comps;
                comps.reserve(components_.size());
                for (const VotingRule& c : components_) comps.push_back(c.permuted(p));
                return intersection(std::move(comps));
            }
            case RuleKind::explicit_table: {
                const TruthTable& t = table();
                TruthTable out(n_);
                std::uint64_t bitimg[64];
                for (int i = 1; i <= n_; ++i) bitimg[i - 1] = 1ULL << (p(i) - 1);
                for (std::uint64_t m = 0; m < t.coalition_count(); ++m) {
                    std::uint64_t img = 0, rest = m;
                    while (rest) {
                        img |= bitimg[std::countr_zero(rest)];
                        rest &= rest - 1;
                    }
                    if (t.test(img)) out.set(m, true);
                }
                VotingRule v(n_, RuleKind::explicit_table);
                v.table_ = std::make_shared<const TruthTable>(std::move(out));
                return v;
            }
        }
        throw error("unreachable");
    }

    // --- symbolic payload accessors ------------------------------------------

    std::int64_t quota() const { return quota_; }
    const std::vector<std::int64_t>& weights() const { return weights_; }
    int count_quota() const { return count_quota_; }
    const Coalition& required() const { return required_; }
    const std::vector<VotingRule>& components() const { return components_; }

    bool operator==(const VotingRule& o) const {
        if (n_ != o.n_) return false;
        if (table_ && o.table_) return *table_ == *o.table_;
        if (kind_ != o.kind_) return false;
        switch (kind_) {
            case RuleKind::weighted: return quota_ == o.quota_ && weights_ == o.weights_;
            case RuleKind::quota_required: return count_quota_ == o.count_quota_ && required_ == o.required_;
            case RuleKind::intersection: return components_ == o.components_;
            case RuleKind::explicit_table: return true;
        }
        return false;
    }

private:
    VotingRule(int n, RuleKind k) : n_(n), kind_(k), required_(Coalition(n)) {}

    static void require_explicit_scale(int n, const std::string& op) {
        if (n < 1) throw out_of_range_player("player count must be >= 1");
        if (n > max_explicit_players)
            throw too_large(op + " requires n <= " + std::to_string(max_explicit_players));
    }

    static void up_close(TruthTable& t) {
        int n = t.players();
        for (int b = 0; b < n; ++b) {
            std::uint64_t bit = 1ULL << b;
            for (std::uint64_t m = 0; m < t.coalition_count(); ++m)
                if ((m & bit) && t.test(m ^ bit)) t.set(m, true);
        }
    }

    PlayerSets scan_player_sets() const {
        const TruthTable& t = *table_;
        std::uint64_t full = t.coalition_count() - 1;
        std::uint64_t swing_mask = 0;
        for (std::uint64_t m = 1; m <= full; ++m) {
            if (!t.test(m)) continue;
            std::uint64_t rest = m & ~swing_mask;
            while (rest) {
                std::uint64_t b = lowest_bit(rest);
                if (!t.test(m ^ b)) swing_mask |= b;
                rest &= rest - 1;
            }
        }
        std::uint64_t veto_mask = 0;
        for (int i = 0; i < n_; ++i)
            if (!t.test(full ^ (1ULL << i))) veto_mask |= 1ULL << i;
        std::uint64_t olig_mask = (veto_mask && t.test(veto_mask)) ? veto_mask : 0;
        return PlayerSets{Coalition::from_mask(n_, swing_mask), Coalition::from_mask(n_, full & ~swing_mask),
                          Coalition::from_mask(n_, veto_mask), Coalition::from_mask(n_, olig_mask)};
    }

    static void shift_or(std::vector<std::uint64_t>& reach, std::int64_t shift, std::int64_t cap) {
        // reach |= reach << shift, truncated at cap bits inclusive
        std::size_t words = reach.size();
        std::size_t ws = static_cast<std::size_t>(shift >> 6);
        unsigned bs = static_cast<unsigned>(shift & 63);
        for (std::size_t w = words; w-- > 0;) {
            std::uint64_t v = 0;
            if (w >= ws) {
                v = reach[w - ws] << bs;
                if (bs && w > ws) v |= reach[w - ws - 1] >> (64 - bs);
            }
            reach[w] |= v;
        }
        // mask out sums above cap
        std::size_t capw = static_cast<std::size_t>(cap >> 6);
        for (std::size_t w = capw + 1; w < words; ++w) reach[w] = 0;
        unsigned capb = static_cast<unsigned>(cap & 63);
        if (capb != 63) reach[capw] &= (1ULL << (capb + 1)) - 1;
    }

    int n_;
    RuleKind kind_;
    std::shared_ptr<const TruthTable> table_;
    std::int64_t quota_ = 0;
    std::vector<std::int64_t> weights_;
    int count_quota_ = 0;
    Coalition required_;
    std::vector<VotingRule> components_;
};

// Drops every coalition that strictly contains another member of the family,
// leaving the antichain of minimal elements. Companion to from_minimal_winning,
// which rejects non-antichain input instead of repairing it.
inline std::vector<Coalition> drop_supersets(const std::vector<Coalition>& family) {
    std::vector<Coalition> out;
    for (const Coalition& c : family) {
        bool keep = true;
        for (const Coalition& d : family)
            if (!(d == c) && d.subset_of(c)) { keep = false; break; }
        if (keep && std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
    }
    std::sort(out.begin(), out.end(), size_lex_less);
    return out;
}

inline PlayerSets player_sets(const VotingRule& v) { return v.player_sets(); }
inline RuleFlags classify(const VotingRule& v) { return v.classify(); }
inline std::vector<Coalition> minimal_winning(const VotingRule& v) { return v.minimal_winning(); }
inline VotingRule apply_permutation(const VotingRule& v, const Permutation& p) { return v.permuted(p); }

} // namespace minstable
