#pragma once

#include <stdexcept>
#include <string>

namespace minstable {

// Base class for all library errors.
struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// A player number outside {1..n}.
struct out_of_range_player : error {
    using error::error;
};

// from_minimal_winning: empty family of coalitions.
struct empty_family : error {
    using error::error;
};

// from_minimal_winning: the family is not an antichain.
struct not_antichain : error {
    using error::error;
};

// from_weighted: quota exceeds the total weight (the grand coalition would lose).
struct quota_unreachable : error {
    using error::error;
};

// quota_with_required: quota/required combination admits no winning coalition.
struct infeasible_quota : error {
    using error::error;
};

// intersection: component rules live on different player sets.
struct mismatched_player_sets : error {
    using error::error;
};

// Operation requires an explicit truth table but the rule is symbolic and too
// large to expand.
struct too_large_for_enumeration : error {
    using error::error;
};

// Player count exceeds the operation's hard bound.
struct too_large : error {
    using error::error;
};

// Power index cannot be evaluated at this scale.
struct unsupported_at_scale : error {
    using error::error;
};

// Dominance queries require a nonempty coalition.
struct empty_coalition : error {
    using error::error;
};

// Theorem verification requested for a profile that fails the axioms.
struct axiom_precondition_failed : error {
    using error::error;
};

// Corollary 2 robustness check: verdicts changed when epsilon was halved.
struct epsilon_not_small_enough : error {
    using error::error;
};

// Game grammar parse failure; carries the offset of the offending character.
struct parse_error : error {
    parse_error(std::size_t position, const std::string& expected, const std::string& what)
        : error(what), position(position), expected(expected) {}
    std::size_t position;
    std::string expected;
};

// Seat dataset file is malformed.
struct malformed_dataset : error {
    using error::error;
};

} // namespace minstable
