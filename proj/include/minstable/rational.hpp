#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

#include "minstable/errors.hpp"

namespace minstable {

// Every power value and comparison in the library is exact: big-integer
// rationals end to end, no floating point.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
    return Rational(BigInt(num), BigInt(den));
}

inline std::string to_string(const Rational& r) {
    return r.str();
}

// Parses "p", "p/q", or a leading '-'. Used for CLI --epsilon and the
// veto_epsilon:<rational> index token.
inline Rational parse_rational(const std::string& text) {
    auto bad = [&]() -> parse_error {
        return parse_error(0, "rational number like 3/4", "not a rational: '" + text + "'");
    };
    if (text.empty()) throw bad();
    std::size_t slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(text));
        BigInt num(text.substr(0, slash));
        BigInt den(text.substr(slash + 1));
        if (den == 0) throw bad();
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw bad();
    }
}

inline BigInt factorial(int k) {
    BigInt r = 1;
    for (int i = 2; i <= k; ++i) r *= i;
    return r;
}

} // namespace minstable
