#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>

namespace chgraph {

using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

inline Rational rat(long long num, long long den = 1) {
    return Rational(num, den);
}

// Parses "p/q" or "p" (optional sign). Returns nullopt on malformed input.
std::optional<Rational> parse_rational(const std::string& s);

// "p/q" for non-integers, "p" otherwise. Inverse of parse_rational.
std::string to_string(const Rational& q);

}  // namespace chgraph
