#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace burniat {

/// Exact rational scalar. GMP keeps every value canonical (lowest terms,
/// positive denominator) after each arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

/// A point in coordinate space, ordered like the owning system's variables.
using Point = std::vector<Rational>;

/// Parses "p", "-p" or "p/q". Throws InputError on anything else or q == 0.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);

/// "(x1,x2,...)" with every coordinate printed by to_string.
std::string to_string(const Point& point);

/// Least common multiple of the denominators; 1 for an empty list.
Integer common_denominator(const std::vector<Rational>& values);

inline bool is_integer(const Rational& value) { return value.get_den() == 1; }

}  // namespace burniat
