#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace pivotal {

/// Exact rational with arbitrary-precision numerator and denominator.
using Rational = boost::multiprecision::cpp_rational;

/// Every table entry, pivot and coordinate is carried as an exact rational.
/// Elements of a finite lattice are carried by their index in the lattice.
using Value = Rational;

/// A point x = (x_1, ..., x_n) of a finite domain.
using Point = std::vector<Value>;

/// Parses `p/q`, `-p/q` or an integer. Throws ParseError on malformed text
/// or a zero denominator.
Rational parse_rational(std::string_view text);

/// `p` for integers, `p/q` otherwise (always in lowest terms).
std::string to_string(const Rational& r);

std::string to_string(const Point& x);

inline bool is_integer(const Rational& r) {
  return boost::multiprecision::denominator(r) == 1;
}

}  // namespace pivotal
