#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace superfock {

using Rational = mpq_class;

class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Canonical "p/q" text, always with an explicit denominator ("2/1", "0/1").
std::string to_fraction_string(const Rational& r);

/// Accepts "p/q", "p" or "-p/q"; the result is canonicalized.
Rational parse_rational(std::string_view text);

bool is_integer(const Rational& r);

/// True when 2r is an integer.
bool is_half_integer_lattice(const Rational& r);

/// r must be an integer.
long to_long(const Rational& r);

/// Generalized binomial coefficient C(top, i) for i >= 0.
Rational binomial(const Rational& top, long i);

/// Greatest integer <= r.
long floor_long(const Rational& r);

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace superfock
