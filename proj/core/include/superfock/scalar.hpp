#pragma once

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "superfock/rational.hpp"

namespace superfock {

/// Element a + b·i + c·√2 + d·i√2 of the field Q(i, √2).
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : a_(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(const Rational& v) : a_(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(Rational a, Rational b, Rational c, Rational d);

  static Scalar i() { return {0, 1, 0, 0}; }
  static Scalar sqrt2() { return {0, 0, 1, 0}; }
  static Scalar i_sqrt2() { return {0, 0, 0, 1}; }

  /// 2^e for e in (1/2)Z.
  static Scalar two_pow(const Rational& e);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Rational& c() const { return c_; }
  const Rational& d() const { return d_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0 && sgn(c_) == 0 && sgn(d_) == 0; }
  bool is_rational() const { return sgn(b_) == 0 && sgn(c_) == 0 && sgn(d_) == 0; }

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

  friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
  friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
  friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
  friend Scalar operator/(Scalar x, const Scalar& y) { return x /= y; }
  Scalar operator-() const { return {-a_, -b_, -c_, -d_}; }

  friend bool operator==(const Scalar& x, const Scalar& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_;
  }
  friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }
  /// Lexicographic on (a, b, c, d); only meaningful for deterministic ordering.
  friend bool operator<(const Scalar& x, const Scalar& y);

  /// Throws DivisionByZero on zero.
  Scalar inverse() const;
  /// i -> -i.
  Scalar conj_i() const { return {a_, -b_, c_, -d_}; }
  /// √2 -> -√2.
  Scalar conj_sqrt2() const { return {a_, b_, -c_, -d_}; }

  /// Square root inside Q(i, √2) for rational arguments of the forms ±t², ±2t².
  /// Returns the root whose leading nonzero component is positive.
  std::optional<Scalar> rational_sqrt() const;

  std::string to_string() const;

 private:
  Rational a_, b_, c_, d_;
};

nlohmann::json to_json(const Scalar& s);
Scalar scalar_from_json(const nlohmann::json& j);

}  // namespace superfock
