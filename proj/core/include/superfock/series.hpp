#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "superfock/rational.hpp"
#include "superfock/scalar.hpp"

namespace superfock {

enum class Variable { q, x };

class VariableMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class UnsupportedK : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Truncated formal series sum_e c_e v^e with rational exponents e < truncation.
/// Zero coefficients are never stored.
class Series {
 public:
  using Terms = std::map<Rational, Scalar>;

  Series(Variable var, Rational truncation);

  static Series monomial(Variable var, Rational truncation, const Rational& exp, const Scalar& coeff);

  Variable variable() const { return var_; }
  const Rational& truncation() const { return truncation_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Coefficient at exp (zero if absent or beyond truncation).
  Scalar coefficient(const Rational& exp) const;

  /// Adds c·v^exp; silently dropped when exp >= truncation.
  void add_term(const Rational& exp, const Scalar& coeff);

  Series& operator+=(const Series& other);
  Series& operator-=(const Series& other);
  Series& operator*=(const Scalar& s);

  friend Series operator+(Series f, const Series& g) { return f += g; }
  friend Series operator-(Series f, const Series& g) { return f -= g; }
  friend Series operator*(Series f, const Scalar& s) { return f *= s; }
  friend Series operator*(const Series& f, const Series& g);

  friend bool operator==(const Series& f, const Series& g) {
    return f.var_ == g.var_ && f.truncation_ == g.truncation_ && f.terms_ == g.terms_;
  }

  /// v -> v^factor on exponents and truncation (q -> q^2 for factor 2).
  Series substitute_power(long factor) const;

  /// Same terms under a smaller truncation.
  Series truncated(const Rational& bound) const;

  std::string to_string() const;

 private:
  Variable var_;
  Rational truncation_;
  Terms terms_;
};

/// x^{1/k} -> η^j x^{1/k} with η = -1 (k = 2). A term c·x^e picks up (-1)^{2ej};
/// for e in (1/4)Z \ (1/2)Z the lift x^{1/4} -> i^j x^{1/4} is used.
Series substitute_root_phase(const Series& f, long j, long k);

nlohmann::json to_json(const Series& s);
Series series_from_json(const nlohmann::json& j);

std::string variable_name(Variable v);

}  // namespace superfock
