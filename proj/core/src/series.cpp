#include "superfock/series.hpp"

#include <sstream>

namespace superfock {

std::string variable_name(Variable v) { return v == Variable::q ? "q" : "x"; }

Series::Series(Variable var, Rational truncation) : var_(var), truncation_(std::move(truncation)) {
  truncation_.canonicalize();
}

Series Series::monomial(Variable var, Rational truncation, const Rational& exp, const Scalar& coeff) {
  Series s(var, std::move(truncation));
  s.add_term(exp, coeff);
  return s;
}

Scalar Series::coefficient(const Rational& exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? Scalar() : it->second;
}

void Series::add_term(const Rational& exp, const Scalar& coeff) {
  if (exp >= truncation_ || coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exp, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

namespace {

void require_same_variable(const Series& f, const Series& g) {
  if (f.variable() != g.variable()) {
    throw VariableMismatch("series in " + variable_name(f.variable()) + " combined with series in " +
                           variable_name(g.variable()));
  }
}

}  // namespace

Series& Series::operator+=(const Series& other) {
  require_same_variable(*this, other);
  if (other.truncation_ < truncation_) *this = truncated(other.truncation_);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Series& Series::operator-=(const Series& other) {
  require_same_variable(*this, other);
  if (other.truncation_ < truncation_) *this = truncated(other.truncation_);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

Series& Series::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

Series operator*(const Series& f, const Series& g) {
  require_same_variable(f, g);
  if (f.is_zero() || g.is_zero()) return Series(f.var_, std::min(f.truncation_, g.truncation_));
  // A product term f_a g_b is reliable only while a + b stays below both
  // f.trunc + min(g) and g.trunc + min(f).
  Rational bound = std::min(f.truncation_ + g.terms_.begin()->first, g.truncation_ + f.terms_.begin()->first);
  bound = std::min(bound, std::min(f.truncation_, g.truncation_));
  Series out(f.var_, bound);
  for (const auto& [ea, ca] : f.terms_) {
    for (const auto& [eb, cb] : g.terms_) {
      Rational e = ea + eb;
      if (e >= bound) break;
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

Series Series::substitute_power(long factor) const {
  if (factor <= 0) throw std::invalid_argument("substitute_power needs a positive factor");
  Series out(var_, truncation_ * factor);
  for (const auto& [e, c] : terms_) out.add_term(e * factor, c);
  return out;
}

Series Series::truncated(const Rational& bound) const {
  Series out(var_, std::min(bound, truncation_));
  for (const auto& [e, c] : terms_) out.add_term(e, c);
  return out;
}

std::string Series::to_string() const {
  if (terms_.empty()) return "0 + O(" + variable_name(var_) + "^" + truncation_.get_str() + ")";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    out << "(" << c.to_string() << ")";
    if (sgn(e) != 0) out << "*" << variable_name(var_) << "^" << e.get_str();
  }
  out << " + O(" << variable_name(var_) << "^" << truncation_.get_str() << ")";
  return out.str();
}

Series substitute_root_phase(const Series& f, long j, long k) {
  if (k != 2) throw UnsupportedK("substitute_root_phase supports k = 2 only, got k = " + std::to_string(k));
  Series out(f.variable(), f.truncation());
  for (const auto& [e, c] : f.terms()) {
    Rational quarter = e * 4;
    if (!is_integer(quarter)) {
      throw std::domain_error("exponent " + to_fraction_string(e) + " is outside (1/4)Z");
    }
    // x^{1/4} -> i^j x^{1/4}, so x^e -> i^{4ej}.
    long power = ((to_long(quarter) * j) % 4 + 4) % 4;
    Scalar phase = power == 0 ? Scalar(1) : power == 1 ? Scalar::i() : power == 2 ? Scalar(-1) : -Scalar::i();
    out.add_term(e, c * phase);
  }
  return out;
}

nlohmann::json to_json(const Series& s) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : s.terms()) {
    terms.push_back(nlohmann::json{{"exp", to_fraction_string(e)}, {"coeff", to_json(c)}});
  }
  return nlohmann::json{
      {"variable", variable_name(s.variable())}, {"truncation", to_fraction_string(s.truncation())}, {"terms", terms}};
}

Series series_from_json(const nlohmann::json& j) {
  std::string var = j.at("variable").get<std::string>();
  if (var != "q" && var != "x") throw ParseError("unknown series variable '" + var + "'");
  Series s(var == "q" ? Variable::q : Variable::x, parse_rational(j.at("truncation").get<std::string>()));
  for (const auto& t : j.at("terms")) {
    s.add_term(parse_rational(t.at("exp").get<std::string>()), scalar_from_json(t.at("coeff")));
  }
  return s;
}

}  // namespace superfock
