#include "superfock/rational.hpp"

#include <cctype>

namespace superfock {

std::string to_fraction_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  auto valid_integer = [](std::string_view s, bool allow_sign) {
    if (s.empty()) return false;
    std::size_t start = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+')) start = 1;
    if (start == s.size()) return false;
    for (std::size_t i = start; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
  };
  std::string_view num = text;
  std::string_view den = "1";
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  if (!valid_integer(num, true) || !valid_integer(den, false)) {
    throw ParseError("not a fraction: '" + std::string(text) + "'");
  }
  std::string num_str(num);
  if (!num_str.empty() && num_str[0] == '+') num_str.erase(0, 1);
  mpz_class n(num_str, 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

bool is_integer(const Rational& r) { return r.get_den() == 1; }

bool is_half_integer_lattice(const Rational& r) { return r.get_den() == 1 || r.get_den() == 2; }

long to_long(const Rational& r) {
  if (!is_integer(r)) throw std::invalid_argument("not an integer: " + to_fraction_string(r));
  if (!r.get_num().fits_slong_p()) throw std::overflow_error("integer out of range");
  return r.get_num().get_si();
}

long floor_long(const Rational& r) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q.get_si();
}

Rational binomial(const Rational& top, long i) {
  if (i < 0) return 0;
  Rational result = 1;
  for (long j = 0; j < i; ++j) {
    result *= (top - j);
    result /= (j + 1);
  }
  return result;
}

}  // namespace superfock
