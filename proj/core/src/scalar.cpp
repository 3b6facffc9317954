#include "superfock/scalar.hpp"

#include <sstream>
#include <tuple>
#include <utility>

namespace superfock {

namespace {

// Elements p + q√2 of Q(√2).
struct Real2 {
  Rational p, q;
};

Real2 mul(const Real2& x, const Real2& y) { return {x.p * y.p + 2 * x.q * y.q, x.p * y.q + x.q * y.p}; }

}  // namespace

Scalar::Scalar(Rational a, Rational b, Rational c, Rational d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  a_.canonicalize();
  b_.canonicalize();
  c_.canonicalize();
  d_.canonicalize();
}

Scalar Scalar::two_pow(const Rational& e) {
  if (!is_half_integer_lattice(e)) {
    throw std::domain_error("2^e needs e in (1/2)Z, got " + to_fraction_string(e));
  }
  long twice = to_long(2 * e);
  long whole = floor_long(Rational(twice, 2));
  Rational base = 1;
  mpz_class p2;
  mpz_ui_pow_ui(p2.get_mpz_t(), 2, static_cast<unsigned long>(whole >= 0 ? whole : -whole));
  base = whole >= 0 ? Rational(p2) : Rational(1) / Rational(p2);
  if (twice % 2 == 0) return Scalar(base);
  return Scalar(0, 0, base, 0);
}

Scalar& Scalar::operator+=(const Scalar& o) {
  a_ += o.a_;
  b_ += o.b_;
  c_ += o.c_;
  d_ += o.d_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  c_ -= o.c_;
  d_ -= o.d_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_zero() || o.is_zero()) {
    *this = Scalar();
    return *this;
  }
  if (o.is_rational()) {
    a_ *= o.a_;
    b_ *= o.a_;
    c_ *= o.a_;
    d_ *= o.a_;
    return *this;
  }
  // (P1 + Q1 i)(P2 + Q2 i) with P, Q in Q(√2).
  Real2 p1{a_, c_}, q1{b_, d_}, p2{o.a_, o.c_}, q2{o.b_, o.d_};
  Real2 pp = mul(p1, p2), qq = mul(q1, q2), pq = mul(p1, q2), qp = mul(q1, p2);
  a_ = pp.p - qq.p;
  c_ = pp.q - qq.q;
  b_ = pq.p + qp.p;
  d_ = pq.q + qp.q;
  return *this;
}

bool operator<(const Scalar& x, const Scalar& y) {
  if (x.a_ != y.a_) return x.a_ < y.a_;
  if (x.b_ != y.b_) return x.b_ < y.b_;
  if (x.c_ != y.c_) return x.c_ < y.c_;
  return x.d_ < y.d_;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero in Q(i, sqrt2)");
  // x * conj_i(x) = P^2 + Q^2 lies in Q(√2); then rationalize.
  Real2 p{a_, c_}, q{b_, d_};
  Real2 pp = mul(p, p), qq = mul(q, q);
  Real2 norm{pp.p + qq.p, pp.q + qq.q};
  Rational rational_norm = norm.p * norm.p - 2 * norm.q * norm.q;
  Real2 norm_inv{norm.p / rational_norm, -norm.q / rational_norm};
  Real2 re = mul(p, norm_inv);
  Real2 im = mul(Real2{-q.p, -q.q}, norm_inv);
  return {re.p, im.p, re.q, im.q};
}

std::optional<Scalar> Scalar::rational_sqrt() const {
  if (!is_rational()) return std::nullopt;
  if (sgn(a_) == 0) return Scalar();
  auto exact_root = [](const Rational& r) -> std::optional<Rational> {
    if (sgn(r) < 0) return std::nullopt;
    if (!mpz_perfect_square_p(r.get_num_mpz_t()) || !mpz_perfect_square_p(r.get_den_mpz_t())) {
      return std::nullopt;
    }
    mpz_class n, d;
    mpz_sqrt(n.get_mpz_t(), r.get_num_mpz_t());
    mpz_sqrt(d.get_mpz_t(), r.get_den_mpz_t());
    return Rational(n, d);
  };
  Rational magnitude = abs(a_);
  bool negative = sgn(a_) < 0;
  if (auto t = exact_root(magnitude)) {
    return negative ? Scalar(0, *t, 0, 0) : Scalar(*t);
  }
  if (auto t = exact_root(magnitude / 2)) {
    return negative ? Scalar(0, 0, 0, *t) : Scalar(0, 0, *t, 0);
  }
  return std::nullopt;
}

std::string Scalar::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  auto emit = [&](const Rational& v, const char* unit) {
    if (sgn(v) == 0) return;
    Rational mag = abs(v);
    if (!first) out << (sgn(v) < 0 ? " - " : " + ");
    else if (sgn(v) < 0) out << "-";
    bool unit_only = *unit != '\0' && mag == 1;
    if (!unit_only) out << mag.get_str();
    if (*unit != '\0') out << (unit_only ? "" : "*") << unit;
    first = false;
  };
  emit(a_, "");
  emit(b_, "i");
  emit(c_, "sqrt2");
  emit(d_, "i*sqrt2");
  return out.str();
}

nlohmann::json to_json(const Scalar& s) {
  return nlohmann::json{{"a", to_fraction_string(s.a())},
                        {"b", to_fraction_string(s.b())},
                        {"c", to_fraction_string(s.c())},
                        {"d", to_fraction_string(s.d())}};
}

Scalar scalar_from_json(const nlohmann::json& j) {
  auto part = [&](const char* key) -> Rational {
    if (!j.contains(key)) return 0;
    return parse_rational(j.at(key).get<std::string>());
  };
  return {part("a"), part("b"), part("c"), part("d")};
}

}  // namespace superfock
