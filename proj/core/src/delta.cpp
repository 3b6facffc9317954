#include "superfock/delta.hpp"

#include <mutex>

namespace superfock {

std::vector<Rational> exponential_flow(const std::vector<Rational>& a, long max_degree) {
  // poly[d] is the coefficient of x^d.
  std::vector<Rational> result(static_cast<std::size_t>(max_degree + 1), Rational(0));
  if (max_degree < 1) return result;
  std::vector<Rational> term(result.size(), Rational(0));
  term[1] = 1;
  result[1] = 1;
  for (long n = 1; n <= max_degree; ++n) {
    // term <- D term / n with D = -sum_j a_j x^{j+1} d/dx
    std::vector<Rational> next(result.size(), Rational(0));
    bool nonzero = false;
    for (long d = 1; d <= max_degree; ++d) {
      const Rational& c = term[static_cast<std::size_t>(d)];
      if (sgn(c) == 0) continue;
      for (std::size_t j = 1; j <= a.size(); ++j) {
        long target = d + static_cast<long>(j);
        if (target > max_degree) break;
        next[static_cast<std::size_t>(target)] -= a[j - 1] * c * d / n;
        nonzero = true;
      }
    }
    if (!nonzero) break;
    term = std::move(next);
    for (std::size_t d = 0; d < result.size(); ++d) result[d] += term[d];
  }
  return result;
}

namespace {

Rational target_coefficient(long k, long degree) {
  // ((1+x)^k - 1)/k
  if (degree < 1 || degree > k) return 0;
  return binomial(Rational(k), degree) / k;
}

std::vector<Rational> solve_coefficients(long k, long terms) {
  std::vector<Rational> a;
  a.reserve(static_cast<std::size_t>(terms));
  for (long j = 1; j <= terms; ++j) {
    a.emplace_back(0);
    std::vector<Rational> flow = exponential_flow(a, j + 1);
    // With a_j = 0 the x^{j+1} coefficient is `flow`; a_j contributes -a_j.
    a.back() = flow[static_cast<std::size_t>(j + 1)] - target_coefficient(k, j + 1);
  }
  return a;
}

}  // namespace

DeltaCoefficients delta_coefficients(long k, long terms) {
  if (k < 1) throw std::invalid_argument("delta_coefficients needs k >= 1");
  if (terms < 1) throw std::invalid_argument("delta_coefficients needs at least one term");
  static std::mutex mutex;
  static std::map<long, std::vector<Rational>> cache;
  std::vector<Rational> values;
  {
    std::lock_guard lock(mutex);
    auto& cached = cache[k];
    if (static_cast<long>(cached.size()) < terms) cached = solve_coefficients(k, terms);
    values.assign(cached.begin(), cached.begin() + terms);
  }
  return {k, std::move(values)};
}

Series delta_residual(const DeltaCoefficients& coefficients, long order) {
  if (static_cast<long>(coefficients.values.size()) < order - 1) {
    throw InsufficientTerms("order " + std::to_string(order) + " needs at least " + std::to_string(order - 1) +
                            " coefficients, got " + std::to_string(coefficients.values.size()));
  }
  std::vector<Rational> flow = exponential_flow(coefficients.values, order);
  Series residual(Variable::x, Rational(order + 1));
  for (long d = 0; d <= order; ++d) {
    residual.add_term(Rational(d), Scalar(Rational(flow[static_cast<std::size_t>(d)] - target_coefficient(coefficients.k, d))));
  }
  return residual;
}

Series verify_delta_equation(long k, long terms, long order) {
  if (terms < order - 1) {
    throw InsufficientTerms("order " + std::to_string(order) + " needs at least " + std::to_string(order - 1) +
                            " coefficients, got " + std::to_string(terms));
  }
  return delta_residual(delta_coefficients(k, terms), order);
}

}  // namespace superfock
