#pragma once

// Independent reference computations used by the tests. Nothing here calls
// into the library's Fock, series or Virasoro code.

#include <gmpxx.h>

#include <cstddef>
#include <vector>

namespace oracle {

/// p(0..n) by the classical recurrence over parts.
inline std::vector<long> partitions(std::size_t n) {
  std::vector<long> p(n + 1, 0);
  p[0] = 1;
  for (std::size_t part = 1; part <= n; ++part) {
    for (std::size_t m = part; m <= n; ++m) p[m] += p[m - part];
  }
  return p;
}

/// Partitions into distinct parts, q(0..n).
inline std::vector<long> distinct_partitions(std::size_t n) {
  std::vector<long> q(n + 1, 0);
  q[0] = 1;
  for (std::size_t part = 1; part <= n; ++part) {
    for (std::size_t m = n; m >= part; --m) q[m] += q[m - part];
  }
  return q;
}

/// Overpartitions: coefficients of prod (1 + q^n) / (1 - q^n).
inline std::vector<long> overpartitions(std::size_t n) {
  const auto p = partitions(n);
  const auto q = distinct_partitions(n);
  std::vector<long> out(n + 1, 0);
  for (std::size_t a = 0; a <= n; ++a) {
    for (std::size_t b = 0; a + b <= n; ++b) out[a + b] += p[a] * q[b];
  }
  return out;
}

/// Coefficients (in steps of q^{1/2}) of prod_{n>=1} (1 + q^{n-1/2}) through q^{max_half/2}.
inline std::vector<long> ns_fermion_dims(std::size_t max_half) {
  std::vector<long> out(max_half + 1, 0);
  out[0] = 1;
  for (std::size_t odd = 1; odd <= max_half; odd += 2) {
    for (std::size_t m = max_half; m >= odd; --m) out[m] += out[m - odd];
  }
  return out;
}

using Poly = std::vector<mpq_class>;  // coefficient of x^d at index d

inline Poly multiply(const Poly& a, const Poly& b, std::size_t max_degree) {
  Poly out(max_degree + 1, 0);
  for (std::size_t i = 0; i < a.size() && i <= max_degree; ++i) {
    for (std::size_t j = 0; j < b.size() && i + j <= max_degree; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

/// f(g(x)) through x^max_degree, g(0) = 0.
inline Poly compose(const Poly& f, const Poly& g, std::size_t max_degree) {
  Poly out(max_degree + 1, 0);
  Poly power(max_degree + 1, 0);
  power[0] = 1;
  for (std::size_t d = 0; d < f.size() && d <= max_degree; ++d) {
    for (std::size_t i = 0; i <= max_degree; ++i) out[i] += f[d] * power[i];
    power = multiply(power, g, max_degree);
  }
  return out;
}

inline Poly derivative(const Poly& f) {
  Poly out(f.size() > 1 ? f.size() - 1 : 1, 0);
  for (std::size_t d = 1; d < f.size(); ++d) out[d - 1] = f[d] * static_cast<long>(d);
  return out;
}

}  // namespace oracle
