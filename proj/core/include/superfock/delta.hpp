#pragma once

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "superfock/rational.hpp"
#include "superfock/scalar.hpp"
#include "superfock/series.hpp"
#include "superfock/sparse_vector.hpp"

namespace superfock {

class InsufficientTerms : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NonHomogeneous : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// a_1..a_J for the flow exp(-sum_j a_j x^{j+1} d/dx) x = ((1+x)^k - 1)/k.
struct DeltaCoefficients {
  long k = 1;
  std::vector<Rational> values;  // values[j-1] = a_j

  const Rational& a(long j) const { return values.at(static_cast<std::size_t>(j - 1)); }
};

/// Order-by-order solve: a_j enters the x^{j+1} coefficient linearly with
/// coefficient -1 once a_1..a_{j-1} are fixed. Results are cached per k.
DeltaCoefficients delta_coefficients(long k, long terms);

/// exp(-sum_j a_j x^{j+1} d/dx) applied to x, as a polynomial through x^{max_degree}.
std::vector<Rational> exponential_flow(const std::vector<Rational>& a, long max_degree);

/// Residual of the defining equation through x^{order} (series truncation order + 1).
Series verify_delta_equation(long k, long terms, long order);
Series delta_residual(const DeltaCoefficients& coefficients, long order);

/// Δ_k(x) v as a finite sum over x-exponents: exponent -> state.
template <class Key>
using XGraded = std::map<Rational, SparseVector<Key>>;

/// Positive Virasoro modes L(j), j >= 1, on a weight-graded space.
template <class Key>
struct VirasoroLowering {
  std::function<SparseVector<Key>(long j, const SparseVector<Key>& v)> lower;
  std::function<Rational(const Key&)> weight;
};

namespace detail {
template <class Key>
std::optional<Rational> homogeneous_weight(const SparseVector<Key>& v, const std::function<Rational(const Key&)>& wt) {
  std::optional<Rational> out;
  for (const auto& [key, c] : v) {
    Rational w = wt(key);
    if (out && *out != w) return std::nullopt;
    out = w;
  }
  return out;
}
}  // namespace detail

/// exp(sum_j a_j x^{-j/k} L(j)) k^{-L(0)} x^{-(k-1)L(0)/k} v for k in {1, 2};
/// the L(0) factors act first. Terminates because L(j) lowers weight by j and
/// weights are bounded below by zero.
template <class Key>
XGraded<Key> apply_delta(const SparseVector<Key>& v, long k, const VirasoroLowering<Key>& action) {
  if (k != 1 && k != 2) throw UnsupportedK("apply_delta supports k in {1, 2}, got " + std::to_string(k));
  XGraded<Key> out;
  if (v.is_zero()) return out;
  auto wt = detail::homogeneous_weight(v, action.weight);
  if (!wt) throw NonHomogeneous("apply_delta needs a weight-homogeneous state");
  if (k == 1) {
    out.emplace(Rational(0), v);
    return out;
  }
  const Rational base_exp = -(*wt) * (k - 1) / k;
  const Scalar prefactor = Scalar::two_pow(-*wt);
  const long depth = floor_long(*wt);
  const DeltaCoefficients coeffs = delta_coefficients(k, std::max<long>(depth, 1));

  // exp(A) v = sum_n A^n v / n!, A = sum_j a_j x^{-j/k} L(j). Track A^n v / n!
  // graded by the total lowering amount.
  std::map<long, SparseVector<Key>> current;  // lowering amount -> vector
  current.emplace(0, prefactor * v);
  for (long n = 0; !current.empty(); ++n) {
    for (const auto& [lowered, vec] : current) {
      out[base_exp - make_rational(lowered, k)] += vec;
    }
    std::map<long, SparseVector<Key>> next;
    for (const auto& [lowered, vec] : current) {
      for (long j = 1; lowered + j <= depth; ++j) {
        const Rational& aj = coeffs.a(j);
        if (sgn(aj) == 0) continue;
        SparseVector<Key> image = action.lower(j, vec);
        if (image.is_zero()) continue;
        next[lowered + j].add_scaled(image, Scalar(Rational(aj / (n + 1))));
      }
    }
    current = std::move(next);
  }
  for (auto it = out.begin(); it != out.end();) {
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  }
  return out;
}

}  // namespace superfock
