#pragma once

// Normal-ordered free-field operators built directly from the Fock mode
// algebra. Tests compare the recursively computed vertex operator modes
// against these.

#include "superfock/fock.hpp"

namespace free_field {

using namespace superfock;

inline long reach(const FockState& s, long n) { return floor_long(s.level()) + (n < 0 ? -n : n) + 3; }

/// 1/2 sum_j :α(j)α(n-j):
inline FockVector boson_virasoro(const FockAlgebra& alg, long n, const FockState& s) {
  FockVector out;
  const long R = reach(s, n);
  for (long j = -R; j <= R; ++j) {
    long a = j, b = n - j;
    if (a > b) std::swap(a, b);
    out.add_scaled(alg.boson(a, alg.boson(b, s)), Scalar(make_rational(1, 2)));
  }
  return out;
}

/// 1/2 sum_s (s - n/2) :ψ(n-s)ψ(s): over s in the fermion lattice (no zero mode terms).
inline FockVector fermion_virasoro(const FockAlgebra& alg, long n, const FockState& st) {
  FockVector out;
  const Rational off = alg.fermion_offset();
  const long R = reach(st, n);
  for (long j = -R; j <= R; ++j) {
    const Rational s = off + j;
    Rational a = n - s, b = s;
    Scalar sign(1);
    if (a > b) {
      std::swap(a, b);
      sign = Scalar(-1);
    }
    if (sgn(a) == 0 || sgn(b) == 0) continue;
    const Rational coeff = (s - Rational(n) / 2) / 2;
    out.add_scaled(alg.fermion(a, alg.fermion(b, st)), sign * Scalar(coeff));
  }
  return out;
}

/// sum_n α(n)ψ(r - n)
inline FockVector supercurrent(const FockAlgebra& alg, const Rational& r, const FockState& st) {
  FockVector out;
  const long R = reach(st, 2 + floor_long(r < 0 ? -r : r));
  for (long n = -R; n <= R; ++n) out += alg.boson(n, alg.fermion(r - n, st));
  return out;
}

}  // namespace free_field
