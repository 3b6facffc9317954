#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>

#include "superfock/rational.hpp"
#include "superfock/scalar.hpp"
#include "superfock/sparse_vector.hpp"

namespace superfock {

/// Modes v^g_s of a (possibly g-twisted, g of order k ∈ {1, 2}) module for a
/// vertex operator superalgebra whose states are spanned by basis keys.
///
/// A derived class supplies the modes of a few base states (generators, or
/// states handled by a dedicated construction) and a decomposition
/// a = c · u_ℓ X of every other basis state into a base state u and a state X
/// of lower weight. Modes of a are then fixed by the component form of the
/// twisted Jacobi identity with u replaced by its g-eigencomponents u_r (modes
/// in r/k + Z), taken at m = r/k:
///
///   (u_r,ℓ X)^g_s = Σ_i (-1)^i C(ℓ,i) [u^g_{m+ℓ-i} X^g_{s-m+i}
///                                      - ε(-1)^ℓ X^g_{s-m+ℓ-i} u^g_{m+i}]
///                   - Σ_{i≥1} C(m,i) ((u_r)_{ℓ+i} X)^g_{s-i},
///
/// ε = (-1)^{|u||X|}. All sums are finite because modules are graded with a
/// lower bound: a mode v_s maps grade h to h + wt(v) - s - 1, and vectors of
/// negative grade vanish. Results are memoized per (basis state, s, basis vector).
template <class VoaKey, class ModKey>
class ModeEngine {
 public:
  using VoaVec = SparseVector<VoaKey>;
  using ModVec = SparseVector<ModKey>;

  struct Decomposition {
    VoaKey u;
    long ell = -1;
    VoaKey rest;
    Scalar coefficient = 1;
  };

  virtual ~ModeEngine() = default;

  virtual Rational voa_weight(const VoaKey& a) const = 0;
  virtual int voa_parity(const VoaKey& a) const = 0;
  /// L(0)-grade above the module's lowest grade.
  virtual Rational grade(const ModKey& w) const = 0;
  virtual long twist_order() const = 0;
  /// g-eigencomponent with eigenvalue exp(2πi r/k) of a basis state.
  virtual VoaVec eigen_part(const VoaKey& u, long r) const = 0;
  /// Untwisted VOA mode u_j x (VOA acting on itself).
  virtual VoaVec voa_mode(const VoaVec& u, long j, const VoaKey& x) = 0;

  ModVec mode(const VoaKey& a, const Rational& s, const ModKey& w) {
    if (!is_integer(2 * s)) return {};
    if (grade(w) + voa_weight(a) - s - 1 < 0) return {};
    auto key = std::make_tuple(a, s, w);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    ModVec out = compute(a, s, w);
    memo_.emplace(std::move(key), out);
    return out;
  }

  ModVec mode(const VoaKey& a, const Rational& s, const ModVec& w) {
    return apply_linear(w, [&](const ModKey& k) { return mode(a, s, k); });
  }

  ModVec mode(const VoaVec& a, const Rational& s, const ModVec& w) {
    ModVec out;
    for (const auto& [key, c] : a) out.add_scaled(mode(key, s, w), c);
    return out;
  }

  ModVec mode(const VoaVec& a, const Rational& s, const ModKey& w) { return mode(a, s, ModVec(w)); }

  std::size_t memo_size() const { return memo_.size(); }
  void clear_memo() { memo_.clear(); }

 protected:
  virtual bool is_vacuum(const VoaKey& a) const = 0;
  /// Modes of base states; nullopt for states that must be decomposed.
  virtual std::optional<ModVec> base_mode(const VoaKey& a, const Rational& s, const ModKey& w) = 0;
  virtual Decomposition decompose(const VoaKey& a) const = 0;

 private:
  ModVec compute(const VoaKey& a, const Rational& s, const ModKey& w) {
    if (is_vacuum(a)) return s == -1 ? ModVec(w) : ModVec();
    if (auto base = base_mode(a, s, w)) return *base;

    const Decomposition d = decompose(a);
    const long k = twist_order();
    const Rational wt_u = voa_weight(d.u);
    const Rational wt_x = voa_weight(d.rest);
    const Rational grade_w = grade(w);
    const bool odd_pair = voa_parity(d.u) * voa_parity(d.rest) % 2 == 1;
    const long ell = d.ell;
    // -ε(-1)^ℓ
    const Scalar swap_sign = (odd_pair ? 1 : 0) + (ell % 2 != 0 ? 1 : 0) == 1 ? Scalar(1) : Scalar(-1);

    ModVec result;
    for (long r = 0; r < k; ++r) {
      VoaVec ur = eigen_part(d.u, r);
      if (ur.is_zero()) continue;
      const Rational m = make_rational(r, k);
      const Rational n = s - m;
      for (long i = 0; grade_w + wt_x - (n + i) - 1 >= 0; ++i) {
        ModVec y = mode(d.rest, n + i, w);
        if (y.is_zero()) continue;
        Rational c = binomial(Rational(ell), i);
        if (i % 2 != 0) c = -c;
        result.add_scaled(mode(ur, m + ell - i, y), Scalar(c));
      }
      for (long i = 0; grade_w + wt_u - (m + i) - 1 >= 0; ++i) {
        ModVec y = mode(ur, m + i, w);
        if (y.is_zero()) continue;
        Rational c = binomial(Rational(ell), i);
        if (i % 2 != 0) c = -c;
        result.add_scaled(mode(d.rest, n + ell - i, y), swap_sign * Scalar(c));
      }
      if (sgn(m) != 0) {
        for (long i = 1; wt_u + wt_x - ell - i - 1 >= 0; ++i) {
          VoaVec lower = voa_mode(ur, ell + i, d.rest);
          if (lower.is_zero()) continue;
          Rational c = binomial(m, i);
          result.add_scaled(mode(lower, s - i, ModVec(w)), Scalar(Rational(-c)));
        }
      }
    }
    result *= d.coefficient;
    return result;
  }

  std::map<std::tuple<VoaKey, Rational, ModKey>, ModVec> memo_;
};

}  // namespace superfock
