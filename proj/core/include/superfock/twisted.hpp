#pragma once

#include <vector>

#include <nlohmann/json.hpp>

#include "superfock/checks.hpp"
#include "superfock/fock.hpp"
#include "superfock/mode_engine.hpp"
#include "superfock/series.hpp"
#include "superfock/vosa.hpp"

namespace superfock {

/// The parity-twisted V-module M_σ = B ⊗ F_R. Generators act by
/// α^σ_n = α(n) (n ∈ Z) and ψ^σ_s = ψ(s + 1/2) (s ∈ Z + 1/2); every other
/// state is reached through the twisted iterate recursion.
class SigmaTwistedModule final : public ModeEngine<FockState, FockState> {
 public:
  explicit SigmaTwistedModule(FreeFieldVosa& v, Rational fermion_norm = 1);

  Rational voa_weight(const FockState& a) const override { return a.level(); }
  int voa_parity(const FockState& a) const override { return a.parity(); }
  Rational grade(const FockState& w) const override { return w.level(); }
  long twist_order() const override { return 2; }
  FockVector eigen_part(const FockState& u, long r) const override;
  FockVector voa_mode(const FockVector& u, long j, const FockState& x) override;

  FreeFieldVosa& vosa() { return v_; }
  const FockAlgebra& algebra() const { return algebra_; }

  /// States of M_σ with level <= max_level.
  static TruncatedSpace space(const Rational& max_level);

  /// L^σ(n) = ω^σ_{n+1}.
  FockVector virasoro(long n, const FockVector& w);
  /// G^σ(r) = τ^σ_{r+1/2}, r ∈ Z.
  FockVector supercurrent(const Rational& r, const FockVector& w);
  /// L^σ(0) on the ground states; throws NonDiagonal unless it is one scalar.
  Rational ground_weight();

 protected:
  bool is_vacuum(const FockState& a) const override { return a.is_vacuum(); }
  std::optional<FockVector> base_mode(const FockState& a, const Rational& s, const FockState& w) override;
  Decomposition decompose(const FockState& a) const override;

 private:
  FreeFieldVosa& v_;
  FockAlgebra algebra_;
};

/// How single-slot states v¹, v² get their κ̃-twisted modes.
enum class SingleSlotRoute {
  /// Y_g(v¹, x) = Y_σ(Δ_2(x) v, x^{1/2}) and Y_g(v², x) by x^{1/2} -> -x^{1/2}.
  delta,
  /// Only the generator slots use the Δ_2 formula; the rest come from the iterate recursion.
  iterate,
};

/// κ̃-twisted V ⊗ V-module structure on the space of M_σ. Grades are half the
/// M_σ level. Two-slot states a ⊗ b = (a¹)_{-1} b² go through the twisted
/// iterate recursion with u = a¹ split into κ̃-eigenparts.
class MirrorTwistedModule final : public ModeEngine<PairState, FockState> {
 public:
  MirrorTwistedModule(TensorVosa& vv, SigmaTwistedModule& sigma, SingleSlotRoute route = SingleSlotRoute::delta);

  Rational voa_weight(const PairState& a) const override { return pair_weight(a); }
  int voa_parity(const PairState& a) const override { return pair_parity(a); }
  Rational grade(const FockState& w) const override { return w.level() / 2; }
  long twist_order() const override { return 2; }
  PairVector eigen_part(const PairState& u, long r) const override;
  PairVector voa_mode(const PairVector& u, long j, const PairState& x) override;

  TensorVosa& tensor_vosa() { return vv_; }
  SigmaTwistedModule& sigma() { return sigma_; }
  SingleSlotRoute route() const { return route_; }

  /// Coefficient of x^{-p-1} in Y_g(v^slot, x), computed from the Δ_2 formula.
  FockVector single_slot_mode(const FockVector& v, int slot, const Rational& p, const FockVector& w);

  /// L^κ̃(n) = ω^g_{n+1} for ω the conformal vector of V ⊗ V.
  FockVector virasoro(const Rational& n, const FockVector& w);

 protected:
  bool is_vacuum(const PairState& a) const override { return a.first.is_vacuum() && a.second.is_vacuum(); }
  std::optional<FockVector> base_mode(const PairState& a, const Rational& s, const FockState& w) override;
  Decomposition decompose(const PairState& a) const override;

 private:
  TensorVosa& vv_;
  SigmaTwistedModule& sigma_;
  SingleSlotRoute route_;
};

/// M_σ's space carrying L^κ̃(n), G⁽¹⁾_r, G⁽²⁾_n and J_r.
class TwistedModule {
 public:
  TwistedModule(TruncatedSpace space, MirrorTwistedModule& engine, N2Data data);

  const TruncatedSpace& space() const { return space_; }
  MirrorTwistedModule& engine() { return engine_; }
  const N2Data& n2() const { return data_; }

  /// Generators of the mirror-twisted presentation with C -> 3.
  Realization<FockState> realization();
  /// L^κ̃(0) eigenvalue per basis state; throws NonDiagonal if L^κ̃(0) mixes states.
  std::vector<Rational> l0_spectrum();

 private:
  TruncatedSpace space_;
  MirrorTwistedModule& engine_;
  N2Data data_;
};

/// Reuses the basis of `m_sigma` verbatim.
TwistedModule build_mirror_twisted_module(const TruncatedSpace& m_sigma, MirrorTwistedModule& engine,
                                          const N2Data& data);

/// L^σ(n), G^σ(r) against the Virasoro and n1-ramond presentations with C -> 3/2,
/// plus twisted Jacobi sweeps for the generator pairs.
CheckReport verify_sigma_sector(SigmaTwistedModule& sigma, const TruncatedSpace& space, long window);
Realization<FockState> n1_ramond_realization(SigmaTwistedModule& sigma);

/// The n2-mirror-twisted table, its G⁽¹⁾ (n1-ns) and G⁽²⁾ (n1-ramond) sub-tables,
/// lattice vanishing, and twisted Jacobi sweeps for κ̃-eigencombinations of generators.
CheckReport verify_mirror_twisted_relations(TwistedModule& module, long window);

/// Y_g(κ̃v, x) = Y_g(v, x)|_{x^{1/2} -> -x^{1/2}} on states of V ⊗ V of weight <= max_weight.
CheckReport verify_equivariance(MirrorTwistedModule& engine, const TruncatedSpace& space,
                                const Rational& max_weight, long window);

/// Single-slot modes from the Δ_2 formula against the iterate route.
CheckReport compare_single_slot_routes(MirrorTwistedModule& delta_route, MirrorTwistedModule& iterate_route,
                                       const TruncatedSpace& space, const Rational& max_weight, long window);

struct Corollary2Report {
  Series sigma_character;    // tr q^{-c/24 + L^σ(0)}
  Series mirror_character;   // tr q^{-2c/24 + L^κ̃(0)}
  Series mirror_substituted; // the previous with q -> q²
  Rational sigma_ground;
  Rational mirror_ground;
  bool pass = false;
};

/// Characters of M_σ (levels <= max_level) and of the κ̃-twisted module on the same space.
Corollary2Report corollary2_check(TwistedModule& module, SigmaTwistedModule& sigma, long max_level);

nlohmann::json to_json(const Corollary2Report& r);

/// tr q^{-c/24 + L^σ(0)} over M_σ with exponents below trunc.
Series sigma_character(SigmaTwistedModule& sigma, const Rational& trunc);
/// tr q^{-2c/24 + L^κ̃(0)} over the κ̃-twisted module with exponents below trunc.
Series mirror_character(MirrorTwistedModule& engine, const Rational& trunc);

}  // namespace superfock
