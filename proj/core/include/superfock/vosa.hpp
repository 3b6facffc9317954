#pragma once

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "superfock/checks.hpp"
#include "superfock/delta.hpp"
#include "superfock/fock.hpp"
#include "superfock/mode_engine.hpp"

namespace superfock {

/// α(-1)|0>, the weight-one boson generator of V.
FockState boson_generator();
/// ψ(-1/2)|0>, the weight-1/2 fermion generator of V.
FockState fermion_generator();

/// V = B ⊗ F_NS acting on a Fock module with the same mode algebra (the
/// adjoint module). Base states are the two generators, with
/// Y(α, x) = Σ α(n) x^{-n-1} and Y(ψ, x) = Σ ψ(n + 1/2) x^{-n-1}; every other
/// monomial is α_{-n} X or ψ_{-r-1/2} X for its leftmost creation mode.
///
/// `module_algebra` may differ from `voa_algebra` only for negative controls.
class VosaAdjoint final : public ModeEngine<FockState, FockState> {
 public:
  VosaAdjoint(FockAlgebra voa_algebra, FockAlgebra module_algebra);

  Rational voa_weight(const FockState& a) const override { return a.level(); }
  int voa_parity(const FockState& a) const override { return a.parity(); }
  Rational grade(const FockState& w) const override { return w.level(); }
  long twist_order() const override { return 1; }
  FockVector eigen_part(const FockState& u, long r) const override;
  FockVector voa_mode(const FockVector& u, long j, const FockState& x) override;

  const FockAlgebra& voa_algebra() const { return voa_; }

 protected:
  bool is_vacuum(const FockState& a) const override { return a.is_vacuum(); }
  std::optional<FockVector> base_mode(const FockState& a, const Rational& s, const FockState& w) override;
  Decomposition decompose(const FockState& a) const override;

 private:
  FockAlgebra voa_;
  FockAlgebra module_;
};

/// Leftmost-creation-mode decomposition shared by every module of V.
ModeEngine<FockState, FockState>::Decomposition decompose_monomial(const FockState& a);

/// Generator modes acting inside V itself: α_j x or ψ_j x.
FockVector generator_mode(const FockAlgebra& alg, const FockState& generator, long j, const FockState& x);

/// The free-field N=1 vertex operator superalgebra V = B ⊗ F_NS with
/// ω = ½α(-1)²|0> + ½ψ(-3/2)ψ(-1/2)|0>, c = 3/2 and τ = α(-1)ψ(-1/2)|0>.
class FreeFieldVosa {
 public:
  /// Test states are those of weight <= max_weight.
  explicit FreeFieldVosa(Rational max_weight = 4);

  const TruncatedSpace& space() const { return space_; }
  const FockAlgebra& algebra() const { return algebra_; }
  VosaAdjoint& engine() { return *engine_; }

  static Rational central_charge() { return make_rational(3, 2); }
  static FockVector vacuum();
  static FockVector conformal_vector();
  static FockVector boson_conformal_vector();
  static FockVector fermion_conformal_vector();
  static FockVector tau();

  /// v_n w, exact (no truncation).
  FockVector mode(const FockVector& v, const Rational& n, const FockVector& w);
  /// v_n restricted to the truncated space. Throws TruncationOverflow if v lies outside it.
  ModeOperator vertex_mode(const FockVector& v, const Rational& n);

  /// L(n) = ω_{n+1}.
  FockVector virasoro(long n, const FockVector& w);
  /// G(r) = τ_{r+1/2}, r ∈ Z + 1/2.
  FockVector supercurrent(const Rational& r, const FockVector& w);

  /// L(j), j >= 1, for apply_delta.
  VirasoroLowering<FockState> lowering();

 private:
  FockAlgebra algebra_;
  TruncatedSpace space_;
  std::unique_ptr<VosaAdjoint> engine_;
};

/// States of V ⊗ V.
using PairState = std::pair<FockState, FockState>;
using PairVector = SparseVector<PairState>;

inline Rational pair_weight(const PairState& p) { return p.first.level() + p.second.level(); }
inline int pair_parity(const PairState& p) { return (p.first.parity() + p.second.parity()) % 2; }
std::string pair_to_string(const PairState& p);

/// u ⊗ v with u, v vectors of V.
PairVector tensor(const FockVector& u, const FockVector& v);

/// V ⊗ V with Koszul-signed vertex operators
///   Y(a ⊗ b, x)(c ⊗ d) = (-1)^{|b||c|} Y(a, x)c ⊗ Y(b, x)d,
/// the signed transposition κ̃(u ⊗ v) = (-1)^{|u||v|} v ⊗ u, and the parity map.
class TensorVosa {
 public:
  TensorVosa(FreeFieldVosa& factor, Rational max_weight = 4);

  FreeFieldVosa& factor() { return factor_; }
  /// Pair states with combined weight <= max_weight, sorted by (weight, state).
  const std::vector<PairState>& basis() const { return basis_; }

  static Rational central_charge() { return 3; }
  static PairVector vacuum();
  static PairVector conformal_vector();

  PairVector mode(const PairState& a, const Rational& n, const PairState& w);
  PairVector mode(const PairVector& a, const Rational& n, const PairVector& w);

  /// v^j: v in slot j ∈ {1, 2}, vacuum elsewhere.
  static PairVector slot_embed(const FockVector& v, int j);
  static PairVector mirror(const PairVector& v);
  static PairVector parity_map(const PairVector& v);

 private:
  FreeFieldVosa& factor_;
  std::vector<PairState> basis_;
  std::map<std::tuple<PairState, Rational, PairState>, PairVector> memo_;
};

class RelationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NoCalibration : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Vacuum, creation, L(0)-grading and L(-1)-derivative axioms for modes
/// |n| <= window on the truncated basis of V.
CheckReport verify_vosa_axioms(FreeFieldVosa& v, long window);
/// The same axioms for V ⊗ V on its basis.
CheckReport verify_vosa_axioms(TensorVosa& vv, long window);

/// Jacobi sweeps on V for the generator pairs (α, α), (α, ψ), (ψ, α), (ψ, ψ).
/// `module` defaults to V's own adjoint engine.
CheckReport verify_generator_jacobi(FreeFieldVosa& v, long window, VosaAdjoint* module = nullptr);
/// Jacobi sweeps for (ω, s) with s running over the basis states of weight <= max_weight.
CheckReport verify_conformal_jacobi(FreeFieldVosa& v, const Rational& max_weight, long window);

/// κ̃(a_n w) = (κ̃a)_n κ̃w and the parity law |a_n w| = |a| + |w| on the basis of V ⊗ V.
CheckReport verify_mirror_equivariance(TensorVosa& vv, long window);

/// G(r) = τ_{r+1/2} and L(n) = ω_{n+1} against the n1-ns presentation with C -> 3/2.
Realization<FockState> n1_realization(FreeFieldVosa& v);
CheckReport verify_n1_structure(FreeFieldVosa& v, long window);

/// τ⁽¹⁾ = c₁(τ¹ + τ²), τ⁽²⁾ = c₂(α ⊗ ψ - ψ ⊗ α), J = c_J ψ ⊗ ψ.
struct N2Data {
  Scalar c1, c2, cJ;
  PairVector tau1, tau2, j;
  /// Number of solutions of the normalization equations (sign choices).
  std::size_t solutions = 0;
};

/// Solves the normalizations from vacuum-line brackets, then checks the full
/// n2-ns table with C -> 3 on basis states of weight <= max_weight.
/// Throws NoCalibration when the equations have no solution in Q(i, √2).
N2Data calibrate_n2(TensorVosa& vv);
Realization<PairState> n2_realization(TensorVosa& vv, const N2Data& data);
CheckReport verify_n2_structure(TensorVosa& vv, const N2Data& data, const Rational& max_weight, long window);

nlohmann::json to_json(const N2Data& data);

/// tr q^{-c/24 + L(0)} over V (c = 3/2), or over F_NS (c = 1/2) when
/// fermion_only, keeping exponents below trunc.
Series vosa_character(FreeFieldVosa& v, const Rational& trunc, bool fermion_only = false);

}  // namespace superfock
