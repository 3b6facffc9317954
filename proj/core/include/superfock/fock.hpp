#pragma once

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "superfock/rational.hpp"
#include "superfock/scalar.hpp"
#include "superfock/series.hpp"
#include "superfock/sparse_vector.hpp"

namespace superfock {

class TruncationOverflow : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class NonDiagonal : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class FermionSector { none, ns, ramond };

/// Which free fields a Fock space carries (d = 1: at most one boson, one fermion).
struct FockKind {
  bool boson = false;
  FermionSector fermion = FermionSector::none;

  static FockKind boson_only() { return {true, FermionSector::none}; }
  static FockKind fermion_ns() { return {false, FermionSector::ns}; }
  static FockKind fermion_ramond() { return {false, FermionSector::ramond}; }
  /// B ⊗ F_NS, the underlying space of V.
  static FockKind vosa() { return {true, FermionSector::ns}; }
  /// B ⊗ F_R, the parity-twisted sector.
  static FockKind ramond_sector() { return {true, FermionSector::ramond}; }

  friend bool operator==(const FockKind&, const FockKind&) = default;
};

/// α(-n_1)⋯α(-n_b) ψ(-r_1)⋯ψ(-r_f) applied to a vacuum. Bosons are stored as
/// n_i (non-increasing); fermions as 2r_i, strictly decreasing. Ramond states
/// carry a ground label w+ (even) or w- (odd); ψ(0) is never stored.
struct FockState {
  std::vector<int> bosons;
  std::vector<int> fermions;
  int ground = 0;  // 0: |0>, +1: |w+>, -1: |w->

  static FockState vacuum() { return {}; }
  static FockState ramond_ground(int sign) { return {{}, {}, sign}; }

  /// Sum of creation-mode magnitudes (the weight above the vacuum/ground).
  Rational level() const;
  int parity() const;
  bool is_vacuum() const { return bosons.empty() && fermions.empty() && ground == 0; }

  /// Canonical text, e.g. a(-2)a(-1)psi(-1/2)|0> or psi(-1)|w+>.
  std::string to_string() const;

  friend auto operator<=>(const FockState&, const FockState&) = default;
};

using FockVector = SparseVector<FockState>;

/// Free-field mode algebra: [α(m), α(n)] = m δ, {ψ(r), ψ(s)} = norm·δ,
/// ψ(0) w± = sqrt(norm/2) w∓. The default norm is 1.
class FockAlgebra {
 public:
  explicit FockAlgebra(FockKind kind, Rational fermion_norm = 1);

  const FockKind& kind() const { return kind_; }
  const Rational& fermion_norm() const { return norm_; }

  /// Offset of the fermion mode lattice: 1/2 for NS, 0 for Ramond.
  Rational fermion_offset() const;

  FockVector boson(long n, const FockState& s) const;
  FockVector fermion(const Rational& r, const FockState& s) const;
  FockVector boson(long n, const FockVector& v) const;
  FockVector fermion(const Rational& r, const FockVector& v) const;

 private:
  FockKind kind_;
  Rational norm_;
  Scalar zero_mode_coefficient_;
};

/// All basis monomials of the kind with level < level_bound, sorted by (level, monomial).
std::vector<FockState> enumerate_states(const FockKind& kind, const Rational& level_bound);

/// Weight-truncated Fock space; weight = ground_weight + level, kept when < weight_bound.
class TruncatedSpace {
 public:
  TruncatedSpace(FockKind kind, Rational weight_bound, Rational ground_weight = 0);

  const FockKind& kind() const { return kind_; }
  const Rational& weight_bound() const { return weight_bound_; }
  const Rational& ground_weight() const { return ground_weight_; }
  const std::vector<FockState>& basis() const { return basis_; }
  std::size_t dimension() const { return basis_.size(); }
  Rational weight(const FockState& s) const { return ground_weight_ + s.level(); }
  bool contains(const FockState& s) const;
  std::optional<std::size_t> index_of(const FockState& s) const;

  /// weight -> number of basis states.
  std::map<Rational, std::size_t> layer_dimensions() const;

  /// Throws TruncationOverflow when any output component leaves the space.
  FockVector checked(FockVector v) const;

  /// One state per line, canonical monomial text.
  std::string dump() const;

 private:
  FockKind kind_;
  Rational weight_bound_;
  Rational ground_weight_;
  std::vector<FockState> basis_;
  std::map<FockState, std::size_t> index_;
};

/// Exact sparse matrix of a linear map restricted to a truncated basis: column
/// j is the image of basis()[j]. Images may leave the truncation.
class ModeOperator {
 public:
  ModeOperator(std::string label, Rational index, std::vector<FockVector> columns);

  static ModeOperator materialize(const TruncatedSpace& space, std::string label, Rational index,
                                  const std::function<FockVector(const FockState&)>& action);

  const std::string& label() const { return label_; }
  const Rational& index() const { return index_; }
  const std::vector<FockVector>& columns() const { return columns_; }

  /// Diagonal entries when every column is a multiple of its own basis state.
  std::optional<std::vector<Scalar>> diagonal(const TruncatedSpace& space) const;

 private:
  std::string label_;
  Rational index_;
  std::vector<FockVector> columns_;
};

/// sum over the basis of q^{-c/24 + λ} for the eigenvalues λ of a diagonal L0.
/// The series is truncated at -c/24 + weight_bound. Throws NonDiagonal otherwise.
Series character(const TruncatedSpace& space, const Rational& central_charge, const ModeOperator& l0);

}  // namespace superfock
