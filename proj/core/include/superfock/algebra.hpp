#pragma once

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "superfock/rational.hpp"
#include "superfock/scalar.hpp"

namespace superfock {

enum class Family { L, G, G1, G2, J, C };

class InvalidIndexLattice : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class InvalidAlgebra : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A basis generator L_n, G_r, G1_r, G2_r, J_n or the central element C.
struct Generator {
  Family family = Family::C;
  Rational index;

  static Generator central() { return {Family::C, 0}; }

  /// 0 for L, J, C; 1 for G, G1, G2.
  int parity() const { return family == Family::G || family == Family::G1 || family == Family::G2 ? 1 : 0; }
  std::string to_string() const;

  friend bool operator==(const Generator& x, const Generator& y) {
    return x.family == y.family && x.index == y.index;
  }
  friend bool operator<(const Generator& x, const Generator& y) {
    if (x.family != y.family) return x.family < y.family;
    return x.index < y.index;
  }
};

std::string family_name(Family f);

/// Finitely supported linear combination of generators; zero coefficients are dropped.
class AlgebraElement {
 public:
  using Terms = std::map<Generator, Scalar>;

  AlgebraElement() = default;
  AlgebraElement(const Generator& g, const Scalar& c = 1) { add(g, c); }  // NOLINT

  void add(const Generator& g, const Scalar& c);
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coefficient(const Generator& g) const;

  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  AlgebraElement& operator*=(const Scalar& s);
  friend AlgebraElement operator+(AlgebraElement x, const AlgebraElement& y) { return x += y; }
  friend AlgebraElement operator-(AlgebraElement x, const AlgebraElement& y) { return x -= y; }
  friend AlgebraElement operator*(const Scalar& s, AlgebraElement x) { return x *= s; }
  friend bool operator==(const AlgebraElement& x, const AlgebraElement& y) { return x.terms_ == y.terms_; }

  std::string to_string() const;

 private:
  Terms terms_;
};

nlohmann::json to_json(const AlgebraElement& e);

enum class AlgebraName { virasoro, n1_ns, n1_ramond, n2_ns, n2_ramond, n2_mirror_twisted };

std::string algebra_name(AlgebraName n);
std::optional<AlgebraName> parse_algebra_name(const std::string& s);
std::vector<AlgebraName> all_algebras();

/// Structure constants of one of the six superconformal presentations. The
/// Virasoro central term is (m^3 - m)/12 unless overridden (used for negative
/// controls).
class Presentation {
 public:
  using CentralTerm = std::function<Rational(const Rational& m)>;

  explicit Presentation(AlgebraName name);
  Presentation(AlgebraName name, CentralTerm virasoro_central, std::string label);

  AlgebraName name() const { return name_; }
  const std::string& label() const { return label_; }

  /// True when the family occurs in this algebra and the index sits on its lattice.
  bool valid(const Generator& g) const;
  /// Offset of the index lattice (0 -> Z, 1/2 -> Z + 1/2), nullopt if the family is absent.
  std::optional<Rational> lattice_offset(Family f) const;
  std::vector<Family> families() const;

  /// Super-bracket of two basis generators.
  AlgebraElement bracket(const Generator& x, const Generator& y) const;
  AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y) const;

  /// All non-central basis generators with |index| <= window, plus C.
  std::vector<Generator> window_basis(long window) const;

 private:
  void require_valid(const Generator& g) const;
  AlgebraElement ordered_bracket(const Generator& x, const Generator& y) const;

  AlgebraName name_;
  CentralTerm virasoro_central_;
  std::string label_;
};

AlgebraElement bracket(const Presentation& alg, const AlgebraElement& a, const AlgebraElement& b);

struct AlgebraViolation {
  std::string kind;  // "skew" or "jacobi"
  std::vector<Generator> triple;
  AlgebraElement residual;
};

struct AlgebraReport {
  std::string algebra;
  long window = 0;
  std::size_t checked = 0;
  std::vector<AlgebraViolation> violations;
  bool pass() const { return violations.empty(); }
};

nlohmann::json to_json(const AlgebraReport& r);

/// Super-skew-symmetry on pairs and super-Jacobi on triples of windowed basis
/// elements. Triples are swept on `threads` workers; output order is deterministic.
AlgebraReport verify_algebra(const Presentation& alg, long window, unsigned threads = 1);

/// G1 -> G1, G2 -> -G2, J -> -J, L -> L, C -> C on the N=2 Neveu-Schwarz algebra.
AlgebraElement mirror_automorphism(const AlgebraElement& e);

using AlgebraMap = std::function<AlgebraElement(const Generator&)>;

/// Linear extension of a map given on generators.
AlgebraElement apply_map(const AlgebraMap& map, const AlgebraElement& e);

/// map([a, b]) == [map(a), map(b)] for all windowed basis pairs.
AlgebraReport verify_automorphism(const Presentation& alg, const AlgebraMap& map, long window);

}  // namespace superfock
