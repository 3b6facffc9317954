#include "superfock/fock.hpp"

#include <algorithm>
#include <sstream>

namespace superfock {

Rational FockState::level() const {
  long twice = 0;
  for (int n : bosons) twice += 2L * n;
  for (int m : fermions) twice += m;
  return make_rational(twice, 2);
}

int FockState::parity() const { return static_cast<int>((fermions.size() + (ground == -1 ? 1 : 0)) % 2); }

std::string FockState::to_string() const {
  std::ostringstream out;
  for (int n : bosons) out << "a(-" << n << ")";
  for (int m : fermions) {
    if (m % 2 == 0) {
      out << "psi(-" << m / 2 << ")";
    } else {
      out << "psi(-" << m << "/2)";
    }
  }
  if (ground == 0) out << "|0>";
  else out << (ground > 0 ? "|w+>" : "|w->");
  return out.str();
}

FockAlgebra::FockAlgebra(FockKind kind, Rational fermion_norm) : kind_(kind), norm_(std::move(fermion_norm)) {
  if (kind_.fermion == FermionSector::ramond) {
    auto root = Scalar(Rational(norm_ / 2)).rational_sqrt();
    if (!root) throw std::invalid_argument("Ramond zero mode needs sqrt(norm/2) in Q(i, sqrt2)");
    zero_mode_coefficient_ = *root;
  }
}

Rational FockAlgebra::fermion_offset() const {
  return kind_.fermion == FermionSector::ns ? Rational(1, 2) : Rational(0);
}

FockVector FockAlgebra::boson(long n, const FockState& s) const {
  if (!kind_.boson) throw std::invalid_argument("this Fock space has no boson");
  FockVector out;
  if (n == 0) return out;
  if (n < 0) {
    FockState t = s;
    int part = static_cast<int>(-n);
    auto pos = std::find_if(t.bosons.begin(), t.bosons.end(), [&](int b) { return b < part; });
    t.bosons.insert(pos, part);
    out.add(t, 1);
    return out;
  }
  long count = std::count(s.bosons.begin(), s.bosons.end(), static_cast<int>(n));
  if (count == 0) return out;
  FockState t = s;
  t.bosons.erase(std::find(t.bosons.begin(), t.bosons.end(), static_cast<int>(n)));
  out.add(t, Scalar(Rational(n * count)));
  return out;
}

FockVector FockAlgebra::fermion(const Rational& r, const FockState& s) const {
  if (kind_.fermion == FermionSector::none) throw std::invalid_argument("this Fock space has no fermion");
  if (!is_integer(r - fermion_offset())) {
    throw std::invalid_argument("fermion mode " + r.get_str() + " is off the lattice of this sector");
  }
  FockVector out;
  const long twice = to_long(2 * r);
  if (twice == 0) {
    // Ramond zero mode: anticommute past every stored fermion, then flip the ground.
    FockState t = s;
    t.ground = -s.ground;
    Scalar c = s.fermions.size() % 2 == 0 ? zero_mode_coefficient_ : -zero_mode_coefficient_;
    out.add(t, c);
    return out;
  }
  if (twice < 0) {
    int m = static_cast<int>(-twice);
    if (std::find(s.fermions.begin(), s.fermions.end(), m) != s.fermions.end()) return out;
    FockState t = s;
    auto pos = std::find_if(t.fermions.begin(), t.fermions.end(), [&](int f) { return f < m; });
    long passed = pos - t.fermions.begin();
    t.fermions.insert(pos, m);
    out.add(t, passed % 2 == 0 ? Scalar(1) : Scalar(-1));
    return out;
  }
  int m = static_cast<int>(twice);
  auto pos = std::find(s.fermions.begin(), s.fermions.end(), m);
  if (pos == s.fermions.end()) return out;
  long passed = pos - s.fermions.begin();
  FockState t = s;
  t.fermions.erase(t.fermions.begin() + passed);
  out.add(t, Scalar(passed % 2 == 0 ? norm_ : Rational(-norm_)));
  return out;
}

FockVector FockAlgebra::boson(long n, const FockVector& v) const {
  return apply_linear(v, [&](const FockState& s) { return boson(n, s); });
}

FockVector FockAlgebra::fermion(const Rational& r, const FockVector& v) const {
  return apply_linear(v, [&](const FockState& s) { return fermion(r, s); });
}

namespace {

// Non-increasing partitions of total into parts <= max_part.
void boson_partitions(int total, int max_part, std::vector<int>& current, std::vector<std::vector<int>>& out) {
  if (total == 0) {
    out.push_back(current);
    return;
  }
  for (int p = std::min(total, max_part); p >= 1; --p) {
    current.push_back(p);
    boson_partitions(total - p, p, current, out);
    current.pop_back();
  }
}

// Strictly decreasing twice-mode lists with parts of the given parity, sum < bound.
void fermion_sets(int remaining, int max_part, int step_parity, std::vector<int>& current,
                  std::vector<std::vector<int>>& out) {
  out.push_back(current);
  for (int p = max_part; p >= 1; --p) {
    if (p % 2 != step_parity || p > remaining) continue;
    current.push_back(p);
    fermion_sets(remaining - p, p - 1, step_parity, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<FockState> enumerate_states(const FockKind& kind, const Rational& level_bound) {
  std::vector<FockState> out;
  if (level_bound <= 0) return out;
  // Work in half units: twice_level < twice_bound.
  const Rational twice_bound_q = 2 * level_bound;
  long twice_max = floor_long(twice_bound_q);
  if (is_integer(twice_bound_q)) twice_max -= 1;

  std::vector<std::vector<int>> boson_lists;
  if (kind.boson) {
    for (int total = 0; 2 * total <= twice_max; ++total) {
      std::vector<int> current;
      boson_partitions(total, total, current, boson_lists);
    }
  } else {
    boson_lists.emplace_back();
  }
  std::vector<std::vector<int>> fermion_lists;
  if (kind.fermion != FermionSector::none) {
    std::vector<int> current;
    int parity = kind.fermion == FermionSector::ns ? 1 : 0;
    fermion_sets(static_cast<int>(twice_max), static_cast<int>(twice_max), parity, current, fermion_lists);
  } else {
    fermion_lists.emplace_back();
  }
  std::vector<int> grounds = kind.fermion == FermionSector::ramond ? std::vector<int>{1, -1} : std::vector<int>{0};

  for (const auto& b : boson_lists) {
    long twice_b = 0;
    for (int n : b) twice_b += 2L * n;
    for (const auto& f : fermion_lists) {
      long twice_f = 0;
      for (int m : f) twice_f += m;
      if (twice_b + twice_f > twice_max) continue;
      for (int g : grounds) out.push_back(FockState{b, f, g});
    }
  }
  std::sort(out.begin(), out.end(), [](const FockState& x, const FockState& y) {
    Rational lx = x.level(), ly = y.level();
    if (lx != ly) return lx < ly;
    return x < y;
  });
  return out;
}

TruncatedSpace::TruncatedSpace(FockKind kind, Rational weight_bound, Rational ground_weight)
    : kind_(kind), weight_bound_(std::move(weight_bound)), ground_weight_(std::move(ground_weight)) {
  basis_ = enumerate_states(kind_, weight_bound_ - ground_weight_);
  for (std::size_t i = 0; i < basis_.size(); ++i) index_.emplace(basis_[i], i);
}

bool TruncatedSpace::contains(const FockState& s) const { return index_.count(s) > 0; }

std::optional<std::size_t> TruncatedSpace::index_of(const FockState& s) const {
  auto it = index_.find(s);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::map<Rational, std::size_t> TruncatedSpace::layer_dimensions() const {
  std::map<Rational, std::size_t> out;
  for (const auto& s : basis_) ++out[weight(s)];
  return out;
}

FockVector TruncatedSpace::checked(FockVector v) const {
  for (const auto& [s, c] : v) {
    if (!contains(s)) {
      throw TruncationOverflow(s.to_string() + " has weight " + weight(s).get_str() + ", outside the truncation " +
                               weight_bound_.get_str());
    }
  }
  return v;
}

std::string TruncatedSpace::dump() const {
  std::string out;
  for (const auto& s : basis_) out += s.to_string() + "\n";
  return out;
}

ModeOperator::ModeOperator(std::string label, Rational index, std::vector<FockVector> columns)
    : label_(std::move(label)), index_(std::move(index)), columns_(std::move(columns)) {}

ModeOperator ModeOperator::materialize(const TruncatedSpace& space, std::string label, Rational index,
                                       const std::function<FockVector(const FockState&)>& action) {
  std::vector<FockVector> columns;
  columns.reserve(space.dimension());
  for (const auto& s : space.basis()) columns.push_back(action(s));
  return {std::move(label), std::move(index), std::move(columns)};
}

std::optional<std::vector<Scalar>> ModeOperator::diagonal(const TruncatedSpace& space) const {
  std::vector<Scalar> out;
  out.reserve(columns_.size());
  for (std::size_t j = 0; j < columns_.size(); ++j) {
    const FockVector& col = columns_[j];
    const FockState& s = space.basis()[j];
    if (col.size() > 1 || (col.size() == 1 && !(col.begin()->first == s))) return std::nullopt;
    out.push_back(col.coefficient(s));
  }
  return out;
}

Series character(const TruncatedSpace& space, const Rational& central_charge, const ModeOperator& l0) {
  const Rational shift = -central_charge / 24;
  Series out(Variable::q, shift + space.weight_bound());
  auto diag = l0.diagonal(space);
  if (!diag) throw NonDiagonal(l0.label() + " mixes basis states");
  for (const Scalar& lambda : *diag) {
    if (!lambda.is_rational()) throw NonDiagonal(l0.label() + " has a non-rational eigenvalue");
    out.add_term(shift + lambda.a(), 1);
  }
  return out;
}

}  // namespace superfock
