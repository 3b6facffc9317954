#include "superfock/vosa.hpp"

#include <algorithm>

namespace superfock {

FockState boson_generator() { return {{1}, {}, 0}; }
FockState fermion_generator() { return {{}, {1}, 0}; }

FockVector generator_mode(const FockAlgebra& alg, const FockState& generator, long j, const FockState& x) {
  if (generator == boson_generator()) return alg.boson(j, x);
  if (generator == fermion_generator()) return alg.fermion(Rational(j) + make_rational(1, 2), x);
  throw std::logic_error(generator.to_string() + " is not a generator");
}

ModeEngine<FockState, FockState>::Decomposition decompose_monomial(const FockState& a) {
  ModeEngine<FockState, FockState>::Decomposition d;
  d.rest = a;
  if (!a.bosons.empty()) {
    d.u = boson_generator();
    d.ell = -a.bosons.front();
    d.rest.bosons.erase(d.rest.bosons.begin());
  } else if (!a.fermions.empty()) {
    // ψ(-m/2) = ψ_{-(m+1)/2}
    d.u = fermion_generator();
    d.ell = -(a.fermions.front() + 1) / 2;
    d.rest.fermions.erase(d.rest.fermions.begin());
  } else {
    throw std::logic_error("the vacuum has no decomposition");
  }
  return d;
}

VosaAdjoint::VosaAdjoint(FockAlgebra voa_algebra, FockAlgebra module_algebra)
    : voa_(std::move(voa_algebra)), module_(std::move(module_algebra)) {}

FockVector VosaAdjoint::eigen_part(const FockState& u, long r) const {
  return r == 0 ? FockVector(u) : FockVector();
}

FockVector VosaAdjoint::voa_mode(const FockVector& u, long j, const FockState& x) {
  FockVector out;
  for (const auto& [key, c] : u) {
    if (key == boson_generator() || key == fermion_generator()) {
      out.add_scaled(generator_mode(voa_, key, j, x), c);
    } else if (voa_.fermion_norm() == module_.fermion_norm()) {
      out.add_scaled(mode(key, Rational(j), x), c);
    } else {
      throw std::logic_error("composite VOA modes need the uncorrupted adjoint engine");
    }
  }
  return out;
}

std::optional<FockVector> VosaAdjoint::base_mode(const FockState& a, const Rational& s, const FockState& w) {
  const bool boson = a == boson_generator();
  if (!boson && a != fermion_generator()) return std::nullopt;
  if (!is_integer(s)) return FockVector();
  if (boson) return module_.boson(to_long(s), w);
  return module_.fermion(s + make_rational(1, 2), w);
}

ModeEngine<FockState, FockState>::Decomposition VosaAdjoint::decompose(const FockState& a) const {
  return decompose_monomial(a);
}

FreeFieldVosa::FreeFieldVosa(Rational max_weight)
    : algebra_(FockKind::vosa()),
      space_(FockKind::vosa(), max_weight + make_rational(1, 2)),
      engine_(std::make_unique<VosaAdjoint>(algebra_, algebra_)) {}

FockVector FreeFieldVosa::vacuum() { return FockVector(FockState::vacuum()); }

FockVector FreeFieldVosa::boson_conformal_vector() {
  return FockVector(FockState{{1, 1}, {}, 0}, Scalar(make_rational(1, 2)));
}

FockVector FreeFieldVosa::fermion_conformal_vector() {
  return FockVector(FockState{{}, {3, 1}, 0}, Scalar(make_rational(1, 2)));
}

FockVector FreeFieldVosa::conformal_vector() { return boson_conformal_vector() + fermion_conformal_vector(); }

FockVector FreeFieldVosa::tau() { return FockVector(FockState{{1}, {1}, 0}); }

FockVector FreeFieldVosa::mode(const FockVector& v, const Rational& n, const FockVector& w) {
  return engine_->mode(v, n, w);
}

ModeOperator FreeFieldVosa::vertex_mode(const FockVector& v, const Rational& n) {
  for (const auto& [s, c] : v) {
    if (!space_.contains(s)) {
      throw TruncationOverflow(s.to_string() + " lies outside the truncation " + space_.weight_bound().get_str());
    }
  }
  return ModeOperator::materialize(space_, "Y_" + n.get_str(), n, [&](const FockState& s) {
    FockVector image = engine_->mode(v, n, FockVector(s));
    FockVector kept;
    for (const auto& [t, c] : image) {
      if (space_.contains(t)) kept.add(t, c);
    }
    return kept;
  });
}

FockVector FreeFieldVosa::virasoro(long n, const FockVector& w) {
  return engine_->mode(conformal_vector(), Rational(n + 1), w);
}

FockVector FreeFieldVosa::supercurrent(const Rational& r, const FockVector& w) {
  return engine_->mode(tau(), r + make_rational(1, 2), w);
}

VirasoroLowering<FockState> FreeFieldVosa::lowering() {
  return {[this](long j, const FockVector& v) { return virasoro(j, v); },
          [](const FockState& s) { return s.level(); }};
}

std::string pair_to_string(const PairState& p) { return p.first.to_string() + " (x) " + p.second.to_string(); }

PairVector tensor(const FockVector& u, const FockVector& v) {
  PairVector out;
  for (const auto& [a, x] : u) {
    for (const auto& [b, y] : v) out.add({a, b}, x * y);
  }
  return out;
}

TensorVosa::TensorVosa(FreeFieldVosa& factor, Rational max_weight) : factor_(factor) {
  std::vector<FockState> states = enumerate_states(FockKind::vosa(), max_weight + make_rational(1, 2));
  for (const auto& a : states) {
    for (const auto& b : states) {
      if (a.level() + b.level() <= max_weight) basis_.emplace_back(a, b);
    }
  }
  std::sort(basis_.begin(), basis_.end(), [](const PairState& x, const PairState& y) {
    Rational wx = pair_weight(x), wy = pair_weight(y);
    if (wx != wy) return wx < wy;
    return x < y;
  });
}

PairVector TensorVosa::vacuum() { return PairVector({FockState::vacuum(), FockState::vacuum()}); }

PairVector TensorVosa::conformal_vector() {
  return slot_embed(FreeFieldVosa::conformal_vector(), 1) + slot_embed(FreeFieldVosa::conformal_vector(), 2);
}

PairVector TensorVosa::mode(const PairState& a, const Rational& n, const PairState& w) {
  if (!is_integer(n)) return {};
  auto key = std::make_tuple(a, n, w);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  const auto& [x, y] = a;
  const auto& [c, d] = w;
  // x_p c vanishes for p > wt x + wt c - 1, y_q d for q > wt y + wt d - 1, q = n - 1 - p.
  const long lo = -floor_long(-(n - y.level() - d.level()));
  const long hi = floor_long(x.level() + c.level() - 1);
  const Scalar sign = y.parity() * c.parity() == 1 ? Scalar(-1) : Scalar(1);
  VosaAdjoint& e = factor_.engine();
  PairVector out;
  for (long p = lo; p <= hi; ++p) {
    FockVector left = e.mode(x, Rational(p), c);
    if (left.is_zero()) continue;
    FockVector right = e.mode(y, n - 1 - p, d);
    if (right.is_zero()) continue;
    out.add_scaled(tensor(left, right), sign);
  }
  memo_.emplace(std::move(key), out);
  return out;
}

PairVector TensorVosa::mode(const PairVector& a, const Rational& n, const PairVector& w) {
  PairVector out;
  for (const auto& [x, cx] : a) {
    for (const auto& [y, cy] : w) out.add_scaled(mode(x, n, y), cx * cy);
  }
  return out;
}

PairVector TensorVosa::slot_embed(const FockVector& v, int j) {
  if (j != 1 && j != 2) throw std::invalid_argument("slot must be 1 or 2");
  return j == 1 ? tensor(v, FreeFieldVosa::vacuum()) : tensor(FreeFieldVosa::vacuum(), v);
}

PairVector TensorVosa::mirror(const PairVector& v) {
  PairVector out;
  for (const auto& [p, c] : v) {
    const bool odd = p.first.parity() * p.second.parity() == 1;
    out.add({p.second, p.first}, odd ? -c : c);
  }
  return out;
}

PairVector TensorVosa::parity_map(const PairVector& v) {
  PairVector out;
  for (const auto& [p, c] : v) out.add(p, pair_parity(p) == 1 ? -c : c);
  return out;
}

namespace {

template <class Key>
struct AxiomView {
  std::string name;
  std::function<SparseVector<Key>(const Key&, const Rational&, const Key&)> mode;
  std::function<SparseVector<Key>(const SparseVector<Key>&, const Rational&, const Key&)> vector_mode;
  std::vector<Key> basis;
  Key vacuum;
  SparseVector<Key> omega;
  std::function<Rational(const Key&)> weight;
  std::function<std::string(const Key&)> show;
  Rational max_weight;
};

template <class Key>
CheckReport axioms(const AxiomView<Key>& view, long window) {
  using Vec = SparseVector<Key>;
  CheckReport report;
  report.suite = "axioms " + view.name;
  report.window = window;
  auto fail = [&](const std::string& kind, std::vector<std::string> where, const Vec& residual) {
    record(report, {kind, std::move(where), make_residual(residual, view.show)});
  };
  for (const Key& w : view.basis) {
    for (long n = -window; n <= window; ++n) {
      Vec got = view.mode(view.vacuum, Rational(n), w);
      Vec want = n == -1 ? Vec(w) : Vec();
      ++report.checked;
      if (got != want) fail("vacuum", {"n=" + std::to_string(n), view.show(w)}, got - want);
    }
  }
  for (const Key& a : view.basis) {
    Vec created = view.mode(a, Rational(-1), view.vacuum);
    ++report.checked;
    if (created != Vec(a)) fail("creation", {view.show(a)}, created - Vec(a));
    for (long n = 0; n <= window; ++n) {
      Vec zero = view.mode(a, Rational(n), view.vacuum);
      ++report.checked;
      if (!zero.is_zero()) fail("creation", {view.show(a), "n=" + std::to_string(n)}, zero);
    }
    Vec graded = view.vector_mode(view.omega, Rational(1), a);
    Vec want = Scalar(view.weight(a)) * Vec(a);
    ++report.checked;
    if (graded != want) fail("grading", {view.show(a)}, graded - want);
  }
  for (const Key& a : view.basis) {
    Vec derivative = view.vector_mode(view.omega, Rational(0), a);
    for (const Key& w : view.basis) {
      if (view.weight(a) + view.weight(w) > view.max_weight) continue;
      for (long n = -window; n <= window; ++n) {
        Vec lhs;
        for (const auto& [b, c] : derivative) lhs.add_scaled(view.mode(b, Rational(n), w), c);
        Vec rhs = Scalar(Rational(-n)) * view.mode(a, Rational(n - 1), w);
        ++report.checked;
        if (lhs != rhs) fail("derivative", {view.show(a), "n=" + std::to_string(n), view.show(w)}, lhs - rhs);
      }
    }
  }
  return report;
}

std::string show_fock(const FockState& s) { return s.to_string(); }

}  // namespace

CheckReport verify_vosa_axioms(FreeFieldVosa& v, long window) {
  AxiomView<FockState> view;
  view.name = "V";
  view.mode = [&](const FockState& a, const Rational& n, const FockState& w) {
    return v.engine().mode(a, n, w);
  };
  view.vector_mode = [&](const FockVector& a, const Rational& n, const FockState& w) {
    return v.engine().mode(a, n, w);
  };
  view.basis = v.space().basis();
  view.vacuum = FockState::vacuum();
  view.omega = FreeFieldVosa::conformal_vector();
  view.weight = [](const FockState& s) { return s.level(); };
  view.show = show_fock;
  view.max_weight = v.space().weight_bound() - make_rational(1, 2);
  return axioms(view, window);
}

CheckReport verify_vosa_axioms(TensorVosa& vv, long window) {
  AxiomView<PairState> view;
  view.name = "V (x) V";
  view.mode = [&](const PairState& a, const Rational& n, const PairState& w) { return vv.mode(a, n, w); };
  view.vector_mode = [&](const PairVector& a, const Rational& n, const PairState& w) {
    return vv.mode(a, n, PairVector(w));
  };
  view.basis = vv.basis();
  view.vacuum = {FockState::vacuum(), FockState::vacuum()};
  view.omega = TensorVosa::conformal_vector();
  view.weight = pair_weight;
  view.show = pair_to_string;
  view.max_weight = vv.basis().empty() ? Rational(0) : pair_weight(vv.basis().back());
  return axioms(view, window);
}

CheckReport verify_generator_jacobi(FreeFieldVosa& v, long window, VosaAdjoint* module) {
  VosaAdjoint& engine = module ? *module : v.engine();
  VoaModeFn<FockState> voa_mode = [&](const FockVector& u, long j, const FockVector& x) {
    return v.engine().mode(u, Rational(j), x);
  };
  const FockState gens[] = {boson_generator(), fermion_generator()};
  const char* names[] = {"alpha", "psi"};
  CheckReport report;
  report.suite = "jacobi generators on V";
  report.window = window;
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      JacobiPair<FockState> pair;
      pair.label = std::string(names[a]) + "," + names[b];
      pair.u = FockVector(gens[a]);
      pair.v = FockVector(gens[b]);
      pair.wt_u = gens[a].level();
      pair.wt_v = gens[b].level();
      pair.parity_u = gens[a].parity();
      pair.parity_v = gens[b].parity();
      report.merge(verify_jacobi(engine, voa_mode, pair, v.space().basis(), window, show_fock));
    }
  }
  return report;
}

CheckReport verify_conformal_jacobi(FreeFieldVosa& v, const Rational& max_weight, long window) {
  VoaModeFn<FockState> voa_mode = [&](const FockVector& u, long j, const FockVector& x) {
    return v.engine().mode(u, Rational(j), x);
  };
  CheckReport report;
  report.suite = "jacobi conformal on V";
  report.window = window;
  for (const FockState& s : v.space().basis()) {
    if (s.level() > max_weight) continue;
    JacobiPair<FockState> pair;
    pair.label = "omega," + s.to_string();
    pair.u = FreeFieldVosa::conformal_vector();
    pair.v = FockVector(s);
    pair.wt_u = 2;
    pair.wt_v = s.level();
    pair.parity_v = s.parity();
    report.merge(verify_jacobi(v.engine(), voa_mode, pair, v.space().basis(), window, show_fock));
  }
  return report;
}

CheckReport verify_mirror_equivariance(TensorVosa& vv, long window) {
  CheckReport report;
  report.suite = "mirror equivariance on V (x) V";
  report.window = window;
  const Rational cap = vv.basis().empty() ? Rational(0) : pair_weight(vv.basis().back());
  for (const PairState& a : vv.basis()) {
    const PairVector ka = TensorVosa::mirror(PairVector(a));
    for (const PairState& w : vv.basis()) {
      if (pair_weight(a) + pair_weight(w) > cap) continue;
      const PairVector kw = TensorVosa::mirror(PairVector(w));
      for (long n = -window; n <= window; ++n) {
        PairVector image = vv.mode(a, Rational(n), w);
        PairVector lhs = TensorVosa::mirror(image);
        PairVector rhs = vv.mode(ka, Rational(n), kw);
        ++report.checked;
        if (lhs != rhs) {
          record(report, {"mirror", {pair_to_string(a), "n=" + std::to_string(n), pair_to_string(w)},
                          make_residual(lhs - rhs, pair_to_string)});
        }
        const int parity = (pair_parity(a) + pair_parity(w)) % 2;
        ++report.checked;
        for (const auto& [t, c] : image) {
          if (pair_parity(t) != parity) {
            record(report, {"parity", {pair_to_string(a), "n=" + std::to_string(n), pair_to_string(w)},
                            make_residual(image, pair_to_string)});
            break;
          }
        }
      }
    }
  }
  return report;
}

Realization<FockState> n1_realization(FreeFieldVosa& v) {
  return {[&v](const Generator& g, const FockVector& w) -> FockVector {
            switch (g.family) {
              case Family::L:
                return v.virasoro(to_long(g.index), w);
              case Family::G:
                return v.supercurrent(g.index, w);
              default:
                throw std::invalid_argument(g.to_string() + " is not realized on V");
            }
          },
          Scalar(FreeFieldVosa::central_charge())};
}

CheckReport verify_n1_structure(FreeFieldVosa& v, long window) {
  return verify_representation(Presentation(AlgebraName::n1_ns), n1_realization(v), v.space().basis(), window,
                               "n1-ns on V", show_fock);
}

namespace {

// Coefficient λ with v == λ·target, if any.
std::optional<Scalar> proportionality(const PairVector& v, const PairVector& target) {
  if (target.is_zero()) return std::nullopt;
  const auto& [key, c] = *target.begin();
  Scalar lambda = v.coefficient(key) / c;
  if (v != lambda * target) return std::nullopt;
  return lambda;
}

PairVector anticommutator_on(TensorVosa& vv, const PairVector& a, const Rational& m, const PairVector& b,
                             const Rational& n, const PairVector& w, bool odd) {
  PairVector ab = vv.mode(a, m, vv.mode(b, n, w));
  PairVector ba = vv.mode(b, n, vv.mode(a, m, w));
  return odd ? ab + ba : ab - ba;
}

}  // namespace

N2Data calibrate_n2(TensorVosa& vv) {
  const FockVector alpha(boson_generator());
  const FockVector psi(fermion_generator());
  const PairVector vac = TensorVosa::vacuum();
  const PairVector t1 = TensorVosa::slot_embed(FreeFieldVosa::tau(), 1) + TensorVosa::slot_embed(FreeFieldVosa::tau(), 2);
  const PairVector t2 = tensor(alpha, psi) - tensor(psi, alpha);
  const PairVector jv = tensor(psi, psi);

  // [G1_{3/2}, G1_{-3/2}] 1 = 2 1 with G1_r = c1 (t1)_{r+1/2}.
  auto x = proportionality(anticommutator_on(vv, t1, 2, t1, -1, vac, true), vac);
  // [J_1, J_{-1}] 1 = 1.
  auto y = proportionality(anticommutator_on(vv, jv, 1, jv, -1, vac, false), vac);
  // [J_0, G1_{-3/2}] 1 = -i G2_{-3/2} 1.
  auto z = proportionality(anticommutator_on(vv, jv, 0, t1, -1, vac, false), t2);
  // [G2_{3/2}, G2_{-3/2}] 1 = 2 1.
  auto u = proportionality(anticommutator_on(vv, t2, 2, t2, -1, vac, true), vac);
  if (!x || !y || !z || !u || x->is_zero() || y->is_zero() || u->is_zero()) {
    throw NoCalibration("vacuum-line brackets are not proportional to the ansatz vectors");
  }
  auto c1_root = (Scalar(2) / *x).rational_sqrt();
  auto cj_root = (Scalar(1) / *y).rational_sqrt();
  if (!c1_root || !cj_root) throw NoCalibration("normalizations have no square root in Q(i, sqrt2)");

  N2Data data;
  std::optional<N2Data> canonical;
  for (int s1 : {1, -1}) {
    for (int sj : {1, -1}) {
      const Scalar c1 = Scalar(s1) * *c1_root;
      const Scalar cj = Scalar(sj) * *cj_root;
      // c1 cJ z t2 = -i c2 t2
      const Scalar c2 = Scalar::i() * c1 * cj * *z;
      if (c2 * c2 * *u != Scalar(2)) continue;
      ++data.solutions;
      if (!canonical) canonical = N2Data{c1, c2, cj, c1 * t1, c2 * t2, cj * jv, 0};
    }
  }
  if (!canonical) throw NoCalibration("the G2 normalization is inconsistent with G1 and J");
  canonical->solutions = data.solutions;
  return *canonical;
}

Realization<PairState> n2_realization(TensorVosa& vv, const N2Data& data) {
  const PairVector omega = TensorVosa::conformal_vector();
  return {[&vv, omega, data](const Generator& g, const PairVector& w) -> PairVector {
            const Rational half = make_rational(1, 2);
            switch (g.family) {
              case Family::L:
                return vv.mode(omega, g.index + 1, w);
              case Family::G1:
                return vv.mode(data.tau1, g.index + half, w);
              case Family::G2:
                return vv.mode(data.tau2, g.index + half, w);
              case Family::J:
                return vv.mode(data.j, g.index, w);
              default:
                throw std::invalid_argument(g.to_string() + " is not realized on V (x) V");
            }
          },
          Scalar(TensorVosa::central_charge())};
}

CheckReport verify_n2_structure(TensorVosa& vv, const N2Data& data, const Rational& max_weight, long window) {
  std::vector<PairState> tests;
  for (const auto& p : vv.basis()) {
    if (pair_weight(p) <= max_weight) tests.push_back(p);
  }
  return verify_representation(Presentation(AlgebraName::n2_ns), n2_realization(vv, data), tests, window,
                               "n2-ns on V (x) V", pair_to_string);
}

nlohmann::json to_json(const N2Data& data) {
  return nlohmann::json{
      {"c1", to_json(data.c1)}, {"c2", to_json(data.c2)}, {"cJ", to_json(data.cJ)}, {"solutions", data.solutions}};
}

Series vosa_character(FreeFieldVosa& v, const Rational& trunc, bool fermion_only) {
  const Rational c = fermion_only ? make_rational(1, 2) : FreeFieldVosa::central_charge();
  const FockKind kind = fermion_only ? FockKind::fermion_ns() : FockKind::vosa();
  const FockVector omega = fermion_only ? FreeFieldVosa::fermion_conformal_vector() : FreeFieldVosa::conformal_vector();
  const TruncatedSpace space(kind, trunc + c / 24);
  const ModeOperator l0 = ModeOperator::materialize(
      space, "L(0)", 0, [&](const FockState& s) { return v.mode(omega, 1, FockVector(s)); });
  return character(space, c, l0);
}

}  // namespace superfock
