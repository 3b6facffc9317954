#include "superfock/twisted.hpp"

namespace superfock {

namespace {

const Rational kHalf = make_rational(1, 2);

std::string show_fock(const FockState& s) { return s.to_string(); }

bool odd_twice(const Rational& s) { return !is_integer(s); }

VoaModeFn<FockState> vosa_modes(FreeFieldVosa& v) {
  return [&v](const FockVector& u, long j, const FockVector& x) { return v.mode(u, Rational(j), x); };
}

VoaModeFn<PairState> tensor_modes(TensorVosa& vv) {
  return [&vv](const PairVector& u, long j, const PairVector& x) { return vv.mode(u, Rational(j), x); };
}

// Swaps the G family of an N=1 presentation for G1 or G2 of the N=2 realization.
Realization<FockState> relabel_g(const Realization<FockState>& rho, Family target) {
  return {[rho, target](const Generator& g, const FockVector& w) {
            return rho.apply(g.family == Family::G ? Generator{target, g.index} : g, w);
          },
          rho.central};
}

}  // namespace

SigmaTwistedModule::SigmaTwistedModule(FreeFieldVosa& v, Rational fermion_norm)
    : v_(v), algebra_(FockKind::ramond_sector(), std::move(fermion_norm)) {}

FockVector SigmaTwistedModule::eigen_part(const FockState& u, long r) const {
  return u.parity() == r ? FockVector(u) : FockVector();
}

FockVector SigmaTwistedModule::voa_mode(const FockVector& u, long j, const FockState& x) {
  return v_.mode(u, Rational(j), FockVector(x));
}

std::optional<FockVector> SigmaTwistedModule::base_mode(const FockState& a, const Rational& s, const FockState& w) {
  if (a == boson_generator()) {
    if (!is_integer(s)) return FockVector();
    return algebra_.boson(to_long(s), w);
  }
  if (a == fermion_generator()) {
    if (is_integer(s)) return FockVector();
    return algebra_.fermion(s + kHalf, w);
  }
  return std::nullopt;
}

ModeEngine<FockState, FockState>::Decomposition SigmaTwistedModule::decompose(const FockState& a) const {
  return decompose_monomial(a);
}

TruncatedSpace SigmaTwistedModule::space(const Rational& max_level) {
  return TruncatedSpace(FockKind::ramond_sector(), max_level + kHalf);
}

FockVector SigmaTwistedModule::virasoro(long n, const FockVector& w) {
  return mode(FreeFieldVosa::conformal_vector(), Rational(n + 1), w);
}

FockVector SigmaTwistedModule::supercurrent(const Rational& r, const FockVector& w) {
  return mode(FreeFieldVosa::tau(), r + kHalf, w);
}

Rational SigmaTwistedModule::ground_weight() {
  std::optional<Rational> out;
  for (int sign : {1, -1}) {
    const FockState g = FockState::ramond_ground(sign);
    FockVector image = virasoro(0, FockVector(g));
    Scalar lambda = image.coefficient(g);
    if (image != lambda * FockVector(g) || !lambda.is_rational()) {
      throw NonDiagonal("L(0) does not act as a rational scalar on " + g.to_string());
    }
    if (out && *out != lambda.a()) throw NonDiagonal("L(0) differs between the Ramond ground states");
    out = lambda.a();
  }
  return *out;
}

MirrorTwistedModule::MirrorTwistedModule(TensorVosa& vv, SigmaTwistedModule& sigma, SingleSlotRoute route)
    : vv_(vv), sigma_(sigma), route_(route) {}

PairVector MirrorTwistedModule::eigen_part(const PairState& u, long r) const {
  const PairVector a(u);
  const PairVector k = TensorVosa::mirror(a);
  return Scalar(kHalf) * (r == 0 ? a + k : a - k);
}

PairVector MirrorTwistedModule::voa_mode(const PairVector& u, long j, const PairState& x) {
  return vv_.mode(u, Rational(j), PairVector(x));
}

FockVector MirrorTwistedModule::single_slot_mode(const FockVector& v, int slot, const Rational& p,
                                                 const FockVector& w) {
  if (slot != 1 && slot != 2) throw std::invalid_argument("slot must be 1 or 2");
  if (!is_integer(2 * p)) return {};
  std::map<Rational, FockVector> parts;
  for (const auto& [s, c] : v) parts[s.level()].add(s, c);
  FockVector out;
  for (const auto& [wt, part] : parts) {
    // Y_g(v¹, x) = Σ_t x^{e_t} Y_σ(u_t, x^{1/2}); x^{-p-1} collects (u_t)^σ_{2p+1+2e_t}.
    for (const auto& [e, u] : apply_delta(part, 2, sigma_.vosa().lowering())) {
      out += sigma_.mode(u, 2 * p + 1 + 2 * e, w);
    }
  }
  if (slot == 2 && odd_twice(p)) out *= Scalar(-1);
  return out;
}

FockVector MirrorTwistedModule::virasoro(const Rational& n, const FockVector& w) {
  return mode(TensorVosa::conformal_vector(), n + 1, w);
}

std::optional<FockVector> MirrorTwistedModule::base_mode(const PairState& a, const Rational& s, const FockState& w) {
  const bool first = !a.first.is_vacuum();
  const bool second = !a.second.is_vacuum();
  if (first == second) return std::nullopt;
  const FockState& state = first ? a.first : a.second;
  if (route_ == SingleSlotRoute::iterate && state != boson_generator() && state != fermion_generator()) {
    return std::nullopt;
  }
  return single_slot_mode(FockVector(state), first ? 1 : 2, s, FockVector(w));
}

ModeEngine<PairState, FockState>::Decomposition MirrorTwistedModule::decompose(const PairState& a) const {
  const FockState vac = FockState::vacuum();
  Decomposition d;
  if (!a.first.is_vacuum() && !a.second.is_vacuum()) {
    // a ⊗ b = (a ⊗ 1)_{-1} (1 ⊗ b)
    d.u = {a.first, vac};
    d.ell = -1;
    d.rest = {vac, a.second};
    return d;
  }
  const bool first = !a.first.is_vacuum();
  auto inner = decompose_monomial(first ? a.first : a.second);
  d.u = first ? PairState{inner.u, vac} : PairState{vac, inner.u};
  d.rest = first ? PairState{inner.rest, vac} : PairState{vac, inner.rest};
  d.ell = inner.ell;
  d.coefficient = inner.coefficient;
  return d;
}

TwistedModule::TwistedModule(TruncatedSpace space, MirrorTwistedModule& engine, N2Data data)
    : space_(std::move(space)), engine_(engine), data_(std::move(data)) {}

Realization<FockState> TwistedModule::realization() {
  return {[this](const Generator& g, const FockVector& w) -> FockVector {
            switch (g.family) {
              case Family::L:
                return engine_.mode(TensorVosa::conformal_vector(), g.index + 1, w);
              case Family::G1:
                return engine_.mode(data_.tau1, g.index + kHalf, w);
              case Family::G2:
                return engine_.mode(data_.tau2, g.index + kHalf, w);
              case Family::J:
                return engine_.mode(data_.j, g.index, w);
              default:
                throw std::invalid_argument(g.to_string() + " is not realized on the twisted module");
            }
          },
          Scalar(TensorVosa::central_charge())};
}

std::vector<Rational> TwistedModule::l0_spectrum() {
  std::vector<Rational> out;
  out.reserve(space_.dimension());
  for (const FockState& s : space_.basis()) {
    FockVector image = engine_.virasoro(0, FockVector(s));
    Scalar lambda = image.coefficient(s);
    if (image != lambda * FockVector(s) || !lambda.is_rational()) {
      throw NonDiagonal("L(0) of the twisted module mixes " + s.to_string());
    }
    out.push_back(lambda.a());
  }
  return out;
}

TwistedModule build_mirror_twisted_module(const TruncatedSpace& m_sigma, MirrorTwistedModule& engine,
                                          const N2Data& data) {
  return TwistedModule(m_sigma, engine, data);
}

Realization<FockState> n1_ramond_realization(SigmaTwistedModule& sigma) {
  return {[&sigma](const Generator& g, const FockVector& w) -> FockVector {
            switch (g.family) {
              case Family::L:
                return sigma.virasoro(to_long(g.index), w);
              case Family::G:
                return sigma.supercurrent(g.index, w);
              default:
                throw std::invalid_argument(g.to_string() + " is not realized on M_sigma");
            }
          },
          Scalar(FreeFieldVosa::central_charge())};
}

CheckReport verify_sigma_sector(SigmaTwistedModule& sigma, const TruncatedSpace& space, long window) {
  CheckReport report;
  report.suite = "sigma-twisted sector";
  report.window = window;
  const auto rho = n1_ramond_realization(sigma);
  report.merge(
      verify_representation(Presentation(AlgebraName::virasoro), rho, space.basis(), window, "virasoro", show_fock));
  report.merge(verify_representation(Presentation(AlgebraName::n1_ramond), rho, space.basis(), window, "n1-ramond",
                                     show_fock));
  const FockState gens[] = {boson_generator(), fermion_generator()};
  const char* names[] = {"alpha", "psi"};
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
      pair.u_offset = pair.parity_u == 1 ? kHalf : Rational(0);
      pair.v_offset = pair.parity_v == 1 ? kHalf : Rational(0);
      report.merge(verify_jacobi(sigma, vosa_modes(sigma.vosa()), pair, space.basis(), window, show_fock));
    }
  }
  return report;
}

CheckReport verify_mirror_twisted_relations(TwistedModule& module, long window) {
  CheckReport report;
  report.suite = "mirror-twisted relations";
  report.window = window;
  const auto rho = module.realization();
  const auto& tests = module.space().basis();
  const Presentation full(AlgebraName::n2_mirror_twisted);
  report.merge(verify_representation(full, rho, tests, window, "n2-mirror-twisted", show_fock));
  report.merge(verify_representation(Presentation(AlgebraName::n1_ns), relabel_g(rho, Family::G1), tests, window,
                                     "n1-ns via G1", show_fock));
  report.merge(verify_representation(Presentation(AlgebraName::n1_ramond), relabel_g(rho, Family::G2), tests, window,
                                     "n1-ramond via G2", show_fock));
  report.merge(verify_lattice_vanishing(full, rho, tests, window, "index lattices", show_fock));

  MirrorTwistedModule& engine = module.engine();
  struct Eigen {
    std::string name;
    PairVector vec;
    FockState gen;
    long r;
  };
  std::vector<Eigen> eigen;
  for (const FockState& gen : {boson_generator(), fermion_generator()}) {
    const std::string base = gen == boson_generator() ? "alpha" : "psi";
    const PairVector one = TensorVosa::slot_embed(FockVector(gen), 1);
    const PairVector two = TensorVosa::slot_embed(FockVector(gen), 2);
    eigen.push_back({base + "1+" + base + "2", one + two, gen, 0});
    eigen.push_back({base + "1-" + base + "2", one - two, gen, 1});
  }
  for (const auto& x : eigen) {
    for (const auto& y : eigen) {
      JacobiPair<PairState> pair;
      pair.label = x.name + "," + y.name;
      pair.u = x.vec;
      pair.v = y.vec;
      pair.wt_u = x.gen.level();
      pair.wt_v = y.gen.level();
      pair.parity_u = x.gen.parity();
      pair.parity_v = y.gen.parity();
      pair.u_offset = x.r == 1 ? kHalf : Rational(0);
      pair.v_offset = y.r == 1 ? kHalf : Rational(0);
      report.merge(verify_jacobi(engine, tensor_modes(engine.tensor_vosa()), pair, tests, window, show_fock));
    }
  }
  return report;
}

CheckReport verify_equivariance(MirrorTwistedModule& engine, const TruncatedSpace& space,
                                const Rational& max_weight, long window) {
  CheckReport report;
  report.suite = "twisted equivariance";
  report.window = window;
  for (const PairState& a : engine.tensor_vosa().basis()) {
    if (pair_weight(a) > max_weight) continue;
    const PairVector ka = TensorVosa::mirror(PairVector(a));
    for (long twice = -2 * window; twice <= 2 * window; ++twice) {
      const Rational s = make_rational(twice, 2);
      for (const FockState& w : space.basis()) {
        FockVector lhs = engine.mode(ka, s, FockVector(w));
        FockVector rhs = engine.mode(a, s, FockVector(w));
        if (twice % 2 != 0) rhs *= Scalar(-1);
        ++report.checked;
        if (lhs != rhs) {
          record(report, {"equivariance", {pair_to_string(a), "s=" + s.get_str(), w.to_string()},
                          make_residual(lhs - rhs)});
        }
      }
    }
  }
  return report;
}

CheckReport compare_single_slot_routes(MirrorTwistedModule& delta_route, MirrorTwistedModule& iterate_route,
                                       const TruncatedSpace& space, const Rational& max_weight, long window) {
  CheckReport report;
  report.suite = "single-slot routes";
  report.window = window;
  for (const PairState& a : delta_route.tensor_vosa().basis()) {
    if (pair_weight(a) > max_weight || (!a.first.is_vacuum() && !a.second.is_vacuum())) continue;
    for (long twice = -2 * window; twice <= 2 * window; ++twice) {
      const Rational s = make_rational(twice, 2);
      for (const FockState& w : space.basis()) {
        FockVector lhs = delta_route.mode(a, s, w);
        FockVector rhs = iterate_route.mode(a, s, w);
        ++report.checked;
        if (lhs != rhs) {
          record(report, {"route", {pair_to_string(a), "s=" + s.get_str(), w.to_string()}, make_residual(lhs - rhs)});
        }
      }
    }
  }
  return report;
}

Corollary2Report corollary2_check(TwistedModule& module, SigmaTwistedModule& sigma, long max_level) {
  const TruncatedSpace space = SigmaTwistedModule::space(Rational(max_level));
  const Rational c = FreeFieldVosa::central_charge();
  const Rational sigma_shift = -c / 24;
  const Rational mirror_shift = -2 * c / 24;

  Corollary2Report r{Series(Variable::q, 0), Series(Variable::q, 0), Series(Variable::q, 0), 0, 0, false};
  r.sigma_ground = sigma.ground_weight();
  r.mirror_ground = module.engine().virasoro(0, FockVector(FockState::ramond_ground(1)))
                        .coefficient(FockState::ramond_ground(1))
                        .a();
  r.sigma_character = Series(Variable::q, sigma_shift + r.sigma_ground + max_level + 1);
  r.mirror_character = Series(Variable::q, mirror_shift + r.mirror_ground + Rational(max_level + 1) / 2);
  for (const FockState& s : space.basis()) {
    FockVector ls = sigma.virasoro(0, FockVector(s));
    FockVector lk = module.engine().virasoro(0, FockVector(s));
    Scalar a = ls.coefficient(s);
    Scalar b = lk.coefficient(s);
    if (ls != a * FockVector(s) || lk != b * FockVector(s) || !a.is_rational() || !b.is_rational()) {
      throw NonDiagonal("L(0) mixes " + s.to_string());
    }
    r.sigma_character.add_term(sigma_shift + a.a(), 1);
    r.mirror_character.add_term(mirror_shift + b.a(), 1);
  }
  r.mirror_substituted = r.mirror_character.substitute_power(2);
  r.pass = r.mirror_substituted == r.sigma_character;
  return r;
}

nlohmann::json to_json(const Corollary2Report& r) {
  return nlohmann::json{{"sigma_character", to_json(r.sigma_character)},
                        {"mirror_character", to_json(r.mirror_character)},
                        {"mirror_substituted", to_json(r.mirror_substituted)},
                        {"sigma_ground", to_fraction_string(r.sigma_ground)},
                        {"mirror_ground", to_fraction_string(r.mirror_ground)},
                        {"pass", r.pass}};
}

Series sigma_character(SigmaTwistedModule& sigma, const Rational& trunc) {
  const Rational c = FreeFieldVosa::central_charge();
  const TruncatedSpace space(FockKind::ramond_sector(), trunc + c / 24, sigma.ground_weight());
  const ModeOperator l0 = ModeOperator::materialize(
      space, "L(0)", 0, [&](const FockState& s) { return sigma.virasoro(0, FockVector(s)); });
  return character(space, c, l0);
}

Series mirror_character(MirrorTwistedModule& engine, const Rational& trunc) {
  const Rational shift = -TensorVosa::central_charge() / 24;
  const FockState ground = FockState::ramond_ground(1);
  const Rational ground_weight = engine.virasoro(0, FockVector(ground)).coefficient(ground).a();
  Series out(Variable::q, trunc);
  // weight = ground + level/2 < trunc - shift
  for (const FockState& s : enumerate_states(FockKind::ramond_sector(), 2 * (trunc - shift - ground_weight))) {
    FockVector image = engine.virasoro(0, FockVector(s));
    Scalar lambda = image.coefficient(s);
    if (image != lambda * FockVector(s) || !lambda.is_rational()) {
      throw NonDiagonal("L(0) of the twisted module mixes " + s.to_string());
    }
    out.add_term(shift + lambda.a(), 1);
  }
  return out;
}

}  // namespace superfock
