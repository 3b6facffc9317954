#include <doctest.h>

#include "free_field.hpp"
#include "oracles.hpp"
#include "superfock/twisted.hpp"

using namespace superfock;

namespace {

const Rational half = make_rational(1, 2);

struct Fixture {
  FreeFieldVosa v{4};
  SigmaTwistedModule sigma{v};
  TensorVosa vv{v, 3};
  N2Data n2 = calibrate_n2(vv);
  MirrorTwistedModule engine{vv, sigma};
};

// L^σ(0) on B ⊗ F_R from the normal-ordered free-field formula with the
// standard Ramond zero-point energy 1/16.
FockVector ramond_l0(const FockAlgebra& alg, const FockState& s) {
  FockVector out = free_field::boson_virasoro(alg, 0, s);
  for (long m = 1; m <= floor_long(s.level()) + 1; ++m) {
    out.add_scaled(alg.fermion(Rational(-m), alg.fermion(Rational(m), s)), Scalar(Rational(m)));
  }
  out.add(s, Scalar(make_rational(1, 16)));
  return out;
}

}  // namespace

TEST_CASE("sigma-twisted sector") {
  Fixture f;
  CHECK(f.sigma.ground_weight() == make_rational(1, 16));
  const TruncatedSpace space = SigmaTwistedModule::space(2);
  for (const FockState& s : space.basis()) {
    CAPTURE(s.to_string());
    CHECK(f.sigma.virasoro(0, FockVector(s)) == ramond_l0(f.sigma.algebra(), s));
    // [G(0), G(0)] = 2L(0) - c/12 with c = 3/2.
    const FockVector g0 = f.sigma.supercurrent(0, f.sigma.supercurrent(0, FockVector(s)));
    CHECK(Scalar(2) * g0 == Scalar(2) * f.sigma.virasoro(0, FockVector(s)) - Scalar(make_rational(1, 8)) * FockVector(s));
    for (long r = -2; r <= 2; ++r) {
      CHECK(f.sigma.supercurrent(r, FockVector(s)) == free_field::supercurrent(f.sigma.algebra(), Rational(r), s));
    }
  }
  CHECK(verify_sigma_sector(f.sigma, SigmaTwistedModule::space(1), 2).pass());
  const FockState g = FockState::ramond_ground(1);
  CHECK(f.sigma.mode(FockState::vacuum(), -1, g) == FockVector(g));
  CHECK(f.sigma.mode(FockState::vacuum(), 0, g).is_zero());
}

TEST_CASE("wrong fermion normalization breaks the sigma sector") {
  FreeFieldVosa v(4);
  SigmaTwistedModule bad(v, 2);
  CHECK_FALSE(verify_sigma_sector(bad, SigmaTwistedModule::space(1), 1).pass());
}

TEST_CASE("single-slot modes") {
  Fixture f;
  const FockVector psi(fermion_generator());
  const Scalar inv_sqrt2(0, 0, half, 0);
  const TruncatedSpace space = SigmaTwistedModule::space(2);
  for (const FockState& w : space.basis()) {
    for (long twice = -4; twice <= 4; ++twice) {
      const Rational p = make_rational(twice, 2);
      // Y_g(ψ¹, x) = 2^{-1/2} x^{-1/4} Y_σ(ψ, x^{1/2}), so ψ¹_p = 2^{-1/2} ψ^σ_{2p+1/2} = 2^{-1/2} ψ(2p + 1).
      const FockVector one = f.engine.single_slot_mode(psi, 1, p, FockVector(w));
      CHECK(one == inv_sqrt2 * f.sigma.algebra().fermion(2 * p + 1, w));
      const FockVector two = f.engine.single_slot_mode(psi, 2, p, FockVector(w));
      CHECK(two == (twice % 2 == 0 ? one : Scalar(-1) * one));
    }
    CHECK(f.engine.mode(PairState{FockState::vacuum(), FockState::vacuum()}, -1, w) == FockVector(w));
  }
  CHECK_THROWS_AS(f.engine.single_slot_mode(psi, 3, 0, FockVector()), std::invalid_argument);
}

TEST_CASE("mirror-twisted module") {
  Fixture f;
  const TruncatedSpace m_sigma = SigmaTwistedModule::space(2);
  TwistedModule module = build_mirror_twisted_module(m_sigma, f.engine, f.n2);
  CHECK(module.space().basis() == m_sigma.basis());
  CHECK(module.space().dump() == m_sigma.dump());

  const auto spectrum = module.l0_spectrum();
  for (std::size_t i = 0; i < spectrum.size(); ++i) {
    const Rational sigma_l0 = make_rational(1, 16) + m_sigma.basis()[i].level();
    CHECK(spectrum[i] == sigma_l0 / 2 + make_rational(3, 32));
  }
  CHECK(*std::min_element(spectrum.begin(), spectrum.end()) == make_rational(1, 8));

  const auto rho = module.realization();
  const Generator g1{Family::G1, half}, g2{Family::G2, 0}, jh{Family::J, half};
  for (const FockState& s : m_sigma.basis()) {
    const FockVector w(s);
    // [G1_{1/2}, G2_0] = -(i/2) J_{1/2}
    FockVector lhs = rho.apply(g1, rho.apply(g2, w)) + rho.apply(g2, rho.apply(g1, w));
    CHECK(lhs == Scalar(0, -half, 0, 0) * rho.apply(jh, w));
    // [G2_1, G2_{-1}] = 2L_0 + 3/4
    const Generator a{Family::G2, 1}, b{Family::G2, -1};
    lhs = rho.apply(a, rho.apply(b, w)) + rho.apply(b, rho.apply(a, w));
    CHECK(lhs == Scalar(2) * rho.apply({Family::L, 0}, w) + Scalar(make_rational(3, 4)) * w);
    // [L_1, J_{-1/2}] = 1/2 J_{1/2}
    const Generator l1{Family::L, 1}, jm{Family::J, -half};
    lhs = rho.apply(l1, rho.apply(jm, w)) - rho.apply(jm, rho.apply(l1, w));
    CHECK(lhs == Scalar(half) * rho.apply(jh, w));
    // Off-lattice modes vanish.
    CHECK(rho.apply({Family::J, 1}, w).is_zero());
    CHECK(rho.apply({Family::G2, half}, w).is_zero());
    CHECK(rho.apply({Family::G1, 0}, w).is_zero());
  }
  CHECK(verify_mirror_twisted_relations(module, 1).pass());
}

TEST_CASE("equivariance and the two single-slot routes") {
  Fixture f;
  MirrorTwistedModule iterate(f.vv, f.sigma, SingleSlotRoute::iterate);
  const TruncatedSpace space = SigmaTwistedModule::space(1);
  CHECK(verify_equivariance(f.engine, space, 2, 1).pass());
  CHECK(compare_single_slot_routes(f.engine, iterate, space, 2, 1).pass());
}

TEST_CASE("negated G2 normalization is caught") {
  Fixture f;
  N2Data flipped = f.n2;
  flipped.c2 = -flipped.c2;
  flipped.tau2 = Scalar(-1) * flipped.tau2;
  TwistedModule module = build_mirror_twisted_module(SigmaTwistedModule::space(1), f.engine, flipped);
  CHECK_FALSE(verify_mirror_twisted_relations(module, 1).pass());
}

TEST_CASE("character identity") {
  Fixture f;
  TwistedModule module = build_mirror_twisted_module(SigmaTwistedModule::space(4), f.engine, f.n2);
  const Corollary2Report r = corollary2_check(module, f.sigma, 4);
  CHECK(r.pass);
  CHECK(r.sigma_ground == make_rational(1, 16));
  CHECK(r.mirror_ground == make_rational(1, 8));
  const auto over = oracle::overpartitions(4);
  for (long n = 0; n <= 4; ++n) {
    CHECK(r.sigma_character.coefficient(n) == Scalar(2 * over[static_cast<std::size_t>(n)]));
    CHECK(r.mirror_character.coefficient(make_rational(n, 2)) == Scalar(2 * over[static_cast<std::size_t>(n)]));
  }
  CHECK(r.mirror_character.terms().begin()->first == 0);
  CHECK(r.sigma_character.terms().size() == 5);

  CHECK(sigma_character(f.sigma, 5) == r.sigma_character);
  CHECK(mirror_character(f.engine, make_rational(5, 2)) == r.mirror_character);
  CHECK(sigma_character(f.sigma, 0).is_zero());

  const auto j = to_json(r);
  CHECK(j["sigma_ground"] == "1/16");
  CHECK(j["mirror_ground"] == "1/8");
}
