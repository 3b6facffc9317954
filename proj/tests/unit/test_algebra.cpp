#include <doctest.h>

#include "superfock/algebra.hpp"

using namespace superfock;

namespace {

const Rational half = make_rational(1, 2);

Generator L(const Rational& n) { return {Family::L, n}; }
Generator G(const Rational& r) { return {Family::G, r}; }
Generator G1(const Rational& r) { return {Family::G1, r}; }
Generator G2(const Rational& r) { return {Family::G2, r}; }
Generator J(const Rational& n) { return {Family::J, n}; }
const Generator C = Generator::central();

AlgebraElement el(const Generator& g, const Scalar& c = 1) { return AlgebraElement(g, c); }

// Super-skew symmetry and super-Jacobi over a window, written out directly.
std::size_t brute_force_failures(const Presentation& alg, long window) {
  std::vector<Generator> basis;
  for (const Generator& g : alg.window_basis(window)) {
    if (g.family != Family::C) basis.push_back(g);
  }
  auto sign = [](const Generator& a, const Generator& b) { return a.parity() * b.parity() == 1 ? -1 : 1; };
  std::size_t failures = 0;
  for (const auto& a : basis) {
    for (const auto& b : basis) {
      AlgebraElement skew = alg.bracket(a, b) + Scalar(sign(a, b)) * alg.bracket(b, a);
      if (!skew.is_zero()) ++failures;
      for (const auto& c : basis) {
        AlgebraElement sum = Scalar(sign(a, c)) * alg.bracket(el(a), alg.bracket(el(b), el(c)));
        sum += Scalar(sign(b, a)) * alg.bracket(el(b), alg.bracket(el(c), el(a)));
        sum += Scalar(sign(c, b)) * alg.bracket(el(c), alg.bracket(el(a), el(b)));
        if (!sum.is_zero()) ++failures;
      }
    }
  }
  return failures;
}

}  // namespace

TEST_CASE("bracket examples") {
  const Presentation vir(AlgebraName::virasoro);
  CHECK(vir.bracket(L(2), L(-2)) == el(L(0), 4) + el(C, Scalar(half)));

  const Presentation n1(AlgebraName::n1_ns);
  CHECK(n1.bracket(G(make_rational(3, 2)), G(make_rational(-3, 2))) == el(L(0), 2) + el(C, Scalar(make_rational(2, 3))));

  const Presentation n2(AlgebraName::n2_ns);
  CHECK(n2.bracket(J(1), G1(half)) == el(G2(make_rational(3, 2)), -Scalar::i()));

  const Presentation mt(AlgebraName::n2_mirror_twisted);
  CHECK(mt.bracket(G1(half), G2(0)) == el(J(half), Scalar(0, make_rational(-1, 2), 0, 0)));
  CHECK(mt.bracket(G2(1), G2(-1)) == el(L(0), 2) + el(C, Scalar(make_rational(1, 4))));
  CHECK(mt.bracket(L(1), J(-half)) == el(J(half), Scalar(half)));
}

TEST_CASE("Virasoro and N=1 structure constants match the closed forms") {
  const Presentation vir(AlgebraName::virasoro);
  for (long m = -4; m <= 4; ++m) {
    for (long n = -4; n <= 4; ++n) {
      AlgebraElement want = el(L(m + n), Scalar(Rational(m - n)));
      if (m + n == 0) want += el(C, Scalar(make_rational(m * m * m - m, 12)));
      CHECK(vir.bracket(L(m), L(n)) == want);
    }
  }
  for (bool ramond : {false, true}) {
    const Presentation n1(ramond ? AlgebraName::n1_ramond : AlgebraName::n1_ns);
    const Rational off = ramond ? Rational(0) : half;
    for (long a = -3; a <= 3; ++a) {
      for (long b = -3; b <= 3; ++b) {
        const Rational r = off + a, s = off + b;
        AlgebraElement want = el(L(r + s), 2);
        if (r + s == 0) want += el(C, Scalar(Rational((r * r - make_rational(1, 4)) / 3)));
        CHECK(n1.bracket(G(r), G(s)) == want);
        CHECK(n1.bracket(L(a), G(s)) == el(G(a + s), Scalar(Rational(Rational(a) / 2 - s))));
      }
    }
  }
}

TEST_CASE("presentations pass their own skew and Jacobi sweeps") {
  for (AlgebraName name : all_algebras()) {
    CAPTURE(algebra_name(name));
    const Presentation alg(name);
    const AlgebraReport r = verify_algebra(alg, 3, 2);
    CHECK(r.pass());
    CHECK(r.checked > 0);
    CHECK(brute_force_failures(alg, 2) == 0);
  }
}

TEST_CASE("window 0 is a vacuous pass") {
  const AlgebraReport r = verify_algebra(Presentation(AlgebraName::virasoro), 0);
  CHECK(r.pass());
}

TEST_CASE("corrupted central terms") {
  const Presentation quintic(
      AlgebraName::virasoro, [](const Rational& m) -> Rational { return m * m * m * m * m / 12; }, "quintic");
  const AlgebraReport bad = verify_algebra(quintic, 4);
  CHECK_FALSE(bad.pass());
  CHECK(brute_force_failures(quintic, 3) > 0);

  // (m^3 - m)/11 is a rescaled cocycle, so it still satisfies Jacobi.
  const Presentation eleven(
      AlgebraName::virasoro, [](const Rational& m) -> Rational { return (m * m * m - m) / 11; }, "eleven");
  CHECK(verify_algebra(eleven, 4).pass());
}

TEST_CASE("index lattices") {
  const Presentation n1(AlgebraName::n1_ns);
  CHECK_THROWS_AS(n1.bracket(G(1), G(half)), InvalidIndexLattice);
  const Presentation n2(AlgebraName::n2_ns);
  const Presentation mt(AlgebraName::n2_mirror_twisted);
  CHECK(*n2.lattice_offset(Family::J) == 0);
  CHECK(*mt.lattice_offset(Family::J) == half);
  CHECK(*mt.lattice_offset(Family::G1) == half);
  CHECK(*mt.lattice_offset(Family::G2) == 0);
  CHECK_FALSE(Presentation(AlgebraName::virasoro).lattice_offset(Family::G).has_value());
  for (const Generator& x : mt.window_basis(2)) {
    for (const Generator& y : mt.window_basis(2)) {
      const AlgebraElement b = mt.bracket(x, y);
      for (const auto& [g, c] : b.terms()) CHECK(mt.valid(g));
    }
  }
}

TEST_CASE("mirror automorphism") {
  CHECK(mirror_automorphism(el(G2(half))) == el(G2(half), -1));
  const Presentation n2(AlgebraName::n2_ns);
  const AlgebraElement x = el(J(1)), y = el(G1(half));
  CHECK(mirror_automorphism(n2.bracket(x, y)) == n2.bracket(mirror_automorphism(x), mirror_automorphism(y)));
  CHECK(mirror_automorphism(n2.bracket(x, y)) == el(G2(make_rational(3, 2)), Scalar::i()));
  for (const Generator& g : n2.window_basis(3)) {
    CHECK(mirror_automorphism(mirror_automorphism(el(g))) == el(g));
  }
  CHECK_THROWS_AS(mirror_automorphism(el(G(half))), InvalidAlgebra);

  const AlgebraMap kappa = [](const Generator& g) { return mirror_automorphism(el(g)); };
  CHECK(verify_automorphism(n2, kappa, 4).pass());
  CHECK(verify_automorphism(n2, [](const Generator& g) { return el(g); }, 4).pass());
  const AlgebraMap flip = [](const Generator& g) { return g.family == Family::G1 ? el(g, -1) : el(g); };
  const AlgebraReport r = verify_automorphism(n2, flip, 1);
  CHECK_FALSE(r.pass());
  bool saw_pair = false;
  for (const auto& v : r.violations) {
    if (v.triple.size() == 2 && v.triple[0] == J(0) && v.triple[1] == G1(half)) saw_pair = true;
  }
  CHECK(saw_pair);
}

TEST_CASE("report json") {
  const Presentation quintic(
      AlgebraName::virasoro, [](const Rational& m) -> Rational { return m * m * m * m * m / 12; }, "quintic");
  // (1, 2, -3) is the smallest triple on which m^5 breaks the cocycle identity.
  CHECK(verify_algebra(quintic, 2).pass());
  const auto j = to_json(verify_algebra(quintic, 3));
  CHECK(j["algebra"] == "quintic");
  CHECK(j["window"] == 3);
  REQUIRE(j["violations"].size() > 0);
  CHECK(j["violations"][0]["triple"].is_array());
  CHECK(j["violations"][0].contains("residual"));
}
