#include <doctest.h>

#include "oracles.hpp"
#include "superfock/fock.hpp"

using namespace superfock;

namespace {

const Rational half = make_rational(1, 2);

std::map<Rational, std::size_t> dims(const FockKind& kind, const Rational& bound) {
  return TruncatedSpace(kind, bound).layer_dimensions();
}

}  // namespace

TEST_CASE("NS fermion enumeration") {
  const TruncatedSpace s(FockKind::fermion_ns(), make_rational(5, 2));
  REQUIRE(s.dimension() == 4);
  CHECK(s.basis()[0].to_string() == "|0>");
  CHECK(s.basis()[1].to_string() == "psi(-1/2)|0>");
  CHECK(s.basis()[2].to_string() == "psi(-3/2)|0>");
  CHECK(s.basis()[3].to_string() == "psi(-3/2)psi(-1/2)|0>");
  CHECK(s.weight(s.basis()[3]) == 2);
}

TEST_CASE("layer dimensions match product formulas") {
  const auto p = oracle::partitions(12);
  const auto boson = dims(FockKind::boson_only(), 12);
  for (long n = 0; n < 12; ++n) CHECK(boson.at(Rational(n)) == static_cast<std::size_t>(p[static_cast<std::size_t>(n)]));
  CHECK(dims(FockKind::boson_only(), 4).size() == 4);

  const auto ns = oracle::ns_fermion_dims(16);
  const auto fermion = dims(FockKind::fermion_ns(), 8);
  for (std::size_t h = 0; h < 16; ++h) {
    const Rational w = make_rational(static_cast<long>(h), 2);
    const std::size_t got = fermion.count(w) ? fermion.at(w) : 0;
    CHECK(got == static_cast<std::size_t>(ns[h]));
  }

  const auto ramond = dims(FockKind::fermion_ramond(), 4);
  const auto q = oracle::distinct_partitions(3);
  for (long n = 0; n < 4; ++n) CHECK(ramond.at(Rational(n)) == 2 * static_cast<std::size_t>(q[static_cast<std::size_t>(n)]));

  const auto sector = dims(FockKind::ramond_sector(), 5);
  const auto over = oracle::overpartitions(4);
  for (long n = 0; n < 5; ++n) CHECK(sector.at(Rational(n)) == 2 * static_cast<std::size_t>(over[static_cast<std::size_t>(n)]));
}

TEST_CASE("canonical monomial text") {
  const FockState s{{2, 1}, {1}, 0};
  CHECK(s.to_string() == "a(-2)a(-1)psi(-1/2)|0>");
  CHECK(s.level() == make_rational(7, 2));
  CHECK(s.parity() == 1);
  CHECK(FockState::ramond_ground(-1).parity() == 1);
  CHECK(FockState::ramond_ground(1).to_string() == "|w+>");
  const TruncatedSpace space(FockKind::vosa(), 2);
  std::string dump = space.dump();
  CHECK(dump.find("a(-1)psi(-1/2)|0>\n") != std::string::npos);
}

TEST_CASE("mode relations") {
  const FockAlgebra alg(FockKind::vosa());
  const FockState vac = FockState::vacuum();
  CHECK(alg.boson(1, alg.boson(-1, vac)) == FockVector(vac));
  CHECK(alg.fermion(half, alg.fermion(-half, vac)) == FockVector(vac));
  CHECK(alg.fermion(-half, alg.fermion(-half, vac)).is_zero());
  CHECK(alg.boson(2, vac).is_zero());

  const FockAlgebra r(FockKind::fermion_ramond());
  const FockState wp = FockState::ramond_ground(1), wm = FockState::ramond_ground(-1);
  CHECK(r.fermion(0, wp) == Scalar(0, 0, half, 0) * FockVector(wm));
  for (const FockState& w : {wp, wm}) {
    CHECK(r.fermion(0, r.fermion(0, w)) == Scalar(half) * FockVector(w));
  }
  const FockState excited{{}, {2}, 1};
  CHECK(r.fermion(0, r.fermion(0, excited)) == Scalar(half) * FockVector(excited));
}

TEST_CASE("commutation relations hold on a basis") {
  const FockAlgebra alg(FockKind::vosa());
  const TruncatedSpace space(FockKind::vosa(), 3);
  for (const FockState& s : space.basis()) {
    for (long m = -2; m <= 2; ++m) {
      for (long n = -2; n <= 2; ++n) {
        FockVector comm = alg.boson(m, alg.boson(n, s)) - alg.boson(n, alg.boson(m, s));
        CHECK(comm == (m + n == 0 ? Scalar(Rational(m)) * FockVector(s) : FockVector()));
        const Rational r = Rational(m) + half, t = Rational(n) + half;
        FockVector anti = alg.fermion(r, alg.fermion(t, s)) + alg.fermion(t, alg.fermion(r, s));
        CHECK(anti == (r + t == 0 ? FockVector(s) : FockVector()));
        FockVector mixed = alg.boson(m, alg.fermion(t, s)) - alg.fermion(t, alg.boson(m, s));
        CHECK(mixed.is_zero());
      }
    }
  }
}

TEST_CASE("weight bookkeeping") {
  const FockAlgebra alg(FockKind::ramond_sector());
  const TruncatedSpace space(FockKind::ramond_sector(), 3);
  for (const FockState& s : space.basis()) {
    for (long n = -2; n <= 2; ++n) {
      for (const auto& [t, c] : alg.boson(n, s)) CHECK(t.level() == s.level() - n);
      for (const auto& [t, c] : alg.fermion(Rational(n), s)) {
        CHECK(t.level() == s.level() - n);
        CHECK(t.parity() != s.parity());
      }
    }
  }
}

TEST_CASE("truncation and characters") {
  const TruncatedSpace space(FockKind::boson_only(), 2);
  CHECK_THROWS_AS(space.checked(FockVector(FockState{{3}, {}, 0})), TruncationOverflow);
  CHECK(space.checked(FockVector(FockState{{1}, {}, 0})).size() == 1);

  const TruncatedSpace empty(FockKind::vosa(), 0);
  CHECK(empty.dimension() == 0);
  const ModeOperator zero = ModeOperator::materialize(empty, "L(0)", 0, [](const FockState&) { return FockVector(); });
  CHECK(character(empty, 0, zero).is_zero());

  const TruncatedSpace v(FockKind::vosa(), 3);
  const ModeOperator mixing = ModeOperator::materialize(v, "bad", 0, [](const FockState& s) {
    return FockVector(s) + FockVector(FockState::vacuum());
  });
  CHECK_THROWS_AS(character(v, make_rational(3, 2), mixing), NonDiagonal);
}
