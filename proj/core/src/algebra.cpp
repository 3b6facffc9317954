#include "superfock/algebra.hpp"

#include <algorithm>
#include <sstream>
#include <thread>

namespace superfock {

std::string family_name(Family f) {
  switch (f) {
    case Family::L: return "L";
    case Family::G: return "G";
    case Family::G1: return "G1";
    case Family::G2: return "G2";
    case Family::J: return "J";
    case Family::C: return "C";
  }
  return "?";
}

std::string Generator::to_string() const {
  if (family == Family::C) return "C";
  return family_name(family) + "_{" + index.get_str() + "}";
}

void AlgebraElement::add(const Generator& g, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(g, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Scalar AlgebraElement::coefficient(const Generator& g) const {
  auto it = terms_.find(g);
  return it == terms_.end() ? Scalar() : it->second;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  for (const auto& [g, c] : o.terms_) add(g, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  for (const auto& [g, c] : o.terms_) add(g, -c);
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [g, c] : terms_) c *= s;
  return *this;
}

std::string AlgebraElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [g, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    out << "(" << c.to_string() << ")" << g.to_string();
  }
  return out.str();
}

nlohmann::json to_json(const AlgebraElement& e) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [g, c] : e.terms()) {
    terms.push_back(nlohmann::json{{"symbol", g.to_string()}, {"coeff", to_json(c)}});
  }
  return terms;
}

std::string algebra_name(AlgebraName n) {
  switch (n) {
    case AlgebraName::virasoro: return "virasoro";
    case AlgebraName::n1_ns: return "n1-ns";
    case AlgebraName::n1_ramond: return "n1-ramond";
    case AlgebraName::n2_ns: return "n2-ns";
    case AlgebraName::n2_ramond: return "n2-ramond";
    case AlgebraName::n2_mirror_twisted: return "n2-mirror-twisted";
  }
  return "?";
}

std::optional<AlgebraName> parse_algebra_name(const std::string& s) {
  for (auto n : all_algebras()) {
    if (algebra_name(n) == s) return n;
  }
  return std::nullopt;
}

std::vector<AlgebraName> all_algebras() {
  return {AlgebraName::virasoro,  AlgebraName::n1_ns,     AlgebraName::n1_ramond,
          AlgebraName::n2_ns,     AlgebraName::n2_ramond, AlgebraName::n2_mirror_twisted};
}

Presentation::Presentation(AlgebraName name)
    : Presentation(
          name, [](const Rational& m) -> Rational { return (m * m * m - m) / 12; }, algebra_name(name)) {}

Presentation::Presentation(AlgebraName name, CentralTerm virasoro_central, std::string label)
    : name_(name), virasoro_central_(std::move(virasoro_central)), label_(std::move(label)) {}

std::optional<Rational> Presentation::lattice_offset(Family f) const {
  const Rational half(1, 2);
  if (f == Family::L || f == Family::C) return Rational(0);
  switch (name_) {
    case AlgebraName::virasoro:
      return std::nullopt;
    case AlgebraName::n1_ns:
      if (f == Family::G) return half;
      return std::nullopt;
    case AlgebraName::n1_ramond:
      if (f == Family::G) return Rational(0);
      return std::nullopt;
    case AlgebraName::n2_ns:
      if (f == Family::J) return Rational(0);
      if (f == Family::G1 || f == Family::G2) return half;
      return std::nullopt;
    case AlgebraName::n2_ramond:
      if (f == Family::J || f == Family::G1 || f == Family::G2) return Rational(0);
      return std::nullopt;
    case AlgebraName::n2_mirror_twisted:
      if (f == Family::J || f == Family::G1) return half;
      if (f == Family::G2) return Rational(0);
      return std::nullopt;
  }
  return std::nullopt;
}

std::vector<Family> Presentation::families() const {
  std::vector<Family> out;
  for (Family f : {Family::L, Family::J, Family::G, Family::G1, Family::G2}) {
    if (lattice_offset(f)) out.push_back(f);
  }
  return out;
}

bool Presentation::valid(const Generator& g) const {
  if (g.family == Family::C) return true;
  auto offset = lattice_offset(g.family);
  return offset && is_integer(g.index - *offset);
}

void Presentation::require_valid(const Generator& g) const {
  if (!valid(g)) {
    throw InvalidIndexLattice(g.to_string() + " is not a basis element of " + label_);
  }
}

std::vector<Generator> Presentation::window_basis(long window) const {
  std::vector<Generator> out;
  for (Family f : families()) {
    Rational offset = *lattice_offset(f);
    // Smallest lattice point >= -window.
    Rational start = Rational(-window) + offset;
    for (Rational idx = start; idx <= window; idx += 1) {
      if (abs(idx) <= window) out.push_back({f, idx});
    }
  }
  out.push_back(Generator::central());
  return out;
}

namespace {

int rank(Family f) {
  switch (f) {
    case Family::L: return 0;
    case Family::J: return 1;
    case Family::G1: return 2;
    case Family::G2: return 3;
    case Family::G: return 4;
    case Family::C: return 5;
  }
  return 6;
}

bool is_odd_family(Family f) { return f == Family::G || f == Family::G1 || f == Family::G2; }

}  // namespace

AlgebraElement Presentation::ordered_bracket(const Generator& x, const Generator& y) const {
  const Rational& m = x.index;
  const Rational& n = y.index;
  const Rational sum = m + n;
  const bool delta = sgn(sum) == 0;
  AlgebraElement out;
  const Family fx = x.family, fy = y.family;

  if (fx == Family::L && fy == Family::L) {
    out.add({Family::L, sum}, Scalar(m - n));
    if (delta) out.add(Generator::central(), Scalar(virasoro_central_(m)));
  } else if (fx == Family::L && is_odd_family(fy)) {
    out.add({fy, sum}, Scalar(m / 2 - n));
  } else if (fx == Family::L && fy == Family::J) {
    out.add({Family::J, sum}, Scalar(Rational(-n)));
  } else if (fx == Family::J && fy == Family::J) {
    if (delta) out.add(Generator::central(), Scalar(Rational(m / 3)));
  } else if (fx == Family::J && fy == Family::G1) {
    out.add({Family::G2, sum}, -Scalar::i());
  } else if (fx == Family::J && fy == Family::G2) {
    out.add({Family::G1, sum}, Scalar::i());
  } else if (is_odd_family(fx) && fx == fy) {
    out.add({Family::L, sum}, Scalar(2));
    if (delta) out.add(Generator::central(), Scalar(Rational((m * m - Rational(1, 4)) / 3)));
  } else if (fx == Family::G1 && fy == Family::G2) {
    out.add({Family::J, sum}, Scalar::i() * Scalar(Rational(n - m)));
  } else {
    throw InvalidAlgebra("no bracket defined between " + x.to_string() + " and " + y.to_string());
  }
  for (const auto& [g, c] : out.terms()) require_valid(g);
  return out;
}

AlgebraElement Presentation::bracket(const Generator& x, const Generator& y) const {
  require_valid(x);
  require_valid(y);
  if (x.family == Family::C || y.family == Family::C) return {};
  if (rank(x.family) <= rank(y.family)) return ordered_bracket(x, y);
  // [x, y] = -(-1)^{|x||y|} [y, x]
  AlgebraElement swapped = ordered_bracket(y, x);
  Scalar sign = (x.parity() * y.parity()) % 2 == 1 ? Scalar(1) : Scalar(-1);
  return sign * swapped;
}

AlgebraElement Presentation::bracket(const AlgebraElement& a, const AlgebraElement& b) const {
  AlgebraElement out;
  for (const auto& [ga, ca] : a.terms()) {
    for (const auto& [gb, cb] : b.terms()) {
      out += (ca * cb) * bracket(ga, gb);
    }
  }
  return out;
}

AlgebraElement bracket(const Presentation& alg, const AlgebraElement& a, const AlgebraElement& b) {
  return alg.bracket(a, b);
}

nlohmann::json to_json(const AlgebraReport& r) {
  nlohmann::json violations = nlohmann::json::array();
  for (const auto& v : r.violations) {
    nlohmann::json triple = nlohmann::json::array();
    for (const auto& g : v.triple) triple.push_back(g.to_string());
    violations.push_back(nlohmann::json{{"kind", v.kind}, {"triple", triple}, {"residual", to_json(v.residual)}});
  }
  return nlohmann::json{{"algebra", r.algebra},
                        {"window", r.window},
                        {"checked", r.checked},
                        {"pass", r.pass()},
                        {"violations", violations}};
}

AlgebraReport verify_algebra(const Presentation& alg, long window, unsigned threads) {
  AlgebraReport report;
  report.algebra = alg.label();
  report.window = window;
  if (window <= 0) return report;
  std::vector<Generator> basis = alg.window_basis(window);
  const std::size_t n = basis.size();

  auto sign = [](int p) { return p % 2 == 0 ? Scalar(1) : Scalar(-1); };

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Generator& a = basis[i];
      const Generator& b = basis[j];
      AlgebraElement residual = alg.bracket(a, b) + sign(a.parity() * b.parity()) * alg.bracket(b, a);
      ++report.checked;
      if (!residual.is_zero()) report.violations.push_back({"skew", {a, b}, residual});
    }
  }

  // Each worker owns a contiguous slice of the first index; slices are merged in order.
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(n)));
  std::vector<std::vector<AlgebraViolation>> partial(threads);
  std::vector<std::size_t> counts(threads, 0);
  auto sweep = [&](unsigned worker) {
    for (std::size_t i = worker; i < n; i += threads) {
      const Generator& a = basis[i];
      for (const Generator& b : basis) {
        for (const Generator& c : basis) {
          AlgebraElement ab = alg.bracket(a, b), bc = alg.bracket(b, c), ca = alg.bracket(c, a);
          AlgebraElement residual = sign(a.parity() * c.parity()) * alg.bracket(AlgebraElement(a), bc) +
                                    sign(b.parity() * a.parity()) * alg.bracket(AlgebraElement(b), ca) +
                                    sign(c.parity() * b.parity()) * alg.bracket(AlgebraElement(c), ab);
          ++counts[worker];
          if (!residual.is_zero()) partial[worker].push_back({"jacobi", {a, b, c}, residual});
        }
      }
    }
  };
  if (threads == 1) {
    sweep(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(sweep, w);
    for (auto& t : pool) t.join();
  }
  std::vector<AlgebraViolation> jacobi;
  for (unsigned w = 0; w < threads; ++w) {
    report.checked += counts[w];
    jacobi.insert(jacobi.end(), partial[w].begin(), partial[w].end());
  }
  std::sort(jacobi.begin(), jacobi.end(),
            [](const AlgebraViolation& x, const AlgebraViolation& y) { return x.triple < y.triple; });
  report.violations.insert(report.violations.end(), jacobi.begin(), jacobi.end());
  return report;
}

AlgebraElement mirror_automorphism(const AlgebraElement& e) {
  static const Presentation n2(AlgebraName::n2_ns);
  AlgebraElement out;
  for (const auto& [g, c] : e.terms()) {
    if (!n2.valid(g)) throw InvalidAlgebra(g.to_string() + " is not an element of the N=2 Neveu-Schwarz algebra");
    bool negate = g.family == Family::G2 || g.family == Family::J;
    out.add(g, negate ? -c : c);
  }
  return out;
}

AlgebraElement apply_map(const AlgebraMap& map, const AlgebraElement& e) {
  AlgebraElement out;
  for (const auto& [g, c] : e.terms()) out += c * map(g);
  return out;
}

AlgebraReport verify_automorphism(const Presentation& alg, const AlgebraMap& map, long window) {
  AlgebraReport report;
  report.algebra = alg.label();
  report.window = window;
  if (window <= 0) return report;
  std::vector<Generator> basis = alg.window_basis(window);
  for (const Generator& a : basis) {
    for (const Generator& b : basis) {
      AlgebraElement lhs = apply_map(map, alg.bracket(a, b));
      AlgebraElement rhs = alg.bracket(map(a), map(b));
      ++report.checked;
      AlgebraElement residual = lhs - rhs;
      if (!residual.is_zero()) report.violations.push_back({"automorphism", {a, b}, residual});
    }
  }
  return report;
}

}  // namespace superfock
