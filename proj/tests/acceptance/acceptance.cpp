// One PASS/FAIL line per acceptance criterion. Exit status is nonzero if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "superfock/algebra.hpp"
#include "superfock/cli.hpp"
#include "superfock/rational.hpp"

namespace {

using nlohmann::json;
using superfock::Rational;

struct Outcome {
  bool pass = true;
  std::string note;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!note.empty()) note += "; ";
      note += what;
    }
  }
};

struct Run {
  int code;
  std::string out;
  json doc;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  args.push_back("--json");
  const int code = superfock::cli::run(args, out, err);
  Run r{code, out.str(), {}};
  r.doc = json::parse(r.out, nullptr, false);
  return r;
}

const json* find_check(const json& doc, const std::string& name) {
  for (const auto& c : doc["checks"]) {
    if (c["name"] == name) return &c;
  }
  return nullptr;
}

bool check_passed(const json& doc, const std::string& name) {
  const json* c = find_check(doc, name);
  return c != nullptr && (*c)["pass"] == true;
}

std::vector<long> overpartitions(long n) {
  std::vector<long> p(n + 1, 0), q(n + 1, 0), out(n + 1, 0);
  p[0] = q[0] = 1;
  for (long part = 1; part <= n; ++part) {
    for (long m = part; m <= n; ++m) p[m] += p[m - part];
    for (long m = n; m >= part; --m) q[m] += q[m - part];
  }
  for (long a = 0; a <= n; ++a)
    for (long b = 0; a + b <= n; ++b) out[a + b] += p[a] * q[b];
  return out;
}

// Coefficients {exp -> rational part} of a real series in JSON form.
std::vector<std::pair<Rational, Rational>> real_terms(const json& series) {
  std::vector<std::pair<Rational, Rational>> out;
  for (const auto& t : series["terms"]) {
    out.emplace_back(superfock::parse_rational(t["exp"].get<std::string>()),
                     superfock::parse_rational(t["coeff"]["a"].get<std::string>()));
  }
  return out;
}

Outcome delta_criterion() {
  Outcome o;
  for (long k = 1; k <= 12; ++k) {
    const Run r = cli({"delta", "--k", std::to_string(k), "--terms", "2"});
    const Rational a1 = superfock::make_rational(1 - k, 2), a2 = superfock::make_rational(k * k - 1, 12);
    o.require(r.code == 0 && r.doc["a"] == json::array({superfock::to_fraction_string(a1), superfock::to_fraction_string(a2)}), "closed form k=" + std::to_string(k));
  }
  for (long k = 1; k <= 6; ++k) {
    const Run r = cli({"delta", "--k", std::to_string(k), "--terms", "10", "--verify-order", "10"});
    o.require(r.code == 0 && r.doc["residual"]["terms"].empty(), "residual k=" + std::to_string(k));
  }
  return o;
}

Outcome algebra_criterion() {
  Outcome o;
  for (const char* name : {"virasoro", "n1-ns", "n1-ramond", "n2-ns", "n2-ramond", "n2-mirror-twisted"}) {
    const Run r = cli({"verify", "algebra", "--name", name, "--window", "4"});
    o.require(r.code == 0 && r.doc["pass"] == true, name);
  }
  const Run bad = cli({"verify", "algebra", "--name", "virasoro-corrupted", "--window", "4"});
  o.require(bad.code == 1 && !bad.doc["violations"].empty(), "corrupted virasoro was not rejected");
  return o;
}

Outcome mirror_map_criterion() {
  using namespace superfock;
  Outcome o;
  const Presentation n2(AlgebraName::n2_ns);
  const AlgebraReport kappa = verify_automorphism(
      n2, [](const Generator& g) { return mirror_automorphism(AlgebraElement(g)); }, 4);
  o.require(kappa.pass(), "kappa is not an automorphism at window 4");
  for (const Generator& g : n2.window_basis(4)) {
    const AlgebraElement e(g);
    if (!(mirror_automorphism(mirror_automorphism(e)) == e)) {
      o.require(false, "kappa^2 != id on " + to_json(e).dump());
      break;
    }
  }
  return o;
}

Outcome vosa_criterion() {
  Outcome o;
  const Run r = cli({"verify", "vosa", "--max-weight", "4", "--window", "3"});
  o.require(r.code == 0 && r.doc["pass"] == true, "verify vosa failed");
  o.require(check_passed(r.doc, "jacobi for generator pairs"), "generator jacobi");
  o.require(check_passed(r.doc, "n1-ns from tau"), "n1-ns table");
  o.require(check_passed(r.doc, "[G(3/2), G(-3/2)] = 2L(0) + id on the vacuum"), "vacuum line bracket");
  return o;
}

Outcome calibration_criterion() {
  Outcome o;
  const Run r = cli({"calibrate", "n2", "--window", "2"});
  o.require(r.code == 0 && r.doc["pass"] == true, "calibration failed");
  for (const char* name : {"mirror fixes tau1", "mirror negates tau2", "mirror negates J"}) {
    o.require(check_passed(r.doc, name), name);
  }
  return o;
}

Outcome twisted_run(Run& holder) {
  Outcome o;
  holder = cli({"verify", "twisted", "--window", "2", "--max-weight", "2"});
  o.require(holder.code == 0 && holder.doc["pass"] == true, "verify twisted failed");
  return o;
}

Outcome sigma_criterion(const Run& twisted) {
  Outcome o;
  o.require(check_passed(twisted.doc, "sigma sector: virasoro, n1-ramond, jacobi"), "sigma relations");
  o.require(check_passed(twisted.doc, "L^sigma(0) on the ground states is 1/16"), "sigma ground");
  return o;
}

Outcome mirror_twisted_criterion(const Run& twisted) {
  Outcome o;
  o.require(twisted.doc["pass"] == true, "verify twisted failed");
  for (const char* name : {"twisted module reuses the basis of M_sigma", "mirror-twisted relations",
                           "equivariance under the mirror map"}) {
    o.require(check_passed(twisted.doc, name), name);
  }
  const Run lattice = cli({"verify", "algebra", "--name", "n2-mirror-twisted", "--window", "2"});
  o.require(lattice.code == 0, "n2-mirror-twisted presentation");
  return o;
}

Outcome corollary_criterion() {
  Outcome o;
  const Run r = cli({"corollary2", "--trunc", "4"});
  o.require(r.code == 0 && r.doc["pass"] == true, "corollary2 failed");
  const auto expected = overpartitions(4);
  const auto sigma = real_terms(r.doc["sigma_character"]);
  o.require(sigma.size() == expected.size(), "sigma character length");
  for (std::size_t n = 0; n < sigma.size() && n < expected.size(); ++n) {
    o.require(sigma[n].first == Rational(static_cast<long>(n)) && sigma[n].second == Rational(2 * expected[n]),
              "dim_q M_sigma at q^" + std::to_string(n));
  }
  const auto mirror = real_terms(r.doc["mirror_character"]);
  o.require(!mirror.empty() && mirror.front().first == 0, "mirror leading exponent");
  for (std::size_t n = 0; n < mirror.size() && n < sigma.size(); ++n) {
    o.require(mirror[n].first * 2 == sigma[n].first && mirror[n].second == sigma[n].second,
              "dim_{q^2} M_kappa at term " + std::to_string(n));
  }
  o.require(r.doc["mirror_ground"] == "1/8", "mirror ground");
  return o;
}

Outcome determinism_criterion() {
  Outcome o;
  const Run a = cli({"all"});
  const Run b = cli({"all"});
  o.require(a.code == 0, "all did not pass");
  o.require(a.out == b.out, "outputs differ");
  return o;
}

}  // namespace

int main() {
  bool all_pass = true;
  auto report = [&](int id, const std::string& title, double limit_seconds, const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = body();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (limit_seconds > 0 && seconds > limit_seconds) {
      o.require(false, "runtime " + std::to_string(seconds) + " s over " + std::to_string(limit_seconds) + " s");
    }
    all_pass = all_pass && o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << id << ": " << title;
    std::cout << " (" << static_cast<long>(seconds * 1000) << " ms)";
    if (!o.pass) std::cout << " -- " << o.note;
    std::cout << std::endl;
  };

  Run twisted{};
  double twisted_seconds = 0;

  report(1, "delta coefficients and functional equation", 1.0, delta_criterion);
  report(2, "six presentations and the corrupted control", 10.0, algebra_criterion);
  report(3, "mirror map automorphism and involution", 0, mirror_map_criterion);
  report(4, "free-field N=1 VOSA", 60.0, vosa_criterion);
  report(5, "N=2 calibration and mirror action on generators", 0, calibration_criterion);
  report(6, "sigma-twisted sector", 0, [&] {
    const auto start = std::chrono::steady_clock::now();
    Outcome o = twisted_run(twisted);
    twisted_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const Outcome s = sigma_criterion(twisted);
    o.require(s.pass, s.note);
    return o;
  });
  report(7, "mirror-twisted sector", 0, [&] {
    Outcome o = mirror_twisted_criterion(twisted);
    if (twisted_seconds > 300.0) o.require(false, "verify twisted took " + std::to_string(twisted_seconds) + " s");
    return o;
  });
  report(8, "character identity and mirror ground value", 0, corollary_criterion);
  report(9, "determinism of all --json", 0, determinism_criterion);

  return all_pass ? 0 : 1;
}
