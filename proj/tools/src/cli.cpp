#include "superfock/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <optional>
#include <random>
#include <thread>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "superfock/algebra.hpp"
#include "superfock/delta.hpp"
#include "superfock/twisted.hpp"
#include "superfock/vosa.hpp"

namespace superfock::cli {

namespace {

using nlohmann::json;

constexpr int kSchema = 1;

struct Check {
  std::string name;
  std::size_t checked = 0;
  std::size_t failed = 0;
  json detail;

  bool pass() const { return failed == 0; }
};

struct Suite {
  std::string name;
  std::vector<Check> checks;
  bool skipped = false;
  std::string skip_reason;

  std::size_t checked() const {
    std::size_t n = 0;
    for (const auto& c : checks) n += c.checked;
    return n;
  }
  std::size_t failed() const {
    std::size_t n = 0;
    for (const auto& c : checks) n += c.failed;
    return n;
  }
  bool pass() const { return failed() == 0; }
};

Check from_report(const std::string& name, const CheckReport& r) {
  return {name, r.checked, r.failed, to_json(r)};
}

Check from_report(const std::string& name, const AlgebraReport& r) {
  return {name, r.checked, r.violations.size(), to_json(r)};
}

Check boolean(const std::string& name, bool ok, json detail = json::object()) {
  return {name, 1, ok ? 0u : 1u, std::move(detail)};
}

// A negative control passes when the wrapped check fails.
Check expect_failure(const std::string& name, std::size_t inner_checked, std::size_t inner_failed) {
  return {name, 1, inner_failed == 0 ? 1u : 0u,
          json{{"expected", "fail"}, {"inner_checked", inner_checked}, {"inner_failed", inner_failed}}};
}

Check expect_failure(const std::string& name, const CheckReport& r) { return expect_failure(name, r.checked, r.failed); }

Check expect_failure(const std::string& name, const AlgebraReport& r) {
  return expect_failure(name, r.checked, r.violations.size());
}

json to_json(const Check& c) {
  return json{{"name", c.name}, {"checked", c.checked}, {"failed", c.failed}, {"pass", c.pass()}, {"detail", c.detail}};
}

json to_json(const Suite& s) {
  json checks = json::array();
  for (const auto& c : s.checks) checks.push_back(to_json(c));
  json out{{"name", s.name},
           {"checked", s.checked()},
           {"failed", s.failed()},
           {"skipped", s.skipped ? 1 : 0},
           {"pass", s.pass() && !s.skipped},
           {"checks", checks}};
  if (s.skipped) out["skip_reason"] = s.skip_reason;
  return out;
}

void print_text(const Suite& s, std::ostream& out) {
  if (s.skipped) {
    out << "suite " << s.name << ": SKIPPED (" << s.skip_reason << ")\n";
    return;
  }
  out << "suite " << s.name << ": " << (s.pass() ? "PASS" : "FAIL") << " (checks " << s.checked() << ", failed "
      << s.failed() << ")\n";
  for (const auto& c : s.checks) {
    out << "  " << (c.pass() ? "PASS" : "FAIL") << ' ' << c.name << " (checks " << c.checked;
    if (!c.pass()) out << ", failed " << c.failed;
    out << ")\n";
  }
}

// Runs suite builders on up to `workers` threads; results keep builder order.
std::vector<Suite> run_parallel(const std::vector<std::function<Suite()>>& builders, unsigned workers) {
  std::vector<Suite> results(builders.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < builders.size(); i = next++) results[i] = builders[i]();
  };
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(builders.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < workers; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  return results;
}

Suite guarded(const std::string& name, const std::function<Suite()>& build) {
  try {
    return build();
  } catch (const std::exception& e) {
    Suite s{name, {}, false, {}};
    s.checks.push_back(boolean("error", false, json{{"what", e.what()}}));
    return s;
  }
}

std::string show_fock(const FockState& s) { return s.to_string(); }

// --- suites ---------------------------------------------------------------

Suite delta_suite() {
  Suite s{"delta", {}, false, {}};
  for (long k = 1; k <= 12; ++k) {
    const DeltaCoefficients a = delta_coefficients(k, 2);
    const Rational a1 = make_rational(1 - k, 2);
    const Rational a2 = make_rational(k * k - 1, 12);
    s.checks.push_back(boolean("closed form k=" + std::to_string(k), a.a(1) == a1 && a.a(2) == a2,
                               json{{"a", {to_fraction_string(a.a(1)), to_fraction_string(a.a(2))}}}));
  }
  for (long k = 1; k <= 6; ++k) {
    const Series residual = verify_delta_equation(k, 10, 10);
    s.checks.push_back(boolean("residual k=" + std::to_string(k), residual.is_zero(), json{{"residual", to_json(residual)}}));
  }
  return s;
}

Suite algebra_suite(long window, unsigned threads) {
  Suite s{"algebra", {}, false, {}};
  for (AlgebraName name : all_algebras()) {
    s.checks.push_back(from_report(algebra_name(name), verify_algebra(Presentation(name), window, threads)));
  }
  const Presentation corrupted(
      AlgebraName::virasoro, [](const Rational& m) -> Rational { return m * m * m * m * m / 12; },
      "virasoro-corrupted");
  // m^5 satisfies the cocycle identity for all indices of size <= 2; (1, 2, -3) is the first witness.
  s.checks.push_back(
      expect_failure("virasoro with central term m^5/12", verify_algebra(corrupted, std::max(window, 3L), threads)));
  // Any multiple of m^3 - m is a 2-cocycle, so this rescaling must still pass.
  const Presentation rescaled(
      AlgebraName::virasoro, [](const Rational& m) -> Rational { return (m * m * m - m) / 11; },
      "virasoro-rescaled");
  s.checks.push_back(from_report("virasoro with central term (m^3-m)/11", verify_algebra(rescaled, window, threads)));
  return s;
}

Suite automorphism_suite(long window) {
  Suite s{"mirror automorphism", {}, false, {}};
  const Presentation n2(AlgebraName::n2_ns);
  const AlgebraMap kappa = [](const Generator& g) { return mirror_automorphism(AlgebraElement(g)); };
  s.checks.push_back(from_report("kappa on n2-ns", verify_automorphism(n2, kappa, window)));
  s.checks.push_back(
      from_report("identity on n2-ns", verify_automorphism(n2, [](const Generator& g) { return AlgebraElement(g); }, window)));
  const AlgebraMap flip_g1 = [](const Generator& g) {
    return g.family == Family::G1 ? Scalar(-1) * AlgebraElement(g) : AlgebraElement(g);
  };
  s.checks.push_back(expect_failure("G1 -> -G1 on n2-ns", verify_automorphism(n2, flip_g1, window)));
  std::size_t bad = 0, total = 0;
  for (const Generator& g : n2.window_basis(window)) {
    ++total;
    if (mirror_automorphism(mirror_automorphism(AlgebraElement(g))) != AlgebraElement(g)) ++bad;
  }
  s.checks.push_back({"kappa squared is the identity", total, bad, json::object()});
  const Presentation twisted(AlgebraName::n2_mirror_twisted);
  s.checks.push_back(boolean("J lattices differ between n2-ns and n2-mirror-twisted",
                             *n2.lattice_offset(Family::J) != *twisted.lattice_offset(Family::J),
                             json{{"n2-ns", to_fraction_string(*n2.lattice_offset(Family::J))},
                                  {"n2-mirror-twisted", to_fraction_string(*twisted.lattice_offset(Family::J))}}));
  return s;
}

Suite vosa_suite(const Rational& max_weight, long window) {
  Suite s{"vosa", {}, false, {}};
  FreeFieldVosa v(max_weight);
  s.checks.push_back(from_report("axioms on V", verify_vosa_axioms(v, window)));
  s.checks.push_back(from_report("jacobi for generator pairs", verify_generator_jacobi(v, window)));
  const Rational conformal_weight = std::min(max_weight, Rational(2));
  const long conformal_window = std::min(window, 1L);
  s.checks.push_back(from_report("jacobi for (omega, s), wt s <= " + conformal_weight.get_str(),
                                 verify_conformal_jacobi(v, conformal_weight, conformal_window)));
  s.checks.push_back(from_report("n1-ns from tau", verify_n1_structure(v, std::min(window, 2L))));

  const FockVector vac = FreeFieldVosa::vacuum();
  const Rational three_halves = make_rational(3, 2);
  FockVector gg = v.supercurrent(three_halves, v.supercurrent(-three_halves, vac)) +
                  v.supercurrent(-three_halves, v.supercurrent(three_halves, vac));
  FockVector want = Scalar(2) * v.virasoro(0, vac) + vac;
  s.checks.push_back(boolean("[G(3/2), G(-3/2)] = 2L(0) + id on the vacuum", gg == want));
  const FockVector tau = FreeFieldVosa::tau();
  s.checks.push_back(boolean("L(0) tau = 3/2 tau", v.virasoro(0, tau) == Scalar(three_halves) * tau));

  VosaAdjoint corrupted(v.algebra(), FockAlgebra(FockKind::vosa(), 2));
  s.checks.push_back(
      expect_failure("jacobi with fermion norm 2 on the module", verify_generator_jacobi(v, std::min(window, 1L), &corrupted)));

  TensorVosa vv(v, std::min(max_weight, Rational(3)));
  s.checks.push_back(from_report("axioms on V (x) V", verify_vosa_axioms(vv, std::min(window, 1L))));
  s.checks.push_back(from_report("mirror equivariance on V (x) V", verify_mirror_equivariance(vv, std::min(window, 1L))));

  std::size_t bad = 0;
  for (const PairState& p : vv.basis()) {
    const PairVector x(p);
    if (TensorVosa::mirror(TensorVosa::mirror(x)) != x) ++bad;
    if (TensorVosa::parity_map(TensorVosa::parity_map(x)) != x) ++bad;
  }
  s.checks.push_back({"mirror and parity maps are involutions", 2 * vv.basis().size(), bad, json::object()});
  s.checks.push_back(boolean("mirror fixes vacuum and omega",
                             TensorVosa::mirror(TensorVosa::vacuum()) == TensorVosa::vacuum() &&
                                 TensorVosa::mirror(TensorVosa::conformal_vector()) == TensorVosa::conformal_vector()));
  s.checks.push_back(boolean("mirror swaps slot embeddings",
                             TensorVosa::mirror(TensorVosa::slot_embed(tau, 1)) == TensorVosa::slot_embed(tau, 2) &&
                                 TensorVosa::mirror(TensorVosa::slot_embed(tau, 2)) == TensorVosa::slot_embed(tau, 1)));
  return s;
}

struct Calibration {
  Suite suite;
  std::optional<N2Data> data;
};

Calibration calibrate_suite(long window) {
  Calibration c{{"calibrate n2", {}, false, {}}, std::nullopt};
  FreeFieldVosa v(4);
  TensorVosa vv(v, 3);
  try {
    c.data = calibrate_n2(vv);
  } catch (const NoCalibration& e) {
    c.suite.checks.push_back(boolean("calibration", false, json{{"what", e.what()}}));
    return c;
  }
  const N2Data& d = *c.data;
  c.suite.checks.push_back(boolean("calibration", true, to_json(d)));
  c.suite.checks.push_back(boolean("mirror fixes tau1", TensorVosa::mirror(d.tau1) == d.tau1));
  c.suite.checks.push_back(boolean("mirror negates tau2", TensorVosa::mirror(d.tau2) == Scalar(-1) * d.tau2));
  c.suite.checks.push_back(boolean("mirror negates J", TensorVosa::mirror(d.j) == Scalar(-1) * d.j));
  c.suite.checks.push_back(from_report("n2-ns on V (x) V, weight <= 3", verify_n2_structure(vv, d, 3, window)));
  return c;
}

struct TwistedParams {
  Rational max_weight;
  long window;
};

Suite twisted_suite(const TwistedParams& p, const N2Data& n2, json* characters) {
  Suite s{"twisted", {}, false, {}};
  FreeFieldVosa v(4);
  SigmaTwistedModule sigma(v);
  TensorVosa vv(v, 4);
  const TruncatedSpace sigma_space = SigmaTwistedModule::space(p.max_weight);
  s.checks.push_back(from_report("sigma sector: virasoro, n1-ramond, jacobi", verify_sigma_sector(sigma, sigma_space, p.window)));
  const Rational sigma_ground = sigma.ground_weight();
  s.checks.push_back(boolean("L^sigma(0) on the ground states is 1/16", sigma_ground == make_rational(1, 16),
                             json{{"ground", to_fraction_string(sigma_ground)}}));

  SigmaTwistedModule bad_sigma(v, 2);
  s.checks.push_back(expect_failure("sigma sector with fermion norm 2",
                                    verify_sigma_sector(bad_sigma, SigmaTwistedModule::space(1), std::min(p.window, 1L))));

  // Mirror grades are half the sigma level, so levels <= 2W give weights <= W above ground.
  const TruncatedSpace m_sigma = SigmaTwistedModule::space(2 * p.max_weight);
  MirrorTwistedModule engine(vv, sigma);
  TwistedModule module = build_mirror_twisted_module(m_sigma, engine, n2);
  s.checks.push_back(boolean("twisted module reuses the basis of M_sigma", module.space().basis() == m_sigma.basis() &&
                                                                                module.space().dump() == m_sigma.dump()));
  s.checks.push_back(from_report("mirror-twisted relations", verify_mirror_twisted_relations(module, p.window)));
  s.checks.push_back(
      from_report("equivariance under the mirror map", verify_equivariance(engine, sigma_space, p.max_weight, p.window)));
  MirrorTwistedModule iterate(vv, sigma, SingleSlotRoute::iterate);
  s.checks.push_back(from_report("single-slot modes: delta route vs iterate route",
                                 compare_single_slot_routes(engine, iterate, sigma_space, p.max_weight + 1, p.window)));

  const std::vector<Rational> spectrum = module.l0_spectrum();
  const Rational mirror_ground = *std::min_element(spectrum.begin(), spectrum.end());
  s.checks.push_back(boolean("L^kappa(0) on the ground states is 1/8", mirror_ground == make_rational(1, 8),
                             json{{"ground", to_fraction_string(mirror_ground)}}));
  std::size_t off_lattice = 0, off_formula = 0;
  for (std::size_t i = 0; i < spectrum.size(); ++i) {
    if (!is_integer(4 * (spectrum[i] - mirror_ground))) ++off_lattice;
    const FockState& st = m_sigma.basis()[i];
    if (spectrum[i] != (sigma_ground + st.level()) / 2 + make_rational(3, 32)) ++off_formula;
  }
  s.checks.push_back({"L^kappa(0) grading lies in (1/4)N above the ground", spectrum.size(), off_lattice, json::object()});
  s.checks.push_back({"L^kappa(0) = L^sigma(0)/2 + 3/32", spectrum.size(), off_formula, json::object()});

  if (characters) {
    const Corollary2Report c2 = corollary2_check(module, sigma, to_long(2 * p.max_weight));
    (*characters)["sigma_character"] = to_json(c2.sigma_character);
    (*characters)["mirror_character"] = to_json(c2.mirror_character);
  }

  N2Data flipped = n2;
  flipped.c2 = -flipped.c2;
  flipped.tau2 = Scalar(-1) * flipped.tau2;
  TwistedModule control = build_mirror_twisted_module(SigmaTwistedModule::space(1), engine, flipped);
  s.checks.push_back(expect_failure("mirror-twisted relations with c2 negated",
                                    verify_mirror_twisted_relations(control, std::min(p.window, 1L))));
  return s;
}

Suite corollary2_suite(long max_level, json* report) {
  Suite s{"corollary2", {}, false, {}};
  FreeFieldVosa v(4);
  SigmaTwistedModule sigma(v);
  TensorVosa vv(v, 4);
  const N2Data n2 = calibrate_n2(vv);
  MirrorTwistedModule engine(vv, sigma);
  TwistedModule module = build_mirror_twisted_module(SigmaTwistedModule::space(max_level), engine, n2);
  const Corollary2Report r = corollary2_check(module, sigma, max_level);
  if (report) *report = to_json(r);
  s.checks.push_back(boolean("dim_q M_sigma = dim_{q^2} M_kappa", r.pass));
  const auto& terms = r.mirror_character.terms();
  s.checks.push_back(boolean("dim_q M_kappa has leading exponent 0",
                             !terms.empty() && sgn(terms.begin()->first) == 0));
  s.checks.push_back(boolean("mirror ground = sigma ground / 2 + 3/32",
                             r.mirror_ground == r.sigma_ground / 2 + make_rational(3, 32),
                             json{{"sigma_ground", to_fraction_string(r.sigma_ground)},
                                  {"mirror_ground", to_fraction_string(r.mirror_ground)}}));
  return s;
}

// Jacobi sweeps for randomly drawn pairs of V-states on V itself and on M_sigma.
Suite sampled_suite(std::uint64_t seed, long samples) {
  Suite s{"sampled jacobi", {}, false, {}};
  std::mt19937_64 rng(seed);
  auto pick = [&rng](std::size_t n) { return static_cast<std::size_t>(rng() % n); };
  FreeFieldVosa v(4);
  SigmaTwistedModule sigma(v);
  std::vector<FockState> states;
  for (const FockState& st : v.space().basis()) {
    if (!st.is_vacuum() && st.level() <= 2) states.push_back(st);
  }
  std::vector<FockState> v_tests;
  for (const FockState& st : v.space().basis()) {
    if (st.level() <= 1) v_tests.push_back(st);
  }
  const std::vector<FockState> sigma_tests = SigmaTwistedModule::space(1).basis();
  VoaModeFn<FockState> voa_mode = [&v](const FockVector& u, long j, const FockVector& x) {
    return v.engine().mode(u, Rational(j), x);
  };
  const Rational half = make_rational(1, 2);
  for (long i = 0; i < samples; ++i) {
    const FockState& a = states[pick(states.size())];
    const FockState& b = states[pick(states.size())];
    JacobiPair<FockState> pair;
    pair.label = a.to_string() + "," + b.to_string();
    pair.u = FockVector(a);
    pair.v = FockVector(b);
    pair.wt_u = a.level();
    pair.wt_v = b.level();
    pair.parity_u = a.parity();
    pair.parity_v = b.parity();
    const std::vector<FockState> vt{v_tests[pick(v_tests.size())]};
    s.checks.push_back(from_report("V: " + pair.label, verify_jacobi(v.engine(), voa_mode, pair, vt, 1, show_fock)));
    pair.u_offset = pair.parity_u == 1 ? half : Rational(0);
    pair.v_offset = pair.parity_v == 1 ? half : Rational(0);
    const std::vector<FockState> st{sigma_tests[pick(sigma_tests.size())]};
    s.checks.push_back(from_report("M_sigma: " + pair.label, verify_jacobi(sigma, voa_mode, pair, st, 1, show_fock)));
  }
  return s;
}

Suite skipped(const std::string& name, const std::string& reason) { return {name, {}, true, reason}; }

// --- rendering ------------------------------------------------------------

int finish(const Suite& s, const std::string& command, bool as_json, std::ostream& out, json extra = json::object()) {
  if (as_json) {
    json j = to_json(s);
    j["schema"] = kSchema;
    j["command"] = command;
    for (auto& [k, val] : extra.items()) j[k] = val;
    out << j.dump(2) << '\n';
  } else {
    print_text(s, out);
  }
  return s.pass() ? kPass : kCheckFailure;
}

Rational parse_nonnegative(const std::string& text, const std::string& flag) {
  Rational r;
  try {
    r = parse_rational(text);
  } catch (const std::exception&) {
    throw CLI::ValidationError(flag, "expected a fraction p/q, got '" + text + "'");
  }
  if (sgn(r) < 0) throw CLI::ValidationError(flag, "must be non-negative");
  return r;
}

}  // namespace

unsigned worker_count() {
  if (const char* env = std::getenv("SUPERFOCK_THREADS")) {
    char* end = nullptr;
    const long n = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && n > 0) return static_cast<unsigned>(n);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of free-field superconformal structures and their twisted sectors", "superfock"};
  app.require_subcommand(1);
  bool as_json = false;

  auto* delta = app.add_subcommand("delta", "Coefficients a_j of the Delta_k operator");
  long k = 0, terms = 0, verify_order = 0;
  delta->add_option("--k", k, "Twist order k")->required()->check(CLI::PositiveNumber);
  delta->add_option("--terms", terms, "Number of coefficients")->required()->check(CLI::PositiveNumber);
  delta->add_option("--verify-order", verify_order, "Check the defining equation through x^N")
      ->check(CLI::PositiveNumber);
  delta->add_flag("--json", as_json);

  auto* verify = app.add_subcommand("verify", "Verification suites");
  verify->require_subcommand(1);
  auto* v_algebra = verify->add_subcommand("algebra", "Super-skew symmetry and super-Jacobi of a presentation");
  std::string name;
  long window = 0;
  v_algebra->add_option("--name", name, "virasoro, n1-ns, n1-ramond, n2-ns, n2-ramond, n2-mirror-twisted")->required();
  v_algebra->add_option("--window", window, "Index window")->required()->check(CLI::NonNegativeNumber);
  v_algebra->add_flag("--json", as_json);

  auto* v_vosa = verify->add_subcommand("vosa", "Axioms, Jacobi identity and N=1 structure of V and V (x) V");
  std::string max_weight_text = "4";
  long vosa_window = 3;
  v_vosa->add_option("--max-weight", max_weight_text, "Weight bound for V")->capture_default_str();
  v_vosa->add_option("--window", vosa_window, "Mode window")->capture_default_str()->check(CLI::NonNegativeNumber);
  v_vosa->add_flag("--json", as_json);

  auto* v_twisted = verify->add_subcommand("twisted", "Parity-twisted and mirror-twisted sectors");
  std::string twisted_weight_text = "2";
  long twisted_window = 2;
  v_twisted->add_option("--window", twisted_window, "Bracket window")->capture_default_str()->check(CLI::NonNegativeNumber);
  v_twisted->add_option("--max-weight", twisted_weight_text, "Weights above ground")->capture_default_str();
  v_twisted->add_flag("--json", as_json);

  auto* calibrate = app.add_subcommand("calibrate", "Solve for normalizations");
  calibrate->require_subcommand(1);
  auto* c_n2 = calibrate->add_subcommand("n2", "N=2 generators of V (x) V");
  long calibrate_window = 2;
  c_n2->add_option("--window", calibrate_window, "Bracket window for the n2-ns check")->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  c_n2->add_flag("--json", as_json);

  auto* character_cmd = app.add_subcommand("character", "Graded dimension as an exact q-series");
  std::string space_name, trunc_text;
  bool show_basis = false;
  character_cmd->add_option("--space", space_name, "Space")
      ->required()
      ->check(CLI::IsMember({"vosa", "ns-fermion", "ramond", "twisted"}));
  character_cmd->add_option("--trunc", trunc_text, "Exclusive bound on q-exponents, p/q")->required();
  character_cmd->add_flag("--basis", show_basis, "Also list the basis states");
  character_cmd->add_flag("--json", as_json);

  auto* corollary = app.add_subcommand("corollary2", "Character identity between the two twisted sectors");
  long corollary_trunc = 3;
  corollary->add_option("--trunc", corollary_trunc, "Largest M_sigma level (inclusive)")->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  corollary->add_flag("--json", as_json);

  auto* all = app.add_subcommand("all", "Every suite in dependency order");
  std::string all_weight_text = "2";
  long all_window = 2, algebra_window = 4, vosa_all_window = 3, all_trunc = 3, samples = 8;
  std::string vosa_weight_text = "4";
  std::uint64_t seed = 0;
  bool allow_skip = false;
  all->add_option("--max-weight", all_weight_text, "Twisted-sector weights above ground")->capture_default_str();
  all->add_option("--window", all_window, "Window for module-level bracket and Jacobi checks")->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  all->add_option("--algebra-window", algebra_window, "Window for presentation and automorphism checks")->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  all->add_option("--vosa-weight", vosa_weight_text, "Weight bound for V")->capture_default_str();
  all->add_option("--vosa-window", vosa_all_window, "Mode window for V")->capture_default_str()->check(CLI::NonNegativeNumber);
  all->add_option("--corollary-trunc", all_trunc, "Largest M_sigma level for the character identity")->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  all->add_option("--samples", samples, "Sampled Jacobi pairs")->capture_default_str()->check(CLI::NonNegativeNumber);
  all->add_option("--seed", seed, "Seed for sampled checks")->capture_default_str();
  all->add_flag("--allow-skip", allow_skip, "Exit 0 even when suites are skipped");
  all->add_flag("--json", as_json);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kPass : kConfigError;
  }

  try {
    if (*delta) {
      if (verify_order > 0 && terms < verify_order - 1) {
        err << "--terms must be at least --verify-order - 1\n";
        return kConfigError;
      }
      const DeltaCoefficients a = delta_coefficients(k, terms);
      std::optional<Series> residual;
      if (verify_order > 0) residual = verify_delta_equation(k, terms, verify_order);
      const bool ok = !residual || residual->is_zero();
      if (as_json) {
        json values = json::array();
        for (const auto& x : a.values) values.push_back(to_fraction_string(x));
        json j{{"schema", kSchema}, {"k", k}, {"a", values}, {"residual", nullptr}};
        if (residual) j["residual"] = to_json(*residual);
        out << j.dump(2) << '\n';
      } else {
        out << "a = [";
        for (std::size_t i = 0; i < a.values.size(); ++i) out << (i ? ", " : "") << a.values[i].get_str();
        out << "]\n";
        if (residual) out << "residual through x^" << verify_order << ": " << residual->to_string() << '\n';
      }
      return ok ? kPass : kCheckFailure;
    }

    if (*v_algebra) {
      std::optional<Presentation> alg;
      if (name == "virasoro-corrupted") {
        alg.emplace(AlgebraName::virasoro, [](const Rational& m) -> Rational { return m * m * m * m * m / 12; }, name);
      } else if (auto parsed = parse_algebra_name(name)) {
        alg.emplace(*parsed);
      } else {
        err << "unknown algebra '" << name << "'\n";
        return kConfigError;
      }
      const AlgebraReport r = verify_algebra(*alg, window, worker_count());
      if (as_json) {
        json j = to_json(r);
        j["schema"] = kSchema;
        out << j.dump(2) << '\n';
      } else {
        out << r.algebra << " window " << r.window << ": " << (r.pass() ? "PASS" : "FAIL") << " (checks " << r.checked
            << ", violations " << r.violations.size() << ")\n";
        for (std::size_t i = 0; i < std::min<std::size_t>(r.violations.size(), 5); ++i) {
          const auto& viol = r.violations[i];
          out << "  " << viol.kind << ":";
          for (const auto& g : viol.triple) out << ' ' << g.to_string();
          out << " -> " << viol.residual.to_string() << '\n';
        }
      }
      return r.pass() ? kPass : kCheckFailure;
    }

    if (*v_vosa) {
      const Rational w = parse_nonnegative(max_weight_text, "--max-weight");
      return finish(guarded("vosa", [&] { return vosa_suite(w, vosa_window); }), "verify vosa", as_json, out,
                    json{{"max_weight", to_fraction_string(w)}, {"window", vosa_window}});
    }

    if (*c_n2) {
      Calibration c = calibrate_suite(calibrate_window);
      json extra{{"window", calibrate_window}};
      if (c.data) {
        extra["scalars"] = to_json(*c.data);
        if (!as_json) {
          out << "c1 = " << c.data->c1.to_string() << ", c2 = " << c.data->c2.to_string()
              << ", cJ = " << c.data->cJ.to_string() << " (" << c.data->solutions << " sign solutions)\n";
        }
      }
      return finish(c.suite, "calibrate n2", as_json, out, extra);
    }

    if (*v_twisted) {
      const Rational w = parse_nonnegative(twisted_weight_text, "--max-weight");
      if (!is_integer(2 * w)) throw CLI::ValidationError("--max-weight", "must lie in (1/2)Z");
      json characters = json::object();
      Suite s = guarded("twisted", [&] {
        FreeFieldVosa v(4);
        TensorVosa vv(v, 3);
        return twisted_suite({w, twisted_window}, calibrate_n2(vv), &characters);
      });
      json extra{{"max_weight", to_fraction_string(w)}, {"window", twisted_window}};
      json violations = json::array();
      for (const auto& c : s.checks) {
        if (c.detail.contains("violations")) {
          for (const auto& viol : c.detail["violations"]) violations.push_back(viol);
        }
      }
      extra["violations"] = violations;
      for (auto& [key, val] : characters.items()) extra[key] = val;
      return finish(s, "verify twisted", as_json, out, extra);
    }

    if (*character_cmd) {
      const Rational trunc = parse_nonnegative(trunc_text, "--trunc");
      FreeFieldVosa v(4);
      Series series(Variable::q, trunc);
      std::optional<TruncatedSpace> basis;
      if (space_name == "vosa" || space_name == "ns-fermion") {
        const bool fermion = space_name == "ns-fermion";
        series = vosa_character(v, trunc, fermion);
        const Rational c = fermion ? make_rational(1, 2) : FreeFieldVosa::central_charge();
        basis.emplace(fermion ? FockKind::fermion_ns() : FockKind::vosa(), trunc + c / 24);
      } else {
        SigmaTwistedModule sigma(v);
        const Rational ground = sigma.ground_weight();
        if (space_name == "ramond") {
          series = sigma_character(sigma, trunc);
          basis.emplace(FockKind::ramond_sector(), trunc + FreeFieldVosa::central_charge() / 24, ground);
        } else {
          TensorVosa vv(v, 4);
          MirrorTwistedModule engine(vv, sigma);
          series = mirror_character(engine, trunc);
          const Rational mirror_ground = engine.virasoro(0, FockVector(FockState::ramond_ground(1)))
                                             .coefficient(FockState::ramond_ground(1))
                                             .a();
          // Levels l with mirror weight ground + l/2 below the bound.
          basis.emplace(FockKind::ramond_sector(), 2 * (trunc + TensorVosa::central_charge() / 24 - mirror_ground));
        }
      }
      if (as_json) {
        json j{{"schema", kSchema}, {"space", space_name}, {"series", to_json(series)}};
        if (show_basis) {
          json states = json::array();
          for (const auto& st : basis->basis()) states.push_back(st.to_string());
          j["basis"] = states;
        }
        out << j.dump(2) << '\n';
      } else {
        out << series.to_string() << '\n';
        if (show_basis) out << basis->dump();
      }
      return kPass;
    }

    if (*corollary) {
      json report = json::object();
      Suite s = guarded("corollary2", [&] { return corollary2_suite(corollary_trunc, &report); });
      json extra{{"trunc", corollary_trunc}};
      for (auto& [key, val] : report.items()) extra[key] = val;
      if (!as_json && report.contains("sigma_character")) {
        out << "dim_q M_sigma       = " << series_from_json(report["sigma_character"]).to_string() << '\n';
        out << "dim_q M_kappa       = " << series_from_json(report["mirror_character"]).to_string() << '\n';
        out << "dim_q^2 M_kappa     = " << series_from_json(report["mirror_substituted"]).to_string() << '\n';
      }
      return finish(s, "corollary2", as_json, out, extra);
    }

    if (*all) {
      const Rational max_weight = parse_nonnegative(all_weight_text, "--max-weight");
      const Rational vosa_weight = parse_nonnegative(vosa_weight_text, "--vosa-weight");
      if (!is_integer(2 * max_weight)) throw CLI::ValidationError("--max-weight", "must lie in (1/2)Z");
      const unsigned workers = worker_count();

      // Calibration feeds the twisted suite, so it runs first.
      Calibration calibration;
      if (all_window == 0) {
        calibration.suite = skipped("calibrate n2", "window 0");
      } else {
        calibration = calibrate_suite(all_window);
      }

      std::vector<std::function<Suite()>> builders;
      builders.emplace_back([] { return guarded("delta", delta_suite); });
      builders.emplace_back([&] {
        if (algebra_window == 0) return skipped("algebra", "algebra window 0");
        return guarded("algebra", [&] { return algebra_suite(algebra_window, 1); });
      });
      builders.emplace_back([&] {
        if (algebra_window == 0) return skipped("mirror automorphism", "algebra window 0");
        return guarded("mirror automorphism", [&] { return automorphism_suite(algebra_window); });
      });
      builders.emplace_back([&] {
        if (vosa_all_window == 0 || sgn(vosa_weight) == 0) return skipped("vosa", "empty window or weight");
        return guarded("vosa", [&] { return vosa_suite(vosa_weight, vosa_all_window); });
      });
      builders.emplace_back([&] { return calibration.suite; });
      builders.emplace_back([&] {
        if (all_window == 0 || sgn(max_weight) == 0) return skipped("twisted", "empty window or weight");
        if (!calibration.data) return skipped("twisted", "calibration failed");
        return guarded("twisted", [&] { return twisted_suite({max_weight, all_window}, *calibration.data, nullptr); });
      });
      builders.emplace_back([&] {
        if (all_trunc == 0) return skipped("corollary2", "truncation 0");
        return guarded("corollary2", [&] { return corollary2_suite(all_trunc, nullptr); });
      });
      builders.emplace_back([&] {
        if (samples == 0) return skipped("sampled jacobi", "no samples");
        return guarded("sampled jacobi", [&] { return sampled_suite(seed, samples); });
      });
      const std::vector<Suite> suites = run_parallel(builders, workers);

      std::size_t checked = 0, failed = 0, skipped_count = 0;
      for (const auto& s : suites) {
        checked += s.checked();
        failed += s.failed();
        skipped_count += s.skipped ? 1 : 0;
      }
      const bool ok = failed == 0 && (skipped_count == 0 || allow_skip);
      if (as_json) {
        json list = json::array();
        for (const auto& s : suites) list.push_back(to_json(s));
        json j{{"schema", kSchema},
               {"command", "all"},
               {"config",
                {{"max_weight", to_fraction_string(max_weight)},
                 {"window", all_window},
                 {"algebra_window", algebra_window},
                 {"vosa_weight", to_fraction_string(vosa_weight)},
                 {"vosa_window", vosa_all_window},
                 {"corollary_trunc", all_trunc},
                 {"samples", samples},
                 {"seed", seed},
                 {"allow_skip", allow_skip}}},
               {"suites", list},
               {"summary", {{"checked", checked}, {"failed", failed}, {"skipped", skipped_count}}},
               {"pass", ok}};
        out << j.dump(2) << '\n';
      } else {
        for (const auto& s : suites) print_text(s, out);
        out << "summary: checks " << checked << ", failed " << failed << ", skipped " << skipped_count << " -> "
            << (ok ? "PASS" : "FAIL") << '\n';
      }
      return ok ? kPass : kCheckFailure;
    }
  } catch (const CLI::ValidationError& e) {
    err << e.what() << '\n';
    return kConfigError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kConfigError;
  }
  return kConfigError;
}

}  // namespace superfock::cli
