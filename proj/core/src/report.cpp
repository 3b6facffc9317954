#include "superfock/report.hpp"

namespace superfock {

nlohmann::json to_json(const Residual& r) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [symbol, c] : r) terms.push_back(nlohmann::json{{"symbol", symbol}, {"coeff", to_json(c)}});
  return terms;
}

nlohmann::json to_json(const CheckReport& r) {
  nlohmann::json violations = nlohmann::json::array();
  for (const auto& v : r.violations) {
    violations.push_back(nlohmann::json{{"kind", v.kind}, {"triple", v.triple}, {"residual", to_json(v.residual)}});
  }
  return nlohmann::json{{"suite", r.suite},
                        {"window", r.window},
                        {"checked", r.checked},
                        {"failed", r.failed},
                        {"pass", r.pass()},
                        {"violations", violations}};
}

}  // namespace superfock
