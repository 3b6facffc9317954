#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "superfock/fock.hpp"
#include "superfock/scalar.hpp"
#include "superfock/sparse_vector.hpp"

namespace superfock {

/// Residual vector in printable form: (state text, coefficient) pairs.
using Residual = std::vector<std::pair<std::string, Scalar>>;

template <class Key, class Show>
Residual make_residual(const SparseVector<Key>& v, Show&& show) {
  Residual out;
  for (const auto& [k, c] : v) out.emplace_back(show(k), c);
  return out;
}

inline Residual make_residual(const FockVector& v) {
  return make_residual(v, [](const FockState& s) { return s.to_string(); });
}

/// Reports keep at most this many violations; `checked` and `failed` still count everything.
inline constexpr std::size_t kMaxRecordedViolations = 64;

struct CheckViolation {
  std::string kind;
  std::vector<std::string> triple;
  Residual residual;
};

/// Outcome of a module-level check sweep. Violations keep sweep order, which is deterministic.
struct CheckReport {
  std::string suite;
  long window = 0;
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::vector<CheckViolation> violations;

  bool pass() const { return failed == 0; }
  void merge(const CheckReport& other) {
    checked += other.checked;
    failed += other.failed;
    for (const auto& v : other.violations) {
      if (violations.size() > kMaxRecordedViolations) break;
      violations.push_back(v);
    }
  }
};

nlohmann::json to_json(const Residual& r);
nlohmann::json to_json(const CheckReport& r);

inline void record(CheckReport& report, CheckViolation v) {
  ++report.failed;
  if (report.violations.size() < kMaxRecordedViolations) report.violations.push_back(std::move(v));
  else if (report.violations.size() == kMaxRecordedViolations) report.violations.push_back({"truncated", {}, {}});
}

}  // namespace superfock
