#pragma once

#include "heckekit/affine_weyl.hpp"
#include "heckekit/serialize.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace heckekit {

struct CheckResult {
  std::string name;
  std::size_t instances = 0;
  std::size_t failures = 0;
  /// First failing instance; null while passing.
  Json counterexample;

  bool passed() const { return failures == 0; }
};

struct SuiteReport {
  std::string suite;
  std::string datum;
  std::string lattice;
  int bound = 0;
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;  // sorted by name
  double duration_seconds = 0;

  bool passed() const;
  /// {"schema": 1, ...}; the duration is only included on request.
  Json to_json(bool include_duration = false) const;
  std::string to_text() const;
};

const std::vector<std::string>& suite_names();

/// Runs a named suite ("braid", "theta", "center", "kgroup", "masp", "euler",
/// "whittaker" or "all"). Weight-indexed checks cover ⟨λ⁺, 2ρ∨⟩ ≤ bound,
/// element-indexed checks cover ℓ(w) ≤ bound.
///
/// Throws ParseError for an unknown suite and ResourceError when the bound
/// exceeds the budget.
SuiteReport run_suite(std::string_view name, std::shared_ptr<const RootDatum> datum, int bound, std::uint64_t seed,
                      ResourceBudget budget = ResourceBudget::from_environment());

}  // namespace heckekit
