#pragma once

// Verification sweeps over families, parameters, primes and dim V, with
// deterministic JSON and CSV emission.

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "symcls/group.hpp"
#include "symcls/theorems.hpp"

namespace symcls {

inline constexpr const char* kToolVersion = "0.1.0";

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitDisagreement = 2,
  kExitConstructionFailure = 3,
};

struct SweepConfig {
  std::vector<FamilyKind> families{FamilyKind::Dicyclic, FamilyKind::Dihedral, FamilyKind::Semidihedral};
  int n_lo = 2;
  int n_hi = 6;
  std::vector<int> primes{2, 3, 5};
  int dim_lo = 1;
  int dim_hi = 3;
  std::size_t orbit_cap = 12;
  /// Test hook: replaces the closed-form o-basis predicate.
  std::function<bool(const CaseParams&)> obasis_predicate;

  /// Throws Error(ParameterOutOfRange) on empty ranges or non-prime entries.
  void validate() const;
};

struct CaseRecord {
  std::string family;
  int n = 0;
  int p = 0;
  int t = 0;
  int l = 0;
  std::string character;
  int dim_v = 0;
  std::optional<int> t_gamma;
  std::optional<int> predicted_dim;
  int observed_dim = 0;
  bool predicted_obasis = false;
  bool observed_obasis = false;
  bool agree = false;
};

struct SweepResult {
  std::vector<CaseRecord> records;
  /// Case keys with no two-dimensional Brauer character.
  std::vector<std::string> vacuous;
  std::vector<std::string> notes;
  /// Construction failures, one message per case.
  std::vector<std::string> failures;
  std::vector<std::string> warnings;

  bool all_agree() const;
  int exit_code() const;
};

SweepResult run_sweep(const SweepConfig& config);

/// Records produced by one verification report, in row order.
std::vector<CaseRecord> to_records(const VerificationReport& report);

std::string to_json(const SweepConfig& config, const SweepResult& result);
/// RFC 4180; null fields are empty.
std::string to_csv(const SweepResult& result);

}  // namespace symcls
