#pragma once

// Closed-form predicates for o-basis existence, orbital dimensions and
// nonvanishing of standard tensors, and a harness that checks each of them
// against the exact oracles in tensor.hpp.

#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "symcls/brauer.hpp"
#include "symcls/cyclo.hpp"
#include "symcls/group.hpp"
#include "symcls/tensor.hpp"

namespace symcls {

/// 2-adic valuation; throws Error(ZeroInput) on 0.
int nu2(const Rational& q);

struct CaseParams {
  GroupFamily family;
  int p = 2;
  /// rotation order = l * p^t.
  PrimeSplit split;
  int dim_v = 1;
  CharacterSpec character;

  int t() const { return split.t; }
  int l() const { return split.l; }
};

/// Throws Error(ParameterOutOfRange) for a non-prime p or dim_v < 1.
CaseParams make_case(const GroupFamily& family, int p, int dim_v, const CharacterSpec& character);

/// Throws Error(CharacterNotLinear) for two-dimensional characters.
bool predicate_linear(const CaseParams& c);

/// SD_8n only: the linear theorem assumes dim V > 2. Returns "theorem",
/// "remark" (dim V = 2) or "outside-hypothesis" (dim V = 1); "theorem" for
/// the other families.
std::string linear_regime(const CaseParams& c);

/// Throws Error(IndexOutOfRange) when the index is not that of a
/// two-dimensional Brauer character of the family for this prime.
bool predicate_two_dim(const CaseParams& c);

/// Requires t_gamma | l; throws Error(ParameterOutOfRange) otherwise.
int predicted_dim(const CaseParams& c, int t_gamma);
bool predicted_nonvanishing(const CaseParams& c, int t_gamma);

/// SD_8n, odd h: <e_{gamma sigma_i}, e_{gamma sigma_j}> = 0 iff
/// cos((i-j) 2h pi / l) = 0 for i, j of equal parity and sin(...) = 0 otherwise.
bool odd_h_orthogonality_criterion(int i, int j, int h, int l);

/// Coset indices {1, 2^(k-1) + 1} for nu2(2 index / l) = -k < 0.
std::pair<int, int> printed_witness_pair(const CaseParams& c);

struct TGammaRow {
  int t_gamma = 0;
  IndexSequence gamma;
  int predicted_dim = 0;
  /// t_gamma - d_gamma.
  int formula_dim = 0;
  int d_gamma = 0;
  int rank_m = 0;
  int rank_gram = 0;
  bool predicted_nonvanishing = false;
  bool observed_nonvanishing = false;
  /// Every coset tensor is zero, or none is.
  bool uniform_vanishing = true;
  bool predicted_obasis = false;
  bool observed_obasis = false;
  std::vector<int> witness;
  bool agree = false;

  bool dims_consistent() const { return formula_dim == rank_m && rank_m == rank_gram; }
};

struct VerifyOptions {
  /// Orbit representatives added to the linear-character sample.
  std::size_t orbit_cap = 12;
  /// Replaces the closed-form o-basis predicate when set.
  std::function<bool(const CaseParams&)> obasis_predicate;
};

struct VerificationReport {
  CaseParams params;
  std::string label;
  bool linear = false;
  bool predicted_obasis = false;
  bool observed_obasis = false;
  /// Two-dimensional characters: one row per divisor t_gamma of l.
  std::vector<TGammaRow> rows;
  /// Linear characters: sampled orbits, witness sequences first.
  std::vector<OrbitVerdict> sample;
  /// Linear characters: dim V^phi_alpha(G) for the first sampled sequence.
  int observed_dim = 0;
  std::vector<std::string> notes;
  bool agree = false;
};

VerificationReport verify_case(const FiniteGroup& g, const BrauerCharacter& phi, int dim_v,
                               const VerifyOptions& options = {});

/// Builds the group and looks the character up by its spec.
VerificationReport verify_case(const CaseParams& c, const VerifyOptions& options = {});

/// (1,2,...,2) and, for dim V >= 3, (1,2,...,2,3); the constant sequence for dim V = 1.
std::vector<IndexSequence> linear_witness_sequences(const FiniteGroup& g, int dim_v);

}  // namespace symcls
