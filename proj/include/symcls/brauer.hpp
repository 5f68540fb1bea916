#pragma once

// Ordinary character tables of D_m, T_4n and SD_8n, their restrictions to the
// p-regular elements (the irreducible Brauer characters), and detection of a
// cyclic support <rot^(p^t)>.

#include <string>
#include <vector>

#include "symcls/cyclo.hpp"
#include "symcls/group.hpp"

namespace symcls {

enum class CharacterKind { Linear, TwoDim };

struct CharacterSpec {
  GroupFamily family;
  CharacterKind kind = CharacterKind::Linear;
  /// Table index: j/h for D_m, h/b for T_4n, k/h for SD_8n.
  int index = 0;
  /// Odd-n table of T_4n or SD_8n (chi', psi').
  bool primed = false;
  /// Number of linear Brauer characters for the prime in use (0 for ordinary).
  int epsilon = 0;
  /// Linear characters only: value on rot is i^rot_quarter, on refl i^refl_quarter.
  int rot_quarter = 0;
  int refl_quarter = 0;

  int degree() const { return kind == CharacterKind::Linear ? 1 : 2; }
  /// e.g. "psi_hat[b=1]", "chi_hat'[k=4]"; without the hat for ordinary characters.
  std::string label(bool hat = true) const;
};

/// An ordinary irreducible character, valued on conjugacy classes.
struct OrdinaryCharacter {
  CharacterSpec spec;
  std::vector<CycNum> class_values;
};

/// Character value of the spec at element g, computed from the table formulas.
CycNum character_value(const FiniteGroup& g, const CharacterSpec& spec, int element);

/// Conductor used for all character values of g: lcm(rotation order, 4).
int value_conductor(const FiniteGroup& g);

std::vector<OrdinaryCharacter> ordinary_table(const FiniteGroup& g);

/// Inner product (1/|G|) sum chi(g) conj(psi(g)).
CycNum character_inner_product(const FiniteGroup& g, const OrdinaryCharacter& a,
                               const OrdinaryCharacter& b);

struct BrauerCharacter {
  CharacterSpec spec;
  int p = 2;
  PrimeSplit split;
  ElementSet domain;
  std::vector<int> class_of;
  /// Indexed by class id; classes outside the domain hold zero.
  std::vector<CycNum> class_values;
  CycNum degree;
  /// Position in ordinary_table() of the character this restricts.
  int ordinary_index = -1;

  std::string label() const { return spec.label(true); }
  bool is_linear() const { return spec.kind == CharacterKind::Linear; }
};

/// Throws Error(ElementNotPRegular) outside the domain.
CycNum evaluate(const BrauerCharacter& phi, int element);

/// Indices j*p^t of the two-dimensional Brauer characters of SD_8n, in the
/// order E, O_1, O_2 (p odd) or j = 1..(l-1)/2 (p = 2).
std::vector<int> semidihedral_two_dim_indices(int n, int p);

std::vector<BrauerCharacter> irreducible_brauer_characters(const FiniteGroup& g, int p);

struct SupportInfo {
  bool vanishes_off_c = false;
  bool nonzero_on_c = false;
  Subgroup c;
  int generator = 0;  // tau = rot^(p^t)

  /// phi(S \ C) = 0 and phi(sigma) != 0 on all of C.
  bool support_is_cyclic() const { return vanishes_off_c && nonzero_on_c; }
};

SupportInfo cyclic_support(const FiniteGroup& g, const BrauerCharacter& phi);

}  // namespace symcls
