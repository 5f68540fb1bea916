#pragma once

// Decomposable symmetrized tensors e^phi_alpha as sparse maps over index
// sequences, their inner products, the orbital data over a cyclic support
// C = <tau>, and searches for orthogonal bases made of standard tensors.

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "symcls/brauer.hpp"
#include "symcls/cyclo.hpp"
#include "symcls/group.hpp"

namespace symcls {

struct SymTensor {
  /// Nonzero coefficients only.
  std::map<IndexSequence, CycNum> coeffs;

  bool is_zero() const { return coeffs.empty(); }
  CycNum coefficient(const IndexSequence& delta) const;

  friend bool operator==(const SymTensor& a, const SymTensor& b) { return a.coeffs == b.coeffs; }
};

/// (phi(e)/|S|) sum_{sigma in S} phi(sigma) e_{alpha sigma^-1}, S = domain(phi).
SymTensor symmetrized_tensor(const FiniteGroup& g, const BrauerCharacter& phi, const IndexSequence& alpha);

/// sum_delta u(delta) conj(v(delta)).
CycNum inner_product_direct(const SymTensor& u, const SymTensor& v);

/// <e^phi_{alpha sigma1}, e^phi_{alpha sigma2}> as the double sum over mu in S
/// and tau in G_alpha with mu sigma1^-1 tau sigma2 in S.
CycNum inner_product_formula(const FiniteGroup& g, const BrauerCharacter& phi, const IndexSequence& alpha,
                             int sigma1, int sigma2);

/// sigma . u, extending sigma e_delta = e_{delta sigma^-1} linearly.
SymTensor act_on_tensor(const FiniteGroup& g, int sigma, const SymTensor& u);

/// Double cosets G_alpha sigma C, each sorted, ordered by least element.
std::vector<std::vector<int>> equiv_classes_sim_alpha(const FiniteGroup& g, const Subgroup& c,
                                                      const IndexSequence& alpha);

struct OrbitalData {
  IndexSequence gamma;
  Subgroup c;
  Subgroup stabilizer;  // G_gamma
  Subgroup c_cap_stabilizer;
  int tau = 0;
  int t_gamma = 0;
  /// tau^1 .. tau^t_gamma.
  std::vector<int> coset_reps;
  /// v_j = sum_{h in C cap G_gamma} phi(h tau^(t_gamma - j)), j = 0 .. t_gamma-1.
  std::vector<CycNum> v;
  int d_gamma = 0;
  int dim = 0;
};

/// Throws Error(SupportNotCyclic) unless phi vanishes on S \ C.
OrbitalData orbital_data(const FiniteGroup& g, const BrauerCharacter& phi, const IndexSequence& gamma);

/// (M_gamma)_ij = sum_{h in C cap G_gamma} phi(h tau^i tau^j), 1 <= i, j <= t_gamma.
CycMatrix matrix_M_gamma(const FiniteGroup& g, const BrauerCharacter& phi, const OrbitalData& od);

/// e^phi_{gamma tau^j} for j = 1 .. t_gamma.
std::vector<SymTensor> coset_tensors(const FiniteGroup& g, const BrauerCharacter& phi, const OrbitalData& od);

CycMatrix gram_matrix(const std::vector<SymTensor>& tensors);
CycMatrix gram_matrix(const FiniteGroup& g, const BrauerCharacter& phi, const OrbitalData& od);

enum class SearchOutcome { Found, NotFound, BudgetExhausted };

struct SubsetSearch {
  SearchOutcome outcome = SearchOutcome::NotFound;
  /// 0-based vertex indices, increasing.
  std::vector<int> subset;
  std::size_t nodes = 0;
};

/// Lexicographically first set of `size` vertices with nonzero diagonal and
/// pairwise zero Gram entries. When `required` is set the subset must contain it.
SubsetSearch find_orthogonal_subset(const CycMatrix& gram, std::size_t size, std::optional<int> required = {},
                                    std::size_t node_budget = 5'000'000);

struct ObasisResult {
  int dim = 0;
  bool exists = false;
  /// Coset indices j (tau^j) of the witness, increasing; empty when dim = 0.
  std::vector<int> witness;
};

/// Orthogonal subsets of the t_gamma coset tensors of size dim(V^phi_gamma(C)).
ObasisResult obasis_search(const FiniteGroup& g, const BrauerCharacter& phi, const OrbitalData& od);

struct OrbitVerdict {
  IndexSequence alpha;
  /// dim V^phi_alpha(G).
  int dim = 0;
  bool has_obasis = false;
  /// Group elements g with e^phi_{alpha g} in the witness; contains the identity.
  std::vector<int> witness;
  /// <e^phi_{alpha sigma}, e^phi_alpha> != 0 for every sigma in G.
  bool nonorthogonal_to_alpha = false;
  SearchOutcome outcome = SearchOutcome::NotFound;
};

/// o-basis of the orbital subspace V^phi_alpha(G) among the standard tensors
/// e^phi_{alpha sigma}, searched with e^phi_alpha forced into the basis.
OrbitVerdict orbit_obasis(const FiniteGroup& g, const BrauerCharacter& phi, const IndexSequence& alpha,
                          std::size_t node_budget = 5'000'000);

struct WholeSpaceVerdict {
  std::vector<OrbitVerdict> orbits;
  /// Conjunction over the sample; a sample is not all of Delta.
  bool has_obasis = true;
  bool sampled = true;
};

WholeSpaceVerdict whole_space_obasis(const FiniteGroup& g, const BrauerCharacter& phi,
                                     const std::vector<IndexSequence>& sample);

}  // namespace symcls
