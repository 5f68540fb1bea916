#pragma once

// Randomized structural checks shared by the unit suites and the acceptance
// binary. Each check returns how many samples it drew and how many failed.

#include <algorithm>
#include <cstddef>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "symcls/brauer.hpp"
#include "symcls/group.hpp"
#include "symcls/tensor.hpp"

namespace symcls::testing {

struct CheckTally {
  int samples = 0;
  int failures = 0;
  std::string first_failure;

  void record(bool ok, const std::string& what) {
    ++samples;
    if (!ok) {
      if (failures == 0) first_failure = what;
      ++failures;
    }
  }
  bool passed(int min_samples) const { return failures == 0 && samples >= min_samples; }
};

struct Instance {
  FiniteGroup g;
  BrauerCharacter phi;
  std::string name;
};

inline std::vector<GroupFamily> property_families() {
  std::vector<GroupFamily> out;
  for (int m = 3; m <= 8; ++m) out.push_back(GroupFamily::dihedral(m));
  for (int n = 2; n <= 4; ++n) out.push_back(GroupFamily::dicyclic(n));
  for (int n = 2; n <= 3; ++n) out.push_back(GroupFamily::semidihedral(n));
  return out;
}

template <typename Pred>
Instance random_instance(std::mt19937& rng, Pred accept) {
  const auto fams = property_families();
  std::uniform_int_distribution<std::size_t> fpick(0, fams.size() - 1);
  const int primes[] = {2, 3, 5};
  std::uniform_int_distribution<int> ppick(0, 2);
  for (;;) {
    const FiniteGroup g = build_group(fams[fpick(rng)]);
    const int p = primes[ppick(rng)];
    std::vector<BrauerCharacter> ibr;
    for (auto& phi : irreducible_brauer_characters(g, p)) {
      if (accept(g, phi)) ibr.push_back(std::move(phi));
    }
    if (ibr.empty()) continue;
    std::uniform_int_distribution<std::size_t> cpick(0, ibr.size() - 1);
    BrauerCharacter phi = ibr[cpick(rng)];
    const std::string name = g.family().name() + " p=" + std::to_string(p) + " " + phi.label();
    return {g, std::move(phi), name};
  }
}

inline Instance random_instance(std::mt19937& rng) {
  return random_instance(rng, [](const FiniteGroup&, const BrauerCharacter&) { return true; });
}

inline IndexSequence random_sequence(std::mt19937& rng, const FiniteGroup& g, int k) {
  std::uniform_int_distribution<int> d(1, k);
  IndexSequence a(static_cast<std::size_t>(g.degree()));
  for (auto& x : a) x = d(rng);
  return a;
}

inline int random_element(std::mt19937& rng, const FiniteGroup& g) {
  return std::uniform_int_distribution<int>(0, g.order() - 1)(rng);
}

inline bool vanishes_off_c(const FiniteGroup& g, const BrauerCharacter& phi) {
  return cyclic_support(g, phi).vanishes_off_c;
}

/// Closed double-sum formula against the expanded tensors.
inline CheckTally check_formula_vs_direct(std::mt19937& rng, int samples) {
  CheckTally tally;
  std::uniform_int_distribution<int> kpick(1, 3);
  while (tally.samples < samples) {
    const Instance in = random_instance(rng);
    const IndexSequence alpha = random_sequence(rng, in.g, kpick(rng));
    const int s1 = random_element(rng, in.g);
    const int s2 = random_element(rng, in.g);
    const CycNum direct = inner_product_direct(symmetrized_tensor(in.g, in.phi, in.g.act(alpha, s1)),
                                               symmetrized_tensor(in.g, in.phi, in.g.act(alpha, s2)));
    tally.record(direct == inner_product_formula(in.g, in.phi, alpha, s1, s2), in.name + " " + to_string(alpha));
  }
  return tally;
}

/// sigma . e_alpha = e_{alpha sigma^-1}, and the action preserves inner products.
inline CheckTally check_translation(std::mt19937& rng, int samples) {
  CheckTally tally;
  while (tally.samples < samples) {
    const Instance in = random_instance(rng);
    const IndexSequence alpha = random_sequence(rng, in.g, 3);
    const IndexSequence beta = random_sequence(rng, in.g, 3);
    const int sigma = random_element(rng, in.g);
    const SymTensor u = symmetrized_tensor(in.g, in.phi, alpha);
    const SymTensor v = symmetrized_tensor(in.g, in.phi, beta);
    const SymTensor su = act_on_tensor(in.g, sigma, u);
    const bool moved = su == symmetrized_tensor(in.g, in.phi, in.g.act(alpha, in.g.inv(sigma)));
    const bool unitary = inner_product_direct(su, act_on_tensor(in.g, sigma, v)) == inner_product_direct(u, v);
    tally.record(moved && unitary, in.name + " " + to_string(alpha));
  }
  return tally;
}

/// Right-translating an orthogonal family of standard tensors by tau keeps
/// the Gram matrix, so an o-basis of V_alpha(G) stays one.
inline CheckTally check_translated_obasis(std::mt19937& rng, int samples) {
  CheckTally tally;
  while (tally.samples < samples) {
    const Instance in = random_instance(rng);
    const IndexSequence alpha = random_sequence(rng, in.g, 2);
    const OrbitVerdict verdict = orbit_obasis(in.g, in.phi, alpha);
    if (!verdict.has_obasis || verdict.witness.empty()) continue;
    const int tau = random_element(rng, in.g);
    std::vector<SymTensor> base;
    std::vector<SymTensor> moved;
    for (int w : verdict.witness) {
      base.push_back(symmetrized_tensor(in.g, in.phi, in.g.act(alpha, w)));
      moved.push_back(symmetrized_tensor(in.g, in.phi, in.g.act(alpha, in.g.mul(w, tau))));
    }
    const CycMatrix a = gram_matrix(base);
    const CycMatrix b = gram_matrix(moved);
    bool same = true;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t j = 0; j < a.cols(); ++j) same = same && a(i, j) == b(i, j);
    }
    const IndexSequence beta = in.g.act(alpha, tau);
    const OrbitVerdict translated = orbit_obasis(in.g, in.phi, beta);
    tally.record(same && translated.has_obasis && translated.dim == verdict.dim, in.name + " " + to_string(alpha));
  }
  return tally;
}

/// With phi vanishing off C and G_gamma trivial, tensors indexed by distinct
/// cosets sigma C are orthogonal.
inline CheckTally check_orthogonal_split(std::mt19937& rng, int samples) {
  CheckTally tally;
  while (tally.samples < samples) {
    const Instance in = random_instance(rng, vanishes_off_c);
    IndexSequence gamma = random_sequence(rng, in.g, 3);
    if (stabilizer(in.g, gamma).size() != 1) continue;
    const SupportInfo s = cyclic_support(in.g, in.phi);
    const int s1 = random_element(rng, in.g);
    const int s2 = random_element(rng, in.g);
    if (s.c.contains(in.g.mul(in.g.inv(s1), s2))) continue;
    tally.record(inner_product_formula(in.g, in.phi, gamma, s1, s2).is_zero(), in.name + " " + to_string(gamma));
  }
  return tally;
}

/// Standard tensors from different orbits are orthogonal.
inline CheckTally check_orbit_orthogonality(std::mt19937& rng, int samples) {
  CheckTally tally;
  while (tally.samples < samples) {
    const Instance in = random_instance(rng);
    const IndexSequence alpha = random_sequence(rng, in.g, 2);
    const IndexSequence beta = random_sequence(rng, in.g, 2);
    bool same_orbit = false;
    for (int x = 0; x < in.g.order() && !same_orbit; ++x) same_orbit = in.g.act(alpha, x) == beta;
    if (same_orbit) continue;
    tally.record(inner_product_direct(symmetrized_tensor(in.g, in.phi, alpha), symmetrized_tensor(in.g, in.phi, beta))
                     .is_zero(),
                 in.name + " " + to_string(alpha) + " " + to_string(beta));
  }
  return tally;
}

/// With phi vanishing off C, sigma1 and sigma2 in different double cosets
/// G_alpha sigma C give orthogonal tensors.
inline CheckTally check_double_coset_orthogonality(std::mt19937& rng, int samples) {
  CheckTally tally;
  while (tally.samples < samples) {
    const Instance in = random_instance(rng, vanishes_off_c);
    const IndexSequence alpha = random_sequence(rng, in.g, 2);
    const SupportInfo s = cyclic_support(in.g, in.phi);
    const auto classes = equiv_classes_sim_alpha(in.g, s.c, alpha);
    if (classes.size() < 2) continue;
    std::uniform_int_distribution<std::size_t> cpick(0, classes.size() - 1);
    const std::size_t a = cpick(rng);
    const std::size_t b = cpick(rng);
    if (a == b) continue;
    const auto& ca = classes[a];
    const auto& cb = classes[b];
    const int s1 = ca[std::uniform_int_distribution<std::size_t>(0, ca.size() - 1)(rng)];
    const int s2 = cb[std::uniform_int_distribution<std::size_t>(0, cb.size() - 1)(rng)];
    tally.record(inner_product_formula(in.g, in.phi, alpha, s1, s2).is_zero(), in.name + " " + to_string(alpha));
  }
  return tally;
}

/// G_gamma sigma C is the same set for every representative of a class, and
/// the classes partition G.
inline CheckTally check_equivalence_well_defined(std::mt19937& rng, int samples) {
  CheckTally tally;
  while (tally.samples < samples) {
    const Instance in = random_instance(rng, vanishes_off_c);
    const IndexSequence gamma = random_sequence(rng, in.g, 2);
    const SupportInfo s = cyclic_support(in.g, in.phi);
    const Subgroup st = stabilizer(in.g, gamma);
    const auto classes = equiv_classes_sim_alpha(in.g, s.c, gamma);
    bool ok = true;
    std::set<int> covered;
    for (const auto& cls : classes) {
      for (int sigma : cls) {
        std::set<int> dc;
        for (int h : st.members()) {
          for (int c : s.c.members()) dc.insert(in.g.mul(in.g.mul(h, sigma), c));
        }
        ok = ok && std::vector<int>(dc.begin(), dc.end()) == cls;
        ok = ok && covered.insert(sigma).second;
      }
    }
    ok = ok && covered.size() == static_cast<std::size_t>(in.g.order());
    tally.record(ok, in.name + " " + to_string(gamma));
  }
  return tally;
}

}  // namespace symcls::testing
