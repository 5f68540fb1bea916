#include "symcls/tensor.hpp"

#include <algorithm>

#include "symcls/error.hpp"

namespace symcls {

namespace {

void accumulate(std::map<IndexSequence, CycNum>& coeffs, IndexSequence key, const CycNum& value) {
  auto [it, inserted] = coeffs.try_emplace(std::move(key), value);
  if (!inserted) it->second += value;
}

void drop_zeros(std::map<IndexSequence, CycNum>& coeffs) {
  std::erase_if(coeffs, [](const auto& kv) { return kv.second.is_zero(); });
}

class CliqueSearch {
 public:
  CliqueSearch(const std::vector<std::vector<char>>& adj, std::size_t target, std::size_t budget)
      : adj_(adj), target_(target), budget_(budget) {}

  bool run(const std::vector<int>& candidates) {
    if (chosen_.size() >= target_) return true;
    if (++nodes_ > budget_) {
      exhausted_ = true;
      return false;
    }
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (chosen_.size() + (candidates.size() - i) < target_) break;
      const int v = candidates[i];
      std::vector<int> next;
      for (std::size_t j = i + 1; j < candidates.size(); ++j) {
        if (adj_[static_cast<std::size_t>(v)][static_cast<std::size_t>(candidates[j])]) next.push_back(candidates[j]);
      }
      chosen_.push_back(v);
      if (run(next)) return true;
      chosen_.pop_back();
      if (exhausted_) return false;
    }
    return false;
  }

  std::vector<int>& chosen() { return chosen_; }
  std::size_t nodes() const { return nodes_; }
  bool exhausted() const { return exhausted_; }

 private:
  const std::vector<std::vector<char>>& adj_;
  std::size_t target_;
  std::size_t budget_;
  std::size_t nodes_ = 0;
  bool exhausted_ = false;
  std::vector<int> chosen_;
};

}  // namespace

CycNum SymTensor::coefficient(const IndexSequence& delta) const {
  auto it = coeffs.find(delta);
  return it == coeffs.end() ? CycNum() : it->second;
}

SymTensor symmetrized_tensor(const FiniteGroup& g, const BrauerCharacter& phi, const IndexSequence& alpha) {
  if (alpha.size() != static_cast<std::size_t>(g.degree())) {
    throw Error(ErrorKind::LengthMismatch, "sequence length " + std::to_string(alpha.size()) +
                                               " differs from degree " + std::to_string(g.degree()));
  }
  const CycNum factor = phi.degree * CycNum(Rational(1, static_cast<long>(phi.domain.size())));
  SymTensor out;
  for (int sigma : phi.domain.members()) {
    const CycNum value = evaluate(phi, sigma);
    if (value.is_zero()) continue;
    accumulate(out.coeffs, g.act(alpha, g.inv(sigma)), factor * value);
  }
  drop_zeros(out.coeffs);
  return out;
}

CycNum inner_product_direct(const SymTensor& u, const SymTensor& v) {
  CycNum sum;
  for (const auto& [delta, cu] : u.coeffs) {
    auto it = v.coeffs.find(delta);
    if (it != v.coeffs.end()) sum += cu * it->second.conj();
  }
  return sum;
}

CycNum inner_product_formula(const FiniteGroup& g, const BrauerCharacter& phi, const IndexSequence& alpha,
                             int sigma1, int sigma2) {
  const Subgroup g_alpha = stabilizer(g, alpha);
  const int s1_inv = g.inv(sigma1);
  CycNum sum;
  for (int mu : phi.domain.members()) {
    const CycNum phi_mu = evaluate(phi, mu);
    if (phi_mu.is_zero()) continue;
    const int left = g.mul(mu, s1_inv);
    for (int tau : g_alpha.members()) {
      const int rho = g.mul(g.mul(left, tau), sigma2);
      if (!phi.domain.contains(rho)) continue;
      sum += phi_mu * evaluate(phi, rho).conj();
    }
  }
  const auto s = static_cast<long>(phi.domain.size());
  return sum * phi.degree * phi.degree.conj() * CycNum(Rational(1, s * s));
}

SymTensor act_on_tensor(const FiniteGroup& g, int sigma, const SymTensor& u) {
  const int inv = g.inv(sigma);
  SymTensor out;
  for (const auto& [delta, c] : u.coeffs) accumulate(out.coeffs, g.act(delta, inv), c);
  drop_zeros(out.coeffs);
  return out;
}

std::vector<std::vector<int>> equiv_classes_sim_alpha(const FiniteGroup& g, const Subgroup& c,
                                                      const IndexSequence& alpha) {
  const Subgroup g_alpha = stabilizer(g, alpha);
  std::vector<int> label(static_cast<std::size_t>(g.order()), -1);
  std::vector<std::vector<int>> classes;
  for (int sigma = 0; sigma < g.order(); ++sigma) {
    if (label[static_cast<std::size_t>(sigma)] >= 0) continue;
    std::vector<int> cls;
    for (int a : g_alpha.members()) {
      for (int x : c.members()) {
        const int y = g.mul(g.mul(a, sigma), x);
        if (label[static_cast<std::size_t>(y)] < 0) {
          label[static_cast<std::size_t>(y)] = static_cast<int>(classes.size());
          cls.push_back(y);
        }
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

OrbitalData orbital_data(const FiniteGroup& g, const BrauerCharacter& phi, const IndexSequence& gamma) {
  const SupportInfo support = cyclic_support(g, phi);
  if (!support.vanishes_off_c) {
    throw Error(ErrorKind::SupportNotCyclic, phi.label() + " does not vanish off <rot^" +
                                                 std::to_string(phi.split.pt) + ">");
  }
  OrbitalData od;
  od.gamma = gamma;
  od.c = support.c;
  od.stabilizer = stabilizer(g, gamma);
  od.c_cap_stabilizer = intersect(od.c, od.stabilizer);
  od.tau = support.generator;
  od.t_gamma = static_cast<int>(od.c.size() / od.c_cap_stabilizer.size());
  for (int j = 1; j <= od.t_gamma; ++j) od.coset_reps.push_back(g.pow(od.tau, j));
  for (int j = 0; j < od.t_gamma; ++j) {
    const int shift = g.pow(od.tau, od.t_gamma - j);
    CycNum vj;
    for (int h : od.c_cap_stabilizer.members()) vj += evaluate(phi, g.mul(h, shift));
    od.v.push_back(vj);
  }
  od.d_gamma = static_cast<int>(circulant_nullity(od.v));
  od.dim = od.t_gamma - od.d_gamma;
  return od;
}

CycMatrix matrix_M_gamma(const FiniteGroup& g, const BrauerCharacter& phi, const OrbitalData& od) {
  const auto t = static_cast<std::size_t>(od.t_gamma);
  CycMatrix m(t, t);
  for (std::size_t i = 0; i < t; ++i) {
    for (std::size_t j = 0; j < t; ++j) {
      const int prod = g.mul(od.coset_reps[i], od.coset_reps[j]);
      CycNum entry;
      for (int h : od.c_cap_stabilizer.members()) entry += evaluate(phi, g.mul(h, prod));
      m(i, j) = entry;
    }
  }
  return m;
}

std::vector<SymTensor> coset_tensors(const FiniteGroup& g, const BrauerCharacter& phi, const OrbitalData& od) {
  std::vector<SymTensor> out;
  out.reserve(od.coset_reps.size());
  for (int sigma : od.coset_reps) out.push_back(symmetrized_tensor(g, phi, g.act(od.gamma, sigma)));
  return out;
}

CycMatrix gram_matrix(const std::vector<SymTensor>& tensors) {
  const std::size_t n = tensors.size();
  CycMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      m(i, j) = inner_product_direct(tensors[i], tensors[j]);
      if (j != i) m(j, i) = m(i, j).conj();
    }
  }
  return m;
}

CycMatrix gram_matrix(const FiniteGroup& g, const BrauerCharacter& phi, const OrbitalData& od) {
  return gram_matrix(coset_tensors(g, phi, od));
}

SubsetSearch find_orthogonal_subset(const CycMatrix& gram, std::size_t size, std::optional<int> required,
                                    std::size_t node_budget) {
  SubsetSearch result;
  if (size == 0) {
    result.outcome = SearchOutcome::Found;
    return result;
  }
  const std::size_t n = gram.rows();
  std::vector<char> nonzero(n);
  for (std::size_t i = 0; i < n; ++i) nonzero[i] = !gram(i, i).is_zero();
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const char orth = nonzero[i] && nonzero[j] && gram(i, j).is_zero();
      adj[i][j] = adj[j][i] = orth;
    }
  }

  CliqueSearch search(adj, size, node_budget);
  std::vector<int> candidates;
  if (required) {
    const auto r = static_cast<std::size_t>(*required);
    if (!nonzero[r]) return result;
    search.chosen().push_back(*required);
    for (std::size_t j = 0; j < n; ++j) {
      if (adj[r][j]) candidates.push_back(static_cast<int>(j));
    }
  } else {
    for (std::size_t j = 0; j < n; ++j) {
      if (nonzero[j]) candidates.push_back(static_cast<int>(j));
    }
  }
  const bool found = search.run(candidates);
  result.nodes = search.nodes();
  if (found) {
    result.outcome = SearchOutcome::Found;
    result.subset = search.chosen();
    std::sort(result.subset.begin(), result.subset.end());
  } else {
    result.outcome = search.exhausted() ? SearchOutcome::BudgetExhausted : SearchOutcome::NotFound;
  }
  return result;
}

ObasisResult obasis_search(const FiniteGroup& g, const BrauerCharacter& phi, const OrbitalData& od) {
  ObasisResult result;
  result.dim = od.dim;
  if (od.dim == 0) {
    result.exists = true;
    return result;
  }
  const CycMatrix gram = gram_matrix(g, phi, od);
  const SubsetSearch s = find_orthogonal_subset(gram, static_cast<std::size_t>(od.dim));
  if (s.outcome == SearchOutcome::BudgetExhausted) {
    throw Error(ErrorKind::ConstructionFailure, "o-basis search budget exhausted");
  }
  result.exists = s.outcome == SearchOutcome::Found;
  for (int v : s.subset) result.witness.push_back(v + 1);
  return result;
}

OrbitVerdict orbit_obasis(const FiniteGroup& g, const BrauerCharacter& phi, const IndexSequence& alpha,
                          std::size_t node_budget) {
  OrbitVerdict verdict;
  verdict.alpha = alpha;

  // Distinct standard tensors of the orbit; the identity comes first.
  std::vector<SymTensor> tensors;
  std::vector<int> owner;
  for (int sigma = 0; sigma < g.order(); ++sigma) {
    SymTensor t = symmetrized_tensor(g, phi, g.act(alpha, sigma));
    if (std::find(tensors.begin(), tensors.end(), t) == tensors.end()) {
      tensors.push_back(std::move(t));
      owner.push_back(sigma);
    }
  }
  if (tensors.front().is_zero()) {
    // Norms are constant along the orbit, so every tensor vanishes.
    verdict.has_obasis = true;
    verdict.outcome = SearchOutcome::Found;
    return verdict;
  }

  const CycMatrix gram = gram_matrix(tensors);
  verdict.dim = static_cast<int>(rank(gram));
  verdict.nonorthogonal_to_alpha = true;
  for (std::size_t j = 0; j < tensors.size(); ++j) {
    if (gram(0, j).is_zero()) verdict.nonorthogonal_to_alpha = false;
  }

  const SubsetSearch s = find_orthogonal_subset(gram, static_cast<std::size_t>(verdict.dim), 0, node_budget);
  verdict.outcome = s.outcome;
  verdict.has_obasis = s.outcome == SearchOutcome::Found;
  for (int v : s.subset) verdict.witness.push_back(owner[static_cast<std::size_t>(v)]);
  return verdict;
}

WholeSpaceVerdict whole_space_obasis(const FiniteGroup& g, const BrauerCharacter& phi,
                                     const std::vector<IndexSequence>& sample) {
  WholeSpaceVerdict out;
  for (const auto& alpha : sample) {
    OrbitVerdict v = orbit_obasis(g, phi, alpha);
    if (v.outcome == SearchOutcome::BudgetExhausted) {
      throw Error(ErrorKind::ConstructionFailure, "o-basis search budget exhausted for " + to_string(alpha));
    }
    out.has_obasis = out.has_obasis && v.has_obasis;
    out.orbits.push_back(std::move(v));
  }
  return out;
}

}  // namespace symcls
