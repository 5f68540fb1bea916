#include "symcls/theorems.hpp"

#include <algorithm>
#include <cstdlib>

#include "symcls/error.hpp"

namespace symcls {

namespace {

bool is_sd_odd(const CaseParams& c) {
  return c.family.kind == FamilyKind::Semidihedral && c.character.index % 2 == 1;
}

void require_two_dim(const CaseParams& c) {
  if (c.character.kind != CharacterKind::TwoDim) {
    throw Error(ErrorKind::IndexOutOfRange, c.character.label() + " is not two-dimensional");
  }
  const int idx = c.character.index;
  bool valid = false;
  if (c.family.kind == FamilyKind::Semidihedral) {
    const auto pi = semidihedral_two_dim_indices(c.family.param, c.p);
    valid = std::find(pi.begin(), pi.end(), idx) != pi.end();
  } else {
    valid = idx >= 1 && 2 * idx < c.l();
  }
  if (!valid) {
    throw Error(ErrorKind::IndexOutOfRange, "index " + std::to_string(idx) + " is not a two-dimensional Brauer index of " +
                                                c.family.name() + " for p = " + std::to_string(c.p));
  }
}

// 2 cos(pi x) = 0 iff x is in 1/2 + Z; sin(pi x) = 0 iff x is an integer.
bool cos_pi_vanishes(const Rational& x) {
  const Rational twice = 2 * x;
  return twice.get_den() == 1 && mpz_class(twice.get_num() % 2) != 0;
}

bool sin_pi_vanishes(const Rational& x) { return x.get_den() == 1; }

IndexSequence constant_sequence(const FiniteGroup& g) { return IndexSequence(static_cast<std::size_t>(g.degree()), 1); }

}  // namespace

int nu2(const Rational& q) {
  if (q == 0) throw Error(ErrorKind::ZeroInput, "nu2 of zero");
  mpz_class num = abs(q.get_num());
  mpz_class den = q.get_den();
  return static_cast<int>(mpz_scan1(num.get_mpz_t(), 0)) - static_cast<int>(mpz_scan1(den.get_mpz_t(), 0));
}

CaseParams make_case(const GroupFamily& family, int p, int dim_v, const CharacterSpec& character) {
  if (!is_prime(p)) throw Error(ErrorKind::ParameterOutOfRange, std::to_string(p) + " is not prime");
  if (dim_v < 1) throw Error(ErrorKind::ParameterOutOfRange, "dim V must be at least 1");
  if (family.param < family.min_param()) {
    throw Error(ErrorKind::ParameterOutOfRange, family.name() + " is below the family minimum");
  }
  CaseParams c;
  c.family = family;
  c.p = p;
  c.split = split_prime(family.rotation_order(), p);
  c.dim_v = dim_v;
  c.character = character;
  return c;
}

bool predicate_linear(const CaseParams& c) {
  if (c.character.kind != CharacterKind::Linear) {
    throw Error(ErrorKind::CharacterNotLinear, c.character.label() + " is not linear");
  }
  const bool p_divides = c.family.rotation_order() % c.p == 0;
  return c.dim_v == 1 || c.p == 2 || !p_divides;
}

std::string linear_regime(const CaseParams& c) {
  if (c.family.kind != FamilyKind::Semidihedral) return "theorem";
  if (c.dim_v == 1) return "outside-hypothesis";
  if (c.dim_v == 2) return "remark";
  return "theorem";
}

bool predicate_two_dim(const CaseParams& c) {
  require_two_dim(c);
  if (c.dim_v == 1) return true;
  if (is_sd_odd(c)) return false;
  return nu2(Rational(2 * c.character.index, c.l())) < 0;
}

int predicted_dim(const CaseParams& c, int t_gamma) {
  require_two_dim(c);
  if (t_gamma < 1 || c.l() % t_gamma != 0) {
    throw Error(ErrorKind::ParameterOutOfRange, "t_gamma = " + std::to_string(t_gamma) + " does not divide l = " +
                                                    std::to_string(c.l()));
  }
  if (!predicted_nonvanishing(c, t_gamma)) return 0;
  return is_sd_odd(c) ? 4 : 2;
}

bool predicted_nonvanishing(const CaseParams& c, int t_gamma) {
  return (static_cast<long long>(c.character.index) * t_gamma) % c.l() == 0;
}

bool odd_h_orthogonality_criterion(int i, int j, int h, int l) {
  Rational x(static_cast<long>(i - j) * 2 * h, l);
  x.canonicalize();
  const bool same_parity = (std::abs(i) % 2) == (std::abs(j) % 2);
  return same_parity ? cos_pi_vanishes(x) : sin_pi_vanishes(x);
}

std::pair<int, int> printed_witness_pair(const CaseParams& c) {
  const int k = -nu2(Rational(2 * c.character.index, c.l()));
  if (k <= 0) throw Error(ErrorKind::ParameterOutOfRange, "nu2(2 index / l) is not negative");
  return {1, (1 << (k - 1)) + 1};
}

std::vector<IndexSequence> linear_witness_sequences(const FiniteGroup& g, int dim_v) {
  if (dim_v == 1) return {constant_sequence(g)};
  std::vector<IndexSequence> out;
  IndexSequence alpha(static_cast<std::size_t>(g.degree()), 2);
  alpha.front() = 1;
  out.push_back(alpha);
  if (dim_v >= 3) {
    alpha.back() = 3;
    out.push_back(alpha);
  }
  return out;
}

namespace {

void verify_linear(const FiniteGroup& g, const BrauerCharacter& phi, const VerifyOptions& options,
                   VerificationReport& report) {
  const CaseParams& c = report.params;
  report.predicted_obasis = options.obasis_predicate ? options.obasis_predicate(c) : predicate_linear(c);

  std::vector<IndexSequence> sample = linear_witness_sequences(g, c.dim_v);
  for (auto& rep : orbit_representatives(g, c.dim_v, options.orbit_cap)) {
    if (std::find(sample.begin(), sample.end(), rep) == sample.end()) sample.push_back(std::move(rep));
  }
  WholeSpaceVerdict verdict = whole_space_obasis(g, phi, sample);
  report.observed_obasis = verdict.has_obasis;
  report.observed_dim = verdict.orbits.front().dim;
  report.sample = std::move(verdict.orbits);
  report.agree = report.predicted_obasis == report.observed_obasis;

  const std::string regime = linear_regime(c);
  if (regime == "outside-hypothesis") {
    report.notes.push_back("dim V = 1 is outside the theorem's stated hypothesis dim V > 2; the space is at most one-dimensional");
  } else if (regime == "remark") {
    report.notes.push_back("dim V = 2 is below the theorem's hypothesis dim V > 2; checked on the witness (1,2,...,2)");
  }
  report.notes.push_back("whole-space verdict over a sample of " + std::to_string(report.sample.size()) + " orbits");
}

void verify_two_dim(const FiniteGroup& g, const BrauerCharacter& phi, const VerifyOptions& options,
                    VerificationReport& report) {
  const CaseParams& c = report.params;
  const bool case_prediction = options.obasis_predicate ? options.obasis_predicate(c) : predicate_two_dim(c);
  report.predicted_obasis = case_prediction;
  report.observed_obasis = true;
  report.agree = true;

  const Subgroup cyc = rotation_subgroup(g, c.split.pt);
  const int l = c.l();
  const int k = std::max(c.dim_v, 1);
  for (int t = 1; t <= l; ++t) {
    if (l % t != 0) continue;
    if (c.dim_v == 1 && t != 1) continue;
    TGammaRow row;
    row.t_gamma = t;
    try {
      row.gamma = construct_sequence_with_stabilizer(g, k, cyc, rotation_subgroup(g, t * c.split.pt));
    } catch (const Error& e) {
      throw Error(e.kind(), "t_gamma = " + std::to_string(t) + ": " + e.what());
    }
    const OrbitalData od = orbital_data(g, phi, row.gamma);
    if (od.t_gamma != t) {
      throw Error(ErrorKind::ConstructionFailure, "t_gamma = " + std::to_string(t) + ": constructed sequence realizes " +
                                                      std::to_string(od.t_gamma));
    }
    row.formula_dim = od.dim;
    row.d_gamma = od.d_gamma;
    row.rank_m = static_cast<int>(rank(matrix_M_gamma(g, phi, od)));
    const CycMatrix gram = gram_matrix(g, phi, od);
    row.rank_gram = static_cast<int>(rank(gram));
    row.observed_nonvanishing = !gram(0, 0).is_zero();
    for (std::size_t j = 0; j < gram.rows(); ++j) {
      if (gram(j, j).is_zero() == row.observed_nonvanishing) row.uniform_vanishing = false;
    }
    const ObasisResult ob = obasis_search(g, phi, od);
    row.observed_obasis = ob.exists;
    row.witness = ob.witness;

    row.predicted_dim = predicted_dim(c, t);
    row.predicted_nonvanishing = predicted_nonvanishing(c, t);
    row.predicted_obasis = row.predicted_dim == 0 ? true : case_prediction;
    row.agree = row.dims_consistent() && row.uniform_vanishing && row.predicted_dim == row.formula_dim &&
                row.predicted_nonvanishing == row.observed_nonvanishing && row.predicted_obasis == row.observed_obasis;

    report.observed_obasis = report.observed_obasis && row.observed_obasis;
    report.agree = report.agree && row.agree;
    report.rows.push_back(std::move(row));
  }
  report.agree = report.agree && report.predicted_obasis == report.observed_obasis;
}

}  // namespace

VerificationReport verify_case(const FiniteGroup& g, const BrauerCharacter& phi, int dim_v,
                               const VerifyOptions& options) {
  VerificationReport report;
  report.params = make_case(g.family(), phi.p, dim_v, phi.spec);
  report.label = phi.label();
  report.linear = phi.is_linear();
  if (report.linear) {
    verify_linear(g, phi, options, report);
  } else {
    verify_two_dim(g, phi, options, report);
  }
  return report;
}

VerificationReport verify_case(const CaseParams& c, const VerifyOptions& options) {
  const FiniteGroup g = build_group(c.family);
  for (const auto& phi : irreducible_brauer_characters(g, c.p)) {
    if (phi.spec.kind == c.character.kind && phi.spec.index == c.character.index) {
      return verify_case(g, phi, c.dim_v, options);
    }
  }
  throw Error(ErrorKind::IndexOutOfRange,
              c.character.label() + " is not a Brauer character of " + c.family.name() + " for p = " + std::to_string(c.p));
}

}  // namespace symcls
