#include <algorithm>
#include <vector>

#include <gtest/gtest.h>

#include "support/printing.hpp"

#include "symcls/error.hpp"
#include "symcls/theorems.hpp"

using namespace symcls;

namespace {

const BrauerCharacter& find_char(const std::vector<BrauerCharacter>& ibr, CharacterKind kind, int index) {
  for (const auto& phi : ibr) {
    if (phi.spec.kind == kind && phi.spec.index == index) return phi;
  }
  throw std::runtime_error("character not found");
}

CaseParams two_dim_case(GroupFamily f, int p, int index, int dim_v) {
  CharacterSpec spec;
  spec.family = f;
  spec.kind = CharacterKind::TwoDim;
  spec.index = index;
  return make_case(f, p, dim_v, spec);
}

CaseParams linear_case(GroupFamily f, int p, int dim_v) {
  CharacterSpec spec;
  spec.family = f;
  spec.kind = CharacterKind::Linear;
  return make_case(f, p, dim_v, spec);
}

OrbitalData full_orbit(const FiniteGroup& g, const BrauerCharacter& phi) {
  const Subgroup c = rotation_subgroup(g, phi.split.pt);
  const IndexSequence gamma =
      construct_sequence_with_stabilizer(g, 2, c, rotation_subgroup(g, phi.split.l * phi.split.pt));
  return orbital_data(g, phi, gamma);
}

}  // namespace

TEST(Nu2, Examples) {
  EXPECT_EQ(nu2(Rational(2, 4)), -1);
  EXPECT_EQ(nu2(Rational(1)), 0);
  EXPECT_EQ(nu2(Rational(8, 3)), 3);
  EXPECT_EQ(nu2(Rational(-12)), 2);
  EXPECT_EQ(nu2(Rational(3, 16)), -4);
  try {
    (void)nu2(Rational(0));
    FAIL() << "expected ZeroInput";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ZeroInput);
  }
}

TEST(MakeCase, Validation) {
  EXPECT_THROW(linear_case(GroupFamily::dicyclic(3), 4, 2), Error);
  EXPECT_THROW(linear_case(GroupFamily::dicyclic(3), 3, 0), Error);
  EXPECT_THROW(linear_case(GroupFamily::dihedral(2), 3, 1), Error);
  const CaseParams c = linear_case(GroupFamily::dicyclic(6), 3, 2);
  EXPECT_EQ(c.l(), 4);
  EXPECT_EQ(c.t(), 1);
}

TEST(PredicateLinear, Examples) {
  EXPECT_FALSE(predicate_linear(linear_case(GroupFamily::dicyclic(3), 3, 2)));
  EXPECT_TRUE(predicate_linear(linear_case(GroupFamily::dicyclic(3), 2, 2)));
  EXPECT_TRUE(predicate_linear(linear_case(GroupFamily::dicyclic(3), 3, 1)));
  EXPECT_TRUE(predicate_linear(linear_case(GroupFamily::dicyclic(5), 3, 3)));
  EXPECT_FALSE(predicate_linear(linear_case(GroupFamily::semidihedral(3), 3, 3)));
  try {
    (void)predicate_linear(two_dim_case(GroupFamily::dicyclic(2), 3, 1, 2));
    FAIL() << "expected CharacterNotLinear";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::CharacterNotLinear);
  }
}

TEST(PredicateLinear, Regimes) {
  EXPECT_EQ(linear_regime(linear_case(GroupFamily::semidihedral(2), 3, 1)), "outside-hypothesis");
  EXPECT_EQ(linear_regime(linear_case(GroupFamily::semidihedral(2), 3, 2)), "remark");
  EXPECT_EQ(linear_regime(linear_case(GroupFamily::semidihedral(2), 3, 3)), "theorem");
  EXPECT_EQ(linear_regime(linear_case(GroupFamily::dicyclic(2), 3, 1)), "theorem");
}

TEST(PredicateTwoDim, Examples) {
  EXPECT_TRUE(predicate_two_dim(two_dim_case(GroupFamily::dicyclic(2), 3, 1, 2)));
  EXPECT_FALSE(predicate_two_dim(two_dim_case(GroupFamily::dihedral(6), 5, 1, 2)));
  EXPECT_FALSE(predicate_two_dim(two_dim_case(GroupFamily::dihedral(5), 2, 1, 2)));
  EXPECT_TRUE(predicate_two_dim(two_dim_case(GroupFamily::dihedral(8), 3, 1, 2)));
  EXPECT_FALSE(predicate_two_dim(two_dim_case(GroupFamily::semidihedral(2), 3, 1, 2)));
  EXPECT_TRUE(predicate_two_dim(two_dim_case(GroupFamily::semidihedral(2), 3, 1, 1)));
  EXPECT_TRUE(predicate_two_dim(two_dim_case(GroupFamily::semidihedral(2), 3, 2, 2)));
  try {
    (void)predicate_two_dim(two_dim_case(GroupFamily::dicyclic(2), 3, 2, 2));
    FAIL() << "expected IndexOutOfRange";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::IndexOutOfRange);
  }
  EXPECT_THROW((void)predicate_two_dim(two_dim_case(GroupFamily::semidihedral(2), 3, 3, 2)), Error);
}

TEST(PredictedDim, Examples) {
  const CaseParams t8 = two_dim_case(GroupFamily::dicyclic(2), 3, 1, 2);
  EXPECT_EQ(predicted_dim(t8, 4), 2);
  EXPECT_EQ(predicted_dim(t8, 2), 0);
  EXPECT_EQ(predicted_dim(t8, 1), 0);
  EXPECT_TRUE(predicted_nonvanishing(t8, 4));
  EXPECT_FALSE(predicted_nonvanishing(t8, 1));
  EXPECT_THROW((void)predicted_dim(t8, 3), Error);
  EXPECT_EQ(predicted_dim(two_dim_case(GroupFamily::semidihedral(2), 3, 1, 2), 8), 4);
  EXPECT_EQ(predicted_dim(two_dim_case(GroupFamily::semidihedral(2), 3, 2, 2), 4), 2);
}

TEST(PrintedWitnessPair, Values) {
  EXPECT_EQ(printed_witness_pair(two_dim_case(GroupFamily::dicyclic(2), 3, 1, 2)), (std::pair<int, int>{1, 2}));
  EXPECT_EQ(printed_witness_pair(two_dim_case(GroupFamily::dicyclic(4), 3, 1, 2)), (std::pair<int, int>{1, 3}));
  EXPECT_EQ(printed_witness_pair(two_dim_case(GroupFamily::dicyclic(8), 3, 1, 2)), (std::pair<int, int>{1, 5}));
  EXPECT_THROW((void)printed_witness_pair(two_dim_case(GroupFamily::dihedral(5), 2, 1, 2)), Error);
}

TEST(PrintedWitnessPair, NeedsPowerOfTwoDenominator) {
  // T_24, p = 5: l = 12, b = 1, nu2(2/12) = -1. The pair {1, 2} is not
  // orthogonal; the first orthogonal pair is {1, 4}, difference 2^0 * 3.
  const FiniteGroup g = build_group(GroupFamily::dicyclic(6));
  const auto ibr = irreducible_brauer_characters(g, 5);
  const BrauerCharacter& psi = find_char(ibr, CharacterKind::TwoDim, 1);
  const OrbitalData od = full_orbit(g, psi);
  ASSERT_EQ(od.t_gamma, 12);
  const CycMatrix gram = gram_matrix(g, psi, od);
  const auto [i, j] = printed_witness_pair(two_dim_case(GroupFamily::dicyclic(6), 5, 1, 2));
  EXPECT_FALSE(gram(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)).is_zero());
  const ObasisResult ob = obasis_search(g, psi, od);
  EXPECT_TRUE(ob.exists);
  EXPECT_EQ(ob.witness, (std::vector<int>{1, 4}));
}

TEST(PrintedWitnessPair, OrthogonalWhenOddPartIsOne) {
  for (int n = 2; n <= 8; ++n) {
    const FiniteGroup g = build_group(GroupFamily::dicyclic(n));
    for (int p : {3, 5, 7}) {
      for (const auto& phi : irreducible_brauer_characters(g, p)) {
        if (phi.is_linear()) continue;
        const CaseParams c = make_case(g.family(), p, 2, phi.spec);
        const Rational q(2 * c.character.index, c.l());
        if (nu2(q) >= 0) continue;
        const Rational odd_part = q * Rational(mpz_class(1) << static_cast<unsigned>(-nu2(q)));
        if (odd_part.get_den() != 1) continue;
        const OrbitalData od = full_orbit(g, phi);
        const CycMatrix gram = gram_matrix(g, phi, od);
        const auto [i, j] = printed_witness_pair(c);
        EXPECT_TRUE(gram(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)).is_zero())
            << g.family().name() << " p=" << p << " " << phi.label();
      }
    }
  }
}

TEST(OddIndexCriterion, MatchesExactGram) {
  int checked = 0;
  for (int n = 2; n <= 6; ++n) {
    const FiniteGroup g = build_group(GroupFamily::semidihedral(n));
    for (int p : {3, 5, 7}) {
      for (const auto& phi : irreducible_brauer_characters(g, p)) {
        if (phi.is_linear() || phi.spec.index % 2 == 0) continue;
        const OrbitalData od = full_orbit(g, phi);
        const CycMatrix gram = gram_matrix(g, phi, od);
        for (int i = 1; i <= od.t_gamma; ++i) {
          for (int j = 1; j <= od.t_gamma; ++j) {
            const bool zero = gram(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)).is_zero();
            EXPECT_EQ(zero, odd_h_orthogonality_criterion(i, j, phi.spec.index, phi.split.l))
                << g.family().name() << " p=" << p << " " << phi.label() << " i=" << i << " j=" << j;
            ++checked;
          }
        }
      }
    }
  }
  EXPECT_GT(checked, 100);
}

TEST(OddIndexCriterion, NoFourPairwiseOrthogonalTensors) {
  for (int n = 2; n <= 6; ++n) {
    const FiniteGroup g = build_group(GroupFamily::semidihedral(n));
    for (int p : {3, 5}) {
      for (const auto& phi : irreducible_brauer_characters(g, p)) {
        if (phi.is_linear() || phi.spec.index % 2 == 0) continue;
        const OrbitalData od = full_orbit(g, phi);
        EXPECT_EQ(find_orthogonal_subset(gram_matrix(g, phi, od), 4).outcome, SearchOutcome::NotFound);
      }
    }
  }
}

TEST(OddIndexDiscrepancy, ObservedDimensionIsTwo) {
  // The closed form predicts 4 when h t_gamma / l is an integer; a
  // two-dimensional character restricted to C is a sum of two linear
  // characters, so every route gives 2.
  const FiniteGroup g = build_group(GroupFamily::semidihedral(2));
  const auto ibr = irreducible_brauer_characters(g, 3);
  const BrauerCharacter& psi = find_char(ibr, CharacterKind::TwoDim, 1);
  const VerificationReport r = verify_case(g, psi, 2);
  const TGammaRow& full = r.rows.back();
  EXPECT_EQ(full.t_gamma, 8);
  EXPECT_EQ(full.predicted_dim, 4);
  EXPECT_EQ(full.formula_dim, 2);
  EXPECT_EQ(full.rank_m, 2);
  EXPECT_EQ(full.rank_gram, 2);
  EXPECT_FALSE(full.agree);
  EXPECT_FALSE(r.agree);
}

TEST(OddIndexDiscrepancy, EvenNHasAnOrthogonalPair) {
  // SD_16, p = 3, h = 1: tensors 1 and 3 are orthogonal, so the orbital
  // space of dimension 2 has an o-basis.
  const FiniteGroup g = build_group(GroupFamily::semidihedral(2));
  const auto ibr = irreducible_brauer_characters(g, 3);
  const BrauerCharacter& psi = find_char(ibr, CharacterKind::TwoDim, 1);
  const OrbitalData od = full_orbit(g, psi);
  EXPECT_TRUE(odd_h_orthogonality_criterion(1, 3, 1, 8));
  const ObasisResult ob = obasis_search(g, psi, od);
  EXPECT_TRUE(ob.exists);
  EXPECT_EQ(ob.witness, (std::vector<int>{1, 3}));
}

TEST(OddIndexDiscrepancy, OddNHasNoOrthogonalPair) {
  for (int n : {3, 5}) {
    const FiniteGroup g = build_group(GroupFamily::semidihedral(n));
    for (int p : {3, 5}) {
      for (const auto& phi : irreducible_brauer_characters(g, p)) {
        if (phi.is_linear() || phi.spec.index % 2 == 0) continue;
        const OrbitalData od = full_orbit(g, phi);
        EXPECT_FALSE(obasis_search(g, phi, od).exists) << g.family().name() << " " << phi.label();
      }
    }
  }
}

TEST(VerifyCase, DicyclicTwoDimAgrees) {
  const FiniteGroup g = build_group(GroupFamily::dicyclic(2));
  const auto ibr = irreducible_brauer_characters(g, 3);
  const VerificationReport r = verify_case(g, ibr.back(), 2);
  EXPECT_TRUE(r.agree);
  EXPECT_TRUE(r.predicted_obasis);
  ASSERT_EQ(r.rows.size(), 3u);
  EXPECT_EQ(r.rows[0].predicted_dim, 0);
  EXPECT_EQ(r.rows[2].predicted_dim, 2);
  EXPECT_EQ(r.rows[2].witness, (std::vector<int>{1, 2}));
}

TEST(VerifyCase, DihedralOddLHasNoObasis) {
  const FiniteGroup g = build_group(GroupFamily::dihedral(5));
  const auto ibr = irreducible_brauer_characters(g, 2);
  const VerificationReport r = verify_case(g, ibr.back(), 2);
  EXPECT_TRUE(r.agree);
  EXPECT_FALSE(r.observed_obasis);
}

TEST(VerifyCase, LinearNoObasisWitness) {
  const FiniteGroup g = build_group(GroupFamily::dicyclic(3));
  const auto ibr = irreducible_brauer_characters(g, 3);
  for (const auto& phi : ibr) {
    if (!phi.is_linear()) continue;
    const VerificationReport r = verify_case(g, phi, 2);
    EXPECT_TRUE(r.agree) << phi.label();
    EXPECT_FALSE(r.observed_obasis);
    ASSERT_FALSE(r.sample.empty());
    EXPECT_TRUE(r.sample.front().nonorthogonal_to_alpha);
    EXPECT_GE(r.sample.front().dim, 2);
  }
}

TEST(VerifyCase, LinearCoprimeAndCharacteristicTwo) {
  for (int p : {2, 5}) {
    const FiniteGroup g = build_group(GroupFamily::dicyclic(3));
    for (const auto& phi : irreducible_brauer_characters(g, p)) {
      if (!phi.is_linear()) continue;
      const VerificationReport r = verify_case(g, phi, 3);
      EXPECT_TRUE(r.agree) << phi.label() << " p=" << p;
      EXPECT_TRUE(r.observed_obasis);
    }
  }
}

TEST(VerifyCase, SemidihedralWitnessStabilizer) {
  // (1,2,...,2) is fixed by a^(2n+2) b, and for p odd dividing 4n every
  // standard tensor of the orbit meets e_alpha.
  const std::vector<std::pair<int, int>> cases{{2, 3}, {3, 3}, {5, 5}, {6, 3}};
  for (const auto& [n, p] : cases) {
    const FiniteGroup g = build_group(GroupFamily::semidihedral(n));
    IndexSequence alpha(static_cast<std::size_t>(g.degree()), 2);
    alpha[0] = 1;
    std::vector<int> expected{g.identity(), g.mul(g.rotation(2 * n + 2), g.reflection(0))};
    std::sort(expected.begin(), expected.end());
    EXPECT_EQ(stabilizer(g, alpha), ElementSet(static_cast<std::size_t>(g.order()), expected));
    if ((4 * n) % p != 0) continue;
    for (const auto& phi : irreducible_brauer_characters(g, p)) {
      if (!phi.is_linear()) continue;
      const OrbitVerdict v = orbit_obasis(g, phi, alpha);
      EXPECT_GE(v.dim, 2) << g.family().name() << " " << phi.label();
      EXPECT_TRUE(v.nonorthogonal_to_alpha) << g.family().name() << " " << phi.label();
      EXPECT_FALSE(v.has_obasis) << g.family().name() << " " << phi.label();
    }
  }
}

TEST(VerifyCase, OverrideHookReplacesPredicate) {
  const FiniteGroup g = build_group(GroupFamily::dicyclic(2));
  const auto ibr = irreducible_brauer_characters(g, 3);
  VerifyOptions options;
  options.obasis_predicate = [](const CaseParams&) { return false; };
  const VerificationReport r = verify_case(g, ibr.back(), 2, options);
  EXPECT_FALSE(r.predicted_obasis);
  EXPECT_FALSE(r.agree);
}

TEST(VerifyCase, LookupBySpec) {
  const CaseParams c = two_dim_case(GroupFamily::dicyclic(2), 3, 1, 2);
  EXPECT_TRUE(verify_case(c).agree);
  CaseParams bad = c;
  bad.character.index = 7;
  EXPECT_THROW(verify_case(bad), Error);
}

TEST(VerifyCase, WitnessSequences) {
  const FiniteGroup g = build_group(GroupFamily::dihedral(4));
  EXPECT_EQ(linear_witness_sequences(g, 1), (std::vector<IndexSequence>{{1, 1, 1, 1}}));
  EXPECT_EQ(linear_witness_sequences(g, 2), (std::vector<IndexSequence>{{1, 2, 2, 2}}));
  EXPECT_EQ(linear_witness_sequences(g, 3), (std::vector<IndexSequence>{{1, 2, 2, 2}, {1, 2, 2, 3}}));
}
