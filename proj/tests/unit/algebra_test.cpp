#include <random>

#include <gtest/gtest.h>

#include "liecontract/errors.hpp"
#include "liecontract/families.hpp"
#include "liecontract/invariants.hpp"
#include "liecontract/lie_algebra.hpp"
#include "oracles.hpp"

namespace liecontract {
namespace {

// [X1,X2]=X3, [X1,X3]=X4, [X2,X3]=X4, [X1,X4]=X5. The cyclic sum at
// (X1,X2,X3) is [X1,X4] - [X2,X4] = X5.
LieAlgebra jacobi_counterexample() {
  return LieAlgebra(5, {{0, 1, 2, 1}, {0, 2, 3, 1}, {1, 2, 3, 1}, {0, 3, 4, 1}});
}

LieAlgebra heisenberg3() { return LieAlgebra(3, {{0, 1, 2, 1}}); }

// so(3): [e1,e2]=e3, [e2,e3]=e1, [e3,e1]=e2.
LieAlgebra so3() { return LieAlgebra(3, {{0, 1, 2, 1}, {1, 2, 0, 1}, {2, 0, 1, 1}}); }

TEST(LieAlgebra, NormalizesAntisymmetry) {
  const LieAlgebra L(3, {{1, 0, 2, 1}, {0, 1, 2, 2}});
  EXPECT_EQ(L.coefficient(0, 1, 2), Rational(1));
  EXPECT_EQ(L.coefficient(1, 0, 2), Rational(-1));
  EXPECT_EQ(L.nonzero_pairs(), 1u);
  EXPECT_THROW(LieAlgebra(2, {{0, 0, 1, 1}}), std::invalid_argument);
  EXPECT_THROW(LieAlgebra(2, {{0, 1, 5, 1}}), std::invalid_argument);
  EXPECT_TRUE(LieAlgebra(2, {{0, 1, 1, 1}, {1, 0, 1, 1}}).is_abelian());
}

TEST(LieAlgebra, BracketAndAd) {
  const LieAlgebra L = so3();
  const Vector x{1, 2, 0}, y{0, 1, 3};
  EXPECT_EQ(bracket(L, x, y), (Vector{6, -3, 1}));
  const Matrix a = ad(L, x);
  EXPECT_EQ(a.apply(y), bracket(L, x, y));
}

TEST(Jacobi, CounterexampleReportsExactViolation) {
  const JacobiReport report = check_jacobi(jacobi_counterexample());
  ASSERT_EQ(report.violations.size(), 1u);
  const auto& v = report.violations.front();
  EXPECT_EQ(v.i, 0u);
  EXPECT_EQ(v.j, 1u);
  EXPECT_EQ(v.k, 2u);
  EXPECT_EQ(v.s, 4u);
  EXPECT_EQ(v.residual, Rational(1));
  EXPECT_FALSE(oracle::jacobi_holds(jacobi_counterexample()));
}

TEST(Jacobi, AgreesWithDenseOracle) {
  for (const auto& L : {so3(), heisenberg3(), make_g_m(4), make_g_m_q(4, {3, 5}),
                        make_model_filiform(7)}) {
    EXPECT_TRUE(check_jacobi(L).ok());
    EXPECT_TRUE(oracle::jacobi_holds(L));
  }
}

TEST(MaurerCartan, DualizesWithSignConvention) {
  MaurerCartanForm form;
  form.dim = 3;
  form.two_forms = {{}, {}, {{0, 1, Rational(2)}}};  // d w3 = 2 w1 ^ w2
  const LieAlgebra L = from_maurer_cartan(form);
  EXPECT_EQ(L.coefficient(0, 1, 2), Rational(2));
  EXPECT_EQ(L.coefficient(1, 0, 2), Rational(-2));

  MaurerCartanForm bad;
  bad.dim = 5;
  bad.two_forms = {{}, {}, {{0, 1, 1}}, {{0, 2, 1}, {1, 2, 1}}, {{0, 3, 1}}};
  EXPECT_THROW(from_maurer_cartan(bad), JacobiError);
}

TEST(Invariants, CenterMatchesBruteForce) {
  for (const auto& L : {so3(), heisenberg3(), make_g_m(4), make_g_m_q(5, {4}),
                        make_heisenberg_plus_abelian(4), make_abelian(3)}) {
    EXPECT_EQ(center(L).dim(), oracle::center_dim(L));
  }
}

TEST(Invariants, SeriesOfStandardExamples) {
  EXPECT_EQ(lower_central_series(heisenberg3()).dims, (std::vector<std::size_t>{3, 1, 0}));
  EXPECT_EQ(nilindex(heisenberg3()), 2u);
  EXPECT_FALSE(is_nilpotent(so3()));
  EXPECT_FALSE(is_solvable(so3()));
  EXPECT_THROW(nilindex(so3()), NotNilpotentError);
  EXPECT_EQ(derived_algebra(so3()).dim(), 3u);

  // L_n: lower central series drops by one after [L, L].
  const auto lcs = lower_central_series(make_model_filiform(6));
  EXPECT_EQ(lcs.dims, (std::vector<std::size_t>{6, 4, 3, 2, 1, 0}));
  EXPECT_EQ(lcs.nilindex, 5u);
}

TEST(Invariants, LcsTermIndexing) {
  const LieAlgebra g = make_g_m(4);
  EXPECT_EQ(lcs_term(g, 0, SeriesIndexing::kZeroBased).dim(), 9u);
  EXPECT_EQ(lcs_term(g, 1, SeriesIndexing::kOneBased).dim(), 9u);
  EXPECT_EQ(lcs_term(g, 2, SeriesIndexing::kOneBased).dim(), 7u);
  EXPECT_EQ(lcs_term(g, 40, SeriesIndexing::kZeroBased).dim(), 0u);
}

TEST(Invariants, CentralizerAndGeneratedSubalgebra) {
  const LieAlgebra h = heisenberg3();
  EXPECT_EQ(centralizer(h, Subspace::span(3, {unit_vector(3, 0)})),
            Subspace::span(3, {unit_vector(3, 0), unit_vector(3, 2)}));
  EXPECT_TRUE(generated_subalgebra(h, {unit_vector(3, 0), unit_vector(3, 1)}).is_full());
  EXPECT_EQ(generated_subalgebra(make_g_m(4), {unit_vector(9, 0), unit_vector(9, 1)}).dim(), 9u);
}

TEST(Derivations, HeisenbergHasSixDimensionalDer) {
  EXPECT_EQ(derivations(heisenberg3()).dim(), 6u);
  EXPECT_EQ(oracle::derivation_dim(heisenberg3()), 6u);
  EXPECT_EQ(derivations(make_abelian(3)).dim(), 9u);
  EXPECT_EQ(derivations(so3()).dim(), 3u);
}

TEST(Derivations, DenseSystemMatchesAccumulator) {
  for (const auto& L : {heisenberg3(), make_g_m(4), make_g_m_q(4, {4})}) {
    EXPECT_EQ(nullspace(derivation_system(L)), derivations(L));
  }
}

TEST(Derivations, PropertyInnerInsideDer) {
  for (const auto& L : {heisenberg3(), so3(), make_g_m(4), make_g_m_q(4, {3}),
                        make_g_m_q(5, {4, 6}), make_model_filiform(8),
                        make_heisenberg_plus_abelian(5)}) {
    const Subspace der = derivations(L);
    const Subspace inner = inner_derivations(L);
    EXPECT_TRUE(is_subset(inner, der));
    EXPECT_EQ(inner.dim(), L.dim() - center(L).dim());
    for (const auto& v : der.basis()) EXPECT_TRUE(is_derivation(L, unflatten(v, L.dim())));
  }
  EXPECT_FALSE(is_derivation(heisenberg3(), unflatten(unit_vector(9, 0), 3)));
}

TEST(Derivations, FlattenRoundTrip) {
  Matrix d(3, 3);
  d(0, 2) = Rational(5);
  d(2, 1) = Rational(-1, 3);
  const Vector v = flatten(d);
  EXPECT_EQ(v[0 * 3 + 2], Rational(5));
  EXPECT_EQ(unflatten(v, 3), d);
}

TEST(CharacteristicSequence, JordanBlocksFromRankProfile) {
  // Blocks 3 and 1.
  Matrix n(4, 4);
  n(0, 1) = 1;
  n(1, 2) = 1;
  EXPECT_EQ(jordan_block_sizes(n), (std::vector<std::size_t>{3, 1}));
  EXPECT_THROW(jordan_block_sizes(Matrix::identity(2)), NotNilpotentError);
}

TEST(CharacteristicSequence, StandardExamples) {
  EXPECT_EQ(characteristic_sequence(make_model_filiform(7)).blocks,
            (std::vector<std::size_t>{6, 1}));
  EXPECT_TRUE(characteristic_sequence(make_model_filiform(7)).is_linear());
  EXPECT_EQ(characteristic_sequence(heisenberg3()).blocks, (std::vector<std::size_t>{2, 1}));
  EXPECT_EQ(characteristic_sequence(make_g_m(4)).str(), "7,1,1");
  EXPECT_FALSE(characteristic_sequence(make_g_m_q(4, {4})).is_linear());
  EXPECT_THROW(characteristic_sequence(so3()), NotNilpotentError);
}

TEST(Invariants, SplittingAndBetti) {
  EXPECT_TRUE(has_abelian_direct_factor(make_heisenberg_plus_abelian(4)));
  EXPECT_FALSE(has_abelian_direct_factor(heisenberg3()));
  EXPECT_EQ(betti1(make_heisenberg_plus_abelian(4)), 8u);
  EXPECT_EQ(betti1(make_abelian(4)), 4u);
}

}  // namespace
}  // namespace liecontract
