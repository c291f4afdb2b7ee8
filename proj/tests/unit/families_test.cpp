#include <gtest/gtest.h>

#include "liecontract/families.hpp"
#include "liecontract/invariants.hpp"

namespace liecontract {
namespace {

TEST(Families, GmBrackets) {
  const LieAlgebra g = make_g_m(4);
  EXPECT_EQ(g.dim(), 9u);
  // Chain [X1, Xj] = X{j+1}, 2 <= j <= 7.
  for (std::size_t j = 1; j <= 6; ++j) EXPECT_EQ(g.coefficient(0, j, j + 1), Rational(1));
  // Pairing [Xj, X{9-j}] = (-1)^j X9, 2 <= j <= 4.
  EXPECT_EQ(g.coefficient(1, 6, 8), Rational(1));
  EXPECT_EQ(g.coefficient(2, 5, 8), Rational(-1));
  EXPECT_EQ(g.coefficient(3, 4, 8), Rational(1));
  EXPECT_EQ(g.nonzero_pairs(), 9u);
  EXPECT_TRUE(check_jacobi(g).ok());
}

TEST(Families, DeletedChainTargets) {
  EXPECT_EQ(deleted_chain_targets(4, {4}), (std::set<int>{4, 6}));
  EXPECT_EQ(deleted_chain_targets(4, {5}), (std::set<int>{5}));
  EXPECT_EQ(deleted_chain_targets(5, {3, 6}), (std::set<int>{3, 6, 9}));
}

TEST(Families, GmqRemovesChainBrackets) {
  const LieAlgebra g = make_g_m_q(4, {4});
  EXPECT_TRUE(g.coefficient(0, 2, 3).is_zero());  // [X1, X3] -> X4 removed
  EXPECT_TRUE(g.coefficient(0, 4, 5).is_zero());  // [X1, X5] -> X6 removed
  EXPECT_EQ(g.coefficient(0, 3, 4), Rational(1));
  EXPECT_EQ(g.nonzero_pairs(), 7u);
  EXPECT_TRUE(check_jacobi(g).ok());
}

TEST(Families, StructureEquationsDualize) {
  for (std::size_t m = 4; m <= 6; ++m) {
    EXPECT_TRUE(tensor_equal(from_maurer_cartan(g_m_structure_equations(m)), make_g_m(m)));
    EXPECT_TRUE(
        tensor_equal(from_maurer_cartan(g_m_structure_equations(m, {3, 4})), make_g_m_q(m, {3, 4})));
  }
}

TEST(Families, QListValidation) {
  EXPECT_NO_THROW(validate_q_list(4, {3, 5}));
  EXPECT_NO_THROW(validate_q_list(4, {}));
  EXPECT_THROW(validate_q_list(4, {2}), std::invalid_argument);
  EXPECT_THROW(validate_q_list(4, {6}), std::invalid_argument);
  EXPECT_THROW(validate_q_list(4, {4, 3}), std::invalid_argument);
  EXPECT_THROW(validate_q_list(4, {4, 4}), std::invalid_argument);
  EXPECT_THROW(make_g_m_q(4, {}), std::invalid_argument);
  EXPECT_THROW(make_g_m(3), std::invalid_argument);
  try {
    validate_q_list(4, {7});
    FAIL();
  } catch (const std::invalid_argument& e) {
    EXPECT_EQ(std::string(e.what()), "q must satisfy 3 ≤ q ≤ m+1 (got q=7, m=4)");
  }
}

TEST(Families, Enumeration) {
  const auto lists = enumerate_q_lists(4, 2);
  const std::vector<std::vector<int>> expected{{3}, {4}, {5}, {3, 4}, {3, 5}, {4, 5}};
  EXPECT_EQ(lists, expected);
  EXPECT_EQ(enumerate_q_lists(5, 3).size(), 4u + 6u + 4u);
  EXPECT_TRUE(enumerate_q_lists(4, 0).empty());
}

TEST(Families, SpecNamesAndDispatch) {
  EXPECT_EQ(parse_family("gmq"), Family::kGmQ);
  EXPECT_EQ(parse_family("heisenberg_plus_abelian"), Family::kHeisenbergPlusAbelian);
  EXPECT_THROW(parse_family("sl2"), std::invalid_argument);
  EXPECT_EQ((FamilySpec{Family::kGmQ, 4, {4}}).display_name(), "g_4(4)");
  EXPECT_EQ((FamilySpec{Family::kHeisenbergPlusAbelian, 4, {}}).display_name(), "h_3+C^2");
  EXPECT_TRUE(tensor_equal(make_family({Family::kModelFiliform, 5, {}}), make_model_filiform(5)));
  EXPECT_THROW(make_family({Family::kGm, 4, {3}}), std::invalid_argument);
}

TEST(Families, HeisenbergPlusAbelianShape) {
  const LieAlgebra h = make_heisenberg_plus_abelian(4);
  EXPECT_EQ(h.dim(), 9u);
  EXPECT_EQ(derived_algebra(h).dim(), 1u);
  EXPECT_EQ(center(h).dim(), 3u);
}

}  // namespace
}  // namespace liecontract
