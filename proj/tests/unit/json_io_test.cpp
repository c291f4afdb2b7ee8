#include <gtest/gtest.h>

#include "liecontract/families.hpp"
#include "liecontract/json_io.hpp"

namespace liecontract {
namespace {

TEST(JsonIo, EmitsCanonicalLayout) {
  const LieAlgebra h(3, {{0, 1, 2, Rational(-3, 2)}});
  EXPECT_EQ(algebra_to_json(h).dump(),
            R"({"dim":3,"basis":["X1","X2","X3"],"brackets":[{"i":1,"j":2,"coeffs":{"3":"-3/2"}}]})");
  EXPECT_EQ(emit_algebra(h).back(), '\n');
}

TEST(JsonIo, RoundTripWithFamily) {
  const FamilySpec spec{Family::kGmQ, 5, {3, 6}};
  const std::string text = emit_algebra(make_family(spec), spec);
  const AlgebraDocument doc = parse_algebra(text);
  ASSERT_TRUE(doc.family.has_value());
  EXPECT_EQ(*doc.family, spec);
  EXPECT_EQ(doc.algebra, make_family(spec));
  EXPECT_EQ(emit_algebra(doc.algebra, doc.family), text);
}

TEST(JsonIo, AcceptsIntegerCoefficients) {
  const auto doc = parse_algebra(R"({"dim":3,"brackets":[{"i":1,"j":2,"coeffs":{"3":2}}]})");
  EXPECT_EQ(doc.algebra.coefficient(0, 1, 2), Rational(2));
}

TEST(JsonIo, RejectsMalformedInput) {
  const char* bad[] = {
      "{",
      R"({"brackets":[]})",
      R"({"dim":3,"brackets":[{"i":2,"j":1,"coeffs":{"3":"1"}}]})",
      R"({"dim":3,"brackets":[{"i":1,"j":4,"coeffs":{"3":"1"}}]})",
      R"({"dim":3,"brackets":[{"i":1,"j":2,"coeffs":{"3":"1/0"}}]})",
      R"({"dim":3,"brackets":[{"i":1,"j":2,"coeffs":{"3":"1"}},{"i":1,"j":2,"coeffs":{"3":"1"}}]})",
      R"({"dim":3,"brackets":[{"i":1,"j":2,"coeffs":{"x":"1"}}]})",
      R"({"dim":2,"basis":["a"],"brackets":[]})",
      // Jacobi fails at (1,2,3).
      R"({"dim":5,"brackets":[{"i":1,"j":2,"coeffs":{"3":"1"}},{"i":1,"j":3,"coeffs":{"4":"1"}},
          {"i":2,"j":3,"coeffs":{"4":"1"}},{"i":1,"j":4,"coeffs":{"5":"1"}}]})",
  };
  for (const char* text : bad) EXPECT_THROW(parse_algebra(text), std::invalid_argument) << text;
}

TEST(JsonIo, ParametricLawRoundTrip) {
  ParametricLaw p{3, default_labels(3), {{0, 1, 2, Rational(1, 3), -2}}};
  const ParametricLaw back = parametric_law_from_json(nlohmann::json::parse(
      parametric_law_to_json(p).dump()));
  EXPECT_EQ(back.dim, 3u);
  ASSERT_EQ(back.entries.size(), 1u);
  EXPECT_EQ(back.entries[0], p.entries[0]);
}

}  // namespace
}  // namespace liecontract
