#include <gtest/gtest.h>

#include "gztoda/yangian/yangian.hpp"

using namespace gztoda;
using namespace gztoda::yangian;
using exact::ExactScalar;

namespace {

const ExactScalar kHalf(mpq_class(1, 2));

void expect_all_pass(const Report& r) {
  EXPECT_GT(r.checks().size(), 0u);
  for (const auto& c : r.checks()) EXPECT_EQ(c.status, Status::Pass) << c.name << " " << c.witness;
}

}  // namespace

TEST(Series, ExpansionAtInfinity) {
  YangianRep y(2);
  const RatFunc l = y.lam();
  const RatFunc a = y.gz().g(1, 1);
  // 1/(l - a) = l^-1 + a l^-2 + a^2 l^-3 + ...
  auto s = series_at_infinity(RatFunc(1) / (l - a), y.lambda(), -3);
  ASSERT_EQ(s.size(), 3u);
  EXPECT_EQ(s.at(-1), RatFunc(1));
  EXPECT_EQ(s.at(-2), a);
  EXPECT_EQ(s.at(-3), a * a);
  auto p = series_at_infinity(l * l - a, y.lambda(), 0);
  EXPECT_EQ(p.at(2), RatFunc(1));
  EXPECT_EQ(p.at(0), -a);
  EXPECT_EQ(p.count(1), 0u);
}

TEST(Drinfeld, KOne) {
  YangianRep y(2);
  EXPECT_EQ(y.k(1), y.gz().mult(y.lam() - y.gz().g(1, 1)));
}

TEST(Drinfeld, FOneN2) {
  YangianRep y(2);
  const auto& g = y.gz();
  DifferenceOperator printed = g.beta(1, 1).left_mul(RatFunc(1) / (y.lam() - g.g(1, 1) - g.ih()));
  EXPECT_EQ(y.f_printed(1), printed);
  EXPECT_EQ(y.f(1), -printed);
}

TEST(Minors, N2ExplicitForms) {
  YangianRep y(2);
  const auto& g = y.gz();
  EXPECT_EQ(y.A_minor(2), g.mult((y.lam() - g.g(2, 1)) * (y.lam() - g.g(2, 2))));
  EXPECT_EQ(y.C_minor(1), -g.beta(1, 1));
  RatFunc b = (g.g(1, 1) - g.g(2, 1) - g.ih(kHalf)) * (g.g(1, 1) - g.g(2, 2) - g.ih(kHalf));
  EXPECT_EQ(y.B_minor(1), g.beta(1, 1, -1).left_mul(b));
}

TEST(Minors, AgreementUpTo3) {
  expect_all_pass(verify_minors(2, {}));
  expect_all_pass(verify_minors(3, {}));
}

TEST(QuantumDeterminant, CentralAtN2) { expect_all_pass(verify_quantum_determinant(2, {})); }

TEST(QuantumDeterminant, N3) { expect_all_pass(verify_quantum_determinant(3, {})); }

TEST(Cartan, Factorization) { expect_all_pass(verify_cartan_factorization(3, {})); }

TEST(Relations, MinorRelations) {
  expect_all_pass(verify_cw1(2, {}));
  expect_all_pass(verify_cw1(3, {}));
}

TEST(Relations, RttN2) {
  Report r = verify_rtt(2, {});
  EXPECT_EQ(r.checks().size(), 16u);
  expect_all_pass(r);
}

TEST(Relations, DrinfeldN2) { expect_all_pass(verify_drinfeld_relations(2, {}, 3)); }

TEST(Relations, DrinfeldN3) { expect_all_pass(verify_drinfeld_relations(3, {}, 1)); }

TEST(Residue, RecoversGenerators) {
  expect_all_pass(residue_recover(2, {}));
  expect_all_pass(residue_recover(3, {}));
}
