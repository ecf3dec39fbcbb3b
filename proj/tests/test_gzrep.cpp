#include <gtest/gtest.h>

#include "gztoda/error.hpp"
#include "gztoda/gzrep/gzrep.hpp"

using namespace gztoda;
using namespace gztoda::gzrep;
using exact::ExactScalar;

namespace {

const ExactScalar kHalf(mpq_class(1, 2));

void expect_all_pass(const Report& r) {
  EXPECT_GT(r.checks().size(), 0u);
  for (const auto& c : r.checks()) EXPECT_EQ(c.status, Status::Pass) << c.name << " " << c.witness;
}

}  // namespace

TEST(GzGenerators, DiagonalN1) {
  GzRep rep(1);
  EXPECT_EQ(rep.E(1, 1), rep.mult(rep.g(1, 1) / rep.ih()));
}

TEST(GzGenerators, LoweringN2) {
  GzRep rep(2);
  EXPECT_EQ(rep.E(2, 1), rep.beta(1, 1).left_mul(RatFunc(1) / rep.ih()));
}

TEST(GzGenerators, RaisingN2) {
  GzRep rep(2);
  RatFunc c = RatFunc(-1) / rep.ih() * (rep.g(1, 1) - rep.g(2, 1) - rep.ih(kHalf)) *
              (rep.g(1, 1) - rep.g(2, 2) - rep.ih(kHalf));
  EXPECT_EQ(rep.E(1, 2), rep.beta(1, 1, -1).left_mul(c));
}

TEST(GzGenerators, ShiftPattern) {
  GzRep rep(3);
  for (int n = 1; n < 3; ++n) {
    for (const auto& [k, c] : rep.E(n, n + 1).terms()) {
      int total = 0;
      for (auto x : k) total += x;
      EXPECT_EQ(total, -1);
    }
    for (const auto& [k, c] : rep.E(n + 1, n).terms()) {
      int total = 0;
      for (auto x : k) total += x;
      EXPECT_EQ(total, 1);
    }
    EXPECT_TRUE(rep.E(n, n).is_multiplication());
  }
}

TEST(GzGenerators, IndexOutOfRange) {
  GzRep rep(2);
  EXPECT_THROW(rep.E(3, 1), Error);
  EXPECT_THROW(rep.beta(2, 1), Error);
}

TEST(GzRelations, Gl2Table) {
  GzRep rep(2);
  EXPECT_EQ(exact::commutator(rep.E(1, 2), rep.E(2, 1)), rep.E(1, 1) - rep.E(2, 2));
  EXPECT_TRUE(exact::commutator(rep.E(1, 1), rep.E(2, 2)).is_zero());
  expect_all_pass(verify_gl_relations(2, {}));
}

TEST(GzRelations, Gl3Table) {
  Report r = verify_gl_relations(3, {});
  EXPECT_EQ(r.checks().size(), 81u);
  expect_all_pass(r);
}

TEST(GzRelations, ExtrasPathIndependence) { expect_all_pass(verify_gl_extras(3, {})); }

TEST(GzRelations, RandomizedAgreesWithExact) {
  VerifyOptions o;
  o.mode = Mode::Both;
  o.seed = 7;
  expect_all_pass(verify_gl_relations(2, o));
}

TEST(Casimir, RhoAntisymmetric) {
  for (int n = 1; n <= 5; ++n) {
    for (int k = 1; k <= n; ++k) EXPECT_TRUE((rho(n, k) + rho(n, n + 1 - k)).is_zero());
  }
}

TEST(Casimir, SmallCases) {
  GzRep rep(2, {"lambda"});
  const auto lam = rep.vars()->index("lambda");
  const RatFunc l = RatFunc::var(lam);
  EXPECT_EQ(casimir_hu(rep, 1, lam), rep.mult(l - rep.g(1, 1)));
  EXPECT_EQ(casimir_hu(rep, 2, lam), rep.mult((l - rep.g(2, 1)) * (l - rep.g(2, 2))));
}

TEST(Casimir, VerifyUpTo3) {
  for (int n = 1; n <= 3; ++n) expect_all_pass(verify_casimir(n, {}));
}

TEST(Whittaker, LeftIsConstant) {
  GzRep rep(3);
  auto w = whittaker_vector(rep, Side::Left);
  EXPECT_TRUE(w.state.gammas().empty());
  EXPECT_EQ(w.state.prefactor(), RatFunc(1));
  EXPECT_EQ(w.character_over_hbar, -ExactScalar::i());
}

TEST(Whittaker, RightGammaCountN3) {
  // Row pairs (1,2) and (2,3) contribute 1*2 + 2*3 factors.
  GzRep rep(3);
  EXPECT_EQ(whittaker_vector(rep, Side::Right).state.gammas().size(), 8u);
}

TEST(Whittaker, RightN2HasNoExpFactor) {
  GzRep rep(2);
  auto w = whittaker_vector(rep, Side::Right);
  EXPECT_EQ(w.state.gammas().size(), 2u);
  EXPECT_EQ(w.state.hbar_powers().size(), 2u);
  EXPECT_TRUE(w.state.exps().empty());
}

TEST(Whittaker, EquationsN2ToN4) {
  for (int N = 2; N <= 4; ++N) expect_all_pass(verify_whittaker(N, {}));
}

TEST(Lagrange, IdentityUpTo4) { expect_all_pass(verify_lagrange_identity(4, {})); }

TEST(Span, ProbeN2) {
  auto probes = module_span_probe(2, 2);
  ASSERT_FALSE(probes.empty());
  EXPECT_EQ(probes.front().word, "1");
  for (const auto& p : probes) EXPECT_TRUE(p.member) << p.word << " " << p.detail;
}
