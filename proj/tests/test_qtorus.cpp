#include <gtest/gtest.h>

#include <random>

#include "gztoda/error.hpp"
#include "gztoda/qtorus/qtorus.hpp"

using namespace gztoda;
using namespace gztoda::qtorus;

namespace {

void expect_all_pass(const Report& r) {
  EXPECT_GT(r.checks().size(), 0u);
  for (const auto& c : r.checks()) EXPECT_EQ(c.status, Status::Pass) << c.name << " " << c.witness;
}

Word u_word(int p, int doubled) {
  Word w;
  w.u[p] = static_cast<int8_t>(doubled);
  return w;
}

}  // namespace

TEST(Torus, ReorderingRule) {
  const ContextPtr ctx = context(2);
  const QTorusElement u = QTorusElement::u(ctx, 1, 1, 2);
  const QTorusElement v(ctx, ctx->v(1, 1));
  EXPECT_TRUE(u * v == (v * u).left_mul(ctx->q()));
  const QTorusElement ut = QTorusElement::ut(ctx, 1, 1, 2);
  const QTorusElement vt(ctx, ctx->vt(1, 1));
  EXPECT_TRUE(ut * vt == (vt * ut).left_mul(ctx->qt()));
  // u^{1/2} v^2 = q v^2 u^{1/2}
  const QTorusElement h = QTorusElement::u(ctx, 1, 1, 1);
  EXPECT_TRUE(h * v * v == (v * v * h).left_mul(ctx->q()));
  // integer cross powers commute; row N is never shifted
  EXPECT_TRUE(commutator(u, vt).is_zero());
  EXPECT_TRUE(commutator(ut, v).is_zero());
  EXPECT_TRUE(commutator(u, QTorusElement(ctx, ctx->v(2, 1))).is_zero());
  EXPECT_TRUE(commutator(u, ut).is_zero());
}

TEST(Torus, HalfShiftAgainstDualVariable) {
  const ContextPtr ctx = context(2);
  const QTorusElement h = QTorusElement::u(ctx, 1, 1, 1);
  const QTorusElement vt(ctx, ctx->vt(1, 1));
  EXPECT_TRUE(h * vt == -(vt * h));
}

TEST(Torus, InverseOfMonomial) {
  const ContextPtr ctx = context(3);
  const QTorusElement x = QTorusElement::word(ctx, u_word(2, 2), ctx->v(2, 1) + ctx->v(2, 2));
  const QTorusElement y = QTorusElement::word(ctx, u_word(1, -2), ctx->v(2, 1).pow(3));
  EXPECT_TRUE(y * y.inverse() == QTorusElement(ctx, RatFunc(1)));
  EXPECT_TRUE(y.inverse() * y == QTorusElement(ctx, RatFunc(1)));
  EXPECT_THROW((x + y).inverse(), Error);
}

TEST(Torus, AssociativityFuzz) {
  const ContextPtr ctx = context(3);
  std::mt19937_64 rng(20261019);
  std::uniform_int_distribution<int> ex(-2, 2);
  auto random_monomial = [&]() {
    Word w;
    for (int p = 0; p < ctx->positions(); ++p) {
      w.u[p] = static_cast<int8_t>(ex(rng));
      w.ut[p] = static_cast<int8_t>(ex(rng));
    }
    RatFunc c(1);
    for (int n = 1; n <= 3; ++n) {
      for (int j = 1; j <= n; ++j) {
        const int a = ex(rng);
        const int b = ex(rng);
        c *= a >= 0 ? ctx->v(n, j).pow(a) : ctx->v(n, j).pow(-a).inverse();
        c *= b >= 0 ? ctx->vt(n, j).pow(b) : ctx->vt(n, j).pow(-b).inverse();
      }
    }
    return QTorusElement::word(ctx, w, c);
  };
  for (int k = 0; k < 100; ++k) {
    const QTorusElement a = random_monomial();
    const QTorusElement b = random_monomial();
    const QTorusElement c = random_monomial();
    ASSERT_TRUE((a * b) * c == a * (b * c)) << a.to_string() << " | " << b.to_string() << " | " << c.to_string();
  }
}

TEST(Generators, GlImagesAtN2) {
  const ContextPtr ctx = context(2);
  const RatFunc v11 = ctx->v(1, 1);
  const RatFunc v21 = ctx->v(2, 1);
  const RatFunc v22 = ctx->v(2, 2);
  const RatFunc q = ctx->q();
  EXPECT_TRUE(uq_gl_generator(2, GlKind::K, 1) == QTorusElement(ctx, v11));
  EXPECT_TRUE(uq_gl_generator(2, GlKind::K, 2) == QTorusElement(ctx, v21 * v22 / v11));
  const RatFunc e = -(q.inverse() / (q - q.inverse())) / (v21 * v22) * v11 / v11.pow(3) *
                    (v11.pow(2) - q * v21.pow(2)) * (v11.pow(2) - q * v22.pow(2));
  EXPECT_TRUE(uq_gl_generator(2, GlKind::EUp, 1) == QTorusElement::word(ctx, u_word(0, -2), e));
  EXPECT_TRUE(uq_gl_generator(2, GlKind::EDown, 1) ==
              QTorusElement::word(ctx, u_word(0, 2), (q - q.inverse()).inverse()));
  EXPECT_THROW(uq_gl_generator(2, GlKind::EUp, 2), Error);
  EXPECT_THROW(uq_gl_generator(2, GlKind::K, 3), Error);
}

TEST(Generators, SlImages) {
  const ContextPtr c2 = context(2);
  EXPECT_TRUE(uq_sl_generator(2, SlForm::SimplyConnected, SlKind::L, 1) == QTorusElement(c2, c2->v(1, 1)));
  EXPECT_TRUE(uq_sl_generator(2, SlForm::Adjoint, SlKind::K, 1) == QTorusElement(c2, c2->v(1, 1).pow(2)));
  EXPECT_THROW(uq_sl_generator(2, SlForm::Adjoint, SlKind::L, 1), Error);
  const ContextPtr c3 = context(3);
  EXPECT_TRUE(uq_sl_generator(3, SlForm::Adjoint, SlKind::K, 1) ==
              QTorusElement(c3, c3->v(1, 1).pow(2) / (c3->v(2, 1) * c3->v(2, 2))));
}

TEST(Generators, DualCartan) {
  auto [a, b] = dual_images(2);
  const ContextPtr ctx = context(2);
  EXPECT_TRUE(a.K[0] == QTorusElement(ctx, ctx->v(1, 1)));
  EXPECT_TRUE(b.K[0] == QTorusElement(ctx, ctx->vt(1, 1)));
}

TEST(Relations, GlAndSlForms) {
  for (int N = 2; N <= 3; ++N) {
    expect_all_pass(verify_uq_relations(N, Algebra::Gl));
    expect_all_pass(verify_uq_relations(N, Algebra::SlQ));
    expect_all_pass(verify_uq_relations(N, Algebra::SlP));
  }
}

TEST(Relations, SerreAtN3IsChecked) {
  const Report r = verify_uq_relations(3, Algebra::Gl);
  bool found = false;
  for (const auto& c : r.checks()) {
    if (c.name == "gl3: E12^2 E23 - [2]_q E12 E23 E12 + E23 E12^2 = 0") {
      found = true;
      EXPECT_EQ(c.status, Status::Pass);
      EXPECT_EQ(c.anchor, "d3");
    }
  }
  EXPECT_TRUE(found);
}

TEST(Relations, DualImages) {
  expect_all_pass(verify_dual_relations(2));
  expect_all_pass(verify_dual_relations(3));
}

TEST(Relations, Sl2Forms) { expect_all_pass(verify_sl2_forms()); }

TEST(Bimodule, CommutatorsVanish) {
  expect_all_pass(verify_bimodule(2));
  expect_all_pass(verify_bimodule(3));
}

TEST(Bimodule, BothModesAgree) {
  VerifyOptions opts;
  opts.mode = Mode::Both;
  opts.seed = 7;
  opts.trials = 3;
  const Report r = verify_bimodule(2, opts);
  expect_all_pass(r);
  for (const auto& c : r.checks()) EXPECT_TRUE(c.exact_zero);
}

TEST(Gaussian, ShiftRule) {
  // core e^{pi i g11^2/(w1 w2)}: g11 -> g11 + i w1 multiplies by q^{-1/2} v11^{-1}
  GaussianState g;
  g.ctx = context(2);
  g.Q.assign(3, std::vector<mpq_class>(3, 0));
  g.Q[0][0] = 1;
  g.d.assign(3, 0);
  EXPECT_EQ(shift_multiplier(g, u_word(0, 2)), g.ctx->q_quarter(-2) * g.ctx->v(1, 1).inverse());
  Word w;
  w.ut[0] = 2;
  EXPECT_EQ(shift_multiplier(g, w), g.ctx->qt_quarter(2) * g.ctx->vt(1, 1));
}

TEST(QWhittaker, Data) {
  const QWhittakerData w = q_whittaker_vector(2, {{0, 0}, {0, 0}});
  ASSERT_EQ(w.d.size(), 1u);
  EXPECT_EQ(w.d[0], 1);
  EXPECT_EQ(w.chi[0], -1);
  EXPECT_THROW(q_whittaker_vector(2, {{0, 1}, {0, 0}}), Error);
  EXPECT_THROW(q_whittaker_vector(2, {{0}}), Error);
}

TEST(QWhittaker, Equations) {
  expect_all_pass(verify_q_whittaker(2, {{0, 0}, {0, 0}}));
  expect_all_pass(verify_q_whittaker(2, {{1, 1}, {1, 0}}));
  expect_all_pass(verify_q_whittaker(3, {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}}));
  expect_all_pass(verify_q_whittaker(3, {{1, 1, 0}, {1, 0, 1}, {0, 1, 2}}));
}

TEST(QWhittaker, RaisingSideHasNoGaussianSolution) {
  const Report r = wv1_existence(2, {{0, 0}, {0, 0}});
  ASSERT_EQ(r.checks().size(), 1u);
  EXPECT_EQ(r.checks()[0].status, Status::Skipped);
  EXPECT_NE(r.checks()[0].note.find("no solution"), std::string::npos);
}
