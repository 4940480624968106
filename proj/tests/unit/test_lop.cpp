#include <gtest/gtest.h>

#include "dyfrt/dybm.hpp"
#include "dyfrt/errors.hpp"
#include "dyfrt/lop.hpp"
#include "dyfrt/random.hpp"
#include "oracle.hpp"

using namespace dyfrt;
using oracle::Dense;

namespace {

SigmaContext q5_ctx() {
  return sigma_context_from_r(build_from_quasigroup(builtin_q5(), builtin_z5_ternary(), {0, 1, 2, 3, 4}));
}

// λ-wise product of a chain given in application order.
std::vector<Dense> chain(std::initializer_list<std::vector<Dense>> steps) {
  std::vector<Dense> acc = *steps.begin();
  for (auto it = steps.begin() + 1; it != steps.end(); ++it)
    for (std::size_t l = 0; l < acc.size(); ++l) acc[l] = oracle::mul((*it)[l], acc[l]);
  return acc;
}

// Carriers are row-major, so the associators are identity matrices and can be skipped.
bool rll_oracle(const SigmaContext& ctx, const LOperator& lv) {
  auto idx = identity(ctx.x), idv = identity(lv.v);
  auto lhs = chain({oracle::tensor_mor(lv.l, idx), oracle::tensor_mor(idx, lv.l), oracle::tensor_mor(ctx.sigma, idv)});
  auto rhs = chain({oracle::tensor_mor(idv, ctx.sigma), oracle::tensor_mor(lv.l, idx), oracle::tensor_mor(idx, lv.l)});
  return lhs == rhs;
}

bool yb_oracle(const SigmaContext& ctx) {
  auto id = identity(ctx.x);
  auto s1 = oracle::tensor_mor(ctx.sigma, id), s2 = oracle::tensor_mor(id, ctx.sigma);
  return chain({s2, s1, s2}) == chain({s1, s2, s1});
}

VectHObject trivial_x2() { return make_object(1, {{0, 0}}); }

}  // namespace

TEST(Lop, Q5SigmaIsYangBaxter) {
  SigmaContext ctx = q5_ctx();
  EXPECT_TRUE(check_yb_operator(ctx).pass);
  EXPECT_TRUE(yb_oracle(ctx));
  LOperator l = sigma_loperator(ctx);
  auto r = check_rll(ctx, l);
  EXPECT_TRUE(r.pass) << r.witness;
  EXPECT_TRUE(rll_oracle(ctx, l));
  EXPECT_TRUE(check_rll(ctx, unit_loperator(ctx)).pass);
}

TEST(Lop, RandomSigmaAgreesWithOracle) {
  Rng rng(21);
  VectHObject x = trivial_x2();
  VectHObject xx = tensor_obj(x, x);
  int fails = 0;
  for (int t = 0; t < 25; ++t) {
    VectHMorphism s = random_morphism(rng, xx, xx, 0.5);
    s = add(s, identity(xx));
    if (!s.mats[0].inverse()) continue;
    SigmaContext ctx = make_sigma_context(x, s);
    bool yb = check_yb_operator(ctx).pass;
    EXPECT_EQ(yb, yb_oracle(ctx));
    if (!yb) ++fails;
  }
  EXPECT_GT(fails, 0);
  SigmaContext id = make_sigma_context(x, identity(xx));
  EXPECT_TRUE(check_yb_operator(id).pass);
}

TEST(Lop, RandomLOperatorsAgreeWithOracle) {
  Rng rng(22);
  VectHObject x = trivial_x2();
  VectHObject xx = tensor_obj(x, x);
  VectHMorphism flip = zero_morphism(xx, xx);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) flip.mats[0].set(b * 2 + a, a * 2 + b, Scalar(1));
  SigmaContext ctx = make_sigma_context(x, flip);
  ASSERT_TRUE(check_yb_operator(ctx).pass);
  VectHObject v = x;
  int fails = 0;
  for (int t = 0; t < 25; ++t) {
    VectHMorphism l = add(random_morphism(rng, tensor_obj(v, x), tensor_obj(x, v), 0.5), identity(xx));
    if (!l.mats[0].inverse()) continue;
    LOperator op = make_loperator(x, v, l);
    auto r = check_rll(ctx, op);
    EXPECT_EQ(r.pass, rll_oracle(ctx, op));
    if (!r.pass) {
      ++fails;
      EXPECT_FALSE(r.witness.empty());
      EXPECT_THROW(boxtimes(ctx, op, op), PreconditionError);
    }
  }
  EXPECT_GT(fails, 0);
}

TEST(Lop, BoxtimesOfQ5) {
  SigmaContext ctx = q5_ctx();
  LOperator l = sigma_loperator(ctx);
  LOperator ll = boxtimes(ctx, l, l);
  EXPECT_EQ(ll.v.size(), 25);
  EXPECT_TRUE(check_rll(ctx, ll).pass);
  EXPECT_TRUE(compose(ll.l_inv, ll.l) == identity(tensor_obj(ll.v, ctx.x)));
  EXPECT_TRUE(compose(ll.l, ll.l_inv) == identity(tensor_obj(ctx.x, ll.v)));
}

TEST(Lop, RepMorphisms) {
  SigmaContext ctx = q5_ctx();
  LOperator l = sigma_loperator(ctx), u = unit_loperator(ctx);
  EXPECT_TRUE(is_rep_morphism(ctx, identity(l.v), l, l));
  EXPECT_TRUE(is_rep_morphism(ctx, zero_morphism(u.v, l.v), u, l));
  EXPECT_THROW(is_rep_morphism(ctx, identity(l.v), u, l), StructuralError);
  EXPECT_FALSE(find_rep_isomorphism(ctx, u, l).has_value());
  auto self = find_rep_isomorphism(ctx, u, u);
  ASSERT_TRUE(self.has_value());
  EXPECT_TRUE(is_rep_morphism(ctx, *self, u, u));
}

TEST(Lop, SingularInputsRefused) {
  SigmaContext ctx = q5_ctx();
  VectHObject xx = tensor_obj(ctx.x, ctx.x);
  EXPECT_THROW(make_loperator(ctx.x, ctx.x, zero_morphism(xx, xx)), PreconditionError);
  EXPECT_THROW(make_sigma_context(ctx.x, zero_morphism(xx, xx)), PreconditionError);
  LOperator l = sigma_loperator(ctx);
  EXPECT_THROW(make_loperator(ctx.x, ctx.x, l.l, scale(Scalar(2), l.l_inv)), PreconditionError);
}
