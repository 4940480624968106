#include <gtest/gtest.h>

#include "dyfrt/dybm.hpp"
#include "dyfrt/errors.hpp"
#include "dyfrt/frt.hpp"
#include "dyfrt/random.hpp"

using namespace dyfrt;

namespace {

struct Q5 {
  FiniteAction a;
  SigmaContext ctx;
  LOperator l;
  LOperator ll;
  LOperator unit;
};

const Q5& q5() {
  static const Q5 d = [] {
    DynamicalMap r = build_from_quasigroup(builtin_q5(), builtin_z5_ternary(), {0, 1, 2, 3, 4});
    SigmaContext ctx = sigma_context_from_r(r);
    LOperator l = sigma_loperator(ctx);
    LOperator ll = boxtimes(ctx, l, l);
    LOperator u = unit_loperator(ctx);
    return Q5{r.action, std::move(ctx), std::move(l), std::move(ll), std::move(u)};
  }();
  return d;
}

MHFunction ones(int h) { return constant_function(h, Scalar(1)); }

MHFunction random_function(Rng& rng, int h) {
  MHFunction f(h);
  for (auto& x : f) x = uniform_int(rng, -2, 3);
  return f;
}

Letter random_letter(Rng& rng, int h, int m) {
  switch (uniform_int(rng, 0, 2)) {
    case 0:
      return Letter::gen(uniform_int(rng, 0, m - 1), uniform_int(rng, 0, m - 1));
    case 1:
      return Letter::gen_inv(uniform_int(rng, 0, m - 1), uniform_int(rng, 0, m - 1));
    default:
      return Letter::scalar(random_function(rng, h), random_function(rng, h));
  }
}

Word random_word(Rng& rng, int h, int m, int max_len) {
  Word w(uniform_int(rng, 0, max_len));
  for (auto& l : w) l = random_letter(rng, h, m);
  return w;
}

GroupElement tr(int x) { return translation_element(q5().a, x); }

}  // namespace

TEST(Frt, Grading) {
  const FiniteAction& a = q5().a;
  auto d = grading(a, Word{Letter::gen(1, 1), Letter::gen(2, 2)});
  EXPECT_EQ(d.first, tr(1) * tr(2));
  EXPECT_EQ(d.second, tr(1) * tr(2));
  auto i = grading(a, Letter::gen_inv(3, 4));
  EXPECT_EQ(i.first, tr(4).inverse());
  EXPECT_EQ(i.second, tr(3).inverse());
  auto s = grading(a, Letter::scalar(ones(5), ones(5)));
  EXPECT_TRUE(s.first.is_identity() && s.second.is_identity());
}

TEST(Frt, CoproductOfGenerators) {
  auto d = coproduct(AlgebraElement::word(5, {Letter::gen(1, 2)}), 5);
  ASSERT_EQ(d.size(), 5u);
  for (int c = 0; c < 5; ++c) {
    auto it = d.find({Word{Letter::gen(1, c)}, Word{Letter::gen(c, 2)}});
    ASSERT_NE(it, d.end());
    EXPECT_EQ(it->second, Scalar(1));
  }
  auto di = coproduct(AlgebraElement::word(5, {Letter::gen_inv(1, 2)}), 5);
  ASSERT_EQ(di.size(), 5u);
  for (int c = 0; c < 5; ++c) EXPECT_TRUE(di.count({Word{Letter::gen_inv(c, 2)}, Word{Letter::gen_inv(1, c)}}));

  MHFunction f = delta_function(5, 2), g = delta_function(5, 3);
  auto ds = coproduct(AlgebraElement::word(5, {Letter::scalar(f, g)}), 5);
  ASSERT_EQ(ds.size(), 1u);
  EXPECT_EQ(ds.begin()->first.first, (Word{Letter::scalar(f, ones(5))}));
  EXPECT_EQ(ds.begin()->first.second, (Word{Letter::scalar(ones(5), g)}));
  EXPECT_TRUE(coproduct(AlgebraElement::unit(5), 5).count({Word{}, Word{}}));
}

TEST(Frt, CoproductRespectsGrading) {
  const FiniteAction& a = q5().a;
  Rng rng(41);
  for (int t = 0; t < 40; ++t) {
    Word w = random_word(rng, 5, 5, 3);
    auto dw = grading(a, w);
    for (const auto& [p, c] : coproduct(AlgebraElement::raw_word(5, w), 5)) {
      auto d1 = grading(a, p.first), d2 = grading(a, p.second);
      EXPECT_EQ(d1.first, dw.first);
      EXPECT_EQ(d1.second, d2.first);
      EXPECT_EQ(d2.second, dw.second);
    }
  }
}

TEST(Frt, Coassociativity) {
  Rng rng(42);
  for (int t = 0; t < 30; ++t) {
    AlgebraElement e(5);
    e.add_word(random_word(rng, 5, 3, 3), Scalar(uniform_int(rng, 1, 3)));
    e.add_word(random_word(rng, 5, 3, 2), Scalar(-1));
    EXPECT_TRUE(coassoc_left(e, 3) == coassoc_right(e, 3));
  }
}

TEST(Frt, CounitOnGenerators) {
  const FiniteAction& a = q5().a;
  EXPECT_TRUE(counit(a, Word{Letter::gen(1, 2)}).terms.empty());
  EXPECT_TRUE(counit(a, Word{Letter::gen_inv(0, 3)}).terms.empty());
  IhxElement e = counit(a, Word{Letter::gen(1, 1), Letter::gen(2, 2)});
  EXPECT_EQ(ihx_operator(e), ihx_operator(IhxElement::monomial(ones(5), tr(1) * tr(2))));
  IhxElement ei = counit(a, Word{Letter::gen_inv(4, 4)});
  EXPECT_EQ(ihx_operator(ei), ihx_operator(IhxElement::monomial(ones(5), tr(4).inverse())));
  Rng rng(43);
  MHFunction f = random_function(rng, 5), g = random_function(rng, 5), fg(5);
  for (int l = 0; l < 5; ++l) fg[l] = f[l] * g[l];
  IhxElement es = counit(a, Word{Letter::scalar(f, g)});
  EXPECT_EQ(ihx_operator(es), ihx_operator(IhxElement::monomial(fg, GroupElement::identity(5))));
}

TEST(Frt, CounitIsMultiplicative) {
  const FiniteAction& a = q5().a;
  Rng rng(44);
  for (int t = 0; t < 60; ++t) {
    Word w1 = random_word(rng, 5, 5, 3), w2 = random_word(rng, 5, 5, 3);
    Word w = w1;
    w.insert(w.end(), w2.begin(), w2.end());
    EXPECT_EQ(ihx_operator(counit(a, w)), ihx_operator(ihx_product(counit(a, w1), counit(a, w2))));
  }
}

TEST(Frt, NormalizeWord) {
  auto trivial = normalize_word({Letter::scalar(ones(5), ones(5))}, 5);
  ASSERT_TRUE(trivial.has_value());
  EXPECT_TRUE(trivial->first.empty());
  EXPECT_EQ(trivial->second, Scalar(1));

  EXPECT_FALSE(normalize_word({Letter::gen(0, 1), Letter::scalar(constant_function(5, Scalar(0)), ones(5))}, 5));
  EXPECT_FALSE(normalize_word(
      {Letter::scalar(delta_function(5, 0), ones(5)), Letter::scalar(delta_function(5, 1), ones(5))}, 5));

  MHFunction f = delta_function(5, 2), g = constant_function(5, Scalar(3));
  auto merged = normalize_word({Letter::scalar(f, ones(5)), Letter::scalar(ones(5), g), Letter::gen(1, 1)}, 5);
  ASSERT_TRUE(merged.has_value());
  EXPECT_EQ(merged->second, Scalar(3));
  EXPECT_EQ(merged->first, (Word{Letter::scalar(f, ones(5)), Letter::gen(1, 1)}));

  // Raw words keep what normalization would erase.
  EXPECT_TRUE(AlgebraElement::word(5, {Letter::scalar(ones(5), ones(5))}) == AlgebraElement::unit(5));
  EXPECT_FALSE(AlgebraElement::raw_word(5, {Letter::scalar(ones(5), ones(5))}) == AlgebraElement::unit(5));
}

TEST(Frt, MoveScalarsLeftPreservesImages) {
  const Q5& d = q5();
  auto pi = rep_channel("pi", basic_representation(d.ctx, d.a));
  auto eps = counit_channel(d.a);
  Rng rng(45);
  for (int t = 0; t < 20; ++t) {
    AlgebraElement e = AlgebraElement::word(5, random_word(rng, 5, 5, 3));
    AlgebraElement m = move_scalars_left(e, d.a);
    for (const auto& [w, c] : m.terms())
      for (std::size_t i = 1; i < w.size(); ++i) EXPECT_FALSE(w[i].is_scalar() && !w[i - 1].is_scalar());
    EXPECT_TRUE(operator_equal(pi->eval(e), pi->eval(m)));
    EXPECT_TRUE(operator_equal(eps->eval(e), eps->eval(m)));
  }
}

TEST(Frt, VeeWedgeClosedFormsMatchComposites) {
  Rng rng(46);
  for (int t = 0; t < 200; ++t) {
    const int h = uniform_int(rng, 1, 4);
    VectHObject v = random_object(rng, h, uniform_int(rng, 1, 3));
    GroupElement al = random_group_element(rng, h), be = random_group_element(rng, h);
    DhxTerm u = random_term(rng, v, be, al);  // V⊗{α} -> {β}⊗V
    VectHMorphism uv = vee(v, u.u, al, be);
    ASSERT_EQ(describe_difference(uv, vee_composite(v, u.u, al, be)), "");
    EXPECT_TRUE(check_morphism(uv).pass);
    VectHMorphism w = random_morphism(rng, dhx_target(be.inverse(), v), dhx_source(v, al.inverse()));
    ASSERT_EQ(describe_difference(wedge(v, w, al, be), wedge_composite(v, w, al, be)), "");
    EXPECT_TRUE(vee(v, wedge(v, w, al, be), al, be) == w);
    EXPECT_TRUE(wedge(v, uv, al, be) == u.u);
  }
}

TEST(Frt, VeeStarSidesAgree) {
  const FiniteAction& a = q5().a;
  Rng rng(47);
  for (int t = 0; t < 40; ++t) {
    VectHObject v = random_object(rng, 5, uniform_int(rng, 1, 2));
    int x = uniform_int(rng, 0, 4), y = uniform_int(rng, 0, 4), z = uniform_int(rng, 0, 4);
    VectHMorphism u = random_term(rng, v, tr(x), tr(z)).u;
    VectHMorphism w = random_term(rng, v, tr(y).inverse(), tr(z).inverse()).u;
    auto [lhs, rhs] = vee_star_sides(a, v, u, w, x, y, z);
    EXPECT_EQ(describe_difference(lhs, rhs), "");
  }
}

TEST(Frt, FunctorRoundTrips) {
  const Q5& d = q5();
  for (const LOperator* l : {&d.l, &d.ll, &d.unit}) EXPECT_TRUE(f_functor(g_functor(d.a, *l)) == *l);
  DynRep basic = basic_representation(d.ctx, d.a), triv = trivial_representation(d.a);
  std::string w;
  EXPECT_TRUE(same_generator_images(g_functor(d.a, d.l), basic, &w)) << w;
  EXPECT_TRUE(same_generator_images(g_functor(d.a, d.unit), triv, &w)) << w;
  EXPECT_TRUE(f_functor(d.ctx, triv) == d.unit);
  EXPECT_TRUE(same_generator_images(g_functor(d.a, f_functor(d.ctx, basic)), basic, &w)) << w;
  w.clear();
  EXPECT_FALSE(same_generator_images(basic, triv, &w));
  EXPECT_FALSE(w.empty());
}

TEST(Frt, RepresentationRelations) {
  const Q5& d = q5();
  DhxElement unit = pi_from_loperator(d.ctx, d.a, d.l, AlgebraElement::unit(5));
  EXPECT_TRUE(operator_equal(unit, DhxElement::unit(d.l.v)));
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b) {
      AlgebraElement left(5), right(5);
      for (int c = 0; c < 5; ++c) {
        left.add_word({Letter::gen(a, c), Letter::gen_inv(c, b)}, Scalar(1));
        right.add_word({Letter::gen_inv(a, c), Letter::gen(c, b)}, Scalar(1));
      }
      if (a == b) {
        left -= AlgebraElement::unit(5);
        right -= AlgebraElement::unit(5);
      }
      EXPECT_TRUE(gamma_operator(pi_from_loperator(d.ctx, d.a, d.l, left)).is_zero()) << a << b;
      EXPECT_TRUE(gamma_operator(pi_from_loperator(d.ctx, d.a, d.l, right)).is_zero()) << a << b;
    }
}

TEST(Frt, RllGeneratorsKilledByBasicRep) {
  const Q5& d = q5();
  auto pi = rep_channel("pi", basic_representation(d.ctx, d.a));
  for (int t = 0; t < 625; t += 37) {
    AlgebraElement g = rll_generator(d.ctx, t / 125, t / 25 % 5, t / 5 % 5, t % 5);
    EXPECT_TRUE(gamma_operator(pi->eval(g)).is_zero());
  }
}

TEST(Frt, PerturbedLOperatorIsRejected) {
  const Q5& d = q5();
  LOperator bad = d.l;
  bad.l.mats[0] = Scalar(2) * bad.l.mats[0];
  bad.l_inv.mats[0] = Scalar(1, 2) * bad.l_inv.mats[0];
  EXPECT_FALSE(check_rll(d.ctx, bad).pass);
  auto c = certify_pi_kills_ideal(d.ctx, d.a, bad);
  EXPECT_FALSE(c.pass);
  EXPECT_NE(c.witness.find("(4)"), std::string::npos) << c.witness;
  EXPECT_THROW(pi_from_loperator(d.ctx, d.a, bad, AlgebraElement::unit(5)), PreconditionError);
  EXPECT_THROW(f_functor(d.ctx, g_functor(d.a, bad)), PreconditionError);
}

TEST(Frt, TensorChannelMatchesBoxtimes) {
  const Q5& d = q5();
  auto t = tensor_channel("pi⊗pi", g_functor(d.a, d.l), g_functor(d.a, d.l));
  auto b = rep_channel("pi(X⊗X)", g_functor(d.a, d.ll));
  Rng rng(48);
  for (int i = 0; i < 25; ++i) {
    Word w = random_word(rng, 5, 5, 3);
    EXPECT_TRUE(operator_equal(t->eval_word(w), b->eval_word(w))) << to_string(w);
  }
}

TEST(Frt, BatteryVerdicts) {
  const Q5& d = q5();
  EvaluationBattery battery = EvaluationBattery::build(d.ctx, d.a, {{"pi", d.l}});
  ASSERT_EQ(battery.channels().size(), 2u);
  for (const auto& c : battery.certificates()) EXPECT_TRUE(c.pass) << c.witness;

  AlgebraElement x = AlgebraElement::word(5, {Letter::gen(1, 2)});
  AlgebraElement y = x + rll_generator(d.ctx, 4, 2, 3, 1);
  EXPECT_FALSE(battery.compare(x, y).distinct);

  auto v = battery.compare(AlgebraElement::word(5, {Letter::gen(1, 1)}), AlgebraElement::word(5, {Letter::gen(2, 2)}));
  EXPECT_TRUE(v.distinct);
  EXPECT_FALSE(v.witness.empty());

  // A channel that does not kill the ideal is refused.
  LOperator bad = d.l;
  bad.l.mats[0] = Scalar(2) * bad.l.mats[0];
  bad.l_inv.mats[0] = Scalar(1, 2) * bad.l_inv.mats[0];
  auto r = battery.try_add(rep_channel("bad", g_functor(d.a, bad)), ideal_generators(d.ctx, d.a));
  EXPECT_FALSE(r.pass);
  EXPECT_EQ(battery.channels().size(), 2u);
}

TEST(Frt, CounitKillsIdealOnSmallSigma) {
  // X = {0, 1} over a one-point H with the flip.
  VectHObject x = make_object(1, {{0, 0}});
  VectHObject xx = tensor_obj(x, x);
  VectHMorphism flip = zero_morphism(xx, xx);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) flip.mats[0].set(b * 2 + a, a * 2 + b, Scalar(1));
  SigmaContext ctx = make_sigma_context(x, flip);
  FiniteAction act{FiniteSet{1, {}}, FiniteSet{2, {}}, {{0, 0}}};
  EXPECT_TRUE(certify_counit_kills_ideal(ctx, act).pass);
  EXPECT_TRUE(certify_pi_kills_ideal(ctx, act, sigma_loperator(ctx)).pass);
}

TEST(Frt, NonDirectSumDemo) {
  DemoReport rep = demo_nondirect_sum();
  for (const auto& s : rep.steps) EXPECT_TRUE(s.pass) << s.name << ": " << s.detail;
  EXPECT_TRUE(rep.pass());
  EXPECT_EQ(rep.steps.size(), 6u);
  MHFunction val = ihx_apply(counit(q5().a, rep.element), ones(5));
  EXPECT_EQ(val[0], Scalar(1));
  // The scalar letter R^{12}_{43} is δ_0.
  for (int l = 0; l < 5; ++l) EXPECT_EQ(q5().ctx.sigma.mats[l].get(4 * 5 + 3, 2 * 5 + 1), Scalar(l == 0 ? 1 : 0));
}
