#include <gtest/gtest.h>

#include "dyfrt/dhx.hpp"
#include "dyfrt/errors.hpp"
#include "dyfrt/random.hpp"
#include "oracle.hpp"

using namespace dyfrt;
using oracle::Dense;

namespace {

struct Fixture {
  VectHObject v;
  std::vector<GroupElement> group;
};

// Q5 acting on itself, with its full translation group.
Fixture q5_setup() {
  FiniteAction a = builtin_q5().as_action();
  return Fixture{object_from_action(a), generate_group(a).elements};
}

const GroupElement& pick(Rng& rng, const std::vector<GroupElement>& g) {
  return g[uniform_int(rng, 0, static_cast<int>(g.size()) - 1)];
}

DhxElement random_element(Rng& rng, const Fixture& s, int terms) {
  DhxElement e = DhxElement::zero(s.v);
  for (int i = 0; i < terms; ++i) e.add_term(random_term(rng, s.v, pick(rng, s.group), pick(rng, s.group)));
  return e;
}

Dense gamma_oracle(const DhxElement& e) {
  const std::size_t dim = static_cast<std::size_t>(e.v.size()) * e.v.h_size;
  Dense d = oracle::zeros(dim, dim);
  for (const auto& [k, u] : e.terms) {
    Dense g = oracle::gamma(e.v, k.second, u);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) d[i][j] += g[i][j];
  }
  return d;
}

MHFunction random_function(Rng& rng, int h) {
  MHFunction f(h);
  for (auto& x : f) x = uniform_int(rng, -3, 3);
  return f;
}

}  // namespace

TEST(Dhx, GammaMatchesOracle) {
  Fixture s = q5_setup();
  Rng rng(31);
  for (int t = 0; t < 40; ++t) {
    DhxElement e = random_element(rng, s, 3);
    Matrix op = gamma_operator(e);
    EXPECT_EQ(oracle::dense(op), gamma_oracle(e));
    VFunction g(25);
    for (auto& x : g) x = uniform_int(rng, -2, 2);
    EXPECT_EQ(gamma_apply(e, g), op.apply(g));
  }
}

TEST(Dhx, StarClosedFormMatchesComposite) {
  Fixture s = q5_setup();
  Rng rng(32);
  for (int t = 0; t < 100; ++t) {
    DhxTerm u = random_term(rng, s.v, pick(rng, s.group), pick(rng, s.group));
    DhxTerm w = random_term(rng, s.v, pick(rng, s.group), pick(rng, s.group));
    DhxTerm a = star_product(s.v, u, w), b = star_product_composite(s.v, u, w);
    EXPECT_EQ(a.alpha, b.alpha);
    EXPECT_EQ(a.beta, b.beta);
    EXPECT_EQ(describe_difference(a.u, b.u), "");
    EXPECT_TRUE(check_morphism(a.u).pass);
  }
}

TEST(Dhx, GammaIsMultiplicative) {
  Fixture s = q5_setup();
  Rng rng(33);
  for (int t = 0; t < 500; ++t) {
    DhxElement a = random_element(rng, s, 2), b = random_element(rng, s, 2);
    ASSERT_EQ(oracle::dense(gamma_operator(multiply(a, b))), oracle::mul(gamma_oracle(a), gamma_oracle(b)));
  }
}

TEST(Dhx, GammaIsInjective) {
  Fixture s = q5_setup();
  Rng rng(34);
  for (int t = 0; t < 60; ++t) {
    DhxElement e = random_element(rng, s, 4);
    EXPECT_EQ(e.terms.empty(), gamma_operator(e).is_zero());
    DhxElement d = e;
    d -= e;
    EXPECT_TRUE(d.terms.empty());
  }
}

TEST(Dhx, MomentMaps) {
  Fixture s = q5_setup();
  Rng rng(35);
  for (int t = 0; t < 30; ++t) {
    MHFunction f = random_function(rng, 5), g = random_function(rng, 5);
    Matrix l = gamma_operator(mu_l(s.v, f)), r = gamma_operator(mu_r(s.v, g));
    for (int lam = 0; lam < 5; ++lam)
      for (int v = 0; v < 5; ++v) {
        EXPECT_EQ(l.get(lam * 5 + v, lam * 5 + v), f[oracle::q5_mul(lam, v)]);
        EXPECT_EQ(r.get(lam * 5 + v, lam * 5 + v), g[lam]);
      }
    EXPECT_EQ(l.nnz() <= 25, true);
    EXPECT_TRUE(operator_equal(multiply(mu_l(s.v, f), mu_r(s.v, g)), multiply(mu_r(s.v, g), mu_l(s.v, f))));
  }
}

TEST(Dhx, MomentMapsCommuteThroughHomogeneousElements) {
  Fixture s = q5_setup();
  Rng rng(36);
  for (int t = 0; t < 40; ++t) {
    DhxTerm u = random_term(rng, s.v, pick(rng, s.group), pick(rng, s.group));
    DhxElement e = DhxElement::from_term(s.v, u);
    MHFunction f = random_function(rng, 5);
    EXPECT_TRUE(operator_equal(multiply(e, mu_l(s.v, f)), multiply(mu_l(s.v, shift(f, u.alpha)), e)));
    EXPECT_TRUE(operator_equal(multiply(e, mu_r(s.v, f)), multiply(mu_r(s.v, shift(f, u.beta)), e)));
  }
}

TEST(Dhx, ShiftOfDelta) {
  FiniteAction a = builtin_q5().as_action();
  MHFunction f = shift(delta_function(5, 0), translation_element(a, 1));
  for (int l = 0; l < 5; ++l) EXPECT_EQ(f[l], Scalar(l == 3 ? 1 : 0));
}

TEST(Dhx, PointScalar) {
  FiniteAction a = builtin_q5().as_action();
  GroupElement one = GroupElement::identity(5), g = translation_element(a, 1);
  MHFunction f = constant_function(5, Scalar(2));
  VectHMorphism p = point_scalar(f, one, one);
  EXPECT_TRUE(check_morphism(p).pass);
  for (int l = 0; l < 5; ++l) EXPECT_EQ(p.mats[l].get(0, 0), Scalar(2));
  // [1] fixes 1, 2 and 4, so a function supported there is allowed.
  MHFunction h = delta_function(5, 2);
  EXPECT_NO_THROW(point_scalar(h, one, g));
  EXPECT_THROW(point_scalar(delta_function(5, 0), one, g), PreconditionError);
}

TEST(Dhx, IhxAlgebra) {
  FiniteAction a = builtin_q5().as_action();
  auto group = generate_group(a).elements;
  Rng rng(37);
  for (int t = 0; t < 40; ++t) {
    IhxElement x = IhxElement::zero(5), y = IhxElement::zero(5);
    for (int i = 0; i < 3; ++i) {
      x.add(pick(rng, group), random_function(rng, 5));
      y.add(pick(rng, group), random_function(rng, 5));
    }
    EXPECT_EQ(ihx_operator(ihx_product(x, y)), ihx_operator(x) * ihx_operator(y));
    EXPECT_EQ(ihx_operator(ihx_sum(x, y, Scalar(-1, 2))), ihx_operator(x) - Scalar(1, 2) * ihx_operator(y));
    MHFunction f = random_function(rng, 5);
    EXPECT_EQ(ihx_apply(x, f), ihx_operator(x).apply(f));
    // φ₀ lands on the same operator since Map(H, CI) is M_H.
    EXPECT_EQ(gamma_operator(phi0(x)), ihx_operator(x));
    EXPECT_TRUE(operator_equal(phi0(ihx_product(x, y)), multiply(phi0(x), phi0(y))));
  }
  EXPECT_EQ(ihx_operator(IhxElement::unit(5)), Matrix::identity(5));
}

TEST(Dhx, Phi2MatchesOperatorLifts) {
  Rng rng(38);
  FiniteAction a = random_action(rng, 3, 2);
  auto group = generate_group(a).elements;
  for (int t = 0; t < 40; ++t) {
    VectHObject v = random_object(rng, 3, uniform_int(rng, 1, 3)), w = random_object(rng, 3, uniform_int(rng, 1, 3));
    const GroupElement &al = pick(rng, group), &ga = pick(rng, group), &be = pick(rng, group);
    DhxElement e1 = DhxElement::from_term(v, random_term(rng, v, al, ga));
    DhxElement e2 = DhxElement::from_term(w, random_term(rng, w, ga, be));
    Dense want = oracle::mul(oracle::lift_first(gamma_oracle(e1), v, w), oracle::lift_second(gamma_oracle(e2), v, w));
    DhxElement p = phi2(e1, e2);
    EXPECT_EQ(oracle::dense(gamma_operator(p)), want);
    EXPECT_EQ(oracle::dense(lift_first(gamma_operator(e1), v, w)), oracle::lift_first(gamma_oracle(e1), v, w));
    EXPECT_EQ(oracle::dense(lift_second(gamma_operator(e2), v, w)), oracle::lift_second(gamma_oracle(e2), v, w));
    for (const auto& [k, u] : p.terms) EXPECT_TRUE(check_morphism(u).pass);
  }
}

TEST(Dhx, Phi2IsMultiplicative) {
  Rng rng(39);
  FiniteAction a = random_action(rng, 3, 2);
  auto group = generate_group(a).elements;
  for (int t = 0; t < 30; ++t) {
    VectHObject v = random_object(rng, 3, 2), w = random_object(rng, 3, 2);
    auto rt = [&](const VectHObject& o, const GroupElement& x, const GroupElement& y) {
      return DhxElement::from_term(o, random_term(rng, o, x, y));
    };
    const GroupElement &a1 = pick(rng, group), &g1 = pick(rng, group), &b1 = pick(rng, group);
    const GroupElement &a2 = pick(rng, group), &g2 = pick(rng, group), &b2 = pick(rng, group);
    DhxElement x1 = rt(v, a1, g1), y1 = rt(w, g1, b1), x2 = rt(v, a2, g2), y2 = rt(w, g2, b2);
    EXPECT_TRUE(operator_equal(phi2(multiply(x1, x2), multiply(y1, y2)), multiply(phi2(x1, y1), phi2(x2, y2))));
  }
  VectHObject v = random_object(rng, 3, 2), w = random_object(rng, 3, 2);
  EXPECT_TRUE(operator_equal(phi2(DhxElement::unit(v), DhxElement::unit(w)), DhxElement::unit(tensor_obj(v, w))));
}

TEST(Dhx, TermValidation) {
  Fixture s = q5_setup();
  Rng rng(40);
  DhxTerm u = random_term(rng, s.v, s.group[3], s.group[7]);
  EXPECT_NO_THROW(validate_term(s.v, u));
  DhxTerm bad = u;
  bad.alpha = s.group[4];
  EXPECT_ANY_THROW(validate_term(s.v, bad));
}
