#include "dyfrt/frt.hpp"

#include <initializer_list>

#include "dyfrt/errors.hpp"

namespace dyfrt {

namespace {

VectHMorphism chain(std::initializer_list<VectHMorphism> steps) {
  auto it = steps.begin();
  VectHMorphism acc = *it++;
  for (; it != steps.end(); ++it) acc = compose(*it, acc);
  return acc;
}

GroupElement one_of(int h) { return GroupElement::identity(h); }

MHFunction ones(int h) { return constant_function(h, Scalar(1)); }

Matrix delta_matrix(int h, int l, int m) {
  Matrix e(h, h);
  e.set(l, m, Scalar(1));
  return e;
}

IhxElement counit_letter(const FiniteAction& a, const Letter& l) {
  const int h = a.h_size();
  switch (l.kind) {
    case LetterKind::Gen:
      if (l.a != l.b) return IhxElement::zero(h);
      return IhxElement::monomial(ones(h), translation_element(a, l.a));
    case LetterKind::GenInv:
      if (l.a != l.b) return IhxElement::zero(h);
      return IhxElement::monomial(ones(h), translation_element(a, l.b).inverse());
    case LetterKind::Scalar2:
      break;
  }
  MHFunction m(h);
  for (int x = 0; x < h; ++x) m[x] = l.xi.get(x, x);
  return IhxElement::monomial(m, one_of(h));
}

// X -> {[x]} and {[x]} -> X through the one-point subobject.
VectHMorphism to_point(const FiniteAction& a, const VectHObject& x, int e) {
  GroupElement g = translation_element(a, e);
  return compose(point_iso(point_subobject(x, e), point_object(g)), point_projection(x, e));
}

VectHMorphism from_point(const FiniteAction& a, const VectHObject& x, int e) {
  GroupElement g = translation_element(a, e);
  return compose(point_inclusion(x, e), point_iso(point_object(g), point_subobject(x, e)));
}

class CounitChannel : public Channel {
 public:
  explicit CounitChannel(FiniteAction a) : a_(std::move(a)), obj_(unit_obj(a_.h_size())) {}
  std::string name() const override { return "counit"; }
  const VectHObject& object() const override { return obj_; }
  DhxElement eval_word(const Word& w) const override { return phi0(counit(a_, w)); }

 private:
  FiniteAction a_;
  VectHObject obj_;
};

class RepChannel : public Channel {
 public:
  RepChannel(std::string name, DynRep rep) : name_(std::move(name)), rep_(std::move(rep)) {}
  std::string name() const override { return name_; }
  const VectHObject& object() const override { return rep_.v; }
  DhxElement eval_word(const Word& w) const override { return DhxElement::from_term(rep_.v, term(w, 0)); }

 private:
  // Image of the suffix w[from..]; suffixes are cached since generator
  // families share them heavily.
  const DhxTerm& term(const Word& w, std::size_t from) const {
    Word key(w.begin() + static_cast<std::ptrdiff_t>(from), w.end());
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    DhxTerm t = from == w.size() ? DhxTerm{one_of(rep_.v.h_size), one_of(rep_.v.h_size),
                                           DhxElement::unit(rep_.v).terms.begin()->second}
                                 : star_product(rep_.v, letter_image(rep_, w[from]), term(w, from + 1));
    return cache_.emplace(std::move(key), std::move(t)).first->second;
  }

  std::string name_;
  DynRep rep_;
  mutable std::map<Word, DhxTerm, WordLess> cache_;
};

class TensorChannel : public Channel {
 public:
  TensorChannel(std::string name, DynRep r1, DynRep r2)
      : name_(std::move(name)),
        x_size_(r1.action.x_size()),
        obj_(tensor_obj(r1.v, r2.v)),
        c1_("first", std::move(r1)),
        c2_("second", std::move(r2)) {}
  std::string name() const override { return name_; }
  const VectHObject& object() const override { return obj_; }
  DhxElement eval_word(const Word& w) const override {
    DhxElement out = DhxElement::zero(obj_);
    AlgebraElement e = AlgebraElement::raw_word(obj_.h_size, w);
    for (const auto& [p, c] : coproduct(e, x_size_))
      out += phi2(c1_.eval_word(p.first), c2_.eval_word(p.second)).scaled(c);
    return out;
  }

 private:
  std::string name_;
  int x_size_;
  VectHObject obj_;
  RepChannel c1_, c2_;
};

bool kills(const DhxElement& img) { return img.terms.empty() || gamma_operator(img).is_zero(); }

}  // namespace

// ---------------------------------------------------------------- counit

IhxElement counit(const FiniteAction& a, const Word& w) {
  IhxElement acc = IhxElement::unit(a.h_size());
  for (const Letter& l : w) {
    acc = ihx_product(acc, counit_letter(a, l));
    if (acc.terms.empty()) break;
  }
  return acc;
}

IhxElement counit(const FiniteAction& a, const AlgebraElement& e) {
  IhxElement out = IhxElement::zero(a.h_size());
  for (const auto& [w, c] : e.terms()) out = ihx_sum(out, counit(a, w), c);
  return out;
}

// ---------------------------------------------------------------- relations

AlgebraElement rll_generator(const SigmaContext& ctx, int a, int b, int c, int d) {
  const int h = ctx.x.h_size, m = ctx.x.size();
  const MHFunction one = ones(h);
  AlgebraElement e(h);
  for (int x = 0; x < m; ++x) {
    for (int y = 0; y < m; ++y) {
      MHFunction f(h), g(h);
      for (int l = 0; l < h; ++l) {
        f[l] = ctx.sigma.mats[l].get(a * m + c, x * m + y);
        g[l] = ctx.sigma.mats[l].get(x * m + y, b * m + d);
      }
      e.add_word({Letter::scalar(f, one), Letter::gen(y, d), Letter::gen(x, b)}, Scalar(1));
      e.add_word({Letter::scalar(one, g), Letter::gen(c, y), Letter::gen(a, x)}, Scalar(-1));
    }
  }
  return e;
}

std::vector<IdealGenerator> ideal_generators(const SigmaContext& ctx, const FiniteAction& a) {
  const int h = a.h_size(), m = a.x_size();
  if (ctx.x.h_size != h || ctx.x.size() != m) throw StructuralError("ideal_generators: σ and action disagree");
  std::vector<IdealGenerator> out;
  const MHFunction one = ones(h);
  auto idx = [](int i, int j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; };

  // (1) over the delta basis E_(λ,μ) of M_H⊗M_H.
  const int n = h * h;
  const Scalar c(3, 2);
  for (int i = 0; i < n; ++i) {
    Matrix ei = delta_matrix(h, i / h, i % h);
    for (int j = 0; j < n; ++j) {
      Matrix ej = delta_matrix(h, j / h, j % h);
      AlgebraElement s = AlgebraElement::raw_word(h, {Letter::scalar(ei)});
      s.add_raw_word({Letter::scalar(ej)}, Scalar(1));
      s.add_raw_word({Letter::scalar(ei + ej)}, Scalar(-1));
      out.push_back({1, "(1) sum E" + idx(i / h, i % h) + " E" + idx(j / h, j % h), std::move(s)});
      AlgebraElement p = AlgebraElement::raw_word(h, {Letter::scalar(ei), Letter::scalar(ej)});
      p.add_raw_word({Letter::scalar(i == j ? ei : Matrix(h, h))}, Scalar(-1));
      out.push_back({1, "(1) product E" + idx(i / h, i % h) + " E" + idx(j / h, j % h), std::move(p)});
    }
    AlgebraElement sc = AlgebraElement::raw_word(h, {Letter::scalar(c * ei)});
    sc.add_raw_word({Letter::scalar(ei)}, -c);
    out.push_back({1, "(1) scalar E" + idx(i / h, i % h), std::move(sc)});
  }

  // (2)
  for (int x = 0; x < m; ++x) {
    for (int y = 0; y < m; ++y) {
      AlgebraElement r(h), s(h);
      for (int z = 0; z < m; ++z) {
        r.add_word({Letter::gen(x, z), Letter::gen_inv(z, y)}, Scalar(1));
        s.add_word({Letter::gen_inv(x, z), Letter::gen(z, y)}, Scalar(1));
      }
      if (x == y) {
        r.add_word({}, Scalar(-1));
        s.add_word({}, Scalar(-1));
      }
      out.push_back({2, "(2) L Linv a=" + std::to_string(x) + " b=" + std::to_string(y), std::move(r)});
      out.push_back({2, "(2) Linv L a=" + std::to_string(x) + " b=" + std::to_string(y), std::move(s)});
    }
  }

  // (3) over the delta basis of M_H.
  for (int x = 0; x < m; ++x) {
    const GroupElement gx = translation_element(a, x);
    for (int y = 0; y < m; ++y) {
      const GroupElement gy = translation_element(a, y);
      const std::string ab = " a=" + std::to_string(x) + " b=" + std::to_string(y);
      for (int l = 0; l < h; ++l) {
        const MHFunction f = delta_function(h, l);
        const std::string tag = ab + " f=δ" + std::to_string(l);
        AlgebraElement g1(h), g2(h), g3(h), g4(h);
        g1.add_word({Letter::scalar(shift(f, gx), one), Letter::gen(x, y)}, Scalar(1));
        g1.add_word({Letter::gen(x, y), Letter::scalar(f, one)}, Scalar(-1));
        g2.add_word({Letter::scalar(one, shift(f, gy)), Letter::gen(x, y)}, Scalar(1));
        g2.add_word({Letter::gen(x, y), Letter::scalar(one, f)}, Scalar(-1));
        g3.add_word({Letter::scalar(f, one), Letter::gen_inv(x, y)}, Scalar(1));
        g3.add_word({Letter::gen_inv(x, y), Letter::scalar(shift(f, gy), one)}, Scalar(-1));
        g4.add_word({Letter::scalar(one, f), Letter::gen_inv(x, y)}, Scalar(1));
        g4.add_word({Letter::gen_inv(x, y), Letter::scalar(one, shift(f, gx))}, Scalar(-1));
        out.push_back({3, "(3) left L" + tag, std::move(g1)});
        out.push_back({3, "(3) right L" + tag, std::move(g2)});
        out.push_back({3, "(3) left Linv" + tag, std::move(g3)});
        out.push_back({3, "(3) right Linv" + tag, std::move(g4)});
      }
    }
  }

  // (4)
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      for (int z = 0; z < m; ++z)
        for (int w = 0; w < m; ++w)
          out.push_back({4,
                         "(4) a=" + std::to_string(x) + " b=" + std::to_string(y) + " c=" + std::to_string(z) +
                             " d=" + std::to_string(w),
                         rll_generator(ctx, x, y, z, w)});

  // (5)
  AlgebraElement five = AlgebraElement::unit(h);
  five.add_raw_word({Letter::scalar(one, one)}, Scalar(-1));
  out.push_back({5, "(5) ∅ - 1⊗1", std::move(five)});
  return out;
}

// ---------------------------------------------------------------- representations

bool same_generator_images(const DynRep& p, const DynRep& q, std::string* witness) {
  auto report = [&](const std::string& s) {
    if (witness) *witness = s;
    return false;
  };
  if (!(p.v == q.v)) return report("carrier objects differ");
  if (p.l_images.size() != q.l_images.size() || p.linv_images.size() != q.linv_images.size())
    return report("image tables have different sizes");
  const int m = p.action.x_size();
  auto cmp = [&](const std::vector<DhxTerm>& x, const std::vector<DhxTerm>& y, const char* tag) -> bool {
    for (std::size_t i = 0; i < x.size(); ++i) {
      const std::string where = std::string(tag) + std::to_string(i / m) + std::to_string(i % m);
      if (!(x[i].alpha == y[i].alpha) || !(x[i].beta == y[i].beta)) return report(where + ": degrees differ");
      if (!(x[i].u == y[i].u)) return report(where + ": " + describe_difference(x[i].u, y[i].u));
    }
    return true;
  };
  return cmp(p.l_images, q.l_images, "L") && cmp(p.linv_images, q.linv_images, "Linv");
}

DhxTerm scalar_image(const VectHObject& v, const Matrix& xi) {
  const GroupElement one = one_of(v.h_size);
  DhxTerm t{one, one, zero_morphism(dhx_source(v, one), dhx_target(one, v))};
  for (int l = 0; l < v.h_size; ++l)
    for (int x = 0; x < v.size(); ++x) t.u.mats[l].set(x, x, xi.get(v.apply(l, x), l));
  return t;
}

DhxTerm letter_image(const DynRep& rep, const Letter& l) {
  const int m = rep.action.x_size();
  switch (l.kind) {
    case LetterKind::Gen:
      return rep.l_images.at(static_cast<std::size_t>(l.a) * m + l.b);
    case LetterKind::GenInv:
      return rep.linv_images.at(static_cast<std::size_t>(l.a) * m + l.b);
    case LetterKind::Scalar2:
      break;
  }
  return scalar_image(rep.v, l.xi);
}

DhxElement evaluate(const DynRep& rep, const AlgebraElement& e) { return RepChannel("rep", rep).eval(e); }

DynRep g_functor(const FiniteAction& a, const LOperator& l) {
  const int m = a.x_size();
  if (l.x.size() != m || l.x.h_size != a.h_size()) throw StructuralError("g_functor: L-operator and action disagree");
  DynRep rep{a, l.v, {}, {}};
  const VectHMorphism idv = identity(l.v);
  for (int x = 0; x < m; ++x) {
    const GroupElement gx = translation_element(a, x);
    const VectHMorphism left = to_point(a, l.x, x);
    for (int y = 0; y < m; ++y) {
      const GroupElement gy = translation_element(a, y);
      const VectHMorphism right = from_point(a, l.x, y);
      VectHMorphism u = chain({tensor_mor(idv, right), l.l, tensor_mor(left, idv)});
      rep.l_images.push_back({gx, gy, std::move(u)});
      VectHMorphism w = chain({tensor_mor(right, idv), l.l_inv, tensor_mor(idv, left)});
      const GroupElement alpha = gx.inverse(), beta = gy.inverse();
      rep.linv_images.push_back({beta, alpha, wedge(l.v, w, alpha, beta)});
    }
  }
  return rep;
}

LOperator f_functor(const DynRep& rep) {
  const FiniteAction& a = rep.action;
  const int m = a.x_size();
  const VectHObject x = object_from_action(a);
  const VectHObject& v = rep.v;
  const VectHMorphism idv = identity(v);
  VectHMorphism l = zero_morphism(tensor_obj(v, x), tensor_obj(x, v));
  VectHMorphism li = zero_morphism(tensor_obj(x, v), tensor_obj(v, x));
  for (int p = 0; p < m; ++p) {
    const VectHMorphism inc = from_point(a, x, p);
    for (int q = 0; q < m; ++q) {
      const VectHMorphism proj = to_point(a, x, q);
      const DhxTerm& t = rep.l_images.at(static_cast<std::size_t>(p) * m + q);
      validate_term(v, t);
      l = add(l, chain({tensor_mor(idv, proj), t.u, tensor_mor(inc, idv)}));
      const DhxTerm& ti = rep.linv_images.at(static_cast<std::size_t>(p) * m + q);
      validate_term(v, ti);
      li = add(li, chain({tensor_mor(proj, idv), vee(v, ti.u, ti.beta, ti.alpha), tensor_mor(idv, inc)}));
    }
  }
  return LOperator{x, v, std::move(l), std::move(li)};
}

LOperator f_functor(const SigmaContext& ctx, const DynRep& rep) {
  RepChannel ch("rep", rep);
  CheckResult r = certify_kills_ideal(ch, ideal_generators(ctx, rep.action));
  if (!r.pass) throw PreconditionError("f_functor: generator images do not kill the ideal at " + r.witness);
  return f_functor(rep);
}

DynRep basic_representation(const SigmaContext& ctx, const FiniteAction& a) {
  const int m = a.x_size(), h = a.h_size();
  DynRep rep{a, ctx.x, {}, {}};
  for (int x = 0; x < m; ++x) {
    const GroupElement gx = translation_element(a, x);
    for (int y = 0; y < m; ++y) {
      const GroupElement gy = translation_element(a, y);
      DhxTerm t{gx, gy, zero_morphism(dhx_source(ctx.x, gy), dhx_target(gx, ctx.x))};
      DhxTerm ti{gy.inverse(), gx.inverse(),
                 zero_morphism(dhx_source(ctx.x, gx.inverse()), dhx_target(gy.inverse(), ctx.x))};
      for (int l = 0; l < h; ++l) {
        const int shifted = gx.inverse().apply(l);
        for (int r = 0; r < m; ++r) {
          for (int c = 0; c < m; ++c) {
            Scalar s = ctx.sigma.mats[l].get(x * m + r, c * m + y);
            if (!is_zero(s)) t.u.mats[l].set(r, c, s);
            Scalar si = ctx.sigma_inv.mats[shifted].get(r * m + x, y * m + c);
            if (!is_zero(si)) ti.u.mats[l].set(r, c, si);
          }
        }
      }
      rep.l_images.push_back(std::move(t));
      rep.linv_images.push_back(std::move(ti));
    }
  }
  return rep;
}

DynRep trivial_representation(const FiniteAction& a) {
  const int m = a.x_size();
  const VectHObject i = unit_obj(a.h_size());
  DynRep rep{a, i, {}, {}};
  auto image = [&](const Letter& l, const GroupElement& alpha, const GroupElement& beta) {
    DhxElement e = phi0(counit(a, Word{l}));
    if (e.terms.empty()) return DhxTerm{alpha, beta, zero_morphism(dhx_source(i, beta), dhx_target(alpha, i))};
    const auto& [k, u] = *e.terms.begin();
    return DhxTerm{k.first, k.second, u};
  };
  for (int x = 0; x < m; ++x) {
    const GroupElement gx = translation_element(a, x);
    for (int y = 0; y < m; ++y) {
      const GroupElement gy = translation_element(a, y);
      rep.l_images.push_back(image(Letter::gen(x, y), gx, gy));
      rep.linv_images.push_back(image(Letter::gen_inv(x, y), gy.inverse(), gx.inverse()));
    }
  }
  return rep;
}

DhxElement pi_from_loperator(const SigmaContext& ctx, const FiniteAction& a, const LOperator& l,
                             const AlgebraElement& e) {
  CheckResult r = check_rll(ctx, l);
  if (!r.pass) throw PreconditionError("pi_from_loperator: L-operator fails RLL at " + r.witness);
  return evaluate(g_functor(a, l), e);
}

// ---------------------------------------------------------------- duality

VectHMorphism vee(const VectHObject& v, const VectHMorphism& u, const GroupElement& alpha, const GroupElement& beta) {
  if (!(u.source == dhx_source(v, alpha)) || !(u.target == dhx_target(beta, v)))
    throw StructuralError("vee: morphism must map V⊗{α} to {β}⊗V");
  VectHMorphism out{tensor_obj(point_object(beta.inverse()), v), tensor_obj(v, point_object(alpha.inverse())), {}};
  out.mats.reserve(v.h_size);
  const GroupElement ai = alpha.inverse();
  for (int l = 0; l < v.h_size; ++l) out.mats.push_back(u.mats[ai.apply(l)]);
  return out;
}

VectHMorphism wedge(const VectHObject& v, const VectHMorphism& w, const GroupElement& alpha, const GroupElement& beta) {
  if (!(w.source == tensor_obj(point_object(beta.inverse()), v)) ||
      !(w.target == tensor_obj(v, point_object(alpha.inverse()))))
    throw StructuralError("wedge: morphism must map {β^-1}⊗V to V⊗{α^-1}");
  VectHMorphism out{dhx_source(v, alpha), dhx_target(beta, v), {}};
  out.mats.reserve(v.h_size);
  for (int l = 0; l < v.h_size; ++l) out.mats.push_back(w.mats[alpha.apply(l)]);
  return out;
}

VectHMorphism vee_composite(const VectHObject& v, const VectHMorphism& u, const GroupElement& alpha,
                            const GroupElement& beta) {
  if (!(u.source == dhx_source(v, alpha)) || !(u.target == dhx_target(beta, v)))
    throw StructuralError("vee: morphism must map V⊗{α} to {β}⊗V");
  const VectHObject A = point_object(alpha), Ai = point_object(alpha.inverse());
  const VectHObject B = point_object(beta), Bi = point_object(beta.inverse());
  const VectHObject I = unit_obj(v.h_size);
  const VectHObject VAi = tensor_obj(v, Ai);
  VectHMorphism inner = chain({tensor_mor(identity(v), point_iso(I, tensor_obj(A, Ai))), assoc_inv(v, A, Ai),
                               tensor_mor(u, identity(Ai)), assoc(B, v, Ai)});
  return chain({right_unit_inv(tensor_obj(Bi, v)), assoc(Bi, v, I), tensor_mor(identity(Bi), inner),
                assoc_inv(Bi, B, VAi), tensor_mor(point_iso(tensor_obj(Bi, B), I), identity(VAi)), left_unit(VAi)});
}

VectHMorphism wedge_composite(const VectHObject& v, const VectHMorphism& w, const GroupElement& alpha,
                              const GroupElement& beta) {
  const VectHObject A = point_object(alpha), Ai = point_object(alpha.inverse());
  const VectHObject B = point_object(beta), Bi = point_object(beta.inverse());
  if (!(w.source == tensor_obj(Bi, v)) || !(w.target == tensor_obj(v, Ai)))
    throw StructuralError("wedge: morphism must map {β^-1}⊗V to V⊗{α^-1}");
  const VectHObject I = unit_obj(v.h_size);
  const VectHObject VA = tensor_obj(v, A), VAi = tensor_obj(v, Ai), BV = tensor_obj(B, v);
  const VectHObject VA_Ai = tensor_obj(VA, Ai), BV_Ai = tensor_obj(BV, Ai);
  const VectHObject BBi = tensor_obj(B, Bi), BiB = tensor_obj(Bi, B);
  // B'((VA)A') -> B'((BV)A')
  VectHMorphism braces = chain(
      {tensor_mor(identity(Bi), compose(tensor_mor(identity(v), point_iso(tensor_obj(A, Ai), I)), assoc(v, A, Ai))),
       assoc_inv(Bi, v, I), right_unit(tensor_obj(Bi, v)), w, left_unit_inv(VAi),
       tensor_mor(point_iso(I, BiB), identity(VAi)), assoc(Bi, B, VAi), tensor_mor(identity(Bi), assoc_inv(B, v, Ai))});
  // (VA)A' -> (BV)A'
  VectHMorphism bracket = chain({left_unit_inv(VA_Ai), tensor_mor(point_iso(I, BBi), identity(VA_Ai)),
                                 assoc(B, Bi, VA_Ai), tensor_mor(identity(B), braces), assoc_inv(B, Bi, BV_Ai),
                                 tensor_mor(point_iso(BBi, I), identity(BV_Ai)), left_unit(BV_Ai)});
  return chain({right_unit_inv(VA), tensor_mor(identity(VA), point_iso(I, tensor_obj(Ai, A))), assoc_inv(VA, Ai, A),
                tensor_mor(bracket, identity(A)), assoc(BV, Ai, A),
                tensor_mor(identity(BV), point_iso(tensor_obj(Ai, A), I)), right_unit(BV)});
}

std::pair<VectHMorphism, VectHMorphism> vee_star_sides(const FiniteAction& act, const VectHObject& v,
                                                       const VectHMorphism& u, const VectHMorphism& w, int a, int b,
                                                       int c) {
  const GroupElement ga = translation_element(act, a), gb = translation_element(act, b),
                     gc = translation_element(act, c);
  const GroupElement gbi = gb.inverse(), gci = gc.inverse();
  VectHMorphism lhs = compose(u, vee(v, w, gci, gbi));

  DhxTerm uv = star_product(v, DhxTerm{ga, gc, u}, DhxTerm{gbi, gci, w});
  const VectHObject A = point_object(ga), B = point_object(gb), Bi = point_object(gbi);
  const VectHObject I = unit_obj(v.h_size), One = point_object(one_of(v.h_size));
  const VectHObject AV = tensor_obj(A, v);
  VectHMorphism inner =
      chain({uv.u, tensor_mor(point_iso(point_object(uv.alpha), tensor_obj(Bi, A)), identity(v)), assoc(Bi, A, v)});
  VectHMorphism rhs =
      chain({right_unit_inv(tensor_obj(B, v)), tensor_mor(identity(tensor_obj(B, v)), point_iso(I, One)),
             assoc(B, v, One), tensor_mor(identity(B), inner), assoc_inv(B, Bi, AV),
             tensor_mor(point_iso(tensor_obj(B, Bi), I), identity(AV)), left_unit(AV)});
  return {std::move(lhs), std::move(rhs)};
}

// ---------------------------------------------------------------- channels

DhxElement Channel::eval(const AlgebraElement& e) const {
  DhxElement out = DhxElement::zero(object());
  for (const auto& [w, c] : e.terms()) out += eval_word(w).scaled(c);
  return out;
}

std::unique_ptr<Channel> counit_channel(const FiniteAction& a) { return std::make_unique<CounitChannel>(a); }

std::unique_ptr<Channel> rep_channel(std::string name, DynRep rep) {
  return std::make_unique<RepChannel>(std::move(name), std::move(rep));
}

std::unique_ptr<Channel> tensor_channel(std::string name, DynRep rep1, DynRep rep2) {
  return std::make_unique<TensorChannel>(std::move(name), std::move(rep1), std::move(rep2));
}

CheckResult certify_kills_ideal(const Channel& ch, const std::vector<IdealGenerator>& gens) {
  CheckResult r{"kills_ideal[" + ch.name() + "]", true, 0, {}};
  for (const auto& g : gens) {
    ++r.cases;
    if (!kills(ch.eval(g.element))) r.fail(g.label);
  }
  return r;
}

CheckResult certify_counit_kills_ideal(const SigmaContext& ctx, const FiniteAction& a) {
  return certify_kills_ideal(*counit_channel(a), ideal_generators(ctx, a));
}

CheckResult certify_pi_kills_ideal(const SigmaContext& ctx, const FiniteAction& a, const LOperator& l) {
  return certify_kills_ideal(RepChannel("pi", g_functor(a, l)), ideal_generators(ctx, a));
}

EvaluationBattery EvaluationBattery::build(const SigmaContext& ctx, const FiniteAction& a,
                                           const std::vector<std::pair<std::string, LOperator>>& ops) {
  const auto gens = ideal_generators(ctx, a);
  EvaluationBattery b;
  b.add_certified(counit_channel(a), gens);
  for (const auto& [name, l] : ops) b.add_certified(rep_channel(name, g_functor(a, l)), gens);
  return b;
}

CheckResult EvaluationBattery::try_add(std::unique_ptr<Channel> ch, const std::vector<IdealGenerator>& gens) {
  CheckResult r = certify_kills_ideal(*ch, gens);
  if (r.pass) {
    certs_.push_back(r);
    channels_.push_back(std::move(ch));
  }
  return r;
}

void EvaluationBattery::add_certified(std::unique_ptr<Channel> ch, const std::vector<IdealGenerator>& gens) {
  const std::string name = ch->name();
  CheckResult r = try_add(std::move(ch), gens);
  if (!r.pass) throw PreconditionError("channel " + name + " does not kill the ideal at " + r.witness);
}

EvaluationBattery::Verdict EvaluationBattery::compare(const AlgebraElement& x, const AlgebraElement& y) const {
  for (const auto& ch : channels_)
    if (!operator_equal(ch->eval(x), ch->eval(y))) return {true, ch->name()};
  return {};
}

bool BialgebroidReport::pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

BialgebroidReport check_bialgebroid_axioms(const SigmaContext&, const FiniteAction& a,
                                           const EvaluationBattery& battery) {
  const int h = a.h_size(), m = a.x_size();
  std::vector<Letter> letters;
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) {
      letters.push_back(Letter::gen(x, y));
      letters.push_back(Letter::gen_inv(x, y));
    }
  for (int l = 0; l < h; ++l)
    for (int k = 0; k < h; ++k) letters.push_back(Letter::scalar(delta_matrix(h, l, k)));
  // One scalar of full rank so the non-pure-tensor split is exercised too.
  Matrix generic(h, h);
  for (int l = 0; l < h; ++l)
    for (int k = 0; k < h; ++k) generic.set(l, k, Scalar(l == k ? 2 + l : 1));
  letters.push_back(Letter::scalar(generic));

  BialgebroidReport rep;
  CheckResult co{"coassociativity", true, 0, {}};
  for (const Letter& l : letters) {
    ++co.cases;
    AlgebraElement e = AlgebraElement::word(h, {l});
    if (!(coassoc_left(e, m) == coassoc_right(e, m))) co.fail(to_string(l));
  }
  rep.checks.push_back(std::move(co));

  const MHFunction one = ones(h);
  for (const auto& ch : battery.channels()) {
    CheckResult left{"counit_left[" + ch->name() + "]", true, 0, {}},
        right{"counit_right[" + ch->name() + "]", true, 0, {}};
    const VectHObject& v = ch->object();
    for (const Letter& l : letters) {
      ++left.cases;
      ++right.cases;
      const Word w{l};
      const DhxElement target = ch->eval_word(w);
      DhxElement sl = DhxElement::zero(v), sr = DhxElement::zero(v);
      for (const auto& [p, c] : coproduct(AlgebraElement::word(h, w), m)) {
        sl += multiply(mu_l(v, ihx_apply(counit(a, p.first), one)), ch->eval_word(p.second)).scaled(c);
        sr += multiply(mu_r(v, ihx_apply(counit(a, p.second), one)), ch->eval_word(p.first)).scaled(c);
      }
      if (!operator_equal(sl, target)) left.fail(to_string(l));
      if (!operator_equal(sr, target)) right.fail(to_string(l));
    }
    rep.checks.push_back(std::move(left));
    rep.checks.push_back(std::move(right));
  }
  return rep;
}

// ---------------------------------------------------------------- demo

bool DemoReport::pass() const {
  for (const auto& s : steps)
    if (!s.pass) return false;
  return !steps.empty();
}

DemoReport demo_nondirect_sum() {
  const Quasigroup q = builtin_q5();
  const TernarySystem t = builtin_z5_ternary();
  const DynamicalMap r = build_from_quasigroup(q, t, {0, 1, 2, 3, 4});
  const FiniteAction& a = r.action;
  const SigmaContext ctx = sigma_context_from_r(r);
  const int h = a.h_size(), m = a.x_size();
  const MHFunction one = ones(h);

  // R^{12}_{43}(λ) is the (4,3),(2,1) entry of σ_R(λ).
  MHFunction f(h);
  for (int l = 0; l < h; ++l) f[l] = ctx.sigma.mats[l].get(4 * m + 3, 2 * m + 1);

  DemoReport rep;
  rep.element = AlgebraElement::word(h, {Letter::scalar(f, one), Letter::gen(1, 1), Letter::gen(2, 2)});
  const auto g1 = translation_element(a, 1), g2 = translation_element(a, 2);
  const auto g3 = translation_element(a, 3), g4 = translation_element(a, 4);
  const GroupElement d12 = g1 * g2, d34 = g3 * g4;
  {
    auto deg = grading(a, rep.element.terms().begin()->first);
    rep.steps.push_back({"element", deg.first == d12 && deg.second == d12,
                         "v = " + to_string(rep.element.terms().begin()->first) + " in degree ([1][2],[1][2])"});
  }
  {
    MHFunction val = ihx_apply(counit(a, rep.element), one);
    rep.steps.push_back({"counit_value", val[0] == 1, "ε(v)(1)(0) = " + to_string(val[0])});
  }
  {
    rep.rewritten = move_scalars_left(rep.element - rll_generator(ctx, 4, 2, 3, 1), a);
    bool ok = !rep.rewritten.is_zero();
    int first = 0, second = 0;
    for (const auto& [w, c] : rep.rewritten.terms()) {
      auto [l, rr] = grading(a, w);
      if (l == d12) ok = false;
      if (rr == d12)
        ++first;
      else if (l == d34)
        ++second;
      else
        ok = false;
    }
    auto counit_ch = counit_channel(a);
    auto pi_ch = rep_channel("pi_sigma", basic_representation(ctx, a));
    bool agree = operator_equal(counit_ch->eval(rep.element), counit_ch->eval(rep.rewritten)) &&
                 operator_equal(pi_ch->eval(rep.element), pi_ch->eval(rep.rewritten));
    rep.steps.push_back({"rewrite", ok && agree,
                         std::to_string(first) + " words of degree ([xy],[12]) with (x,y)≠(1,2), " +
                             std::to_string(second) + " of degree ([34],·); none of degree ([12],[12])" +
                             (agree ? "" : "; channels disagree")});
  }
  {
    std::vector<std::pair<int, int>> sols;
    const GeneratorWord w12{{1, 1}, {2, 1}};
    for (int x = 0; x < m; ++x)
      for (int y = 0; y < m; ++y)
        if (same_class(a, {{x, 1}, {y, 1}}, w12)) sols.emplace_back(x, y);
    bool ok = sols.size() == 1 && sols[0] == std::make_pair(1, 2);
    std::string d = "solutions of [xy]=[12]:";
    for (auto [x, y] : sols) d += " (" + std::to_string(x) + "," + std::to_string(y) + ")";
    rep.steps.push_back({"unique_solution", ok, d});
  }
  {
    auto show = [](const GroupElement& g) {
      std::string s = "(";
      for (std::size_t i = 0; i < g.perm.size(); ++i) s += (i ? "," : "") + std::to_string(g.perm[i]);
      return s + ")";
    };
    rep.steps.push_back({"distinct_12_34", !(d12 == d34), "[12] = " + show(d12) + ", [34] = " + show(d34)});
  }
  bool all = true;
  for (const auto& s : rep.steps) all = all && s.pass;
  rep.steps.push_back({"not_direct_sum", all,
                       all ? "v ≠ 0 yet equals a sum of components of other degrees" : "an earlier step failed"});
  return rep;
}

}  // namespace dyfrt
