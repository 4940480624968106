#include "dyfrt/lop.hpp"

#include <algorithm>
#include <functional>

#include "dyfrt/errors.hpp"

namespace dyfrt {

namespace {

/// Composes morphisms in the order they are applied: chain({f, g, h}) = h∘g∘f.
VectHMorphism chain(std::initializer_list<VectHMorphism> steps) {
  auto it = steps.begin();
  VectHMorphism acc = *it++;
  for (; it != steps.end(); ++it) acc = compose(*it, acc);
  return acc;
}

CheckResult compare(std::string name, const VectHMorphism& lhs, const VectHMorphism& rhs) {
  CheckResult r{std::move(name), true, 0, {}};
  for (const auto& m : lhs.mats) r.cases += m.rows() * m.cols();
  std::string d = describe_difference(lhs, rhs);
  if (!d.empty()) r.fail(d);
  return r;
}

}  // namespace

SigmaContext make_sigma_context(const VectHObject& x, const VectHMorphism& sigma) {
  VectHObject xx = tensor_obj(x, x);
  if (!(sigma.source == xx) || !(sigma.target == xx)) throw StructuralError("sigma: must be a morphism X⊗X -> X⊗X");
  auto support = check_morphism(sigma);
  if (!support.pass) throw PreconditionError("sigma: support condition fails at " + support.witness);
  return SigmaContext{x, sigma, inverse(sigma)};
}

SigmaContext sigma_context_from_r(const DynamicalMap& r) {
  return make_sigma_context(object_from_action(r.action), sigma_from_r(r));
}

LOperator make_loperator(const VectHObject& x, const VectHObject& v, const VectHMorphism& l) {
  if (!(l.source == tensor_obj(v, x)) || !(l.target == tensor_obj(x, v)))
    throw StructuralError("L-operator: must be a morphism V⊗X -> X⊗V");
  auto support = check_morphism(l);
  if (!support.pass) throw PreconditionError("L-operator: support condition fails at " + support.witness);
  return LOperator{x, v, l, inverse(l)};
}

LOperator make_loperator(const VectHObject& x, const VectHObject& v, const VectHMorphism& l,
                         const VectHMorphism& l_inv) {
  if (!(l.source == tensor_obj(v, x)) || !(l.target == tensor_obj(x, v)))
    throw StructuralError("L-operator: must be a morphism V⊗X -> X⊗V");
  if (!(compose(l_inv, l) == identity(l.source)) || !(compose(l, l_inv) == identity(l.target)))
    throw PreconditionError("L-operator: supplied inverse is not a two-sided inverse");
  return LOperator{x, v, l, l_inv};
}

LOperator sigma_loperator(const SigmaContext& ctx) { return LOperator{ctx.x, ctx.x, ctx.sigma, ctx.sigma_inv}; }

LOperator unit_loperator(const SigmaContext& ctx) {
  const VectHObject& x = ctx.x;
  VectHMorphism l = compose(right_unit_inv(x), left_unit(x));
  VectHMorphism l_inv = compose(left_unit_inv(x), right_unit(x));
  return LOperator{x, unit_obj(x.h_size), l, l_inv};
}

CheckResult check_rll(const SigmaContext& ctx, const LOperator& lv) {
  const VectHObject &x = ctx.x, &v = lv.v;
  const VectHMorphism idx = identity(x), idv = identity(v);
  VectHMorphism lhs = chain({tensor_mor(lv.l, idx), assoc(x, v, x), tensor_mor(idx, lv.l), assoc_inv(x, x, v),
                             tensor_mor(ctx.sigma, idv), assoc(x, x, v)});
  VectHMorphism rhs = chain({assoc(v, x, x), tensor_mor(idv, ctx.sigma), assoc_inv(v, x, x), tensor_mor(lv.l, idx),
                             assoc(x, v, x), tensor_mor(idx, lv.l)});
  return compare("rll", lhs, rhs);
}

CheckResult check_yb_operator(const SigmaContext& ctx) {
  const VectHObject& x = ctx.x;
  const VectHMorphism id = identity(x), a = assoc(x, x, x), ai = assoc_inv(x, x, x);
  const VectHMorphism s1 = tensor_mor(ctx.sigma, id), s2 = tensor_mor(id, ctx.sigma);
  VectHMorphism lhs = chain({a, s2, ai, s1, a, s2});
  VectHMorphism rhs = chain({s1, a, s2, ai, s1, a});
  return compare("yang_baxter", lhs, rhs);
}

LOperator boxtimes_unchecked(const LOperator& lv, const LOperator& lw) {
  if (!(lv.x == lw.x)) throw StructuralError("boxtimes: L-operators over different X");
  const VectHObject &x = lv.x, &v = lv.v, &w = lw.v;
  const VectHMorphism idv = identity(v), idw = identity(w);
  VectHMorphism l =
      chain({assoc(v, w, x), tensor_mor(idv, lw.l), assoc_inv(v, x, w), tensor_mor(lv.l, idw), assoc(x, v, w)});
  VectHMorphism l_inv = chain(
      {assoc_inv(x, v, w), tensor_mor(lv.l_inv, idw), assoc(v, x, w), tensor_mor(idv, lw.l_inv), assoc_inv(v, w, x)});
  return LOperator{x, tensor_obj(v, w), std::move(l), std::move(l_inv)};
}

LOperator boxtimes(const SigmaContext& ctx, const LOperator& lv, const LOperator& lw) {
  for (const LOperator* op : {&lv, &lw}) {
    auto r = check_rll(ctx, *op);
    if (!r.pass) throw PreconditionError("boxtimes: factor fails RLL at " + r.witness);
  }
  return boxtimes_unchecked(lv, lw);
}

bool is_rep_morphism(const SigmaContext& ctx, const VectHMorphism& f, const LOperator& lv, const LOperator& lw) {
  if (!(f.source == lv.v) || !(f.target == lw.v)) throw StructuralError("is_rep_morphism: f must map V to W");
  const VectHMorphism idx = identity(ctx.x);
  return compose(tensor_mor(idx, f), lv.l) == compose(lw.l, tensor_mor(f, idx));
}

std::optional<VectHMorphism> find_rep_isomorphism(const SigmaContext& ctx, const LOperator& lv, const LOperator& lw,
                                                  std::size_t search_cap) {
  const VectHObject &v = lv.v, &w = lw.v;
  if (v.size() != w.size()) return std::nullopt;  // no invertible matrix exists
  const int n = v.size(), h = v.h_size;
  // Candidate permutations per λ that respect the support condition.
  std::vector<std::vector<std::vector<int>>> options(h);
  for (int l = 0; l < h; ++l) {
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    do {
      bool ok = true;
      for (int i = 0; i < n && ok; ++i) ok = w.apply(l, perm[i]) == v.apply(l, i);
      if (ok) options[l].push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (options[l].empty()) return std::nullopt;
  }
  std::size_t visited = 0;
  std::vector<std::size_t> pick(h, 0);
  while (true) {
    if (++visited > search_cap) throw OverflowError("find_rep_isomorphism: search exceeded cap");
    VectHMorphism f = zero_morphism(v, w);
    for (int l = 0; l < h; ++l)
      for (int i = 0; i < n; ++i) f.mats[l].set(options[l][pick[l]][i], i, Scalar(1));
    if (is_rep_morphism(ctx, f, lv, lw)) return f;
    int k = 0;
    while (k < h && ++pick[k] == options[k].size()) pick[k++] = 0;
    if (k == h) return std::nullopt;
  }
}

}  // namespace dyfrt
