#include "dyfrt/dhx.hpp"

#include "dyfrt/errors.hpp"

namespace dyfrt {

namespace {

VectHMorphism chain(std::initializer_list<VectHMorphism> steps) {
  auto it = steps.begin();
  VectHMorphism acc = *it++;
  for (; it != steps.end(); ++it) acc = compose(*it, acc);
  return acc;
}

bool all_zero(const VectHMorphism& f) {
  for (const auto& m : f.mats)
    if (!m.is_zero()) return false;
  return true;
}

bool all_zero(const MHFunction& f) {
  for (const auto& x : f)
    if (!is_zero(x)) return false;
  return true;
}

}  // namespace

MHFunction constant_function(int h_size, const Scalar& c) { return MHFunction(h_size, c); }

MHFunction delta_function(int h_size, int lambda) {
  MHFunction f(h_size);
  f.at(lambda) = 1;
  return f;
}

MHFunction shift(const MHFunction& f, const GroupElement& alpha) {
  MHFunction g(f.size());
  for (int l = 0; l < alpha.size(); ++l) g[l] = f[alpha.apply(l)];
  return g;
}

VectHObject dhx_source(const VectHObject& v, const GroupElement& beta) { return tensor_obj(v, point_object(beta)); }
VectHObject dhx_target(const GroupElement& alpha, const VectHObject& v) { return tensor_obj(point_object(alpha), v); }

DhxElement DhxElement::zero(const VectHObject& v) { return DhxElement{v, {}}; }

DhxElement DhxElement::unit(const VectHObject& v) {
  GroupElement one = GroupElement::identity(v.h_size);
  DhxElement e{v, {}};
  e.terms.emplace(Degree{one, one}, VectHMorphism{dhx_source(v, one), dhx_target(one, v),
                                                  std::vector<Matrix>(v.h_size, Matrix::identity(v.size()))});
  return e;
}

DhxElement DhxElement::from_term(const VectHObject& v, const DhxTerm& t) {
  DhxElement e{v, {}};
  e.add_term(t);
  return e;
}

void DhxElement::add_term(const DhxTerm& t) {
  Degree key{t.alpha, t.beta};
  auto it = terms.find(key);
  if (it == terms.end()) {
    if (!all_zero(t.u)) terms.emplace(std::move(key), t.u);
    return;
  }
  it->second = dyfrt::add(it->second, t.u);
  if (all_zero(it->second)) terms.erase(it);
}

DhxElement& DhxElement::operator+=(const DhxElement& o) {
  if (!(v == o.v)) throw StructuralError("DhxElement sum: different V");
  for (const auto& [k, u] : o.terms) add_term(DhxTerm{k.first, k.second, u});
  return *this;
}

DhxElement& DhxElement::operator-=(const DhxElement& o) { return *this += o.scaled(Scalar(-1)); }

DhxElement DhxElement::scaled(const Scalar& c) const {
  DhxElement e{v, {}};
  if (is_zero(c)) return e;
  for (const auto& [k, u] : terms) e.terms.emplace(k, dyfrt::scale(c, u));
  return e;
}

void validate_term(const VectHObject& v, const DhxTerm& t) {
  if (!(t.u.source == dhx_source(v, t.beta)) || !(t.u.target == dhx_target(t.alpha, v)))
    throw StructuralError("Dhx term: morphism must map V⊗{β} to {α}⊗V");
  auto r = check_morphism(t.u);
  if (!r.pass) throw PreconditionError("Dhx term: support condition fails at " + r.witness);
}

DhxTerm star_product(const VectHObject& v, const DhxTerm& u, const DhxTerm& w) {
  DhxTerm out{u.alpha * w.alpha, u.beta * w.beta, {}};
  out.u.source = dhx_source(v, out.beta);
  out.u.target = dhx_target(out.alpha, v);
  out.u.mats.reserve(v.h_size);
  for (int l = 0; l < v.h_size; ++l) out.u.mats.push_back(u.u.mats[l] * w.u.mats[u.beta.apply(l)]);
  return out;
}

DhxTerm star_product_composite(const VectHObject& v, const DhxTerm& u, const DhxTerm& w) {
  const VectHObject a = point_object(u.alpha), b = point_object(u.beta);
  const VectHObject c = point_object(w.alpha), d = point_object(w.beta);
  const GroupElement ac = u.alpha * w.alpha, bd = u.beta * w.beta;
  const VectHMorphism idv = identity(v);
  VectHMorphism m = chain({tensor_mor(idv, point_iso(point_object(bd), tensor_obj(d, b))), assoc_inv(v, d, b),
                           tensor_mor(w.u, identity(b)), assoc(c, v, b), tensor_mor(identity(c), u.u),
                           assoc_inv(c, a, v), tensor_mor(point_iso(tensor_obj(c, a), point_object(ac)), idv)});
  return DhxTerm{ac, bd, std::move(m)};
}

DhxElement multiply(const DhxElement& a, const DhxElement& b) {
  if (!(a.v == b.v)) throw StructuralError("DhxElement product: different V");
  DhxElement out{a.v, {}};
  for (const auto& [ka, ua] : a.terms)
    for (const auto& [kb, ub] : b.terms)
      out.add_term(star_product(a.v, DhxTerm{ka.first, ka.second, ua}, DhxTerm{kb.first, kb.second, ub}));
  return out;
}

VFunction gamma_apply(const DhxElement& e, const VFunction& g) {
  const std::size_t n = e.v.size();
  if (g.size() != n * e.v.h_size) throw StructuralError("gamma_apply: function has wrong length");
  VFunction out(g.size());
  for (const auto& [k, u] : e.terms) {
    for (int l = 0; l < e.v.h_size; ++l) {
      const std::size_t base = static_cast<std::size_t>(k.second.apply(l)) * n;
      for (std::size_t row = 0; row < n; ++row)
        for (const auto& en : u.mats[l].row(row)) out[l * n + row] += en.val * g[base + en.col];
    }
  }
  return out;
}

Matrix gamma_operator(const DhxElement& e) {
  const std::size_t n = e.v.size(), dim = n * e.v.h_size;
  std::vector<Triplet> t;
  for (const auto& [k, u] : e.terms)
    for (int l = 0; l < e.v.h_size; ++l) {
      const std::size_t base = static_cast<std::size_t>(k.second.apply(l)) * n;
      for (std::size_t row = 0; row < n; ++row)
        for (const auto& en : u.mats[l].row(row)) t.push_back({l * n + row, base + en.col, en.val});
    }
  return Matrix::from_triplets(dim, dim, std::move(t));
}

bool operator_equal(const DhxElement& a, const DhxElement& b) {
  return a.v == b.v && gamma_operator(a) == gamma_operator(b);
}

DhxTerm mu_l_term(const VectHObject& v, const MHFunction& f) {
  GroupElement one = GroupElement::identity(v.h_size);
  DhxTerm t{one, one, zero_morphism(dhx_source(v, one), dhx_target(one, v))};
  for (int l = 0; l < v.h_size; ++l)
    for (int x = 0; x < v.size(); ++x) t.u.mats[l].set(x, x, f.at(v.apply(l, x)));
  return t;
}

DhxTerm mu_r_term(const VectHObject& v, const MHFunction& f) {
  GroupElement one = GroupElement::identity(v.h_size);
  DhxTerm t{one, one, zero_morphism(dhx_source(v, one), dhx_target(one, v))};
  for (int l = 0; l < v.h_size; ++l)
    for (int x = 0; x < v.size(); ++x) t.u.mats[l].set(x, x, f.at(l));
  return t;
}

DhxElement mu_l(const VectHObject& v, const MHFunction& f) { return DhxElement::from_term(v, mu_l_term(v, f)); }
DhxElement mu_r(const VectHObject& v, const MHFunction& f) { return DhxElement::from_term(v, mu_r_term(v, f)); }

VectHMorphism point_scalar(const MHFunction& f, const GroupElement& alpha, const GroupElement& beta) {
  VectHMorphism out = zero_morphism(point_object(beta), point_object(alpha));
  for (int l = 0; l < alpha.size(); ++l) {
    if (is_zero(f.at(l))) continue;
    if (alpha.apply(l) != beta.apply(l))
      throw PreconditionError("point_scalar: f(" + std::to_string(l) + ") ≠ 0 but λα ≠ λβ");
    out.mats[l].set(0, 0, f[l]);
  }
  return out;
}

IhxElement IhxElement::zero(int h_size) { return IhxElement{h_size, {}}; }

IhxElement IhxElement::unit(int h_size) {
  return monomial(constant_function(h_size, Scalar(1)), GroupElement::identity(h_size));
}

IhxElement IhxElement::monomial(const MHFunction& f, const GroupElement& alpha) {
  IhxElement a{alpha.size(), {}};
  a.add(alpha, f);
  return a;
}

void IhxElement::add(const GroupElement& alpha, const MHFunction& f) {
  auto it = terms.find(alpha);
  if (it == terms.end()) {
    if (!all_zero(f)) terms.emplace(alpha, f);
    return;
  }
  for (std::size_t l = 0; l < f.size(); ++l) it->second[l] += f[l];
  if (all_zero(it->second)) terms.erase(it);
}

IhxElement ihx_product(const IhxElement& a, const IhxElement& b) {
  IhxElement out{a.h_size, {}};
  for (const auto& [alpha, f] : a.terms) {
    for (const auto& [beta, g] : b.terms) {
      MHFunction tg = shift(g, alpha);
      for (std::size_t l = 0; l < tg.size(); ++l) tg[l] *= f[l];
      out.add(alpha * beta, tg);
    }
  }
  return out;
}

IhxElement ihx_sum(const IhxElement& a, const IhxElement& b, const Scalar& cb) {
  IhxElement out = a;
  for (const auto& [beta, g] : b.terms) {
    MHFunction s = g;
    for (auto& x : s) x *= cb;
    out.add(beta, s);
  }
  return out;
}

MHFunction ihx_apply(const IhxElement& a, const MHFunction& f) {
  MHFunction out(a.h_size);
  for (const auto& [alpha, c] : a.terms)
    for (int l = 0; l < a.h_size; ++l) out[l] += c[l] * f[alpha.apply(l)];
  return out;
}

Matrix ihx_operator(const IhxElement& a) {
  std::vector<Triplet> t;
  for (const auto& [alpha, c] : a.terms)
    for (int l = 0; l < a.h_size; ++l)
      if (!is_zero(c[l])) t.push_back({static_cast<std::size_t>(l), static_cast<std::size_t>(alpha.apply(l)), c[l]});
  return Matrix::from_triplets(a.h_size, a.h_size, std::move(t));
}

DhxElement phi0(const IhxElement& a) {
  VectHObject i = unit_obj(a.h_size);
  DhxElement out{i, {}};
  for (const auto& [alpha, c] : a.terms) {
    DhxTerm t{alpha, alpha, zero_morphism(dhx_source(i, alpha), dhx_target(alpha, i))};
    for (int l = 0; l < a.h_size; ++l) t.u.mats[l].set(0, 0, c[l]);
    out.add_term(t);
  }
  return out;
}

DhxTerm box_gamma(const VectHObject& v, const VectHObject& w, const DhxTerm& tv, const DhxTerm& tw) {
  if (!(tv.beta == tw.alpha)) throw StructuralError("box_gamma: inner degrees differ");
  const VectHObject a = point_object(tv.alpha), g = point_object(tv.beta), b = point_object(tw.beta);
  VectHMorphism m = chain({assoc(v, w, b), tensor_mor(identity(v), tw.u), assoc_inv(v, g, w),
                           tensor_mor(tv.u, identity(w)), assoc(a, v, w)});
  return DhxTerm{tv.alpha, tw.beta, std::move(m)};
}

DhxElement phi2(const DhxElement& e1, const DhxElement& e2) {
  DhxElement out{tensor_obj(e1.v, e2.v), {}};
  for (const auto& [k1, u1] : e1.terms)
    for (const auto& [k2, u2] : e2.terms)
      if (k1.second == k2.first)
        out.add_term(box_gamma(e1.v, e2.v, DhxTerm{k1.first, k1.second, u1}, DhxTerm{k2.first, k2.second, u2}));
  return out;
}

Matrix lift_first(const Matrix& u, const VectHObject& v, const VectHObject& w) {
  const std::size_t nv = v.size(), nw = w.size(), h = v.h_size;
  // c[(μ, v1)][v1'] = Σ_ν u[(μ,v1),(ν,v1')]: U applied to the constant function v1'.
  std::vector<std::vector<Scalar>> c(h * nv, std::vector<Scalar>(nv));
  for (std::size_t r = 0; r < h * nv; ++r)
    for (const auto& e : u.row(r)) c[r][e.col % nv] += e.val;
  std::vector<Triplet> t;
  for (std::size_t l = 0; l < h; ++l)
    for (std::size_t v2 = 0; v2 < nw; ++v2) {
      const std::size_t mu = w.apply(static_cast<int>(l), static_cast<int>(v2));
      for (std::size_t v1 = 0; v1 < nv; ++v1)
        for (std::size_t v1p = 0; v1p < nv; ++v1p)
          if (!is_zero(c[mu * nv + v1][v1p]))
            t.push_back({(l * nv + v1) * nw + v2, (l * nv + v1p) * nw + v2, c[mu * nv + v1][v1p]});
    }
  const std::size_t dim = h * nv * nw;
  return Matrix::from_triplets(dim, dim, std::move(t));
}

Matrix lift_second(const Matrix& u, const VectHObject& v, const VectHObject& w) {
  const std::size_t nv = v.size(), nw = w.size(), h = v.h_size;
  std::vector<Triplet> t;
  for (std::size_t r = 0; r < h * nw; ++r) {
    const std::size_t l = r / nw, v2 = r % nw;
    for (const auto& e : u.row(r)) {
      const std::size_t mu = e.col / nw, v2p = e.col % nw;
      for (std::size_t v1 = 0; v1 < nv; ++v1) t.push_back({(l * nv + v1) * nw + v2, (mu * nv + v1) * nw + v2p, e.val});
    }
  }
  const std::size_t dim = h * nv * nw;
  return Matrix::from_triplets(dim, dim, std::move(t));
}

}  // namespace dyfrt
