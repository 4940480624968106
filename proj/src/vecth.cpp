#include "dyfrt/vecth.hpp"

#include "dyfrt/errors.hpp"

namespace dyfrt {

namespace {

void require_same(const VectHObject& a, const VectHObject& b, const char* what) {
  if (!(a == b)) throw StructuralError(std::string(what) + ": object mismatch");
}

void check_shape(const VectHMorphism& f) {
  validate_object(f.source);
  validate_object(f.target);
  if (f.source.h_size != f.target.h_size) throw StructuralError("morphism: source and target over different H");
  if (static_cast<int>(f.mats.size()) != f.source.h_size) throw StructuralError("morphism: expected one matrix per λ");
  for (const auto& m : f.mats)
    if (static_cast<int>(m.rows()) != f.target.size() || static_cast<int>(m.cols()) != f.source.size())
      throw StructuralError("morphism: matrix shape does not match target × source");
}

VectHMorphism reindex_identity(const VectHObject& s, const VectHObject& t) {
  require_same(s, t, "structural morphism");
  return identity(s);
}

}  // namespace

VectHObject make_object(int h_size, std::vector<std::vector<int>> act) {
  VectHObject v;
  v.h_size = h_size;
  v.n = act.empty() ? 0 : static_cast<int>(act[0].size());
  v.act = std::move(act);
  validate_object(v);
  return v;
}

void validate_object(const VectHObject& v) {
  if (v.h_size < 1 || v.n < 1) throw StructuralError("object: H and carrier must be nonempty");
  if (static_cast<int>(v.act.size()) != v.h_size) throw StructuralError("object: act needs one row per λ");
  for (const auto& row : v.act) {
    if (static_cast<int>(row.size()) != v.n) throw StructuralError("object: ragged act table");
    for (int x : row)
      if (x < 0 || x >= v.h_size) throw StructuralError("object: act entry out of range");
  }
}

VectHObject object_from_action(const FiniteAction& a) { return make_object(a.h_size(), a.table); }

VectHObject unit_obj(int h_size) {
  std::vector<std::vector<int>> act(h_size, std::vector<int>(1));
  for (int l = 0; l < h_size; ++l) act[l][0] = l;
  return make_object(h_size, std::move(act));
}

VectHObject point_object(const GroupElement& alpha) {
  std::vector<std::vector<int>> act(alpha.size(), std::vector<int>(1));
  for (int l = 0; l < alpha.size(); ++l) act[l][0] = alpha.apply(l);
  return make_object(alpha.size(), std::move(act));
}

VectHObject point_subobject(const VectHObject& v, int elem) {
  if (elem < 0 || elem >= v.size()) throw StructuralError("point_subobject: element out of range");
  std::vector<std::vector<int>> act(v.h_size, std::vector<int>(1));
  for (int l = 0; l < v.h_size; ++l) act[l][0] = v.apply(l, elem);
  return make_object(v.h_size, std::move(act));
}

VectHObject tensor_obj(const VectHObject& v, const VectHObject& w) {
  if (v.h_size != w.h_size) throw StructuralError("tensor_obj: different H");
  std::vector<std::vector<int>> act(v.h_size, std::vector<int>(static_cast<std::size_t>(v.n) * w.n));
  for (int l = 0; l < v.h_size; ++l)
    for (int a = 0; a < v.n; ++a)
      for (int b = 0; b < w.n; ++b) act[l][a * w.n + b] = v.apply(w.apply(l, b), a);
  return make_object(v.h_size, std::move(act));
}

CheckResult check_morphism(const VectHMorphism& f) {
  check_shape(f);
  CheckResult r{"support", true, 0, {}};
  for (int l = 0; l < f.source.h_size; ++l) {
    for (int w = 0; w < f.target.size(); ++w) {
      for (const auto& e : f.mats[l].row(w)) {
        ++r.cases;
        int v = static_cast<int>(e.col);
        if (f.target.apply(l, w) != f.source.apply(l, v)) {
          r.fail("λ=" + std::to_string(l) + " w=" + std::to_string(w) + " v=" + std::to_string(v) + ": entry " +
                 to_string(e.val) + " but λ·w=" + std::to_string(f.target.apply(l, w)) +
                 " ≠ λ·v=" + std::to_string(f.source.apply(l, v)));
          return r;
        }
      }
    }
  }
  return r;
}

VectHMorphism identity(const VectHObject& v) {
  return VectHMorphism{v, v, std::vector<Matrix>(v.h_size, Matrix::identity(v.size()))};
}

VectHMorphism zero_morphism(const VectHObject& source, const VectHObject& target) {
  if (source.h_size != target.h_size) throw StructuralError("zero_morphism: different H");
  return VectHMorphism{source, target, std::vector<Matrix>(source.h_size, Matrix(target.size(), source.size()))};
}

VectHMorphism compose(const VectHMorphism& g, const VectHMorphism& f) {
  require_same(f.target, g.source, "compose");
  VectHMorphism out{f.source, g.target, {}};
  out.mats.reserve(f.mats.size());
  for (std::size_t l = 0; l < f.mats.size(); ++l) out.mats.push_back(g.mats[l] * f.mats[l]);
  return out;
}

VectHMorphism add(const VectHMorphism& f, const VectHMorphism& g) {
  require_same(f.source, g.source, "add");
  require_same(f.target, g.target, "add");
  VectHMorphism out = f;
  for (std::size_t l = 0; l < f.mats.size(); ++l) out.mats[l] += g.mats[l];
  return out;
}

VectHMorphism subtract(const VectHMorphism& f, const VectHMorphism& g) {
  require_same(f.source, g.source, "subtract");
  require_same(f.target, g.target, "subtract");
  VectHMorphism out = f;
  for (std::size_t l = 0; l < f.mats.size(); ++l) out.mats[l] -= g.mats[l];
  return out;
}

VectHMorphism scale(const Scalar& c, const VectHMorphism& f) {
  VectHMorphism out = f;
  for (auto& m : out.mats) m *= c;
  return out;
}

VectHMorphism tensor_mor(const VectHMorphism& f, const VectHMorphism& g) {
  if (f.source.h_size != g.source.h_size) throw StructuralError("tensor_mor: different H");
  const int h = f.source.h_size;
  const std::size_t tg = g.target.size(), sg = g.source.size();
  VectHMorphism out{tensor_obj(f.source, g.source), tensor_obj(f.target, g.target), {}};
  out.mats.reserve(h);
  for (int l = 0; l < h; ++l) {
    std::vector<Triplet> t;
    for (std::size_t v1 = 0; v1 < tg; ++v1) {
      for (const auto& ge : g.mats[l].row(v1)) {
        const Matrix& fm = f.mats[g.source.apply(l, static_cast<int>(ge.col))];
        for (std::size_t u1 = 0; u1 < fm.rows(); ++u1)
          for (const auto& fe : fm.row(u1)) t.push_back({u1 * tg + v1, fe.col * sg + ge.col, fe.val * ge.val});
      }
    }
    out.mats.push_back(Matrix::from_triplets(out.target.size(), out.source.size(), std::move(t)));
  }
  return out;
}

VectHMorphism inverse(const VectHMorphism& f) {
  VectHMorphism out{f.target, f.source, {}};
  for (std::size_t l = 0; l < f.mats.size(); ++l) {
    auto inv = f.mats[l].inverse();
    if (!inv) throw PreconditionError("inverse: matrix at λ=" + std::to_string(l) + " is singular");
    out.mats.push_back(std::move(*inv));
  }
  return out;
}

// With row-major carriers, ((u,v),w) and (u,(v,w)) share an index and an action,
// so every constraint is an identity matrix between equal objects.
VectHMorphism assoc(const VectHObject& u, const VectHObject& v, const VectHObject& w) {
  return reindex_identity(tensor_obj(tensor_obj(u, v), w), tensor_obj(u, tensor_obj(v, w)));
}

VectHMorphism assoc_inv(const VectHObject& u, const VectHObject& v, const VectHObject& w) {
  return reindex_identity(tensor_obj(u, tensor_obj(v, w)), tensor_obj(tensor_obj(u, v), w));
}

VectHMorphism left_unit(const VectHObject& v) { return reindex_identity(tensor_obj(unit_obj(v.h_size), v), v); }
VectHMorphism left_unit_inv(const VectHObject& v) { return reindex_identity(v, tensor_obj(unit_obj(v.h_size), v)); }
VectHMorphism right_unit(const VectHObject& v) { return reindex_identity(tensor_obj(v, unit_obj(v.h_size)), v); }
VectHMorphism right_unit_inv(const VectHObject& v) { return reindex_identity(v, tensor_obj(v, unit_obj(v.h_size))); }

VectHMorphism point_inclusion(const VectHObject& v, int elem) {
  VectHMorphism out = zero_morphism(point_subobject(v, elem), v);
  for (auto& m : out.mats) m.set(elem, 0, Scalar(1));
  return out;
}

VectHMorphism point_projection(const VectHObject& v, int elem) {
  VectHMorphism out = zero_morphism(v, point_subobject(v, elem));
  for (auto& m : out.mats) m.set(0, elem, Scalar(1));
  return out;
}

VectHMorphism point_iso(const VectHObject& a, const VectHObject& b) {
  if (a.size() != 1 || b.size() != 1) throw PreconditionError("point_iso: both objects must be singletons");
  if (a.h_size != b.h_size) throw PreconditionError("point_iso: different H");
  for (int l = 0; l < a.h_size; ++l)
    if (a.apply(l, 0) != b.apply(l, 0))
      throw PreconditionError("point_iso: actions differ at λ=" + std::to_string(l) + " (" +
                              std::to_string(a.apply(l, 0)) + " vs " + std::to_string(b.apply(l, 0)) + ")");
  return VectHMorphism{a, b, std::vector<Matrix>(a.h_size, Matrix::identity(1))};
}

std::string describe_difference(const VectHMorphism& f, const VectHMorphism& g) {
  if (!(f.source == g.source) || !(f.target == g.target)) return "objects differ";
  for (std::size_t l = 0; l < f.mats.size(); ++l) {
    if (auto d = Matrix::first_difference(f.mats[l], g.mats[l])) {
      return "λ=" + std::to_string(l) + " row=" + std::to_string(d->first) + " col=" + std::to_string(d->second) +
             ": " + to_string(f.mats[l].get(d->first, d->second)) + " vs " +
             to_string(g.mats[l].get(d->first, d->second));
    }
  }
  return {};
}

}  // namespace dyfrt
