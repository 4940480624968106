#pragma once

#include <string>
#include <vector>

#include "dyfrt/carriers.hpp"
#include "dyfrt/check.hpp"
#include "dyfrt/matrix.hpp"
#include "dyfrt/wgroup.hpp"

namespace dyfrt {

/// A finite set V with a map H × V -> H, act[λ][v] = λ·v.
struct VectHObject {
  int h_size = 0;
  int n = 0;
  std::vector<std::vector<int>> act;

  int size() const { return n; }
  int apply(int lambda, int v) const { return act[lambda][v]; }
  bool operator==(const VectHObject&) const = default;
};

/// mats[λ] has target.size() rows and source.size() columns.
struct VectHMorphism {
  VectHObject source;
  VectHObject target;
  std::vector<Matrix> mats;

  bool operator==(const VectHMorphism&) const = default;
};

VectHObject make_object(int h_size, std::vector<std::vector<int>> act);
void validate_object(const VectHObject& v);
VectHObject object_from_action(const FiniteAction& a);
VectHObject unit_obj(int h_size);
/// The singleton {α} with λ·α = α.perm[λ].
VectHObject point_object(const GroupElement& alpha);
/// The singleton {v} inside V, acting as v does.
VectHObject point_subobject(const VectHObject& v, int elem);
/// Carrier V × W indexed v * |W| + w; λ·(v,w) = (λ·w)·v.
VectHObject tensor_obj(const VectHObject& v, const VectHObject& w);

/// Throws StructuralError on shape mismatch; fails on the first support violation.
CheckResult check_morphism(const VectHMorphism& f);

VectHMorphism identity(const VectHObject& v);
VectHMorphism zero_morphism(const VectHObject& source, const VectHObject& target);
/// g ∘ f.
VectHMorphism compose(const VectHMorphism& g, const VectHMorphism& f);
VectHMorphism add(const VectHMorphism& f, const VectHMorphism& g);
VectHMorphism subtract(const VectHMorphism& f, const VectHMorphism& g);
VectHMorphism scale(const Scalar& c, const VectHMorphism& f);
VectHMorphism tensor_mor(const VectHMorphism& f, const VectHMorphism& g);
/// λ-wise inverse; throws PreconditionError if some mats[λ] is singular.
VectHMorphism inverse(const VectHMorphism& f);

VectHMorphism assoc(const VectHObject& u, const VectHObject& v, const VectHObject& w);
VectHMorphism assoc_inv(const VectHObject& u, const VectHObject& v, const VectHObject& w);
VectHMorphism left_unit(const VectHObject& v);  // I⊗V -> V
VectHMorphism left_unit_inv(const VectHObject& v);
VectHMorphism right_unit(const VectHObject& v);  // V⊗I -> V
VectHMorphism right_unit_inv(const VectHObject& v);

/// i: {v} -> V and p: V -> {v}.
VectHMorphism point_inclusion(const VectHObject& v, int elem);
VectHMorphism point_projection(const VectHObject& v, int elem);
/// ι: A -> B between singletons with equal action; PreconditionError names the first λ otherwise.
VectHMorphism point_iso(const VectHObject& a, const VectHObject& b);

/// Description of the first (λ, row, col) where f and g differ, empty if equal.
std::string describe_difference(const VectHMorphism& f, const VectHMorphism& g);

}  // namespace dyfrt
