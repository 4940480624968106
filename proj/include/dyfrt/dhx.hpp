#pragma once

#include <map>
#include <utility>
#include <vector>

#include "dyfrt/matrix.hpp"
#include "dyfrt/vecth.hpp"
#include "dyfrt/wgroup.hpp"

namespace dyfrt {

/// f ∈ M_H, indexed by λ.
using MHFunction = std::vector<Scalar>;
/// g ∈ Map(H, CV), index λ * |V| + v.
using VFunction = std::vector<Scalar>;

MHFunction constant_function(int h_size, const Scalar& c);
MHFunction delta_function(int h_size, int lambda);
/// T_α f, i.e. λ ↦ f(λα).
MHFunction shift(const MHFunction& f, const GroupElement& alpha);

VectHObject dhx_source(const VectHObject& v, const GroupElement& beta);   // V⊗{β}
VectHObject dhx_target(const GroupElement& alpha, const VectHObject& v);  // {α}⊗V

/// A homogeneous component u: V⊗{β} -> {α}⊗V of degree (α, β).
struct DhxTerm {
  GroupElement alpha;
  GroupElement beta;
  VectHMorphism u;
};

using Degree = std::pair<GroupElement, GroupElement>;

/// Element of D_{H,X}(V) stored through Γ-preimages, one morphism per degree.
struct DhxElement {
  VectHObject v;
  std::map<Degree, VectHMorphism> terms;

  static DhxElement zero(const VectHObject& v);
  static DhxElement unit(const VectHObject& v);
  static DhxElement from_term(const VectHObject& v, const DhxTerm& t);

  /// Adds u into the (α, β) component; drops components that become zero.
  void add_term(const DhxTerm& t);
  DhxElement& operator+=(const DhxElement& o);
  DhxElement& operator-=(const DhxElement& o);
  DhxElement scaled(const Scalar& c) const;
  bool is_homogeneous() const { return terms.size() <= 1; }
};

/// Checks that u has shape V⊗{β} -> {α}⊗V and satisfies the support condition.
void validate_term(const VectHObject& v, const DhxTerm& t);

/// (u * w)(λ) = u(λ) w(λβ): index form of the star composite.
DhxTerm star_product(const VectHObject& v, const DhxTerm& u, const DhxTerm& w);
/// The same product assembled from constraints, ι morphisms and ⊗ in Vect_H.
DhxTerm star_product_composite(const VectHObject& v, const DhxTerm& u, const DhxTerm& w);
DhxElement multiply(const DhxElement& a, const DhxElement& b);

VFunction gamma_apply(const DhxElement& e, const VFunction& g);
/// Matrix of gamma_apply on the delta basis of Map(H, CV).
Matrix gamma_operator(const DhxElement& e);
bool operator_equal(const DhxElement& a, const DhxElement& b);

DhxElement mu_l(const VectHObject& v, const MHFunction& f);
DhxElement mu_r(const VectHObject& v, const MHFunction& f);
DhxTerm mu_l_term(const VectHObject& v, const MHFunction& f);
DhxTerm mu_r_term(const VectHObject& v, const MHFunction& f);

/// f_{α,β}: {β} -> {α} with entry f(λ); requires λα = λβ wherever f(λ) ≠ 0.
VectHMorphism point_scalar(const MHFunction& f, const GroupElement& alpha, const GroupElement& beta);

/// Σ_α f_α ★ T_α acting on M_H.
struct IhxElement {
  int h_size = 0;
  std::map<GroupElement, MHFunction> terms;

  static IhxElement zero(int h_size);
  static IhxElement unit(int h_size);
  static IhxElement monomial(const MHFunction& f, const GroupElement& alpha);
  void add(const GroupElement& alpha, const MHFunction& f);
};

IhxElement ihx_product(const IhxElement& a, const IhxElement& b);
IhxElement ihx_sum(const IhxElement& a, const IhxElement& b, const Scalar& cb = Scalar(1));
MHFunction ihx_apply(const IhxElement& a, const MHFunction& f);
Matrix ihx_operator(const IhxElement& a);

/// φ₀: I_{H,X} -> D_{H,X}(I).
DhxElement phi0(const IhxElement& a);

/// v ⊠_γ w: (V⊗W)⊗{β} -> {α}⊗(V⊗W).
DhxTerm box_gamma(const VectHObject& v, const VectHObject& w, const DhxTerm& tv, const DhxTerm& tw);
/// Sum of ⊠_γ over degree-matched components.
DhxElement phi2(const DhxElement& e1, const DhxElement& e2);

/// Operator lifts onto Map(H, C(V⊗W)): U^(1) acts on the V slot, U^(2) on the W slot.
Matrix lift_first(const Matrix& u, const VectHObject& v, const VectHObject& w);
Matrix lift_second(const Matrix& u, const VectHObject& v, const VectHObject& w);

}  // namespace dyfrt
