#pragma once

#include <optional>

#include "dyfrt/check.hpp"
#include "dyfrt/dybm.hpp"
#include "dyfrt/vecth.hpp"

namespace dyfrt {

/// The distinguished object X and an invertible σ: X⊗X -> X⊗X.
struct SigmaContext {
  VectHObject x;
  VectHMorphism sigma;
  VectHMorphism sigma_inv;
};

/// Validates σ's shape and support, and inverts it.
SigmaContext make_sigma_context(const VectHObject& x, const VectHMorphism& sigma);
SigmaContext sigma_context_from_r(const DynamicalMap& r);

/// L: V⊗X -> X⊗V together with its inverse.
struct LOperator {
  VectHObject x;
  VectHObject v;
  VectHMorphism l;
  VectHMorphism l_inv;

  bool operator==(const LOperator&) const = default;
};

/// Inverts l per λ; throws PreconditionError if singular.
LOperator make_loperator(const VectHObject& x, const VectHObject& v, const VectHMorphism& l);
/// Uses the given inverse after confirming both composites are identities.
LOperator make_loperator(const VectHObject& x, const VectHObject& v, const VectHMorphism& l,
                         const VectHMorphism& l_inv);

/// (X, σ) viewed as an L-operator.
LOperator sigma_loperator(const SigmaContext& ctx);
LOperator unit_loperator(const SigmaContext& ctx);

CheckResult check_rll(const SigmaContext& ctx, const LOperator& lv);
CheckResult check_yb_operator(const SigmaContext& ctx);

/// L_V ⊠ L_W on V⊗W. Throws PreconditionError if either factor fails RLL.
LOperator boxtimes(const SigmaContext& ctx, const LOperator& lv, const LOperator& lw);
/// Same composite without re-checking the precondition.
LOperator boxtimes_unchecked(const LOperator& lv, const LOperator& lw);

/// (id_X⊗f)∘L_V = L_W∘(f⊗id_X) for f: V -> W.
bool is_rep_morphism(const SigmaContext& ctx, const VectHMorphism& f, const LOperator& lv, const LOperator& lw);

/// Invertible rep morphisms between two L-operators, by exhaustive search over
/// 0/1 matrices of the right support. Empty when carriers differ in size.
std::optional<VectHMorphism> find_rep_isomorphism(const SigmaContext& ctx, const LOperator& lv, const LOperator& lw,
                                                  std::size_t search_cap = 1u << 20);

}  // namespace dyfrt
