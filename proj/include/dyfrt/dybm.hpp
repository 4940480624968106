#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "dyfrt/carriers.hpp"
#include "dyfrt/check.hpp"
#include "dyfrt/vecth.hpp"

namespace dyfrt {

using Pair = std::pair<int, int>;

/// R(λ)(x, y) = (u, v), stored densely over H × X × X.
struct DynamicalMap {
  FiniteAction action;
  std::vector<Pair> table;

  int h_size() const { return action.h_size(); }
  int x_size() const { return action.x_size(); }
  const Pair& operator()(int lambda, int x, int y) const {
    const int m = x_size();
    return table[(static_cast<std::size_t>(lambda) * m + x) * m + y];
  }
  Pair& at(int lambda, int x, int y) {
    const int m = x_size();
    return table[(static_cast<std::size_t>(lambda) * m + x) * m + y];
  }
  bool operator==(const DynamicalMap&) const = default;
};

/// Checks totality and ranges; throws StructuralError.
void validate_dynamical_map(const DynamicalMap& r);

/// iso[q] is the image of q in the ternary system's carrier.
DynamicalMap build_from_quasigroup(const Quasigroup& q, const TernarySystem& t, const std::vector<int>& iso);
DynamicalMap flip_map(const FiniteAction& a);
DynamicalMap identity_map(const FiniteAction& a);

CheckResult check_qdybe(const DynamicalMap& r);
CheckResult check_weight_zero(const DynamicalMap& r);

struct BijectivityResult {
  CheckResult check;
  std::optional<DynamicalMap> inverse;
};
BijectivityResult check_bijective(const DynamicalMap& r);

struct UnitarityResult {
  CheckResult check;         // τ∘R∘τ∘R = id; the alternate orientation is reported alongside
  bool tau_r_tau_r = false;  // τ∘R(λ)∘τ∘R(λ) = id
  bool r_tau_r_tau = false;  // R(λ)∘τ∘R(λ)∘τ = id
};
/// Throws PreconditionError unless r is bijective.
UnitarityResult check_unitarity(const DynamicalMap& r);

/// σ(λ)(x, y) = R(λ)(y, x) as a morphism X⊗X -> X⊗X. Refuses unless weight zero holds.
VectHMorphism sigma_from_r(const DynamicalMap& r);

}  // namespace dyfrt
