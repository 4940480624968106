#pragma once

#include <cstdint>
#include <random>

#include "dyfrt/carriers.hpp"
#include "dyfrt/dhx.hpp"
#include "dyfrt/vecth.hpp"
#include "dyfrt/wgroup.hpp"

namespace dyfrt {

/// Generators for randomized property checks. All draws go through one
/// mt19937_64 so a seed fixes the whole stream.
using Rng = std::mt19937_64;

inline constexpr std::uint64_t kDefaultSeed = 20240917;

int uniform_int(Rng& rng, int lo, int hi);  // inclusive
std::vector<int> random_permutation(Rng& rng, int n);
GroupElement random_group_element(Rng& rng, int h_size);
/// Columns are random permutations of H.
FiniteAction random_action(Rng& rng, int h_size, int x_size);
/// Arbitrary map H × V -> H; no bijectivity needed for Vect_H objects.
VectHObject random_object(Rng& rng, int h_size, int n);
/// Random small integer entries on the allowed support of source -> target.
VectHMorphism random_morphism(Rng& rng, const VectHObject& source, const VectHObject& target, double density = 0.6);
DhxTerm random_term(Rng& rng, const VectHObject& v, const GroupElement& alpha, const GroupElement& beta);
GeneratorWord random_generator_word(Rng& rng, int x_size, int max_len);

}  // namespace dyfrt
