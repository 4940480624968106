#include "dyfrt/random.hpp"

#include <algorithm>
#include <numeric>

namespace dyfrt {

int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

std::vector<int> random_permutation(Rng& rng, int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

GroupElement random_group_element(Rng& rng, int h_size) { return GroupElement{random_permutation(rng, h_size)}; }

FiniteAction random_action(Rng& rng, int h_size, int x_size) {
  FiniteAction a{FiniteSet{h_size, {}}, FiniteSet{x_size, {}},
                 std::vector<std::vector<int>>(h_size, std::vector<int>(x_size))};
  for (int x = 0; x < x_size; ++x) {
    auto p = random_permutation(rng, h_size);
    for (int l = 0; l < h_size; ++l) a.table[l][x] = p[l];
  }
  return a;
}

VectHObject random_object(Rng& rng, int h_size, int n) {
  std::vector<std::vector<int>> act(h_size, std::vector<int>(n));
  for (auto& row : act)
    for (auto& v : row) v = uniform_int(rng, 0, h_size - 1);
  return make_object(h_size, std::move(act));
}

VectHMorphism random_morphism(Rng& rng, const VectHObject& source, const VectHObject& target, double density) {
  VectHMorphism f = zero_morphism(source, target);
  std::bernoulli_distribution keep(density);
  for (int l = 0; l < source.h_size; ++l)
    for (int r = 0; r < target.size(); ++r)
      for (int c = 0; c < source.size(); ++c)
        if (target.apply(l, r) == source.apply(l, c) && keep(rng)) {
          int num = uniform_int(rng, -3, 3), den = uniform_int(rng, 1, 2);
          if (num == 0) continue;
          Scalar s(num, den);
          s.canonicalize();
          f.mats[l].set(r, c, s);
        }
  return f;
}

DhxTerm random_term(Rng& rng, const VectHObject& v, const GroupElement& alpha, const GroupElement& beta) {
  return DhxTerm{alpha, beta, random_morphism(rng, dhx_source(v, beta), dhx_target(alpha, v))};
}

GeneratorWord random_generator_word(Rng& rng, int x_size, int max_len) {
  GeneratorWord w(uniform_int(rng, 0, max_len));
  for (auto& g : w) g = SignedGenerator{uniform_int(rng, 0, x_size - 1), uniform_int(rng, 0, 1) ? 1 : -1};
  return w;
}

}  // namespace dyfrt
