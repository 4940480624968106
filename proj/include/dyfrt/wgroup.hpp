#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <unordered_map>
#include <vector>

#include "dyfrt/carriers.hpp"

namespace dyfrt {

inline constexpr std::size_t kDefaultGroupCap = 10000;

/// A permutation of H acting on the right: λα = perm[λ].
struct GroupElement {
  std::vector<int> perm;

  static GroupElement identity(int h_size);
  int size() const { return static_cast<int>(perm.size()); }
  int apply(int lambda) const { return perm[lambda]; }
  bool is_identity() const;
  GroupElement inverse() const;

  auto operator<=>(const GroupElement&) const = default;
};

/// Right-action product: λ(αβ) = (λα)β.
GroupElement operator*(const GroupElement& a, const GroupElement& b);

struct GroupElementHash {
  std::size_t operator()(const GroupElement& g) const;
};

/// (x, +1) is [x], (x, -1) is [x^-1].
struct SignedGenerator {
  int x;
  int exp;
  bool operator==(const SignedGenerator&) const = default;
};
using GeneratorWord = std::vector<SignedGenerator>;

std::string to_string(const GeneratorWord& w);

GroupElement translation_element(const FiniteAction& a, int x);
GroupElement evaluate_word(const FiniteAction& a, const GeneratorWord& w);
bool same_class(const FiniteAction& a, const GeneratorWord& w1, const GeneratorWord& w2);

/// Smallest k >= 1 with g^k = 1.
int element_order(const GroupElement& g);

struct GroupClosure {
  std::vector<GroupElement> elements;  // BFS order, identity first
  std::vector<GeneratorWord> witness;  // witness[i] evaluates to elements[i]
  std::unordered_map<GroupElement, std::size_t, GroupElementHash> index;

  std::size_t order() const { return elements.size(); }
  bool contains(const GroupElement& g) const { return index.count(g) > 0; }
};

/// BFS from the translations and their inverses. Throws OverflowError past cap.
GroupClosure generate_group(const FiniteAction& a, std::size_t cap = kDefaultGroupCap);

}  // namespace dyfrt
