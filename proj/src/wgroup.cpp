#include "dyfrt/wgroup.hpp"

#include <deque>

#include "dyfrt/errors.hpp"

namespace dyfrt {

GroupElement GroupElement::identity(int h_size) {
  GroupElement g;
  g.perm.resize(h_size);
  for (int i = 0; i < h_size; ++i) g.perm[i] = i;
  return g;
}

bool GroupElement::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (perm[i] != i) return false;
  return true;
}

GroupElement GroupElement::inverse() const {
  GroupElement g;
  g.perm.resize(perm.size());
  for (int i = 0; i < size(); ++i) g.perm[perm[i]] = i;
  return g;
}

GroupElement operator*(const GroupElement& a, const GroupElement& b) {
  if (a.size() != b.size()) throw StructuralError("group product: size mismatch");
  GroupElement g;
  g.perm.resize(a.perm.size());
  for (int i = 0; i < a.size(); ++i) g.perm[i] = b.perm[a.perm[i]];
  return g;
}

std::size_t GroupElementHash::operator()(const GroupElement& g) const {
  std::size_t h = 1469598103934665603ull;
  for (int v : g.perm) h = (h ^ static_cast<std::size_t>(v)) * 1099511628211ull;
  return h;
}

std::string to_string(const GeneratorWord& w) {
  std::string s;
  for (const auto& g : w) {
    s += "[" + std::to_string(g.x);
    if (g.exp < 0) s += "^-1";
    s += "]";
  }
  return s.empty() ? "1" : s;
}

GroupElement translation_element(const FiniteAction& a, int x) {
  if (x < 0 || x >= a.x_size()) throw StructuralError("translation_element: generator out of range");
  GroupElement g;
  g.perm.resize(a.h_size());
  std::vector<char> seen(a.h_size(), 0);
  for (int l = 0; l < a.h_size(); ++l) {
    g.perm[l] = a.act(l, x);
    if (seen[g.perm[l]]) throw PreconditionError("translation by " + std::to_string(x) + " is not bijective");
    seen[g.perm[l]] = 1;
  }
  return g;
}

GroupElement evaluate_word(const FiniteAction& a, const GeneratorWord& w) {
  GroupElement g = GroupElement::identity(a.h_size());
  for (const auto& s : w) {
    GroupElement t = translation_element(a, s.x);
    g = g * (s.exp >= 0 ? t : t.inverse());
  }
  return g;
}

bool same_class(const FiniteAction& a, const GeneratorWord& w1, const GeneratorWord& w2) {
  return evaluate_word(a, w1) == evaluate_word(a, w2);
}

int element_order(const GroupElement& g) {
  GroupElement p = g;
  int k = 1;
  while (!p.is_identity()) {
    p = p * g;
    ++k;
  }
  return k;
}

GroupClosure generate_group(const FiniteAction& a, std::size_t cap) {
  std::vector<std::pair<SignedGenerator, GroupElement>> gens;
  for (int x = 0; x < a.x_size(); ++x) {
    GroupElement t = translation_element(a, x);
    gens.push_back({{x, +1}, t});
    gens.push_back({{x, -1}, t.inverse()});
  }
  GroupClosure out;
  auto add = [&](GroupElement g, GeneratorWord w) {
    if (out.elements.size() >= cap)
      throw OverflowError("group closure exceeded cap of " + std::to_string(cap) + " elements");
    out.index.emplace(g, out.elements.size());
    out.elements.push_back(std::move(g));
    out.witness.push_back(std::move(w));
  };
  add(GroupElement::identity(a.h_size()), {});
  for (std::size_t head = 0; head < out.elements.size(); ++head) {
    for (const auto& [sym, t] : gens) {
      GroupElement h = out.elements[head] * t;
      if (out.index.count(h)) continue;
      GeneratorWord w = out.witness[head];
      w.push_back(sym);
      add(std::move(h), std::move(w));
    }
  }
  return out;
}

}  // namespace dyfrt
