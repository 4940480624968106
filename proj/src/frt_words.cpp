#include <algorithm>

#include "dyfrt/errors.hpp"
#include "dyfrt/frt.hpp"

namespace dyfrt {

namespace {

int cmp_scalar(const Scalar& x, const Scalar& y) { return cmp(x, y) < 0 ? -1 : (cmp(x, y) > 0 ? 1 : 0); }

int compare(const Matrix& x, const Matrix& y) {
  if (x.rows() != y.rows()) return x.rows() < y.rows() ? -1 : 1;
  if (x.cols() != y.cols()) return x.cols() < y.cols() ? -1 : 1;
  for (std::size_t i = 0; i < x.rows(); ++i) {
    const auto &rx = x.row(i), &ry = y.row(i);
    std::size_t n = std::min(rx.size(), ry.size());
    for (std::size_t k = 0; k < n; ++k) {
      if (rx[k].col != ry[k].col) return rx[k].col < ry[k].col ? -1 : 1;
      if (int c = cmp_scalar(rx[k].val, ry[k].val)) return c;
    }
    if (rx.size() != ry.size()) return rx.size() < ry.size() ? -1 : 1;
  }
  return 0;
}

Matrix hadamard(const Matrix& x, const Matrix& y) {
  Matrix out(x.rows(), x.cols());
  for (std::size_t i = 0; i < x.rows(); ++i) {
    const auto &rx = x.row(i), &ry = y.row(i);
    std::size_t p = 0, q = 0;
    while (p < rx.size() && q < ry.size()) {
      if (rx[p].col < ry[q].col) {
        ++p;
      } else if (ry[q].col < rx[p].col) {
        ++q;
      } else {
        out.set(i, rx[p].col, rx[p].val * ry[q].val);
        ++p;
        ++q;
      }
    }
  }
  return out;
}

bool all_ones(const Matrix& x) {
  for (std::size_t i = 0; i < x.rows(); ++i) {
    if (x.row(i).size() != x.cols()) return false;
    for (const auto& e : x.row(i))
      if (e.val != 1) return false;
  }
  return true;
}

int word_compare(const Word& x, const Word& y) {
  std::size_t n = std::min(x.size(), y.size());
  for (std::size_t i = 0; i < n; ++i)
    if (int c = compare(x[i], y[i])) return c;
  if (x.size() != y.size()) return x.size() < y.size() ? -1 : 1;
  return 0;
}

Matrix twist(const Matrix& xi, const GroupElement& alpha, const GroupElement& beta) {
  GroupElement ai = alpha.inverse(), bi = beta.inverse();
  std::vector<Triplet> t;
  for (std::size_t r = 0; r < xi.rows(); ++r)
    for (const auto& e : xi.row(r))
      t.push_back({static_cast<std::size_t>(ai.apply(static_cast<int>(r))),
                   static_cast<std::size_t>(bi.apply(static_cast<int>(e.col))), e.val});
  return Matrix::from_triplets(xi.rows(), xi.cols(), std::move(t));
}

}  // namespace

Letter Letter::scalar(Matrix xi) {
  if (xi.rows() != xi.cols()) throw StructuralError("scalar letter: coefficient matrix must be |H|×|H|");
  Letter l;
  l.kind = LetterKind::Scalar2;
  l.xi = std::move(xi);
  return l;
}

Letter Letter::scalar(const MHFunction& f, const MHFunction& g) {
  if (f.size() != g.size()) throw StructuralError("scalar letter: f and g over different H");
  std::vector<Triplet> t;
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j)
      if (!is_zero(f[i]) && !is_zero(g[j])) t.push_back({i, j, f[i] * g[j]});
  return scalar(Matrix::from_triplets(f.size(), g.size(), std::move(t)));
}

Letter Letter::gen(int a, int b) { return Letter{LetterKind::Gen, a, b, {}}; }
Letter Letter::gen_inv(int a, int b) { return Letter{LetterKind::GenInv, a, b, {}}; }

bool Letter::operator==(const Letter& o) const { return compare(*this, o) == 0; }

int compare(const Letter& x, const Letter& y) {
  if (x.kind != y.kind) return x.kind < y.kind ? -1 : 1;
  if (x.kind == LetterKind::Scalar2) return compare(x.xi, y.xi);
  if (x.a != y.a) return x.a < y.a ? -1 : 1;
  if (x.b != y.b) return x.b < y.b ? -1 : 1;
  return 0;
}

bool WordLess::operator()(const Word& x, const Word& y) const { return word_compare(x, y) < 0; }

bool WordPairLess::operator()(const std::pair<Word, Word>& x, const std::pair<Word, Word>& y) const {
  if (int c = word_compare(x.first, y.first)) return c < 0;
  return word_compare(x.second, y.second) < 0;
}

bool WordTripleLess::operator()(const std::vector<Word>& x, const std::vector<Word>& y) const {
  std::size_t n = std::min(x.size(), y.size());
  for (std::size_t i = 0; i < n; ++i)
    if (int c = word_compare(x[i], y[i])) return c < 0;
  return x.size() < y.size();
}

std::string to_string(const Letter& l) {
  switch (l.kind) {
    case LetterKind::Gen:
      return "L" + std::to_string(l.a) + std::to_string(l.b);
    case LetterKind::GenInv:
      return "Linv" + std::to_string(l.a) + std::to_string(l.b);
    case LetterKind::Scalar2: {
      std::string s = "xi{";
      bool first = true;
      for (std::size_t r = 0; r < l.xi.rows(); ++r)
        for (const auto& e : l.xi.row(r)) {
          if (!first) s += ",";
          s += "(" + std::to_string(r) + "," + std::to_string(e.col) + "):" + to_string(e.val);
          first = false;
        }
      return s + "}";
    }
  }
  return {};
}

std::string to_string(const Word& w) {
  if (w.empty()) return "∅";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? " " : "") + to_string(w[i]);
  return s;
}

std::optional<std::pair<Word, Scalar>> normalize_word(const Word& w, int h_size) {
  Word merged;
  merged.reserve(w.size());
  for (const Letter& l : w) {
    if (l.is_scalar()) {
      if (static_cast<int>(l.xi.rows()) != h_size) throw StructuralError("scalar letter over the wrong H");
      if (!merged.empty() && merged.back().is_scalar()) {
        merged.back().xi = hadamard(merged.back().xi, l.xi);
        continue;
      }
    }
    merged.push_back(l);
  }
  Scalar coef(1);
  Word out;
  out.reserve(merged.size());
  for (Letter& l : merged) {
    if (l.is_scalar()) {
      if (l.xi.is_zero()) return std::nullopt;
      Scalar lead;
      for (std::size_t r = 0; r < l.xi.rows(); ++r)
        if (!l.xi.row(r).empty()) {
          lead = l.xi.row(r).front().val;
          break;
        }
      if (lead != 1) {
        l.xi *= Scalar(1 / lead);
        coef *= lead;
      }
      if (all_ones(l.xi)) continue;
    }
    out.push_back(std::move(l));
  }
  return std::make_pair(std::move(out), coef);
}

AlgebraElement AlgebraElement::unit(int h_size) { return word(h_size, {}); }

AlgebraElement AlgebraElement::word(int h_size, const Word& w, const Scalar& c) {
  AlgebraElement e(h_size);
  e.add_word(w, c);
  return e;
}

AlgebraElement AlgebraElement::raw_word(int h_size, const Word& w, const Scalar& c) {
  AlgebraElement e(h_size);
  e.add_raw_word(w, c);
  return e;
}

void AlgebraElement::accumulate(Word w, const Scalar& c) {
  if (dyfrt::is_zero(c)) return;
  auto [it, inserted] = terms_.try_emplace(std::move(w), c);
  if (!inserted) {
    it->second += c;
    if (dyfrt::is_zero(it->second)) terms_.erase(it);
  }
}

void AlgebraElement::add_word(const Word& w, const Scalar& c) {
  auto n = normalize_word(w, h_size_);
  if (n) accumulate(std::move(n->first), c * n->second);
}

void AlgebraElement::add_raw_word(const Word& w, const Scalar& c) { accumulate(w, c); }

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  for (const auto& [w, c] : o.terms_) accumulate(w, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  for (const auto& [w, c] : o.terms_) accumulate(w, -c);
  return *this;
}

AlgebraElement AlgebraElement::scaled(const Scalar& c) const {
  AlgebraElement e(h_size_);
  if (dyfrt::is_zero(c)) return e;
  for (const auto& [w, x] : terms_) e.terms_.emplace(w, x * c);
  return e;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
  AlgebraElement out(a.h_size_);
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      out.add_word(w, ca * cb);
    }
  return out;
}

bool AlgebraElement::operator==(const AlgebraElement& o) const { return h_size_ == o.h_size_ && terms_ == o.terms_; }

AlgebraElement move_scalars_left(const AlgebraElement& e, const FiniteAction& a) {
  AlgebraElement out(e.h_size());
  for (const auto& [w, c] : e.terms()) {
    Word cur = w;
    bool moved = true;
    while (moved) {
      moved = false;
      for (std::size_t i = 1; i < cur.size(); ++i) {
        if (cur[i].is_scalar() && !cur[i - 1].is_scalar()) {
          auto [alpha, beta] = grading(a, cur[i - 1]);
          Letter s = Letter::scalar(twist(cur[i].xi, alpha, beta));
          cur[i] = cur[i - 1];
          cur[i - 1] = std::move(s);
          moved = true;
        }
      }
    }
    out.add_word(cur, c);
  }
  return out;
}

std::pair<GroupElement, GroupElement> grading(const FiniteAction& a, const Letter& l) {
  switch (l.kind) {
    case LetterKind::Gen:
      return {translation_element(a, l.a), translation_element(a, l.b)};
    case LetterKind::GenInv:
      return {translation_element(a, l.b).inverse(), translation_element(a, l.a).inverse()};
    case LetterKind::Scalar2:
      break;
  }
  GroupElement one = GroupElement::identity(a.h_size());
  return {one, one};
}

std::pair<GroupElement, GroupElement> grading(const FiniteAction& a, const Word& w) {
  GroupElement l = GroupElement::identity(a.h_size()), r = l;
  for (const Letter& x : w) {
    auto [gl, gr] = grading(a, x);
    l = l * gl;
    r = r * gr;
  }
  return {l, r};
}

WordPairSum coproduct_letter(const Letter& l, int x_size, int h_size) {
  WordPairSum out;
  auto put = [&](const Word& w1, const Word& w2, const Scalar& c) {
    auto n1 = normalize_word(w1, h_size), n2 = normalize_word(w2, h_size);
    if (!n1 || !n2) return;
    Scalar k = c * n1->second * n2->second;
    auto [it, inserted] = out.try_emplace({n1->first, n2->first}, k);
    if (!inserted) {
      it->second += k;
      if (is_zero(it->second)) out.erase(it);
    }
  };
  switch (l.kind) {
    case LetterKind::Gen:
      for (int c = 0; c < x_size; ++c) put({Letter::gen(l.a, c)}, {Letter::gen(c, l.b)}, Scalar(1));
      return out;
    case LetterKind::GenInv:
      for (int c = 0; c < x_size; ++c) put({Letter::gen_inv(c, l.b)}, {Letter::gen_inv(l.a, c)}, Scalar(1));
      return out;
    case LetterKind::Scalar2:
      break;
  }
  // ξ = Σ_k f_k ⊗ g_k maps to Σ_k (f_k⊗1) ⊗ (1⊗g_k).
  const Matrix& xi = l.xi;
  const std::size_t h = xi.rows();
  MHFunction ones(h, Scalar(1));
  std::size_t r0 = h;
  for (std::size_t r = 0; r < h && r0 == h; ++r)
    if (!xi.row(r).empty()) r0 = r;
  if (r0 == h) return out;
  MHFunction g(h), f(h);
  for (const auto& e : xi.row(r0)) g[e.col] = e.val;
  bool rank_one = true;
  const Scalar& pivot = xi.row(r0).front().val;
  const std::size_t pc = xi.row(r0).front().col;
  for (std::size_t r = 0; r < h && rank_one; ++r) {
    f[r] = xi.get(r, pc) / pivot;
    for (std::size_t c = 0; c < h && rank_one; ++c) rank_one = xi.get(r, c) == f[r] * g[c];
  }
  if (rank_one) {
    put({Letter::scalar(f, ones)}, {Letter::scalar(ones, g)}, Scalar(1));
    return out;
  }
  for (std::size_t r = 0; r < h; ++r) {
    if (xi.row(r).empty()) continue;
    MHFunction row(h);
    for (const auto& e : xi.row(r)) row[e.col] = e.val;
    put({Letter::scalar(delta_function(static_cast<int>(h), static_cast<int>(r)), ones)}, {Letter::scalar(ones, row)},
        Scalar(1));
  }
  return out;
}

namespace {

WordPairSum coproduct_word(const Word& w, int x_size, int h_size) {
  WordPairSum acc;
  acc.emplace(std::make_pair(Word{}, Word{}), Scalar(1));
  for (const Letter& l : w) {
    WordPairSum d = coproduct_letter(l, x_size, h_size), next;
    for (const auto& [p, pc] : acc) {
      for (const auto& [q, qc] : d) {
        Word w1 = p.first, w2 = p.second;
        w1.insert(w1.end(), q.first.begin(), q.first.end());
        w2.insert(w2.end(), q.second.begin(), q.second.end());
        auto n1 = normalize_word(w1, h_size), n2 = normalize_word(w2, h_size);
        if (!n1 || !n2) continue;
        Scalar k = pc * qc * n1->second * n2->second;
        auto [it, inserted] = next.try_emplace({std::move(n1->first), std::move(n2->first)}, k);
        if (!inserted) {
          it->second += k;
          if (is_zero(it->second)) next.erase(it);
        }
      }
    }
    acc = std::move(next);
  }
  return acc;
}

}  // namespace

WordPairSum coproduct(const AlgebraElement& e, int x_size) {
  WordPairSum out;
  for (const auto& [w, c] : e.terms()) {
    for (const auto& [p, k] : coproduct_word(w, x_size, e.h_size())) {
      Scalar v = c * k;
      auto [it, inserted] = out.try_emplace(p, v);
      if (!inserted) {
        it->second += v;
        if (is_zero(it->second)) out.erase(it);
      }
    }
  }
  return out;
}

WordTripleSum coassoc_left(const AlgebraElement& e, int x_size) {
  WordTripleSum out;
  for (const auto& [p, c] : coproduct(e, x_size)) {
    for (const auto& [q, d] : coproduct_word(p.first, x_size, e.h_size())) {
      Scalar k = c * d;
      auto [it, inserted] = out.try_emplace({q.first, q.second, p.second}, k);
      if (!inserted) {
        it->second += k;
        if (is_zero(it->second)) out.erase(it);
      }
    }
  }
  return out;
}

WordTripleSum coassoc_right(const AlgebraElement& e, int x_size) {
  WordTripleSum out;
  for (const auto& [p, c] : coproduct(e, x_size)) {
    for (const auto& [q, d] : coproduct_word(p.second, x_size, e.h_size())) {
      Scalar k = c * d;
      auto [it, inserted] = out.try_emplace({p.first, q.first, q.second}, k);
      if (!inserted) {
        it->second += k;
        if (is_zero(it->second)) out.erase(it);
      }
    }
  }
  return out;
}

}  // namespace dyfrt
