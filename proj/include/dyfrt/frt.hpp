#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dyfrt/check.hpp"
#include "dyfrt/dhx.hpp"
#include "dyfrt/lop.hpp"

namespace dyfrt {

// ---------------------------------------------------------------- words

enum class LetterKind { Scalar2 = 0, Gen = 1, GenInv = 2 };

/// One letter of the alphabet: a scalar ξ ∈ M_H⊗M_H, L_ab, or (L^-1)_ab.
/// ξ is stored as the |H|×|H| coefficient matrix of δ_λ⊗δ_μ.
struct Letter {
  LetterKind kind = LetterKind::Gen;
  int a = 0;
  int b = 0;
  Matrix xi;

  static Letter scalar(Matrix xi);
  static Letter scalar(const MHFunction& f, const MHFunction& g);  // f⊗g
  static Letter gen(int a, int b);
  static Letter gen_inv(int a, int b);

  bool is_scalar() const { return kind == LetterKind::Scalar2; }
  bool operator==(const Letter& o) const;
};

using Word = std::vector<Letter>;

int compare(const Letter& x, const Letter& y);
struct WordLess {
  bool operator()(const Word& x, const Word& y) const;
};

std::string to_string(const Letter& l);
std::string to_string(const Word& w);

/// Formal combination of words. Adjacent scalar letters are merged, scalar
/// letters are rescaled to a leading 1, and 1⊗1 is dropped (it equals ∅).
class AlgebraElement {
 public:
  using Terms = std::map<Word, Scalar, WordLess>;

  explicit AlgebraElement(int h_size = 1) : h_size_(h_size) {}

  static AlgebraElement unit(int h_size);
  static AlgebraElement word(int h_size, const Word& w, const Scalar& c = Scalar(1));
  /// Stores w exactly as given; used to state relations that normalization would erase.
  static AlgebraElement raw_word(int h_size, const Word& w, const Scalar& c = Scalar(1));

  int h_size() const { return h_size_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_word(const Word& w, const Scalar& c);
  void add_raw_word(const Word& w, const Scalar& c);

  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  AlgebraElement scaled(const Scalar& c) const;
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
  bool operator==(const AlgebraElement& o) const;

 private:
  void accumulate(Word w, const Scalar& c);
  int h_size_;
  Terms terms_;
};

/// Normal form of a word under the scalar-letter rules; nullopt when it vanishes.
std::optional<std::pair<Word, Scalar>> normalize_word(const Word& w, int h_size);

/// Moves scalar letters to the front with x ξ = (T_α⊗T_β)(ξ) x for x of degree (α, β).
AlgebraElement move_scalars_left(const AlgebraElement& e, const FiniteAction& a);

// ---------------------------------------------------------------- grading, Δ, ε

std::pair<GroupElement, GroupElement> grading(const FiniteAction& a, const Letter& l);
std::pair<GroupElement, GroupElement> grading(const FiniteAction& a, const Word& w);

struct WordPairLess {
  bool operator()(const std::pair<Word, Word>& x, const std::pair<Word, Word>& y) const;
};
using WordPairSum = std::map<std::pair<Word, Word>, Scalar, WordPairLess>;

struct WordTripleLess {
  bool operator()(const std::vector<Word>& x, const std::vector<Word>& y) const;
};
using WordTripleSum = std::map<std::vector<Word>, Scalar, WordTripleLess>;

WordPairSum coproduct(const AlgebraElement& e, int x_size);
WordPairSum coproduct_letter(const Letter& l, int x_size, int h_size);
/// (Δ⊗id)∘Δ and (id⊗Δ)∘Δ as formal sums of word triples.
WordTripleSum coassoc_left(const AlgebraElement& e, int x_size);
WordTripleSum coassoc_right(const AlgebraElement& e, int x_size);

IhxElement counit(const FiniteAction& a, const Word& w);
IhxElement counit(const FiniteAction& a, const AlgebraElement& e);

// ---------------------------------------------------------------- relations

struct IdealGenerator {
  int family;
  std::string label;
  AlgebraElement element;
};

/// Families (1)-(5) over all index tuples; families (1) and (3) range over the
/// delta bases of M_H⊗M_H and M_H, which suffices by linearity.
std::vector<IdealGenerator> ideal_generators(const SigmaContext& ctx, const FiniteAction& a);
/// Family (4) for one index tuple (a, b, c, d).
AlgebraElement rll_generator(const SigmaContext& ctx, int a, int b, int c, int d);

// ---------------------------------------------------------------- representations

/// A dynamical representation given by its generator images.
/// l_images[a*m+b] has degree ([a],[b]); linv_images[a*m+b] has degree ([b^-1],[a^-1]).
struct DynRep {
  FiniteAction action;
  VectHObject v;
  std::vector<DhxTerm> l_images;
  std::vector<DhxTerm> linv_images;
};

bool same_generator_images(const DynRep& p, const DynRep& q, std::string* witness = nullptr);

DhxTerm scalar_image(const VectHObject& v, const Matrix& xi);
DhxTerm letter_image(const DynRep& rep, const Letter& l);
DhxElement evaluate(const DynRep& rep, const AlgebraElement& e);

/// Generator images read off an L-operator (the G functor).
DynRep g_functor(const FiniteAction& a, const LOperator& l);
/// The L-operator assembled from generator images (the F functor). With a
/// context, the images are first certified to kill the ideal.
LOperator f_functor(const DynRep& rep);
LOperator f_functor(const SigmaContext& ctx, const DynRep& rep);

/// Direct formulas for the basic representation on X.
DynRep basic_representation(const SigmaContext& ctx, const FiniteAction& a);
/// φ₀∘ε on generators, on the unit object.
DynRep trivial_representation(const FiniteAction& a);

DhxElement pi_from_loperator(const SigmaContext& ctx, const FiniteAction& a, const LOperator& l,
                             const AlgebraElement& e);

// ---------------------------------------------------------------- duality

/// u: V⊗{α} -> {β}⊗V  ↦  u^∨: {β^-1}⊗V -> V⊗{α^-1}.
VectHMorphism vee(const VectHObject& v, const VectHMorphism& u, const GroupElement& alpha, const GroupElement& beta);
/// w: {β^-1}⊗V -> V⊗{α^-1}  ↦  w^∧: V⊗{α} -> {β}⊗V.
VectHMorphism wedge(const VectHObject& v, const VectHMorphism& w, const GroupElement& alpha, const GroupElement& beta);
/// Both dualities assembled step by step from Vect_H structure morphisms.
VectHMorphism vee_composite(const VectHObject& v, const VectHMorphism& u, const GroupElement& alpha,
                            const GroupElement& beta);
VectHMorphism wedge_composite(const VectHObject& v, const VectHMorphism& w, const GroupElement& alpha,
                              const GroupElement& beta);

/// For u: V⊗{[c]} -> {[a]}⊗V and w: V⊗{[c^-1]} -> {[b^-1]}⊗V, returns
/// (u∘w^∨, the composite through u * w), both {[b]}⊗V -> {[a]}⊗V.
std::pair<VectHMorphism, VectHMorphism> vee_star_sides(const FiniteAction& act, const VectHObject& v,
                                                       const VectHMorphism& u, const VectHMorphism& w, int a, int b,
                                                       int c);

// ---------------------------------------------------------------- channels

/// An evaluation homomorphism into some D_{H,X}(V). Counit channels land in
/// D_{H,X}(I) through φ₀.
class Channel {
 public:
  virtual ~Channel() = default;
  virtual std::string name() const = 0;
  virtual const VectHObject& object() const = 0;
  virtual DhxElement eval_word(const Word& w) const = 0;
  DhxElement eval(const AlgebraElement& e) const;
};

std::unique_ptr<Channel> counit_channel(const FiniteAction& a);
std::unique_ptr<Channel> rep_channel(std::string name, DynRep rep);
/// Word ↦ Σ φ₂(π₁(w₁), π₂(w₂)) over the coproduct pairs.
std::unique_ptr<Channel> tensor_channel(std::string name, DynRep rep1, DynRep rep2);

CheckResult certify_kills_ideal(const Channel& ch, const std::vector<IdealGenerator>& gens);
CheckResult certify_counit_kills_ideal(const SigmaContext& ctx, const FiniteAction& a);
CheckResult certify_pi_kills_ideal(const SigmaContext& ctx, const FiniteAction& a, const LOperator& l);

class EvaluationBattery {
 public:
  /// Counit channel plus one channel per L-operator; every channel is certified.
  /// Throws PreconditionError naming the first channel that fails.
  static EvaluationBattery build(const SigmaContext& ctx, const FiniteAction& a,
                                 const std::vector<std::pair<std::string, LOperator>>& ops);

  /// Certifies ch and keeps it only if it kills every generator.
  CheckResult try_add(std::unique_ptr<Channel> ch, const std::vector<IdealGenerator>& gens);
  /// As try_add, but throws PreconditionError on failure.
  void add_certified(std::unique_ptr<Channel> ch, const std::vector<IdealGenerator>& gens);
  const std::vector<std::unique_ptr<Channel>>& channels() const { return channels_; }
  const std::vector<CheckResult>& certificates() const { return certs_; }

  struct Verdict {
    bool distinct = false;  // proven distinct in A_σ
    std::string witness;    // channel name when distinct
  };
  /// Distinct means some channel separates the two; otherwise they are only
  /// indistinguishable by this battery.
  Verdict compare(const AlgebraElement& x, const AlgebraElement& y) const;

 private:
  std::vector<std::unique_ptr<Channel>> channels_;
  std::vector<CheckResult> certs_;
};

struct BialgebroidReport {
  std::vector<CheckResult> checks;
  bool pass() const;
};
BialgebroidReport check_bialgebroid_axioms(const SigmaContext& ctx, const FiniteAction& a,
                                           const EvaluationBattery& battery);

// ---------------------------------------------------------------- demo

struct DemoStep {
  std::string name;
  bool pass = false;
  std::string detail;
};
struct DemoReport {
  std::vector<DemoStep> steps;
  AlgebraElement element;
  AlgebraElement rewritten;
  bool pass() const;
};
DemoReport demo_nondirect_sum();

}  // namespace dyfrt
