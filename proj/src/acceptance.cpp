#include "dyfrt/acceptance.hpp"

#include <chrono>
#include <functional>

#include "dyfrt/dybm.hpp"
#include "dyfrt/errors.hpp"
#include "dyfrt/frt.hpp"
#include "dyfrt/lop.hpp"

namespace dyfrt {

namespace {

struct Q5Data {
  DynamicalMap r;
  SigmaContext ctx;
  LOperator l;
  LOperator ll;
  LOperator unit;
};

const Q5Data& q5() {
  static const Q5Data d = [] {
    DynamicalMap r = build_from_quasigroup(builtin_q5(), builtin_z5_ternary(), {0, 1, 2, 3, 4});
    SigmaContext ctx = sigma_context_from_r(r);
    LOperator l = sigma_loperator(ctx);
    LOperator ll = boxtimes(ctx, l, l);
    LOperator unit = unit_loperator(ctx);
    return Q5Data{std::move(r), std::move(ctx), std::move(l), std::move(ll), std::move(unit)};
  }();
  return d;
}

CheckResult expect(std::string name, bool ok, const std::string& witness) {
  CheckResult c{std::move(name), true, 0, {}};
  c.cases = 1;
  if (!ok) c.fail(witness);
  return c;
}

CheckResult renamed(CheckResult c, std::string name) {
  c.name = std::move(name);
  return c;
}

std::string pair_str(const Pair& p) { return "(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")"; }

std::vector<CheckResult> c1(const AcceptanceOptions&) {
  std::vector<CheckResult> out;
  auto v = validate_quasigroup(builtin_q5());
  out.push_back(expect("validate_quasigroup(Q5)", v.pass, v.detail));
  const auto& r = q5().r;
  out.push_back(expect("R(0)(1,2) = (4,3)", r(0, 1, 2) == Pair{4, 3}, "got " + pair_str(r(0, 1, 2))));
  out.push_back(expect("R(1)(1,2) = (4,2)", r(1, 1, 2) == Pair{4, 2}, "got " + pair_str(r(1, 1, 2))));
  return out;
}

std::vector<CheckResult> c2(const AcceptanceOptions& o) {
  std::vector<CheckResult> out;
  const auto& r = q5().r;
  CheckResult q = check_qdybe(r);
  if (q.pass && q.cases != 625) q.fail("expected 625 cases, counted " + std::to_string(q.cases));
  out.push_back(renamed(q, "qdybe(Q5)"));
  out.push_back(renamed(check_weight_zero(r), "weight_zero(Q5)"));
  out.push_back(renamed(check_bijective(r).check, "bijective(Q5)"));
  Rng rng(o.seed);
  CheckResult flip{"flip map on random actions", true, 0, {}};
  for (int i = 0; i < 120; ++i) {
    const int h = uniform_int(rng, 1, 4), m = uniform_int(rng, 1, 4);
    const DynamicalMap f = flip_map(random_action(rng, h, m));
    ++flip.cases;
    for (const CheckResult& c : {check_qdybe(f), check_weight_zero(f), check_bijective(f).check})
      if (!c.pass)
        flip.fail("action #" + std::to_string(i) + " (" + std::to_string(h) + "x" + std::to_string(m) + "): " + c.name +
                  " at " + c.witness);
  }
  out.push_back(std::move(flip));
  return out;
}

std::vector<CheckResult> c3(const AcceptanceOptions&) {
  const auto& d = q5();
  return {renamed(check_yb_operator(d.ctx), "yang_baxter_operator(σ_R)"), renamed(check_rll(d.ctx, d.l), "rll(X,σ_R)")};
}

std::vector<CheckResult> c4(const AcceptanceOptions&) {
  const auto& d = q5();
  std::vector<CheckResult> out;
  out.push_back(renamed(check_rll(d.ctx, d.l), "rll(X,σ_R)"));
  out.push_back(renamed(check_rll(d.ctx, d.ll), "rll((X,σ_R)⊠(X,σ_R))"));
  out.push_back(renamed(check_rll(d.ctx, d.unit), "rll(unit)"));
  for (const LOperator* lv : {&d.l, &d.ll}) {
    const std::string tag = lv == &d.l ? "X" : "X⊗X";
    LOperator left = boxtimes(d.ctx, d.unit, *lv), right = boxtimes(d.ctx, *lv, d.unit);
    out.push_back(expect("left unit constraint on " + tag + " is a rep morphism",
                         is_rep_morphism(d.ctx, left_unit(lv->v), left, *lv), "intertwining fails"));
    out.push_back(expect("right unit constraint on " + tag + " is a rep morphism",
                         is_rep_morphism(d.ctx, right_unit(lv->v), right, *lv), "intertwining fails"));
  }
  return out;
}

std::vector<CheckResult> c5(const AcceptanceOptions& o) {
  Rng rng(o.seed + 5);
  CheckResult c{"Γ(u*w) = Γ(u)∘Γ(w) on the delta basis", true, 0, {}};
  for (int i = 0; i < 520; ++i) {
    const int h = uniform_int(rng, 1, 3), n = uniform_int(rng, 1, 3);
    const VectHObject v = random_object(rng, h, n);
    const DhxTerm u = random_term(rng, v, random_group_element(rng, h), random_group_element(rng, h));
    const DhxTerm w = random_term(rng, v, random_group_element(rng, h), random_group_element(rng, h));
    const DhxElement eu = DhxElement::from_term(v, u), ew = DhxElement::from_term(v, w);
    const DhxElement uw = DhxElement::from_term(v, star_product(v, u, w));
    ++c.cases;
    for (int k = 0; k < h * n; ++k) {
      VFunction delta(h * n);
      delta[k] = 1;
      if (gamma_apply(uw, delta) != gamma_apply(eu, gamma_apply(ew, delta))) {
        c.fail("pair #" + std::to_string(i) + " basis vector " + std::to_string(k));
        break;
      }
    }
  }
  return {c};
}

std::vector<CheckResult> c6(const AcceptanceOptions&) {
  const auto& d = q5();
  const FiniteAction& a = d.r.action;
  const auto gens = ideal_generators(d.ctx, a);
  std::size_t fam4 = 0;
  for (const auto& g : gens) fam4 += g.family == 4;
  std::vector<CheckResult> out;
  out.push_back(expect("family (4) has 625 instances", fam4 == 625, "counted " + std::to_string(fam4)));
  out.push_back(renamed(certify_kills_ideal(*counit_channel(a), gens), "counit kills I_σ"));
  out.push_back(renamed(certify_kills_ideal(*rep_channel("pi", g_functor(a, d.l)), gens), "π(X,σ_R) kills I_σ"));
  out.push_back(
      renamed(certify_kills_ideal(*rep_channel("pi", g_functor(a, d.ll)), gens), "π((X,σ_R)⊠(X,σ_R)) kills I_σ"));
  return out;
}

std::vector<CheckResult> c7(const AcceptanceOptions&) {
  const auto& d = q5();
  EvaluationBattery b = EvaluationBattery::build(d.ctx, d.r.action, {{"pi(X,σ_R)", d.l}, {"pi(X⊗X)", d.ll}});
  return check_bialgebroid_axioms(d.ctx, d.r.action, b).checks;
}

std::vector<CheckResult> c8(const AcceptanceOptions&) {
  DemoReport rep = demo_nondirect_sum();
  std::vector<CheckResult> out;
  for (const auto& s : rep.steps) out.push_back(expect("demo: " + s.name, s.pass, s.detail));
  return out;
}

std::vector<CheckResult> c9(const AcceptanceOptions&) {
  const auto& d = q5();
  const FiniteAction& a = d.r.action;
  std::vector<CheckResult> out;
  for (const auto& [name, l] :
       {std::pair<std::string, const LOperator*>{"(X,σ_R)", &d.l}, {"unit", &d.unit}, {"(X,σ_R)⊠(X,σ_R)", &d.ll}}) {
    LOperator back = f_functor(g_functor(a, *l));
    out.push_back(expect("F(G(L)) = L for " + name, back == *l, describe_difference(back.l, l->l)));
  }
  std::string w;
  const DynRep basic = basic_representation(d.ctx, a), triv = trivial_representation(a);
  bool ok = same_generator_images(g_functor(a, f_functor(d.ctx, basic)), basic, &w);
  out.push_back(expect("G(F(π_σ)) = π_σ", ok, w));
  ok = same_generator_images(g_functor(a, f_functor(d.ctx, triv)), triv, &w);
  out.push_back(expect("G(F(trivial)) = trivial", ok, w));
  ok = same_generator_images(g_functor(a, d.l), basic, &w);
  out.push_back(expect("G(X,σ_R) = π_σ", ok, w));
  return out;
}

std::vector<CheckResult> c10(const AcceptanceOptions& o) {
  Rng rng(o.seed + 10);
  CheckResult c{"(u^∨)^∧ = u", true, 0, {}};
  for (int i = 0; i < 220; ++i) {
    const int h = uniform_int(rng, 1, 4), n = uniform_int(rng, 1, 3);
    const VectHObject v = random_object(rng, h, n);
    const GroupElement alpha = random_group_element(rng, h), beta = random_group_element(rng, h);
    const DhxTerm t = random_term(rng, v, beta, alpha);  // V⊗{α} -> {β}⊗V
    ++c.cases;
    if (!(wedge(v, vee(v, t.u, alpha, beta), alpha, beta) == t.u)) c.fail("morphism #" + std::to_string(i));
  }
  return {c};
}

std::vector<CheckResult> c11(const AcceptanceOptions& o) {
  const FiniteAction a = builtin_q5().as_action();
  std::vector<CheckResult> out;
  GroupClosure g = generate_group(a, o.group_cap);
  out.push_back(
      expect("closure terminates under the cap", g.order() <= o.group_cap, "order " + std::to_string(g.order())));
  CheckResult wit{"witness words re-evaluate", true, 0, {}};
  for (std::size_t i = 0; i < g.order(); ++i) {
    ++wit.cases;
    if (!(evaluate_word(a, g.witness[i]) == g.elements[i])) wit.fail("element #" + std::to_string(i));
  }
  out.push_back(std::move(wit));
  Rng rng(o.seed + 11);
  CheckResult hom{"λ(w1w2) = (λw1)w2", true, 0, {}};
  for (int i = 0; i < 1200; ++i) {
    GeneratorWord w1 = random_generator_word(rng, a.x_size(), 6), w2 = random_generator_word(rng, a.x_size(), 6);
    GeneratorWord w12 = w1;
    w12.insert(w12.end(), w2.begin(), w2.end());
    const GroupElement e1 = evaluate_word(a, w1), e2 = evaluate_word(a, w2), e12 = evaluate_word(a, w12);
    ++hom.cases;
    for (int l = 0; l < a.h_size(); ++l)
      if (e12.apply(l) != e2.apply(e1.apply(l))) {
        hom.fail(to_string(w1) + " · " + to_string(w2) + " at λ=" + std::to_string(l));
        break;
      }
  }
  out.push_back(std::move(hom));
  return out;
}

struct Spec {
  const char* title;
  double budget_ms;
  std::function<std::vector<CheckResult>(const AcceptanceOptions&)> run;
};

const std::vector<Spec>& specs() {
  static const std::vector<Spec> s = {
      {"Q5 fidelity", 1000, c1},           {"QDYBE certification", 1000, c2},
      {"Yang-Baxter operator", 5000, c3},  {"boxtimes closure", 10000, c4},
      {"Gamma/star coherence", 10000, c5}, {"ideal killing", 30000, c6},
      {"bialgebroid axioms", 10000, c7},   {"non-direct-sum demonstration", 1000, c8},
      {"F/G isomorphism", 10000, c9},      {"vee/wedge duality", 5000, c10},
      {"group machinery", 5000, c11},
  };
  return s;
}

}  // namespace

CriterionResult run_criterion(int id, const AcceptanceOptions& opts) {
  if (id < 1 || id > kCriterionCount) throw PreconditionError("no criterion " + std::to_string(id));
  const Spec& s = specs()[id - 1];
  CriterionResult r{id, s.title, false, 0, s.budget_ms, {}};
  const auto t0 = std::chrono::steady_clock::now();
  try {
    r.checks = s.run(opts);
  } catch (const std::exception& e) {
    CheckResult c{"exception", true, 0, {}};
    c.fail(e.what());
    r.checks.push_back(std::move(c));
  }
  r.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  r.pass = r.ms < r.budget_ms;
  for (const auto& c : r.checks) r.pass = r.pass && c.pass;
  return r;
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriterionCount; ++id)
    if (opts.only.empty() || opts.only.count(id)) out.push_back(run_criterion(id, opts));
  return out;
}

}  // namespace dyfrt
