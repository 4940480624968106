#include "cli.hpp"

#include <gmp.h>

#include <CLI11.hpp>
#include <chrono>
#include <functional>
#include <sstream>

#include "dyfrt/acceptance.hpp"
#include "dyfrt/errors.hpp"
#include "dyfrt/serialize.hpp"

namespace dyfrt::cli {

namespace {

using io::Json;

constexpr const char* kVersion = "0.1.0";

struct Flags {
  bool json = true;
  bool witness = false;
  bool timing = false;
  std::uint64_t seed = kDefaultSeed;
  std::size_t cap = kDefaultGroupCap;
};

class Report {
 public:
  Report(std::string command, const Flags& f) : command_(std::move(command)), flags_(f) {}

  /// Runs fn, timing it, and records its CheckResult.
  void check(const std::function<CheckResult()>& fn) {
    auto t0 = std::chrono::steady_clock::now();
    CheckResult c = fn();
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    add(c, ms);
  }

  void add(const CheckResult& c, double ms = -1, Json extra = nullptr) {
    Json j;
    j["name"] = c.name;
    j["pass"] = c.pass;
    j["cases"] = c.cases;
    if (!c.pass || flags_.witness) j["witness"] = c.witness;
    if (flags_.timing && ms >= 0) j["timing_ms"] = static_cast<long long>(ms + 0.5);
    if (!extra.is_null())
      for (auto& [k, v] : extra.items()) j[k] = v;
    pass_ = pass_ && c.pass;
    checks_.push_back(std::move(j));
  }

  void set_result(Json r) { result_ = std::move(r); }
  bool pass() const { return pass_; }

  int emit(std::ostream& out) const {
    Json j;
    j["command"] = command_;
    j["pass"] = pass_;
    j["checks"] = checks_;
    if (!result_.is_null()) j["result"] = result_;
    Json v;
    v["dyfrt"] = kVersion;
    v["gmp"] = gmp_version;
    v["report_format"] = 1;
    j["artifact_versions"] = std::move(v);
    out << j.dump(2) << "\n";
    return pass_ ? kExitPass : kExitCheckFailure;
  }

 private:
  std::string command_;
  Flags flags_;
  bool pass_ = true;
  Json checks_ = Json::array();
  Json result_;
};

CheckResult passed(std::string name, std::size_t cases = 1) { return CheckResult{std::move(name), true, cases, {}}; }

CheckResult failed(std::string name, std::string witness) {
  CheckResult c{std::move(name), true, 1, {}};
  c.fail(std::move(witness));
  return c;
}

Json perm(const GroupElement& g) { return g.perm; }

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

// ---------------------------------------------------------------- commands

int cmd_validate(const std::string& file, const Flags& f, std::ostream& out) {
  Report rep("validate", f);
  io::Structure s = io::structure_from_json(io::read_json_file(file));
  auto from_report = [](std::string name, const ValidationReport& v) {
    CheckResult c = passed(std::move(name));
    if (!v.pass) c.fail(v.detail);
    return c;
  };
  if (auto* q = std::get_if<Quasigroup>(&s)) {
    rep.add(from_report("quasigroup", validate_quasigroup(*q)));
  } else if (auto* a = std::get_if<FiniteAction>(&s)) {
    rep.add(from_report("action", validate_action(*a)));
  } else {
    validate_ternary(std::get<TernarySystem>(s));
    rep.add(passed("ternary"));
  }
  return rep.emit(out);
}

int cmd_dybm_check(const std::string& file, bool qdybe, bool wz, bool bij, bool unit, const Flags& f,
                   std::ostream& out) {
  if (!qdybe && !wz && !bij && !unit) qdybe = wz = bij = unit = true;
  DynamicalMap r = io::dybm_from_json(io::read_json_file(file));
  Report rep("dybm check", f);
  if (qdybe) rep.check([&] { return check_qdybe(r); });
  if (wz) rep.check([&] { return check_weight_zero(r); });
  if (bij) rep.check([&] { return check_bijective(r).check; });
  if (unit) {
    auto t0 = std::chrono::steady_clock::now();
    if (!check_bijective(r).check.pass) {
      rep.add(failed("unitarity", "map is not bijective"));
    } else {
      UnitarityResult u = check_unitarity(r);
      Json extra;
      extra["tau_r_tau_r"] = u.tau_r_tau_r;
      extra["r_tau_r_tau"] = u.r_tau_r_tau;
      rep.add(u.check, std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count(),
              std::move(extra));
    }
  }
  return rep.emit(out);
}

int cmd_dybm_build(const std::string& qfile, const std::string& tfile, const std::string& iso_text,
                   const std::string& out_file, const Flags& f, std::ostream& out) {
  Quasigroup q = builtin_q5();
  TernarySystem t = builtin_z5_ternary();
  if (!qfile.empty()) {
    io::Structure s = io::structure_from_json(io::read_json_file(qfile));
    if (!std::holds_alternative<Quasigroup>(s)) throw StructuralError("expected a quasigroup file");
    q = std::get<Quasigroup>(s);
  }
  if (!tfile.empty()) {
    io::Structure s = io::structure_from_json(io::read_json_file(tfile));
    if (!std::holds_alternative<TernarySystem>(s)) throw StructuralError("expected a ternary file");
    t = std::get<TernarySystem>(s);
  }
  std::vector<int> iso;
  if (iso_text.empty()) {
    for (int i = 0; i < q.size(); ++i) iso.push_back(i);
  } else {
    for (const auto& s : split_list(iso_text)) {
      try {
        iso.push_back(std::stoi(s));
      } catch (const std::exception&) {
        throw StructuralError("--iso: not an integer list");
      }
    }
  }
  Report rep("dybm build", f);
  DynamicalMap r = build_from_quasigroup(q, t, iso);
  io::write_json_file(out_file, io::to_json(r));
  rep.add(passed("build"));
  return rep.emit(out);
}

int cmd_wgroup_order(const std::string& file, const Flags& f, std::ostream& out) {
  FiniteAction a = io::action_from_json(io::read_json_file(file));
  ValidationReport v = validate_action(a);
  Report rep("wgroup order", f);
  if (!v.pass) {
    rep.add(failed("action", v.detail));
    return rep.emit(out);
  }
  GroupClosure g;
  try {
    g = generate_group(a, f.cap);
  } catch (const OverflowError& e) {
    rep.add(failed("closure", e.what()));
    return rep.emit(out);
  }
  CheckResult wit = passed("witness words", g.order());
  for (std::size_t i = 0; i < g.order(); ++i)
    if (!(evaluate_word(a, g.witness[i]) == g.elements[i])) wit.fail("element #" + std::to_string(i));
  rep.add(passed("closure"));
  rep.add(wit);
  Json r;
  r["order"] = g.order();
  Json orders = Json::array();
  for (int x = 0; x < a.x_size(); ++x) orders.push_back(element_order(translation_element(a, x)));
  r["generator_orders"] = std::move(orders);
  Json sample = Json::array();
  for (std::size_t i = 0; i < std::min<std::size_t>(g.order(), 8); ++i) {
    Json s;
    s["element"] = perm(g.elements[i]);
    s["word"] = to_string(g.witness[i]);
    sample.push_back(std::move(s));
  }
  r["witness_sample"] = std::move(sample);
  rep.set_result(std::move(r));
  return rep.emit(out);
}

int cmd_lop_check(const std::string& sigma_file, const std::string& lfile, const Flags& f, std::ostream& out) {
  SigmaContext ctx = io::sigma_from_json(io::read_json_file(sigma_file));
  LOperator l = io::loperator_from_json(io::read_json_file(lfile), ctx.x);
  Report rep("lop check", f);
  rep.check([&] { return check_rll(ctx, l); });
  return rep.emit(out);
}

int cmd_lop_sigma(const std::string& sigma_file, const std::string& out_file, const Flags& f, std::ostream& out) {
  SigmaContext ctx = io::sigma_from_json(io::read_json_file(sigma_file));
  Report rep("lop sigma", f);
  rep.check([&] { return check_yb_operator(ctx); });
  if (rep.pass()) io::write_json_file(out_file, io::to_json(sigma_loperator(ctx)));
  return rep.emit(out);
}

int cmd_lop_tensor(const std::string& a_file, const std::string& b_file, const std::string& sigma_file,
                   const std::string& out_file, const Flags& f, std::ostream& out) {
  Report rep("lop tensor", f);
  io::Json ja = io::read_json_file(a_file), jb = io::read_json_file(b_file);
  if (!ja.contains("x")) throw StructuralError("loperator file needs \"x\" when no sigma file is given");
  VectHObject x = io::object_from_json(ja.at("x"));
  std::optional<SigmaContext> ctx;
  if (!sigma_file.empty()) {
    ctx = io::sigma_from_json(io::read_json_file(sigma_file));
    x = ctx->x;
  }
  LOperator la = io::loperator_from_json(ja, x), lb = io::loperator_from_json(jb, x);
  LOperator prod;
  if (ctx) {
    CheckResult ra = check_rll(*ctx, la), rb = check_rll(*ctx, lb);
    ra.name = "rll(first)";
    rb.name = "rll(second)";
    rep.add(ra);
    rep.add(rb);
    if (!rep.pass()) return rep.emit(out);
    prod = boxtimes(*ctx, la, lb);
    rep.check([&] {
      CheckResult c = check_rll(*ctx, prod);
      c.name = "rll(product)";
      return c;
    });
  } else {
    prod = boxtimes_unchecked(la, lb);
    rep.add(passed("tensor"));
  }
  io::write_json_file(out_file, io::to_json(prod));
  return rep.emit(out);
}

std::vector<std::pair<std::string, LOperator>> load_loperators(const SigmaContext& ctx, const std::string& list) {
  std::vector<std::pair<std::string, LOperator>> ops;
  for (const auto& file : split_list(list))
    ops.emplace_back(file, io::loperator_from_json(io::read_json_file(file), ctx.x));
  return ops;
}

int cmd_frt_demo(const Flags& f, std::ostream& out) {
  Report rep("frt demo-q5", f);
  DemoReport d = demo_nondirect_sum();
  Json steps = Json::array();
  for (const auto& s : d.steps) {
    CheckResult c = passed(s.name);
    if (!s.pass) c.fail(s.detail);
    Json extra;
    extra["detail"] = s.detail;
    rep.add(c, -1, std::move(extra));
  }
  Json r;
  r["element"] = io::to_json(d.element);
  r["rewritten"] = io::to_json(d.rewritten);
  rep.set_result(std::move(r));
  return rep.emit(out);
}

int cmd_frt_verify(const std::string& sigma_file, const std::string& lops, const Flags& f, std::ostream& out) {
  io::Json js = io::read_json_file(sigma_file);
  SigmaContext ctx = io::sigma_from_json(js);
  FiniteAction a = io::sigma_action_from_json(js);
  Report rep("frt verify", f);
  auto ops = load_loperators(ctx, lops);
  CheckResult yb = check_yb_operator(ctx);
  if (yb.pass) ops.insert(ops.begin(), {"(X,sigma)", sigma_loperator(ctx)});
  rep.add(yb);
  const auto gens = ideal_generators(ctx, a);
  EvaluationBattery battery;
  rep.check([&] { return battery.try_add(counit_channel(a), gens); });
  for (const auto& [name, l] : ops) {
    CheckResult rll = check_rll(ctx, l);
    rll.name = "rll[" + name + "]";
    rep.add(rll);
    if (rll.pass) rep.check([&] { return battery.try_add(rep_channel(name, g_functor(a, l)), gens); });
  }
  if (rep.pass()) {
    auto t0 = std::chrono::steady_clock::now();
    BialgebroidReport br = check_bialgebroid_axioms(ctx, a, battery);
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    for (const auto& c : br.checks) rep.add(c, ms / static_cast<double>(br.checks.size()));
  }
  return rep.emit(out);
}

int cmd_frt_eval(const std::string& sigma_file, const std::string& element_file, const std::string& lops,
                 const Flags& f, std::ostream& out) {
  io::Json js = io::read_json_file(sigma_file);
  SigmaContext ctx = io::sigma_from_json(js);
  FiniteAction a = io::sigma_action_from_json(js);
  AlgebraElement e = io::element_from_json(io::read_json_file(element_file), a.h_size(), a.x_size());
  auto ops = load_loperators(ctx, lops);
  if (check_yb_operator(ctx).pass) ops.insert(ops.begin(), {"(X,sigma)", sigma_loperator(ctx)});
  Report rep("frt eval", f);
  Json images = Json::array();
  auto emit_image = [&](const Channel& ch) {
    DhxElement img = ch.eval(e);
    Json j;
    j["channel"] = ch.name();
    j["image"] = io::to_json(img);
    j["operator"] = io::matrix_to_json(gamma_operator(img));
    images.push_back(std::move(j));
  };
  emit_image(*counit_channel(a));
  for (const auto& [name, l] : ops) {
    CheckResult rll = check_rll(ctx, l);
    rll.name = "rll[" + name + "]";
    rep.add(rll);
    if (rll.pass) emit_image(*rep_channel(name, g_functor(a, l)));
  }
  Json r;
  r["element"] = io::to_json(e);
  r["images"] = std::move(images);
  rep.set_result(std::move(r));
  return rep.emit(out);
}

int cmd_reproduce(const std::string& only, const Flags& f, std::ostream& out) {
  AcceptanceOptions o;
  o.seed = f.seed;
  o.group_cap = f.cap;
  for (const auto& s : split_list(only)) {
    int id = 0;
    try {
      id = std::stoi(s);
    } catch (const std::exception&) {
      throw StructuralError("--only: not an integer list");
    }
    if (id < 1 || id > kCriterionCount) throw StructuralError("--only: no criterion " + s);
    o.only.insert(id);
  }
  Report rep("reproduce", f);
  for (const auto& r : run_acceptance(o)) {
    CheckResult c = passed("criterion " + std::to_string(r.id) + ": " + r.title, r.checks.size());
    std::string why;
    for (const auto& sub : r.checks)
      if (!sub.pass) why += (why.empty() ? "" : "; ") + sub.name + ": " + sub.witness;
    if (r.ms >= r.budget_ms)
      why += (why.empty() ? "" : "; ") + std::string("over time budget of ") + std::to_string(r.budget_ms) + " ms";
    if (!r.pass) c.fail(why);
    Json extra;
    Json subs = Json::array();
    for (const auto& sub : r.checks) {
      Json s;
      s["name"] = sub.name;
      s["pass"] = sub.pass;
      s["cases"] = sub.cases;
      if (!sub.pass || f.witness) s["witness"] = sub.witness;
      subs.push_back(std::move(s));
    }
    extra["details"] = std::move(subs);
    rep.add(c, r.ms, std::move(extra));
  }
  return rep.emit(out);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact certifiers for dynamical Yang-Baxter maps and the FRT bialgebroid"};
  app.name("dyfrt");
  app.require_subcommand(1);
  app.fallthrough();
  Flags f;
  app.add_flag("--json", f.json, "emit the JSON report (default)");
  app.add_flag("--witness", f.witness, "include witness fields on passing checks too");
  app.add_flag("--timing", f.timing, "add timing_ms to each check");
  app.add_option("--seed", f.seed, "seed for randomized checks");
  app.add_option("--cap", f.cap, "group closure cap");

  std::function<int()> action;

  std::string file, file2, sigma_file, out_file, lops, iso, only;
  bool qdybe = false, wz = false, bij = false, unit = false;

  auto* validate = app.add_subcommand("validate", "validate a structure file");
  validate->add_option("file", file)->required();
  validate->callback([&] { action = [&] { return cmd_validate(file, f, out); }; });

  auto* dybm = app.add_subcommand("dybm", "dynamical Yang-Baxter maps")->require_subcommand(1);
  auto* dcheck = dybm->add_subcommand("check", "certify a dybm file");
  dcheck->add_option("file", file)->required();
  dcheck->add_flag("--qdybe", qdybe);
  dcheck->add_flag("--weight-zero", wz);
  dcheck->add_flag("--bijective", bij);
  dcheck->add_flag("--unitary", unit);
  dcheck->callback([&] { action = [&] { return cmd_dybm_check(file, qdybe, wz, bij, unit, f, out); }; });
  auto* dbuild = dybm->add_subcommand("build", "build R from a quasigroup and a ternary system (Q5 by default)");
  dbuild->add_option("--quasigroup", file);
  dbuild->add_option("--ternary", file2);
  dbuild->add_option("--iso", iso, "comma separated images of the quasigroup elements");
  dbuild->add_option("-o,--output", out_file)->required();
  dbuild->callback([&] { action = [&] { return cmd_dybm_build(file, file2, iso, out_file, f, out); }; });

  auto* wg = app.add_subcommand("wgroup", "the grading group")->require_subcommand(1);
  auto* order = wg->add_subcommand("order", "order of the group generated by the translations");
  order->add_option("file", file)->required();
  order->callback([&] { action = [&] { return cmd_wgroup_order(file, f, out); }; });

  auto* lop = app.add_subcommand("lop", "L-operators")->require_subcommand(1);
  auto* lcheck = lop->add_subcommand("check", "check RLL for an L-operator");
  lcheck->add_option("sigma", sigma_file)->required();
  lcheck->add_option("loperator", file)->required();
  lcheck->callback([&] { action = [&] { return cmd_lop_check(sigma_file, file, f, out); }; });
  auto* ltensor = lop->add_subcommand("tensor", "the product of two L-operators");
  ltensor->add_option("first", file)->required();
  ltensor->add_option("second", file2)->required();
  ltensor->add_option("--sigma", sigma_file, "check RLL on both factors and the product");
  ltensor->add_option("-o,--output", out_file)->required();
  ltensor->callback([&] { action = [&] { return cmd_lop_tensor(file, file2, sigma_file, out_file, f, out); }; });
  auto* lsigma = lop->add_subcommand("sigma", "write (X, σ) as an L-operator file");
  lsigma->add_option("sigma", sigma_file)->required();
  lsigma->add_option("-o,--output", out_file)->required();
  lsigma->callback([&] { action = [&] { return cmd_lop_sigma(sigma_file, out_file, f, out); }; });

  auto* frt = app.add_subcommand("frt", "the FRT bialgebroid")->require_subcommand(1);
  auto* demo = frt->add_subcommand("demo-q5", "the non-direct-sum computation over Q5");
  demo->callback([&] { action = [&] { return cmd_frt_demo(f, out); }; });
  auto* verify = frt->add_subcommand("verify", "ideal killing and bialgebroid axioms");
  verify->add_option("sigma", sigma_file)->required();
  verify->add_option("--loperators", lops, "comma separated L-operator files");
  verify->callback([&] { action = [&] { return cmd_frt_verify(sigma_file, lops, f, out); }; });
  auto* eval = frt->add_subcommand("eval", "images of an element under every channel");
  eval->add_option("sigma", sigma_file)->required();
  eval->add_option("element", file)->required();
  eval->add_option("--loperators", lops, "comma separated L-operator files");
  eval->callback([&] { action = [&] { return cmd_frt_eval(sigma_file, file, lops, f, out); }; });

  auto* repro = app.add_subcommand("reproduce", "run acceptance criteria 1-11");
  repro->add_option("--only", only, "comma separated criterion numbers");
  repro->callback([&] { action = [&] { return cmd_reproduce(only, f, out); }; });

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "dyfrt: " << e.what() << "\n";
    return kExitParseError;
  }

  try {
    return action();
  } catch (const StructuralError& e) {
    err << "dyfrt: " << e.what() << "\n";
    return kExitParseError;
  } catch (const std::exception& e) {
    Report rep("error", f);
    rep.add(failed("exception", e.what()));
    return rep.emit(out);
  }
}

}  // namespace dyfrt::cli
