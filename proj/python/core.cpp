#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cli.hpp"
#include "dyfrt/acceptance.hpp"
#include "dyfrt/dybm.hpp"
#include "dyfrt/errors.hpp"
#include "dyfrt/frt.hpp"
#include "dyfrt/lop.hpp"
#include "dyfrt/serialize.hpp"

namespace py = pybind11;
using namespace dyfrt;

namespace {

py::dict check_dict(const CheckResult& c) {
  py::dict d;
  d["name"] = c.name;
  d["pass"] = c.pass;
  d["cases"] = c.cases;
  d["witness"] = c.witness;
  return d;
}

FiniteAction action_from_table(const std::vector<std::vector<int>>& table) {
  if (table.empty()) throw StructuralError("action table is empty");
  FiniteAction a{FiniteSet{static_cast<int>(table.size()), {}}, FiniteSet{static_cast<int>(table[0].size()), {}},
                 table};
  auto rep = validate_action(a);
  if (!rep.pass) throw StructuralError(rep.detail);
  return a;
}

Quasigroup quasigroup_from_table(const std::vector<std::vector<int>>& table) {
  Quasigroup q{FiniteSet{static_cast<int>(table.size()), {}}, table};
  auto rep = validate_quasigroup(q);
  if (!rep.pass) throw StructuralError(rep.detail);
  return q;
}

DynamicalMap default_map() { return build_from_quasigroup(builtin_q5(), builtin_z5_ternary(), {0, 1, 2, 3, 4}); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Finite dynamical Yang-Baxter maps, L-operators and the FRT bialgebroid.";

  py::register_exception<StructuralError>(m, "StructuralError", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<OverflowError>(m, "CapOverflowError", PyExc_RuntimeError);

  py::class_<DynamicalMap>(m, "DynamicalMap")
      .def_property_readonly("h_size", &DynamicalMap::h_size)
      .def_property_readonly("x_size", &DynamicalMap::x_size)
      .def_property_readonly("action", [](const DynamicalMap& r) { return r.action.table; })
      .def("__call__",
           [](const DynamicalMap& r, int l, int x, int y) {
             if (l < 0 || l >= r.h_size() || x < 0 || y < 0 || x >= r.x_size() || y >= r.x_size())
               throw py::index_error("index out of range");
             return r(l, x, y);
           })
      .def("to_json", [](const DynamicalMap& r) { return io::to_json(r).dump(); })
      .def("__eq__", [](const DynamicalMap& a, const DynamicalMap& b) { return a == b; });

  m.def("q5_table", [] { return builtin_q5().table; });
  m.def("q5_map", &default_map, "R built from the five element quasigroup and μ(a,b,c) = a - b + c on Z/5.");
  m.def(
      "build_from_quasigroup",
      [](const std::vector<std::vector<int>>& table, std::vector<int> iso) {
        Quasigroup q = quasigroup_from_table(table);
        if (iso.empty())
          for (int i = 0; i < q.size(); ++i) iso.push_back(i);
        return build_from_quasigroup(q, cyclic_ternary(q.size()), iso);
      },
      py::arg("table"), py::arg("iso") = std::vector<int>{},
      "R from a quasigroup table and μ(a,b,c) = a - b + c on Z/n.");
  m.def("flip_map", [](const std::vector<std::vector<int>>& t) { return flip_map(action_from_table(t)); });
  m.def("identity_map", [](const std::vector<std::vector<int>>& t) { return identity_map(action_from_table(t)); });
  m.def("load_dybm", [](const std::string& path) { return io::dybm_from_json(io::read_json_file(path)); });

  m.def("check_qdybe", [](const DynamicalMap& r) { return check_dict(check_qdybe(r)); });
  m.def("check_weight_zero", [](const DynamicalMap& r) { return check_dict(check_weight_zero(r)); });
  m.def("check_bijective", [](const DynamicalMap& r) { return check_dict(check_bijective(r).check); });
  m.def("check_unitarity", [](const DynamicalMap& r) {
    UnitarityResult u = check_unitarity(r);
    py::dict d = check_dict(u.check);
    d["tau_r_tau_r"] = u.tau_r_tau_r;
    d["r_tau_r_tau"] = u.r_tau_r_tau;
    return d;
  });
  m.def("check_yang_baxter",
        [](const DynamicalMap& r) { return check_dict(check_yb_operator(sigma_context_from_r(r))); });
  m.def("check_rll", [](const DynamicalMap& r) {
    SigmaContext ctx = sigma_context_from_r(r);
    return check_dict(check_rll(ctx, sigma_loperator(ctx)));
  });

  m.def(
      "group_order",
      [](const std::vector<std::vector<int>>& t, std::size_t cap) {
        return generate_group(action_from_table(t), cap).order();
      },
      py::arg("table"), py::arg("cap") = kDefaultGroupCap, "Order of the group generated by the translations λ ↦ λ·x.");

  m.def("demo_q5", [] {
    DemoReport rep = demo_nondirect_sum();
    py::list steps;
    for (const auto& s : rep.steps) {
      py::dict d;
      d["name"] = s.name;
      d["pass"] = s.pass;
      d["detail"] = s.detail;
      steps.append(d);
    }
    py::dict out;
    out["pass"] = rep.pass();
    out["steps"] = steps;
    return out;
  });

  m.def(
      "reproduce",
      [](std::vector<int> only, std::uint64_t seed) {
        AcceptanceOptions o;
        o.seed = seed;
        o.only.insert(only.begin(), only.end());
        std::vector<CriterionResult> rs;
        {
          py::gil_scoped_release release;
          rs = run_acceptance(o);
        }
        py::list out;
        for (const auto& r : rs) {
          py::dict d;
          d["id"] = r.id;
          d["title"] = r.title;
          d["pass"] = r.pass;
          d["ms"] = r.ms;
          py::list checks;
          for (const auto& c : r.checks) checks.append(check_dict(c));
          d["checks"] = checks;
          out.append(d);
        }
        return out;
      },
      py::arg("only") = std::vector<int>{}, py::arg("seed") = kDefaultSeed);

  m.def(
      "cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the command-line tool in-process; returns (exit code, stdout, stderr).");
}
