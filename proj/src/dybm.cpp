#include "dyfrt/dybm.hpp"

#include <string>

#include "dyfrt/errors.hpp"

namespace dyfrt {

namespace {

std::string tuple_str(std::initializer_list<int> xs) {
  std::string s = "(";
  bool first = true;
  for (int x : xs) {
    if (!first) s += ",";
    s += std::to_string(x);
    first = false;
  }
  return s + ")";
}

DynamicalMap blank(const FiniteAction& a) {
  DynamicalMap r{a, std::vector<Pair>(static_cast<std::size_t>(a.h_size()) * a.x_size() * a.x_size())};
  return r;
}

}  // namespace

void validate_dynamical_map(const DynamicalMap& r) {
  auto rep = validate_action(r.action);
  if (!rep.pass) throw StructuralError("dynamical map: " + rep.detail);
  const std::size_t m = r.x_size();
  if (r.table.size() != r.h_size() * m * m) throw StructuralError("dynamical map: table must cover H × X × X");
  for (const auto& [u, v] : r.table)
    if (u < 0 || v < 0 || u >= r.x_size() || v >= r.x_size())
      throw StructuralError("dynamical map: image out of range");
}

DynamicalMap build_from_quasigroup(const Quasigroup& q, const TernarySystem& t, const std::vector<int>& iso) {
  const int n = q.size();
  if (t.size() != n || static_cast<int>(iso.size()) != n)
    throw StructuralError("build_from_quasigroup: quasigroup, ternary system and iso sizes differ");
  std::vector<int> iso_inv(n, -1);
  for (int a = 0; a < n; ++a) {
    if (iso[a] < 0 || iso[a] >= n || iso_inv[iso[a]] != -1)
      throw StructuralError("build_from_quasigroup: iso is not a bijection");
    iso_inv[iso[a]] = a;
  }
  DynamicalMap r = blank(q.as_action());
  for (int l = 0; l < n; ++l) {
    for (int a = 0; a < n; ++a) {
      const int la = q.mul(l, a);
      for (int b = 0; b < n; ++b) {
        const int lab = q.mul(la, b);
        const int xi = left_divide(q, l, iso_inv[t.apply(iso[l], iso[la], iso[lab])]);
        const int eta = left_divide(q, q.mul(l, xi), lab);
        r.at(l, a, b) = {eta, xi};
      }
    }
  }
  return r;
}

DynamicalMap flip_map(const FiniteAction& a) {
  DynamicalMap r = blank(a);
  for (int l = 0; l < a.h_size(); ++l)
    for (int x = 0; x < a.x_size(); ++x)
      for (int y = 0; y < a.x_size(); ++y) r.at(l, x, y) = {y, x};
  return r;
}

DynamicalMap identity_map(const FiniteAction& a) {
  DynamicalMap r = blank(a);
  for (int l = 0; l < a.h_size(); ++l)
    for (int x = 0; x < a.x_size(); ++x)
      for (int y = 0; y < a.x_size(); ++y) r.at(l, x, y) = {x, y};
  return r;
}

CheckResult check_qdybe(const DynamicalMap& r) {
  validate_dynamical_map(r);
  const FiniteAction& a = r.action;
  CheckResult res{"qdybe", true, 0, {}};
  for (int l = 0; l < r.h_size(); ++l) {
    for (int x = 0; x < r.x_size(); ++x) {
      for (int y = 0; y < r.x_size(); ++y) {
        for (int z = 0; z < r.x_size(); ++z) {
          ++res.cases;
          // Left side: R12(λ), then R13 shifted by the current second slot, then R23(λ).
          auto [x1, y1] = r(l, x, y);
          auto [x2, z2] = r(a.act(l, y1), x1, z);
          auto [y3, z3] = r(l, y1, z2);
          // Right side: R23 shifted by the first slot, then R13(λ), then R12 shifted by the third slot.
          auto [p1, q1] = r(a.act(l, x), y, z);
          auto [o2, q2] = r(l, x, q1);
          auto [o3, p3] = r(a.act(l, q2), o2, p1);
          if (x2 != o3 || y3 != p3 || z3 != q2) {
            res.fail("λ=" + std::to_string(l) + " (x,y,z)=" + tuple_str({x, y, z}) +
                     ": lhs=" + tuple_str({x2, y3, z3}) + " rhs=" + tuple_str({o3, p3, q2}));
          }
        }
      }
    }
  }
  return res;
}

CheckResult check_weight_zero(const DynamicalMap& r) {
  validate_dynamical_map(r);
  const FiniteAction& a = r.action;
  CheckResult res{"weight_zero", true, 0, {}};
  for (int l = 0; l < r.h_size(); ++l) {
    for (int x = 0; x < r.x_size(); ++x) {
      for (int y = 0; y < r.x_size(); ++y) {
        ++res.cases;
        auto [u, v] = r(l, x, y);
        int lhs = a.act(a.act(l, v), u), rhs = a.act(a.act(l, x), y);
        if (lhs != rhs)
          res.fail("λ=" + std::to_string(l) + " (x,y)=" + tuple_str({x, y}) + " -> (u,v)=" + tuple_str({u, v}) +
                   ": (λ·v)·u=" + std::to_string(lhs) + " but (λ·x)·y=" + std::to_string(rhs));
      }
    }
  }
  return res;
}

BijectivityResult check_bijective(const DynamicalMap& r) {
  validate_dynamical_map(r);
  BijectivityResult out{CheckResult{"bijective", true, 0, {}}, std::nullopt};
  DynamicalMap inv = blank(r.action);
  const int m = r.x_size();
  for (int l = 0; l < r.h_size(); ++l) {
    std::vector<int> seen(static_cast<std::size_t>(m) * m, -1);
    for (int x = 0; x < m; ++x) {
      for (int y = 0; y < m; ++y) {
        ++out.check.cases;
        auto [u, v] = r(l, x, y);
        int& slot = seen[static_cast<std::size_t>(u) * m + v];
        if (slot != -1) {
          out.check.fail("λ=" + std::to_string(l) + ": " + tuple_str({slot / m, slot % m}) + " and " +
                         tuple_str({x, y}) + " both map to " + tuple_str({u, v}));
        }
        slot = x * m + y;
        inv.at(l, u, v) = {x, y};
      }
    }
  }
  if (out.check.pass) out.inverse = std::move(inv);
  return out;
}

UnitarityResult check_unitarity(const DynamicalMap& r) {
  if (!check_bijective(r).check.pass) throw PreconditionError("check_unitarity: map is not bijective");
  UnitarityResult out{CheckResult{"unitarity", true, 0, {}}, true, true};
  std::string first_witness, alt_witness;
  for (int l = 0; l < r.h_size(); ++l) {
    for (int x = 0; x < r.x_size(); ++x) {
      for (int y = 0; y < r.x_size(); ++y) {
        ++out.check.cases;
        auto [u, v] = r(l, x, y);
        auto [p, q] = r(l, v, u);
        if (out.tau_r_tau_r && !(q == x && p == y)) {
          out.tau_r_tau_r = false;
          first_witness = "τRτR: λ=" + std::to_string(l) + " " + tuple_str({x, y}) + " -> " + tuple_str({q, p});
        }
        auto [s, t] = r(l, y, x);
        auto [c, d] = r(l, t, s);
        if (out.r_tau_r_tau && !(c == x && d == y)) {
          out.r_tau_r_tau = false;
          alt_witness = "RτRτ: λ=" + std::to_string(l) + " " + tuple_str({x, y}) + " -> " + tuple_str({c, d});
        }
      }
    }
  }
  if (!out.tau_r_tau_r)
    out.check.fail(first_witness + "; alternate orientation " + (out.r_tau_r_tau ? "holds" : "fails: " + alt_witness));
  return out;
}

VectHMorphism sigma_from_r(const DynamicalMap& r) {
  auto wz = check_weight_zero(r);
  if (!wz.pass)
    throw PreconditionError("sigma_from_r: weight zero fails, support condition would break at " + wz.witness);
  VectHObject x = object_from_action(r.action);
  VectHObject xx = tensor_obj(x, x);
  const int m = r.x_size();
  VectHMorphism s = zero_morphism(xx, xx);
  for (int l = 0; l < r.h_size(); ++l) {
    std::vector<Triplet> t;
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b) {
        auto [u, v] = r(l, b, a);
        t.push_back({static_cast<std::size_t>(u * m + v), static_cast<std::size_t>(a * m + b), Scalar(1)});
      }
    s.mats[l] = Matrix::from_triplets(xx.size(), xx.size(), std::move(t));
  }
  return s;
}

}  // namespace dyfrt
