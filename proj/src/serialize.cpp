#include "dyfrt/serialize.hpp"

#include <fstream>
#include <sstream>

#include "dyfrt/errors.hpp"

namespace dyfrt::io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw StructuralError(what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

int get_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) bad(std::string(what) + ": expected an integer");
  return j.get<int>();
}

int get_size(const Json& j, const char* key, int cap) {
  int n = get_int(field(j, key), key);
  if (n < 1) bad(std::string(key) + " must be at least 1");
  if (n > cap) bad(std::string(key) + " = " + std::to_string(n) + " exceeds the size cap " + std::to_string(cap));
  return n;
}

std::vector<std::vector<int>> int_table(const Json& j, int rows, int cols, int range, const char* what) {
  if (!j.is_array() || static_cast<int>(j.size()) != rows)
    bad(std::string(what) + ": expected " + std::to_string(rows) + " rows");
  std::vector<std::vector<int>> t(rows);
  for (int r = 0; r < rows; ++r) {
    const Json& row = j[r];
    if (!row.is_array() || static_cast<int>(row.size()) != cols)
      bad(std::string(what) + ": row " + std::to_string(r) + " must have " + std::to_string(cols) + " entries");
    for (int c = 0; c < cols; ++c) {
      int v = get_int(row[c], what);
      if (v < 0 || v >= range)
        bad(std::string(what) + ": entry (" + std::to_string(r) + "," + std::to_string(c) + ") = " + std::to_string(v) +
            " out of range");
      t[r].push_back(v);
    }
  }
  return t;
}

std::vector<std::string> labels(const Json& j, int n) {
  if (!j.contains("labels")) return {};
  std::vector<std::string> out;
  const Json& l = j.at("labels");
  if (!l.is_array() || static_cast<int>(l.size()) != n) bad("labels must list one string per element");
  for (const auto& s : l) {
    if (!s.is_string()) bad("labels must be strings");
    out.push_back(s.get<std::string>());
  }
  return out;
}

void put_labels(Json& j, const FiniteSet& s) {
  if (!s.labels.empty()) j["labels"] = s.labels;
}

}  // namespace

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return Json::parse(ss.str());
  } catch (const nlohmann::json::exception& e) {
    bad(path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) bad("cannot write " + path);
  out << j.dump(2) << "\n";
}

Json scalar_to_json(const Scalar& s) { return to_string(s); }

Scalar scalar_from_json(const Json& j) {
  if (j.is_number_integer()) return Scalar(j.get<long>());
  if (j.is_string()) return parse_scalar(j.get<std::string>());
  bad("scalar: expected an integer or a \"p/q\" string");
}

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (const auto& r : m.to_dense()) {
    Json row = Json::array();
    for (const auto& x : r) row.push_back(scalar_to_json(x));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols) {
  if (!j.is_array() || j.size() != rows) bad("matrix: expected " + std::to_string(rows) + " rows");
  std::vector<Triplet> t;
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols) bad("matrix: row " + std::to_string(r) + " has the wrong length");
    for (std::size_t c = 0; c < cols; ++c) {
      Scalar v = scalar_from_json(j[r][c]);
      if (!is_zero(v)) t.push_back({r, c, v});
    }
  }
  return Matrix::from_triplets(rows, cols, std::move(t));
}

Json to_json(const Quasigroup& q) {
  Json j;
  j["kind"] = "quasigroup";
  j["size"] = q.size();
  put_labels(j, q.carrier);
  j["table"] = q.table;
  return j;
}

Json to_json(const FiniteAction& a) {
  Json j;
  j["kind"] = "action";
  j["h_size"] = a.h_size();
  j["x_size"] = a.x_size();
  j["table"] = a.table;
  return j;
}

Json to_json(const TernarySystem& t) {
  const int n = t.size();
  Json j;
  j["kind"] = "ternary";
  j["size"] = n;
  put_labels(j, t.carrier);
  Json table = Json::array();
  for (int a = 0; a < n; ++a) {
    Json plane = Json::array();
    for (int b = 0; b < n; ++b) {
      Json row = Json::array();
      for (int c = 0; c < n; ++c) row.push_back(t.apply(a, b, c));
      plane.push_back(std::move(row));
    }
    table.push_back(std::move(plane));
  }
  j["table"] = std::move(table);
  return j;
}

Structure structure_from_json(const Json& j, int cap) {
  const Json& kind = field(j, "kind");
  if (!kind.is_string()) bad("kind must be a string");
  const std::string k = kind.get<std::string>();
  if (k == "quasigroup") {
    int n = get_size(j, "size", cap);
    Quasigroup q{FiniteSet{n, labels(j, n)}, int_table(field(j, "table"), n, n, n, "table")};
    return q;
  }
  if (k == "action") {
    int h = get_size(j, "h_size", cap), m = get_size(j, "x_size", cap);
    FiniteAction a{FiniteSet{h, {}}, FiniteSet{m, {}}, int_table(field(j, "table"), h, m, h, "table")};
    return a;
  }
  if (k == "ternary") {
    int n = get_size(j, "size", cap);
    const Json& t = field(j, "table");
    if (!t.is_array() || static_cast<int>(t.size()) != n)
      bad("ternary table: expected " + std::to_string(n) + " planes");
    TernarySystem s{FiniteSet{n, labels(j, n)}, {}};
    for (int a = 0; a < n; ++a)
      for (const auto& row : int_table(t[a], n, n, n, "ternary table"))
        s.table.insert(s.table.end(), row.begin(), row.end());
    return s;
  }
  bad("unknown kind \"" + k + "\"");
}

FiniteAction action_from_json(const Json& j, int cap) {
  if (j.is_object() && j.contains("kind") && j.at("kind") == "dybm") return dybm_from_json(j, cap).action;
  Structure s = structure_from_json(j, cap);
  if (auto* a = std::get_if<FiniteAction>(&s)) return *a;
  if (auto* q = std::get_if<Quasigroup>(&s)) return q->as_action();
  bad("expected an action or a quasigroup");
}

Json to_json(const VectHObject& v) {
  Json j;
  j["h_size"] = v.h_size;
  j["act"] = v.act;
  return j;
}

VectHObject object_from_json(const Json& j) {
  int h = get_int(field(j, "h_size"), "h_size");
  if (h < 1) bad("h_size must be at least 1");
  const Json& act = field(j, "act");
  if (!act.is_array() || static_cast<int>(act.size()) != h) bad("act: expected one row per λ");
  int n = act[0].is_array() ? static_cast<int>(act[0].size()) : 0;
  return make_object(h, int_table(act, h, n, h, "act"));
}

Json to_json(const VectHMorphism& f) {
  Json j;
  j["source"] = to_json(f.source);
  j["target"] = to_json(f.target);
  Json mats = Json::array();
  for (const auto& m : f.mats) mats.push_back(matrix_to_json(m));
  j["mats"] = std::move(mats);
  return j;
}

VectHMorphism morphism_from_json(const Json& j) {
  VectHMorphism f{object_from_json(field(j, "source")), object_from_json(field(j, "target")), {}};
  if (f.source.h_size != f.target.h_size) bad("morphism: source and target over different H");
  const Json& mats = field(j, "mats");
  if (!mats.is_array() || static_cast<int>(mats.size()) != f.source.h_size) bad("mats: expected one matrix per λ");
  for (const auto& m : mats) f.mats.push_back(matrix_from_json(m, f.target.size(), f.source.size()));
  return f;
}

Json to_json(const DynamicalMap& r) {
  const int h = r.h_size(), m = r.x_size();
  Json j;
  j["kind"] = "dybm";
  j["h_size"] = h;
  j["x_size"] = m;
  j["action"] = r.action.table;
  Json rr = Json::array();
  for (int l = 0; l < h; ++l) {
    Json plane = Json::array();
    for (int x = 0; x < m; ++x) {
      Json row = Json::array();
      for (int y = 0; y < m; ++y) row.push_back(Json::array({r(l, x, y).first, r(l, x, y).second}));
      plane.push_back(std::move(row));
    }
    rr.push_back(std::move(plane));
  }
  j["r"] = std::move(rr);
  return j;
}

DynamicalMap dybm_from_json(const Json& j, int cap) {
  const Json& kind = field(j, "kind");
  if (!kind.is_string() || kind.get<std::string>() != "dybm") bad("expected kind \"dybm\"");
  int h = get_size(j, "h_size", cap), m = get_size(j, "x_size", cap);
  DynamicalMap r{FiniteAction{FiniteSet{h, {}}, FiniteSet{m, {}}, int_table(field(j, "action"), h, m, h, "action")},
                 {}};
  const Json& t = field(j, "r");
  if (!t.is_array() || static_cast<int>(t.size()) != h) bad("r: expected one plane per λ");
  r.table.reserve(static_cast<std::size_t>(h) * m * m);
  for (int l = 0; l < h; ++l) {
    if (!t[l].is_array() || static_cast<int>(t[l].size()) != m)
      bad("r: plane " + std::to_string(l) + " has wrong size");
    for (int x = 0; x < m; ++x) {
      const Json& row = t[l][x];
      if (!row.is_array() || static_cast<int>(row.size()) != m) bad("r: row has wrong size");
      for (int y = 0; y < m; ++y) {
        const Json& p = row[y];
        if (!p.is_array() || p.size() != 2) bad("r: each entry must be a pair [u, v]");
        r.table.emplace_back(get_int(p[0], "r"), get_int(p[1], "r"));
      }
    }
  }
  validate_dynamical_map(r);
  return r;
}

SigmaContext sigma_from_json(const Json& j, int cap) {
  const Json& kind = field(j, "kind");
  if (!kind.is_string()) bad("kind must be a string");
  if (kind.get<std::string>() == "dybm") return sigma_context_from_r(dybm_from_json(j, cap));
  if (kind.get<std::string>() != "sigma") bad("expected kind \"sigma\" or \"dybm\"");
  VectHObject x = object_from_json(field(j, "x"));
  if (x.h_size > cap || x.size() > cap) bad("sigma: carrier exceeds the size cap");
  VectHObject xx = tensor_obj(x, x);
  Json m;
  m["source"] = to_json(xx);
  m["target"] = to_json(xx);
  m["mats"] = field(j, "mats");
  return make_sigma_context(x, morphism_from_json(m));
}

FiniteAction sigma_action_from_json(const Json& j, int cap) {
  if (field(j, "kind") == "dybm") return dybm_from_json(j, cap).action;
  VectHObject x = object_from_json(field(j, "x"));
  FiniteAction a{FiniteSet{x.h_size, {}}, FiniteSet{x.size(), {}}, x.act};
  auto rep = validate_action(a);
  if (!rep.pass) bad("sigma: X does not act by bijections (" + rep.detail + ")");
  return a;
}

Json to_json(const LOperator& l) {
  Json j;
  j["kind"] = "loperator";
  j["x"] = to_json(l.x);
  j["v"] = to_json(l.v);
  Json mats = Json::array();
  for (const auto& m : l.l.mats) mats.push_back(matrix_to_json(m));
  j["mats"] = std::move(mats);
  return j;
}

LOperator loperator_from_json(const Json& j, const VectHObject& x) {
  const Json& kind = field(j, "kind");
  if (!kind.is_string() || kind.get<std::string>() != "loperator") bad("expected kind \"loperator\"");
  if (j.contains("x") && !(object_from_json(j.at("x")) == x)) bad("loperator: X differs from the sigma file");
  VectHObject v = object_from_json(field(j, "v"));
  if (v.h_size != x.h_size) bad("loperator: V over a different H");
  Json m;
  m["source"] = to_json(tensor_obj(v, x));
  m["target"] = to_json(tensor_obj(x, v));
  m["mats"] = field(j, "mats");
  VectHMorphism l = morphism_from_json(m);
  CheckResult r = check_morphism(l);
  if (!r.pass) bad("loperator: support condition fails at " + r.witness);
  return make_loperator(x, v, l);
}

Json to_json(const AlgebraElement& e) {
  Json out = Json::array();
  for (const auto& [w, c] : e.terms()) {
    Json word = Json::array();
    for (const Letter& l : w) {
      Json letter;
      switch (l.kind) {
        case LetterKind::Gen:
          letter["L"] = Json::array({l.a, l.b});
          break;
        case LetterKind::GenInv:
          letter["Linv"] = Json::array({l.a, l.b});
          break;
        case LetterKind::Scalar2:
          letter["scalar"] = matrix_to_json(l.xi);
          break;
      }
      word.push_back(std::move(letter));
    }
    Json t;
    t["coeff"] = scalar_to_json(c);
    t["word"] = std::move(word);
    out.push_back(std::move(t));
  }
  return out;
}

AlgebraElement element_from_json(const Json& j, int h, int m) {
  if (!j.is_array()) bad("element: expected a list of terms");
  AlgebraElement e(h);
  for (const auto& t : j) {
    Scalar c = t.contains("coeff") ? scalar_from_json(t.at("coeff")) : Scalar(1);
    const Json& wj = field(t, "word");
    if (!wj.is_array()) bad("element: word must be a list of letters");
    Word w;
    for (const auto& lj : wj) {
      if (!lj.is_object() || lj.size() != 1) bad("element: each letter has exactly one tag");
      auto pair = [&](const char* key) {
        const Json& p = lj.at(key);
        if (!p.is_array() || p.size() != 2) bad(std::string(key) + ": expected [a, b]");
        int a = get_int(p[0], key), b = get_int(p[1], key);
        if (a < 0 || a >= m || b < 0 || b >= m) bad(std::string(key) + ": index out of range");
        return std::make_pair(a, b);
      };
      if (lj.contains("L")) {
        auto [a, b] = pair("L");
        w.push_back(Letter::gen(a, b));
      } else if (lj.contains("Linv")) {
        auto [a, b] = pair("Linv");
        w.push_back(Letter::gen_inv(a, b));
      } else if (lj.contains("scalar")) {
        w.push_back(Letter::scalar(matrix_from_json(lj.at("scalar"), h, h)));
      } else {
        bad("element: unknown letter tag");
      }
    }
    e.add_word(w, c);
  }
  return e;
}

Json to_json(const DhxElement& e) {
  Json terms = Json::array();
  for (const auto& [k, u] : e.terms) {
    Json t;
    t["alpha"] = k.first.perm;
    t["beta"] = k.second.perm;
    Json mats = Json::array();
    for (const auto& m : u.mats) mats.push_back(matrix_to_json(m));
    t["mats"] = std::move(mats);
    terms.push_back(std::move(t));
  }
  Json j;
  j["v"] = to_json(e.v);
  j["terms"] = std::move(terms);
  return j;
}

}  // namespace dyfrt::io
