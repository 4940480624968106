#include "dyfrt/carriers.hpp"

#include "dyfrt/errors.hpp"

namespace dyfrt {

namespace {

void check_shape(const std::vector<std::vector<int>>& t, int rows, int cols, int range, const char* what) {
  if (rows < 1 || cols < 1) throw StructuralError(std::string(what) + ": sizes must be positive");
  if (static_cast<int>(t.size()) != rows)
    throw StructuralError(std::string(what) + ": expected " + std::to_string(rows) + " rows, got " +
                          std::to_string(t.size()));
  for (int r = 0; r < rows; ++r) {
    if (static_cast<int>(t[r].size()) != cols)
      throw StructuralError(std::string(what) + ": row " + std::to_string(r) + " has " + std::to_string(t[r].size()) +
                            " entries, expected " + std::to_string(cols));
    for (int c = 0; c < cols; ++c)
      if (t[r][c] < 0 || t[r][c] >= range)
        throw StructuralError(std::string(what) + ": entry [" + std::to_string(r) + "][" + std::to_string(c) +
                              "] = " + std::to_string(t[r][c]) + " out of range");
  }
}

}  // namespace

FiniteAction Quasigroup::as_action() const { return FiniteAction{carrier, carrier, table}; }

ValidationReport validate_action(const FiniteAction& a) {
  check_shape(a.table, a.h.size, a.x.size, a.h.size, "action");
  ValidationReport rep;
  for (int x = 0; x < a.x.size; ++x) {
    std::vector<char> seen(a.h.size, 0);
    bool ok = true;
    for (int l = 0; l < a.h.size; ++l) {
      if (seen[a.table[l][x]]) ok = false;
      seen[a.table[l][x]] = 1;
    }
    if (!ok) rep.failing_columns.push_back(x);
  }
  rep.pass = rep.failing_columns.empty();
  if (!rep.pass) rep.detail = "column " + std::to_string(rep.failing_columns.front()) + " is not a permutation of H";
  return rep;
}

ValidationReport validate_quasigroup(const Quasigroup& q) {
  check_shape(q.table, q.size(), q.size(), q.size(), "quasigroup");
  const int n = q.size();
  ValidationReport rep;
  for (int r = 0; r < n; ++r) {
    std::vector<char> seen(n, 0);
    bool ok = true;
    for (int c = 0; c < n; ++c) {
      if (seen[q.table[r][c]]) ok = false;
      seen[q.table[r][c]] = 1;
    }
    if (!ok) rep.failing_rows.push_back(r);
  }
  for (int c = 0; c < n; ++c) {
    std::vector<char> seen(n, 0);
    bool ok = true;
    for (int r = 0; r < n; ++r) {
      if (seen[q.table[r][c]]) ok = false;
      seen[q.table[r][c]] = 1;
    }
    if (!ok) rep.failing_columns.push_back(c);
  }
  rep.pass = rep.failing_rows.empty() && rep.failing_columns.empty();
  if (!rep.failing_rows.empty())
    rep.detail = "row " + std::to_string(rep.failing_rows.front()) + " repeats an entry";
  else if (!rep.failing_columns.empty())
    rep.detail = "column " + std::to_string(rep.failing_columns.front()) + " repeats an entry";
  return rep;
}

void validate_ternary(const TernarySystem& t) {
  const int n = t.size();
  if (n < 1) throw StructuralError("ternary: size must be positive");
  if (t.table.size() != static_cast<std::size_t>(n) * n * n)
    throw StructuralError("ternary: table must have size^3 entries");
  for (int v : t.table)
    if (v < 0 || v >= n) throw StructuralError("ternary: entry out of range");
}

int left_divide(const Quasigroup& q, int a, int b) {
  const int n = q.size();
  if (a < 0 || a >= n || b < 0 || b >= n) throw StructuralError("left_divide: element out of range");
  for (int c = 0; c < n; ++c)
    if (q.table[a][c] == b) return c;
  throw PreconditionError("left_divide: row " + std::to_string(a) + " does not contain " + std::to_string(b));
}

Quasigroup builtin_q5() {
  return Quasigroup{FiniteSet{5, {}},
                    {{4, 3, 2, 1, 0}, {3, 1, 0, 2, 4}, {0, 2, 3, 4, 1}, {1, 0, 4, 3, 2}, {2, 4, 1, 0, 3}}};
}

TernarySystem builtin_z5_ternary() { return cyclic_ternary(5); }

Quasigroup cyclic_quasigroup(int n) {
  Quasigroup q{FiniteSet{n, {}}, std::vector<std::vector<int>>(n, std::vector<int>(n))};
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) q.table[a][b] = (a + b) % n;
  return q;
}

TernarySystem cyclic_ternary(int n) {
  TernarySystem t{FiniteSet{n, {}}, std::vector<int>(static_cast<std::size_t>(n) * n * n)};
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) t.table[(static_cast<std::size_t>(a) * n + b) * n + c] = ((a - b + c) % n + n) % n;
  return t;
}

}  // namespace dyfrt
