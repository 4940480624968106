#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace dyfrt {

inline constexpr int kDefaultSizeCap = 16;

struct FiniteSet {
  int size = 1;
  std::vector<std::string> labels;  // optional, display only

  bool operator==(const FiniteSet& o) const { return size == o.size; }
};

/// table[λ][a] = λ·a. Every column must be a permutation of H.
struct FiniteAction {
  FiniteSet h;
  FiniteSet x;
  std::vector<std::vector<int>> table;

  int act(int lambda, int a) const { return table[lambda][a]; }
  int h_size() const { return h.size; }
  int x_size() const { return x.size; }
  bool operator==(const FiniteAction& o) const = default;
};

/// Latin square; table[a][b] = a·b.
struct Quasigroup {
  FiniteSet carrier;
  std::vector<std::vector<int>> table;

  int size() const { return carrier.size; }
  int mul(int a, int b) const { return table[a][b]; }
  /// The action of the quasigroup on itself by right multiplication.
  FiniteAction as_action() const;
  bool operator==(const Quasigroup& o) const = default;
};

struct TernarySystem {
  FiniteSet carrier;
  std::vector<int> table;  // flattened [a][b][c]

  int size() const { return carrier.size; }
  int apply(int a, int b, int c) const {
    const int n = carrier.size;
    return table[(static_cast<std::size_t>(a) * n + b) * n + c];
  }
  bool operator==(const TernarySystem& o) const = default;
};

struct ValidationReport {
  bool pass = true;
  std::vector<int> failing_columns;
  std::vector<int> failing_rows;
  std::string detail;
};

/// Throws StructuralError on shape or range problems.
ValidationReport validate_action(const FiniteAction& a);
ValidationReport validate_quasigroup(const Quasigroup& q);
void validate_ternary(const TernarySystem& t);

/// The unique c with a·c = b.
int left_divide(const Quasigroup& q, int a, int b);

Quasigroup builtin_q5();
TernarySystem builtin_z5_ternary();

/// Group Z/nZ as a quasigroup, and the ternary μ(a,b,c) = a - b + c mod n.
Quasigroup cyclic_quasigroup(int n);
TernarySystem cyclic_ternary(int n);

}  // namespace dyfrt
