#include "dyfrt/matrix.hpp"

#include <algorithm>
#include <map>

#include "dyfrt/errors.hpp"

namespace dyfrt {

namespace {

using Row = std::vector<Entry>;

Row merge_rows(const Row& a, const Row& b, int sign) {
  Row out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].col < b[j].col)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].col < a[i].col) {
      out.push_back({b[j].col, sign > 0 ? b[j].val : Scalar(-b[j].val)});
      ++j;
    } else {
      Scalar s = sign > 0 ? Scalar(a[i].val + b[j].val) : Scalar(a[i].val - b[j].val);
      if (!dyfrt::is_zero(s)) out.push_back({a[i].col, std::move(s)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows) {}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i].push_back({i, Scalar(1)});
  return m;
}

Matrix Matrix::from_triplets(std::size_t rows, std::size_t cols, std::vector<Triplet> t) {
  Matrix m(rows, cols);
  std::sort(t.begin(), t.end(),
            [](const Triplet& a, const Triplet& b) { return a.row != b.row ? a.row < b.row : a.col < b.col; });
  for (std::size_t k = 0; k < t.size();) {
    if (t[k].row >= rows || t[k].col >= cols) throw StructuralError("triplet out of range");
    Scalar s = t[k].val;
    std::size_t k2 = k + 1;
    while (k2 < t.size() && t[k2].row == t[k].row && t[k2].col == t[k].col) s += t[k2++].val;
    if (!dyfrt::is_zero(s)) m.data_[t[k].row].push_back({t[k].col, std::move(s)});
    k = k2;
  }
  return m;
}

Matrix Matrix::from_dense(const std::vector<std::vector<Scalar>>& d) {
  std::size_t r = d.size(), c = d.empty() ? 0 : d[0].size();
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (d[i].size() != c) throw StructuralError("ragged matrix");
    for (std::size_t j = 0; j < c; ++j)
      if (!dyfrt::is_zero(d[i][j])) m.data_[i].push_back({j, d[i][j]});
  }
  return m;
}

Scalar Matrix::get(std::size_t i, std::size_t j) const {
  const Row& r = data_.at(i);
  auto it = std::lower_bound(r.begin(), r.end(), j, [](const Entry& e, std::size_t c) { return e.col < c; });
  if (it != r.end() && it->col == j) return it->val;
  return Scalar(0);
}

void Matrix::set(std::size_t i, std::size_t j, const Scalar& v) {
  if (i >= rows_ || j >= cols_) throw StructuralError("matrix index out of range");
  Row& r = data_[i];
  auto it = std::lower_bound(r.begin(), r.end(), j, [](const Entry& e, std::size_t c) { return e.col < c; });
  bool present = it != r.end() && it->col == j;
  if (dyfrt::is_zero(v)) {
    if (present) r.erase(it);
  } else if (present) {
    it->val = v;
  } else {
    r.insert(it, {j, v});
  }
}

void Matrix::add_to(std::size_t i, std::size_t j, const Scalar& v) {
  if (dyfrt::is_zero(v)) return;
  set(i, j, get(i, j) + v);
}

std::size_t Matrix::nnz() const {
  std::size_t n = 0;
  for (const auto& r : data_) n += r.size();
  return n;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (const auto& e : data_[i]) t.data_[e.col].push_back({i, e.val});
  return t;
}

std::optional<Matrix> Matrix::inverse() const {
  if (rows_ != cols_) return std::nullopt;
  const std::size_t n = rows_;
  // Augmented rows [A | I] with columns n..2n-1 for the identity block.
  std::vector<std::map<std::size_t, Scalar>> aug(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& e : data_[i]) aug[i].emplace(e.col, e.val);
    aug[i].emplace(n + i, Scalar(1));
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = n;
    for (std::size_t r = c; r < n; ++r) {
      if (aug[r].count(c) && (piv == n || aug[r].size() < aug[piv].size())) piv = r;
    }
    if (piv == n) return std::nullopt;
    std::swap(aug[c], aug[piv]);
    Scalar inv = 1 / aug[c].at(c);
    for (auto& [k, v] : aug[c]) v *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c) continue;
      auto it = aug[r].find(c);
      if (it == aug[r].end()) continue;
      Scalar f = it->second;
      for (const auto& [k, v] : aug[c]) {
        auto& slot = aug[r][k];
        slot -= f * v;
        if (dyfrt::is_zero(slot)) aug[r].erase(k);
      }
    }
  }
  Matrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& [k, v] : aug[i])
      if (k >= n) out.data_[i].push_back({k - n, v});
  return out;
}

std::vector<Scalar> Matrix::apply(const std::vector<Scalar>& x) const {
  if (x.size() != cols_) throw StructuralError("apply: dimension mismatch");
  std::vector<Scalar> y(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (const auto& e : data_[i]) y[i] += e.val * x[e.col];
  return y;
}

std::vector<std::vector<Scalar>> Matrix::to_dense() const {
  std::vector<std::vector<Scalar>> d(rows_, std::vector<Scalar>(cols_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (const auto& e : data_[i]) d[i][e.col] = e.val;
  return d;
}

bool Matrix::operator==(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    const Row &a = data_[i], &b = o.data_[i];
    if (a.size() != b.size()) return false;
    for (std::size_t k = 0; k < a.size(); ++k)
      if (a[k].col != b[k].col || a[k].val != b[k].val) return false;
  }
  return true;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw StructuralError("matrix sum: shape mismatch");
  for (std::size_t i = 0; i < rows_; ++i)
    if (!o.data_[i].empty()) data_[i] = merge_rows(data_[i], o.data_[i], +1);
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw StructuralError("matrix difference: shape mismatch");
  for (std::size_t i = 0; i < rows_; ++i)
    if (!o.data_[i].empty()) data_[i] = merge_rows(data_[i], o.data_[i], -1);
  return *this;
}

Matrix& Matrix::operator*=(const Scalar& c) {
  if (dyfrt::is_zero(c)) {
    for (auto& r : data_) r.clear();
    return *this;
  }
  for (auto& r : data_)
    for (auto& e : r) e.val *= c;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw StructuralError("matrix product: shape mismatch");
  Matrix out(a.rows_, b.cols_);
  std::vector<Scalar> acc(b.cols_);
  std::vector<char> touched(b.cols_, 0);
  std::vector<std::size_t> cols;
  for (std::size_t i = 0; i < a.rows_; ++i) {
    cols.clear();
    for (const auto& ea : a.data_[i]) {
      for (const auto& eb : b.data_[ea.col]) {
        if (!touched[eb.col]) {
          touched[eb.col] = 1;
          cols.push_back(eb.col);
          acc[eb.col] = ea.val * eb.val;
        } else {
          acc[eb.col] += ea.val * eb.val;
        }
      }
    }
    std::sort(cols.begin(), cols.end());
    auto& row = out.data_[i];
    for (std::size_t c : cols) {
      touched[c] = 0;
      if (!dyfrt::is_zero(acc[c])) row.push_back({c, acc[c]});
    }
  }
  return out;
}

std::optional<std::pair<std::size_t, std::size_t>> Matrix::first_difference(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return std::make_pair(std::size_t(0), std::size_t(0));
  for (std::size_t i = 0; i < a.rows_; ++i) {
    if (a.data_[i].size() == b.data_[i].size()) {
      bool same = true;
      for (std::size_t k = 0; k < a.data_[i].size() && same; ++k)
        same = a.data_[i][k].col == b.data_[i][k].col && a.data_[i][k].val == b.data_[i][k].val;
      if (same) continue;
    }
    for (std::size_t j = 0; j < a.cols_; ++j)
      if (a.get(i, j) != b.get(i, j)) return std::make_pair(i, j);
  }
  return std::nullopt;
}

}  // namespace dyfrt
