#include "sympair/linalg.hpp"

#include <sstream>

namespace sympair {

Weight zero_weight(int dim) { return Weight(static_cast<size_t>(dim), Rat(0)); }

static void check_same_dim(const Weight& a, const Weight& b) {
  if (a.size() != b.size())
    throw PreconditionError("dimension mismatch: " + std::to_string(a.size()) +
                            " vs " + std::to_string(b.size()));
}

Weight wadd(const Weight& a, const Weight& b) {
  check_same_dim(a, b);
  Weight r(a);
  for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Weight wsub(const Weight& a, const Weight& b) {
  check_same_dim(a, b);
  Weight r(a);
  for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Weight wneg(const Weight& a) {
  Weight r(a);
  for (auto& x : r) x = -x;
  return r;
}

Weight wscale(const Rat& c, const Weight& a) {
  Weight r(a);
  for (auto& x : r) x *= c;
  return r;
}

bool is_zero_vec(const Weight& a) {
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}

Rat dot(const Weight& a, const Weight& b) {
  check_same_dim(a, b);
  Rat s(0);
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::string weight_str(const Weight& a) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < a.size(); ++i) {
    if (i) os << ",";
    os << a[i];
  }
  os << ")";
  return os.str();
}

QMatrix::QMatrix(int rows, int cols)
    : rows_(rows), cols_(cols),
      a_(static_cast<size_t>(rows) * static_cast<size_t>(cols), Rat(0)) {}

QMatrix QMatrix::identity(int n) {
  QMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

QMatrix QMatrix::from_rows(const std::vector<std::vector<Rat>>& rows) {
  if (rows.empty()) return QMatrix();
  QMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int i = 0; i < m.rows(); ++i) {
    if (rows[static_cast<size_t>(i)].size() != static_cast<size_t>(m.cols()))
      throw ParseError("matrix rows have inconsistent lengths");
    for (int j = 0; j < m.cols(); ++j) m.at(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
  }
  return m;
}

Weight QMatrix::apply(const Weight& x) const {
  if (static_cast<int>(x.size()) != cols_)
    throw PreconditionError("matrix-vector dimension mismatch");
  Weight r = zero_weight(rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (at(i, j) != 0) r[static_cast<size_t>(i)] += at(i, j) * x[static_cast<size_t>(j)];
  return r;
}

QMatrix QMatrix::mul(const QMatrix& other) const {
  if (cols_ != other.rows_)
    throw PreconditionError("matrix-matrix dimension mismatch");
  QMatrix r(rows_, other.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rat& v = at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < other.cols_; ++j)
        r.at(i, j) += v * other.at(k, j);
    }
  return r;
}

QMatrix QMatrix::transpose() const {
  QMatrix r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

// Row echelon form in place; returns the pivot columns.
static std::vector<int> echelon(QMatrix& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int p = -1;
    for (int i = row; i < m.rows(); ++i)
      if (m.at(i, col) != 0) { p = i; break; }
    if (p < 0) continue;
    if (p != row)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(row, j));
    const Rat inv = Rat(1) / m.at(row, col);
    for (int j = col; j < m.cols(); ++j) m.at(row, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == row || m.at(i, col) == 0) continue;
      const Rat f = m.at(i, col);
      for (int j = col; j < m.cols(); ++j) m.at(i, j) -= f * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

int QMatrix::rank() const {
  QMatrix copy(*this);
  return static_cast<int>(echelon(copy).size());
}

Rat QMatrix::leading_minor(int k) const {
  if (k > rows_ || k > cols_)
    throw InternalError("leading minor size exceeds matrix");
  QMatrix sub(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) sub.at(i, j) = at(i, j);
  // Gaussian elimination without normalization; the determinant is the
  // product of pivots with the sign of the row swaps.
  Rat det(1);
  for (int col = 0; col < k; ++col) {
    int p = -1;
    for (int i = col; i < k; ++i)
      if (sub.at(i, col) != 0) { p = i; break; }
    if (p < 0) return Rat(0);
    if (p != col) {
      for (int j = 0; j < k; ++j) std::swap(sub.at(p, j), sub.at(col, j));
      det = -det;
    }
    det *= sub.at(col, col);
    const Rat inv = Rat(1) / sub.at(col, col);
    for (int i = col + 1; i < k; ++i) {
      if (sub.at(i, col) == 0) continue;
      const Rat f = sub.at(i, col) * inv;
      for (int j = col; j < k; ++j) sub.at(i, j) -= f * sub.at(col, j);
    }
  }
  return det;
}

std::optional<QMatrix> QMatrix::inverse() const {
  if (rows_ != cols_) return std::nullopt;
  QMatrix aug(rows_, 2 * cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_ + i) = 1;
  }
  const auto pivots = echelon(aug);
  if (static_cast<int>(pivots.size()) != rows_) return std::nullopt;
  for (int i = 0; i < rows_; ++i)
    if (pivots[static_cast<size_t>(i)] != i) return std::nullopt;
  QMatrix inv(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) inv.at(i, j) = aug.at(i, cols_ + j);
  return inv;
}

std::vector<Weight> QMatrix::kernel_basis() const {
  QMatrix copy(*this);
  const auto pivots = echelon(copy);
  std::vector<bool> is_pivot(static_cast<size_t>(cols_), false);
  for (int c : pivots) is_pivot[static_cast<size_t>(c)] = true;
  std::vector<Weight> basis;
  for (int free = 0; free < cols_; ++free) {
    if (is_pivot[static_cast<size_t>(free)]) continue;
    Weight v = zero_weight(cols_);
    v[static_cast<size_t>(free)] = 1;
    for (size_t r = 0; r < pivots.size(); ++r)
      v[static_cast<size_t>(pivots[r])] = -copy.at(static_cast<int>(r), free);
    basis.push_back(std::move(v));
  }
  return basis;
}

bool QMatrix::is_integral() const {
  for (const auto& x : a_)
    if (!is_integer(x)) return false;
  return true;
}

} // namespace sympair
