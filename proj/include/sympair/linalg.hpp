#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sympair/numeric.hpp"

namespace sympair {

// Weights and roots live in the ambient realization as exact rational
// coordinate vectors.
using Weight = std::vector<Rat>;
using Root = Weight;

Weight zero_weight(int dim);
Weight wadd(const Weight& a, const Weight& b);
Weight wsub(const Weight& a, const Weight& b);
Weight wneg(const Weight& a);
Weight wscale(const Rat& c, const Weight& a);
bool is_zero_vec(const Weight& a);
Rat dot(const Weight& a, const Weight& b);
std::string weight_str(const Weight& a);

// Small dense exact matrix.  Everything is Gauss elimination over Q; sizes
// here are bounded by the ambient dimension (at most a few dozen).
class QMatrix {
public:
  QMatrix() = default;
  QMatrix(int rows, int cols);
  static QMatrix identity(int n);
  static QMatrix from_rows(const std::vector<std::vector<Rat>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rat& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const Rat& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  Weight apply(const Weight& x) const;
  QMatrix mul(const QMatrix& other) const;
  QMatrix transpose() const;
  bool operator==(const QMatrix& other) const = default;

  int rank() const;
  // Determinant of the leading k-by-k block (requires k <= min(rows, cols)).
  Rat leading_minor(int k) const;
  std::optional<QMatrix> inverse() const;
  // Basis of { x : M x = 0 }, one column vector per basis element.
  std::vector<Weight> kernel_basis() const;
  bool is_integral() const;

private:
  int rows_ = 0, cols_ = 0;
  std::vector<Rat> a_;
};

} // namespace sympair
