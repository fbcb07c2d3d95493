#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sympair/linalg.hpp"

namespace sympair {

// Which ambient coordinates the roots are realized in.
//
//   standard: ambient dimension = rank, the simple roots are the standard
//             basis vectors, and the bilinear form is the symmetrized Gram
//             matrix with long roots of squared length 2 per component.
//   gl:       ambient dimension = n, roots are e_i - e_j (positive iff
//             i < j), and the form is the plain dot product.  The ambient
//             space carries a one-dimensional center outside the root span.
enum class Realization { standard, gl };

struct RootSystemSpec {
  std::optional<std::string> family; // "A".."G"
  int rank = 0;                      // used with family
  std::optional<std::vector<std::vector<long long>>> cartan;
  Realization realization = Realization::standard;
  int gl_n = 0;                      // used with Realization::gl
};

class RootSystem;
using RootSystemPtr = std::shared_ptr<const RootSystem>;

// Immutable after construction; safe to share across threads.
class RootSystem {
public:
  int rank() const { return rank_; }
  int ambient_dim() const { return ambient_; }
  int root_count() const { return static_cast<int>(roots_.size()); }
  int positive_count() const { return npos_; }

  // Roots are indexed 0..root_count()-1 with all positive roots first,
  // ordered by (height, simple-coordinate lex); negatives mirror them, so
  // negate(i) is index arithmetic.
  const Weight& root(int idx) const { return roots_[static_cast<size_t>(idx)]; }
  bool is_positive(int idx) const { return idx < npos_; }
  int negate(int idx) const { return idx < npos_ ? idx + npos_ : idx - npos_; }

  const Weight& simple_root(int i) const { return roots_[static_cast<size_t>(simple_index_[static_cast<size_t>(i)])]; }
  int simple_root_index(int i) const { return simple_index_[static_cast<size_t>(i)]; }

  long long cartan(int i, int j) const { return cartan_[static_cast<size_t>(i)][static_cast<size_t>(j)]; }
  const std::vector<std::vector<long long>>& cartan_matrix() const { return cartan_; }

  const QMatrix& form() const { return form_; }
  Rat inner(const Weight& x, const Weight& y) const;

  // Sum of the positive roots (twice rho).
  const Weight& rho2() const { return rho2_; }

  // Integer coordinates of a root in the simple-root basis.
  const std::vector<long long>& coords(int idx) const { return coords_[static_cast<size_t>(idx)]; }
  int height(int idx) const;

  // Image index of root idx under the reflection in simple root i.
  int reflect(int idx, int i) const { return srefl_[static_cast<size_t>(i)][static_cast<size_t>(idx)]; }

  // Rational coordinates of an ambient vector in the simple-root basis, or
  // nullopt when the vector leaves the root span.
  std::optional<Weight> span_coordinates(const Weight& x) const;
  std::optional<int> find_root(const Weight& x) const;

  // Exact Weyl group order from the height distribution of the positive
  // roots, component by component; no classification tables.
  const Int& weyl_order() const { return weyl_order_; }

  Realization realization() const { return realization_; }
  int gl_n() const { return gl_n_; }

  // Ambient basis [simple roots | orthogonal complement] and its inverse;
  // Weyl elements act through these.
  const QMatrix& span_basis() const { return basis_; }
  const QMatrix& span_basis_inverse() const { return basis_inv_; }
  int perp_dim() const { return ambient_ - rank_; }

private:
  RootSystem() = default;
  friend RootSystemPtr build_root_system(const RootSystemSpec& spec);

  Realization realization_ = Realization::standard;
  int gl_n_ = 0;
  int rank_ = 0;
  int ambient_ = 0;
  std::vector<std::vector<long long>> cartan_;
  std::vector<Rat> d_; // <a_i, a_i> / 2
  QMatrix form_;
  std::vector<Weight> roots_;
  std::vector<std::vector<long long>> coords_;
  int npos_ = 0;
  std::vector<int> simple_index_;
  Weight rho2_;
  std::vector<std::vector<int32_t>> srefl_;
  std::map<std::vector<long long>, int> coord_index_;
  QMatrix basis_, basis_inv_;
  Int weyl_order_;
};

// Validates the spec (family constraints or Cartan matrix axioms including
// symmetrizability and finite type) and generates the full system by
// reflection closure.  Throws ParseError with a diagnostic on invalid input.
RootSystemPtr build_root_system(const RootSystemSpec& spec);

Rat inner_product(const RootSystem& rs, const Weight& x, const Weight& y);

struct ParabolicDatum {
  std::vector<int> F;        // simple indices, 0-based, sorted
  std::vector<int> sigma_F;  // indices of roots in the span of F
  std::vector<int> n_F;      // positive roots outside sigma_F
  std::vector<int> n_MF;     // positive roots inside sigma_F
  int a_F_dim = 0;           // common kernel of sigma_F inside the root span
  int a_MF_dim = 0;          // dimension of the span of sigma_F
};

ParabolicDatum standard_parabolic(const RootSystem& rs, const std::vector<int>& F);
// All 2^rank subsets, in binary counting order on the simple indices.
std::vector<ParabolicDatum> all_parabolics(const RootSystem& rs);

} // namespace sympair
