#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sympair/weyl.hpp"

namespace sympair {

// How fixed roots of the composite action contribute to fiber
// multiplicities.
enum class FixedRootMode { semilinear, linear_plus, linear_minus };

std::string fixed_root_mode_name(FixedRootMode mode);
std::optional<FixedRootMode> fixed_root_mode_from_name(const std::string& name);

// The torus-level involution datum of a pair: an ambient involution matrix
// that permutes the roots and preserves the form, the sign governing the
// compact part, and the fixed-root mode.  Construction validates everything;
// instances are immutable.
class InvolutionSpec {
public:
  static InvolutionSpec make(RootSystemPtr rs, const QMatrix& matrix, int epsilon,
                             FixedRootMode mode);
  // Identity matrix, epsilon -1, semilinear fixed roots.
  static InvolutionSpec galois_split(RootSystemPtr rs);

  const QMatrix& matrix() const { return matrix_; }
  int epsilon() const { return epsilon_; }
  FixedRootMode mode() const { return mode_; }

  int act_root(int idx) const { return perm_[static_cast<size_t>(idx)]; }
  const std::vector<int32_t>& perm() const { return perm_; }
  Weight act(const Weight& x) const { return matrix_.apply(x); }
  bool is_identity() const;

  const RootSystem& rs() const { return *rs_; }
  const RootSystemPtr& rs_ptr() const { return rs_; }

private:
  InvolutionSpec(RootSystemPtr rs, QMatrix matrix, int epsilon, FixedRootMode mode,
                 std::vector<int32_t> perm);

  RootSystemPtr rs_;
  QMatrix matrix_;
  int epsilon_;
  FixedRootMode mode_;
  std::vector<int32_t> perm_;
};

// A Weyl element w with theta(w) = w^{-1}; construction is the only way to
// obtain one, so holding a value certifies the relation.
class TwistedInvolution {
public:
  static std::optional<TwistedInvolution> make(const InvolutionSpec& theta, WeylElement w);
  const WeylElement& element() const { return w_; }
  // Root permutation of the composite action w after theta; an involution
  // on the root list.
  int composite_root(int idx) const { return w_.act_root(theta_perm_[static_cast<size_t>(idx)]); }
  Weight composite(const Weight& x) const;
  const QMatrix& theta_matrix() const { return theta_matrix_; }

private:
  TwistedInvolution(WeylElement w, std::vector<int32_t> theta_perm, QMatrix theta_matrix)
      : w_(std::move(w)), theta_perm_(std::move(theta_perm)), theta_matrix_(std::move(theta_matrix)) {}
  WeylElement w_;
  std::vector<int32_t> theta_perm_;
  QMatrix theta_matrix_;
};

bool is_twisted_involution(const InvolutionSpec& theta, const WeylElement& w);

// All twisted involutions of the enumerated group, in its canonical order.
// Always contains the identity.
std::vector<TwistedInvolution> twisted_involutions(const WeylGroup& group,
                                                   const InvolutionSpec& theta);

} // namespace sympair
