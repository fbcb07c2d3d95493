#include "sympair/involution.hpp"

namespace sympair {

std::string fixed_root_mode_name(FixedRootMode mode) {
  switch (mode) {
    case FixedRootMode::semilinear: return "semilinear";
    case FixedRootMode::linear_plus: return "linear_plus";
    case FixedRootMode::linear_minus: return "linear_minus";
  }
  throw InternalError("unhandled fixed root mode");
}

std::optional<FixedRootMode> fixed_root_mode_from_name(const std::string& name) {
  if (name == "semilinear") return FixedRootMode::semilinear;
  if (name == "linear_plus") return FixedRootMode::linear_plus;
  if (name == "linear_minus") return FixedRootMode::linear_minus;
  return std::nullopt;
}

InvolutionSpec::InvolutionSpec(RootSystemPtr rs, QMatrix matrix, int epsilon,
                               FixedRootMode mode, std::vector<int32_t> perm)
    : rs_(std::move(rs)), matrix_(std::move(matrix)), epsilon_(epsilon), mode_(mode),
      perm_(std::move(perm)) {}

InvolutionSpec InvolutionSpec::make(RootSystemPtr rs, const QMatrix& matrix, int epsilon,
                                    FixedRootMode mode) {
  const int dim = rs->ambient_dim();
  if (matrix.rows() != dim || matrix.cols() != dim)
    throw ParseError("involution matrix must be " + std::to_string(dim) + "x" + std::to_string(dim));
  if (epsilon != 1 && epsilon != -1)
    throw ParseError("involution epsilon must be +1 or -1");
  // Integral entries keep the integer character exponents integral under
  // the action.
  if (!matrix.is_integral())
    throw ParseError("involution matrix must have integer entries");
  if (matrix.mul(matrix) != QMatrix::identity(dim))
    throw ParseError("involution matrix must square to the identity");
  const QMatrix gm = matrix.transpose().mul(rs->form().mul(matrix));
  if (gm != rs->form())
    throw ParseError("involution matrix must preserve the bilinear form");

  std::vector<int32_t> perm(static_cast<size_t>(rs->root_count()));
  std::vector<bool> hit(perm.size(), false);
  for (int idx = 0; idx < rs->root_count(); ++idx) {
    const auto img = rs->find_root(matrix.apply(rs->root(idx)));
    if (!img)
      throw ParseError("involution matrix must map roots to roots (root " +
                       std::to_string(idx + 1) + " escapes)");
    if (hit[static_cast<size_t>(*img)])
      throw InternalError("involution root action is not injective");
    hit[static_cast<size_t>(*img)] = true;
    perm[static_cast<size_t>(idx)] = static_cast<int32_t>(*img);
  }
  return InvolutionSpec(std::move(rs), matrix, epsilon, mode, std::move(perm));
}

InvolutionSpec InvolutionSpec::galois_split(RootSystemPtr rs) {
  const int dim = rs->ambient_dim();
  return make(std::move(rs), QMatrix::identity(dim), -1, FixedRootMode::semilinear);
}

bool InvolutionSpec::is_identity() const {
  return matrix_ == QMatrix::identity(rs_->ambient_dim());
}

bool is_twisted_involution(const InvolutionSpec& theta, const WeylElement& w) {
  // theta(w) = w^{-1} on root permutations: p (w p) must be the inverse of w,
  // equivalently (w p) applied twice is the identity.
  const auto& tp = theta.perm();
  const auto& wp = w.perm();
  const size_t n = wp.size();
  for (size_t i = 0; i < n; ++i) {
    const int32_t once = wp[static_cast<size_t>(tp[i])];
    if (wp[static_cast<size_t>(tp[static_cast<size_t>(once)])] != static_cast<int32_t>(i))
      return false;
  }
  return true;
}

std::optional<TwistedInvolution> TwistedInvolution::make(const InvolutionSpec& theta,
                                                         WeylElement w) {
  if (!is_twisted_involution(theta, w)) return std::nullopt;
  std::vector<int32_t> tp = theta.perm();
  return TwistedInvolution(std::move(w), std::move(tp), theta.matrix());
}

Weight TwistedInvolution::composite(const Weight& x) const {
  return w_.act(theta_matrix_.apply(x));
}

std::vector<TwistedInvolution> twisted_involutions(const WeylGroup& group,
                                                   const InvolutionSpec& theta) {
  std::vector<TwistedInvolution> out;
  for (const auto& w : group.elements()) {
    auto tw = TwistedInvolution::make(theta, w);
    if (tw) out.push_back(std::move(*tw));
  }
  return out;
}

} // namespace sympair
