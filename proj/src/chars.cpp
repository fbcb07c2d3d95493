#include "sympair/chars.hpp"

namespace sympair {

namespace {

std::vector<Int> apply_integrally(const QMatrix& m, const std::vector<Int>& x) {
  Weight rx(x.size());
  for (size_t i = 0; i < x.size(); ++i) rx[i] = Rat(x[i]);
  const Weight out = m.apply(rx);
  std::vector<Int> r(out.size());
  for (size_t i = 0; i < out.size(); ++i) r[i] = to_int_exact(out[i]);
  return r;
}

} // namespace

CharacterOfT make_character(const RootSystem& rs, Weight lambda_re, Weight lambda_im,
                            std::vector<Int> m) {
  const size_t dim = static_cast<size_t>(rs.ambient_dim());
  if (lambda_re.size() != dim || lambda_im.size() != dim || m.size() != dim)
    throw ParseError("character components must have the ambient dimension " +
                     std::to_string(dim));
  return CharacterOfT{std::move(lambda_re), std::move(lambda_im), std::move(m)};
}

CharacterOfT trivial_character(const RootSystem& rs) {
  return CharacterOfT{zero_weight(rs.ambient_dim()), zero_weight(rs.ambient_dim()),
                      std::vector<Int>(static_cast<size_t>(rs.ambient_dim()), Int(0))};
}

bool is_trivial(const CharacterOfT& chi) {
  if (!is_zero_vec(chi.lambda_re) || !is_zero_vec(chi.lambda_im)) return false;
  for (const auto& v : chi.m)
    if (v != 0) return false;
  return true;
}

bool is_dominant(const RootSystem& rs, const CharacterOfT& chi) {
  for (int i = 0; i < rs.rank(); ++i)
    if (rs.inner(chi.lambda_re, rs.simple_root(i)) < 0) return false;
  return true;
}

CharacterOfT weyl_act(const WeylElement& w, const CharacterOfT& chi) {
  // The Weyl matrix preserves the coordinate lattice in both realizations,
  // so m stays integral.
  const QMatrix m = w.matrix();
  return CharacterOfT{w.act(chi.lambda_re), w.act(chi.lambda_im),
                      apply_integrally(m, chi.m)};
}

CharacterOfT theta_act(const InvolutionSpec& theta, const CharacterOfT& chi) {
  std::vector<Int> m = apply_integrally(theta.matrix(), chi.m);
  if (theta.epsilon() == -1)
    for (auto& v : m) v = -v;
  return CharacterOfT{theta.act(chi.lambda_re), theta.act(chi.lambda_im), std::move(m)};
}

CharacterOfT invert(const CharacterOfT& chi) {
  std::vector<Int> m(chi.m);
  for (auto& v : m) v = -v;
  return CharacterOfT{wneg(chi.lambda_re), wneg(chi.lambda_im), std::move(m)};
}

CharacterOfT compose_chars(const CharacterOfT& a, const CharacterOfT& b) {
  if (a.m.size() != b.m.size())
    throw PreconditionError("character composition dimension mismatch");
  std::vector<Int> m(a.m);
  for (size_t i = 0; i < m.size(); ++i) m[i] += b.m[i];
  return CharacterOfT{wadd(a.lambda_re, b.lambda_re), wadd(a.lambda_im, b.lambda_im),
                      std::move(m)};
}

CharacterOfT root_character(const RootSystem& rs, int root_idx) {
  const Weight& a = rs.root(root_idx);
  std::vector<Int> m(a.size());
  for (size_t i = 0; i < a.size(); ++i) m[i] = to_int_exact(a[i]);
  return CharacterOfT{a, zero_weight(rs.ambient_dim()), std::move(m)};
}

FoldedCharacter fold(const InvolutionSpec& theta, const TwistedInvolution& w,
                     const CharacterOfT& chi) {
  const CharacterOfT moved = weyl_act(w.element(), theta_act(theta, chi));
  return FoldedCharacter{compose_chars(chi, moved)};
}

bool fold_symmetry(const InvolutionSpec& theta, const TwistedInvolution& w,
                   const CharacterOfT& chi) {
  return is_trivial(fold(theta, w, chi).value);
}

bool weyl_orbit_equivalent(const WeylGroup& group, const CharacterOfT& a,
                           const CharacterOfT& b) {
  if (a.m.size() != b.m.size()) return false;
  for (const auto& w : group.elements())
    if (weyl_act(w, a) == b) return true;
  return false;
}

} // namespace sympair
