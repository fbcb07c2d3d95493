#pragma once

#include <vector>

#include "sympair/involution.hpp"

namespace sympair {

// A character of the maximal split torus in coordinates:
//   chi(t) = prod_i |t_i|^{lambda_re_i + i*lambda_im_i} (t_i/|t_i|)^{m_i}
// lambda_re and lambda_im are rational ambient vectors, m is integral.
// "Imaginary" parts are bookkeeping coordinates; no floating point is
// involved anywhere.
struct CharacterOfT {
  Weight lambda_re;
  Weight lambda_im;
  std::vector<Int> m;
  bool operator==(const CharacterOfT&) const = default;
};

CharacterOfT make_character(const RootSystem& rs, Weight lambda_re, Weight lambda_im,
                            std::vector<Int> m);
CharacterOfT trivial_character(const RootSystem& rs);
bool is_trivial(const CharacterOfT& chi);

// <lambda_re, alpha> >= 0 against every simple root.
bool is_dominant(const RootSystem& rs, const CharacterOfT& chi);

CharacterOfT weyl_act(const WeylElement& w, const CharacterOfT& chi);
// lambda parts through the involution matrix; m through epsilon times it.
CharacterOfT theta_act(const InvolutionSpec& theta, const CharacterOfT& chi);
CharacterOfT invert(const CharacterOfT& chi);
CharacterOfT compose_chars(const CharacterOfT& a, const CharacterOfT& b);

// The character by which the torus scales a root space: lambda_re = alpha,
// lambda_im = 0, m = alpha (integral in both realizations).
CharacterOfT root_character(const RootSystem& rs, int root_idx);

// chi * (w theta)(chi).  The twisted-involution certificate is the
// precondition.
struct FoldedCharacter {
  CharacterOfT value;
};
FoldedCharacter fold(const InvolutionSpec& theta, const TwistedInvolution& w,
                     const CharacterOfT& chi);
// The fold is trivial exactly when chi^{-1} = w(theta(chi)).
bool fold_symmetry(const InvolutionSpec& theta, const TwistedInvolution& w,
                   const CharacterOfT& chi);

bool weyl_orbit_equivalent(const WeylGroup& group, const CharacterOfT& a,
                           const CharacterOfT& b);

} // namespace sympair
