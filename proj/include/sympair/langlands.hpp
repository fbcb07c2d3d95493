#pragma once

#include <optional>

#include "sympair/chars.hpp"

namespace sympair {

// A dominant character; the factory is the only way in, so holding a value
// certifies dominance.
class LanglandsParameter {
public:
  static LanglandsParameter make(const RootSystem& rs, CharacterOfT chi);
  const CharacterOfT& chi() const { return chi_; }
  bool operator==(const LanglandsParameter& other) const { return chi_ == other.chi_; }

private:
  explicit LanglandsParameter(CharacterOfT chi) : chi_(std::move(chi)) {}
  CharacterOfT chi_;
};

struct DominantRep {
  LanglandsParameter param;
  WeylElement witness; // first element in canonical order with w(chi) dominant
};

DominantRep dominant_representative(const WeylGroup& group, const CharacterOfT& chi);

// w_0(chi^{-1}); already dominant for dominant chi, which is asserted.
// Uses the greedy longest element, so no enumeration budget is involved.
LanglandsParameter contragredient_param(RootSystemPtr rs, const LanglandsParameter& p);

// Dominant representative of theta(chi).
DominantRep theta_twist_param(const WeylGroup& group, const InvolutionSpec& theta,
                              const LanglandsParameter& p);

struct ConjSymmetry {
  bool holds = false;
  std::optional<WeylElement> witness; // first w with chi^{-1} = w(theta(chi))
                                      // that is also a twisted involution
};

ConjSymmetry check_conj_symmetry(const WeylGroup& group, const InvolutionSpec& theta,
                                 const LanglandsParameter& p);

} // namespace sympair
