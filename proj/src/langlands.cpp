#include "sympair/langlands.hpp"

namespace sympair {

LanglandsParameter LanglandsParameter::make(const RootSystem& rs, CharacterOfT chi) {
  if (static_cast<int>(chi.lambda_re.size()) != rs.ambient_dim())
    throw PreconditionError("parameter character does not match the ambient dimension");
  if (!is_dominant(rs, chi))
    throw PreconditionError("parameter character must be dominant");
  return LanglandsParameter(std::move(chi));
}

DominantRep dominant_representative(const WeylGroup& group, const CharacterOfT& chi) {
  const RootSystem& rs = *group.rs_ptr();
  for (const auto& w : group.elements()) {
    CharacterOfT moved = weyl_act(w, chi);
    if (is_dominant(rs, moved))
      return DominantRep{LanglandsParameter::make(rs, std::move(moved)), w};
  }
  throw InternalError("no Weyl image of the character is dominant");
}

LanglandsParameter contragredient_param(RootSystemPtr rs, const LanglandsParameter& p) {
  const WeylElement w0 = longest_element(rs);
  CharacterOfT moved = weyl_act(w0, invert(p.chi()));
  if (!is_dominant(*rs, moved))
    throw InternalError("contragredient candidate is not dominant");
  return LanglandsParameter::make(*rs, std::move(moved));
}

DominantRep theta_twist_param(const WeylGroup& group, const InvolutionSpec& theta,
                              const LanglandsParameter& p) {
  return dominant_representative(group, theta_act(theta, p.chi()));
}

ConjSymmetry check_conj_symmetry(const WeylGroup& group, const InvolutionSpec& theta,
                                 const LanglandsParameter& p) {
  const CharacterOfT inv = invert(p.chi());
  const CharacterOfT img = theta_act(theta, p.chi());
  for (const auto& w : group.elements()) {
    if (!is_twisted_involution(theta, w)) continue;
    if (weyl_act(w, img) == inv) return ConjSymmetry{true, w};
  }
  return ConjSymmetry{false, std::nullopt};
}

} // namespace sympair
