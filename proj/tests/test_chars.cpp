#include <doctest.h>

#include "sympair/chars.hpp"

using namespace sympair;

namespace {

RootSystemPtr gl(int n) {
  RootSystemSpec spec;
  spec.realization = Realization::gl;
  spec.gl_n = n;
  return build_root_system(spec);
}

RootSystemPtr family(const std::string& f, int rank) {
  RootSystemSpec spec;
  spec.family = f;
  spec.rank = rank;
  return build_root_system(spec);
}

CharacterOfT chr(const RootSystem& rs, Weight re, std::vector<Int> m) {
  return make_character(rs, std::move(re), zero_weight(rs.ambient_dim()), std::move(m));
}

} // namespace

TEST_CASE("character construction checks dimensions") {
  auto rs = gl(3);
  CHECK_THROWS_AS(make_character(*rs, Weight{Rat(1)}, zero_weight(3), {0, 0, 0}), ParseError);
  CHECK_THROWS_AS(make_character(*rs, zero_weight(3), zero_weight(2), {0, 0, 0}), ParseError);
  CHECK_THROWS_AS(make_character(*rs, zero_weight(3), zero_weight(3), {0}), ParseError);
  CHECK(is_trivial(trivial_character(*rs)));
}

TEST_CASE("dominance against the simple roots") {
  auto rs = gl(3);
  CHECK(is_dominant(*rs, chr(*rs, {Rat(1), Rat(0), Rat(-1)}, {0, 0, 0})));
  CHECK(is_dominant(*rs, chr(*rs, {Rat(2), Rat(2), Rat(2)}, {0, 0, 0})));
  CHECK_FALSE(is_dominant(*rs, chr(*rs, {Rat(0), Rat(1), Rat(-1)}, {0, 0, 0})));
  CHECK(is_dominant(*rs, trivial_character(*rs)));
  // Sign parts play no role in dominance.
  CHECK(is_dominant(*rs, chr(*rs, zero_weight(3), {5, -7, 1})));
}

TEST_CASE("weyl action permutes gl coordinates and exponents together") {
  auto rs = gl(3);
  const WeylElement s0 = WeylElement::simple_reflection(rs, 0);
  const CharacterOfT chi = chr(*rs, {Rat(1), Rat(2), Rat(3)}, {4, 5, 6});
  const CharacterOfT moved = weyl_act(s0, chi);
  CHECK(moved.lambda_re == Weight{Rat(2), Rat(1), Rat(3)});
  CHECK(moved.m == std::vector<Int>{5, 4, 6});
}

TEST_CASE("theta action flips the sign part for the split form") {
  auto rs = gl(2);
  const InvolutionSpec theta = InvolutionSpec::galois_split(rs);
  const CharacterOfT chi = chr(*rs, {Rat(1), Rat(0)}, {3, 1});
  const CharacterOfT img = theta_act(theta, chi);
  CHECK(img.lambda_re == Weight{Rat(1), Rat(0)});
  CHECK(img.m == std::vector<Int>{-3, -1});
  // epsilon +1 keeps the sign part.
  const InvolutionSpec plus =
      InvolutionSpec::make(rs, QMatrix::identity(2), 1, FixedRootMode::linear_minus);
  CHECK(theta_act(plus, chi).m == std::vector<Int>{3, 1});
}

TEST_CASE("inversion and composition") {
  auto rs = gl(2);
  const CharacterOfT chi = chr(*rs, {Rat(1), Rat(-2)}, {3, 1});
  const CharacterOfT inv = invert(chi);
  CHECK(inv.lambda_re == Weight{Rat(-1), Rat(2)});
  CHECK(inv.m == std::vector<Int>{-3, -1});
  CHECK(is_trivial(compose_chars(chi, inv)));
}

TEST_CASE("root characters carry integral sign exponents") {
  auto g3 = gl(3);
  const CharacterOfT a1 = root_character(*g3, g3->simple_root_index(0));
  CHECK(a1.lambda_re == Weight{Rat(1), Rat(-1), Rat(0)});
  CHECK(a1.m == std::vector<Int>{1, -1, 0});
  CHECK(is_zero_vec(a1.lambda_im));
  // Standard realizations have integer simple-root coordinates for every root.
  auto b2 = family("B", 2);
  for (int i = 0; i < b2->root_count(); ++i) CHECK_NOTHROW(root_character(*b2, i));
}

TEST_CASE("fold against the swap on gl_2") {
  auto rs = gl(2);
  const InvolutionSpec theta = InvolutionSpec::galois_split(rs);
  const auto tw = TwistedInvolution::make(theta, WeylElement::simple_reflection(rs, 0));
  REQUIRE(tw.has_value());
  const CharacterOfT chi = chr(*rs, {Rat(2), Rat(5)}, {3, 1});
  const CharacterOfT folded = fold(theta, *tw, chi).value;
  CHECK(folded.lambda_re == Weight{Rat(7), Rat(7)});
  CHECK(folded.m == std::vector<Int>{2, -2}); // (3,1) + swap(-3,-1)
  CHECK_FALSE(fold_symmetry(theta, *tw, chi));

  // lambda antisymmetric and equal sign exponents: the fold collapses.
  const CharacterOfT sym = chr(*rs, {Rat(4), Rat(-4)}, {6, 6});
  CHECK(fold_symmetry(theta, *tw, sym));
}

TEST_CASE("fold at the identity doubles the absolute part") {
  auto rs = gl(2);
  const InvolutionSpec theta = InvolutionSpec::galois_split(rs);
  const auto tw = TwistedInvolution::make(theta, WeylElement::identity(rs));
  REQUIRE(tw.has_value());
  const CharacterOfT chi = chr(*rs, {Rat(1), Rat(0)}, {3, 1});
  const CharacterOfT folded = fold(theta, *tw, chi).value;
  CHECK(folded.lambda_re == Weight{Rat(2), Rat(0)});
  CHECK(folded.m == std::vector<Int>{0, 0}); // the sign parts cancel
  // Purely sign characters are symmetric at the identity under the split form.
  CHECK(fold_symmetry(theta, *tw, chr(*rs, zero_weight(2), {9, -4})));
}

TEST_CASE("weyl orbit equivalence") {
  auto rs = gl(3);
  const WeylGroup group = WeylGroup::enumerate(rs);
  const CharacterOfT a = chr(*rs, {Rat(1), Rat(0), Rat(-1)}, {2, 0, 1});
  const CharacterOfT b = chr(*rs, {Rat(-1), Rat(1), Rat(0)}, {1, 2, 0});
  CHECK(weyl_orbit_equivalent(group, a, b));
  const CharacterOfT c = chr(*rs, {Rat(2), Rat(0), Rat(-2)}, {2, 0, 1});
  CHECK_FALSE(weyl_orbit_equivalent(group, a, c));
  // Exponents must travel with the weights.
  const CharacterOfT d = chr(*rs, {Rat(-1), Rat(1), Rat(0)}, {2, 0, 1});
  CHECK_FALSE(weyl_orbit_equivalent(group, a, d));
}
