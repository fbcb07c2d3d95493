#include <doctest.h>

#include "sympair/rootsys.hpp"

using namespace sympair;

namespace {

RootSystemPtr family(const std::string& f, int rank) {
  RootSystemSpec spec;
  spec.family = f;
  spec.rank = rank;
  return build_root_system(spec);
}

RootSystemPtr from_cartan(std::vector<std::vector<long long>> c) {
  RootSystemSpec spec;
  spec.cartan = std::move(c);
  return build_root_system(spec);
}

RootSystemPtr gl(int n) {
  RootSystemSpec spec;
  spec.realization = Realization::gl;
  spec.gl_n = n;
  return build_root_system(spec);
}

} // namespace

TEST_CASE("root counts per family") {
  CHECK(family("A", 1)->root_count() == 2);
  CHECK(family("A", 2)->root_count() == 6);
  CHECK(family("A", 3)->root_count() == 12);
  CHECK(family("B", 2)->root_count() == 8);
  CHECK(family("B", 3)->root_count() == 18);
  CHECK(family("C", 3)->root_count() == 18);
  CHECK(family("D", 4)->root_count() == 24);
  CHECK(family("F", 4)->root_count() == 48);
  CHECK(family("G", 2)->root_count() == 12);
  CHECK(family("E", 6)->root_count() == 72);
}

TEST_CASE("gl realization has n(n-1) roots in dimension n") {
  for (int n = 2; n <= 6; ++n) {
    auto rs = gl(n);
    CHECK(rs->root_count() == n * (n - 1));
    CHECK(rs->ambient_dim() == n);
    CHECK(rs->rank() == n - 1);
    CHECK(rs->perp_dim() == 1);
  }
}

TEST_CASE("weyl group orders come out of the height distribution") {
  CHECK(family("A", 1)->weyl_order() == 2);
  CHECK(family("A", 2)->weyl_order() == 6);
  CHECK(family("A", 3)->weyl_order() == 24);
  CHECK(family("B", 2)->weyl_order() == 8);
  CHECK(family("B", 3)->weyl_order() == 48);
  CHECK(family("C", 3)->weyl_order() == 48);
  CHECK(family("D", 4)->weyl_order() == 192);
  CHECK(family("G", 2)->weyl_order() == 12);
  CHECK(family("F", 4)->weyl_order() == 1152);
  CHECK(family("E", 6)->weyl_order() == 51840);
  CHECK(family("E", 7)->weyl_order() == 2903040);
  CHECK(gl(4)->weyl_order() == 24);
}

TEST_CASE("reducible systems multiply component orders") {
  // A1 x A1: merging the components would give the wrong exponents.
  auto rs = from_cartan({{2, 0}, {0, 2}});
  CHECK(rs->root_count() == 4);
  CHECK(rs->weyl_order() == 4);
  CHECK(rs->inner(rs->simple_root(0), rs->simple_root(1)) == Rat(0));
}

TEST_CASE("family rank constraints") {
  CHECK_THROWS_AS(family("A", 0), ParseError);
  CHECK_THROWS_AS(family("B", 1), ParseError);
  CHECK_THROWS_AS(family("C", 1), ParseError);
  CHECK_THROWS_AS(family("D", 2), ParseError);
  CHECK_THROWS_AS(family("E", 5), ParseError);
  CHECK_THROWS_AS(family("E", 9), ParseError);
  CHECK_THROWS_AS(family("F", 3), ParseError);
  CHECK_THROWS_AS(family("G", 3), ParseError);
  CHECK_THROWS_AS(family("H", 2), ParseError);
}

TEST_CASE("cartan matrix axioms are enforced with diagnostics") {
  CHECK_THROWS_AS(from_cartan({{2, -1}}), ParseError);                   // not square
  CHECK_THROWS_AS(from_cartan({{1}}), ParseError);                       // diagonal
  CHECK_THROWS_AS(from_cartan({{2, 1}, {1, 2}}), ParseError);            // positive off-diagonal
  CHECK_THROWS_AS(from_cartan({{2, -1}, {0, 2}}), ParseError);           // asymmetric zeros
  CHECK_THROWS_WITH_AS(from_cartan({{2, -1, -1}, {-1, 2, -2}, {-1, -1, 2}}),
                       "cartan matrix is not symmetrizable", ParseError); // odd triangle
  CHECK_THROWS_AS(from_cartan({{2, -2}, {-2, 2}}), ParseError);          // affine
  CHECK_THROWS_AS(from_cartan({{2, -3}, {-3, 2}}), ParseError);          // indefinite
}

TEST_CASE("explicit cartan matrices reproduce the family tables") {
  auto b2 = from_cartan({{2, -2}, {-1, 2}});
  CHECK(b2->root_count() == 8);
  CHECK(b2->weyl_order() == 8);
  // Long first root, short second.
  CHECK(b2->inner(b2->simple_root(0), b2->simple_root(0)) == Rat(2));
  CHECK(b2->inner(b2->simple_root(1), b2->simple_root(1)) == Rat(1));
}

TEST_CASE("standard realization puts simple roots on the basis") {
  auto rs = family("A", 2);
  CHECK(rs->ambient_dim() == 2);
  CHECK(rs->simple_root(0) == Weight{Rat(1), Rat(0)});
  CHECK(rs->simple_root(1) == Weight{Rat(0), Rat(1)});
  CHECK(rs->inner(rs->simple_root(0), rs->simple_root(0)) == Rat(2));
  CHECK(rs->inner(rs->simple_root(0), rs->simple_root(1)) == Rat(-1));
}

TEST_CASE("gl realization inner products are the dot product") {
  auto rs = gl(3);
  CHECK(rs->simple_root(0) == Weight{Rat(1), Rat(-1), Rat(0)});
  CHECK(rs->simple_root(1) == Weight{Rat(0), Rat(1), Rat(-1)});
  CHECK(rs->inner(rs->simple_root(0), rs->simple_root(1)) == Rat(-1));
  CHECK(rs->form() == QMatrix::identity(3));
}

TEST_CASE("g2 has six long and six short roots") {
  auto rs = family("G", 2);
  CHECK(rs->inner(rs->simple_root(0), rs->simple_root(0)) == Rat(2) / 3);
  CHECK(rs->inner(rs->simple_root(1), rs->simple_root(1)) == Rat(2));
  int nlong = 0, nshort = 0;
  for (int i = 0; i < rs->root_count(); ++i) {
    const Rat len = rs->inner(rs->root(i), rs->root(i));
    if (len == Rat(2)) ++nlong;
    if (len == Rat(2) / 3) ++nshort;
  }
  CHECK(nlong == 6);
  CHECK(nshort == 6);
}

TEST_CASE("root indexing: positives first, negation is index arithmetic") {
  auto rs = family("B", 3);
  CHECK(rs->positive_count() * 2 == rs->root_count());
  for (int i = 0; i < rs->root_count(); ++i) {
    CHECK(rs->is_positive(i) == (i < rs->positive_count()));
    CHECK(rs->root(rs->negate(i)) == wneg(rs->root(i)));
    CHECK(rs->negate(rs->negate(i)) == i);
    CHECK(rs->find_root(rs->root(i)) == i);
  }
  // Heights ascend over the positive block.
  for (int i = 1; i < rs->positive_count(); ++i) CHECK(rs->height(i) >= rs->height(i - 1));
}

TEST_CASE("rho2 pairs to the squared length of each simple root") {
  for (auto rs : {family("A", 3), family("B", 3), family("G", 2), gl(4)}) {
    for (int i = 0; i < rs->rank(); ++i)
      CHECK(rs->inner(rs->rho2(), rs->simple_root(i)) ==
            rs->inner(rs->simple_root(i), rs->simple_root(i)));
  }
  CHECK(gl(4)->rho2() == Weight{Rat(3), Rat(1), Rat(-1), Rat(-3)});
}

TEST_CASE("span coordinates detect the gl center") {
  auto rs = gl(3);
  CHECK_FALSE(rs->span_coordinates(Weight{Rat(1), Rat(1), Rat(1)}).has_value());
  const auto c = rs->span_coordinates(Weight{Rat(1), Rat(0), Rat(-1)});
  REQUIRE(c.has_value());
  CHECK(*c == Weight{Rat(1), Rat(1)});
  // Basis and inverse agree.
  CHECK(rs->span_basis().mul(rs->span_basis_inverse()) == QMatrix::identity(3));
}

TEST_CASE("reflections permute the root list") {
  auto rs = family("A", 2);
  const int a1 = rs->simple_root_index(0);
  const int a2 = rs->simple_root_index(1);
  CHECK(rs->reflect(a1, 0) == rs->negate(a1));
  // s_0 applied to the other simple root climbs to the sum.
  const auto sum = rs->find_root(wadd(rs->simple_root(0), rs->simple_root(1)));
  REQUIRE(sum.has_value());
  CHECK(rs->reflect(a2, 0) == *sum);
}

TEST_CASE("parabolic data for a single simple root of A2") {
  auto rs = family("A", 2);
  const auto p = standard_parabolic(*rs, {0});
  CHECK(p.F == std::vector<int>{0});
  CHECK(p.sigma_F.size() == 2);
  CHECK(p.n_F.size() == 2);
  CHECK(p.n_MF.size() == 1);
  CHECK(p.a_MF_dim == 1);
  CHECK(p.a_F_dim == 1);
}

TEST_CASE("parabolic invariants hold over every subset") {
  for (auto rs : {family("A", 3), family("B", 3), family("G", 2), gl(3)}) {
    const auto all = all_parabolics(*rs);
    CHECK(static_cast<int>(all.size()) == (1 << rs->rank()));
    for (const auto& p : all) {
      CHECK(p.a_F_dim + p.a_MF_dim == rs->rank());
      CHECK(static_cast<int>(p.n_F.size() + p.n_MF.size()) == rs->positive_count());
      CHECK(p.sigma_F.size() == 2 * p.n_MF.size());
    }
    // Extremes: empty set and the full set.
    CHECK(all.front().F.empty());
    CHECK(all.front().a_F_dim == rs->rank());
    CHECK(static_cast<int>(all.back().F.size()) == rs->rank());
    CHECK(all.back().a_F_dim == 0);
  }
}

TEST_CASE("parabolic enumeration refuses huge ranks") {
  CHECK_THROWS_AS(all_parabolics(*family("A", 17)), BudgetError);
}

TEST_CASE("gl spec constraints") {
  RootSystemSpec spec;
  spec.realization = Realization::gl;
  spec.gl_n = 1;
  CHECK_THROWS_AS(build_root_system(spec), ParseError);
  spec.gl_n = 3;
  spec.cartan = std::vector<std::vector<long long>>{std::vector<long long>{2}};
  CHECK_THROWS_AS(build_root_system(spec), ParseError);
  spec.cartan.reset();
  spec.family = "A";
  spec.rank = 2;
  CHECK(build_root_system(spec)->root_count() == 6); // consistent family is fine
  spec.rank = 3;
  CHECK_THROWS_AS(build_root_system(spec), ParseError); // rank must be n-1
}
