#include <doctest.h>

#include <set>

#include "sympair/normalspace.hpp"

using namespace sympair;

namespace {

RootSystemPtr gl(int n) {
  RootSystemSpec spec;
  spec.realization = Realization::gl;
  spec.gl_n = n;
  return build_root_system(spec);
}

TwistedInvolution twisted(const PairSpec& pair, const WeylElement& w) {
  auto tw = TwistedInvolution::make(pair.theta, w);
  REQUIRE(tw.has_value());
  return *tw;
}

} // namespace

TEST_CASE("fiber multiset at the identity covers every negative root once") {
  auto rs = gl(3);
  const PairSpec pair = galois_split_pair(rs);
  const auto S = normal_multiset(pair, twisted(pair, WeylElement::identity(rs)));
  REQUIRE(S.entries.size() == 3);
  for (size_t i = 0; i < 3; ++i) {
    const auto& e = S.entries[i];
    CHECK(e.root == 3 + static_cast<int>(i)); // ascending over the negative block
    CHECK(e.image == e.root);                 // all fixed
    CHECK(e.multiplicity == 1);               // semilinear
    CHECK(e.folded == wscale(Rat(2), rs->root(e.root)));
  }
  CHECK(S.support_size() == 3);
  CHECK(S.total_multiplicity() == 3);
  CHECK(S.folded_vectors.size() == 3);
}

TEST_CASE("fiber multiset at the longest element is empty") {
  auto rs = gl(3);
  const PairSpec pair = galois_split_pair(rs);
  const WeylGroup group = WeylGroup::enumerate(rs);
  const auto S = normal_multiset(pair, twisted(pair, group.longest()));
  CHECK(S.entries.empty());
  CHECK(S.support_size() == 0);
  CHECK(S.folded_vectors.empty());
}

TEST_CASE("orbit pairs share one folded vector") {
  auto rs = gl(3);
  const PairSpec pair = galois_split_pair(rs);
  const auto S =
      normal_multiset(pair, twisted(pair, WeylElement::simple_reflection(rs, 0)));
  // The reflection in e1 - e2 exchanges e3 - e2 and e3 - e1 and expels e2 - e1.
  REQUIRE(S.entries.size() == 2);
  CHECK(S.entries[0].root == 3);
  CHECK(S.entries[0].image == 5);
  CHECK(S.entries[1].root == 5);
  CHECK(S.entries[1].image == 3);
  CHECK(S.entries[0].multiplicity == 1);
  CHECK(S.entries[1].multiplicity == 1);
  CHECK(S.entries[0].folded == S.entries[1].folded);
  CHECK(S.entries[0].folded == Weight{Rat(-1), Rat(-1), Rat(2)});
  REQUIRE(S.folded_vectors.size() == 1);
  CHECK(S.folded_sources == std::vector<std::vector<int>>{{0, 1}});
  CHECK(S.support_size() == 2);
}

TEST_CASE("fixed root multiplicity follows the mode") {
  auto rs = gl(2);
  for (auto [mode, mult] : {std::pair<FixedRootMode, int>{FixedRootMode::semilinear, 1},
                            {FixedRootMode::linear_minus, 2},
                            {FixedRootMode::linear_plus, 0}}) {
    const InvolutionSpec theta = InvolutionSpec::make(rs, QMatrix::identity(2), -1, mode);
    const PairSpec pair = make_pair(rs, theta);
    const auto S = normal_multiset(pair, twisted(pair, WeylElement::identity(rs)));
    REQUIRE(S.entries.size() == 1);
    CHECK(S.entries[0].multiplicity == mult);
    CHECK(S.support_size() == (mult >= 1 ? 1 : 0));
    CHECK(S.total_multiplicity() == mult);
    CHECK(S.folded_vectors.size() == (mult >= 1 ? 1u : 0u));
  }
}

TEST_CASE("oracle matches the frozen examples") {
  using P = std::vector<std::pair<int, int>>;
  CHECK(gln_oracle(3, {1, 0, 2}) == P{{3, 1}, {3, 2}});
  CHECK(gln_oracle(3, {0, 1, 2}) == P{{2, 1}, {3, 1}, {3, 2}});
  CHECK(gln_oracle(2, {0, 1}) == P{{2, 1}});
  CHECK(gln_oracle(2, {1, 0}) == P{});
  CHECK(gln_oracle(1, {0}) == P{});
}

TEST_CASE("oracle validates its input") {
  CHECK_THROWS_AS(gln_oracle(0, {}), ParseError);
  CHECK_THROWS_AS(gln_oracle(3, {0, 1}), ParseError);       // wrong length
  CHECK_THROWS_AS(gln_oracle(3, {0, 1, 3}), ParseError);    // out of range
  CHECK_THROWS_AS(gln_oracle(3, {1, 1, 0}), ParseError);    // repeated value
  CHECK_THROWS_AS(gln_oracle(3, {1, 2, 0}), PreconditionError); // 3-cycle
}

TEST_CASE("oracle agrees with the fiber support on gl_3") {
  auto rs = gl(3);
  const PairSpec pair = galois_split_pair(rs);
  const WeylGroup group = WeylGroup::enumerate(rs);
  for (const auto& tw : twisted_involutions(group, pair.theta)) {
    // Coordinate permutation of the element: w(e_k) = e_{sigma(k)}.
    std::vector<int> sigma(3);
    for (int k = 0; k < 3; ++k) {
      Weight ek = zero_weight(3);
      ek[static_cast<size_t>(k)] = Rat(1);
      const Weight img = tw.element().act(ek);
      for (int r = 0; r < 3; ++r)
        if (img[static_cast<size_t>(r)] == Rat(1)) sigma[static_cast<size_t>(k)] = r;
    }
    const auto pairs = gln_oracle(3, sigma);
    std::set<std::pair<int, int>> expect(pairs.begin(), pairs.end());

    std::set<std::pair<int, int>> got;
    for (const auto& e : normal_multiset(pair, tw).entries) {
      // A negative root e_i - e_j with i > j, read off its coordinates.
      int i = 0, j = 0;
      const Weight& root = rs->root(e.root);
      for (int r = 0; r < 3; ++r) {
        if (root[static_cast<size_t>(r)] == Rat(1)) i = r + 1;
        if (root[static_cast<size_t>(r)] == Rat(-1)) j = r + 1;
      }
      got.insert({i, j});
    }
    CHECK(got == expect);
  }
}

TEST_CASE("bounded solution enumeration in one dimension") {
  const std::vector<Weight> vectors{{Rat(-1)}, {Rat(-2)}};
  const Weight target{Rat(-3)};
  std::vector<std::vector<Int>> sols;
  const bool complete = enumerate_fold_solutions(vectors, target, -1, -1,
                                                 [&](const std::vector<Int>& a) {
                                                   sols.push_back(a);
                                                 });
  CHECK(complete);
  REQUIRE(sols.size() == 2);
  CHECK(sols[0] == std::vector<Int>{1, 1}); // lexicographic order
  CHECK(sols[1] == std::vector<Int>{3, 0});

  sols.clear();
  enumerate_fold_solutions(vectors, target, 2, -1,
                           [&](const std::vector<Int>& a) { sols.push_back(a); });
  CHECK(sols == std::vector<std::vector<Int>>{{1, 1}});

  sols.clear();
  enumerate_fold_solutions(vectors, target, 1, -1,
                           [&](const std::vector<Int>& a) { sols.push_back(a); });
  CHECK(sols.empty());
}

TEST_CASE("solution enumeration rejects invalid vectors and exhausted budgets") {
  std::vector<std::vector<Int>> sols;
  const auto sink = [&](const std::vector<Int>& a) { sols.push_back(a); };
  CHECK_THROWS_AS(enumerate_fold_solutions({{Rat(1)}}, {Rat(-1)}, -1, -1, sink),
                  InternalError);
  CHECK_THROWS_AS(enumerate_fold_solutions({{Rat(0)}}, {Rat(-1)}, -1, -1, sink),
                  InternalError);
  CHECK_THROWS_AS(enumerate_fold_solutions({{Rat(-1), Rat(0)}}, {Rat(-1)}, -1, -1, sink),
                  InternalError);
  CHECK_FALSE(enumerate_fold_solutions({{Rat(-1)}}, {Rat(-3)}, -1, 0, sink));
  // Empty vector list: only the empty assignment, valid iff the target is zero.
  sols.clear();
  CHECK(enumerate_fold_solutions({}, {Rat(0)}, -1, -1, sink));
  CHECK(sols == std::vector<std::vector<Int>>{{}});
  sols.clear();
  CHECK(enumerate_fold_solutions({}, {Rat(-1)}, -1, -1, sink));
  CHECK(sols.empty());
}

TEST_CASE("symmetric-algebra multiplicity counts on gl_2") {
  auto rs = gl(2);
  const PairSpec pair = galois_split_pair(rs);
  const auto tw = twisted(pair, WeylElement::identity(rs));

  SUBCASE("trivial character sits in degree zero only") {
    const auto counts = sym_eigen_count(pair, tw, trivial_character(*rs), 2, 100000);
    CHECK(counts.complete);
    CHECK(counts.count_by_degree == std::vector<Int>{1, 0, 0});
  }

  SUBCASE("a folded root character sits in degree one") {
    const CharacterOfT chi = root_character(*rs, 1); // the negative simple root
    const auto counts = sym_eigen_count(pair, tw, chi, 2, 100000);
    CHECK(counts.complete);
    CHECK(counts.count_by_degree == std::vector<Int>{0, 1, 0});
  }

  SUBCASE("multiplicity two doubles the degree-one count") {
    const InvolutionSpec theta =
        InvolutionSpec::make(rs, QMatrix::identity(2), 1, FixedRootMode::linear_minus);
    const PairSpec p2 = make_pair(rs, theta);
    const auto tw2 = twisted(p2, WeylElement::identity(rs));
    const CharacterOfT chi = root_character(*rs, 1);
    const auto counts = sym_eigen_count(p2, tw2, chi, 1, 100000);
    CHECK(counts.complete);
    CHECK(counts.count_by_degree == std::vector<Int>{0, 2});
  }

  SUBCASE("imaginary parts in the fold leave every degree empty") {
    CharacterOfT chi = trivial_character(*rs);
    chi.lambda_im = Weight{Rat(1), Rat(-1)};
    const auto counts = sym_eigen_count(pair, tw, chi, 1, 100000);
    CHECK(counts.complete);
    CHECK(counts.count_by_degree == std::vector<Int>{0, 0});
  }

  SUBCASE("budget zero reports an incomplete scan") {
    const auto counts = sym_eigen_count(pair, tw, trivial_character(*rs), 1, 0);
    CHECK_FALSE(counts.complete);
  }

  CHECK_THROWS_AS(sym_eigen_count(pair, tw, trivial_character(*rs), -1, 100), ParseError);
}
