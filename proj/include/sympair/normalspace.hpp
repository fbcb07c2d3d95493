#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "sympair/chars.hpp"
#include "sympair/pairs.hpp"

namespace sympair {

// One root space in the fiber decomposition at a twisted involution w.
// root is a negative root whose composite image w(theta(root)) is again
// negative; multiplicity follows the orbit structure of the composite
// action (orbit pairs count once each; fixed roots count 1, 2, or 0
// according to the fixed-root mode).  folded = root + w(theta(root)).
struct FiberEntry {
  int root = 0;
  int image = 0;        // composite image; == root for fixed roots
  int multiplicity = 0; // 0, 1, or 2
  Weight folded;
};

struct NormalFiberMultiset {
  std::vector<FiberEntry> entries;             // ascending root index
  std::vector<Weight> folded_vectors;          // deduplicated, first-appearance order,
                                               // over entries with multiplicity >= 1
  std::vector<std::vector<int>> folded_sources; // folded_vectors[k] <- entry indices
  int support_size() const;                     // entries with multiplicity >= 1
  int total_multiplicity() const;
};

NormalFiberMultiset normal_multiset(const PairSpec& pair, const TwistedInvolution& w);

// Independent combinatorial description of the support for the split
// general-linear pair: pairs (i, j), 1-indexed, i > j, with w(i) > w(j).
// The input permutation is 0-indexed and must be an involution.
std::vector<std::pair<int, int>> gln_oracle(int n, const std::vector<int>& w);

// Degree-k multiplicity counts of the fold of chi inside the symmetric
// algebra of the fiber: in degree k, the number of exponent assignments
// over the entries with total k whose folded characters multiply to the
// fold of chi, weighted by the number of monomials per entry
// (C(t + mult - 1, mult - 1)).  count_by_degree[0] is 1 exactly when the
// fold of chi is trivial.
struct SymEigenCounts {
  std::vector<Int> count_by_degree; // size k_max + 1
  bool complete = true;             // false when the budget cut the search
};

SymEigenCounts sym_eigen_count(const PairSpec& pair, const TwistedInvolution& w,
                               const CharacterOfT& chi, int k_max, long long budget);

// Complete enumeration of nonnegative integer solutions of
// sum_j n_j v_j = target, where every v_j is nonzero with nonpositive
// coordinates (simple-root coordinates of folded vectors).  Each exponent
// is bounded by min over coordinates of target/v_j, so the search is
// finite and exhaustive; solutions arrive in lexicographic order.
// max_total < 0 means no cap on sum n_j; budget < 0 means no node budget.
// Returns false when the budget cut the search short.
bool enumerate_fold_solutions(const std::vector<Weight>& vectors, const Weight& target,
                              long long max_total, long long budget,
                              const std::function<void(const std::vector<Int>&)>& emit);

} // namespace sympair
