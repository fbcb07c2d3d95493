#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sympair/normalspace.hpp"

namespace sympair {

inline constexpr long long kDefaultSolverBudget = 2'000'000;

// All nonnegative integer assignments n over the support entries of the
// multiset (multiplicity >= 1, one variable per support root) with
// sum_j n_j * folded_j = tau.  tau must lie in the root span
// (PreconditionError otherwise); a tau with a positive or fractional
// simple-root coordinate yields the empty list.  Assignments arrive in
// lexicographic order.  Throws BudgetError when the search exceeds budget.
std::vector<std::vector<Int>> solve_fold_equation(const RootSystem& rs,
                                                  const NormalFiberMultiset& S,
                                                  const Weight& tau,
                                                  long long budget = kDefaultSolverBudget);

struct DistinctionRow {
  TwistedInvolution w;
  NormalFiberMultiset multiset;
  std::vector<std::vector<Int>> solutions; // over support entries
  bool feasible = false;                   // some solution realizes the full fold
  bool symmetry = false;                   // chi^{-1} = w(theta(chi))
  int sym_dimension = 0;                   // 1 when feasible, else 0
  std::optional<SymEigenCounts> eigen;     // when k_max was requested
};

struct DistinctionReport {
  CharacterOfT chi;
  std::vector<DistinctionRow> rows; // canonical twisted-involution order
  int feasible_count = 0;
  Int twisted_count;                // number of rows
  std::string caveat;               // orbit-count caveat, fixed text
};

struct DistinctionOptions {
  std::optional<int> k_max;
  long long solver_budget = kDefaultSolverBudget;
  int workers = 1;
};

// Feasibility of the fold equation at every twisted involution for a
// dominant character (PreconditionError otherwise, pointing at the
// dominant-representative normalization).  For dominant input the solver
// can only return the zero assignment; that is cross-checked, as is the
// implication feasible => symmetry, and sym_dimension is 1 on feasible
// rows.
DistinctionReport check_distinction(const PairSpec& pair, const CharacterOfT& chi,
                                    const WeylGroup& group,
                                    const DistinctionOptions& options = {});

extern const char* kOrbitCountCaveat;

} // namespace sympair
