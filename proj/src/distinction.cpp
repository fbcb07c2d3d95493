#include "sympair/distinction.hpp"

#include <algorithm>
#include <future>

namespace sympair {

const char* kOrbitCountCaveat =
    "twisted_involution_count bounds orbit representatives at the torus-normalizer level; "
    "finite-index open subgroups can split orbits further";

std::vector<std::vector<Int>> solve_fold_equation(const RootSystem& rs,
                                                  const NormalFiberMultiset& S,
                                                  const Weight& tau, long long budget) {
  const auto tau_coords = rs.span_coordinates(tau);
  if (!tau_coords)
    throw PreconditionError("fold equation target lies outside the root span");

  std::vector<Weight> vectors;
  for (const auto& e : S.entries) {
    if (e.multiplicity < 1) continue;
    const auto c = rs.span_coordinates(e.folded);
    if (!c) throw InternalError("folded vector left the root span");
    vectors.push_back(*c);
  }

  // Solutions are integer vectors, so a fractional coordinate in the
  // target is an immediate (clean) miss.
  for (const auto& c : *tau_coords)
    if (!is_integer(c)) return {};

  std::vector<std::vector<Int>> solutions;
  const bool complete = enumerate_fold_solutions(
      vectors, *tau_coords, /*max_total=*/-1, budget,
      [&](const std::vector<Int>& assign) { solutions.push_back(assign); });
  if (!complete)
    throw BudgetError("fold equation search exceeded budget " + std::to_string(budget));
  return solutions;
}

namespace {

DistinctionRow distinction_row(const PairSpec& pair, const CharacterOfT& chi,
                               TwistedInvolution w, const DistinctionOptions& options) {
  const RootSystem& rs = *pair.rs;
  DistinctionRow row{std::move(w), {}, {}, false, false, 0, std::nullopt};
  row.multiset = normal_multiset(pair, row.w);

  const CharacterOfT folded = fold(pair.theta, row.w, chi).value;

  // The lambda side first: outside the root span nothing can match.
  if (rs.span_coordinates(folded.lambda_re))
    row.solutions = solve_fold_equation(rs, row.multiset, folded.lambda_re,
                                        options.solver_budget);

  // Full feasibility: some solution must realize the fold of chi as a
  // product of folded root characters, imaginary and sign parts included.
  std::vector<const FiberEntry*> support;
  for (const auto& e : row.multiset.entries)
    if (e.multiplicity >= 1) support.push_back(&e);
  for (const auto& assign : row.solutions) {
    CharacterOfT prod = trivial_character(rs);
    for (size_t j = 0; j < assign.size(); ++j) {
      if (assign[j] == 0) continue;
      const CharacterOfT fr = fold(pair.theta, row.w, root_character(rs, support[j]->root)).value;
      CharacterOfT scaled = fr;
      scaled.lambda_re = wscale(Rat(assign[j]), fr.lambda_re);
      scaled.lambda_im = wscale(Rat(assign[j]), fr.lambda_im);
      for (size_t c = 0; c < scaled.m.size(); ++c) scaled.m[c] = assign[j] * fr.m[c];
      prod = compose_chars(prod, scaled);
    }
    if (prod == folded) { row.feasible = true; break; }
  }

  row.symmetry = is_trivial(folded);

  // Dominance forces the zero assignment as the only candidate; anything
  // else would mean the dominance argument failed.
  for (const auto& assign : row.solutions)
    for (const auto& v : assign)
      if (v != 0)
        throw InternalError("nonzero fold solution for a dominant character");
  if (row.feasible && !row.symmetry)
    throw InternalError("feasible row without character symmetry");

  row.sym_dimension = row.feasible ? 1 : 0;
  if (options.k_max)
    row.eigen = sym_eigen_count(pair, row.w, chi, *options.k_max, options.solver_budget);
  return row;
}

} // namespace

DistinctionReport check_distinction(const PairSpec& pair, const CharacterOfT& chi,
                                    const WeylGroup& group,
                                    const DistinctionOptions& options) {
  const RootSystem& rs = *pair.rs;
  if (static_cast<int>(chi.lambda_re.size()) != rs.ambient_dim())
    throw PreconditionError("character does not match the ambient dimension");
  if (!is_dominant(rs, chi))
    throw PreconditionError(
        "character is not dominant; normalize it first via the dominant representative "
        "(langlands command)");

  const auto twisted = twisted_involutions(group, pair.theta);

  DistinctionReport report;
  report.chi = chi;
  report.twisted_count = Int(twisted.size());
  report.caveat = kOrbitCountCaveat;
  report.rows.reserve(twisted.size());

  const int workers = std::max(1, options.workers);
  if (workers == 1 || twisted.size() < 2) {
    for (const auto& w : twisted)
      report.rows.push_back(distinction_row(pair, chi, w, options));
  } else {
    const size_t n = twisted.size();
    const size_t nw = std::min<size_t>(static_cast<size_t>(workers), n);
    std::vector<std::future<std::vector<DistinctionRow>>> futs;
    for (size_t k = 0; k < nw; ++k) {
      futs.push_back(std::async(std::launch::async, [&, k]() {
        std::vector<DistinctionRow> rows;
        for (size_t i = k; i < n; i += nw)
          rows.push_back(distinction_row(pair, chi, twisted[i], options));
        return rows;
      }));
    }
    std::vector<std::vector<DistinctionRow>> chunks;
    for (auto& f : futs) chunks.push_back(f.get());
    for (size_t i = 0; i < n; ++i)
      report.rows.push_back(std::move(chunks[i % nw][i / nw]));
  }

  for (const auto& row : report.rows)
    if (row.feasible) ++report.feasible_count;
  return report;
}

} // namespace sympair
