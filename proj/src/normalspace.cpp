#include "sympair/normalspace.hpp"

#include <algorithm>
#include <functional>

namespace sympair {

int NormalFiberMultiset::support_size() const {
  int n = 0;
  for (const auto& e : entries)
    if (e.multiplicity >= 1) ++n;
  return n;
}

int NormalFiberMultiset::total_multiplicity() const {
  int n = 0;
  for (const auto& e : entries) n += e.multiplicity;
  return n;
}

NormalFiberMultiset normal_multiset(const PairSpec& pair, const TwistedInvolution& w) {
  const RootSystem& rs = *pair.rs;
  NormalFiberMultiset out;
  for (int idx = rs.positive_count(); idx < rs.root_count(); ++idx) {
    const int img = w.composite_root(idx);
    if (rs.is_positive(img)) continue;
    FiberEntry e;
    e.root = idx;
    e.image = img;
    if (img != idx) {
      e.multiplicity = 1;
    } else {
      switch (pair.theta.mode()) {
        case FixedRootMode::semilinear: e.multiplicity = 1; break;
        case FixedRootMode::linear_minus: e.multiplicity = 2; break;
        case FixedRootMode::linear_plus: e.multiplicity = 0; break;
      }
    }
    e.folded = wadd(rs.root(idx), rs.root(img));
    // The composite fixes no root to its negative (both are negative here),
    // so folded vectors never vanish.
    if (is_zero_vec(e.folded))
      throw InternalError("folded vector vanished");
    out.entries.push_back(std::move(e));
  }

  for (size_t i = 0; i < out.entries.size(); ++i) {
    const auto& e = out.entries[i];
    if (e.multiplicity < 1) continue;
    size_t k = 0;
    for (; k < out.folded_vectors.size(); ++k)
      if (out.folded_vectors[k] == e.folded) break;
    if (k == out.folded_vectors.size()) {
      out.folded_vectors.push_back(e.folded);
      out.folded_sources.emplace_back();
    }
    out.folded_sources[k].push_back(static_cast<int>(i));
  }
  return out;
}

std::vector<std::pair<int, int>> gln_oracle(int n, const std::vector<int>& w) {
  if (n < 1) throw ParseError("oracle n must be positive");
  if (static_cast<int>(w.size()) != n)
    throw ParseError("oracle permutation must have length n");
  std::vector<bool> seen(static_cast<size_t>(n), false);
  for (int v : w) {
    if (v < 0 || v >= n)
      throw ParseError("oracle permutation entries must lie in 0..n-1");
    if (seen[static_cast<size_t>(v)]) throw ParseError("oracle permutation repeats a value");
    seen[static_cast<size_t>(v)] = true;
  }
  for (int i = 0; i < n; ++i)
    if (w[static_cast<size_t>(w[static_cast<size_t>(i)])] != i)
      throw PreconditionError("oracle permutation must be an involution");

  std::vector<std::pair<int, int>> pairs;
  for (int i = 2; i <= n; ++i)
    for (int j = 1; j < i; ++j)
      if (w[static_cast<size_t>(i - 1)] > w[static_cast<size_t>(j - 1)])
        pairs.emplace_back(i, j);
  return pairs;
}

namespace {

// Bounded exhaustive search shared with the fold-equation solver.  Targets
// and folded vectors are written in simple-root coordinates, where every
// folded vector is nonzero with nonpositive entries; that bounds each
// exponent by min over coordinates of target/vector and makes the search
// complete.  Returns false when the node budget ran out.
struct SearchSpec {
  const std::vector<Weight>* vectors = nullptr; // simple-root coordinates
  Weight target;                                // simple-root coordinates
  long long max_total = -1;                     // <0 means unbounded
  long long budget = -1;                        // <0 means unbounded
};

bool dfs(const SearchSpec& spec, size_t at, Weight& remaining, long long used,
         std::vector<Int>& partial, long long& nodes,
         const std::function<void(const std::vector<Int>&)>& emit) {
  if (spec.budget >= 0 && ++nodes > spec.budget) return false;
  const auto& vecs = *spec.vectors;
  if (at == vecs.size()) {
    if (is_zero_vec(remaining)) emit(partial);
    return true;
  }
  const Weight& v = vecs[at];
  // Upper bound: remaining[c]/v[c] over strictly negative coordinates.
  Int bound = -1;
  for (size_t c = 0; c < v.size(); ++c) {
    if (v[c] >= 0) continue;
    const Rat q = remaining[c] / v[c];
    const Int b = rat_num(q) / rat_den(q); // floor for nonnegative q
    if (q < 0) { bound = 0; break; }
    if (bound < 0 || b < bound) bound = b;
  }
  if (bound < 0) throw InternalError("folded vector with no negative coordinate");
  if (spec.max_total >= 0) bound = std::min(bound, Int(spec.max_total - used));

  for (Int t = 0; t <= bound; ++t) {
    if (t > 0)
      for (size_t c = 0; c < v.size(); ++c) remaining[c] -= v[c];
    // Every remaining vector only lowers coordinates, so a positive
    // coordinate can never come back to zero.
    bool viable = true;
    for (size_t c = 0; c < v.size(); ++c)
      if (remaining[c] > 0) { viable = false; break; }
    if (viable) {
      partial.push_back(t);
      const bool ok = dfs(spec, at + 1, remaining, used + t.convert_to<long long>(),
                          partial, nodes, emit);
      partial.pop_back();
      if (!ok) {
        for (Int u = 0; u < t; ++u)
          for (size_t c = 0; c < v.size(); ++c) remaining[c] += v[c];
        return false;
      }
    }
  }
  for (Int u = 0; u < bound; ++u)
    for (size_t c = 0; c < v.size(); ++c) remaining[c] += v[c];
  return true;
}

} // namespace

bool enumerate_fold_solutions(const std::vector<Weight>& vectors, const Weight& target,
                              long long max_total, long long budget,
                              const std::function<void(const std::vector<Int>&)>& emit) {
  for (const auto& v : vectors) {
    if (v.size() != target.size())
      throw InternalError("fold solution vectors must match the target dimension");
    bool negative = false;
    for (const auto& c : v) {
      if (c > 0) throw InternalError("folded vector with a positive coordinate");
      if (c < 0) negative = true;
    }
    if (!negative) throw InternalError("folded vector with no negative coordinate");
  }
  SearchSpec spec;
  spec.vectors = &vectors;
  spec.target = target;
  spec.max_total = max_total;
  spec.budget = budget;
  Weight remaining = target;
  std::vector<Int> partial;
  long long nodes = 0;
  return dfs(spec, 0, remaining, 0, partial, nodes, emit);
}

SymEigenCounts sym_eigen_count(const PairSpec& pair, const TwistedInvolution& w,
                               const CharacterOfT& chi, int k_max, long long budget) {
  if (k_max < 0) throw ParseError("k_max must be nonnegative");
  const RootSystem& rs = *pair.rs;
  const auto multiset = normal_multiset(pair, w);
  const CharacterOfT target = fold(pair.theta, w, chi).value;

  SymEigenCounts out;
  out.count_by_degree.assign(static_cast<size_t>(k_max) + 1, Int(0));

  // Folded root characters have no imaginary part, so a nontrivial one in
  // the target leaves every degree empty.
  if (!is_zero_vec(target.lambda_im)) return out;

  std::vector<const FiberEntry*> support;
  for (const auto& e : multiset.entries)
    if (e.multiplicity >= 1) support.push_back(&e);

  const auto tau_coords = rs.span_coordinates(target.lambda_re);
  if (!tau_coords) return out;

  std::vector<Weight> vectors;
  std::vector<std::vector<Int>> folded_m;
  for (const auto* e : support) {
    const auto c = rs.span_coordinates(e->folded);
    if (!c) throw InternalError("folded vector left the root span");
    vectors.push_back(*c);
    folded_m.push_back(fold(pair.theta, w, root_character(rs, e->root)).value.m);
  }

  const bool complete = enumerate_fold_solutions(
      vectors, *tau_coords, k_max, budget, [&](const std::vector<Int>& assign) {
    std::vector<Int> msum(target.m.size(), Int(0));
    Int total(0);
    Int weight(1);
    for (size_t j = 0; j < assign.size(); ++j) {
      total += assign[j];
      for (size_t c = 0; c < msum.size(); ++c) msum[c] += assign[j] * folded_m[j][c];
      // Monomials in an entry's root space: multiplicity 1 gives one choice,
      // multiplicity 2 gives t + 1.
      weight *= binomial(assign[j] + support[j]->multiplicity - 1,
                         Int(support[j]->multiplicity - 1));
    }
    if (msum != target.m) return;
    if (total > k_max) return;
    out.count_by_degree[static_cast<size_t>(total.convert_to<long long>())] += weight;
  });
  out.complete = complete;
  return out;
}

} // namespace sympair
