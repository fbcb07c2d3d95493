#include "sympair/rootsys.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>

namespace sympair {

namespace {

using CartanMat = std::vector<std::vector<long long>>;

CartanMat chain(int n) {
  CartanMat c(static_cast<size_t>(n), std::vector<long long>(static_cast<size_t>(n), 0));
  for (int i = 0; i < n; ++i) c[static_cast<size_t>(i)][static_cast<size_t>(i)] = 2;
  for (int i = 0; i + 1 < n; ++i) {
    c[static_cast<size_t>(i)][static_cast<size_t>(i + 1)] = -1;
    c[static_cast<size_t>(i + 1)][static_cast<size_t>(i)] = -1;
  }
  return c;
}

// Entry (i,j) is 2<a_i,a_j>/<a_j,a_j>, so s_j(a_i) = a_i - C[i][j] a_j.
CartanMat family_cartan(const std::string& family, int rank) {
  auto need = [&](bool ok, const std::string& msg) {
    if (!ok) throw ParseError("family " + family + " rank " + std::to_string(rank) + ": " + msg);
  };
  if (family == "A") {
    need(rank >= 1, "rank must be at least 1");
    return chain(rank);
  }
  if (family == "B") {
    need(rank >= 2, "rank must be at least 2");
    auto c = chain(rank);
    c[static_cast<size_t>(rank - 2)][static_cast<size_t>(rank - 1)] = -2; // last simple root short
    return c;
  }
  if (family == "C") {
    need(rank >= 2, "rank must be at least 2");
    auto c = chain(rank);
    c[static_cast<size_t>(rank - 1)][static_cast<size_t>(rank - 2)] = -2; // last simple root long
    return c;
  }
  if (family == "D") {
    need(rank >= 3, "rank must be at least 3");
    auto c = chain(rank);
    // Detach the last node from the chain and fork it off node rank-2.
    c[static_cast<size_t>(rank - 2)][static_cast<size_t>(rank - 1)] = 0;
    c[static_cast<size_t>(rank - 1)][static_cast<size_t>(rank - 2)] = 0;
    c[static_cast<size_t>(rank - 3)][static_cast<size_t>(rank - 1)] = -1;
    c[static_cast<size_t>(rank - 1)][static_cast<size_t>(rank - 3)] = -1;
    return c;
  }
  if (family == "E") {
    need(rank >= 6 && rank <= 8, "rank must be 6, 7, or 8");
    // Nodes 1-3-4-5-... form a chain; node 2 hangs off node 4.
    CartanMat c(static_cast<size_t>(rank), std::vector<long long>(static_cast<size_t>(rank), 0));
    for (int i = 0; i < rank; ++i) c[static_cast<size_t>(i)][static_cast<size_t>(i)] = 2;
    auto edge = [&](int i, int j) {
      c[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] = -1;
      c[static_cast<size_t>(j - 1)][static_cast<size_t>(i - 1)] = -1;
    };
    edge(1, 3); edge(3, 4); edge(4, 5); edge(5, 6); edge(2, 4);
    if (rank >= 7) edge(6, 7);
    if (rank >= 8) edge(7, 8);
    return c;
  }
  if (family == "F") {
    need(rank == 4, "rank must be 4");
    auto c = chain(4);
    c[1][2] = -2; // nodes 3,4 short
    return c;
  }
  if (family == "G") {
    need(rank == 2, "rank must be 2");
    return {{2, -1}, {-3, 2}};
  }
  throw ParseError("unknown family: " + family);
}

void validate_cartan(const CartanMat& c) {
  const size_t n = c.size();
  if (n == 0) throw ParseError("cartan matrix is empty");
  for (size_t i = 0; i < n; ++i) {
    if (c[i].size() != n) throw ParseError("cartan matrix is not square");
    if (c[i][i] != 2)
      throw ParseError("cartan matrix diagonal entry (" + std::to_string(i + 1) + "," +
                       std::to_string(i + 1) + ") must be 2");
    for (size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (c[i][j] > 0)
        throw ParseError("cartan matrix off-diagonal entry (" + std::to_string(i + 1) + "," +
                         std::to_string(j + 1) + ") must be nonpositive");
      if ((c[i][j] == 0) != (c[j][i] == 0))
        throw ParseError("cartan matrix zero pattern is not symmetric at (" +
                         std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
    }
  }
}

// Solve C[i][j] d_j = C[j][i] d_i over every edge; inconsistency means the
// matrix is not symmetrizable.  Scaling is fixed afterwards per component.
std::vector<Rat> symmetrize(const CartanMat& c, const std::vector<int>& comp, int ncomp) {
  const size_t n = c.size();
  std::vector<Rat> d(n, Rat(0));
  for (int k = 0; k < ncomp; ++k) {
    int seed = -1;
    for (size_t i = 0; i < n; ++i)
      if (comp[i] == k) { seed = static_cast<int>(i); break; }
    d[static_cast<size_t>(seed)] = 1;
    std::vector<int> stack{seed};
    while (!stack.empty()) {
      const size_t i = static_cast<size_t>(stack.back());
      stack.pop_back();
      for (size_t j = 0; j < n; ++j) {
        if (i == j || c[i][j] == 0) continue;
        // Two-argument Rat construction rejects negative denominators in
        // this boost version; divide instead.
        const Rat dj = d[i] * (Rat(c[j][i]) / Rat(c[i][j]));
        if (d[j] == 0) {
          d[j] = dj;
          stack.push_back(static_cast<int>(j));
        } else if (d[j] != dj) {
          throw ParseError("cartan matrix is not symmetrizable");
        }
      }
    }
    // Long roots get squared length 2: scale so the component maximum is 1.
    Rat mx(0);
    for (size_t i = 0; i < n; ++i)
      if (comp[i] == k && d[i] > mx) mx = d[i];
    for (size_t i = 0; i < n; ++i)
      if (comp[i] == k) d[i] /= mx;
  }
  return d;
}

std::vector<int> components(const CartanMat& c, int& ncomp) {
  const int n = static_cast<int>(c.size());
  std::vector<int> comp(static_cast<size_t>(n), -1);
  ncomp = 0;
  for (int s = 0; s < n; ++s) {
    if (comp[static_cast<size_t>(s)] >= 0) continue;
    comp[static_cast<size_t>(s)] = ncomp;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      const int i = stack.back();
      stack.pop_back();
      for (int j = 0; j < n; ++j)
        if (j != i && c[static_cast<size_t>(i)][static_cast<size_t>(j)] != 0 &&
            comp[static_cast<size_t>(j)] < 0) {
          comp[static_cast<size_t>(j)] = ncomp;
          stack.push_back(j);
        }
    }
    ++ncomp;
  }
  return comp;
}

// Reflection closure in simple-root coordinates.  s_j subtracts
// (sum_i x_i C[i][j]) from coordinate j; everything stays integral.
std::set<std::vector<long long>> root_closure(const CartanMat& c) {
  const size_t n = c.size();
  std::set<std::vector<long long>> roots;
  std::vector<std::vector<long long>> work;
  for (size_t i = 0; i < n; ++i) {
    std::vector<long long> e(n, 0);
    e[i] = 1;
    roots.insert(e);
    work.push_back(std::move(e));
  }
  while (!work.empty()) {
    const auto x = work.back();
    work.pop_back();
    for (size_t j = 0; j < n; ++j) {
      long long pairing = 0;
      for (size_t i = 0; i < n; ++i) pairing += x[i] * c[i][j];
      auto y = x;
      y[j] -= pairing;
      if (roots.insert(y).second) work.push_back(std::move(y));
    }
  }
  return roots;
}

long long coord_height(const std::vector<long long>& x) {
  return std::accumulate(x.begin(), x.end(), 0LL);
}

// Exponents of one component are the conjugate partition of its positive
// height distribution; the group order is the product of (exponent + 1).
Int order_from_heights(const std::vector<std::vector<long long>>& pos_coords,
                       const std::vector<int>& comp, int ncomp) {
  Int order(1);
  for (int k = 0; k < ncomp; ++k) {
    std::map<long long, int> count_by_height;
    for (const auto& x : pos_coords) {
      int owner = -1;
      for (size_t i = 0; i < x.size(); ++i)
        if (x[i] != 0) { owner = comp[i]; break; }
      if (owner == k) ++count_by_height[coord_height(x)];
    }
    // Conjugate partition: column m of the height histogram has size
    // #{heights h : count(h) >= m}; each column is one exponent.
    for (int m = 1;; ++m) {
      int col = 0;
      for (const auto& [h, cnt] : count_by_height)
        if (cnt >= m) ++col;
      if (col == 0) break;
      order *= Int(col + 1);
    }
  }
  return order;
}

} // namespace

RootSystemPtr build_root_system(const RootSystemSpec& spec) {
  auto rs = std::shared_ptr<RootSystem>(new RootSystem());

  CartanMat cartan;
  if (spec.realization == Realization::gl) {
    if (spec.gl_n < 2) throw ParseError("gl realization requires n >= 2");
    if (spec.cartan)
      throw ParseError("gl realization takes n, not an explicit cartan matrix");
    if (spec.family) {
      if (*spec.family != "A" || spec.rank != spec.gl_n - 1)
        throw ParseError("gl realization with n = " + std::to_string(spec.gl_n) +
                         " requires family A of rank " + std::to_string(spec.gl_n - 1));
    }
    cartan = family_cartan("A", spec.gl_n - 1);
  } else if (spec.cartan) {
    if (spec.family) throw ParseError("give either a family or a cartan matrix, not both");
    cartan = *spec.cartan;
  } else if (spec.family) {
    cartan = family_cartan(*spec.family, spec.rank);
  } else {
    throw ParseError("root system spec needs a family, a cartan matrix, or a gl realization");
  }

  validate_cartan(cartan);
  const int rank = static_cast<int>(cartan.size());

  int ncomp = 0;
  const auto comp = components(cartan, ncomp);
  const auto d = symmetrize(cartan, comp, ncomp);

  // Symmetrized Gram matrix; positive definiteness is exactly finite type,
  // which also guarantees the reflection closure below terminates.
  QMatrix gram(rank, rank);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j)
      gram.at(i, j) = Rat(cartan[static_cast<size_t>(i)][static_cast<size_t>(j)]) * d[static_cast<size_t>(j)];
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j)
      if (gram.at(i, j) != gram.at(j, i))
        throw InternalError("symmetrized cartan matrix is not symmetric");
  for (int k = 1; k <= rank; ++k)
    if (gram.leading_minor(k) <= 0)
      throw ParseError("cartan matrix is not of finite type (leading principal minor " +
                       std::to_string(k) + " is not positive)");

  const auto closure = root_closure(cartan);

  std::vector<std::vector<long long>> positives;
  for (const auto& x : closure) {
    const bool nonneg = std::all_of(x.begin(), x.end(), [](long long v) { return v >= 0; });
    const bool nonpos = std::all_of(x.begin(), x.end(), [](long long v) { return v <= 0; });
    if (!nonneg && !nonpos)
      throw InternalError("root closure produced a mixed-sign vector");
    if (nonneg) positives.push_back(x);
  }
  std::sort(positives.begin(), positives.end(),
            [](const std::vector<long long>& a, const std::vector<long long>& b) {
              const long long ha = coord_height(a), hb = coord_height(b);
              if (ha != hb) return ha < hb;
              return a < b;
            });
  const int npos = static_cast<int>(positives.size());

  rs->realization_ = spec.realization;
  rs->gl_n_ = spec.gl_n;
  rs->rank_ = rank;
  rs->cartan_ = cartan;
  rs->d_ = d;
  rs->npos_ = npos;

  if (spec.realization == Realization::gl) {
    const int n = spec.gl_n;
    rs->ambient_ = n;
    rs->form_ = QMatrix::identity(n);
  } else {
    rs->ambient_ = rank;
    rs->form_ = gram;
  }

  auto realize = [&](const std::vector<long long>& x) {
    Weight w = zero_weight(rs->ambient_);
    if (spec.realization == Realization::gl) {
      for (int i = 0; i < rank; ++i) {
        w[static_cast<size_t>(i)] += Rat(x[static_cast<size_t>(i)]);
        w[static_cast<size_t>(i + 1)] -= Rat(x[static_cast<size_t>(i)]);
      }
    } else {
      for (int i = 0; i < rank; ++i) w[static_cast<size_t>(i)] = Rat(x[static_cast<size_t>(i)]);
    }
    return w;
  };

  rs->roots_.reserve(static_cast<size_t>(2 * npos));
  rs->coords_.reserve(static_cast<size_t>(2 * npos));
  for (const auto& x : positives) {
    rs->roots_.push_back(realize(x));
    rs->coords_.push_back(x);
  }
  for (const auto& x : positives) {
    std::vector<long long> nx(x);
    for (auto& v : nx) v = -v;
    rs->roots_.push_back(realize(nx));
    rs->coords_.push_back(std::move(nx));
  }
  for (int idx = 0; idx < rs->root_count(); ++idx)
    rs->coord_index_[rs->coords_[static_cast<size_t>(idx)]] = idx;

  rs->simple_index_.assign(static_cast<size_t>(rank), -1);
  for (int i = 0; i < rank; ++i) {
    std::vector<long long> e(static_cast<size_t>(rank), 0);
    e[static_cast<size_t>(i)] = 1;
    rs->simple_index_[static_cast<size_t>(i)] = rs->coord_index_.at(e);
  }

  rs->rho2_ = zero_weight(rs->ambient_);
  for (int idx = 0; idx < npos; ++idx) rs->rho2_ = wadd(rs->rho2_, rs->root(idx));

  rs->srefl_.assign(static_cast<size_t>(rank), std::vector<int32_t>(static_cast<size_t>(2 * npos), 0));
  for (int j = 0; j < rank; ++j) {
    for (int idx = 0; idx < rs->root_count(); ++idx) {
      const auto& x = rs->coords_[static_cast<size_t>(idx)];
      long long pairing = 0;
      for (int i = 0; i < rank; ++i)
        pairing += x[static_cast<size_t>(i)] * cartan[static_cast<size_t>(i)][static_cast<size_t>(j)];
      auto y = x;
      y[static_cast<size_t>(j)] -= pairing;
      rs->srefl_[static_cast<size_t>(j)][static_cast<size_t>(idx)] =
          static_cast<int32_t>(rs->coord_index_.at(y));
    }
  }

  // Ambient basis [simple roots | form-orthogonal complement]; reflections
  // fix the complement pointwise, so Weyl elements act through it.
  QMatrix basis(rs->ambient_, rs->ambient_);
  for (int i = 0; i < rank; ++i) {
    const Weight& a = rs->simple_root(i);
    for (int r = 0; r < rs->ambient_; ++r) basis.at(r, i) = a[static_cast<size_t>(r)];
  }
  if (rs->perp_dim() > 0) {
    QMatrix pairings(rank, rs->ambient_);
    for (int i = 0; i < rank; ++i) {
      const Weight ga = rs->form_.apply(rs->simple_root(i));
      for (int cidx = 0; cidx < rs->ambient_; ++cidx) pairings.at(i, cidx) = ga[static_cast<size_t>(cidx)];
    }
    const auto perp = pairings.kernel_basis();
    if (static_cast<int>(perp.size()) != rs->perp_dim())
      throw InternalError("orthogonal complement has unexpected dimension");
    for (int k = 0; k < rs->perp_dim(); ++k)
      for (int r = 0; r < rs->ambient_; ++r)
        basis.at(r, rank + k) = perp[static_cast<size_t>(k)][static_cast<size_t>(r)];
  }
  auto inv = basis.inverse();
  if (!inv) throw InternalError("ambient basis is singular");
  rs->basis_ = std::move(basis);
  rs->basis_inv_ = std::move(*inv);

  rs->weyl_order_ = order_from_heights(positives, comp, ncomp);
  return rs;
}

Rat RootSystem::inner(const Weight& x, const Weight& y) const {
  if (static_cast<int>(x.size()) != ambient_ || static_cast<int>(y.size()) != ambient_)
    throw PreconditionError("inner product arguments must have the ambient dimension");
  return dot(x, form_.apply(y));
}

int RootSystem::height(int idx) const {
  return static_cast<int>(coord_height(coords_[static_cast<size_t>(idx)]));
}

std::optional<Weight> RootSystem::span_coordinates(const Weight& x) const {
  if (static_cast<int>(x.size()) != ambient_)
    throw PreconditionError("span_coordinates argument must have the ambient dimension");
  const Weight c = basis_inv_.apply(x);
  for (int k = rank_; k < ambient_; ++k)
    if (c[static_cast<size_t>(k)] != 0) return std::nullopt;
  return Weight(c.begin(), c.begin() + rank_);
}

std::optional<int> RootSystem::find_root(const Weight& x) const {
  const auto c = span_coordinates(x);
  if (!c) return std::nullopt;
  std::vector<long long> key(static_cast<size_t>(rank_));
  for (int i = 0; i < rank_; ++i) {
    const Rat& v = (*c)[static_cast<size_t>(i)];
    if (!is_integer(v)) return std::nullopt;
    const Int n = rat_num(v);
    if (n < std::numeric_limits<long long>::min() || n > std::numeric_limits<long long>::max())
      return std::nullopt;
    key[static_cast<size_t>(i)] = static_cast<long long>(n);
  }
  const auto it = coord_index_.find(key);
  if (it == coord_index_.end()) return std::nullopt;
  return it->second;
}

Rat inner_product(const RootSystem& rs, const Weight& x, const Weight& y) {
  return rs.inner(x, y);
}

ParabolicDatum standard_parabolic(const RootSystem& rs, const std::vector<int>& F) {
  ParabolicDatum out;
  std::vector<bool> in_F(static_cast<size_t>(rs.rank()), false);
  for (int i : F) {
    if (i < 0 || i >= rs.rank())
      throw ParseError("parabolic subset index out of range: " + std::to_string(i + 1));
    if (in_F[static_cast<size_t>(i)])
      throw ParseError("parabolic subset repeats index " + std::to_string(i + 1));
    in_F[static_cast<size_t>(i)] = true;
  }
  for (int i = 0; i < rs.rank(); ++i)
    if (in_F[static_cast<size_t>(i)]) out.F.push_back(i);

  // Simple-root coordinates are unique, so a root lies in Span(F) exactly
  // when its coordinates vanish off F.
  for (int idx = 0; idx < rs.root_count(); ++idx) {
    const auto& x = rs.coords(idx);
    bool inside = true;
    for (int i = 0; i < rs.rank(); ++i)
      if (!in_F[static_cast<size_t>(i)] && x[static_cast<size_t>(i)] != 0) { inside = false; break; }
    if (inside) out.sigma_F.push_back(idx);
    if (idx < rs.positive_count()) {
      if (inside) out.n_MF.push_back(idx);
      else out.n_F.push_back(idx);
    }
  }

  if (out.sigma_F.empty()) {
    out.a_MF_dim = 0;
  } else {
    QMatrix rows(static_cast<int>(out.sigma_F.size()), rs.rank());
    for (size_t r = 0; r < out.sigma_F.size(); ++r) {
      const auto& x = rs.coords(out.sigma_F[r]);
      for (int i = 0; i < rs.rank(); ++i) rows.at(static_cast<int>(r), i) = Rat(x[static_cast<size_t>(i)]);
    }
    out.a_MF_dim = rows.rank();
  }
  out.a_F_dim = rs.rank() - out.a_MF_dim;
  return out;
}

std::vector<ParabolicDatum> all_parabolics(const RootSystem& rs) {
  if (rs.rank() > 16) throw BudgetError("parabolic enumeration over rank > 16 refused");
  std::vector<ParabolicDatum> out;
  const unsigned total = 1u << rs.rank();
  out.reserve(total);
  for (unsigned mask = 0; mask < total; ++mask) {
    std::vector<int> F;
    for (int i = 0; i < rs.rank(); ++i)
      if (mask & (1u << i)) F.push_back(i);
    out.push_back(standard_parabolic(rs, F));
  }
  return out;
}

} // namespace sympair
