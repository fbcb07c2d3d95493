#include "sympair/weyl.hpp"

#include <algorithm>

namespace sympair {

WeylElement::WeylElement(RootSystemPtr rs, std::vector<int32_t> perm,
                         std::optional<std::vector<int>> word)
    : rs_(std::move(rs)), perm_(std::move(perm)), word_(std::move(word)) {
  length_ = count_inversions(*rs_, perm_);
}

int WeylElement::count_inversions(const RootSystem& rs, const std::vector<int32_t>& perm) {
  int count = 0;
  for (int i = 0; i < rs.positive_count(); ++i)
    if (!rs.is_positive(perm[static_cast<size_t>(i)])) ++count;
  return count;
}

WeylElement WeylElement::identity(RootSystemPtr rs) {
  std::vector<int32_t> perm(static_cast<size_t>(rs->root_count()));
  for (size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int32_t>(i);
  return WeylElement(std::move(rs), std::move(perm), std::vector<int>{});
}

WeylElement WeylElement::simple_reflection(RootSystemPtr rs, int i) {
  if (i < 0 || i >= rs->rank())
    throw PreconditionError("simple reflection index out of range: " + std::to_string(i + 1));
  std::vector<int32_t> perm(static_cast<size_t>(rs->root_count()));
  for (int idx = 0; idx < rs->root_count(); ++idx)
    perm[static_cast<size_t>(idx)] = static_cast<int32_t>(rs->reflect(idx, i));
  return WeylElement(std::move(rs), std::move(perm), std::vector<int>{i});
}

std::optional<WeylElement> WeylElement::from_matrix(RootSystemPtr rs, const QMatrix& m) {
  if (m.rows() != rs->ambient_dim() || m.cols() != rs->ambient_dim()) return std::nullopt;
  std::vector<int32_t> perm(static_cast<size_t>(rs->root_count()));
  std::vector<bool> hit(perm.size(), false);
  for (int idx = 0; idx < rs->root_count(); ++idx) {
    const auto img = rs->find_root(m.apply(rs->root(idx)));
    if (!img || hit[static_cast<size_t>(*img)]) return std::nullopt;
    hit[static_cast<size_t>(*img)] = true;
    perm[static_cast<size_t>(idx)] = static_cast<int32_t>(*img);
  }
  return WeylElement(std::move(rs), std::move(perm), std::nullopt);
}

WeylElement WeylElement::from_word(RootSystemPtr rs, const std::vector<int>& word) {
  WeylElement w = identity(rs);
  for (int i : word) w = w.mul(simple_reflection(rs, i));
  if (static_cast<size_t>(w.length()) == word.size()) w.word_ = word;
  return w;
}

const std::vector<int>& WeylElement::word() const {
  if (!word_) throw InternalError("element carries no reduced word; canonicalize via WeylGroup::find");
  return *word_;
}

Weight WeylElement::act(const Weight& x) const {
  const RootSystem& rs = *rs_;
  if (static_cast<int>(x.size()) != rs.ambient_dim())
    throw PreconditionError("weyl action argument must have the ambient dimension");
  const Weight c = rs.span_basis_inverse().apply(x);
  Weight out = zero_weight(rs.ambient_dim());
  for (int i = 0; i < rs.rank(); ++i) {
    const Rat& ci = c[static_cast<size_t>(i)];
    if (ci == 0) continue;
    const Weight& img = rs.root(act_root(rs.simple_root_index(i)));
    for (int r = 0; r < rs.ambient_dim(); ++r) out[static_cast<size_t>(r)] += ci * img[static_cast<size_t>(r)];
  }
  for (int k = rs.rank(); k < rs.ambient_dim(); ++k) {
    const Rat& ck = c[static_cast<size_t>(k)];
    if (ck == 0) continue;
    for (int r = 0; r < rs.ambient_dim(); ++r)
      out[static_cast<size_t>(r)] += ck * rs.span_basis().at(r, k);
  }
  return out;
}

QMatrix WeylElement::matrix() const {
  const RootSystem& rs = *rs_;
  QMatrix columns(rs.ambient_dim(), rs.ambient_dim());
  for (int i = 0; i < rs.rank(); ++i) {
    const Weight& img = rs.root(act_root(rs.simple_root_index(i)));
    for (int r = 0; r < rs.ambient_dim(); ++r) columns.at(r, i) = img[static_cast<size_t>(r)];
  }
  for (int k = rs.rank(); k < rs.ambient_dim(); ++k)
    for (int r = 0; r < rs.ambient_dim(); ++r) columns.at(r, k) = rs.span_basis().at(r, k);
  return columns.mul(rs.span_basis_inverse());
}

WeylElement WeylElement::mul(const WeylElement& other) const {
  std::vector<int32_t> perm(perm_.size());
  for (size_t i = 0; i < perm.size(); ++i)
    perm[i] = perm_[static_cast<size_t>(other.perm_[i])];
  return WeylElement(rs_, std::move(perm), std::nullopt);
}

WeylElement WeylElement::inverse() const {
  std::vector<int32_t> perm(perm_.size());
  for (size_t i = 0; i < perm.size(); ++i)
    perm[static_cast<size_t>(perm_[i])] = static_cast<int32_t>(i);
  std::optional<std::vector<int>> word;
  if (word_) word = std::vector<int>(word_->rbegin(), word_->rend());
  return WeylElement(rs_, std::move(perm), std::move(word));
}

bool WeylElement::is_identity() const {
  for (size_t i = 0; i < perm_.size(); ++i)
    if (perm_[i] != static_cast<int32_t>(i)) return false;
  return true;
}

// Breadth-first closure over right multiplication by simple reflections.
// Each length layer is visited in lexicographic word order and generators
// are tried in ascending order, so the first word reaching an element is
// its lexicographically minimal reduced word, and the element order is the
// canonical (length, word) order.
WeylGroup WeylGroup::enumerate(RootSystemPtr rs, const Int& budget) {
  if (rs->weyl_order() > budget)
    throw BudgetError("weyl enumeration refused: order " + rs->weyl_order().str() +
                      " exceeds budget " + budget.str());
  WeylGroup g;
  g.rs_ = rs;

  std::vector<WeylElement> gens;
  for (int i = 0; i < rs->rank(); ++i) gens.push_back(WeylElement::simple_reflection(rs, i));

  g.elements_.push_back(WeylElement::identity(rs));
  g.index_.emplace(g.elements_[0].perm(), 0);
  size_t layer_begin = 0;
  while (layer_begin < g.elements_.size()) {
    const size_t layer_end = g.elements_.size();
    for (size_t e = layer_begin; e < layer_end; ++e) {
      for (int i = 0; i < rs->rank(); ++i) {
        // Right multiplication increases length exactly when w sends the
        // i-th simple root to a positive root.
        const WeylElement& w = g.elements_[e];
        if (!rs->is_positive(w.act_root(rs->simple_root_index(i)))) continue;
        WeylElement next = w.mul(gens[static_cast<size_t>(i)]);
        if (g.index_.contains(next.perm())) continue;
        std::vector<int> word = w.word();
        word.push_back(i);
        next.word_ = std::move(word);
        g.index_.emplace(next.perm(), static_cast<int>(g.elements_.size()));
        g.elements_.push_back(std::move(next));
      }
    }
    layer_begin = layer_end;
  }

  if (Int(g.elements_.size()) != rs->weyl_order())
    throw InternalError("weyl enumeration disagrees with the order formula");
  g.longest_ = 0;
  for (int i = 0; i < g.size(); ++i)
    if (g.at(i).length() == rs->positive_count()) { g.longest_ = i; break; }
  return g;
}

std::optional<int> WeylGroup::find(const WeylElement& w) const { return find_perm(w.perm()); }

std::optional<int> WeylGroup::find_perm(const std::vector<int32_t>& perm) const {
  const auto it = index_.find(perm);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<int> WeylGroup::length_histogram() const {
  std::vector<int> hist(static_cast<size_t>(rs_->positive_count()) + 1, 0);
  for (const auto& w : elements_) ++hist[static_cast<size_t>(w.length())];
  return hist;
}

WeylElement longest_element(RootSystemPtr rs) {
  WeylElement w = WeylElement::identity(rs);
  std::vector<int> word;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 0; i < rs->rank(); ++i) {
      if (rs->is_positive(w.act_root(rs->simple_root_index(i)))) {
        w = w.mul(WeylElement::simple_reflection(rs, i));
        word.push_back(i);
        moved = true;
        break;
      }
    }
  }
  if (w.length() != rs->positive_count())
    throw InternalError("greedy longest element has wrong length");
  WeylElement out = WeylElement::from_word(rs, word);
  return out;
}

} // namespace sympair
