#pragma once

#include <optional>
#include <unordered_map>
#include <vector>

#include "sympair/rootsys.hpp"

namespace sympair {

// Default ceiling on Weyl group enumerations.
inline constexpr long long kDefaultBudget = 51840;

// A Weyl group element, stored as the permutation it induces on the indexed
// root list.  The ambient matrix is recovered on demand: the element acts on
// the root span through the images of the simple roots and fixes the
// form-orthogonal complement pointwise.  Immutable; safe to share.
class WeylElement {
public:
  static WeylElement identity(RootSystemPtr rs);
  static WeylElement simple_reflection(RootSystemPtr rs, int i);
  // Interprets the matrix as a Weyl element via its action on roots; nullopt
  // when some root image is not a root.  Membership in the group itself is
  // the caller's responsibility (use WeylGroup::find to certify).
  static std::optional<WeylElement> from_matrix(RootSystemPtr rs, const QMatrix& m);
  // Product of simple reflections, left to right.
  static WeylElement from_word(RootSystemPtr rs, const std::vector<int>& word);

  int length() const { return length_; }
  const std::vector<int32_t>& perm() const { return perm_; }
  bool has_word() const { return word_.has_value(); }
  // Reduced word over simple reflection indices (0-based).  Elements coming
  // out of WeylGroup::enumerate carry the lexicographically minimal one.
  const std::vector<int>& word() const;

  int act_root(int idx) const { return perm_[static_cast<size_t>(idx)]; }
  Weight act(const Weight& x) const;
  QMatrix matrix() const;

  WeylElement mul(const WeylElement& other) const; // this followed after other: (this*other)(x) = this(other(x))
  WeylElement inverse() const;
  bool operator==(const WeylElement& other) const { return perm_ == other.perm_; }
  bool is_identity() const;

  const RootSystem& rs() const { return *rs_; }
  const RootSystemPtr& rs_ptr() const { return rs_; }

private:
  friend class WeylGroup;
  WeylElement(RootSystemPtr rs, std::vector<int32_t> perm, std::optional<std::vector<int>> word);
  static int count_inversions(const RootSystem& rs, const std::vector<int32_t>& perm);

  RootSystemPtr rs_;
  std::vector<int32_t> perm_;
  std::optional<std::vector<int>> word_;
  int length_ = 0;
};

// Exhaustive enumeration in canonical order: by length, then by the
// lexicographic order of the canonical reduced words.  Element 0 is the
// identity.
class WeylGroup {
public:
  static WeylGroup enumerate(RootSystemPtr rs, const Int& budget = Int(kDefaultBudget));

  const std::vector<WeylElement>& elements() const { return elements_; }
  int size() const { return static_cast<int>(elements_.size()); }
  const WeylElement& at(int i) const { return elements_[static_cast<size_t>(i)]; }
  std::optional<int> find(const WeylElement& w) const;
  std::optional<int> find_perm(const std::vector<int32_t>& perm) const;
  const WeylElement& longest() const { return elements_[static_cast<size_t>(longest_)]; }
  std::vector<int> length_histogram() const;
  const RootSystemPtr& rs_ptr() const { return rs_; }

private:
  WeylGroup() = default;

  struct PermHash {
    size_t operator()(const std::vector<int32_t>& p) const {
      size_t h = 1469598103934665603ull;
      for (int32_t v : p) {
        h ^= static_cast<size_t>(v) + 0x9e3779b97f4a7c15ull;
        h *= 1099511628211ull;
      }
      return h;
    }
  };

  RootSystemPtr rs_;
  std::vector<WeylElement> elements_;
  std::unordered_map<std::vector<int32_t>, int, PermHash> index_;
  int longest_ = 0;
};

// Longest element by the greedy ascent (right-multiply by the smallest
// simple reflection that still increases length); no enumeration or budget.
WeylElement longest_element(RootSystemPtr rs);

} // namespace sympair
