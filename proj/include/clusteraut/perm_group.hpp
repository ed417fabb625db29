#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace clusteraut {

/// A permutation of {0, ..., n-1} in image form: p[i] is the image of i.
using Permutation = std::vector<std::size_t>;

Permutation identity_permutation(std::size_t n);
/// (f * g)(i) = f(g(i)).
Permutation compose(const Permutation& f, const Permutation& g);
Permutation invert(const Permutation& p);
bool is_permutation(const Permutation& p);

/// A finite permutation group given by its full element list.
///
/// Elements are kept sorted by image vector, so two groups with the same
/// element set compare equal element-by-element. The constructor checks the
/// group axioms instead of trusting the caller and throws std::logic_error
/// when they fail. An optional sign per element must form a homomorphism to
/// {+1, -1}; that is checked as well.
class PermutationGroup {
 public:
  explicit PermutationGroup(std::vector<Permutation> elements,
                            std::optional<std::vector<int>> signs = std::nullopt);

  std::size_t order() const { return elements_.size(); }
  std::size_t degree() const { return degree_; }
  const std::vector<Permutation>& elements() const { return elements_; }
  const Permutation& element(std::size_t a) const { return elements_.at(a); }
  std::size_t identity() const { return identity_; }

  /// Index of element(a) * element(b).
  std::size_t multiply(std::size_t a, std::size_t b) const { return table_[a][b]; }
  std::size_t inverse(std::size_t a) const { return inverse_[a]; }
  std::size_t element_order(std::size_t a) const;
  std::optional<std::size_t> index_of(const Permutation& p) const;
  bool contains(const Permutation& p) const { return index_of(p).has_value(); }

  bool is_abelian() const;
  bool has_signs() const { return signs_.has_value(); }
  int sign(std::size_t a) const { return signs_.value()[a]; }

  /// Kernel of the sign map (the whole group when no signs are attached).
  PermutationGroup sign_kernel() const;
  /// True when the listed elements form a subgroup closed under conjugation.
  bool is_normal_subgroup(const std::vector<std::size_t>& members) const;
  /// Greedy generating set: scan elements in order, keep each one not yet
  /// generated by those kept before it.
  std::vector<std::size_t> generating_set() const;

 private:
  std::size_t degree_ = 0;
  std::vector<Permutation> elements_;
  std::optional<std::vector<int>> signs_;
  std::map<Permutation, std::size_t> index_;
  std::vector<std::vector<std::size_t>> table_;
  std::vector<std::size_t> inverse_;
  std::size_t identity_ = 0;
};

/// Result of matching a group against the small families that show up in
/// cluster automorphism computations.
struct GroupIdentity {
  /// "trivial", "Z2", "K4", "S2^k" (elementary abelian of order 2^k, k >= 3),
  /// "Dn" (dihedral of order 2n, n >= 3), or empty when none matched.
  std::string name;
  std::size_t order = 0;
  bool abelian = false;
  /// element order -> number of elements of that order
  std::map<std::size_t, std::size_t> element_orders;

  /// The name when one matched, otherwise the invariant record.
  std::string describe() const;
};

GroupIdentity identify_group(const PermutationGroup& group);

}  // namespace clusteraut
