#ifndef CENTRA_PERM_SET_HPP
#define CENTRA_PERM_SET_HPP

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "centra/errors.hpp"
#include "centra/permutation.hpp"

namespace centra {

// A finite set of permutations of one common degree, kept sorted
// lexicographically by image array. Membership is by image-array equality.
class PermSet {
 public:
  PermSet() = default;

  PermSet(std::initializer_list<Permutation> perms) {
    for (const Permutation& p : perms) insert(p);
  }

  // Returns true when the permutation was not already present.
  bool insert(const Permutation& p) {
    if (!members_.empty() && p.degree() != degree())
      throw OrderMismatch("set holds degree-" + std::to_string(degree()) +
                          " permutations, got degree " +
                          std::to_string(p.degree()));
    auto it = std::lower_bound(members_.begin(), members_.end(), p);
    if (it != members_.end() && *it == p) return false;
    members_.insert(it, p);
    return true;
  }

  bool contains(const Permutation& p) const {
    auto it = std::lower_bound(members_.begin(), members_.end(), p);
    return it != members_.end() && *it == p;
  }

  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  int degree() const { return members_.at(0).degree(); }

  const Permutation& operator[](std::size_t i) const { return members_[i]; }

  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }

  friend bool operator==(const PermSet&, const PermSet&) = default;

 private:
  std::vector<Permutation> members_;
};

// Closure under composition and inverse, with the identity present.
inline bool is_permutation_group(const PermSet& set) {
  if (set.empty()) return false;
  if (!set.contains(Permutation::identity(set.degree()))) return false;
  for (const Permutation& p : set)
    if (!set.contains(p.inverse())) return false;
  for (const Permutation& a : set)
    for (const Permutation& b : set)
      if (!set.contains(compose(a, b))) return false;
  return true;
}

}  // namespace centra

#endif  // CENTRA_PERM_SET_HPP
