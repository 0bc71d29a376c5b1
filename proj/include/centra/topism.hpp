#ifndef CENTRA_TOPISM_HPP
#define CENTRA_TOPISM_HPP

#include <compare>
#include <string>
#include <utility>

#include "centra/errors.hpp"
#include "centra/permutation.hpp"

namespace centra {

// An ordered triple (U, V, W) of permutations of one common degree. The same
// type carries autotopisms (one table) and isotopisms (table to table).
struct TopismTriple {
  Permutation u;
  Permutation v;
  Permutation w;

  TopismTriple(Permutation u_, Permutation v_, Permutation w_)
      : u(std::move(u_)), v(std::move(v_)), w(std::move(w_)) {
    if (u.degree() != v.degree() || u.degree() != w.degree())
      throw OrderMismatch("triple components have degrees " +
                          std::to_string(u.degree()) + ", " +
                          std::to_string(v.degree()) + ", " +
                          std::to_string(w.degree()));
  }

  static TopismTriple identity(int degree) {
    Permutation id = Permutation::identity(degree);
    return TopismTriple(id, id, id);
  }

  int degree() const noexcept { return u.degree(); }

  bool is_identity() const {
    return u.is_identity() && v.is_identity() && w.is_identity();
  }

  TopismTriple inverse() const {
    return TopismTriple(u.inverse(), v.inverse(), w.inverse());
  }

  friend TopismTriple compose(const TopismTriple& a, const TopismTriple& b) {
    return TopismTriple(compose(a.u, b.u), compose(a.v, b.v), compose(a.w, b.w));
  }

  friend bool operator==(const TopismTriple&, const TopismTriple&) = default;
  friend std::strong_ordering operator<=>(const TopismTriple& a,
                                          const TopismTriple& b) {
    if (auto c = a.u <=> b.u; c != 0) return c;
    if (auto c = a.v <=> b.v; c != 0) return c;
    return a.w <=> b.w;
  }
};

}  // namespace centra

#endif  // CENTRA_TOPISM_HPP
