#ifndef CENTRA_TESTS_FIXTURES_HPP
#define CENTRA_TESTS_FIXTURES_HPP

#include "centra/cayley_table.hpp"

namespace centra::tests {

// First loop of order 5 in the lexicographic enumeration of normalized
// tables that fails the LC identity (witness (1,2,0)). It also fails RC, C,
// both alternative laws, LIP and RIP, its middle nucleus is {0}, and 2*2 = 4
// lies outside its center, so it doubles as the counterexample fixture for
// all of those.
inline CayleyTable l5_non_lc() {
  return CayleyTable::from_rows({{0, 1, 2, 3, 4},
                                 {1, 0, 3, 4, 2},
                                 {2, 3, 4, 0, 1},
                                 {3, 4, 1, 2, 0},
                                 {4, 2, 0, 1, 3}});
}

// An order-6 loop satisfying both LC forms whose left representation is
// closed under a b^2 and a^2 b, yet the C identity fails (first witness
// (1,2,0)). One of exactly six such loops at order 6; the smallest witnesses
// that the closure route and the C identity can part ways.
inline CayleyTable lc_non_c6() {
  return CayleyTable::from_rows({{0, 1, 2, 3, 4, 5},
                                 {1, 0, 3, 2, 5, 4},
                                 {2, 4, 0, 5, 1, 3},
                                 {3, 5, 4, 0, 2, 1},
                                 {4, 3, 5, 1, 0, 2},
                                 {5, 2, 1, 4, 3, 0}});
}

// First commutative non-C loop of order 6 in the lexicographic enumeration.
inline CayleyTable comm_non_c6() {
  return CayleyTable::from_rows({{0, 1, 2, 3, 4, 5},
                                 {1, 0, 3, 2, 5, 4},
                                 {2, 3, 4, 5, 0, 1},
                                 {3, 2, 5, 4, 1, 0},
                                 {4, 5, 0, 1, 3, 2},
                                 {5, 4, 1, 0, 2, 3}});
}

// C3 with labels 0 and 1 swapped, so the identity sits at index 1.
inline CayleyTable relabeled_c3() {
  return CayleyTable::from_rows({{2, 0, 1}, {0, 1, 2}, {1, 2, 0}});
}

// An order-2 quasigroup whose identity sits at 1, not 0.
inline CayleyTable swapped_c2() {
  return CayleyTable::from_rows({{1, 0}, {0, 1}});
}

}  // namespace centra::tests

#endif  // CENTRA_TESTS_FIXTURES_HPP
