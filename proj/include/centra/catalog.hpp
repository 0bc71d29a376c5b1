#ifndef CENTRA_CATALOG_HPP
#define CENTRA_CATALOG_HPP

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "centra/cayley_table.hpp"
#include "centra/errors.hpp"
#include "centra/rng.hpp"

namespace centra {

inline CayleyTable cyclic(int n) {
  if (n < 1 || n > kMaxDegree)
    throw OrderCapExceeded("cyclic order " + std::to_string(n) + " outside [1, " +
                           std::to_string(kMaxDegree) + "]");
  std::vector<int> cells(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      cells[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
            static_cast<std::size_t>(j)] = (i + j) % n;
  return CayleyTable(n, std::move(cells));
}

// Componentwise product; element (i, j) of A x B is encoded as i*|B| + j.
inline CayleyTable direct_product(const CayleyTable& a, const CayleyTable& b) {
  int na = a.order(), nb = b.order();
  if (na * nb > kMaxDegree)
    throw OrderCapExceeded("product order " + std::to_string(na * nb) + " exceeds " +
                           std::to_string(kMaxDegree));
  int n = na * nb;
  std::vector<int> cells(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int i1 = 0; i1 < na; ++i1)
    for (int j1 = 0; j1 < nb; ++j1)
      for (int i2 = 0; i2 < na; ++i2)
        for (int j2 = 0; j2 < nb; ++j2) {
          int x = i1 * nb + j1, y = i2 * nb + j2;
          cells[static_cast<std::size_t>(x) * static_cast<std::size_t>(n) +
                static_cast<std::size_t>(y)] = a.mul(i1, i2) * nb + b.mul(j1, j2);
        }
  return CayleyTable(n, std::move(cells));
}

// Dihedral group of order 2m: elements r^i s^j with index i + m*j, using
// s r^k = r^{-k} s.
inline CayleyTable dihedral(int m) {
  if (m < 1 || 2 * m > kMaxDegree)
    throw OrderCapExceeded("dihedral parameter " + std::to_string(m) + " out of range");
  int n = 2 * m;
  std::vector<int> cells(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int i1 = 0; i1 < m; ++i1)
    for (int j1 = 0; j1 < 2; ++j1)
      for (int i2 = 0; i2 < m; ++i2)
        for (int j2 = 0; j2 < 2; ++j2) {
          int x = i1 + m * j1, y = i2 + m * j2;
          int i3 = j1 ? (i1 + m - i2) % m : (i1 + i2) % m;
          int j3 = (j1 + j2) % 2;
          cells[static_cast<std::size_t>(x) * static_cast<std::size_t>(n) +
                static_cast<std::size_t>(y)] = i3 + m * j3;
        }
  return CayleyTable(n, std::move(cells));
}

namespace detail {

// Q8 element encoding: basis b in {1, i, j, k} = {0..3}, sign s in {+, -} =
// {0, 1}, index 2b + s. So 0..7 reads 1, -1, i, -i, j, -j, k, -k.
inline int q8_mul(int x, int y) {
  static constexpr int kBasis[4][4] = {
      {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr int kSign[4][4] = {
      {0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  int b1 = x / 2, s1 = x % 2, b2 = y / 2, s2 = y % 2;
  return 2 * kBasis[b1][b2] + (s1 + s2 + kSign[b1][b2]) % 2;
}

inline int q8_negate(int x) { return 2 * (x / 2) + 1 - x % 2; }

// 1 and -1 are fixed; the six imaginary units negate.
inline int q8_conjugate(int x) { return x / 2 == 0 ? x : q8_negate(x); }

}  // namespace detail

// The quaternion group Q8 in the encoding 1, -1, i, -i, j, -j, k, -k.
inline CayleyTable quaternion() {
  std::vector<int> cells(64);
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y)
      cells[static_cast<std::size_t>(x) * 8 + static_cast<std::size_t>(y)] =
          detail::q8_mul(x, y);
  return CayleyTable(8, std::move(cells));
}

// The 16-element Cayley loop (unit octonions), built by doubling Q8: element
// (q, h) has index 2q + h, where h = 0 is the quaternion half and h = 1 the
// doubled half. Products follow (a,b)(c,d) = (ac - d*b, da + bc*) restricted
// to the unit set, with * the quaternion conjugate.
inline CayleyTable cayley_loop() {
  std::vector<int> cells(256);
  auto mul = [](int u, int v) {
    int qa = u / 2, ha = u % 2, qb = v / 2, hb = v % 2;
    if (ha == 0 && hb == 0) return 2 * detail::q8_mul(qa, qb);
    if (ha == 0 && hb == 1) return 2 * detail::q8_mul(qb, qa) + 1;
    if (ha == 1 && hb == 0)
      return 2 * detail::q8_mul(qa, detail::q8_conjugate(qb)) + 1;
    return 2 * detail::q8_negate(detail::q8_mul(detail::q8_conjugate(qb), qa));
  };
  for (int u = 0; u < 16; ++u)
    for (int v = 0; v < 16; ++v)
      cells[static_cast<std::size_t>(u) * 16 + static_cast<std::size_t>(v)] = mul(u, v);
  return CayleyTable(16, std::move(cells));
}

// The order-12 non-associative C-loop golden table.
inline CayleyTable c_loop_12() {
  static constexpr int kRows[12][12] = {
      {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11},
      {1, 2, 0, 4, 5, 3, 7, 8, 6, 10, 11, 9},
      {2, 0, 1, 5, 3, 4, 8, 6, 7, 11, 9, 10},
      {3, 4, 5, 0, 1, 2, 9, 10, 11, 6, 7, 8},
      {4, 5, 3, 1, 2, 0, 10, 11, 9, 7, 8, 6},
      {5, 3, 4, 2, 0, 1, 11, 9, 10, 8, 6, 7},
      {6, 7, 8, 10, 11, 9, 0, 1, 2, 5, 3, 4},
      {7, 8, 6, 11, 9, 10, 1, 2, 0, 3, 4, 5},
      {8, 6, 7, 9, 10, 11, 2, 0, 1, 4, 5, 3},
      {9, 10, 11, 8, 6, 7, 3, 4, 5, 2, 0, 1},
      {10, 11, 9, 6, 7, 8, 4, 5, 3, 0, 1, 2},
      {11, 9, 10, 7, 8, 6, 5, 3, 4, 1, 2, 0}};
  std::vector<int> cells;
  cells.reserve(144);
  for (const auto& row : kRows) cells.insert(cells.end(), row, row + 12);
  return CayleyTable(12, std::move(cells));
}

namespace detail {

// Backtracking Latin-square completion over the free cells (row-major, both
// indices >= 1) of a normalized table: row 0 and column 0 carry the identity
// pattern, so every result is a loop with identity 0. `randomize` shuffles
// the candidate order per cell; otherwise candidates are tried ascending and
// completions enumerate in lexicographic order.
class LoopFiller {
 public:
  LoopFiller(int n, std::mt19937_64* rng) : n_(n), rng_(rng), grid_(n * n, -1) {
    for (int i = 0; i < n; ++i) {
      grid_[static_cast<std::size_t>(i)] = i;
      grid_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n)] = i;
    }
  }

  // Visits every completion (or the first, if `first_only`) in deterministic
  // order. Returns false from the visitor to stop early.
  template <typename Visitor>
  bool run(Visitor&& visit, bool first_only) {
    return fill(1, 1, visit, first_only);
  }

 private:
  int at(int r, int c) const {
    return grid_[static_cast<std::size_t>(r) * static_cast<std::size_t>(n_) +
                 static_cast<std::size_t>(c)];
  }
  void set(int r, int c, int v) {
    grid_[static_cast<std::size_t>(r) * static_cast<std::size_t>(n_) +
          static_cast<std::size_t>(c)] = v;
  }

  template <typename Visitor>
  bool fill(int r, int c, Visitor&& visit, bool first_only) {
    if (r == n_) {
      std::vector<int> cells(grid_.begin(), grid_.end());
      bool keep_going = visit(CayleyTable(n_, std::move(cells)));
      return first_only ? false : keep_going;
    }
    int next_r = c + 1 == n_ ? r + 1 : r;
    int next_c = c + 1 == n_ ? 1 : c + 1;
    std::vector<int> candidates;
    for (int v = 0; v < n_; ++v) {
      bool used = false;
      for (int j = 0; j < n_ && !used; ++j) used = at(r, j) == v;
      for (int i = 0; i < n_ && !used; ++i) used = at(i, c) == v;
      if (!used) candidates.push_back(v);
    }
    if (rng_) shuffle_values(candidates, *rng_);
    for (int v : candidates) {
      set(r, c, v);
      bool keep_going = fill(next_r, next_c, visit, first_only);
      set(r, c, -1);
      if (!keep_going) return false;
    }
    return true;
  }

  int n_;
  std::mt19937_64* rng_;
  std::vector<int> grid_;
};

}  // namespace detail

// `count` seeded loops of the given order, each normalized (identity 0).
// Draws are independent backtracking completions, so repeats can occur.
inline std::vector<CayleyTable> random_loops(int order, int count, std::uint64_t seed) {
  if (order < 1 || order > 9)
    throw OrderCapExceeded("random_loops supports orders 1..9, got " +
                           std::to_string(order));
  std::mt19937_64 rng(seed);
  std::vector<CayleyTable> result;
  result.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    detail::LoopFiller filler(order, &rng);
    filler.run(
        [&](CayleyTable t) {
          result.push_back(std::move(t));
          return false;
        },
        /*first_only=*/true);
  }
  return result;
}

// Every normalized loop of the given order, in lexicographic order of the
// row-major cell fill. Counts grow fast: 1, 1, 1, 4, 56, 9408 for n = 1..6.
inline std::vector<CayleyTable> enumerate_loops(int order) {
  if (order < 1 || order > 6)
    throw OrderCapExceeded("enumerate_loops supports orders 1..6, got " +
                           std::to_string(order));
  std::vector<CayleyTable> result;
  detail::LoopFiller filler(order, nullptr);
  filler.run(
      [&](CayleyTable t) {
        result.push_back(std::move(t));
        return true;
      },
      /*first_only=*/false);
  return result;
}

}  // namespace centra

#endif  // CENTRA_CATALOG_HPP
