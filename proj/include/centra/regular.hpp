#ifndef CENTRA_REGULAR_HPP
#define CENTRA_REGULAR_HPP

#include <algorithm>
#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nlohmann/json.hpp"

#include "centra/cayley_table.hpp"
#include "centra/errors.hpp"
#include "centra/perm_set.hpp"
#include "centra/properties.hpp"
#include "centra/topism.hpp"

namespace centra {

// First (x, y) with xU.yV != (x.y)W, or nothing when (U, V, W) is an
// autotopism.
inline std::optional<std::pair<int, int>> autotopism_witness(
    const CayleyTable& t, const TopismTriple& tr) {
  t.require_loop();
  if (tr.degree() != t.order())
    throw OrderMismatch("triple degree " + std::to_string(tr.degree()) +
                        " does not match table order " + std::to_string(t.order()));
  int n = t.order();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (t.mul(tr.u[x], tr.v[y]) != tr.w[t.mul(x, y)])
        return std::make_pair(x, y);
  return std::nullopt;
}

inline bool is_autotopism(const CayleyTable& t, const TopismTriple& tr) {
  return !autotopism_witness(t, tr).has_value();
}

// All U with (U, I, U) an autotopism. Setting x = e in xU.y = (xy)U forces
// U = L_{eU}, so the only candidates are the n left translations.
inline PermSet lambda_regular_set(const CayleyTable& t) {
  t.require_loop();
  int n = t.order();
  Permutation id = Permutation::identity(n);
  PermSet result;
  for (int a = 0; a < n; ++a) {
    Permutation u = t.left_translation(a);
    if (is_autotopism(t, TopismTriple(u, id, u))) result.insert(u);
  }
  if (!is_permutation_group(result))
    throw InternalInconsistency("lambda-regular set is not a group on table " +
                                t.digest());
  return result;
}

// All V with (I, V, V) an autotopism; candidates are the right translations.
inline PermSet rho_regular_set(const CayleyTable& t) {
  t.require_loop();
  int n = t.order();
  Permutation id = Permutation::identity(n);
  PermSet result;
  for (int b = 0; b < n; ++b) {
    Permutation v = t.right_translation(b);
    if (is_autotopism(t, TopismTriple(id, v, v))) result.insert(v);
  }
  if (!is_permutation_group(result))
    throw InternalInconsistency("rho-regular set is not a group on table " +
                                t.digest());
  return result;
}

// A bijection U with xU.y = x.yV for all x, y, together with its adjoint V.
struct MuPair {
  Permutation u;
  Permutation adjoint;

  friend bool operator==(const MuPair&, const MuPair&) = default;
  friend std::strong_ordering operator<=>(const MuPair& a, const MuPair& b) {
    if (auto c = a.u <=> b.u; c != 0) return c;
    return a.adjoint <=> b.adjoint;
  }
};

// All mu-regular bijections with their adjoints. Borders pin the shape: y = e
// forces U = R_{eV} and x = e forces V = L_{eU}, which combine to pairs
// (R_b, L_b); such a pair works exactly when b.x.y associates in the middle,
// i.e. b runs over the middle nucleus.
inline std::vector<MuPair> mu_regular_set(const CayleyTable& t) {
  t.require_loop();
  int n = t.order();
  std::vector<MuPair> result;
  for (int b : nuclei(t).middle) {
    MuPair pair{t.right_translation(b), t.left_translation(b)};
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (t.mul(pair.u[x], y) != t.mul(x, pair.adjoint[y]))
          throw InternalInconsistency("middle-nucleus candidate is not mu-regular");
    result.push_back(std::move(pair));
  }
  std::sort(result.begin(), result.end());
  PermSet firsts;
  for (const MuPair& p : result) firsts.insert(p.u);
  if (!is_permutation_group(firsts))
    throw InternalInconsistency("mu-regular set is not a group on table " +
                                t.digest());
  return result;
}

// LC identity scan vs. (L_x^2, I, L_x^2) membership in Aut(L) for every x;
// returns whether the two routes agree.
inline bool check_theorem_lc_auto(const CayleyTable& t) {
  t.require_loop();
  int n = t.order();
  Permutation id = Permutation::identity(n);
  bool all_autotopisms = true;
  for (int x = 0; x < n && all_autotopisms; ++x) {
    Permutation lx = t.left_translation(x);
    Permutation lx2 = compose(lx, lx);
    all_autotopisms = is_autotopism(t, TopismTriple(lx2, id, lx2));
  }
  return is_lc(t).holds == all_autotopisms;
}

// RC identity scan vs. (I, R_x^2, R_x^2) membership in Aut(L).
inline bool check_theorem_rc_auto(const CayleyTable& t) {
  t.require_loop();
  int n = t.order();
  Permutation id = Permutation::identity(n);
  bool all_autotopisms = true;
  for (int x = 0; x < n && all_autotopisms; ++x) {
    Permutation rx = t.right_translation(x);
    Permutation rx2 = compose(rx, rx);
    all_autotopisms = is_autotopism(t, TopismTriple(id, rx2, rx2));
  }
  return is_rc(t).holds == all_autotopisms;
}

// C identity scan vs. (R_x^2, L_x^2) membership in the mu-regular set for
// every x.
inline bool check_theorem_c_mu(const CayleyTable& t) {
  t.require_loop();
  std::vector<MuPair> mu = mu_regular_set(t);
  int n = t.order();
  bool all_mu = true;
  for (int x = 0; x < n && all_mu; ++x) {
    Permutation rx = t.right_translation(x);
    Permutation lx = t.left_translation(x);
    MuPair wanted{compose(rx, rx), compose(lx, lx)};
    all_mu = std::binary_search(mu.begin(), mu.end(), wanted);
  }
  return is_c(t).holds == all_mu;
}

// The full autotopism group of a loop, sorted; construction re-verifies the
// group laws componentwise.
struct AutotopismGroup {
  std::string loop_digest;
  std::vector<TopismTriple> triples;

  AutotopismGroup(std::string digest, std::vector<TopismTriple> triples_in)
      : loop_digest(std::move(digest)), triples(std::move(triples_in)) {
    std::sort(triples.begin(), triples.end());
    triples.erase(std::unique(triples.begin(), triples.end()), triples.end());
    if (triples.empty()) throw InternalInconsistency("empty autotopism set");
    int degree = triples.front().degree();
    if (!contains(TopismTriple::identity(degree)))
      throw InternalInconsistency("autotopism set lacks the identity triple");
    for (const TopismTriple& a : triples)
      if (!contains(a.inverse()))
        throw InternalInconsistency("autotopism set not closed under inverse");
    for (const TopismTriple& a : triples)
      for (const TopismTriple& b : triples)
        if (!contains(compose(a, b)))
          throw InternalInconsistency("autotopism set not closed under composition");
  }

  bool contains(const TopismTriple& tr) const {
    return std::binary_search(triples.begin(), triples.end(), tr);
  }

  std::size_t size() const noexcept { return triples.size(); }
};

namespace detail {

// Backtracking enumerator. For a loop, borders determine a triple from U and
// b = eV: W = U R_b and V = W L_a^{-1} with a = eU. U images are assigned
// point by point (e first), pruning with every identity instance whose three
// coordinates are already determined.
class AutotopismSearch {
 public:
  AutotopismSearch(const CayleyTable& t, int e)
      : t_(t), n_(t.order()), e_(e), u_(n_, -1), w_(n_, -1), v_(n_, -1),
        used_(n_, 0), order_(make_point_order(n_, e)) {}

  std::vector<TopismTriple> run() {
    for (int a = 0; a < n_; ++a) {
      // L_a^{-1} as an image array: la_inv[a*y] = y.
      la_inv_.assign(static_cast<std::size_t>(n_), -1);
      for (int y = 0; y < n_; ++y) la_inv_[static_cast<std::size_t>(t_.mul(a, y))] = y;
      for (b_ = 0; b_ < n_; ++b_) {
        assign(e_, a);
        extend(1);
        unassign(e_);
      }
    }
    return std::move(found_);
  }

 private:
  static std::vector<int> make_point_order(int n, int e) {
    std::vector<int> order{e};
    for (int x = 0; x < n; ++x)
      if (x != e) order.push_back(x);
    return order;
  }

  void assign(int x, int image) {
    u_[static_cast<std::size_t>(x)] = image;
    w_[static_cast<std::size_t>(x)] = t_.mul(image, b_);
    v_[static_cast<std::size_t>(x)] = la_inv_[static_cast<std::size_t>(w_[static_cast<std::size_t>(x)])];
    used_[static_cast<std::size_t>(image)] = 1;
  }

  void unassign(int x) {
    used_[static_cast<std::size_t>(u_[static_cast<std::size_t>(x)])] = 0;
    u_[static_cast<std::size_t>(x)] = -1;
    w_[static_cast<std::size_t>(x)] = -1;
    v_[static_cast<std::size_t>(x)] = -1;
  }

  bool defined(int x) const { return u_[static_cast<std::size_t>(x)] >= 0; }

  // Checks every instance x.y involving the newly assigned point p whose
  // three coordinates (x, y, xy) are all determined.
  bool consistent_with(int p) const {
    for (int x = 0; x < n_; ++x) {
      if (!defined(x)) continue;
      for (int y = 0; y < n_; ++y) {
        if (!defined(y)) continue;
        int xy = t_.mul(x, y);
        if (!defined(xy)) continue;
        if (x != p && y != p && xy != p) continue;
        if (t_.mul(u_[static_cast<std::size_t>(x)], v_[static_cast<std::size_t>(y)]) !=
            w_[static_cast<std::size_t>(xy)])
          return false;
      }
    }
    return true;
  }

  void extend(int depth) {
    if (depth == n_) {
      std::vector<int> u(u_.begin(), u_.end());
      std::vector<int> v(v_.begin(), v_.end());
      std::vector<int> w(w_.begin(), w_.end());
      found_.emplace_back(Permutation(std::move(u)), Permutation(std::move(v)),
                          Permutation(std::move(w)));
      return;
    }
    int x = order_[static_cast<std::size_t>(depth)];
    for (int image = 0; image < n_; ++image) {
      if (used_[static_cast<std::size_t>(image)]) continue;
      assign(x, image);
      if (consistent_with(x)) extend(depth + 1);
      unassign(x);
    }
  }

  const CayleyTable& t_;
  int n_;
  int e_;
  int b_ = 0;
  std::vector<int> u_, w_, v_;
  std::vector<char> used_;
  std::vector<int> order_;
  std::vector<int> la_inv_;
  std::vector<TopismTriple> found_;
};

}  // namespace detail

inline AutotopismGroup enumerate_autotopisms(const CayleyTable& t,
                                             int order_cap = 10) {
  int e = t.require_loop();
  if (t.order() > order_cap)
    throw OrderCapExceeded("order " + std::to_string(t.order()) +
                           " above autotopism enumeration cap " +
                           std::to_string(order_cap));
  detail::AutotopismSearch search(t, e);
  return AutotopismGroup(t.digest(), search.run());
}

inline void to_json(nlohmann::json& j, const TopismTriple& tr) {
  j = nlohmann::json{{"u", format_cycles(tr.u)},
                     {"v", format_cycles(tr.v)},
                     {"w", format_cycles(tr.w)}};
}

inline void to_json(nlohmann::json& j, const AutotopismGroup& group) {
  j = nlohmann::json::array();
  for (const TopismTriple& tr : group.triples) j.push_back(tr);
}

}  // namespace centra

#endif  // CENTRA_REGULAR_HPP
