#ifndef CENTRA_REPRESENTATION_HPP
#define CENTRA_REPRESENTATION_HPP

#include <string>
#include <utility>
#include <vector>

#include "centra/cayley_table.hpp"
#include "centra/errors.hpp"
#include "centra/perm_set.hpp"
#include "centra/properties.hpp"

namespace centra {

enum class Side { left, right };

inline const char* side_name(Side side) {
  return side == Side::left ? "left" : "right";
}

namespace detail {

// Each (a, b) must be connected by exactly one member; the columns of a
// Latin square have this property, and reconstruction relies on it.
inline void require_sharply_transitive(const PermSet& set, int n) {
  if (static_cast<int>(set.size()) != n)
    throw InternalInconsistency("representation has " + std::to_string(set.size()) +
                                " members, expected " + std::to_string(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int hits = 0;
      for (const Permutation& p : set) hits += p[a] == b;
      if (hits != 1)
        throw InternalInconsistency("representation is not sharply transitive at (" +
                                    std::to_string(a) + ", " + std::to_string(b) + ")");
    }
}

}  // namespace detail

// All left translations L_x; always n distinct members forming a sharply
// transitive set, which is asserted.
inline PermSet left_representation(const CayleyTable& t) {
  t.require_quasigroup();
  PermSet result;
  for (int x = 0; x < t.order(); ++x) result.insert(t.left_translation(x));
  detail::require_sharply_transitive(result, t.order());
  return result;
}

inline PermSet right_representation(const CayleyTable& t) {
  t.require_quasigroup();
  PermSet result;
  for (int x = 0; x < t.order(); ++x) result.insert(t.right_translation(x));
  detail::require_sharply_transitive(result, t.order());
  return result;
}

inline PermSet representation(const CayleyTable& t, Side side) {
  return side == Side::left ? left_representation(t) : right_representation(t);
}

// Does "a, b in Pi implies a b^2 in Pi" agree with the LC (left) / RC (right)
// identity scan? Disagreement means the closure characterization failed on
// this table.
inline bool check_closure_lcrc(const CayleyTable& t, Side side) {
  t.require_loop();
  PermSet pi = representation(t, side);
  bool closed = true;
  for (const Permutation& a : pi) {
    for (const Permutation& b : pi)
      if (!pi.contains(compose(a, compose(b, b)))) {
        closed = false;
        break;
      }
    if (!closed) break;
  }
  bool identity_holds = side == Side::left ? is_lc(t).holds : is_rc(t).holds;
  return closed == identity_holds;
}

// Does "a, b in Pi implies a b^2 and a^2 b in Pi" agree with the C identity
// scan on the chosen side?
inline bool check_closure_c(const CayleyTable& t, Side side) {
  t.require_loop();
  PermSet pi = representation(t, side);
  bool closed = true;
  for (const Permutation& a : pi) {
    for (const Permutation& b : pi) {
      if (!pi.contains(compose(a, compose(b, b))) ||
          !pi.contains(compose(compose(a, a), b))) {
        closed = false;
        break;
      }
    }
    if (!closed) break;
  }
  return closed == is_c(t).holds;
}

struct PowerClosureResult {
  bool vacuous = false;  // precondition (LC / RC / C per side) did not hold
  bool holds = true;     // every power stayed inside the representation

  explicit operator bool() const noexcept { return holds; }
};

// b^k in Pi for every member b and every k in [lo, hi]. Requires the table
// to satisfy LC (left side) or RC (right side); a C-loop qualifies for both.
// When the precondition fails the result is flagged vacuous instead.
inline PowerClosureResult check_power_closure(const CayleyTable& t, Side side,
                                              int lo, int hi) {
  t.require_loop();
  bool applicable = side == Side::left ? is_lc(t).holds : is_rc(t).holds;
  if (!applicable) return {true, true};
  PermSet pi = representation(t, side);
  for (const Permutation& b : pi)
    for (int k = lo; k <= hi; ++k)
      if (!pi.contains(power(b, k))) return {false, false};
  return {false, true};
}

enum class Law { lcrc, c };

// Closes the generators (taken as right translations, with the identity
// adjoined) under the selected products -- a b^2 for both laws, plus a^2 b
// for law c -- and under integer powers, then rebuilds the loop table.
//
// Reconstruction convention: for a sharply transitive closure, indexing
// members by the image of any fixed point is a bijection; the smallest such
// point e is taken as the identity, member s_x is the one with e s_x = x, and
// cell(y, x) = y s_x. The closure member fixing e is the identity map, so
// the result is a loop with identity e (= 0 for every sharply transitive
// closure).
inline CayleyTable generate_from_generators(const std::vector<Permutation>& gens,
                                            int n, Law law) {
  if (n < 1 || n > kMaxDegree)
    throw OrderCapExceeded("order " + std::to_string(n) + " outside [1, " +
                           std::to_string(kMaxDegree) + "]");
  for (const Permutation& g : gens)
    if (g.degree() != n)
      throw OrderMismatch("generator of degree " + std::to_string(g.degree()) +
                          ", expected " + std::to_string(n));

  // Discovery-ordered member list with set-semantics insert.
  std::vector<Permutation> members{Permutation::identity(n)};
  auto add = [&](const Permutation& p) {
    for (const Permutation& m : members)
      if (m == p) return false;
    members.push_back(p);
    if (static_cast<int>(members.size()) > n)
      throw ClosureOverflow("closure exceeded " + std::to_string(n) +
                            " members; generators are inconsistent with order " +
                            std::to_string(n));
    return true;
  };
  for (const Permutation& g : gens) add(g);

  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t i = 0; i < members.size(); ++i) {
      Permutation p = members[i];
      for (int k = -n; k <= n; ++k) grew |= add(power(p, k));
    }
    std::size_t snapshot = members.size();
    for (std::size_t i = 0; i < snapshot; ++i)
      for (std::size_t j = 0; j < snapshot; ++j) {
        Permutation alpha = members[i];
        Permutation beta = members[j];
        grew |= add(compose(alpha, compose(beta, beta)));
        if (law == Law::c) grew |= add(compose(compose(alpha, alpha), beta));
      }
  }

  PermSet closure;
  for (const Permutation& m : members) closure.insert(m);
  if (static_cast<int>(closure.size()) != n)
    throw NotSharplyTransitive("closure stalled at " + std::to_string(closure.size()) +
                               " members, expected " + std::to_string(n));

  // Smallest point whose indexing map s -> e s is a bijection.
  int e = -1;
  for (int a = 0; a < n && e < 0; ++a) {
    std::vector<char> hit(static_cast<std::size_t>(n), 0);
    bool bijective = true;
    for (const Permutation& m : closure) {
      if (hit[static_cast<std::size_t>(m[a])]) {
        bijective = false;
        break;
      }
      hit[static_cast<std::size_t>(m[a])] = 1;
    }
    if (bijective) e = a;
  }
  if (e < 0)
    throw NotSharplyTransitive("no point indexes the closure bijectively");

  std::vector<const Permutation*> by_index(static_cast<std::size_t>(n));
  for (const Permutation& m : closure) by_index[static_cast<std::size_t>(m[e])] = &m;
  std::vector<int> cells(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int y = 0; y < n; ++y)
    for (int x = 0; x < n; ++x)
      cells[static_cast<std::size_t>(y) * static_cast<std::size_t>(n) +
            static_cast<std::size_t>(x)] = (*by_index[static_cast<std::size_t>(x)])[y];
  CayleyTable result(n, std::move(cells));

  if (!result.is_quasigroup() || !result.identity() || *result.identity() != e)
    throw NotSharplyTransitive("closure does not rebuild a loop with identity " +
                               std::to_string(e));
  bool law_ok = law == Law::c ? is_c(result).holds : is_rc(result).holds;
  if (!law_ok)
    throw LawViolation(std::string("generated table does not satisfy the ") +
                       (law == Law::c ? "C" : "RC") + " law");
  return result;
}

}  // namespace centra

#endif  // CENTRA_REPRESENTATION_HPP
