#ifndef CENTRA_PROPERTIES_HPP
#define CENTRA_PROPERTIES_HPP

#include <map>
#include <string>
#include <vector>

#include "nlohmann/json.hpp"

#include "centra/cayley_table.hpp"
#include "centra/errors.hpp"

namespace centra {

// Outcome of one universally quantified predicate. A false result always
// carries the lexicographically smallest failing tuple; a true one carries
// nothing.
struct PredicateResult {
  bool holds = true;
  std::vector<int> witness;

  static PredicateResult pass() { return {}; }
  static PredicateResult fail(std::vector<int> w) { return {false, std::move(w)}; }

  explicit operator bool() const noexcept { return holds; }
};

namespace detail {

// Scans (x, y, z) in lexicographic order and stops at the first violation.
template <typename F>
PredicateResult scan3(const CayleyTable& t, F&& identity_holds) {
  int n = t.order();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (!identity_holds(t, x, y, z)) return PredicateResult::fail({x, y, z});
  return PredicateResult::pass();
}

template <typename F>
PredicateResult scan2(const CayleyTable& t, F&& identity_holds) {
  int n = t.order();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (!identity_holds(t, x, y)) return PredicateResult::fail({x, y});
  return PredicateResult::pass();
}

}  // namespace detail

// (xx)(yz) = (x(xy))z, cross-checked against the equivalent (x.xy)z = x(x.yz).
// The two readings of the second form differ only by which side is written
// first, so they are one scan; a boolean disagreement between the two genuine
// forms is a bug, not a property of the table.
inline PredicateResult is_lc(const CayleyTable& t) {
  t.require_loop();
  PredicateResult product_form = detail::scan3(t, [](const CayleyTable& g, int x, int y, int z) {
    return g.mul(g.mul(x, x), g.mul(y, z)) == g.mul(g.mul(x, g.mul(x, y)), z);
  });
  PredicateResult shifted_form = detail::scan3(t, [](const CayleyTable& g, int x, int y, int z) {
    return g.mul(g.mul(x, g.mul(x, y)), z) == g.mul(x, g.mul(x, g.mul(y, z)));
  });
  if (product_form.holds != shifted_form.holds)
    throw InternalInconsistency("the two LC identity forms disagree on table " +
                                t.digest());
  return product_form;
}

// (zy)(xx) = z((yx)x), cross-checked against z(yx.x) = (zy.x)x.
inline PredicateResult is_rc(const CayleyTable& t) {
  t.require_loop();
  PredicateResult product_form = detail::scan3(t, [](const CayleyTable& g, int x, int y, int z) {
    return g.mul(g.mul(z, y), g.mul(x, x)) == g.mul(z, g.mul(g.mul(y, x), x));
  });
  PredicateResult shifted_form = detail::scan3(t, [](const CayleyTable& g, int x, int y, int z) {
    return g.mul(z, g.mul(g.mul(y, x), x)) == g.mul(g.mul(g.mul(z, y), x), x);
  });
  if (product_form.holds != shifted_form.holds)
    throw InternalInconsistency("the two RC identity forms disagree on table " +
                                t.digest());
  return product_form;
}

// x(y(yz)) = ((xy)y)z, cross-checked against C <=> LC and RC.
inline PredicateResult is_c(const CayleyTable& t) {
  t.require_loop();
  PredicateResult direct = detail::scan3(t, [](const CayleyTable& g, int x, int y, int z) {
    return g.mul(x, g.mul(y, g.mul(y, z))) == g.mul(g.mul(g.mul(x, y), y), z);
  });
  if (direct.holds != (is_lc(t).holds && is_rc(t).holds))
    throw InternalInconsistency("C vs LC&RC disagree on table " + t.digest());
  return direct;
}

// x.xy = x^2 y
inline PredicateResult is_left_alternative(const CayleyTable& t) {
  t.require_loop();
  return detail::scan2(t, [](const CayleyTable& g, int x, int y) {
    return g.mul(x, g.mul(x, y)) == g.mul(g.mul(x, x), y);
  });
}

// yx.x = y x^2
inline PredicateResult is_right_alternative(const CayleyTable& t) {
  t.require_loop();
  return detail::scan2(t, [](const CayleyTable& g, int x, int y) {
    return g.mul(g.mul(y, x), x) == g.mul(y, g.mul(x, x));
  });
}

inline PredicateResult is_alternative(const CayleyTable& t) {
  PredicateResult left = is_left_alternative(t);
  if (!left.holds) return left;
  return is_right_alternative(t);
}

namespace detail {

inline int left_inverse_of(const CayleyTable& t, int x, int e) {
  for (int a = 0; a < t.order(); ++a)
    if (t.mul(a, x) == e) return a;
  throw InternalInconsistency("loop element has no left inverse");
}

inline int right_inverse_of(const CayleyTable& t, int x, int e) {
  for (int a = 0; a < t.order(); ++a)
    if (t.mul(x, a) == e) return a;
  throw InternalInconsistency("loop element has no right inverse");
}

}  // namespace detail

// x^l (xy) = y for the left inverse x^l of every x.
inline PredicateResult has_lip(const CayleyTable& t) {
  int e = t.require_loop();
  int n = t.order();
  for (int x = 0; x < n; ++x) {
    int xl = detail::left_inverse_of(t, x, e);
    for (int y = 0; y < n; ++y)
      if (t.mul(xl, t.mul(x, y)) != y) return PredicateResult::fail({x, y});
  }
  return PredicateResult::pass();
}

// (yx) x^r = y for the right inverse x^r of every x.
inline PredicateResult has_rip(const CayleyTable& t) {
  int e = t.require_loop();
  int n = t.order();
  for (int x = 0; x < n; ++x) {
    int xr = detail::right_inverse_of(t, x, e);
    for (int y = 0; y < n; ++y)
      if (t.mul(t.mul(y, x), xr) != y) return PredicateResult::fail({x, y});
  }
  return PredicateResult::pass();
}

inline PredicateResult is_commutative(const CayleyTable& t) {
  t.require_loop();
  return detail::scan2(t, [](const CayleyTable& g, int x, int y) {
    return g.mul(x, y) == g.mul(y, x);
  });
}

inline PredicateResult is_associative(const CayleyTable& t) {
  t.require_loop();
  return detail::scan3(t, [](const CayleyTable& g, int x, int y, int z) {
    return g.mul(g.mul(x, y), z) == g.mul(x, g.mul(y, z));
  });
}

// (xy)(zx) = (x(yz))x; used to validate the Moufang fixtures in the catalog.
inline PredicateResult is_moufang(const CayleyTable& t) {
  t.require_loop();
  return detail::scan3(t, [](const CayleyTable& g, int x, int y, int z) {
    return g.mul(g.mul(x, y), g.mul(z, x)) == g.mul(g.mul(x, g.mul(y, z)), x);
  });
}

struct Nuclei {
  std::vector<int> left;    // a with a.xy = ax.y for all x, y
  std::vector<int> middle;  // a with x.ay = xa.y for all x, y
  std::vector<int> right;   // a with x.ya = xy.a for all x, y
};

inline Nuclei nuclei(const CayleyTable& t) {
  t.require_loop();
  int n = t.order();
  Nuclei result;
  for (int a = 0; a < n; ++a) {
    bool in_left = true, in_middle = true, in_right = true;
    for (int x = 0; x < n && (in_left || in_middle || in_right); ++x)
      for (int y = 0; y < n; ++y) {
        if (in_left && t.mul(a, t.mul(x, y)) != t.mul(t.mul(a, x), y)) in_left = false;
        if (in_middle && t.mul(x, t.mul(a, y)) != t.mul(t.mul(x, a), y)) in_middle = false;
        if (in_right && t.mul(x, t.mul(y, a)) != t.mul(t.mul(x, y), a)) in_right = false;
        if (!in_left && !in_middle && !in_right) break;
      }
    if (in_left) result.left.push_back(a);
    if (in_middle) result.middle.push_back(a);
    if (in_right) result.right.push_back(a);
  }
  return result;
}

// Elements commuting with everything and lying in all three nuclei. Sorted.
inline std::vector<int> center(const CayleyTable& t) {
  Nuclei nuc = nuclei(t);
  int n = t.order();
  std::vector<int> result;
  std::vector<char> nuclear(static_cast<std::size_t>(n), 0);
  for (int a : nuc.left) nuclear[static_cast<std::size_t>(a)] += 1;
  for (int a : nuc.middle) nuclear[static_cast<std::size_t>(a)] += 1;
  for (int a : nuc.right) nuclear[static_cast<std::size_t>(a)] += 1;
  for (int a = 0; a < n; ++a) {
    if (nuclear[static_cast<std::size_t>(a)] != 3) continue;
    bool commutes = true;
    for (int x = 0; x < n && commutes; ++x)
      commutes = t.mul(a, x) == t.mul(x, a);
    if (commutes) result.push_back(a);
  }
  return result;
}

// x^2 in Z(L) for every x; witness is the offending x.
inline PredicateResult is_central_square(const CayleyTable& t) {
  t.require_loop();
  std::vector<int> z = center(t);
  std::vector<char> in_center(static_cast<std::size_t>(t.order()), 0);
  for (int a : z) in_center[static_cast<std::size_t>(a)] = 1;
  for (int x = 0; x < t.order(); ++x)
    if (!in_center[static_cast<std::size_t>(t.mul(x, x))])
      return PredicateResult::fail({x});
  return PredicateResult::pass();
}

// The set {x*x : x}, sorted.
inline std::vector<int> squares(const CayleyTable& t) {
  t.require_loop();
  std::vector<char> seen(static_cast<std::size_t>(t.order()), 0);
  for (int x = 0; x < t.order(); ++x) seen[static_cast<std::size_t>(t.mul(x, x))] = 1;
  std::vector<int> result;
  for (int a = 0; a < t.order(); ++a)
    if (seen[static_cast<std::size_t>(a)]) result.push_back(a);
  return result;
}

// Predicate battery plus the computed subsets for one table.
struct PropertyReport {
  std::string table_digest;
  int order = 0;
  std::map<std::string, PredicateResult> predicates;
  std::vector<int> center;
  Nuclei nuclei;
  std::vector<int> squares;

  nlohmann::json to_json() const {
    nlohmann::json preds = nlohmann::json::object();
    for (const auto& [name, result] : predicates) {
      nlohmann::json entry;
      entry["holds"] = result.holds;
      entry["witness"] = result.holds ? nlohmann::json() : nlohmann::json(result.witness);
      preds[name] = entry;
    }
    return nlohmann::json{{"digest", table_digest},
                          {"order", order},
                          {"predicates", preds},
                          {"center", center},
                          {"nuclei",
                           {{"left", nuclei.left},
                            {"middle", nuclei.middle},
                            {"right", nuclei.right}}},
                          {"squares", squares}};
  }
};

inline PropertyReport analyze_properties(const CayleyTable& t) {
  t.require_loop();
  PropertyReport report;
  report.table_digest = t.digest();
  report.order = t.order();
  report.predicates["lc"] = is_lc(t);
  report.predicates["rc"] = is_rc(t);
  report.predicates["c"] = is_c(t);
  report.predicates["left_alternative"] = is_left_alternative(t);
  report.predicates["right_alternative"] = is_right_alternative(t);
  report.predicates["alternative"] = is_alternative(t);
  report.predicates["lip"] = has_lip(t);
  report.predicates["rip"] = has_rip(t);
  report.predicates["commutative"] = is_commutative(t);
  report.predicates["associative"] = is_associative(t);
  report.predicates["central_square"] = is_central_square(t);
  report.center = center(t);
  report.nuclei = centra::nuclei(t);
  report.squares = centra::squares(t);
  return report;
}

}  // namespace centra

#endif  // CENTRA_PROPERTIES_HPP
