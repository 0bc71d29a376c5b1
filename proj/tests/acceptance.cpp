// Acceptance suite: one line per criterion, nonzero exit when any fails.
// Each criterion pins its tolerance (exact equality throughout) and its
// runtime bound.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "centra/centra.hpp"
#include "oracles.hpp"

using namespace centra;
using Clock = std::chrono::steady_clock;

namespace {

const char* kEmbeddedGoldenTable =
    "# order-12 golden table\n"
    "12\n"
    "0 1 2 3 4 5 6 7 8 9 10 11\n"
    "1 2 0 4 5 3 7 8 6 10 11 9\n"
    "2 0 1 5 3 4 8 6 7 11 9 10\n"
    "3 4 5 0 1 2 9 10 11 6 7 8\n"
    "4 5 3 1 2 0 10 11 9 7 8 6\n"
    "5 3 4 2 0 1 11 9 10 8 6 7\n"
    "6 7 8 10 11 9 0 1 2 5 3 4\n"
    "7 8 6 11 9 10 1 2 0 3 4 5\n"
    "8 6 7 9 10 11 2 0 1 4 5 3\n"
    "9 10 11 8 6 7 3 4 5 2 0 1\n"
    "10 11 9 6 7 8 4 5 3 0 1 2\n"
    "11 9 10 7 8 6 5 3 4 1 2 0\n";

const char* kAlpha = "(0 10 1 11 2 9)(3 7 4 8 5 6)";
const char* kBeta = "(0 3)(1 4)(2 5)(6 10)(7 11)(8 9)";
const char* kGamma = "(0 7 2 6 1 8)(3 10 5 9 4 11)";

CayleyTable derived_non_lc_5() {
  return CayleyTable::from_rows({{0, 1, 2, 3, 4},
                                 {1, 0, 3, 4, 2},
                                 {2, 3, 4, 0, 1},
                                 {3, 4, 1, 2, 0},
                                 {4, 2, 0, 1, 3}});
}

std::vector<std::pair<std::string, CayleyTable>> catalog_groups() {
  std::vector<std::pair<std::string, CayleyTable>> groups;
  for (int n : {1, 2, 3, 4, 5, 6}) groups.emplace_back("c" + std::to_string(n), cyclic(n));
  groups.emplace_back("c2xc2", direct_product(cyclic(2), cyclic(2)));
  groups.emplace_back("c2xc2xc2",
                      direct_product(direct_product(cyclic(2), cyclic(2)), cyclic(2)));
  groups.emplace_back("d4", dihedral(4));
  groups.emplace_back("q8", quaternion());
  groups.emplace_back("q8xc2xc3",
                      direct_product(direct_product(quaternion(), cyclic(2)), cyclic(3)));
  return groups;
}

struct Check {
  int id;
  std::string label;
  double time_limit_seconds;
  std::function<bool(std::string&)> run;
};

bool expect(bool condition, const std::string& what, std::string& detail) {
  if (!condition && detail.empty()) detail = what;
  return condition;
}

// --- criterion 1 ---------------------------------------------------------
bool criterion_golden(std::string& detail) {
  CayleyTable t = CayleyTable::parse(kEmbeddedGoldenTable);
  bool ok = true;
  ok &= expect(t == c_loop_12(), "parsed table differs from the catalog copy", detail);
  ok &= expect(t.is_quasigroup(), "not a quasigroup", detail);
  ok &= expect(t.identity() == 0, "identity is not 0", detail);
  ok &= expect(is_lc(t).holds, "LC fails", detail);
  ok &= expect(is_rc(t).holds, "RC fails", detail);
  ok &= expect(is_c(t).holds, "C fails", detail);
  ok &= expect(!is_associative(t).holds, "unexpectedly associative", detail);
  ok &= expect(!is_commutative(t).holds, "unexpectedly commutative", detail);
  ok &= expect(has_lip(t).holds, "LIP fails", detail);
  ok &= expect(has_rip(t).holds, "RIP fails", detail);
  ok &= expect(is_left_alternative(t).holds, "left alternativity fails", detail);
  ok &= expect(is_right_alternative(t).holds, "right alternativity fails", detail);
  return ok;
}

// --- criterion 2 ---------------------------------------------------------
bool criterion_construction(std::string& detail) {
  std::vector<Permutation> gens{parse_cycles(kAlpha, 12), parse_cycles(kBeta, 12),
                                parse_cycles(kGamma, 12)};
  CayleyTable generated = generate_from_generators(gens, 12, Law::c);
  return expect(generated == c_loop_12(), "generated table differs from the golden table",
                detail);
}

// --- criterion 3 ---------------------------------------------------------
bool criterion_equivalences(std::string& detail) {
  std::vector<std::pair<std::string, CayleyTable>> corpus;
  for (int n = 1; n <= 5; ++n) {
    int index = 0;
    for (CayleyTable& t : enumerate_loops(n))
      corpus.emplace_back("order" + std::to_string(n) + "#" + std::to_string(index++),
                          std::move(t));
  }
  for (int n = 6; n <= 8; ++n) {
    int index = 0;
    for (CayleyTable& t : random_loops(n, 200, 1000 + static_cast<std::uint64_t>(n)))
      corpus.emplace_back("random" + std::to_string(n) + "#" + std::to_string(index++),
                          std::move(t));
  }
  bool ok = true;
  for (const auto& [name, t] : corpus) {
    ok &= expect(check_theorem_lc_auto(t), name + ": lc-auto disagrees", detail);
    ok &= expect(check_theorem_rc_auto(t), name + ": rc-auto disagrees", detail);
    ok &= expect(check_theorem_c_mu(t), name + ": c-mu disagrees", detail);
    ok &= expect(check_closure_lcrc(t, Side::left), name + ": closure-lcrc L", detail);
    ok &= expect(check_closure_lcrc(t, Side::right), name + ": closure-lcrc R", detail);
    ok &= expect(check_closure_c(t, Side::left), name + ": closure-c L", detail);
    ok &= expect(check_closure_c(t, Side::right), name + ": closure-c R", detail);
  }
  return ok;
}

// --- criterion 4 ---------------------------------------------------------
bool criterion_power_closure(std::string& detail) {
  std::vector<std::pair<std::string, CayleyTable>> sources = catalog_groups();
  sources.emplace_back("c12", c_loop_12());
  bool ok = true;
  for (const auto& [name, t] : sources)
    for (Side side : {Side::left, Side::right}) {
      PowerClosureResult r = check_power_closure(t, side, -6, 6);
      ok &= expect(!r.vacuous && r.holds,
                   name + ": power closure " + side_name(side), detail);
    }
  return ok;
}

// --- criterion 5 ---------------------------------------------------------
bool criterion_regular_sets(std::string& detail) {
  bool ok = true;

  // corpus: all catalog tables plus exhaustive small loops and a random band
  std::vector<std::pair<std::string, CayleyTable>> corpus = catalog_groups();
  corpus.emplace_back("o16", cayley_loop());
  corpus.emplace_back("c12", c_loop_12());
  corpus.emplace_back("l5", derived_non_lc_5());
  for (int n = 1; n <= 5; ++n) {
    int index = 0;
    for (CayleyTable& t : enumerate_loops(n))
      corpus.emplace_back("order" + std::to_string(n) + "#" + std::to_string(index++),
                          std::move(t));
  }
  {
    int index = 0;
    for (CayleyTable& t : random_loops(6, 40, 3141))
      corpus.emplace_back("random6#" + std::to_string(index++), std::move(t));
  }

  for (const auto& [name, t] : corpus) {
    PermSet lambda = lambda_regular_set(t);
    PermSet rho = rho_regular_set(t);
    std::vector<MuPair> mu = mu_regular_set(t);
    PermSet mu_firsts;
    for (const MuPair& p : mu) mu_firsts.insert(p.u);
    ok &= expect(is_permutation_group(lambda), name + ": lambda not a group", detail);
    ok &= expect(is_permutation_group(rho), name + ": rho not a group", detail);
    ok &= expect(is_permutation_group(mu_firsts), name + ": mu not a group", detail);

    // brute-force definition filters, where the symmetric group is tractable
    if (t.order() <= 8) {
      ok &= expect(lambda == tests::brute_lambda_set(t),
                   name + ": lambda differs from brute force", detail);
      ok &= expect(rho == tests::brute_rho_set(t),
                   name + ": rho differs from brute force", detail);
      auto brute = tests::brute_mu_pairs(t);
      bool mu_match = mu.size() == brute.size();
      for (std::size_t i = 0; mu_match && i < brute.size(); ++i)
        mu_match = mu[i].u == brute[i].first && mu[i].adjoint == brute[i].second;
      ok &= expect(mu_match, name + ": mu differs from brute force", detail);
    }
  }

  // groups: full translation sets
  for (const auto& [name, g] : catalog_groups()) {
    int n = g.order();
    ok &= expect(static_cast<int>(lambda_regular_set(g).size()) == n,
                 name + ": |lambda| != n", detail);
    ok &= expect(static_cast<int>(rho_regular_set(g).size()) == n,
                 name + ": |rho| != n", detail);
    std::vector<MuPair> mu = mu_regular_set(g);
    bool all_b = static_cast<int>(mu.size()) == n;
    for (int b = 0; all_b && b < n; ++b) {
      MuPair wanted{g.right_translation(b), g.left_translation(b)};
      all_b = std::binary_search(mu.begin(), mu.end(), wanted);
    }
    ok &= expect(all_b, name + ": mu set is not {(R_b, L_b)}", detail);
  }
  return ok;
}

// --- criterion 6 ---------------------------------------------------------
bool criterion_isotopy(std::string& detail) {
  bool ok = true;
  auto note = [&](const std::string& name, const FindingsReport& r) {
    if (!r.clean()) {
      std::fprintf(stderr, "finding archive (%s): %s\n", name.c_str(),
                   r.to_json().dump(2).c_str());
    }
    ok &= expect(r.clean(), name + ": counterexample found", detail);
  };

  CayleyTable c12 = c_loop_12();
  note("c12/ABB", verify_iso_invariance_lcrc(c12, Shape::ABB, 10000, 1));
  note("c12/ABA", verify_iso_invariance_lcrc(c12, Shape::ABA, 10000, 1));

  CayleyTable l5 = derived_non_lc_5();
  note("l5/ABB", verify_iso_invariance_lcrc(l5, Shape::ABB, 10000, 1));
  note("l5/ABA", verify_iso_invariance_lcrc(l5, Shape::ABA, 10000, 1));

  CayleyTable c2cubed = direct_product(direct_product(cyclic(2), cyclic(2)), cyclic(2));
  FindingsReport cc = verify_iso_cc(c2cubed, Shape::ABB, 10000, 1);
  ok &= expect(!cc.vacuous, "iso-cc: unexpectedly vacuous", detail);
  note("c2^3/iso-cc", cc);

  for (Shape shape : {Shape::ABB, Shape::ABA}) {
    for (const auto& [name, report] : verify_corollary_fixtures(shape, 10000, 1)) {
      ok &= expect(!report.vacuous,
                   "corollary " + name + ": unexpectedly vacuous", detail);
      note("corollary/" + name + "/" + shape_name(shape), report);
    }
  }
  return ok;
}

// --- criterion 7 ---------------------------------------------------------
bool criterion_central_square(std::string& detail) {
  bool ok = true;
  ok &= expect(is_central_square(dihedral(4)).holds, "d4", detail);
  ok &= expect(is_central_square(quaternion()).holds, "q8", detail);
  ok &= expect(is_central_square(cayley_loop()).holds, "o16", detail);
  ok &= expect(is_central_square(direct_product(cyclic(2), cyclic(2))).holds, "c2xc2",
               detail);
  ok &= expect(
      is_central_square(direct_product(direct_product(cyclic(2), cyclic(2)), cyclic(2)))
          .holds,
      "c2xc2xc2", detail);
  return ok;
}

// --- criterion 8 ---------------------------------------------------------
bool criterion_autotopism_enumerator(std::string& detail) {
  bool ok = true;
  for (int n = 1; n <= 4; ++n) {
    int index = 0;
    for (const CayleyTable& t : enumerate_loops(n)) {
      AutotopismGroup enumerated = enumerate_autotopisms(t);
      std::vector<TopismTriple> brute = tests::brute_autotopisms(t);
      bool match = enumerated.size() == brute.size();
      for (std::size_t i = 0; match && i < brute.size(); ++i)
        match = enumerated.triples[i] == brute[i];
      ok &= expect(match,
                   "order " + std::to_string(n) + "#" + std::to_string(index) +
                       ": enumerator differs from all-triples filter",
                   detail);
      ++index;
    }
  }

  CayleyTable t = c_loop_12();
  AutotopismGroup group = enumerate_autotopisms(t, 12);
  Permutation id = Permutation::identity(12);
  for (int x = 0; x < 12; ++x) {
    Permutation lx2 = power(t.left_translation(x), 2);
    Permutation rx2 = power(t.right_translation(x), 2);
    ok &= expect(group.contains(TopismTriple(lx2, id, lx2)),
                 "missing (L_" + std::to_string(x) + "^2, I, L^2)", detail);
    ok &= expect(group.contains(TopismTriple(id, rx2, rx2)),
                 "missing (I, R_" + std::to_string(x) + "^2, R^2)", detail);
  }
  return ok;
}

}  // namespace

int main() {
  std::vector<Check> checks{
      {1, "golden table: parse, loop structure, identities", 1.0, criterion_golden},
      {2, "construction round-trip reproduces the golden table", 1.0, criterion_construction},
      {3, "theorem equivalences on exhaustive + random corpus", 300.0,
       criterion_equivalences},
      {4, "power closure on golden table and catalog groups", 60.0,
       criterion_power_closure},
      {5, "regular sets: groups, translation sets, brute-force match", 120.0,
       criterion_regular_sets},
      {6, "isotopy invariance battery", 600.0, criterion_isotopy},
      {7, "central-square fixtures", 60.0, criterion_central_square},
      {8, "autotopism enumerator vs all-triples filter", 60.0,
       criterion_autotopism_enumerator},
  };

  int failures = 0;
  for (const Check& check : checks) {
    auto start = Clock::now();
    std::string detail;
    bool passed = false;
    try {
      passed = check.run(detail);
    } catch (const Error& e) {
      detail = std::string("exception: ") + e.what();
    }
    double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (seconds > check.time_limit_seconds) {
      passed = false;
      detail += (detail.empty() ? "" : "; ") + std::string("over time limit");
    }
    std::printf("%s  criterion %d (%.2fs): %s%s%s\n", passed ? "PASS" : "FAIL",
                check.id, seconds, check.label.c_str(), detail.empty() ? "" : " -- ",
                detail.c_str());
    failures += !passed;
  }
  return failures;
}
