#ifndef CENTRA_ISOTOPY_HPP
#define CENTRA_ISOTOPY_HPP

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "nlohmann/json.hpp"

#include "centra/catalog.hpp"
#include "centra/cayley_table.hpp"
#include "centra/errors.hpp"
#include "centra/properties.hpp"
#include "centra/rng.hpp"
#include "centra/topism.hpp"

namespace centra {

// The isotope h of g under (U, V, W): x o y = ((x U^-1) . (y V^-1)) W. The
// result is always a quasigroup (asserted) but need not be a loop.
inline CayleyTable apply_isotopism(const CayleyTable& g, const TopismTriple& tr) {
  g.require_quasigroup();
  if (tr.degree() != g.order())
    throw OrderMismatch("triple degree " + std::to_string(tr.degree()) +
                        " does not match table order " + std::to_string(g.order()));
  int n = g.order();
  Permutation u_inv = tr.u.inverse();
  Permutation v_inv = tr.v.inverse();
  std::vector<int> cells(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      cells[static_cast<std::size_t>(x) * static_cast<std::size_t>(n) +
            static_cast<std::size_t>(y)] = tr.w[g.mul(u_inv[x], v_inv[y])];
  CayleyTable h(n, std::move(cells));
  if (!h.is_quasigroup())
    throw InternalInconsistency("isotope of a quasigroup failed the Latin-square check");
  return h;
}

// Which components of the sampled triple coincide: (A, B, B) or (A, B, A).
enum class Shape { ABB, ABA };

inline const char* shape_name(Shape shape) {
  return shape == Shape::ABB ? "ABB" : "ABA";
}

inline TopismTriple shaped_triple(Shape shape, const Permutation& a,
                                  const Permutation& b) {
  return shape == Shape::ABB ? TopismTriple(a, b, b) : TopismTriple(a, b, a);
}

// A sampled triple whose isotope turned out to be a loop again.
struct Keeper {
  TopismTriple triple;
  CayleyTable table;
};

// Draws `budget` random bijection pairs (A, B) under the seed, applies the
// shaped triple, and keeps the isotopes that are loops. The trivial triple
// (I, I, I) is always keeper #0, so the list is never empty. Identical seed
// and budget reproduce the list bit for bit.
inline std::vector<Keeper> sample_shaped_isotopisms(const CayleyTable& g,
                                                    Shape shape, long budget,
                                                    std::uint64_t seed) {
  g.require_loop();
  int n = g.order();
  std::vector<Keeper> keepers;
  keepers.push_back({TopismTriple::identity(n), g});
  std::mt19937_64 rng(seed);
  for (long draw = 0; draw < budget; ++draw) {
    Permutation a = random_permutation(n, rng);
    Permutation b = random_permutation(n, rng);
    TopismTriple triple = shaped_triple(shape, a, b);
    CayleyTable h = apply_isotopism(g, triple);
    if (h.is_loop()) keepers.push_back({std::move(triple), std::move(h)});
  }
  return keepers;
}

// One keeper that contradicted the theorem under test.
struct IsotopyFinding {
  TopismTriple triple;
  std::string isotope_digest;
  std::string predicate;
  bool expected = false;
  bool got = false;
  std::vector<int> witness;
};

struct FindingsReport {
  std::string source_digest;
  Shape shape = Shape::ABB;
  long budget = 0;
  long keepers = 0;
  long hypothesis_filtered = 0;
  bool vacuous = false;
  std::vector<IsotopyFinding> findings;

  bool clean() const noexcept { return findings.empty(); }

  nlohmann::json to_json() const {
    nlohmann::json counterexamples = nlohmann::json::array();
    for (const IsotopyFinding& f : findings) {
      counterexamples.push_back(
          {{"triple",
            {{"u", format_cycles(f.triple.u)},
             {"v", format_cycles(f.triple.v)},
             {"w", format_cycles(f.triple.w)}}},
           {"isotope", f.isotope_digest},
           {"predicate", f.predicate},
           {"expected", f.expected},
           {"got", f.got},
           {"witness", f.witness.empty() ? nlohmann::json() : nlohmann::json(f.witness)}});
    }
    return nlohmann::json{{"source", source_digest},
                          {"shape", shape_name(shape)},
                          {"budget", budget},
                          {"keepers", keepers},
                          {"hypothesis_filtered", hypothesis_filtered},
                          {"vacuous", vacuous},
                          {"counterexamples", counterexamples}};
  }
};

// Shape ABB pairs with the LC identity, shape ABA with RC: every loop
// isotope sampled under the shape must agree with the source on that
// predicate. Any counterexample is reported verbatim, never swallowed.
inline FindingsReport verify_iso_invariance_lcrc(const CayleyTable& g, Shape shape,
                                                 long budget, std::uint64_t seed) {
  FindingsReport report;
  report.source_digest = g.digest();
  report.shape = shape;
  report.budget = budget;
  bool source_holds =
      shape == Shape::ABB ? is_lc(g).holds : is_rc(g).holds;
  const char* predicate = shape == Shape::ABB ? "lc" : "rc";
  std::vector<Keeper> keepers = sample_shaped_isotopisms(g, shape, budget, seed);
  report.keepers = static_cast<long>(keepers.size());
  for (const Keeper& k : keepers) {
    PredicateResult got = shape == Shape::ABB ? is_lc(k.table) : is_rc(k.table);
    if (got.holds != source_holds)
      report.findings.push_back({k.triple, k.table.digest(), predicate,
                                 source_holds, got.holds, got.witness});
  }
  return report;
}

// Keepers satisfying the hypothesis on H -- alternative and central square --
// must be C-loops when G is a central-square C-loop. Keepers failing the
// hypothesis are excluded and counted. A source that is not a central-square
// C-loop makes the run vacuous.
inline FindingsReport verify_iso_c(const CayleyTable& g, Shape shape, long budget,
                                   std::uint64_t seed) {
  FindingsReport report;
  report.source_digest = g.digest();
  report.shape = shape;
  report.budget = budget;
  report.vacuous = !(is_c(g).holds && is_central_square(g).holds);
  std::vector<Keeper> keepers = sample_shaped_isotopisms(g, shape, budget, seed);
  report.keepers = static_cast<long>(keepers.size());
  if (report.vacuous) return report;
  for (const Keeper& k : keepers) {
    if (!(is_alternative(k.table).holds && is_central_square(k.table).holds)) {
      ++report.hypothesis_filtered;
      continue;
    }
    PredicateResult got = is_c(k.table);
    if (!got.holds)
      report.findings.push_back(
          {k.triple, k.table.digest(), "c", true, false, got.witness});
  }
  return report;
}

// For commutative G, every commutative keeper must agree with G on the C
// identity. Non-commutative keepers are excluded and counted.
inline FindingsReport verify_iso_cc(const CayleyTable& g, Shape shape, long budget,
                                    std::uint64_t seed) {
  FindingsReport report;
  report.source_digest = g.digest();
  report.shape = shape;
  report.budget = budget;
  report.vacuous = !is_commutative(g).holds;
  std::vector<Keeper> keepers = sample_shaped_isotopisms(g, shape, budget, seed);
  report.keepers = static_cast<long>(keepers.size());
  if (report.vacuous) return report;
  bool source_c = is_c(g).holds;
  for (const Keeper& k : keepers) {
    if (!is_commutative(k.table).holds) {
      ++report.hypothesis_filtered;
      continue;
    }
    PredicateResult got = is_c(k.table);
    if (got.holds != source_c)
      report.findings.push_back(
          {k.triple, k.table.digest(), "c", source_c, got.holds, got.witness});
  }
  return report;
}

// The named sources the corollary quantifies over.
inline std::vector<std::pair<std::string, CayleyTable>> corollary_fixtures() {
  std::vector<std::pair<std::string, CayleyTable>> fixtures;
  fixtures.emplace_back("d4", dihedral(4));
  fixtures.emplace_back("q8", quaternion());
  fixtures.emplace_back("o16", cayley_loop());
  fixtures.emplace_back("c2xc2", direct_product(cyclic(2), cyclic(2)));
  fixtures.emplace_back("c2xc2xc2",
                        direct_product(direct_product(cyclic(2), cyclic(2)), cyclic(2)));
  fixtures.emplace_back("q8xc2xc3",
                        direct_product(direct_product(quaternion(), cyclic(2)), cyclic(3)));
  return fixtures;
}

// Runs the alternative-central-square-implies-C check over every corollary
// fixture with the same shape, budget and seed.
inline std::vector<std::pair<std::string, FindingsReport>> verify_corollary_fixtures(
    Shape shape, long budget, std::uint64_t seed) {
  std::vector<std::pair<std::string, FindingsReport>> reports;
  for (const auto& [name, table] : corollary_fixtures())
    reports.emplace_back(name, verify_iso_c(table, shape, budget, seed));
  return reports;
}

}  // namespace centra

#endif  // CENTRA_ISOTOPY_HPP
