#include <catch2/catch_amalgamated.hpp>

#include "centra/catalog.hpp"
#include "centra/regular.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace centra;

namespace {

Permutation translation_square(const CayleyTable& t, int x, bool left) {
  Permutation p = left ? t.left_translation(x) : t.right_translation(x);
  return compose(p, p);
}

}  // namespace

TEST_CASE("identity triple is always an autotopism", "[regular]") {
  for (const CayleyTable& t : {c_loop_12(), quaternion(), tests::l5_non_lc()})
    CHECK(is_autotopism(t, TopismTriple::identity(t.order())));
}

TEST_CASE("squared translations give autotopisms on the golden table", "[regular]") {
  CayleyTable t = c_loop_12();
  Permutation id = Permutation::identity(12);

  Permutation l6sq = translation_square(t, 6, true);
  CHECK(is_autotopism(t, TopismTriple(l6sq, id, l6sq)));

  Permutation l6 = t.left_translation(6);
  TopismTriple bad(l6, id, l6);
  CHECK_FALSE(is_autotopism(t, bad));
  auto witness = autotopism_witness(t, bad);
  REQUIRE(witness.has_value());
  CHECK(*witness == std::make_pair(3, 6));
}

TEST_CASE("autotopism check validates degrees", "[regular]") {
  CHECK_THROWS_AS(is_autotopism(c_loop_12(), TopismTriple::identity(5)),
                  OrderMismatch);
}

TEST_CASE("regular sets of a group are the full translation sets", "[regular]") {
  for (const CayleyTable& g : {cyclic(5), dihedral(4), quaternion()}) {
    int n = g.order();
    PermSet lambda = lambda_regular_set(g);
    PermSet rho = rho_regular_set(g);
    CHECK(static_cast<int>(lambda.size()) == n);
    CHECK(static_cast<int>(rho.size()) == n);
    std::vector<MuPair> mu = mu_regular_set(g);
    CHECK(static_cast<int>(mu.size()) == n);
    for (int b = 0; b < n; ++b) {
      MuPair wanted{g.right_translation(b), g.left_translation(b)};
      CHECK(std::binary_search(mu.begin(), mu.end(), wanted));
    }
  }
}

TEST_CASE("regular-set sizes equal the nucleus sizes", "[regular]") {
  std::vector<CayleyTable> corpus = random_loops(6, 15, 41);
  corpus.push_back(c_loop_12());
  corpus.push_back(cayley_loop());
  corpus.push_back(tests::l5_non_lc());
  for (const CayleyTable& t : corpus) {
    Nuclei nuc = nuclei(t);
    CHECK(lambda_regular_set(t).size() == nuc.left.size());
    CHECK(rho_regular_set(t).size() == nuc.right.size());
    CHECK(mu_regular_set(t).size() == nuc.middle.size());
  }
}

TEST_CASE("golden table regular sets", "[regular]") {
  CayleyTable t = c_loop_12();
  PermSet lambda = lambda_regular_set(t);
  CHECK(lambda.size() == 3);
  for (int x = 0; x < 12; ++x)
    CHECK(lambda.contains(translation_square(t, x, true)));

  PermSet rho = rho_regular_set(t);
  CHECK(rho.size() == 3);
  for (int x = 0; x < 12; ++x)
    CHECK(rho.contains(translation_square(t, x, false)));

  std::vector<MuPair> mu = mu_regular_set(t);
  CHECK(mu.size() == 3);
  for (int x = 0; x < 12; ++x) {
    MuPair wanted{translation_square(t, x, false), translation_square(t, x, true)};
    CHECK(std::binary_search(mu.begin(), mu.end(), wanted));
  }
}

TEST_CASE("non-LC loop misses a squared translation", "[regular]") {
  CayleyTable t = tests::l5_non_lc();
  PermSet lambda = lambda_regular_set(t);
  bool all_present = true;
  for (int x = 0; x < t.order(); ++x)
    all_present = all_present && lambda.contains(translation_square(t, x, true));
  CHECK_FALSE(all_present);

  // trivial middle nucleus: mu-regular set is exactly {(I, I)}
  std::vector<MuPair> mu = mu_regular_set(t);
  REQUIRE(mu.size() == 1);
  CHECK(mu[0].u.is_identity());
  CHECK(mu[0].adjoint.is_identity());
}

TEST_CASE("fast paths match the unrestricted brute-force filters", "[regular]") {
  std::vector<CayleyTable> corpus;
  for (const CayleyTable& t : enumerate_loops(5)) corpus.push_back(t);
  for (const CayleyTable& t : random_loops(6, 5, 99)) corpus.push_back(t);
  for (const CayleyTable& t : corpus) {
    CHECK(lambda_regular_set(t) == tests::brute_lambda_set(t));
    CHECK(rho_regular_set(t) == tests::brute_rho_set(t));
    auto brute = tests::brute_mu_pairs(t);
    std::vector<MuPair> fast = mu_regular_set(t);
    REQUIRE(fast.size() == brute.size());
    for (std::size_t i = 0; i < brute.size(); ++i) {
      CHECK(fast[i].u == brute[i].first);
      CHECK(fast[i].adjoint == brute[i].second);
    }
  }
}

TEST_CASE("border constraints hold on every brute-force member", "[regular]") {
  for (const CayleyTable& t : {cyclic(4), quaternion(), tests::l5_non_lc()}) {
    int e = t.require_loop();
    for (const Permutation& u : tests::brute_lambda_set(t))
      CHECK(u == t.left_translation(u[e]));
    for (const Permutation& v : tests::brute_rho_set(t))
      CHECK(v == t.right_translation(v[e]));
    for (const auto& [u, v] : tests::brute_mu_pairs(t)) {
      CHECK(u == t.right_translation(v[e]));
      CHECK(v == t.left_translation(u[e]));
    }
  }
}

TEST_CASE("free mu pair filter agrees with the adjoint-pinned one", "[regular]") {
  for (const CayleyTable& t : {cyclic(4), tests::l5_non_lc()}) {
    auto pinned = tests::brute_mu_pairs(t);
    auto free = tests::brute_mu_pairs_free(t);
    CHECK(pinned == free);
  }
}

TEST_CASE("theorem checks agree on every loop through order 5", "[regular]") {
  for (int n = 1; n <= 5; ++n)
    for (const CayleyTable& t : enumerate_loops(n)) {
      CHECK(check_theorem_lc_auto(t));
      CHECK(check_theorem_rc_auto(t));
      CHECK(check_theorem_c_mu(t));
    }
  CHECK(check_theorem_lc_auto(c_loop_12()));
  CHECK(check_theorem_rc_auto(c_loop_12()));
  CHECK(check_theorem_c_mu(c_loop_12()));
  CHECK(check_theorem_c_mu(cayley_loop()));
}

TEST_CASE("three-way LC agreement: identity, lambda set, autotopism triples",
          "[regular]") {
  std::vector<CayleyTable> corpus = random_loops(6, 10, 1234);
  corpus.push_back(c_loop_12());
  corpus.push_back(tests::l5_non_lc());
  for (const CayleyTable& t : corpus) {
    PermSet lambda = lambda_regular_set(t);
    Permutation id = Permutation::identity(t.order());
    bool all_in_lambda = true;
    bool all_autotopism = true;
    for (int x = 0; x < t.order(); ++x) {
      Permutation sq = translation_square(t, x, true);
      all_in_lambda = all_in_lambda && lambda.contains(sq);
      all_autotopism = all_autotopism && is_autotopism(t, TopismTriple(sq, id, sq));
    }
    CHECK(is_lc(t).holds == all_in_lambda);
    CHECK(all_in_lambda == all_autotopism);
  }
}

TEST_CASE("autotopism enumeration matches the all-triples filter", "[regular]") {
  for (int n = 1; n <= 4; ++n)
    for (const CayleyTable& t : enumerate_loops(n)) {
      AutotopismGroup got = enumerate_autotopisms(t);
      std::vector<TopismTriple> brute = tests::brute_autotopisms(t);
      REQUIRE(got.size() == brute.size());
      for (std::size_t i = 0; i < brute.size(); ++i) CHECK(got.triples[i] == brute[i]);
    }
}

TEST_CASE("autotopism group sizes", "[regular]") {
  // |Atop| of a group is |G|^2 |Aut(G)|: 4*1 for C2, 16*6 for C2xC2, 36*2
  // for C6. Confirmed against the all-triples filter above.
  CHECK(enumerate_autotopisms(cyclic(2)).size() == 4);
  CHECK(enumerate_autotopisms(direct_product(cyclic(2), cyclic(2))).size() == 96);
  CHECK(enumerate_autotopisms(cyclic(6)).size() == 72);
}

TEST_CASE("golden table autotopism group", "[regular]") {
  CayleyTable t = c_loop_12();
  AutotopismGroup group = enumerate_autotopisms(t, 12);
  CHECK(group.size() == 54);
  CHECK(group.loop_digest == t.digest());
  Permutation id = Permutation::identity(12);
  for (int x = 0; x < 12; ++x) {
    Permutation lsq = translation_square(t, x, true);
    Permutation rsq = translation_square(t, x, false);
    CHECK(group.contains(TopismTriple(lsq, id, lsq)));
    CHECK(group.contains(TopismTriple(id, rsq, rsq)));
  }
}

TEST_CASE("enumeration respects the order cap", "[regular]") {
  CHECK_THROWS_AS(enumerate_autotopisms(c_loop_12()), OrderCapExceeded);
}

TEST_CASE("autotopism group serializes in cycle notation", "[regular]") {
  nlohmann::json j = enumerate_autotopisms(cyclic(2));
  REQUIRE(j.is_array());
  REQUIRE(j.size() == 4);  // translation triples (a, b, a+b)
  CHECK(j[0]["u"] == "()");
  CHECK(j[0]["v"] == "()");
  CHECK(j[0]["w"] == "()");
  CHECK(j[1]["u"] == "()");
  CHECK(j[1]["v"] == "(0 1)");
  CHECK(j[1]["w"] == "(0 1)");
}
