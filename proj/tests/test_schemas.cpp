#include <doctest.h>

#include "monovar/schemas.hpp"

using namespace monovar;

namespace {
Word W(const std::string& s) { return parse_word(s); }
Identity I(const std::string& s) { return parse_identity(s); }
const PermTable kRho22{{1, 3, 2, 4}};
const PermTable kRho11iii{{3, 1, 4, 2, 5}};
}

TEST_CASE("permutation tables") {
  CHECK(identity_perm(3) == PermTable{{1, 2, 3}});
  CHECK(all_permutations(3).size() == 6);
  CHECK(all_permutations(0).size() == 1);
  CHECK(all_permutations(3).front() == PermTable{{1, 2, 3}});
  CHECK(!PermTable{{1, 1}}.is_valid());
}

TEST_CASE("(n,m)-permutation enumeration") {
  CHECK(enum_S(1, 1).size() == 2);
  CHECK(enum_S(2, 1).size() == 2);
  CHECK(enum_S(1, 2).size() == 2);
  CHECK(enum_S(2, 2).size() == 8);
  CHECK(enum_S(2, 0).size() == 0);
  CHECK(enum_S(0, 1).size() == 1);   // vacuous alternation
  CHECK(enum_S(0, 0).size() == 1);   // the empty table
  CHECK(enum_S(3, 3).size() == 2 * 6 * 6);
  CHECK(enum_S(2, 3).size() == 2 * 6);  // n!(n+1)! for m = n+1
  CHECK(is_nm_permutation(kRho22, 2, 2));
  CHECK(!is_nm_permutation(identity_perm(4), 2, 2));
}

TEST_CASE("a-family words at the smallest parameters") {
  PermTable id2 = identity_perm(2);
  CHECK(word_a(1, 1, id2) == W("z_1 t_1 x z_1 z_2 x t_2 z_2"));
  CHECK(word_a_prime(1, 1, id2) == W("z_1 t_1 z_1 z_2 x x t_2 z_2"));
  CHECK(word_a_dprime(1, 1, id2) == W("z_1 t_1 x x z_1 z_2 t_2 z_2"));
  CHECK(word_a_pq(1, 1, id2, 0, 2) == word_a(1, 1, id2));
  CHECK(word_a_pq(1, 1, id2, 2, 2) == word_a_prime(1, 1, id2));
  CHECK(word_a_pq(1, 1, id2, 0, 0) == word_a_dprime(1, 1, id2));
  CHECK(word_a_pq(1, 1, id2, 1, 2) == W("z_1 t_1 z_1 x z_2 x t_2 z_2"));
}

TEST_CASE("c- and d-family words at the smallest parameters") {
  PermTable one = identity_perm(1);
  CHECK(word_c(0, 0, 1, one) == W("x y t x z_1 y t_1 z_1"));
  CHECK(word_c_prime(0, 0, 1, one) == W("y x t x z_1 y t_1 z_1"));
  CHECK(word_d(0, 0, 1, one) == reverse(word_c(0, 0, 1, one)));
  CHECK(word_d(0, 0, 1, one) == W("z_1 t_1 y z_1 x t y x"));
  CHECK(word_d_prime(0, 0, 1, one) == reverse(word_c_prime(0, 0, 1, one)));
}

TEST_CASE("swap_first_occurrences") {
  CHECK(swap_first_occurrences(W("x y t x y"), let("x"), let("y")) == W("y x t x y"));
}

TEST_CASE("explicit identity sets") {
  auto phi2 = phi_set(2);
  REQUIRE(phi2.size() == 2);
  CHECK(phi2[0] == I("x x = x x x"));
  CHECK(phi2[1] == I("x x y = y x x"));
  CHECK(omega_identity(2) == I("x t_1 x t_2 x = x x x t_1 t_2"));
  CHECK(sigma_identity(1) == I("x y z x t y = y x z x t y"));
  CHECK(sigma_identity(2) == I("x z y t x y = x z y t y x"));
  CHECK(sigma_identity(3) == I("x z x y t y = x z y x t y"));
  CHECK_THROWS_AS(sigma_identity(4), std::invalid_argument);
  CHECK(psi1_hat() ==
        std::vector<Identity>{I("x y x t y = y x x t y"), I("y t x y x = y t y x x")});
  CHECK(psi2_hat() ==
        std::vector<Identity>{I("x y x t y = x x y t y"), I("y t x y x = y t x x y")});
}

TEST_CASE("schema instance counts") {
  CHECK(psi1(2).size() == 2);
  CHECK(psi1(4).size() == 86);
  CHECK(psi3(4).size() == 156);
  for (const Identity& id : psi1(2)) {
    CHECK(!id.is_trivial());
  }
  // every Psi_2 member is a dual of a Psi_1 member modulo renaming
  auto p1 = psi1(2);
  for (const Identity& id : psi2(2)) {
    bool hit = false;
    for (const Identity& cand : p1)
      if (equal_up_to_renaming(dual(id), cand)) hit = true;
    CHECK(hit);
  }
}

TEST_CASE("variety presentations") {
  VarietyPresentation p2 = presentation(Family::P, false, 2);
  auto ids = p2.expand(2);
  bool has_phi = false;
  for (const Identity& id : ids)
    if (id.canonical() == I("x x = x x x").canonical()) has_phi = true;
  CHECK(has_phi);
  CHECK(p2.expand(2).size() < p2.expand(4).size());

  VarietyPresentation p2d = presentation(Family::P, true, 2);
  CHECK(p2d.name != p2.name);

  VarietyPresentation n = presentation(Family::N, false, 2);
  CHECK(!n.expand(2).empty());
  VarietyPresentation o = presentation(Family::O, false, 2);
  CHECK(o.explicit_ids.empty());

  VarietyPresentation r2 = presentation(Family::R, false, 2);
  bool has_omega = false;
  for (const Identity& id : r2.expand(2))
    if (id.canonical() == omega_identity(2).canonical()) has_omega = true;
  CHECK(has_omega);
}

TEST_CASE("a_k construction and its substitution") {
  Word a3 = word_ak(2, 2, kRho22, 3);
  Word a4 = word_ak(2, 2, kRho22, 4);
  CHECK(apply(subst_psi_a(2, 2, kRho22, 3), a3) + ak_q(2, 2, 4) == a4);
  CHECK(is_square_free(a3));
  CHECK(length2_factors_unique(a3));
  CHECK_THROWS_AS(word_ak(1, 2, kRho22, 3), std::invalid_argument);
  CHECK_THROWS_AS(word_ak(2, 2, kRho22, 2), std::invalid_argument);

  Word rhs = strictness_rhs_a(a4);
  CHECK(rhs.size() == a4.size());  // one x_1 deleted, two prepended... net +0? checked below
  CHECK(occ_count(rhs, let("x", 1)) == 2);
  CHECK(rhs[0] == let("x", 1));
  CHECK(rhs[1] == let("x", 1));
}

TEST_CASE("c_k construction and its substitution") {
  PermTable id4 = identity_perm(4);
  for (int k : {0, 1}) {
    Word ck = word_ck(CkCase::II, 2, 2, id4, k);
    Word next = word_ck(CkCase::II, 2, 2, id4, k + 1);
    CHECK(apply(subst_psi_c(CkCase::II, 2, 2, id4, k), ck) +
              ck_psi_tail(CkCase::II, 2, 2, k) ==
          next);
    CHECK(ck_psi_tail(CkCase::II, 2, 2, k).empty());
  }
  for (int k : {0, 1}) {
    Word ck = word_ck(CkCase::III, 1, 1, kRho11iii, k);
    Word next = word_ck(CkCase::III, 1, 1, kRho11iii, k + 1);
    CHECK(apply(subst_psi_c(CkCase::III, 1, 1, kRho11iii, k), ck) +
              ck_psi_tail(CkCase::III, 1, 1, k) ==
          next);
    CHECK(!ck_psi_tail(CkCase::III, 1, 1, k).empty());
  }
  Word c0 = word_ck(CkCase::II, 2, 2, id4, 0);
  CHECK(is_square_free(c0));
  CHECK(length2_factors_unique(c0));
  Word swapped = strictness_rhs_c(c0);
  CHECK(swapped != c0);
  CHECK(swapped.size() == c0.size());
}
