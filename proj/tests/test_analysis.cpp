#include <doctest.h>

#include "monovar/analysis.hpp"

using namespace monovar;

namespace {
Word W(const std::string& s) { return parse_word(s); }
Identity I(const std::string& s) { return parse_identity(s); }
}

TEST_CASE("equivalent_words always contains the word itself") {
  Monoid m = rees_quotient({W("x y x")});
  EquivResult r = equivalent_words(W("x y x"), {m});
  CHECK(r.words.count(W("x y x")) == 1);
  CHECK(!r.widened);  // Rees quotients have a proper zero
  CHECK(!r.resource);
}

TEST_CASE("isoterm verdicts") {
  Monoid mxyx = rees_quotient({W("x y x")});
  IsotermVerdict iso = is_isoterm(W("x y x"), {mxyx});
  CHECK(iso.status == IsotermVerdict::Status::IsotermWithinBounds);

  // M(x^2) is commutative, so y x is equivalent to x y
  Monoid mxx = rees_quotient({W("x x")});
  IsotermVerdict not_iso = is_isoterm(W("x y"), {mxx});
  REQUIRE(not_iso.status == IsotermVerdict::Status::NotIsoterm);
  REQUIRE(not_iso.witness.has_value());
  CHECK(*not_iso.witness == W("y x"));
  // the witness replays: M(x^2) satisfies x y = y x
  CHECK(satisfies(mxx, {W("x y"), *not_iso.witness}).holds());
}

TEST_CASE("membership via Jackson's lemma") {
  Monoid mxx = rees_quotient({W("x x")});
  MembershipVerdict v = member_MW({W("x y")}, mxx);
  REQUIRE(v.status == MembershipVerdict::Status::NonMember);
  CHECK(*v.failing_word == W("x y"));
  CHECK(*v.witness == W("y x"));

  Monoid mxyx = rees_quotient({W("x y x")});
  CHECK(member_MW({W("x y x"), W("x y")}, mxyx).status ==
        MembershipVerdict::Status::MemberWithinBounds);
}

TEST_CASE("join membership checks every factor") {
  Monoid a = rees_quotient({W("y x x t y")});
  Monoid b = rees_quotient({W("x x y t y")});
  AnalysisBounds bounds{6, 3, 500'000'000};
  MembershipVerdict v = join_membership(W("x y x t y"), {a, b}, bounds);
  CHECK(v.status == MembershipVerdict::Status::MemberWithinBounds);

  // against the first factor alone, x y x t y cannot be told apart from
  // x^2 y t y (no substitution sends both to distinct nonzero factors)
  MembershipVerdict alone = join_membership(W("x y x t y"), {a}, bounds);
  REQUIRE(alone.status == MembershipVerdict::Status::NonMember);
  CHECK(*alone.witness == W("x x y t y"));
  CHECK(satisfies(a, {W("x y x t y"), *alone.witness}).holds());
}

TEST_CASE("invertibility degree") {
  CHECK(invertibility_degree(W("x x y y"), W("x x y y")) == 0);
  CHECK(invertibility_degree(W("x x y y"), W("y y x x")) == 4);
  CHECK(invertibility_degree(W("x y x y"), W("x x y y")) == 1);
  // simple letters block swaps across them
  CHECK_THROWS_AS(invertibility_degree(W("x t y"), W("y t x")), std::invalid_argument);
  CHECK_THROWS_AS(invertibility_degree(W("x x y y"), W("x x y")), std::invalid_argument);
}

TEST_CASE("shape predicates") {
  CHECK(is_formA(I("x = x x")));
  CHECK(is_formA(I("x t_1 x = x x t_1")));
  CHECK(is_formA(I("1 = x")));
  CHECK(!is_formA(I("x y = y x")));
  CHECK(!is_formA(I("x t_1 = t_1 y")));

  CHECK(is_formB(I("x y = y x")));
  CHECK(is_formB(I("x t_1 x y t_2 = x t_1 y x t_2")));
  CHECK(!is_formB(I("x = x x")));
  CHECK(!is_formB(I("x y x = y x x")));  // three islands on the left side
}

TEST_CASE("normalization: island merging absorbs hat-Psi instances") {
  NormalForm nf = normalize_modulo_O(I("x y x t y = y x x t y"), 4);
  CHECK(nf.formA.empty());
  CHECK(nf.formB.empty());
}

TEST_CASE("normalization: count changes become formA") {
  NormalForm nf = normalize_modulo_O(I("x t x = x x t"), 4);
  REQUIRE(nf.formA.size() == 1);
  CHECK(nf.formA[0].canonical() == I("x t x = x x t").canonical());
  CHECK(nf.formB.empty());
  CHECK(is_formA(nf.formA[0]));
}

TEST_CASE("normalization: island swaps become formB") {
  NormalForm nf = normalize_modulo_O(I("x x y y t = y y x x t"), 4);
  CHECK(nf.formA.empty());
  REQUIRE(nf.formB.size() == 1);
  CHECK(is_formB(nf.formB[0]));
}

TEST_CASE("normalization: mixed identity splits into both shapes") {
  // islands swap in the first block and the x count differs in the second
  NormalForm nf = normalize_modulo_O(I("x x y y t x = y y x x t x x"), 4);
  for (const Identity& id : nf.formA) CHECK(is_formA(id));
  for (const Identity& id : nf.formB) CHECK(is_formB(id));
  CHECK(!nf.formA.empty());
  CHECK(!nf.formB.empty());
}

TEST_CASE("normalization rejects mismatched skeletons") {
  CHECK_THROWS_AS(normalize_modulo_O(I("t_1 t_2 x x = t_2 t_1 x x"), 4),
                  std::invalid_argument);
}
