#include <doctest.h>

#include "monovar/monoids.hpp"

using namespace monovar;

namespace {
Word W(const std::string& s) { return parse_word(s); }
Identity I(const std::string& s) { return parse_identity(s); }
}

TEST_CASE("rees_quotient of x y x has seven elements") {
  Monoid m = rees_quotient({W("x y x")});
  CHECK(m.kind == Monoid::Kind::Rees);
  CHECK(m.core.size == 7);  // 1, x, y, xy, yx, xyx, 0
  CHECK(m.core.one == 0);
  REQUIRE(m.core.zero.has_value());
  CHECK(*m.core.zero == 6);
  CHECK(m.core.is_associative());
  // concatenation when the result is a factor, zero otherwise
  int x = 1, y = 2, xy = 3, yx = 4, xyx = 5, zero = 6;
  CHECK(m.core.labels[x] == W("x"));
  CHECK(m.core.labels[xy] == W("x y"));
  CHECK(m.core.mul(x, y) == xy);
  CHECK(m.core.mul(xy, x) == xyx);
  CHECK(m.core.mul(x, x) == zero);
  CHECK(m.core.mul(xyx, x) == zero);
  CHECK(m.core.mul(0, yx) == yx);
}

TEST_CASE("rees_quotient edge cases") {
  CHECK(rees_quotient({}).core.size == 2);  // {1, 0}
  CHECK(rees_quotient({W("x y")}).core.size == 5);
  CHECK(rees_quotient({W("x x")}).core.size == 4);
  // factors: 1, x, y, xx, xy, yx, xyx, plus zero
  CHECK(rees_quotient({W("x x"), W("x y x")}).core.size == 8);
}

TEST_CASE("eval with an explicit assignment") {
  Monoid m = rees_quotient({W("x y")});
  std::map<Letter, int> phi{{let("a"), 1}, {let("b"), 2}};  // a -> x, b -> y
  CHECK(m.core.eval(W("a b"), phi) == 3);                   // xy
  CHECK(m.core.eval(W("b a"), phi) == *m.core.zero);
  CHECK(m.core.eval(Word{}, phi) == m.core.one);
}

TEST_CASE("satisfies_bruteforce on small Rees quotients") {
  Monoid mxyx = rees_quotient({W("x y x")});
  CHECK(satisfies_bruteforce(mxyx.core, I("x x = x x x")).holds());

  Monoid mxx = rees_quotient({W("x x")});
  SatVerdict v = satisfies_bruteforce(mxx.core, I("x x = x x x"));
  REQUIRE(v.status == SatVerdict::Status::Fails);
  REQUIRE(v.witness.has_value());
  CHECK(v.witness->at(let("x")) == 1);  // the generator x itself

  // commutative monoid: M(x^2) is powers of x plus zero
  CHECK(satisfies_bruteforce(mxx.core, I("x y = y x")).holds());
  CHECK(!satisfies_bruteforce(mxyx.core, I("x y = y x")).holds());
}

TEST_CASE("satisfies_rees agrees with brute force on a mini corpus") {
  std::vector<std::vector<Word>> gens = {
      {W("x y")}, {W("x y x")}, {W("x x")}, {W("x x y")}, {W("x x"), W("y")}};
  std::vector<Identity> ids = {I("x x = x x x"), I("x y = y x"), I("x x y = y x x"),
                               I("x y x = x x y"), I("x = x x")};
  for (const auto& g : gens) {
    Monoid m = rees_quotient(g);
    for (const Identity& id : ids) {
      SatVerdict a = satisfies_rees(m, id);
      SatVerdict b = satisfies_bruteforce(m.core, id);
      CHECK(a.status == b.status);
    }
  }
}

TEST_CASE("direct products") {
  Monoid a = rees_quotient({W("x y")});
  Monoid b = rees_quotient({W("x x")});
  Monoid p = direct_product(a, b);
  CHECK(p.kind == Monoid::Kind::Product);
  CHECK(p.core.size == a.core.size * b.core.size);
  CHECK(p.core.is_associative());
  REQUIRE(p.core.zero.has_value());
  // the product satisfies exactly the common identities
  Identity id = I("x x = x x x");
  CHECK(satisfies(a, id).holds());
  CHECK(!satisfies(b, id).holds());
  CHECK(!satisfies(p, id).holds());
  CHECK(satisfies(p, I("x x x = x x x x")).holds());
}

TEST_CASE("dual monoids") {
  Monoid m = rees_quotient({W("x y x")});
  Monoid d = dual_monoid(m);
  CHECK(d.kind == Monoid::Kind::Dual);
  for (int i = 0; i < m.core.size; ++i)
    for (int j = 0; j < m.core.size; ++j) CHECK(d.core.mul(i, j) == m.core.mul(j, i));
  Identity id = I("x x y = y x x");
  CHECK(satisfies(m, id).status == satisfies(d, dual(id)).status);
}

TEST_CASE("class predicates") {
  Monoid mxyx = rees_quotient({W("x y x")});
  CHECK(is_aperiodic(mxyx.core));
  CHECK(has_central_idempotents(mxyx.core));
  CHECK(in_Acen_class(mxyx.core));
  CHECK(idempotent_index(rees_quotient({W("x x")}).core) == 3);
  CHECK(idempotent_index(rees_quotient({}).core) == 1);
}

TEST_CASE("presentation membership") {
  VarietyPresentation p2 = presentation(Family::P, false, 2);
  Monoid mxyx = rees_quotient({W("x y x")});
  CHECK(satisfies_presentation(mxyx, p2, 3).status ==
        PresentationVerdict::Status::MemberWithinBound);

  Monoid mxx = rees_quotient({W("x x")});
  PresentationVerdict v = satisfies_presentation(mxx, p2, 3);
  REQUIRE(v.status == PresentationVerdict::Status::NonMember);
  REQUIRE(v.failed_identity.has_value());
  CHECK(*v.failed_identity == I("x x = x x x"));
  CHECK(v.witness.has_value());
}

TEST_CASE("json round-trip") {
  Monoid m = rees_quotient({W("x y x")});
  std::string text = monoid_to_json(m.core);
  FiniteMonoid back = monoid_from_json(text);
  CHECK(back.size == m.core.size);
  CHECK(back.table == m.core.table);
  CHECK(back.one == m.core.one);
  CHECK(back.zero == m.core.zero);
  CHECK(monoid_to_json(back) == text);  // byte-stable
}

TEST_CASE("table cache round-trip") {
  std::string dir = "./monovar-test-cache";
  Monoid a = rees_quotient({W("x y x")}, dir);
  Monoid b = rees_quotient({W("x y x")}, dir);  // second build hits the cache
  CHECK(a.core.table == b.core.table);
  CHECK(a.core.labels == b.core.labels);
}
