#include <doctest.h>

#include "monovar/words.hpp"

using namespace monovar;

namespace {
Word W(const std::string& s) { return parse_word(s); }
}

TEST_CASE("letter construction and rendering") {
  CHECK(render(let("x")) == "x");
  CHECK(render(let("z", 3)) == "z_3");
  CHECK(render(let("z", 1, 2)) == "z_1^2");
  CHECK(render(primed(let("s", 1))) == "s_1'");
  CHECK(let("x") < let("y"));
  CHECK(let("z", 1) < let("z", 2));
}

TEST_CASE("word parsing round-trips") {
  for (const std::string s : {"x", "x y x", "z_1 t_1 x z_1 z_2 x t_2 z_2", "s_1' x^2 y"}) {
    CHECK(render(parse_word(s)) == s);
  }
  CHECK(parse_word("1").empty());
  CHECK(parse_word("").empty());
  CHECK(render(Word{}) == "1");
  CHECK_THROWS_AS(parse_word("x ("), ParseError);
  CHECK_THROWS_AS(parse_word("X"), ParseError);
}

TEST_CASE("shortlex order") {
  CHECK(shortlex_less(W("x"), W("y")));
  CHECK(shortlex_less(W("y"), W("x x")));
  CHECK(shortlex_less(W("x y"), W("y x")));
  CHECK(!shortlex_less(W("x"), W("x")));
  CHECK(shortlex_less(Word{}, W("x")));
}

TEST_CASE("stats, occurrences, projections") {
  Word w = W("x y x");
  WordStats s = stats(w);
  CHECK(s.alf == LetterSet{let("x"), let("y")});
  CHECK(s.occ.at(let("x")) == 2);
  CHECK(s.occ.at(let("y")) == 1);
  CHECK(s.simple == LetterSet{let("y")});
  CHECK(s.multiple == LetterSet{let("x")});
  CHECK(occ_count(w, let("x")) == 2);
  CHECK(occ_count(w, let("z")) == 0);
  CHECK(erase_letters(w, {let("x")}) == W("y"));
  CHECK(keep_letters(w, {let("x")}) == W("x x"));
}

TEST_CASE("occurrence precedence") {
  Word w = W("x y x");
  CHECK(occurrence_precedes(w, let("x"), 1, let("y"), 1));
  CHECK(!occurrence_precedes(w, let("x"), 2, let("y"), 1));
  CHECK_THROWS_AS(occurrence_precedes(w, let("x"), 3, let("y"), 1), std::out_of_range);
}

TEST_CASE("decomposition into blocks and simple letters") {
  Word w = W("x z x y t y");
  Decomposition d = decomposition(w);
  REQUIRE(d.simple_seq.size() == 2);
  CHECK(d.simple_seq[0] == let("z"));
  CHECK(d.simple_seq[1] == let("t"));
  REQUIRE(d.blocks.size() == 3);
  CHECK(d.blocks[0] == W("x"));
  CHECK(d.blocks[1] == W("x y"));
  CHECK(d.blocks[2] == W("y"));
  CHECK(d.reassemble() == w);

  Decomposition e = decomposition(W("x x"));
  CHECK(e.simple_seq.empty());
  REQUIRE(e.blocks.size() == 1);
  CHECK(e.blocks[0] == W("x x"));
}

TEST_CASE("islands") {
  Word w = W("x x y x");
  auto is = islands(w, let("x"));
  REQUIRE(is.size() == 2);
  CHECK(is[0] == Island{0, 2});
  CHECK(is[1] == Island{3, 1});
  CHECK(islands(w, let("z")).empty());
}

TEST_CASE("factors: count, order, membership") {
  auto f = factors(W("x y x"));
  REQUIRE(f.size() == 6);  // 1, x, y, xy, yx, xyx
  CHECK(f[0] == Word{});
  CHECK(f[1] == W("x"));
  CHECK(f[2] == W("y"));
  CHECK(f[3] == W("x y"));
  CHECK(f[4] == W("y x"));
  CHECK(f[5] == W("x y x"));
  CHECK(is_factor(W("y x"), W("x y x")));
  CHECK(!is_factor(W("x x"), W("x y x")));
  CHECK(count_factor_occurrences(W("x"), W("x y x")) == 2);
  CHECK(count_factor_occurrences(Word{}, W("x y x")) == 4);
}

TEST_CASE("square-freeness and unique length-2 factors") {
  CHECK(is_square_free(W("x y x")));
  CHECK(!is_square_free(W("x x")));
  CHECK(!is_square_free(W("x y x y")));
  CHECK(length2_factors_unique(W("x y x")));
  CHECK(!length2_factors_unique(W("x y x y")));
  CHECK(length2_factors_unique(W("x")));
}

TEST_CASE("reverse, concat, power") {
  CHECK(reverse(W("x y t x z_1 y t_1 z_1")) == W("z_1 t_1 y z_1 x t y x"));
  CHECK(concat({W("x"), W("y"), Word{}}) == W("x y"));
  CHECK(power(let("x"), 3) == W("x x x"));
  CHECK(power(W("x y"), 2) == W("x y x y"));
  CHECK(power(let("x"), 0) == Word{});
}
