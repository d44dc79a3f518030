#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace monovar {

/// A structured alphabet symbol: a lowercase base name, optional integer
/// subscript and superscript, and a prime count.  Decorated letters like
/// z_3^(2) or y'_1 are all values of this one type.
struct Letter {
  std::string base;
  std::optional<int> sub;
  std::optional<int> sup;
  int primes = 0;

  auto operator<=>(const Letter&) const = default;
};

Letter let(std::string base);
Letter let(std::string base, int sub);
Letter let(std::string base, int sub, int sup);
Letter primed(Letter l, int count = 1);

/// Finite sequence of letters; the empty word is the monoid identity.
struct Word {
  std::vector<Letter> letters;

  Word() = default;
  explicit Word(std::vector<Letter> ls) : letters(std::move(ls)) {}

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
  const Letter& operator[](std::size_t i) const { return letters[i]; }

  Word& operator+=(const Word& w);
  Word& operator+=(const Letter& l);
  friend Word operator+(Word a, const Word& b) { return a += b; }
  friend Word operator+(Word a, const Letter& b) { return a += b; }

  bool operator==(const Word&) const = default;
};

/// Shortlex: length first, then lexicographic on letters.  This is the
/// canonical total order used everywhere a deterministic choice is needed.
bool shortlex_less(const Word& a, const Word& b);

struct WordShortlexLess {
  bool operator()(const Word& a, const Word& b) const { return shortlex_less(a, b); }
};

using LetterSet = std::set<Letter>;
using WordSet = std::set<Word, WordShortlexLess>;

struct ParseError : std::runtime_error {
  std::size_t offset;
  ParseError(const std::string& msg, std::size_t off)
      : std::runtime_error(msg), offset(off) {}
};

/// Token grammar: base [ "_" int ] [ "^" int ] { "'" }, base = [a-z]+.
/// Words are whitespace-separated tokens; the empty word renders as "1"
/// and is accepted as empty input or the single token "1".
Word parse_word(const std::string& text);
std::string render(const Letter& l);
std::string render(const Word& w);

struct WordStats {
  LetterSet alf;
  std::map<Letter, int> occ;
  LetterSet simple;
  LetterSet multiple;
};

WordStats stats(const Word& w);
int occ_count(const Word& w, const Letter& x);

/// w_Z: remove every occurrence of letters in Z.
Word erase_letters(const Word& w, const LetterSet& z);
/// w(Z): keep only occurrences of letters in Z.
Word keep_letters(const Word& w, const LetterSet& z);

/// True iff the i-th occurrence of x precedes the j-th occurrence of y
/// (occurrences are 1-based).  Throws std::out_of_range when an occurrence
/// index exceeds the occurrence count.
bool occurrence_precedes(const Word& w, const Letter& x, int i, const Letter& y, int j);

/// w = blocks[0] t_1 blocks[1] ... t_m blocks[m] where t_1..t_m are the
/// simple letters of w in order and blocks contain only multiple letters.
struct Decomposition {
  std::vector<Word> blocks;
  std::vector<Letter> simple_seq;

  Word reassemble() const;
};

Decomposition decomposition(const Word& w);

/// Maximal run of a single letter.
struct Island {
  std::size_t start;
  std::size_t length;
  bool operator==(const Island&) const = default;
};

std::vector<Island> islands(const Word& w, const Letter& x);

/// All contiguous subwords, deduplicated, in shortlex order.  Includes the
/// empty word and w itself.
std::vector<Word> factors(const Word& w);
bool is_factor(const Word& u, const Word& w);
int count_factor_occurrences(const Word& u, const Word& w);
bool is_square_free(const Word& w);
bool length2_factors_unique(const Word& w);
Word reverse(const Word& w);

Word concat(const std::vector<Word>& parts);
Word power(const Letter& x, int n);
Word power(const Word& w, int n);

}  // namespace monovar
