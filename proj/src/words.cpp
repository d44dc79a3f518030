#include "monovar/words.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace monovar {

Letter let(std::string base) { return Letter{std::move(base), {}, {}, 0}; }
Letter let(std::string base, int sub) { return Letter{std::move(base), sub, {}, 0}; }
Letter let(std::string base, int sub, int sup) { return Letter{std::move(base), sub, sup, 0}; }
Letter primed(Letter l, int count) {
  l.primes += count;
  return l;
}

Word& Word::operator+=(const Word& w) {
  letters.insert(letters.end(), w.letters.begin(), w.letters.end());
  return *this;
}

Word& Word::operator+=(const Letter& l) {
  letters.push_back(l);
  return *this;
}

bool shortlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.letters < b.letters;
}

Word parse_word(const std::string& text) {
  Word w;
  std::size_t i = 0;
  const std::size_t n = text.size();
  auto skip_ws = [&] {
    while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto parse_int = [&](const char* what) {
    std::size_t start = i;
    if (i < n && (text[i] == '-' || text[i] == '+')) ++i;
    std::size_t digits = i;
    while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == digits) throw ParseError(std::string("expected integer after ") + what, start);
    return std::stoi(text.substr(start, i - start));
  };
  skip_ws();
  // "1" alone is the empty word.
  if (i < n && text[i] == '1') {
    std::size_t at = i;
    ++i;
    skip_ws();
    if (i != n) throw ParseError("token '1' must stand alone", at);
    return w;
  }
  while (i < n) {
    Letter l;
    std::size_t start = i;
    while (i < n && text[i] >= 'a' && text[i] <= 'z') l.base += text[i++];
    if (l.base.empty()) throw ParseError("expected letter base [a-z]+", start);
    if (i < n && text[i] == '_') {
      ++i;
      l.sub = parse_int("'_'");
    }
    if (i < n && text[i] == '^') {
      ++i;
      l.sup = parse_int("'^'");
    }
    while (i < n && text[i] == '\'') {
      ++l.primes;
      ++i;
    }
    if (i < n && !std::isspace(static_cast<unsigned char>(text[i])))
      throw ParseError("malformed token", i);
    w += l;
    skip_ws();
  }
  return w;
}

std::string render(const Letter& l) {
  std::ostringstream os;
  os << l.base;
  if (l.sub) os << '_' << *l.sub;
  if (l.sup) os << '^' << *l.sup;
  for (int i = 0; i < l.primes; ++i) os << '\'';
  return os.str();
}

std::string render(const Word& w) {
  if (w.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) os << ' ';
    os << render(w[i]);
  }
  return os.str();
}

WordStats stats(const Word& w) {
  WordStats s;
  for (const Letter& l : w.letters) ++s.occ[l];
  for (const auto& [l, c] : s.occ) {
    s.alf.insert(l);
    (c == 1 ? s.simple : s.multiple).insert(l);
  }
  return s;
}

int occ_count(const Word& w, const Letter& x) {
  return static_cast<int>(std::count(w.letters.begin(), w.letters.end(), x));
}

Word erase_letters(const Word& w, const LetterSet& z) {
  Word r;
  for (const Letter& l : w.letters)
    if (!z.count(l)) r += l;
  return r;
}

Word keep_letters(const Word& w, const LetterSet& z) {
  Word r;
  for (const Letter& l : w.letters)
    if (z.count(l)) r += l;
  return r;
}

namespace {
std::size_t occurrence_position(const Word& w, const Letter& x, int i) {
  int seen = 0;
  for (std::size_t p = 0; p < w.size(); ++p) {
    if (w[p] == x && ++seen == i) return p;
  }
  throw std::out_of_range("occurrence " + std::to_string(i) + " of letter '" + render(x) +
                          "' is out of range");
}
}  // namespace

bool occurrence_precedes(const Word& w, const Letter& x, int i, const Letter& y, int j) {
  if (i < 1 || j < 1) throw std::out_of_range("occurrence indices are 1-based");
  return occurrence_position(w, x, i) < occurrence_position(w, y, j);
}

Word Decomposition::reassemble() const {
  Word w;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    w += blocks[i];
    if (i < simple_seq.size()) w += simple_seq[i];
  }
  return w;
}

Decomposition decomposition(const Word& w) {
  WordStats s = stats(w);
  Decomposition d;
  Word block;
  for (const Letter& l : w.letters) {
    if (s.simple.count(l)) {
      d.blocks.push_back(std::move(block));
      block = Word{};
      d.simple_seq.push_back(l);
    } else {
      block += l;
    }
  }
  d.blocks.push_back(std::move(block));
  return d;
}

std::vector<Island> islands(const Word& w, const Letter& x) {
  std::vector<Island> r;
  std::size_t i = 0;
  while (i < w.size()) {
    if (w[i] == x) {
      std::size_t start = i;
      while (i < w.size() && w[i] == x) ++i;
      r.push_back({start, i - start});
    } else {
      ++i;
    }
  }
  return r;
}

std::vector<Word> factors(const Word& w) {
  WordSet set;
  set.insert(Word{});
  for (std::size_t i = 0; i < w.size(); ++i) {
    Word f;
    for (std::size_t j = i; j < w.size(); ++j) {
      f += w[j];
      set.insert(f);
    }
  }
  return {set.begin(), set.end()};
}

bool is_factor(const Word& u, const Word& w) {
  return count_factor_occurrences(u, w) > 0 || u.empty();
}

int count_factor_occurrences(const Word& u, const Word& w) {
  if (u.empty()) return static_cast<int>(w.size()) + 1;
  if (u.size() > w.size()) return 0;
  int count = 0;
  for (std::size_t i = 0; i + u.size() <= w.size(); ++i) {
    if (std::equal(u.letters.begin(), u.letters.end(), w.letters.begin() + i)) ++count;
  }
  return count;
}

bool is_square_free(const Word& w) {
  // uu is a factor iff some position starts two equal adjacent runs.
  for (std::size_t len = 1; 2 * len <= w.size(); ++len) {
    for (std::size_t i = 0; i + 2 * len <= w.size(); ++i) {
      if (std::equal(w.letters.begin() + i, w.letters.begin() + i + len,
                     w.letters.begin() + i + len))
        return false;
    }
  }
  return true;
}

bool length2_factors_unique(const Word& w) {
  std::map<std::pair<Letter, Letter>, int> seen;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (++seen[{w[i], w[i + 1]}] > 1) return false;
  }
  return true;
}

Word reverse(const Word& w) {
  Word r = w;
  std::reverse(r.letters.begin(), r.letters.end());
  return r;
}

Word concat(const std::vector<Word>& parts) {
  Word w;
  for (const Word& p : parts) w += p;
  return w;
}

Word power(const Letter& x, int n) {
  Word w;
  for (int i = 0; i < n; ++i) w += x;
  return w;
}

Word power(const Word& w, int n) {
  Word r;
  for (int i = 0; i < n; ++i) r += w;
  return r;
}

}  // namespace monovar
