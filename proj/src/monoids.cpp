#include "monovar/monoids.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace monovar {

bool FiniteMonoid::is_associative() const {
  for (int a = 0; a < size; ++a)
    for (int b = 0; b < size; ++b)
      for (int c = 0; c < size; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) return false;
  return true;
}

int FiniteMonoid::eval(const Word& w, const std::map<Letter, int>& phi) const {
  int acc = one;
  for (const Letter& l : w.letters) acc = mul(acc, phi.at(l));
  return acc;
}

bool is_aperiodic(const FiniteMonoid& m) {
  for (int a = 0; a < m.size; ++a) {
    int p = a;
    bool stable = false;
    for (int k = 1; k <= m.size + 1; ++k) {
      int next = m.mul(p, a);
      if (next == p) {
        stable = true;
        break;
      }
      p = next;
    }
    if (!stable) return false;
  }
  return true;
}

bool has_central_idempotents(const FiniteMonoid& m) {
  for (int e = 0; e < m.size; ++e) {
    if (m.mul(e, e) != e) continue;
    for (int x = 0; x < m.size; ++x)
      if (m.mul(e, x) != m.mul(x, e)) return false;
  }
  return true;
}

bool in_Acen_class(const FiniteMonoid& m) {
  return is_aperiodic(m) && has_central_idempotents(m);
}

int idempotent_index(const FiniteMonoid& m) {
  int idx = 1;
  for (int a = 0; a < m.size; ++a) {
    int p = a;
    for (int k = 1; k <= m.size + 1; ++k) {
      int next = m.mul(p, a);
      if (next == p) {
        idx = std::max(idx, k);
        break;
      }
      p = next;
    }
  }
  return idx;
}

// --- JSON -------------------------------------------------------------------

namespace {

nlohmann::json monoid_to_json_obj(const FiniteMonoid& m) {
  nlohmann::json j;
  j["elements"] = nlohmann::json::array();
  for (const Word& w : m.labels) j["elements"].push_back(render(w));
  j["one"] = m.one;
  if (m.zero)
    j["zero"] = *m.zero;
  else
    j["zero"] = nullptr;
  auto rows = nlohmann::json::array();
  for (int a = 0; a < m.size; ++a) {
    auto row = nlohmann::json::array();
    for (int b = 0; b < m.size; ++b) row.push_back(m.mul(a, b));
    rows.push_back(std::move(row));
  }
  j["table"] = std::move(rows);
  return j;
}

FiniteMonoid monoid_from_json_obj(const nlohmann::json& j) {
  FiniteMonoid m;
  const auto& rows = j.at("table");
  m.size = static_cast<int>(rows.size());
  m.table.resize(static_cast<std::size_t>(m.size) * m.size);
  for (int a = 0; a < m.size; ++a)
    for (int b = 0; b < m.size; ++b) m.table[a * m.size + b] = rows[a][b].get<int>();
  m.one = j.at("one").get<int>();
  if (!j.at("zero").is_null()) m.zero = j.at("zero").get<int>();
  for (const auto& e : j.at("elements")) m.labels.push_back(parse_word(e.get<std::string>()));
  return m;
}

}  // namespace

std::string monoid_to_json(const FiniteMonoid& m) { return monoid_to_json_obj(m).dump(2); }

FiniteMonoid monoid_from_json(const std::string& text) {
  return monoid_from_json_obj(nlohmann::json::parse(text));
}

// --- Construction -----------------------------------------------------------

namespace {

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string cache_key(const std::vector<Word>& W) {
  WordSet sorted(W.begin(), W.end());
  std::string s;
  for (const Word& w : sorted) {
    s += render(w);
    s += '\n';
  }
  std::ostringstream os;
  os << std::hex << fnv1a(s);
  return os.str();
}

std::string effective_cache_dir(const std::string& cache_dir) {
  if (!cache_dir.empty()) return cache_dir;
  if (const char* env = std::getenv("MONOVAR_CACHE_DIR")) return env;
  return "";
}

FiniteMonoid build_rees_table(const std::vector<Word>& W) {
  WordSet factor_set;
  factor_set.insert(Word{});
  for (const Word& w : W)
    for (const Word& f : factors(w)) factor_set.insert(f);
  FiniteMonoid m;
  m.labels.assign(factor_set.begin(), factor_set.end());
  m.size = static_cast<int>(m.labels.size()) + 1;
  const int zero = m.size - 1;
  m.one = 0;  // the empty word is shortlex-minimal
  m.zero = zero;
  m.labels.push_back(Word{});  // placeholder label for the zero element

  std::map<Word, int, WordShortlexLess> index;
  for (int i = 0; i < zero; ++i) index[m.labels[i]] = i;

  m.table.assign(static_cast<std::size_t>(m.size) * m.size, zero);
  for (int a = 0; a < zero; ++a) {
    for (int b = 0; b < zero; ++b) {
      Word prod = m.labels[a] + m.labels[b];
      auto it = index.find(prod);
      m.table[a * m.size + b] = it == index.end() ? zero : it->second;
    }
  }
  return m;
}

}  // namespace

Monoid rees_quotient(const std::vector<Word>& W, const std::string& cache_dir) {
  Monoid m;
  m.kind = Monoid::Kind::Rees;
  m.rees_words = W;

  const std::string dir = effective_cache_dir(cache_dir);
  std::filesystem::path path;
  if (!dir.empty()) {
    path = std::filesystem::path(dir) / ("rees-" + cache_key(W) + ".json");
    std::error_code ec;
    if (std::filesystem::exists(path, ec)) {
      try {
        std::ifstream in(path);
        std::stringstream buf;
        buf << in.rdbuf();
        m.core = monoid_from_json(buf.str());
        return m;
      } catch (...) {
        // fall through to a fresh build; the cache is only an optimization
      }
    }
  }

  m.core = build_rees_table(W);

  if (!path.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
    std::ofstream out(path);
    if (out) out << monoid_to_json(m.core);
  }
  return m;
}

Monoid table_monoid(FiniteMonoid core) {
  Monoid m;
  m.kind = Monoid::Kind::Table;
  m.core = std::move(core);
  return m;
}

Monoid direct_product(const Monoid& a, const Monoid& b) {
  Monoid m;
  m.kind = Monoid::Kind::Product;
  m.parts = {std::make_shared<const Monoid>(a), std::make_shared<const Monoid>(b)};
  const FiniteMonoid& A = a.core;
  const FiniteMonoid& B = b.core;
  FiniteMonoid& C = m.core;
  C.size = A.size * B.size;
  C.one = A.one * B.size + B.one;
  if (A.zero && B.zero) C.zero = *A.zero * B.size + *B.zero;
  C.table.resize(static_cast<std::size_t>(C.size) * C.size);
  for (int i = 0; i < A.size; ++i)
    for (int j = 0; j < B.size; ++j)
      for (int k = 0; k < A.size; ++k)
        for (int l = 0; l < B.size; ++l)
          C.table[(i * B.size + j) * C.size + (k * B.size + l)] =
              A.mul(i, k) * B.size + B.mul(j, l);
  return m;
}

Monoid dual_monoid(const Monoid& m) {
  Monoid d;
  d.kind = Monoid::Kind::Dual;
  d.base = std::make_shared<const Monoid>(m);
  d.core = m.core;
  for (int a = 0; a < d.core.size; ++a)
    for (int b = 0; b < d.core.size; ++b)
      d.core.table[a * d.core.size + b] = m.core.mul(b, a);
  return d;
}

// --- Satisfaction ------------------------------------------------------------

SatVerdict satisfies_bruteforce(const FiniteMonoid& m, const Identity& id,
                                SearchBudget* budget) {
  LetterSet alf = stats(id.lhs + id.rhs).alf;
  std::vector<Letter> letters(alf.begin(), alf.end());
  const int k = static_cast<int>(letters.size());
  std::vector<int> assign(k, 0);
  std::map<Letter, int> phi;
  while (true) {
    if (budget && !budget->tick()) return {SatVerdict::Status::Resource, std::nullopt};
    for (int i = 0; i < k; ++i) phi[letters[i]] = assign[i];
    if (m.eval(id.lhs, phi) != m.eval(id.rhs, phi))
      return {SatVerdict::Status::Fails, phi};
    int i = k - 1;
    while (i >= 0 && ++assign[i] == m.size) assign[i--] = 0;
    if (i < 0) break;
  }
  return {SatVerdict::Status::Holds, std::nullopt};
}

namespace {

// One direction of the Rees satisfaction check.  Outside a common prefix and
// suffix the two sides are identical letter sequences, so by free-monoid
// cancellation a substitution phi with phi(s) a nonzero factor violates the
// identity iff the images of the differing cores disagree (or, when t has
// letters s lacks, iff some assignment of those letters makes the evaluations
// differ).  Only letters that can influence this — letters with several
// occurrences in s and letters of either core — need individual images; runs
// of the remaining letters absorb arbitrary segments of the target.
struct ReesDirection {
  const FiniteMonoid& core;
  const std::vector<Word>& gens;
  const std::map<Word, int, WordShortlexLess>& index;
  SearchBudget* budget;

  ReesDirection(const FiniteMonoid& c, const std::vector<Word>& g,
                const std::map<Word, int, WordShortlexLess>& idx, SearchBudget* b)
      : core(c), gens(g), index(idx), budget(b) {}

  Word s, t, s_core, t_core;
  std::map<Letter, int> occ_s;     // occurrence counts in s
  std::vector<Letter> extras;      // letters of t that do not occur in s
  LetterSet core_letters;          // alf(s_core) ∪ alf(t_core), restricted to s
  std::vector<Letter> tok_letter;  // occurrences of "interesting" letters in s
  std::vector<bool> tok_flex;      // an absorbing gap precedes this token
  std::vector<int> tok_pos;        // position of the occurrence inside s

  std::map<Letter, Word> img;
  std::vector<std::pair<int, int>> placed;  // [start,end) per matched token
  const Word* w = nullptr;
  int unbound_core = 0;
  std::optional<std::map<Letter, int>> witness;

  bool prepare(const Word& lhs, const Word& rhs) {
    s = lhs;
    t = rhs;
    std::size_t a = 0;
    while (a < s.size() && a < t.size() && s[a] == t[a]) ++a;
    std::size_t b = 0;
    while (b < s.size() - a && b < t.size() - a &&
           s[s.size() - 1 - b] == t[t.size() - 1 - b])
      ++b;
    s_core = Word{{s.letters.begin() + a, s.letters.end() - b}};
    t_core = Word{{t.letters.begin() + a, t.letters.end() - b}};
    if (s_core.empty() && t_core.empty()) return false;  // sides identical

    std::map<Letter, int>& occ = occ_s;
    for (const Letter& l : s.letters) ++occ[l];
    LetterSet t_alf = stats(t).alf;
    for (const Letter& l : t_alf)
      if (!occ.count(l)) extras.push_back(l);
    std::sort(extras.begin(), extras.end());
    extras.erase(std::unique(extras.begin(), extras.end()), extras.end());

    for (const Letter& l : stats(s_core).alf) core_letters.insert(l);
    for (const Letter& l : stats(t_core).alf)
      if (occ.count(l)) core_letters.insert(l);
    unbound_core = static_cast<int>(core_letters.size());

    LetterSet interesting = core_letters;
    for (const auto& [l, n] : occ)
      if (n >= 2) interesting.insert(l);
    bool flex = false;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (interesting.count(s[i])) {
        tok_letter.push_back(s[i]);
        tok_flex.push_back(flex);
        tok_pos.push_back(static_cast<int>(i));
        flex = false;
      } else {
        flex = true;
      }
    }
    return true;
  }

  Word word_at(int from, int to) const {
    return Word{{w->letters.begin() + from, w->letters.begin() + to}};
  }

  // greedy count of non-overlapping occurrences of w[q..q+len) in w
  int disjoint_occurrences(int q, int len) const {
    const int n = static_cast<int>(w->size());
    int count = 0;
    for (int p = 0; p + len <= n;) {
      bool hit = true;
      for (int i = 0; i < len; ++i)
        if ((*w)[p + i] != (*w)[q + i]) {
          hit = false;
          break;
        }
      if (hit) {
        ++count;
        p += len;
      } else {
        ++p;
      }
    }
    return count;
  }

  bool matches_at(const Word& u, int q) const {
    if (q + u.size() > w->size()) return false;
    for (std::size_t i = 0; i < u.size(); ++i)
      if ((*w)[q + i] != u[i]) return false;
    return true;
  }

  Word apply_img(const Word& u) const {
    Word out;
    for (const Letter& l : u.letters) out += img.at(l);
    return out;
  }

  // true when the partial images already force the two cores to agree under
  // every extension: expand bound letters, keep unbound ones symbolic, and
  // compare atom by atom (a symbolic letter only equals itself unexpanded)
  bool cores_forced_equal() const {
    std::vector<std::pair<bool, Letter>> a, b;
    auto expand = [&](const Word& u, std::vector<std::pair<bool, Letter>>& out) {
      for (const Letter& l : u.letters) {
        auto it = img.find(l);
        if (it == img.end())
          out.emplace_back(false, l);
        else
          for (const Letter& c : it->second.letters) out.emplace_back(true, c);
      }
    };
    expand(s_core, a);
    expand(t_core, b);
    return a == b;
  }

  // distribute the unmatched segments of the span onto the absorbing letters
  // and emit a full element-valued substitution
  std::map<Letter, int> build_phi(const std::vector<std::pair<int, int>>& at,
                                  int span_begin, int span_end) const {
    std::map<Letter, int> phi;
    int wpos = span_begin;
    std::size_t ti = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (ti < tok_pos.size() && static_cast<int>(i) == tok_pos[ti]) {
        phi[tok_letter[ti]] = index.at(img.at(tok_letter[ti]));
        wpos = at[ti].second;
        ++ti;
      } else if (!phi.count(s[i])) {
        // first absorbing letter of a gap swallows everything up to the next
        // token (or the span end); later ones stay at the identity
        int stop = ti < tok_pos.size() ? at[ti].first : span_end;
        phi[s[i]] = index.at(word_at(wpos, stop));
        wpos = stop;
      }
    }
    return phi;
  }

  // true when the search must stop (witness found or budget exhausted)
  bool complete(int span_end, int forced_begin = -1) {
    // empty images were placed lazily: anchor them at the next consumed
    // position so the gap segments between tokens come out right
    std::vector<std::pair<int, int>> at = placed;
    for (std::size_t j = at.size(); j-- > 0;) {
      if (at[j].first == at[j].second) {
        int anchor = j + 1 < at.size() ? at[j + 1].first : span_end;
        at[j] = {anchor, anchor};
      }
    }
    const int span_begin =
        at.empty() ? (forced_begin >= 0 ? forced_begin : span_end) : at[0].first;
    if (extras.empty()) {
      if (apply_img(s_core) == apply_img(t_core)) return false;
      std::map<Letter, int> phi = build_phi(at, span_begin, span_end);
      const int f = index.at(word_at(span_begin, span_end));
      if (core.eval(s, phi) != f) return false;  // inconsistent distribution
      if (core.eval(t, phi) == f) return false;
      witness = std::move(phi);
      return true;
    }
    std::map<Letter, int> phi = build_phi(at, span_begin, span_end);
    const int f = index.at(word_at(span_begin, span_end));
    if (core.eval(s, phi) != f) return false;
    const int e = static_cast<int>(extras.size());
    std::vector<int> assign(e, 0);
    while (true) {
      if (budget && !budget->tick()) return true;
      for (int i = 0; i < e; ++i) phi[extras[i]] = assign[i];
      if (core.eval(t, phi) != f) {
        witness = std::move(phi);
        return true;
      }
      int i = e - 1;
      while (i >= 0 && ++assign[i] == core.size) assign[i--] = 0;
      if (i < 0) break;
    }
    return false;
  }

  bool flex_after(std::size_t i, bool flex) const {
    // an empty image does not consume the gap, so its flexibility carries over
    return (i + 1 < tok_flex.size() && tok_flex[i + 1]) || flex;
  }

  bool recurse_empty(std::size_t i, int pos, bool flex, bool fresh) {
    const Letter& l = tok_letter[i];
    const bool is_core = fresh && core_letters.count(l) > 0;
    bool prunable = is_core && extras.empty() && cores_forced_equal();
    bool stop = false;
    if (!prunable) {
      placed.push_back({pos, pos});
      stop = dfs(i + 1, pos, flex_after(i, flex));
      placed.pop_back();
    }
    return stop;
  }

  bool dfs(std::size_t i, int pos, bool flex) {
    if (budget && !budget->tick()) return true;
    if (i == tok_letter.size()) return complete(pos);
    const Letter& l = tok_letter[i];
    const int n = static_cast<int>(w->size());
    const int q_hi = flex ? n : pos;
    auto it = img.find(l);
    if (it != img.end()) {
      if (it->second.empty()) return recurse_empty(i, pos, flex, false);
      for (int q = pos; q <= q_hi; ++q) {
        if (!matches_at(it->second, q)) continue;
        placed.push_back({q, q + static_cast<int>(it->second.size())});
        bool stop = dfs(i + 1, placed.back().second,
                        i + 1 < tok_flex.size() && tok_flex[i + 1]);
        placed.pop_back();
        if (stop) return true;
      }
      return false;
    }
    const int occ = occ_s.at(l);
    // the empty image: placed lazily, positions fixed up at completion
    {
      img[l] = Word{};
      bool stop = recurse_empty(i, pos, flex, true);
      img.erase(l);
      if (stop) return true;
    }
    for (int q = pos; q <= q_hi; ++q) {
      for (int len = 1; q + len <= n; ++len) {
        if (budget && !budget->tick()) return true;
        // a letter with several occurrences needs as many disjoint copies of
        // its image in the target; sequential placement makes them disjoint
        if (occ >= 2 && disjoint_occurrences(q, len) < occ) continue;
        img[l] = word_at(q, q + len);
        const bool is_core = core_letters.count(l) > 0;
        bool prunable = is_core && extras.empty() && cores_forced_equal();
        bool stop = false;
        if (!prunable) {
          placed.push_back({q, q + len});
          stop = dfs(i + 1, q + len, i + 1 < tok_flex.size() && tok_flex[i + 1]);
          placed.pop_back();
        }
        img.erase(l);
        if (stop) return true;
      }
    }
    return false;
  }

  // returns true when the search stopped early (witness or budget)
  bool run() {
    for (const Word& gen : gens) {
      w = &gen;
      if (tok_letter.empty()) {
        // every letter of s is absorbing: phi(s) ranges over all factors
        const int n = static_cast<int>(w->size());
        for (int i = 0; i <= n; ++i)
          for (int j = i; j <= n; ++j) {
            if (s.empty() && j != i) continue;
            if (budget && !budget->tick()) return true;
            if (complete(j, i)) return true;
          }
      } else {
        if (dfs(0, 0, true)) return true;
      }
    }
    return false;
  }
};

}  // namespace

SatVerdict satisfies_rees(const Monoid& m, const Identity& id, SearchBudget* budget) {
  const FiniteMonoid& core = m.core;
  const int zero = *core.zero;
  std::map<Word, int, WordShortlexLess> index;
  for (int i = 0; i < zero; ++i) index[core.labels[i]] = i;

  for (int dir = 0; dir < 2; ++dir) {
    ReesDirection search(core, m.rees_words, index, budget);
    if (!search.prepare(dir ? id.rhs : id.lhs, dir ? id.lhs : id.rhs)) continue;
    search.run();
    if (budget && budget->exceeded) return {SatVerdict::Status::Resource, std::nullopt};
    if (search.witness)
      return {SatVerdict::Status::Fails, std::move(search.witness)};
  }
  return {SatVerdict::Status::Holds, std::nullopt};
}

SatVerdict satisfies(const Monoid& m, const Identity& id, SearchBudget* budget) {
  switch (m.kind) {
    case Monoid::Kind::Rees:
      return satisfies_rees(m, id, budget);
    case Monoid::Kind::Dual: {
      SatVerdict v = satisfies(*m.base, dual(id), budget);
      return v;  // a failing assignment transfers verbatim to the dual
    }
    case Monoid::Kind::Product: {
      const Monoid& a = *m.parts[0];
      const Monoid& b = *m.parts[1];
      SatVerdict va = satisfies(a, id, budget);
      if (va.status == SatVerdict::Status::Fails) {
        if (va.witness)
          for (auto& [l, e] : *va.witness) e = e * b.core.size + b.core.one;
        return va;
      }
      if (va.status == SatVerdict::Status::Resource) return va;
      SatVerdict vb = satisfies(b, id, budget);
      if (vb.status == SatVerdict::Status::Fails && vb.witness)
        for (auto& [l, e] : *vb.witness) e = a.core.one * b.core.size + e;
      return vb;
    }
    case Monoid::Kind::Table:
      break;
  }
  return satisfies_bruteforce(m.core, id, budget);
}

PresentationVerdict satisfies_presentation(const Monoid& m, const VarietyPresentation& pres,
                                           int B, SearchBudget* budget) {
  for (const Identity& id : pres.expand(B)) {
    SatVerdict v = satisfies(m, id, budget);
    if (v.status == SatVerdict::Status::Fails)
      return {PresentationVerdict::Status::NonMember, id, v.witness};
    if (v.status == SatVerdict::Status::Resource)
      return {PresentationVerdict::Status::Resource, id, std::nullopt};
  }
  return {PresentationVerdict::Status::MemberWithinBound, std::nullopt, std::nullopt};
}

}  // namespace monovar
