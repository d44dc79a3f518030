#include "monovar/analysis.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace monovar {

namespace {

void flatten_rees(const Monoid& m, std::vector<const Monoid*>& out) {
  switch (m.kind) {
    case Monoid::Kind::Rees: out.push_back(&m); break;
    case Monoid::Kind::Product:
      for (const auto& p : m.parts) flatten_rees(*p, out);
      break;
    default: break;  // no cheap projection filter for Table/Dual
  }
}

/// Element of a Rees monoid holding the single letter l, or the zero.
int letter_element(const FiniteMonoid& core, const Letter& l) {
  Word u = Word{} + l;
  for (int i = 0; i < core.size; ++i)
    if ((!core.zero || i != *core.zero) && core.labels[i] == u) return i;
  return *core.zero;
}

struct PruneTable {
  const FiniteMonoid* core;
  std::map<Letter, int> letter_elem;
  int target;                 // identity-substitution image of w
  std::vector<char> viable;   // viable[e]: some s has e*s == target

  int step(int e, const Letter& l) const { return core->mul(e, letter_elem.at(l)); }
};

int eval_letters(const FiniteMonoid& core, const std::map<Letter, int>& le, const Word& w) {
  int acc = core.one;
  for (const Letter& l : w.letters) acc = core.mul(acc, le.at(l));
  return acc;
}

struct EquivSearch {
  const Word& w;
  const std::vector<Monoid>& ms;
  std::vector<Letter> alphabet;
  bool widened = false;
  std::size_t max_len;
  int occ_cap;
  std::int64_t nodes_left;
  bool resource = false;
  std::vector<PruneTable> prunes;
  LetterSet w_alf;
  WordSet found;

  // per-letter / per-pair projection fingerprints of w in each prune monoid
  std::vector<std::map<Letter, int>> single_proj;
  std::vector<std::map<std::pair<Letter, Letter>, int>> pair_proj;

  bool quick_reject(const Word& v) const {
    for (std::size_t i = 0; i < prunes.size(); ++i) {
      const PruneTable& p = prunes[i];
      for (const auto& [l, want] : single_proj[i])
        if (eval_letters(*p.core, p.letter_elem, keep_letters(v, {l})) != want) return true;
      for (const auto& [pr, want] : pair_proj[i])
        if (eval_letters(*p.core, p.letter_elem, keep_letters(v, {pr.first, pr.second})) !=
            want)
          return true;
    }
    return false;
  }

  void consider(const Word& v) {
    if (!widened) {
      if (stats(v).alf != w_alf) return;
    }
    if (quick_reject(v)) return;
    for (const Monoid& m : ms) {
      SearchBudget budget{nodes_left, false};
      SatVerdict verdict = satisfies(m, {w, v}, &budget);
      nodes_left = budget.nodes_left;
      if (verdict.status == SatVerdict::Status::Resource) {
        resource = true;
        return;
      }
      if (!verdict.holds()) return;
    }
    found.insert(v);
  }

  void dfs(Word& v, std::vector<int>& elems, std::map<Letter, int>& occ) {
    if (--nodes_left < 0) {
      resource = true;
      return;
    }
    bool on_target = true;
    for (std::size_t i = 0; i < prunes.size(); ++i)
      if (elems[i] != prunes[i].target) {
        on_target = false;
        break;
      }
    if (on_target) consider(v);
    if (v.size() == max_len || resource) return;
    for (const Letter& l : alphabet) {
      if (occ[l] == occ_cap) continue;
      bool ok = true;
      std::vector<int> next(elems.size());
      for (std::size_t i = 0; i < prunes.size(); ++i) {
        next[i] = prunes[i].step(elems[i], l);
        if (!prunes[i].viable[next[i]]) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      v += l;
      ++occ[l];
      dfs(v, next, occ);
      --occ[l];
      v.letters.pop_back();
      if (resource) return;
    }
  }
};

Letter fresh_letter(const LetterSet& taken) {
  for (int i = 0;; ++i) {
    Letter l = i == 0 ? let("fresh") : let("fresh", i);
    if (!taken.count(l)) return l;
  }
}

}  // namespace

EquivResult equivalent_words(const Word& w, const std::vector<Monoid>& ms,
                             const AnalysisBounds& bounds) {
  AnalysisBounds b = bounds;
  if (b.max_len == 0) b.max_len = w.size() + 2;
  if (b.occ_cap == 0) {
    int cap = 1;
    for (const auto& [l, c] : stats(w).occ) cap = std::max(cap, c);
    for (const Monoid& m : ms) cap = std::max(cap, idempotent_index(m.core));
    b.occ_cap = cap;
  }

  EquivSearch s{w, ms, {}, false, b.max_len, b.occ_cap, b.node_budget,
                false, {},    {},    {},     {},        {}};
  s.w_alf = stats(w).alf;
  s.alphabet.assign(s.w_alf.begin(), s.w_alf.end());
  for (const Monoid& m : ms)
    if (!m.core.zero || *m.core.zero == m.core.one) s.widened = true;
  if (s.widened) s.alphabet.push_back(fresh_letter(s.w_alf));

  std::vector<const Monoid*> rees;
  for (const Monoid& m : ms) flatten_rees(m, rees);
  for (const Monoid* m : rees) {
    PruneTable p;
    p.core = &m->core;
    for (const Letter& l : s.alphabet) p.letter_elem[l] = letter_element(m->core, l);
    p.target = eval_letters(m->core, p.letter_elem, w);
    p.viable.assign(m->core.size, 0);
    for (int e = 0; e < m->core.size; ++e)
      for (int x = 0; x < m->core.size; ++x)
        if (m->core.mul(e, x) == p.target) {
          p.viable[e] = 1;
          break;
        }
    std::map<Letter, int> singles;
    std::map<std::pair<Letter, Letter>, int> pairs;
    for (std::size_t i = 0; i < s.alphabet.size(); ++i) {
      const Letter& a = s.alphabet[i];
      singles[a] = eval_letters(m->core, p.letter_elem, keep_letters(w, {a}));
      for (std::size_t j = i + 1; j < s.alphabet.size(); ++j) {
        const Letter& c = s.alphabet[j];
        pairs[{a, c}] = eval_letters(m->core, p.letter_elem, keep_letters(w, {a, c}));
      }
    }
    s.single_proj.push_back(std::move(singles));
    s.pair_proj.push_back(std::move(pairs));
    s.prunes.push_back(std::move(p));
  }

  Word v;
  std::vector<int> elems;
  for (const PruneTable& p : s.prunes) elems.push_back(p.core->one);
  std::map<Letter, int> occ;
  for (const Letter& l : s.alphabet) occ[l] = 0;
  bool root_viable = true;
  for (std::size_t i = 0; i < s.prunes.size(); ++i)
    if (!s.prunes[i].viable[elems[i]]) root_viable = false;
  if (root_viable) s.dfs(v, elems, occ);

  s.found.insert(w);
  return {std::move(s.found), s.widened, s.resource};
}

IsotermVerdict is_isoterm(const Word& w, const std::vector<Monoid>& ms,
                          const AnalysisBounds& bounds) {
  EquivResult r = equivalent_words(w, ms, bounds);
  for (const Word& v : r.words)
    if (v != w) return {IsotermVerdict::Status::NotIsoterm, v, bounds, r.widened};
  if (r.resource) return {IsotermVerdict::Status::Resource, std::nullopt, bounds, r.widened};
  return {IsotermVerdict::Status::IsotermWithinBounds, std::nullopt, bounds, r.widened};
}

MembershipVerdict member_MW(const std::vector<Word>& W_prime, const Monoid& m,
                            const AnalysisBounds& bounds) {
  for (const Word& w : W_prime) {
    IsotermVerdict v = is_isoterm(w, {m}, bounds);
    if (v.status == IsotermVerdict::Status::NotIsoterm)
      return {MembershipVerdict::Status::NonMember, w, v.witness};
    if (v.status == IsotermVerdict::Status::Resource)
      return {MembershipVerdict::Status::Resource, w, std::nullopt};
  }
  return {MembershipVerdict::Status::MemberWithinBounds, std::nullopt, std::nullopt};
}

MembershipVerdict join_membership(const Word& w, const std::vector<Monoid>& ms,
                                  const AnalysisBounds& bounds) {
  IsotermVerdict v = is_isoterm(w, ms, bounds);
  switch (v.status) {
    case IsotermVerdict::Status::NotIsoterm:
      return {MembershipVerdict::Status::NonMember, w, v.witness};
    case IsotermVerdict::Status::Resource:
      return {MembershipVerdict::Status::Resource, w, std::nullopt};
    case IsotermVerdict::Status::IsotermWithinBounds:
      break;
  }
  return {MembershipVerdict::Status::MemberWithinBounds, std::nullopt, std::nullopt};
}

// --- Invertibility ------------------------------------------------------------

namespace {

/// Sequence of common simple letters; throws if the two sides disagree.
std::vector<Letter> common_skeleton(const Word& u, const Word& v) {
  WordStats su = stats(u), sv = stats(v);
  LetterSet common;
  for (const Letter& l : su.simple)
    if (sv.simple.count(l)) common.insert(l);
  Word pu = keep_letters(u, common), pv = keep_letters(v, common);
  if (pu != pv)
    throw std::invalid_argument("sides disagree on the order of their simple letters");
  return pu.letters;
}

std::vector<Word> blocks_by(const Word& w, const LetterSet& skeleton) {
  std::vector<Word> blocks(1);
  for (const Letter& l : w.letters) {
    if (skeleton.count(l))
      blocks.emplace_back();
    else
      blocks.back() += l;
  }
  return blocks;
}

std::map<Letter, int> block_counts(const Word& block) {
  std::map<Letter, int> c;
  for (const Letter& l : block.letters) ++c[l];
  return c;
}

}  // namespace

std::optional<int> invertibility_degree(const Word& w, const Word& w2) {
  std::vector<Letter> skel_seq = common_skeleton(w, w2);
  LetterSet skel(skel_seq.begin(), skel_seq.end());
  std::vector<Word> bu = blocks_by(w, skel), bv = blocks_by(w2, skel);
  for (std::size_t i = 0; i < bu.size(); ++i)
    if (block_counts(bu[i]) != block_counts(bv[i]))
      throw std::invalid_argument("sides disagree on per-block letter statistics");

  LetterSet mul = stats(w).multiple;
  std::set<Word, WordShortlexLess> visited{w};
  std::deque<std::pair<Word, int>> queue{{w, 0}};
  while (!queue.empty()) {
    auto [cur, d] = queue.front();
    queue.pop_front();
    if (cur == w2) return d;
    for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
      if (cur[i] == cur[i + 1]) continue;
      if (!mul.count(cur[i]) || !mul.count(cur[i + 1])) continue;
      Word next = cur;
      std::swap(next.letters[i], next.letters[i + 1]);
      if (visited.insert(next).second) queue.emplace_back(std::move(next), d + 1);
    }
  }
  return std::nullopt;
}

// --- Normal forms ---------------------------------------------------------------

namespace {

struct IslandRun {
  Letter letter;
  int count;
  bool operator==(const IslandRun&) const = default;
};

std::vector<IslandRun> runs_of(const Word& block) {
  std::vector<IslandRun> runs;
  for (const Letter& l : block.letters) {
    if (!runs.empty() && runs.back().letter == l)
      ++runs.back().count;
    else
      runs.push_back({l, 1});
  }
  return runs;
}

bool blocks_are_powers(const std::vector<Word>& blocks, std::size_t except) {
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (i == except) continue;
    if (runs_of(blocks[i]).size() > 1) return false;
  }
  return true;
}

Word rebuild(const std::vector<Word>& blocks, const std::vector<Letter>& skel_seq) {
  Word w = blocks[0];
  for (std::size_t i = 0; i < skel_seq.size(); ++i) {
    w += skel_seq[i];
    w += blocks[i + 1];
  }
  return w;
}

/// Stage-1 island merging: every earlier occurrence of a letter migrates to
/// its last occurrence, letters processed by ascending last occurrence.
Word merge_islands(const Word& block) {
  std::vector<IslandRun> runs = runs_of(block);
  std::map<Letter, int> total = block_counts(block);
  // Keep only each letter's final run, with the letter's full count.
  std::vector<IslandRun> out;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    bool last = true;
    for (std::size_t j = i + 1; j < runs.size(); ++j)
      if (runs[j].letter == runs[i].letter) last = false;
    if (last) out.push_back({runs[i].letter, total[runs[i].letter]});
  }
  Word w;
  for (const IslandRun& r : out) w += power(r.letter, r.count);
  return w;
}

}  // namespace

bool is_formA(const Identity& id) {
  std::vector<Letter> skel_seq;
  try {
    skel_seq = common_skeleton(id.lhs, id.rhs);
  } catch (const std::invalid_argument&) {
    return false;
  }
  LetterSet skel(skel_seq.begin(), skel_seq.end());
  LetterSet others;
  for (const Letter& l : stats(id.lhs + id.rhs).alf)
    if (!skel.count(l)) others.insert(l);
  if (others.size() > 1) return false;
  for (const Word& side : {id.lhs, id.rhs})
    if (!blocks_are_powers(blocks_by(side, skel), static_cast<std::size_t>(-1)))
      return false;
  return true;
}

namespace {

bool is_formB_with_pair(const Identity& id, const Letter& x, const Letter& y) {
  // every letter other than the swap pair must be a simple skeleton letter,
  // in the same order on both sides
  LetterSet skel;
  for (const Word* side : {&id.lhs, &id.rhs})
    for (const Letter& l : side->letters)
      if (l != x && l != y) skel.insert(l);
  for (const Letter& l : skel)
    if (occ_count(id.lhs, l) != 1 || occ_count(id.rhs, l) != 1) return false;
  if (keep_letters(id.lhs, skel) != keep_letters(id.rhs, skel)) return false;

  std::vector<Word> bu = blocks_by(id.lhs, skel), bv = blocks_by(id.rhs, skel);
  std::optional<std::size_t> diff;
  for (std::size_t i = 0; i < bu.size(); ++i) {
    if (bu[i] == bv[i]) continue;
    if (diff) return false;
    diff = i;
  }
  if (!diff) return false;
  auto ru = runs_of(bu[*diff]), rv = runs_of(bv[*diff]);
  if (ru.size() != 2 || rv.size() != 2) return false;
  if (!(ru[0] == rv[1] && ru[1] == rv[0])) return false;
  if (!((ru[0].letter == x && ru[1].letter == y) ||
        (ru[0].letter == y && ru[1].letter == x)))
    return false;
  return blocks_are_powers(bu, *diff) && blocks_are_powers(bv, *diff);
}

}  // namespace

bool is_formB(const Identity& id) {
  LetterSet alf_set = stats(id.lhs + id.rhs).alf;
  std::vector<Letter> alf(alf_set.begin(), alf_set.end());
  for (std::size_t i = 0; i < alf.size(); ++i)
    for (std::size_t j = i + 1; j < alf.size(); ++j)
      if (is_formB_with_pair(id, alf[i], alf[j])) return true;
  return false;
}

NormalForm normalize_modulo_O(const Identity& id, int B) {
  (void)B;  // the bound only scopes the derivability guarantee, not the shapes
  std::vector<Letter> skel_seq = common_skeleton(id.lhs, id.rhs);
  LetterSet skel(skel_seq.begin(), skel_seq.end());
  std::vector<Word> bu = blocks_by(id.lhs, skel), bv = blocks_by(id.rhs, skel);

  // Stage 1: at most one island per letter per block (free modulo Psi_1).
  for (Word& b : bu) b = merge_islands(b);
  for (Word& b : bv) b = merge_islands(b);

  NormalForm nf;
  IdentitySet seen;
  auto emit = [&](std::vector<Identity>& out, Identity e) {
    if (e.is_trivial()) return;
    if (seen.insert(e).second) out.push_back(std::move(e));
  };

  // Stage 2: per-letter projections equalize per-block occurrence counts;
  // the right side adopts the left side's counts, new islands appended at
  // the end of their block.
  LetterSet block_letters;
  for (const Word& b : bu)
    for (const Letter& l : b.letters) block_letters.insert(l);
  for (const Word& b : bv)
    for (const Letter& l : b.letters) block_letters.insert(l);

  Word u = rebuild(bu, skel_seq), v = rebuild(bv, skel_seq);
  for (const Letter& x : block_letters) {
    bool differs = false;
    for (std::size_t i = 0; i < bu.size(); ++i)
      if (occ_count(bu[i], x) != occ_count(bv[i], x)) differs = true;
    if (!differs) continue;
    LetterSet proj = skel;
    proj.insert(x);
    emit(nf.formA, {keep_letters(u, proj), keep_letters(v, proj)});
    for (std::size_t i = 0; i < bu.size(); ++i) {
      int want = occ_count(bu[i], x);
      Word nb = erase_letters(bv[i], {x});
      if (want > 0) {
        // reuse the island position when one exists, else append
        auto runs = runs_of(bv[i]);
        Word rebuilt;
        bool placed = false;
        for (const IslandRun& r : runs) {
          if (r.letter == x) {
            rebuilt += power(x, want);
            placed = true;
          } else {
            rebuilt += power(r.letter, r.count);
          }
        }
        if (!placed) rebuilt += power(x, want);
        bv[i] = rebuilt;
      } else {
        bv[i] = nb;
      }
    }
    v = rebuild(bv, skel_seq);
  }

  // Stage 3: bubble the right side's island order toward the left side's,
  // one adjacent swap at a time, leftmost differing block first.
  while (bu != bv) {
    std::size_t s = 0;
    while (bu[s] == bv[s]) ++s;
    auto target = runs_of(bu[s]);
    auto cur = runs_of(bv[s]);
    auto rank = [&](const Letter& l) {
      for (std::size_t i = 0; i < target.size(); ++i)
        if (target[i].letter == l) return i;
      return target.size();
    };
    std::size_t j = 0;
    while (j + 1 < cur.size() && rank(cur[j].letter) <= rank(cur[j + 1].letter)) ++j;
    if (j + 1 >= cur.size())
      throw std::logic_error("normalize_modulo_O: stage 3 made no progress");
    const Letter x = cur[j + 1].letter;  // x^p precedes y^q after the swap
    const Letter y = cur[j].letter;
    std::vector<Word> swapped_blocks = bv;
    Word nb;
    for (std::size_t i = 0; i < cur.size(); ++i) {
      std::size_t k = i;
      if (i == j) k = j + 1;
      else if (i == j + 1) k = j;
      nb += power(cur[k].letter, cur[k].count);
    }
    swapped_blocks[s] = nb;
    Word v_swapped = rebuild(swapped_blocks, skel_seq);

    bool cooccur = false;
    for (std::size_t i = 0; i < bu.size(); ++i) {
      if (i == s) continue;
      if (occ_count(bu[i], x) > 0 && occ_count(bu[i], y) > 0) cooccur = true;
    }
    if (!cooccur) {
      LetterSet proj = skel;
      proj.insert(x);
      proj.insert(y);
      emit(nf.formB, {keep_letters(v, proj), keep_letters(v_swapped, proj)});
    }
    bv = std::move(swapped_blocks);
    v = std::move(v_swapped);
  }
  return nf;
}

}  // namespace monovar
