#include "monovar/identities.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>
#include <tuple>

namespace monovar {

const Word* Substitution::image(const Letter& l) const {
  auto it = map.find(l);
  return it == map.end() ? nullptr : &it->second;
}

Word apply(const Substitution& phi, const Word& w) {
  Word r;
  for (const Letter& l : w.letters) {
    if (const Word* img = phi.image(l))
      r += *img;
    else
      r += l;
  }
  return r;
}

Identity Identity::canonical() const {
  if (shortlex_less(rhs, lhs)) return {rhs, lhs};
  return *this;
}

bool IdentityCanonicalLess::operator()(const Identity& a, const Identity& b) const {
  Identity ca = a.canonical(), cb = b.canonical();
  if (ca.lhs != cb.lhs) return shortlex_less(ca.lhs, cb.lhs);
  return shortlex_less(ca.rhs, cb.rhs);
}

std::string render(const Identity& id) { return render(id.lhs) + " = " + render(id.rhs); }

Identity parse_identity(const std::string& text) {
  auto pos = text.find('=');
  if (pos == std::string::npos) throw ParseError("identity must contain '='", 0);
  return {parse_word(text.substr(0, pos)), parse_word(text.substr(pos + 1))};
}

Identity dual(const Identity& id) { return {reverse(id.lhs), reverse(id.rhs)}; }

namespace {

bool renaming_exists(const Word& a1, const Word& a2, const Word& b1, const Word& b2) {
  if (a1.size() != b1.size() || a2.size() != b2.size()) return false;
  std::map<Letter, Letter> fwd, bwd;
  auto extend = [&](const Word& u, const Word& v) {
    for (std::size_t i = 0; i < u.size(); ++i) {
      auto [itf, insf] = fwd.emplace(u[i], v[i]);
      if (!insf && itf->second != v[i]) return false;
      auto [itb, insb] = bwd.emplace(v[i], u[i]);
      if (!insb && itb->second != u[i]) return false;
    }
    return true;
  };
  return extend(a1, b1) && extend(a2, b2);
}

}  // namespace

bool equal_up_to_renaming(const Identity& a, const Identity& b) {
  return renaming_exists(a.lhs, a.rhs, b.lhs, b.rhs) ||
         renaming_exists(a.lhs, a.rhs, b.rhs, b.lhs);
}

namespace {

/// Backtracking word matcher.  Images are tried shortest first, so the
/// enumeration order is deterministic.
class Matcher {
 public:
  Matcher(const Word& pattern, const Word& target, const Substitution& seed,
          const std::function<bool(const Substitution&)>& fn, SearchBudget* budget)
      : pat_(pattern), tgt_(target), fn_(fn), budget_(budget) {
    for (const Letter& l : pat_.letters) {
      if (!id_of_.count(l)) {
        int id = static_cast<int>(letters_.size());
        id_of_[l] = id;
        letters_.push_back(l);
      }
    }
    const int k = static_cast<int>(letters_.size());
    const int m = static_cast<int>(pat_.size());
    pat_ids_.resize(m);
    for (int i = 0; i < m; ++i) pat_ids_[i] = id_of_[pat_[i]];
    // suffix_occ_[i*k + l]: occurrences of letter l at pattern positions >= i.
    suffix_occ_.assign(static_cast<std::size_t>(m + 1) * k, 0);
    for (int i = m - 1; i >= 0; --i) {
      for (int l = 0; l < k; ++l) suffix_occ_[i * k + l] = suffix_occ_[(i + 1) * k + l];
      ++suffix_occ_[i * k + pat_ids_[i]];
    }
    total_occ_.assign(k, 0);
    for (int l = 0; l < k; ++l) total_occ_[l] = suffix_occ_[l];
    image_.assign(k, std::nullopt);
    for (const auto& [l, w] : seed.map) {
      extra_.map[l] = w;
      auto it = id_of_.find(l);
      if (it != id_of_.end()) image_[it->second] = w;
    }
    // Letters seeded and occurring in the pattern are constrained, not extra.
    for (int l = 0; l < k; ++l)
      if (image_[l]) extra_.map.erase(letters_[l]);
  }

  bool run() { return rec(0, 0); }

 private:
  std::int64_t forced_remaining(int pi) const {
    const int k = static_cast<int>(letters_.size());
    std::int64_t sum = 0;
    for (int l = 0; l < k; ++l)
      if (image_[l]) sum += static_cast<std::int64_t>(suffix_occ_[pi * k + l]) * image_[l]->size();
    return sum;
  }

  int substring_count(const Word& g) const { return count_factor_occurrences(g, tgt_); }

  bool emit() {
    Substitution out = extra_;
    for (std::size_t l = 0; l < letters_.size(); ++l)
      if (image_[l]) out.map[letters_[l]] = *image_[l];
    return fn_(out);
  }

  bool rec(int pi, std::size_t tj) {
    if (budget_ && !budget_->tick()) return false;
    const int m = static_cast<int>(pat_.size());
    if (pi == m) return tj == tgt_.size() ? emit() : false;
    const int lid = pat_ids_[pi];
    if (image_[lid]) {
      const Word& g = *image_[lid];
      if (tj + g.size() > tgt_.size()) return false;
      if (!std::equal(g.letters.begin(), g.letters.end(), tgt_.letters.begin() + tj))
        return false;
      return rec(pi + 1, tj + g.size());
    }
    // Unassigned letter: the image must fit together with everything the
    // rest of the pattern already forces.
    const std::int64_t forced_after = forced_remaining(pi + 1);
    const std::int64_t room = static_cast<std::int64_t>(tgt_.size()) - tj - forced_after;
    const int occ_total = total_occ_[lid];
    const int occ_after = suffix_occ_[(pi + 1) * static_cast<int>(letters_.size()) + lid];
    for (std::int64_t len = 0; len <= room; ++len) {
      if (occ_after > 0 && len * (occ_after + 1) > room + len) break;
      Word g{std::vector<Letter>(tgt_.letters.begin() + tj, tgt_.letters.begin() + tj + len)};
      if (len > 0 && occ_total >= 2 && substring_count(g) < occ_total) continue;
      image_[lid] = std::move(g);
      if (rec(pi + 1, tj + len)) return true;
      image_[lid].reset();
    }
    return false;
  }

  const Word& pat_;
  const Word& tgt_;
  const std::function<bool(const Substitution&)>& fn_;
  SearchBudget* budget_;
  std::map<Letter, int> id_of_;
  std::vector<Letter> letters_;
  std::vector<int> pat_ids_;
  std::vector<int> suffix_occ_;
  std::vector<int> total_occ_;
  std::vector<std::optional<Word>> image_;
  Substitution extra_;
};

}  // namespace

bool for_each_match(const Word& pattern, const Word& target, const Substitution& seed,
                    const std::function<bool(const Substitution&)>& fn, SearchBudget* budget) {
  Matcher m(pattern, target, seed, fn, budget);
  return m.run();
}

std::vector<Substitution> match_pattern(const Word& pattern, const Word& target) {
  std::vector<Substitution> out;
  for_each_match(pattern, target, {}, [&](const Substitution& phi) {
    out.push_back(phi);
    return false;
  });
  return out;
}

std::optional<StepWitness> directly_deducible(const Identity& id, const Identity& rule,
                                              SearchBudget* budget) {
  const Word& u = id.lhs;
  const Word& v = id.rhs;
  for (int dir = 0; dir < 2; ++dir) {
    const Word& s = dir ? rule.rhs : rule.lhs;
    const Word& t = dir ? rule.lhs : rule.rhs;
    for (std::size_t start = 0; start <= u.size(); ++start) {
      if (start > v.size()) break;
      if (!std::equal(u.letters.begin(), u.letters.begin() + start, v.letters.begin())) break;
      for (std::size_t end = start; end <= u.size(); ++end) {
        const std::size_t blen = u.size() - end;
        if (blen > v.size() - start) continue;
        if (!std::equal(u.letters.end() - blen, u.letters.end(), v.letters.end() - blen))
          continue;
        Word mid{std::vector<Letter>(u.letters.begin() + start, u.letters.begin() + end)};
        Word vmid{std::vector<Letter>(v.letters.begin() + start, v.letters.end() - blen)};
        std::optional<StepWitness> found;
        for_each_match(s, mid, {}, [&](const Substitution& phi0) {
          return for_each_match(t, vmid, phi0, [&](const Substitution& phi) {
            found = StepWitness{
                Word{std::vector<Letter>(u.letters.begin(), u.letters.begin() + start)},
                Word{std::vector<Letter>(u.letters.end() - blen, u.letters.end())}, phi,
                dir != 0};
            return true;
          }, budget);
        }, budget);
        if (found) return found;
        if (budget && budget->exceeded) return std::nullopt;
      }
    }
  }
  return std::nullopt;
}

Word apply_step(const Word&, const Identity& rule, const StepWitness& w) {
  const Word& t = w.reversed ? rule.lhs : rule.rhs;
  return w.prefix + apply(w.phi, t) + w.suffix;
}

bool ChainVerdict::valid() const {
  return std::all_of(steps.begin(), steps.end(), [](const StepVerdict& s) { return s.valid; });
}

ChainVerdict check_chain(const std::vector<Word>& chain, const std::vector<Identity>& sigma,
                         SearchBudget* budget) {
  ChainVerdict verdict;
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    StepVerdict sv;
    if (chain[i] == chain[i + 1]) {
      sv.valid = sv.trivial = true;
    } else {
      for (std::size_t r = 0; r < sigma.size(); ++r) {
        auto w = directly_deducible({chain[i], chain[i + 1]}, sigma[r], budget);
        if (w) {
          sv.valid = true;
          sv.rule_index = static_cast<int>(r);
          sv.witness = std::move(w);
          break;
        }
        if (budget && budget->exceeded) {
          verdict.budget_exceeded = true;
          break;
        }
      }
    }
    verdict.steps.push_back(std::move(sv));
    if (verdict.budget_exceeded) break;
  }
  return verdict;
}

namespace {

struct ParentLink {
  Word from;
  int rule_index;
  StepWitness witness;
};

}  // namespace

ProveResult prove(const Identity& goal, const std::vector<Identity>& sigma,
                  const ProveBounds& bounds) {
  if (goal.is_trivial()) return {ProveStatus::Found, Proof{{goal.lhs}, {}}};

  const std::size_t max_len =
      bounds.max_len ? bounds.max_len : 2 * std::max(goal.lhs.size(), goal.rhs.size()) + 4;
  SearchBudget budget{bounds.match_budget, false};
  bool pruned = false;

  std::map<Word, ParentLink, WordShortlexLess> parents;
  std::set<Word, WordShortlexLess> visited;
  visited.insert(goal.lhs);
  std::vector<Word> frontier{goal.lhs};
  std::size_t states = 1;

  // Replacement cache: (rule, dir, mid) -> replacement words with witnesses.
  std::map<std::tuple<int, int, std::string>, std::vector<std::pair<Word, Substitution>>> cache;

  for (int depth = 0; depth < bounds.max_depth && !frontier.empty(); ++depth) {
    std::map<Word, ParentLink, WordShortlexLess> next;
    for (const Word& u : frontier) {
      for (std::size_t r = 0; r < sigma.size(); ++r) {
        for (int dir = 0; dir < 2; ++dir) {
          const Word& s = dir ? sigma[r].rhs : sigma[r].lhs;
          const Word& t = dir ? sigma[r].lhs : sigma[r].rhs;
          for (std::size_t start = 0; start <= u.size(); ++start) {
            for (std::size_t end = start; end <= u.size(); ++end) {
              Word mid{std::vector<Letter>(u.letters.begin() + start, u.letters.begin() + end)};
              auto key = std::make_tuple(static_cast<int>(r), dir, render(mid));
              auto it = cache.find(key);
              if (it == cache.end()) {
                std::vector<std::pair<Word, Substitution>> reps;
                for_each_match(s, mid, {}, [&](const Substitution& phi) {
                  reps.emplace_back(apply(phi, t), phi);
                  return false;
                }, &budget);
                it = cache.emplace(key, std::move(reps)).first;
              }
              for (const auto& [rep, phi] : it->second) {
                if (u.size() - mid.size() + rep.size() > max_len) {
                  pruned = true;
                  continue;
                }
                Word succ{std::vector<Letter>(u.letters.begin(), u.letters.begin() + start)};
                succ += rep;
                succ.letters.insert(succ.letters.end(), u.letters.begin() + end,
                                    u.letters.end());
                if (visited.count(succ) || next.count(succ)) continue;
                StepWitness w{
                    Word{std::vector<Letter>(u.letters.begin(), u.letters.begin() + start)},
                    Word{std::vector<Letter>(u.letters.begin() + end, u.letters.end())}, phi,
                    dir != 0};
                next.emplace(std::move(succ),
                             ParentLink{u, static_cast<int>(r), std::move(w)});
              }
              if (budget.exceeded) goto search_done;
            }
          }
        }
      }
    }
    for (auto& [w, link] : next) {
      visited.insert(w);
      parents.emplace(w, std::move(link));
      if (++states > bounds.max_states) {
        pruned = true;
        goto search_done;
      }
    }
    if (parents.count(goal.rhs)) break;
    frontier.clear();
    for (const auto& [w, link] : next)
      frontier.push_back(w);  // already in shortlex order
  }

search_done:
  if (parents.count(goal.rhs)) {
    Proof proof;
    Word cur = goal.rhs;
    while (cur != goal.lhs) {
      const ParentLink& link = parents.at(cur);
      proof.chain.push_back(cur);
      proof.steps.push_back({sigma[link.rule_index], link.witness});
      cur = link.from;
    }
    proof.chain.push_back(goal.lhs);
    std::reverse(proof.chain.begin(), proof.chain.end());
    std::reverse(proof.steps.begin(), proof.steps.end());
    return {ProveStatus::Found, std::move(proof)};
  }
  if (budget.exceeded || pruned) return {ProveStatus::LimitExceeded, std::nullopt};
  return {ProveStatus::Exhausted, std::nullopt};
}

bool replay_proof(const Proof& proof, const std::vector<Identity>& sigma) {
  if (proof.chain.empty()) return false;
  if (proof.steps.size() + 1 != proof.chain.size()) return false;
  IdentitySet rules(sigma.begin(), sigma.end());
  for (std::size_t i = 0; i < proof.steps.size(); ++i) {
    const ProofStep& st = proof.steps[i];
    if (!rules.count(st.rule)) return false;
    const Word& side = st.witness.reversed ? st.rule.rhs : st.rule.lhs;
    Word from = st.witness.prefix + apply(st.witness.phi, side) + st.witness.suffix;
    if (from != proof.chain[i]) return false;
    if (apply_step(proof.chain[i], st.rule, st.witness) != proof.chain[i + 1]) return false;
  }
  return true;
}

}  // namespace monovar
