// Acceptance gate: one line per criterion, honest PASS / FAIL / INCONCLUSIVE.
// Exit status is non-zero when any criterion misses its required outcome.

#include <algorithm>
#include <chrono>
#include <iostream>
#include <random>
#include <sstream>

#include "monovar/harness.hpp"

using namespace monovar;

namespace {

Word W(const std::string& s) { return parse_word(s); }
Identity I(const std::string& s) { return parse_identity(s); }

struct Line {
  std::string status;  // PASS | FAIL | INCONCLUSIVE
  std::string detail;
};

int failures = 0;

void print(int criterion, const Line& line, bool inconclusive_ok) {
  bool ok = line.status == "PASS" || (inconclusive_ok && line.status == "INCONCLUSIVE");
  if (!ok) ++failures;
  std::cout << "criterion " << criterion << ": " << line.status;
  if (!line.detail.empty()) std::cout << " — " << line.detail;
  std::cout << std::endl;
}

Line from_reports(const std::vector<Report>& reports) {
  int pass = 0, fail = 0, inc = 0;
  std::string detail;
  for (const Report& r : reports) {
    switch (r.status) {
      case Report::Status::PASS: ++pass; break;
      case Report::Status::FAIL:
        ++fail;
        detail += (detail.empty() ? "" : "; ") + r.id + ": " + r.witness;
        break;
      case Report::Status::INCONCLUSIVE:
        ++inc;
        detail += (detail.empty() ? "" : "; ") + r.id + " inconclusive";
        break;
    }
  }
  std::ostringstream os;
  os << pass << "/" << reports.size() << " claims pass";
  if (!detail.empty()) os << " (" << detail << ")";
  if (fail > 0) return {"FAIL", os.str()};
  if (inc > 0) return {"INCONCLUSIVE", os.str()};
  return {"PASS", os.str()};
}

Line run_claims(const std::string& pattern, const HarnessConfig& cfg) {
  try {
    return from_reports(verify_paper(pattern, cfg));
  } catch (const std::exception& e) {
    return {"FAIL", std::string("exception: ") + e.what()};
  }
}

// Criterion 7: satisfies_rees versus satisfies_bruteforce on a deterministic
// slice of the small-parameter corpus (the full product of all W with total
// length <= 6 against all identities with sides <= 6 over <= 3 letters is
// far beyond the runtime bound; the slice keeps every W shape class and all
// two-letter identities up to length 3 plus three-letter spot checks).
Line oracle_equivalence() {
  std::vector<Letter> ab = {let("x"), let("y")};
  std::vector<Word> short_words;  // all words over {x, y} with length <= 4
  std::vector<Word> frontier{Word{}};
  for (int len = 1; len <= 4; ++len) {
    std::vector<Word> next;
    for (const Word& w : frontier)
      for (const Letter& l : ab) next.push_back(w + l);
    short_words.insert(short_words.end(), next.begin(), next.end());
    frontier = std::move(next);
  }

  std::vector<std::vector<Word>> gens;
  for (const Word& w : short_words) gens.push_back({w});
  for (const Word& u : short_words)
    for (const Word& v : short_words)
      if (u.size() + v.size() <= 4 && shortlex_less(u, v)) gens.push_back({u, v});

  std::vector<Identity> ids;
  std::vector<Word> id_sides{Word{}};
  for (const Word& w : short_words)
    if (w.size() <= 3) id_sides.push_back(w);
  for (const Word& u : id_sides)
    for (const Word& v : id_sides)
      if (shortlex_less(u, v)) ids.push_back({u, v});
  // three-letter spot checks
  for (const char* s : {"x y z = x z y", "x y z = z y x", "x x y = y z z",
                        "x y x z = x z x y", "z x y = x y z"})
    ids.push_back(I(s));

  long checked = 0;
  for (const auto& g : gens) {
    Monoid m = rees_quotient(g);
    for (const Identity& id : ids) {
      SatVerdict a = satisfies_rees(m, id);
      SatVerdict b = satisfies_bruteforce(m.core, id);
      ++checked;
      if (a.status != b.status) {
        std::string ws;
        for (const Word& w : g) ws += " " + render(w);
        return {"FAIL", "disagreement on M(" + ws + " ) |= " + render(id)};
      }
    }
  }
  return {"PASS", std::to_string(checked) + " oracle comparisons, zero disagreements"};
}

// Criterion 10: normalizer round-trip on a seeded random corpus.  Inputs are
// island-form words (one island per letter per block, each multiple letter in
// a single block) perturbed by at most three legal moves, so derivations are
// short.  Interderivability is checked with prove() against the emitted
// normal-form identities plus short Psi instances; Found counts as complete,
// anything else as inconclusive.  FAIL is reserved for shape violations.
Line normalizer_round_trip() {
  std::mt19937 rng(12345);
  auto rnd = [&](int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
  };

  std::vector<Identity> psi_rules = psi1_hat();
  for (const Identity& id : psi2_hat()) psi_rules.push_back(id);
  for (const Identity& id : psi1(2)) psi_rules.push_back(id);

  int total = 0, complete = 0, inconclusive = 0;
  std::vector<Letter> pool = {let("x"), let("y"), let("z")};
  while (total < 100) {
    // build a base word: r simple letters, each multiple letter one island
    // in one block
    int r = rnd(0, 2);
    int mu = rnd(1, 3);
    std::vector<std::vector<std::pair<Letter, int>>> blocks(r + 1);
    for (int i = 0; i < mu; ++i) blocks[rnd(0, r)].push_back({pool[i], rnd(2, 3)});
    for (auto& b : blocks)
      std::shuffle(b.begin(), b.end(), rng);

    auto build = [&](const std::vector<std::vector<std::pair<Letter, int>>>& bs) {
      Word w;
      for (int i = 0; i <= r; ++i) {
        for (const auto& [l, e] : bs[static_cast<std::size_t>(i)]) w += power(l, e);
        if (i < r) w += let("t", i + 1);
      }
      return w;
    };
    Word u = build(blocks);
    if (u.size() > 10) continue;

    // perturb with 1..3 legal moves: swap adjacent islands or re-size one
    auto moved = blocks;
    int moves = rnd(1, 3);
    for (int s = 0; s < moves; ++s) {
      std::size_t bi = static_cast<std::size_t>(rnd(0, r));
      auto& b = moved[bi];
      if (b.size() >= 2 && rnd(0, 1) == 0) {
        int j = rnd(0, static_cast<int>(b.size()) - 2);
        std::swap(b[static_cast<std::size_t>(j)], b[static_cast<std::size_t>(j) + 1]);
      } else if (!b.empty()) {
        auto& isl = b[static_cast<std::size_t>(rnd(0, static_cast<int>(b.size()) - 1))];
        isl.second = isl.second == 2 ? 3 : 2;
      }
    }
    Word v = build(moved);
    if (v.size() > 10 || u == v) continue;
    ++total;

    Identity id{u, v};
    NormalForm nf;
    try {
      nf = normalize_modulo_O(id, 4);
    } catch (const std::exception& e) {
      return {"FAIL", "normalizer threw on " + render(id) + ": " + e.what()};
    }
    for (const Identity& out : nf.formA)
      if (!is_formA(out)) return {"FAIL", "formA shape violation: " + render(out)};
    for (const Identity& out : nf.formB)
      if (!is_formB(out)) return {"FAIL", "formB shape violation: " + render(out)};

    std::vector<Identity> rules;
    for (const Identity& out : nf.formA) rules.push_back(out);
    for (const Identity& out : nf.formB) rules.push_back(out);
    ProveBounds bounds;
    bounds.max_depth = 12;
    bounds.max_len = std::max(u.size(), v.size()) + 2;
    bounds.max_states = 200'000;
    bounds.match_budget = 50'000'000;
    // first try the emitted identities alone; widen to the short Psi
    // instances only when that is not enough
    ProveResult back = prove(id, rules, bounds);
    if (!(back.status == ProveStatus::Found && replay_proof(*back.proof, rules))) {
      for (const Identity& p : psi_rules) rules.push_back(p);
      back = prove(id, rules, bounds);
    }
    if (back.status == ProveStatus::Found && replay_proof(*back.proof, rules))
      ++complete;
    else
      ++inconclusive;
  }

  std::ostringstream os;
  os << complete << "/" << total << " round-trips complete, " << inconclusive
     << " inconclusive";
  if (inconclusive > 10) return {"FAIL", os.str() + " (limit 10)"};
  return {"PASS", os.str()};
}

}  // namespace

int main() {
  HarnessConfig cfg;

  auto t0 = std::chrono::steady_clock::now();
  print(1, run_claims("P4.1.subst.*", cfg), false);
  print(2, run_claims("P4.1.struct.*", cfg), false);
  print(3, run_claims("P4.3.join.*", cfg), false);
  print(4, run_claims("P4.1.strict.c2", cfg), false);
  print(5, run_claims("P4.1.strict.a", cfg), true);  // INCONCLUSIVE acceptable
  {
    auto chains = verify_paper("S5.chain.xyx", cfg);
    for (const Report& r : verify_paper("P4.3.chain.a11", cfg)) chains.push_back(r);
    for (const Report& r : verify_paper("S5.prove.*", cfg)) chains.push_back(r);
    print(6, from_reports(chains), false);
  }
  print(7, oracle_equivalence(), false);
  print(8, run_claims("S4.schema.*", cfg), false);
  print(9, run_claims("S3.*", cfg), false);
  print(10, normalizer_round_trip(), false);
  auto t1 = std::chrono::steady_clock::now();

  std::cout << "total: "
            << std::chrono::duration_cast<std::chrono::seconds>(t1 - t0).count() << " s, "
            << (failures == 0 ? "all criteria met" : std::to_string(failures) +
                                                         " criterion(s) missed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
