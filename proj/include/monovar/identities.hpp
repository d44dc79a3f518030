#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "monovar/words.hpp"

namespace monovar {

/// Finite letter -> word map; unmapped letters are fixed.  Images may be
/// empty (erasing substitutions are essential to the deduction machinery).
struct Substitution {
  std::map<Letter, Word> map;

  const Word* image(const Letter& l) const;
  bool operator==(const Substitution&) const = default;
};

/// Homomorphic extension: apply(phi, uv) = apply(phi, u) apply(phi, v).
Word apply(const Substitution& phi, const Word& w);

/// Ordered pair of words with unordered semantics: {u, v} and {v, u} denote
/// the same identity.  canonical() orients the smaller side (shortlex) first.
struct Identity {
  Word lhs;
  Word rhs;

  bool is_trivial() const { return lhs == rhs; }
  Identity canonical() const;
  bool operator==(const Identity&) const = default;
};

struct IdentityCanonicalLess {
  bool operator()(const Identity& a, const Identity& b) const;
};

using IdentitySet = std::set<Identity, IdentityCanonicalLess>;

std::string render(const Identity& id);
/// Text form "<word> = <word>".
Identity parse_identity(const std::string& text);

/// Both sides reversed; an involution.
Identity dual(const Identity& id);

/// True when a letter bijection turns a into b (as an unordered pair).
bool equal_up_to_renaming(const Identity& a, const Identity& b);

/// Node budget shared across a backtracking search.  `exceeded` is sticky:
/// once set, callers must treat any negative answer as inconclusive.
struct SearchBudget {
  std::int64_t nodes_left = 1'000'000'000;
  bool exceeded = false;

  bool tick() {
    if (--nodes_left < 0) {
      exceeded = true;
      return false;
    }
    return true;
  }
};

/// Enumerates every substitution phi with domain in alf(pattern) extending
/// `seed` such that phi(pattern) = target.  Complete and terminating; each
/// solution is produced exactly once, in a deterministic order (images tried
/// shortest first).  The callback returns true to stop early.
bool for_each_match(const Word& pattern, const Word& target, const Substitution& seed,
                    const std::function<bool(const Substitution&)>& fn,
                    SearchBudget* budget = nullptr);

std::vector<Substitution> match_pattern(const Word& pattern, const Word& target);

/// One rewrite step: {u, v} = {a phi(s) b, a phi(t) b} for rule s ~ t.
/// `reversed` records whether u matched the rule's rhs.
struct StepWitness {
  Word prefix;
  Word suffix;
  Substitution phi;
  bool reversed = false;
};

std::optional<StepWitness> directly_deducible(const Identity& id, const Identity& rule,
                                              SearchBudget* budget = nullptr);

/// Replays a witness: returns the word a phi(other side) b obtained by
/// rewriting `from` according to the witness of `rule`.
Word apply_step(const Word& from, const Identity& rule, const StepWitness& w);

struct StepVerdict {
  bool valid = false;
  bool trivial = false;
  int rule_index = -1;
  std::optional<StepWitness> witness;
};

struct ChainVerdict {
  std::vector<StepVerdict> steps;
  bool budget_exceeded = false;

  bool valid() const;
};

/// Per-step check of a deduction chain against a rule set; a trivial step
/// (equal adjacent words) is always valid.
ChainVerdict check_chain(const std::vector<Word>& chain, const std::vector<Identity>& sigma,
                         SearchBudget* budget = nullptr);

struct ProofStep {
  Identity rule;
  StepWitness witness;
};

/// Deduction witness: chain[i+1] = apply_step(chain[i], steps[i]).
struct Proof {
  std::vector<Word> chain;
  std::vector<ProofStep> steps;
};

struct ProveBounds {
  std::size_t max_len = 0;  // 0: derive from goal (2*max side + 4)
  int max_depth = 12;
  std::size_t max_states = 1'000'000;
  std::int64_t match_budget = 200'000'000;
};

enum class ProveStatus {
  Found,              // proof returned; replays under check_chain
  Exhausted,          // no derivation exists within the given bounds
  LimitExceeded,      // a resource cap fired before the search completed
};

struct ProveResult {
  ProveStatus status;
  std::optional<Proof> proof;
};

/// Breadth-first search over canonically-ordered words.  Deterministic for
/// fixed bounds; shortest proofs, ties broken by shortlex order.
ProveResult prove(const Identity& goal, const std::vector<Identity>& sigma,
                  const ProveBounds& bounds = {});

/// Sanity helper used by tests: validates a Proof step by step.
bool replay_proof(const Proof& proof, const std::vector<Identity>& sigma);

}  // namespace monovar
