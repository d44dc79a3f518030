#pragma once

#include "monovar/monoids.hpp"

namespace monovar {

struct AnalysisBounds {
  std::size_t max_len = 0;  // 0: length(w) + 2
  int occ_cap = 0;          // 0: max(occ in w, idempotent index of the monoids)
  std::int64_t node_budget = 500'000'000;
};

struct EquivResult {
  WordSet words;    // every v (within bounds) with M |= w = v for all M; contains w
  bool widened = false;   // search alphabet extended by one fresh letter
  bool resource = false;  // budget fired; 'words' may be incomplete
};

/// All words v with |v| <= max_len and per-letter occurrences <= occ_cap such
/// that every monoid in the list satisfies w = v.  The alphabet is pinned to
/// alf(w) when every monoid has a zero distinct from its identity; otherwise
/// it is widened by a single fresh letter (reported via 'widened').
EquivResult equivalent_words(const Word& w, const std::vector<Monoid>& ms,
                             const AnalysisBounds& bounds = {});

struct IsotermVerdict {
  enum class Status { NotIsoterm, IsotermWithinBounds, Resource };
  Status status;
  std::optional<Word> witness;  // on NotIsoterm: some v != w, replayable
  AnalysisBounds bounds_used;
  bool widened = false;
};

IsotermVerdict is_isoterm(const Word& w, const std::vector<Monoid>& ms,
                          const AnalysisBounds& bounds = {});

struct MembershipVerdict {
  enum class Status { MemberWithinBounds, NonMember, Resource };
  Status status;
  std::optional<Word> failing_word;  // on NonMember
  std::optional<Word> witness;       // equivalent word proving non-isotermality
};

/// Jackson's lemma: M(W') lies in var(M) iff each w in W' is an isoterm.
MembershipVerdict member_MW(const std::vector<Word>& W_prime, const Monoid& m,
                            const AnalysisBounds& bounds = {});

/// w is an isoterm for var(M_1) v ... v var(M_k) iff it is one for every M_i.
MembershipVerdict join_membership(const Word& w, const std::vector<Monoid>& ms,
                                  const AnalysisBounds& bounds = {});

/// Minimal number of adjacent swaps of two distinct multiple letters (inside
/// a block) turning w into w2; nullopt if unreachable.  Throws when the two
/// words do not share per-block letter statistics.
std::optional<int> invertibility_degree(const Word& w, const Word& w2);

/// x^{e_0} prod t_i x^{e_i} = x^{f_0} prod t_i x^{f_i} over one multiple
/// letter and distinct simple letters.
bool is_formA(const Identity& id);
/// Sides differ exactly by swapping adjacent islands x^p, y^q in one block;
/// every other block is a power of a single letter.
bool is_formB(const Identity& id);

struct NormalForm {
  std::vector<Identity> formA;
  std::vector<Identity> formB;
};

/// The three-stage normalization: (1) merge islands per block, (2) emit
/// per-letter projections equalizing per-block occurrence counts, (3) resolve
/// the residual invertible identity into island swaps.  Output identities
/// plus Psi_1(B) u Psi_3(B) are interderivable with the input (bound-relative).
/// Requires both sides to share the same sequence of common simple letters.
NormalForm normalize_modulo_O(const Identity& id, int B);

}  // namespace monovar
