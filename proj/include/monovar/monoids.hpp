#pragma once

#include <memory>

#include "monovar/identities.hpp"
#include "monovar/schemas.hpp"
#include "monovar/words.hpp"

namespace monovar {

/// Finite monoid as a multiplication table.  Element 'one' is the identity;
/// 'zero', when present, is absorbing.  Labels (if any) name the elements.
struct FiniteMonoid {
  int size = 0;
  std::vector<int> table;  // row-major: table[a * size + b] = a * b
  int one = 0;
  std::optional<int> zero;
  std::vector<Word> labels;  // empty, or one Word per element

  int mul(int a, int b) const { return table[a * size + b]; }
  bool is_associative() const;
  /// Product of the images of w's letters; letters must all be mapped.
  int eval(const Word& w, const std::map<Letter, int>& phi) const;
};

bool is_aperiodic(const FiniteMonoid& m);
bool has_central_idempotents(const FiniteMonoid& m);
bool in_Acen_class(const FiniteMonoid& m);
/// Least k >= 1 with a^k = a^{k+1} for every element a (aperiodic only).
int idempotent_index(const FiniteMonoid& m);

/// Monoid with provenance.  The core table is always materialized; the kind
/// lets satisfaction checks pick a specialized algorithm.
struct Monoid {
  enum class Kind { Table, Rees, Product, Dual };

  Kind kind = Kind::Table;
  FiniteMonoid core;
  std::vector<Word> rees_words;                         // Rees: the generating set W
  std::vector<std::shared_ptr<const Monoid>> parts;     // Product: the two factors
  std::shared_ptr<const Monoid> base;                   // Dual: the original
};

/// M(W): elements are the factors of words in W plus a zero; the product of
/// two factors is their concatenation when that is again a factor, else zero.
/// Element order is shortlex with the zero last; the identity (empty factor)
/// is element 0.  rees_quotient({}) is the two-element {1, 0} monoid.
/// Tables are cached on disk under MONOVAR_CACHE_DIR (or cache_dir) when set.
Monoid rees_quotient(const std::vector<Word>& W, const std::string& cache_dir = "");

Monoid table_monoid(FiniteMonoid core);
Monoid direct_product(const Monoid& a, const Monoid& b);
Monoid dual_monoid(const Monoid& m);

struct SatVerdict {
  enum class Status { Holds, Fails, Resource };
  Status status = Status::Holds;
  std::optional<std::map<Letter, int>> witness;  // letter -> element, on Fails

  bool holds() const { return status == Status::Holds; }
};

/// Exhaustive check over all |M|^|alf| substitutions, early exit, first
/// witness in canonical (letter, element-index) order.
SatVerdict satisfies_bruteforce(const FiniteMonoid& m, const Identity& id,
                                SearchBudget* budget = nullptr);

/// Same verdict as satisfies_bruteforce, but searches factorizations of the
/// factors of W instead of raw substitutions (sound for Rees monoids only).
SatVerdict satisfies_rees(const Monoid& m, const Identity& id,
                          SearchBudget* budget = nullptr);

/// Dispatcher: Rees -> satisfies_rees, Product -> per-factor, Dual -> check
/// the reversed identity on the base, Table -> brute force.
SatVerdict satisfies(const Monoid& m, const Identity& id, SearchBudget* budget = nullptr);

struct PresentationVerdict {
  enum class Status { MemberWithinBound, NonMember, Resource };
  Status status = Status::MemberWithinBound;
  std::optional<Identity> failed_identity;
  std::optional<std::map<Letter, int>> witness;
};

PresentationVerdict satisfies_presentation(const Monoid& m, const VarietyPresentation& pres,
                                           int B, SearchBudget* budget = nullptr);

/// {"elements":[labels], "one":idx, "zero":idx|null, "table":[[int]]}.
std::string monoid_to_json(const FiniteMonoid& m);
FiniteMonoid monoid_from_json(const std::string& text);

}  // namespace monovar
