#pragma once

#include "monovar/identities.hpp"
#include "monovar/words.hpp"

namespace monovar {

/// A permutation of {1..size} stored as its 1-based image sequence.
struct PermTable {
  std::vector<int> images;

  int size() const { return static_cast<int>(images.size()); }
  int apply(int i) const { return images[i - 1]; }  // i in 1..size
  bool is_valid() const;
  bool operator==(const PermTable&) const = default;
};

PermTable identity_perm(int size);

/// Full symmetric group S_size, lexicographic order; S_0 is the single
/// empty table.
std::vector<PermTable> all_permutations(int size);

/// rho in S_{n+m} is an (n,m)-permutation iff consecutive images alternate
/// between [1,n] and (n,n+m]; vacuous for n+m <= 1.
bool is_nm_permutation(const PermTable& rho, int n, int m);
std::vector<PermTable> enum_S(int n, int m);

// --- Word families -------------------------------------------------------

Word word_a(int n, int m, const PermTable& rho);
Word word_a_prime(int n, int m, const PermTable& rho);
Word word_a_dprime(int n, int m, const PermTable& rho);
/// General form with the two x's after the p-th and q-th permuted letters;
/// endpoints: (0,n+m) = a, (n+m,n+m) = a', (0,0) = a''.
Word word_a_pq(int n, int m, const PermTable& rho, int p, int q);

Word word_c(int n, int m, int k, const PermTable& tau);
Word word_c_prime(int n, int m, int k, const PermTable& tau);
Word word_d(int n, int m, int k, const PermTable& tau);
Word word_d_prime(int n, int m, int k, const PermTable& tau);

/// Swaps the letters at the first occurrences of a and b.
Word swap_first_occurrences(const Word& w, const Letter& a, const Letter& b);

// --- Identity sets --------------------------------------------------------

std::vector<Identity> phi_set(int n);       // {x^n = x^{n+1}, x^n y = y x^n}
Identity omega_identity(int n);             // x (prod t_i x) = x^{n+1} prod t_i
Identity sigma_identity(int i);             // i in {1,2,3}
std::vector<Identity> psi1(int B);          // a = a', k+l <= B, k,l >= 1
std::vector<Identity> psi2(int B);          // a = a''
std::vector<Identity> psi3(int B);          // c = c' and d = d', k+l+m <= B
std::vector<Identity> psi1_hat();
std::vector<Identity> psi2_hat();

// --- Variety presentations -------------------------------------------------

enum class SchemaRef { Psi1, Psi2, Psi3 };

struct VarietyPresentation {
  std::string name;
  std::vector<Identity> explicit_ids;
  std::vector<SchemaRef> schema_refs;

  /// Explicit identities plus schema instances with parameter sum <= B,
  /// duplicate-free under canonical orientation, deterministic order.
  std::vector<Identity> expand(int B) const;
};

enum class Family { P, Q, R, S, N, O };

VarietyPresentation presentation(Family f, bool dualized, int n);

// --- Section 4.1 constructions ---------------------------------------------

/// Case (i): building blocks of a_k (n,m >= 2, rho an (n,m)-permutation).
Word ak_p(int n, int j);
Word ak_q(int n, int m, int j);
Word ak_r(int n, int m, const PermTable& rho, int j);
Word word_ak(int n, int m, const PermTable& rho, int k);  // k >= 3
/// psi with psi(a_k) * ak_q(k+1) = a_{k+1}.
Substitution subst_psi_a(int n, int m, const PermTable& rho, int k);
/// x_1^2 * (w with x_1 deleted).
Word strictness_rhs_a(const Word& w);

/// Cases (ii) and (iii) of the c_k construction.
enum class CkCase { II, III };

Word ck_p(int n, int j);
Word ck_q(int n, int m, int j);
Word ck_r(CkCase c, int n, int m, const PermTable& rho, int j);
Word ck_s(int j);
Word ck_t(int n, int m, int j);  // case (iii) only
Word word_ck(CkCase c, int n, int m, const PermTable& rho, int k);  // k >= 0
/// psi with psi(c_k) * ck_psi_tail(...) = c_{k+1}; the tail is empty in
/// case (ii) and the block t_{2k+2} in case (iii).
Substitution subst_psi_c(CkCase c, int n, int m, const PermTable& rho, int k);
Word ck_psi_tail(CkCase c, int n, int m, int k);
/// c with the first occurrences of x_0 and y_0 swapped.
Word strictness_rhs_c(const Word& w);

}  // namespace monovar
