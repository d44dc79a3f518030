#include "monovar/schemas.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace monovar {

namespace {

const Letter kX = let("x");
const Letter kY = let("y");
const Letter kZ = let("z");
const Letter kT = let("t");

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

void require_perm(const PermTable& rho, int size, const char* what) {
  if (rho.size() != size || !rho.is_valid())
    throw std::invalid_argument(std::string(what) + ": expected a permutation of {1.." +
                                std::to_string(size) + "}");
}

}  // namespace

bool PermTable::is_valid() const {
  std::vector<bool> seen(images.size(), false);
  for (int v : images) {
    if (v < 1 || v > size() || seen[v - 1]) return false;
    seen[v - 1] = true;
  }
  return true;
}

PermTable identity_perm(int size) {
  PermTable p;
  p.images.resize(size);
  std::iota(p.images.begin(), p.images.end(), 1);
  return p;
}

std::vector<PermTable> all_permutations(int size) {
  PermTable p = identity_perm(size);
  std::vector<PermTable> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.images.begin(), p.images.end()));
  return out;
}

bool is_nm_permutation(const PermTable& rho, int n, int m) {
  if (rho.size() != n + m) return false;
  if (!rho.is_valid()) return false;
  auto low = [n](int v) { return 1 <= v && v <= n; };
  for (int i = 1; i < n + m; ++i) {
    bool a = low(rho.apply(i)), b = low(rho.apply(i + 1));
    if (a == b) return false;
  }
  return true;
}

std::vector<PermTable> enum_S(int n, int m) {
  if (n + m == 0) return {PermTable{}};  // S_0 := S_1 convention: one vacuous table
  std::vector<PermTable> out;
  for (const PermTable& p : all_permutations(n + m))
    if (is_nm_permutation(p, n, m)) out.push_back(p);
  return out;
}

// --- Word families -------------------------------------------------------

namespace {

Word a_head(int n) {  // prod_{i=1}^n z_i t_i
  Word w;
  for (int i = 1; i <= n; ++i) {
    w += let("z", i);
    w += let("t", i);
  }
  return w;
}

Word a_mid(int n, int m, const PermTable& rho, int lo, int hi) {
  Word w;
  for (int i = lo; i <= hi; ++i) w += let("z", rho.apply(i));
  (void)n;
  (void)m;
  return w;
}

Word a_tail(int n, int m) {  // prod_{i=n+1}^{n+m} t_i z_i
  Word w;
  for (int i = n + 1; i <= n + m; ++i) {
    w += let("t", i);
    w += let("z", i);
  }
  return w;
}

}  // namespace

Word word_a(int n, int m, const PermTable& rho) {
  require_perm(rho, n + m, "word_a");
  return a_head(n) + kX + a_mid(n, m, rho, 1, n + m) + kX + a_tail(n, m);
}

Word word_a_prime(int n, int m, const PermTable& rho) {
  require_perm(rho, n + m, "word_a_prime");
  return a_head(n) + a_mid(n, m, rho, 1, n + m) + kX + kX + a_tail(n, m);
}

Word word_a_dprime(int n, int m, const PermTable& rho) {
  require_perm(rho, n + m, "word_a_dprime");
  return a_head(n) + kX + kX + a_mid(n, m, rho, 1, n + m) + a_tail(n, m);
}

Word word_a_pq(int n, int m, const PermTable& rho, int p, int q) {
  require_perm(rho, n + m, "word_a_pq");
  require(0 <= p && p <= q && q <= n + m, "word_a_pq: need 0 <= p <= q <= n+m");
  return a_head(n) + a_mid(n, m, rho, 1, p) + kX + a_mid(n, m, rho, p + 1, q) + kX +
         a_mid(n, m, rho, q + 1, n + m) + a_tail(n, m);
}

Word word_c(int n, int m, int k, const PermTable& tau) {
  require_perm(tau, n + m + k, "word_c");
  Word w = a_head(n) + kX + kY + kT;
  for (int i = n + 1; i <= n + m; ++i) {
    w += let("z", i);
    w += let("t", i);
  }
  w += kX;
  for (int i = 1; i <= n + m + k; ++i) w += let("z", tau.apply(i));
  w += kY;
  for (int i = n + m + 1; i <= n + m + k; ++i) {
    w += let("t", i);
    w += let("z", i);
  }
  return w;
}

Word swap_first_occurrences(const Word& w, const Letter& a, const Letter& b) {
  Word r = w;
  auto ia = std::find(r.letters.begin(), r.letters.end(), a);
  auto ib = std::find(r.letters.begin(), r.letters.end(), b);
  if (ia == r.letters.end() || ib == r.letters.end())
    throw std::invalid_argument("swap_first_occurrences: letter absent");
  std::iter_swap(ia, ib);
  return r;
}

Word word_c_prime(int n, int m, int k, const PermTable& tau) {
  return swap_first_occurrences(word_c(n, m, k, tau), kX, kY);
}

Word word_d(int n, int m, int k, const PermTable& tau) {
  return reverse(word_c(n, m, k, tau));
}

Word word_d_prime(int n, int m, int k, const PermTable& tau) {
  return reverse(word_c_prime(n, m, k, tau));
}

// --- Identity sets --------------------------------------------------------

std::vector<Identity> phi_set(int n) {
  require(n >= 1, "phi_set: n >= 1");
  return {{power(kX, n), power(kX, n + 1)}, {power(kX, n) + kY, Word{} + kY + power(kX, n)}};
}

Identity omega_identity(int n) {
  require(n >= 1, "omega_identity: n >= 1");
  Word lhs = Word{} + kX;
  Word ts;
  for (int i = 1; i <= n; ++i) {
    lhs += let("t", i);
    lhs += kX;
    ts += let("t", i);
  }
  return {lhs, power(kX, n + 1) + ts};
}

Identity sigma_identity(int i) {
  switch (i) {
    case 1: return {parse_word("x y z x t y"), parse_word("y x z x t y")};
    case 2: return {parse_word("x z y t x y"), parse_word("x z y t y x")};
    case 3: return {parse_word("x z x y t y"), parse_word("x z y x t y")};
    default: throw std::invalid_argument("sigma_identity: i in {1,2,3}");
  }
}

namespace {

void push_unique(std::vector<Identity>& out, IdentitySet& seen, Identity id) {
  if (seen.insert(id).second) out.push_back(std::move(id));
}

}  // namespace

std::vector<Identity> psi1(int B) {
  std::vector<Identity> out;
  IdentitySet seen;
  for (int k = 1; k < B; ++k)
    for (int l = 1; k + l <= B; ++l)
      for (const PermTable& rho : all_permutations(k + l))
        push_unique(out, seen, {word_a(k, l, rho), word_a_prime(k, l, rho)});
  return out;
}

std::vector<Identity> psi2(int B) {
  std::vector<Identity> out;
  IdentitySet seen;
  for (int k = 1; k < B; ++k)
    for (int l = 1; k + l <= B; ++l)
      for (const PermTable& rho : all_permutations(k + l))
        push_unique(out, seen, {word_a(k, l, rho), word_a_dprime(k, l, rho)});
  return out;
}

std::vector<Identity> psi3(int B) {
  std::vector<Identity> out;
  IdentitySet seen;
  for (int k = 1; k < B; ++k)
    for (int l = 1; k + l < B; ++l)
      for (int m = 1; k + l + m <= B; ++m)
        for (const PermTable& rho : all_permutations(k + l + m)) {
          push_unique(out, seen, {word_c(k, l, m, rho), word_c_prime(k, l, m, rho)});
          push_unique(out, seen, {word_d(k, l, m, rho), word_d_prime(k, l, m, rho)});
        }
  return out;
}

std::vector<Identity> psi1_hat() {
  return {parse_identity("x y x t y = y x x t y"), parse_identity("y t x y x = y t y x x")};
}

std::vector<Identity> psi2_hat() {
  return {parse_identity("x y x t y = x x y t y"), parse_identity("y t x y x = y t x x y")};
}

// --- Variety presentations -------------------------------------------------

std::vector<Identity> VarietyPresentation::expand(int B) const {
  std::vector<Identity> out;
  IdentitySet seen;
  for (const Identity& id : explicit_ids) push_unique(out, seen, id);
  for (SchemaRef ref : schema_refs) {
    std::vector<Identity> ids;
    switch (ref) {
      case SchemaRef::Psi1: ids = psi1(B); break;
      case SchemaRef::Psi2: ids = psi2(B); break;
      case SchemaRef::Psi3: ids = psi3(B); break;
    }
    for (Identity& id : ids) push_unique(out, seen, std::move(id));
  }
  return out;
}

VarietyPresentation presentation(Family f, bool dualized, int n) {
  require(n >= 1, "presentation: n >= 1");
  VarietyPresentation pres;
  auto add = [&](const std::vector<Identity>& ids) {
    pres.explicit_ids.insert(pres.explicit_ids.end(), ids.begin(), ids.end());
  };
  switch (f) {
    case Family::P:
      pres.name = "P_" + std::to_string(n);
      add(phi_set(n));
      pres.schema_refs = {SchemaRef::Psi1, SchemaRef::Psi3};
      break;
    case Family::Q:
      pres.name = "Q_" + std::to_string(n);
      add(phi_set(n));
      pres.explicit_ids.push_back(sigma_identity(2));
      pres.explicit_ids.push_back(sigma_identity(3));
      break;
    case Family::R:
      pres = presentation(Family::P, false, n);
      pres.name = "R_" + std::to_string(n);
      pres.explicit_ids.push_back(omega_identity(n));
      break;
    case Family::S:
      pres = presentation(Family::Q, false, n);
      pres.name = "S_" + std::to_string(n);
      pres.explicit_ids.push_back(omega_identity(n));
      break;
    case Family::N:
      pres.name = "N";
      add(phi_set(2));
      pres.explicit_ids.push_back(omega_identity(2));
      pres.explicit_ids.push_back(sigma_identity(2));
      pres.explicit_ids.push_back(sigma_identity(3));
      break;
    case Family::O:
      pres.name = "O";
      pres.schema_refs = {SchemaRef::Psi1, SchemaRef::Psi3};
      break;
  }
  if (dualized) {
    pres.name += "^d";
    for (Identity& id : pres.explicit_ids) id = dual(id);
    for (SchemaRef& ref : pres.schema_refs) {
      if (ref == SchemaRef::Psi1)
        ref = SchemaRef::Psi2;
      else if (ref == SchemaRef::Psi2)
        ref = SchemaRef::Psi1;
    }
  }
  return pres;
}

// --- Section 4.1, case (i) --------------------------------------------------

Word ak_p(int n, int j) {
  Word w;
  for (int i = 1; i <= n; ++i) {
    w += let("z", i, j);
    w += let("t", i, j);
    w += let("zh", i, j);
    w += let("th", i, j);
  }
  return w;
}

Word ak_q(int n, int m, int j) {
  Word w;
  for (int i = n + 1; i <= n + m; ++i) {
    w += let("th", i, j);
    w += let("zh", i, j);
    w += let("t", i, j);
    w += let("z", i, j);
  }
  return w;
}

Word ak_r(int n, int m, const PermTable& rho, int j) {
  require_perm(rho, n + m, "ak_r");
  Word w;
  for (int i = 1; i <= n + m; ++i) w += let("z", rho.apply(i), j);
  return w;
}

Word word_ak(int n, int m, const PermTable& rho, int k) {
  require(n >= 2 && m >= 2 && k >= 3, "word_ak: need n,m >= 2 and k >= 3");
  require_perm(rho, n + m, "word_ak");
  require(is_nm_permutation(rho, n, m), "word_ak: rho must be an (n,m)-permutation");
  const int zh1 = rho.apply(1), zhL = rho.apply(n + m);
  Word w;
  for (int i = 1; i <= k; ++i) w += ak_p(n, i);
  w += let("x", 1);
  w += ak_r(n, m, rho, 1);
  for (int i = 1; i <= k - 2; ++i) {
    w += let("zh", zh1, i + 1);
    w += let("x", i + 1);
    w += ak_r(n, m, rho, i + 1);
    w += let("x", i);
    w += let("zh", zhL, i + 1);
  }
  w += let("zh", zh1, k);
  w += let("x", k);
  w += ak_r(n, m, rho, k);
  w += let("x", k - 1);
  w += kT;
  w += let("x", k);
  for (int i = 1; i <= k; ++i) w += ak_q(n, m, i);
  return w;
}

Substitution subst_psi_a(int n, int m, const PermTable& rho, int k) {
  require(n >= 2 && m >= 2 && k >= 3, "subst_psi_a: need n,m >= 2 and k >= 3");
  require_perm(rho, n + m, "subst_psi_a");
  const int zh1 = rho.apply(1), zhL = rho.apply(n + m);
  Substitution psi;
  psi.map[kT] =
      Word{} + let("zh", zhL, k) + Word{} + let("zh", zh1, k + 1) + let("x", k + 1) +
      ak_r(n, m, rho, k + 1);
  psi.map[let("th", n, k)] = Word{} + let("th", n, k) + ak_p(n, k + 1);
  psi.map[let("th", n + 1, 1)] = Word{} + kT + Word{} + let("x", k + 1) + let("th", n + 1, 1);
  return psi;
}

Word strictness_rhs_a(const Word& w) {
  const Letter x1 = let("x", 1);
  return power(x1, 2) + erase_letters(w, {x1});
}

// --- Section 4.1, cases (ii) and (iii) ---------------------------------------

Word ck_p(int n, int j) {
  Word w;
  for (int i = 1; i <= n; ++i) {
    w += let("z", i, j);
    w += let("t", i, j);
  }
  return w;
}

Word ck_q(int n, int m, int j) {
  Word w;
  for (int i = n + 1; i <= n + m; ++i) {
    w += let("z", i, j);
    w += let("t", i, j);
  }
  return w;
}

Word ck_r(CkCase c, int n, int m, const PermTable& rho, int j) {
  Word w = Word{} + let("s", j) + let("x", j);
  if (c == CkCase::II) {
    require_perm(rho, n + m, "ck_r");
    w += let("z", rho.apply(1), j);
    w += let("x", j + 1);
    for (int i = 2; i <= n + m - 1; ++i) w += let("z", rho.apply(i), j);
    w += let("y", j + 1);
    w += let("z", rho.apply(n + m), j);
  } else {
    require_perm(rho, 2 * (n + m) + 1, "ck_r");
    w += let("z", rho.apply(1), j);
    w += let("x", j + 1);
    w += primed(let("x", j + 1));
    for (int i = 2; i <= 2 * (n + m); ++i) w += let("z", rho.apply(i), j);
    w += primed(let("y", j + 1));
    w += let("y", j + 1);
    w += let("z", rho.apply(2 * (n + m) + 1), j);
  }
  w += let("y", j);
  return w;
}

Word ck_s(int j) {
  return Word{} + let("s", j) + let("x", j) + let("x", j + 1) + let("y", j + 1) +
         let("y", j);
}

Word ck_t(int n, int m, int j) {
  Word w;
  for (int i = n + m + 1; i <= 2 * (n + m) + 1; ++i) {
    w += let("t", i, j);
    w += let("z", i, j);
  }
  return w + ck_s(j);
}

Word word_ck(CkCase c, int n, int m, const PermTable& rho, int k) {
  if (c == CkCase::II)
    require(n >= 2 && m >= 2, "word_ck(ii): need n,m >= 2");
  else
    require(n >= 1 && m >= 1, "word_ck(iii): need n,m >= 1");
  require(k >= 0, "word_ck: k >= 0");
  Word w;
  for (int i = 0; i <= k; ++i) w += ck_p(n, 2 * i);
  w += let("x", 0);
  w += let("y", 0);
  for (int i = 1; i <= k; ++i) w += ck_s(2 * i - 1);
  w += let("s", 2 * k + 1);
  w += let("x", 2 * k + 1);
  w += primed(let("s", 2 * k + 1));
  w += let("y", 2 * k + 1);
  w += kT;
  for (int i = 0; i <= k; ++i) w += ck_q(n, m, 2 * i);
  for (int i = k; i >= 0; --i) w += ck_r(c, n, m, rho, 2 * i);
  if (c == CkCase::III)
    for (int i = 0; i <= k; ++i) w += ck_t(n, m, 2 * i);
  return w;
}

Substitution subst_psi_c(CkCase c, int n, int m, const PermTable& rho, int k) {
  Substitution psi;
  psi.map[kT] = Word{} + let("s", 2 * k + 3) + let("x", 2 * k + 3) +
                primed(let("s", 2 * k + 3)) + let("y", 2 * k + 3) + kT;
  psi.map[let("t", n, 2 * k)] = Word{} + let("t", n, 2 * k) + ck_p(n, 2 * k + 2);
  if (c == CkCase::II) {
    psi.map[let("t", n + m, 2 * k)] =
        Word{} + let("t", n + m, 2 * k) + ck_q(n, m, 2 * k + 2);
    psi.map[let("s", 2 * k)] = ck_r(c, n, m, rho, 2 * k + 2) + let("s", 2 * k);
  } else {
    // s_{2k} is multiple in case (iii) (it also occurs in the t-block), so
    // r_{2k+2} has to ride in on the last letter of q_{2k} instead.
    psi.map[let("t", n + m, 2 * k)] = Word{} + let("t", n + m, 2 * k) +
                                      ck_q(n, m, 2 * k + 2) +
                                      ck_r(c, n, m, rho, 2 * k + 2);
  }
  psi.map[primed(let("s", 2 * k + 1))] = Word{} + let("x", 2 * k + 2) + let("y", 2 * k + 2);
  return psi;
}

Word ck_psi_tail(CkCase c, int n, int m, int k) {
  if (c == CkCase::II) return {};
  return ck_t(n, m, 2 * k + 2);
}

Word strictness_rhs_c(const Word& w) {
  return swap_first_occurrences(w, let("x", 0), let("y", 0));
}

}  // namespace monovar
