#include "monovar/harness.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <chrono>
#include <regex>
#include <sstream>
#include <stdexcept>

namespace monovar {

namespace {

using nlohmann::json;

const PermTable kRho22{{1, 3, 2, 4}};          // LHLH, lows in natural order
const PermTable kRho11iii{{3, 1, 4, 2, 5}};    // HLHLH over {1..5}

Word W(const std::string& s) { return parse_word(s); }
Identity I(const std::string& s) { return parse_identity(s); }

Report pass(std::string params = "") {
  return {"", Report::Status::PASS, "", std::move(params), 0};
}
Report fail(std::string witness, std::string params = "") {
  return {"", Report::Status::FAIL, std::move(witness), std::move(params), 0};
}
Report inconclusive(std::string witness, std::string params = "") {
  return {"", Report::Status::INCONCLUSIVE, std::move(witness), std::move(params), 0};
}

std::string first_diff(const Word& a, const Word& b) {
  std::size_t i = 0;
  while (i < a.size() && i < b.size() && a[i] == b[i]) ++i;
  std::ostringstream os;
  os << "first difference at position " << i << ": got " << render(a) << ", want "
     << render(b);
  return os.str();
}

Report expect_equal(const Word& got, const Word& want, std::string params) {
  if (got == want) return pass(std::move(params));
  return fail(first_diff(got, want), std::move(params));
}

Report subst_a_claim(int k, const HarnessConfig&) {
  Word got = apply(subst_psi_a(2, 2, kRho22, k), word_ak(2, 2, kRho22, k)) +
             ak_q(2, 2, k + 1);
  return expect_equal(got, word_ak(2, 2, kRho22, k + 1),
                      "n=2 m=2 rho=(1,3,2,4) k=" + std::to_string(k));
}

Report subst_c_claim(CkCase c, int n, int m, const PermTable& rho, int k,
                     const HarnessConfig&) {
  Word got = apply(subst_psi_c(c, n, m, rho, k), word_ck(c, n, m, rho, k)) +
             ck_psi_tail(c, n, m, k);
  return expect_equal(got, word_ck(c, n, m, rho, k + 1),
                      "case=" + std::string(c == CkCase::II ? "ii" : "iii") +
                          " n=" + std::to_string(n) + " m=" + std::to_string(m) +
                          " k=" + std::to_string(k));
}

Report structure_claim(const std::vector<Word>& ws, std::string params) {
  for (const Word& w : ws) {
    if (!is_square_free(w)) return fail("square found in " + render(w), params);
    if (!length2_factors_unique(w)) {
      // name the offending factor and both positions: that is the minimal diff
      std::string detail = "repeated length-2 factor";
      for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        for (std::size_t j = i + 1; j + 1 < w.size(); ++j) {
          if (w[i] == w[j] && w[i + 1] == w[j + 1]) {
            detail += " \"" + render(Word{{w[i], w[i + 1]}}) + "\" at positions " +
                      std::to_string(i) + " and " + std::to_string(j) + " of " +
                      render(w);
            return fail(std::move(detail), std::move(params));
          }
        }
      }
      return fail(detail + " in " + render(w), params);
    }
  }
  return pass(std::move(params));
}

std::string cache_dir_of(const HarnessConfig& cfg) { return cfg.cache_dir; }

Report join_claim(const Word& w, const std::vector<std::vector<Word>>& gens,
                  const HarnessConfig& cfg) {
  std::vector<Monoid> ms;
  std::string params = "w=" + render(w) + ", factors:";
  for (const auto& g : gens) {
    ms.push_back(rees_quotient(g, cache_dir_of(cfg)));
    for (const Word& u : g) params += " " + render(u);
  }
  AnalysisBounds b{w.size() + 1, 3, cfg.budget};
  MembershipVerdict v = join_membership(w, ms, b);
  switch (v.status) {
    case MembershipVerdict::Status::MemberWithinBounds: return pass(std::move(params));
    case MembershipVerdict::Status::NonMember:
      return fail("equivalent word " + render(*v.witness), std::move(params));
    case MembershipVerdict::Status::Resource:
      return inconclusive("node budget exhausted", std::move(params));
  }
  return fail("unreachable", std::move(params));
}

Report strict_c2_claim(const HarnessConfig& cfg) {
  PermTable rho = identity_perm(4);
  Word c0 = word_ck(CkCase::II, 2, 2, rho, 0);
  Word c1 = word_ck(CkCase::II, 2, 2, rho, 1);
  Monoid m = rees_quotient({c0}, cache_dir_of(cfg));
  std::string params = "case=ii n=2 m=2 k=0, |c0|=" + std::to_string(c0.size()) +
                       ", |c1|=" + std::to_string(c1.size());
  SearchBudget budget{cfg.budget, false};
  SatVerdict sat = satisfies_rees(m, {c1, strictness_rhs_c(c1)}, &budget);
  if (sat.status == SatVerdict::Status::Resource)
    return inconclusive("budget exhausted during satisfaction check", params);
  if (!sat.holds()) return fail("M(c0) falsifies c1 = c1'", params);
  IsotermVerdict iso = is_isoterm(c0, {m}, {0, 0, cfg.budget});
  if (iso.status == IsotermVerdict::Status::Resource)
    return inconclusive("budget exhausted during isoterm search", params);
  if (iso.status == IsotermVerdict::Status::NotIsoterm)
    return fail("c0 not an isoterm: " + render(*iso.witness), params);
  return pass(std::move(params));
}

Report strict_a_claim(const HarnessConfig& cfg) {
  Word a3 = word_ak(2, 2, kRho22, 3);
  Word a4 = word_ak(2, 2, kRho22, 4);
  Monoid m = rees_quotient({a3}, cache_dir_of(cfg));
  std::string params = "n=2 m=2 rho=(1,3,2,4), |a3|=" + std::to_string(a3.size()) +
                       ", |a4|=" + std::to_string(a4.size());
  SearchBudget budget{cfg.budget, false};
  SatVerdict sat = satisfies_rees(m, {a4, strictness_rhs_a(a4)}, &budget);
  if (sat.status == SatVerdict::Status::Resource)
    return inconclusive("budget exhausted during satisfaction check", params);
  if (!sat.holds()) return fail("M(a3) falsifies a4 = x1^2 (a4 without x1)", params);
  return pass(std::move(params));
}

Report chain_xyx_claim(const HarnessConfig&) {
  std::vector<Identity> sigma = phi_set(2);
  sigma.push_back(I("x y x = x x y"));  // hypothesis x y x = x^s y x^t, s=2, t=0
  std::vector<Word> chain = {W("x y x"), W("x x y"), W("y x x"), W("y x x"), W("x x y")};
  ChainVerdict v = check_chain(chain, sigma);
  if (v.valid()) return pass("t=0, hypothesis x y x = x^2 y");
  for (std::size_t i = 0; i < v.steps.size(); ++i)
    if (!v.steps[i].valid)
      return fail("step " + std::to_string(i) + " not deducible", "t=0");
  return fail("chain invalid", "t=0");
}

Report prove_claim(const Identity& goal, std::vector<Identity> sigma, int depth,
                   std::string params) {
  ProveBounds b;
  b.max_depth = depth;
  ProveResult r = prove(goal, sigma, b);
  switch (r.status) {
    case ProveStatus::Found:
      if (!replay_proof(*r.proof, sigma)) return fail("proof does not replay", params);
      return pass(std::move(params));
    case ProveStatus::Exhausted:
      return fail("no derivation within bounds", std::move(params));
    case ProveStatus::LimitExceeded:
      return inconclusive("search limits exceeded", std::move(params));
  }
  return fail("unreachable", std::move(params));
}

Report chain_a11_claim(const HarnessConfig& cfg) {
  PermTable id2 = identity_perm(2);
  Identity goal{word_a(1, 1, id2), word_a_prime(1, 1, id2)};
  std::vector<Identity> sigma = {sigma_identity(3)};
  for (const Identity& h : psi1_hat()) sigma.push_back(h);
  return prove_claim(goal, std::move(sigma), cfg.depth,
                     "goal " + render(goal) + " from sigma3 + hat-Psi1");
}

Report prove_omega2_claim(const HarnessConfig& cfg) {
  std::vector<Identity> sigma = phi_set(2);
  sigma.push_back(omega_identity(2));
  return prove_claim(omega_identity(2), std::move(sigma), cfg.depth,
                     "omega_2 from Phi_2 + omega_2");
}

Report prove_x3x4_claim(const HarnessConfig&) {
  return prove_claim(I("x x x = x x x x"), phi_set(2), 3, "x^3 = x^4 from Phi_2, depth 3");
}

Report schema_apq_claim(const HarnessConfig&) {
  for (int n = 1; n <= 4; ++n)
    for (int m = 1; n + m <= 5; ++m)
      for (const PermTable& rho : enum_S(n, m)) {
        if (word_a_pq(n, m, rho, 0, n + m) != word_a(n, m, rho))
          return fail("a^{0,n+m} != a at n=" + std::to_string(n) +
                      " m=" + std::to_string(m));
        if (word_a_pq(n, m, rho, n + m, n + m) != word_a_prime(n, m, rho))
          return fail("a^{n+m,n+m} != a' at n=" + std::to_string(n) +
                      " m=" + std::to_string(m));
        if (word_a_pq(n, m, rho, 0, 0) != word_a_dprime(n, m, rho))
          return fail("a^{0,0} != a'' at n=" + std::to_string(n) +
                      " m=" + std::to_string(m));
      }
  return pass("n+m <= 5, all (n,m)-permutations");
}

bool dual_lands_in(const std::vector<Identity>& from, const std::vector<Identity>& into) {
  for (const Identity& id : from) {
    Identity d = dual(id);
    bool hit = false;
    for (const Identity& cand : into)
      if (equal_up_to_renaming(d, cand)) {
        hit = true;
        break;
      }
    if (!hit) return false;
  }
  return true;
}

Report schema_psi12_claim(const HarnessConfig&) {
  if (!dual_lands_in(psi1(4), psi2(4))) return fail("some dual of Psi_1(4) misses Psi_2(4)");
  if (!dual_lands_in(psi2(4), psi1(4))) return fail("some dual of Psi_2(4) misses Psi_1(4)");
  return pass("k+l <= 4");
}

Report schema_psi3_claim(const HarnessConfig&) {
  if (!dual_lands_in(psi3(4), psi3(4))) return fail("Psi_3(4) not closed under duals");
  return pass("k+l+m <= 4");
}

Report schema_counts_claim(const HarnessConfig&) {
  auto count = [](int n, int m) { return enum_S(n, m).size(); };
  if (count(1, 1) != 2) return fail("|S_{1,1}| != 2");
  if (count(2, 1) != 2) return fail("|S_{2,1}| != 2");
  if (count(1, 2) != 2) return fail("|S_{1,2}| != 2");
  if (count(2, 2) != 8) return fail("|S_{2,2}| != 8");
  if (count(2, 0) != 0) return fail("|S_{2,0}| != 0");
  return pass();
}

Report acen_claim(const HarnessConfig& cfg) {
  std::vector<std::vector<Word>> corpus = {
      {W("x y")},        {W("x y x")},      {W("x x")},
      {W("y x x t y")},  {W("x x y t y")},  {W("y t y x x")},
      {W("y t x x y")},  {W("x x"), W("x y x")},
      {word_ck(CkCase::II, 2, 2, identity_perm(4), 0)},
      {word_ck(CkCase::III, 1, 1, kRho11iii, 0)},
  };
  for (const auto& g : corpus) {
    Monoid m = rees_quotient(g, cache_dir_of(cfg));
    if (!in_Acen_class(m.core)) {
      std::string ws;
      for (const Word& u : g) ws += " " + render(u);
      return fail("M(" + ws + " ) not aperiodic with central idempotents");
    }
  }
  return pass(std::to_string(corpus.size()) + " Rees quotients");
}

Report member_xyx_claim(const HarnessConfig& cfg) {
  Monoid m = rees_quotient({W("x y x")}, cache_dir_of(cfg));
  SearchBudget budget{cfg.budget, false};
  PresentationVerdict v =
      satisfies_presentation(m, presentation(Family::P, false, 2), 3, &budget);
  switch (v.status) {
    case PresentationVerdict::Status::MemberWithinBound:
      return pass("M(x y x) vs P_2, B=3");
    case PresentationVerdict::Status::NonMember:
      return fail("failed identity " + render(*v.failed_identity), "B=3");
    case PresentationVerdict::Status::Resource:
      return inconclusive("budget exhausted", "B=3");
  }
  return fail("unreachable");
}

Report basis_n1_claim(const HarnessConfig&) {
  std::vector<Identity> ids = enumerate_Rn_basis_candidates(1);
  if (ids.size() != 173)
    return fail("count " + std::to_string(ids.size()) + ", hand count 173");
  bool has_comm = false;
  for (const Identity& id : ids) {
    if (!is_formA(id) && !is_formB(id)) return fail("shape violation: " + render(id));
    if (equal_up_to_renaming(id, I("x y = y x"))) has_comm = true;
    Identity reparsed = parse_identity(render(id));
    if (!(reparsed == id.canonical() || reparsed == id))
      return fail("render/parse unstable: " + render(id));
  }
  if (!has_comm) return fail("x y = y x missing");
  return pass("n=1: 4 formA + 169 formB");
}

std::vector<Claim> build_registry() {
  std::vector<Claim> claims;
  auto add = [&](std::string id, std::string desc, std::string loc,
                 std::function<Report(const HarnessConfig&)> fn) {
    claims.push_back({std::move(id), std::move(desc), std::move(loc), std::move(fn)});
  };

  add("P4.1.strict.a", "M(a_3) satisfies a_4 = x_1^2 (a_4 without x_1)", "section 4.1",
      strict_a_claim);
  add("P4.1.strict.c2", "M(c_0) satisfies c_1 = c_1' and c_0 is an isoterm (case ii)",
      "section 4.1", strict_c2_claim);
  add("P4.1.struct.a", "a_3, a_4 square-free with unique length-2 factors", "section 4.1",
      [](const HarnessConfig&) {
        return structure_claim({word_ak(2, 2, kRho22, 3), word_ak(2, 2, kRho22, 4)},
                               "n=2 m=2 rho=(1,3,2,4)");
      });
  add("P4.1.struct.c2", "c_0, c_1 square-free with unique length-2 factors (case ii)",
      "section 4.1", [](const HarnessConfig&) {
        PermTable rho = identity_perm(4);
        return structure_claim({word_ck(CkCase::II, 2, 2, rho, 0),
                                word_ck(CkCase::II, 2, 2, rho, 1)},
                               "case=ii n=2 m=2");
      });
  add("P4.1.struct.c3", "c_0, c_1 square-free with unique length-2 factors (case iii)",
      "section 4.1", [](const HarnessConfig&) {
        return structure_claim({word_ck(CkCase::III, 1, 1, kRho11iii, 0),
                                word_ck(CkCase::III, 1, 1, kRho11iii, 1)},
                               "case=iii n=1 m=1");
      });
  add("P4.1.subst.a.k3", "psi(a_3) q_4 = a_4", "section 4.1",
      [](const HarnessConfig& c) { return subst_a_claim(3, c); });
  add("P4.1.subst.a.k4", "psi(a_4) q_5 = a_5", "section 4.1",
      [](const HarnessConfig& c) { return subst_a_claim(4, c); });
  add("P4.1.subst.c2.k0", "psi(c_0) = c_1, case ii", "section 4.1",
      [](const HarnessConfig& c) {
        return subst_c_claim(CkCase::II, 2, 2, identity_perm(4), 0, c);
      });
  add("P4.1.subst.c2.k1", "psi(c_1) = c_2, case ii", "section 4.1",
      [](const HarnessConfig& c) {
        return subst_c_claim(CkCase::II, 2, 2, identity_perm(4), 1, c);
      });
  add("P4.1.subst.c3.k0", "psi(c_0) t_2 = c_1, case iii", "section 4.1",
      [](const HarnessConfig& c) {
        return subst_c_claim(CkCase::III, 1, 1, kRho11iii, 0, c);
      });
  add("P4.1.subst.c3.k1", "psi(c_1) t_4 = c_2, case iii", "section 4.1",
      [](const HarnessConfig& c) {
        return subst_c_claim(CkCase::III, 1, 1, kRho11iii, 1, c);
      });
  add("P4.3.chain.a11", "a_{1,1} = a'_{1,1} from sigma_3 and hat-Psi_1", "section 4.3",
      chain_a11_claim);
  add("P4.3.join.1", "M(xyxty) in var(M(yx^2ty) x M(x^2yty))", "section 4.3",
      [](const HarnessConfig& c) {
        return join_claim(W("x y x t y"), {{W("y x x t y")}, {W("x x y t y")}}, c);
      });
  add("P4.3.join.2", "M(z1t1xz2z1xt2z2) in var(M(yx^2ty) x M(ytx^2y))", "section 4.3",
      [](const HarnessConfig& c) {
        return join_claim(W("z_1 t_1 x z_2 z_1 x t_2 z_2"),
                          {{W("y x x t y")}, {W("y t x x y")}}, c);
      });
  add("P4.3.join.3", "M(z1t1xz1z2xt2z2) in var(M(ytyx^2) x M(x^2yty))", "section 4.3",
      [](const HarnessConfig& c) {
        return join_claim(W("z_1 t_1 x z_1 z_2 x t_2 z_2"),
                          {{W("y t y x x")}, {W("x x y t y")}}, c);
      });
  add("P4.3.join.4", "M(ytxyx) in var(M(ytyx^2) x M(ytx^2y))", "section 4.3",
      [](const HarnessConfig& c) {
        return join_claim(W("y t x y x"), {{W("y t y x x")}, {W("y t x x y")}}, c);
      });
  add("S3.acen", "every Rees quotient in the corpus is aperiodic with central idempotents",
      "section 3", acen_claim);
  add("S3.member.xyx", "M(x y x) satisfies the P_2 presentation up to bound 3",
      "section 3", member_xyx_claim);
  add("S4.schema.apq", "a^{p,q} endpoints reproduce a, a', a''", "section 4.2",
      schema_apq_claim);
  add("S4.schema.counts", "(n,m)-permutation counts", "section 4.1", schema_counts_claim);
  add("S4.schema.psi12", "duals swap Psi_1 and Psi_2", "section 2", schema_psi12_claim);
  add("S4.schema.psi3", "Psi_3 closed under duals", "section 2", schema_psi3_claim);
  add("S5.basis.n1", "basis candidate enumeration for n = 1", "section 5", basis_n1_claim);
  add("S5.chain.xyx", "xyx = x^2y = yx^2 = yx^2 = x^2y checks against Phi_2 + hypothesis",
      "section 5", chain_xyx_claim);
  add("S5.prove.omega2", "omega_2 derivable from Phi_2 + omega_2", "section 5",
      prove_omega2_claim);
  add("S5.prove.x3x4", "x^3 = x^4 derivable from Phi_2 within depth 3", "section 5",
      prove_x3x4_claim);

  std::sort(claims.begin(), claims.end(),
            [](const Claim& a, const Claim& b) { return a.id < b.id; });
  return claims;
}

bool glob_match(const std::string& pattern, const std::string& text) {
  std::string re;
  for (char c : pattern) {
    if (c == '*')
      re += ".*";
    else if (std::string("\\^$.|?+()[]{}").find(c) != std::string::npos)
      re += std::string("\\") + c;
    else
      re += c;
  }
  return std::regex_match(text, std::regex(re));
}

}  // namespace

std::string to_string(Report::Status s) {
  switch (s) {
    case Report::Status::PASS: return "PASS";
    case Report::Status::FAIL: return "FAIL";
    case Report::Status::INCONCLUSIVE: return "INCONCLUSIVE";
  }
  return "?";
}

const std::vector<Claim>& claim_registry() {
  static const std::vector<Claim> registry = build_registry();
  return registry;
}

std::vector<Report> verify_paper(const std::string& pattern, const HarnessConfig& config) {
  std::vector<Report> reports;
  for (const Claim& claim : claim_registry()) {
    if (!glob_match(pattern, claim.id)) continue;
    auto t0 = std::chrono::steady_clock::now();
    Report r = claim.run(config);
    auto t1 = std::chrono::steady_clock::now();
    r.id = claim.id;
    r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    reports.push_back(std::move(r));
  }
  if (reports.empty())
    throw std::invalid_argument("no claim matches pattern '" + pattern + "'");
  return reports;
}

std::vector<Identity> enumerate_Rn_basis_candidates(int n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  std::vector<Identity> out;
  IdentitySet seen;
  auto emit = [&](Identity id) {
    if (id.is_trivial()) return;
    if (seen.insert(id).second) out.push_back(std::move(id));
  };

  // formA: x^{e_0} t_1 x^{e_1} ... t_r x^{e_r} with e_i <= n, sum <= n.
  Letter x = let("x"), y = let("y");
  for (int r = 0; r <= n; ++r) {
    std::vector<std::vector<int>> sides;
    std::vector<int> e(r + 1, 0);
    while (true) {
      int sum = 0;
      for (int v : e) sum += v;
      if (sum <= n) sides.push_back(e);
      int i = 0;
      while (i <= r && ++e[i] > n) e[i++] = 0;
      if (i > r) break;
    }
    auto side_word = [&](const std::vector<int>& es) {
      Word w = power(x, es[0]);
      for (int i = 1; i <= r; ++i) {
        w += let("t", i);
        w += power(x, es[i]);
      }
      return w;
    };
    for (std::size_t i = 0; i < sides.size(); ++i)
      for (std::size_t j = i + 1; j < sides.size(); ++j)
        emit({side_word(sides[i]), side_word(sides[j])});
  }

  // formB: (prod a_i^{g_i} t_i) x^p y^q (prod t_i a_i^{g_i}) with the x^p y^q
  // and y^q x^p orders on the two sides.
  struct Slot {
    int g;        // 0..n; 0 means the slot is empty
    bool use_y;   // a_i = y instead of x (only meaningful when g > 0)
  };
  auto slot_vectors = [&](int count_max) {
    std::vector<std::vector<Slot>> all;
    std::vector<std::vector<Slot>> frontier{{}};
    all.push_back({});
    for (int len = 1; len <= count_max; ++len) {
      std::vector<std::vector<Slot>> next;
      for (const auto& base : frontier)
        for (int g = 0; g <= n; ++g)
          for (int uy = 0; uy <= 1; ++uy) {
            if (g == 0 && uy == 1) continue;  // empty slot has one spelling
            auto v = base;
            v.push_back({g, uy == 1});
            next.push_back(v);
          }
      for (const auto& v : next) all.push_back(v);
      frontier = std::move(next);
    }
    return all;
  };
  auto prefix_word = [&](const std::vector<Slot>& slots, int t_start) {
    Word w;
    for (std::size_t i = 0; i < slots.size(); ++i) {
      w += power(slots[i].use_y ? y : x, slots[i].g);
      w += let("t", t_start + static_cast<int>(i));
    }
    return w;
  };
  auto suffix_word = [&](const std::vector<Slot>& slots, int t_start) {
    Word w;
    for (std::size_t i = 0; i < slots.size(); ++i) {
      w += let("t", t_start + static_cast<int>(i));
      w += power(slots[i].use_y ? y : x, slots[i].g);
    }
    return w;
  };
  auto prefixes = slot_vectors(2 * n);
  for (const auto& pre : prefixes)
    for (const auto& suf : prefixes)
      for (int p = 1; p <= n; ++p)
        for (int q = 1; q <= n; ++q) {
          Word head = prefix_word(pre, 1);
          Word tail = suffix_word(suf, static_cast<int>(pre.size()) + 1);
          Word mid_lhs = power(x, p) + power(y, q);
          Word mid_rhs = power(y, q) + power(x, p);
          emit({head + mid_lhs + tail, head + mid_rhs + tail});
        }
  return out;
}

namespace {

json report_to_json_obj(const Report& r, bool with_timing) {
  json j;
  j["id"] = r.id;
  j["status"] = to_string(r.status);
  if (!r.witness.empty()) j["witness"] = r.witness;
  j["params"] = r.params;
  if (with_timing) j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

}  // namespace

std::string reports_to_json(const std::vector<Report>& reports, bool with_timing) {
  json arr = json::array();
  for (const Report& r : reports) arr.push_back(report_to_json_obj(r, with_timing));
  return arr.dump(2);
}

std::string proof_to_json(const Proof& proof) {
  json j;
  j["chain"] = json::array();
  for (const Word& w : proof.chain) j["chain"].push_back(render(w));
  j["steps"] = json::array();
  for (const ProofStep& s : proof.steps) {
    json step;
    step["rule"] = render(s.rule);
    step["a"] = render(s.witness.prefix);
    step["b"] = render(s.witness.suffix);
    json phi = json::object();
    for (const auto& [l, w] : s.witness.phi.map) phi[render(l)] = render(w);
    step["phi"] = phi;
    step["dir"] = s.witness.reversed ? "rl" : "lr";
    j["steps"].push_back(step);
  }
  return j.dump(2);
}

}  // namespace monovar
