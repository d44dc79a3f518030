#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "monovar/harness.hpp"

namespace {

using namespace monovar;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

std::vector<Word> parse_words_list(const std::string& text) {
  std::vector<Word> words;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ';')) words.push_back(parse_word(part));
  return words;
}

PermTable parse_perm(const std::string& text) {
  PermTable p;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) p.images.push_back(std::stoi(part));
  if (!p.is_valid()) throw std::invalid_argument("not a permutation: " + text);
  return p;
}

struct Options {
  int bound = 4;
  std::size_t max_len = 0;
  int depth = 12;
  std::int64_t budget = 500'000'000;
  bool as_json = false;
  std::string cache_dir;

  HarnessConfig harness() const { return {bound, max_len, depth, budget, cache_dir}; }
  AnalysisBounds analysis(std::size_t fallback_len = 0) const {
    return {max_len ? max_len : fallback_len, 0, budget};
  }
};

int emit_sat(const Options& opt, const SatVerdict& v) {
  switch (v.status) {
    case SatVerdict::Status::Holds:
      std::cout << (opt.as_json ? "{\"status\":\"PASS\"}" : "PASS") << "\n";
      return kExitOk;
    case SatVerdict::Status::Fails: {
      if (opt.as_json) {
        json j{{"status", "FAIL"}};
        for (const auto& [l, e] : *v.witness) j["witness"][render(l)] = e;
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "FAIL witness:";
        for (const auto& [l, e] : *v.witness) std::cout << " " << render(l) << "->" << e;
        std::cout << "\n";
      }
      return kExitFail;
    }
    case SatVerdict::Status::Resource:
      std::cout << (opt.as_json ? "{\"status\":\"INCONCLUSIVE\"}" : "INCONCLUSIVE") << "\n";
      return kExitResource;
  }
  return kExitUsage;
}

int emit_membership(const Options& opt, const MembershipVerdict& v) {
  json j;
  switch (v.status) {
    case MembershipVerdict::Status::MemberWithinBounds:
      j["status"] = "PASS";
      break;
    case MembershipVerdict::Status::NonMember:
      j["status"] = "FAIL";
      if (v.failing_word) j["failing_word"] = render(*v.failing_word);
      if (v.witness) j["witness"] = render(*v.witness);
      break;
    case MembershipVerdict::Status::Resource:
      j["status"] = "INCONCLUSIVE";
      break;
  }
  if (opt.as_json)
    std::cout << j.dump(2) << "\n";
  else {
    std::cout << j["status"].get<std::string>();
    if (j.contains("witness"))
      std::cout << " (" << j["failing_word"].get<std::string>() << " = "
                << j["witness"].get<std::string>() << ")";
    std::cout << "\n";
  }
  if (v.status == MembershipVerdict::Status::NonMember) return kExitFail;
  if (v.status == MembershipVerdict::Status::Resource) return kExitResource;
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Word combinatorics, identity deduction, and Rees quotient checks"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  app.set_config("--config");

  Options opt;
  app.add_option("--bound", opt.bound, "schema expansion bound B");
  app.add_option("--max-len", opt.max_len, "word length cap for searches");
  app.add_option("--depth", opt.depth, "proof search depth");
  app.add_option("--budget", opt.budget, "node budget for heavy checks");
  app.add_flag("--json", opt.as_json, "JSON output");
  app.add_option("--cache-dir", opt.cache_dir, "multiplication table cache directory");

  // gen
  auto* gen = app.add_subcommand("gen", "generate a family word");
  std::string gen_family, gen_rho, gen_case = "ii";
  int gen_n = 1, gen_m = 1, gen_k = 0, gen_p = 0, gen_q = 0;
  gen->add_option("family", gen_family,
                  "a | a-prime | a-dprime | a-pq | c | c-prime | d | d-prime | ak | ck")
      ->required();
  gen->add_option("--n", gen_n);
  gen->add_option("--m", gen_m);
  gen->add_option("--k", gen_k);
  gen->add_option("--p", gen_p);
  gen->add_option("--q", gen_q);
  gen->add_option("--rho", gen_rho, "permutation as comma-separated images");
  gen->add_option("--case", gen_case, "ii | iii (for ck)");

  // monoid build
  auto* monoid = app.add_subcommand("monoid", "monoid constructions");
  auto* mbuild = monoid->add_subcommand("build", "Rees quotient M(W)");
  std::vector<std::string> mb_words;
  mbuild->add_option("words", mb_words, "generating words")->required();

  // check
  auto* check = app.add_subcommand("check", "satisfaction and membership checks");
  auto* csat = check->add_subcommand("sat", "does M(W) satisfy an identity");
  std::string cs_w, cs_id;
  csat->add_option("W", cs_w, "semicolon-separated words")->required();
  csat->add_option("identity", cs_id)->required();
  auto* ciso = check->add_subcommand("isoterm", "is w an isoterm for var M(W_1) v ...");
  std::string ci_w;
  std::vector<std::string> ci_gens;
  ciso->add_option("w", ci_w)->required();
  ciso->add_option("monoids", ci_gens, "one generating set per argument")->required();
  auto* cmem = check->add_subcommand("member", "M(W') in var M(W)");
  std::string cm_wprime, cm_w;
  cmem->add_option("Wprime", cm_wprime)->required();
  cmem->add_option("W", cm_w)->required();
  auto* cjoin = check->add_subcommand("join", "M(w) in var(M(W_1) x ... x M(W_k))");
  std::string cj_w;
  std::vector<std::string> cj_gens;
  cjoin->add_option("w", cj_w)->required();
  cjoin->add_option("monoids", cj_gens)->required();

  // prove
  auto* prv = app.add_subcommand("prove", "derive an identity from a rule set");
  std::string pr_goal, pr_rules, pr_preset;
  prv->add_option("identity", pr_goal)->required();
  prv->add_option("--rules", pr_rules, "semicolon-separated identities");
  prv->add_option("--preset", pr_preset, "phi2 | phi2-omega2 | sigma3-psi1hat");

  // perm enum
  auto* perm = app.add_subcommand("perm", "permutation utilities");
  auto* penum = perm->add_subcommand("enum", "(n,m)-permutations");
  int pe_n = 0, pe_m = 0;
  penum->add_option("n", pe_n)->required();
  penum->add_option("m", pe_m)->required();

  // verify paper
  auto* verify = app.add_subcommand("verify", "run the claim suite");
  auto* vpaper = verify->add_subcommand("paper", "registered claims");
  std::string vp_pattern = "*";
  vpaper->add_option("pattern", vp_pattern, "claim id glob");

  // replay
  auto* replay = app.add_subcommand("replay", "re-run claims from a report file");
  std::string rp_file;
  replay->add_option("report", rp_file, "reports JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*gen) {
      PermTable rho;
      auto need = [&](int size) {
        if (!gen_rho.empty()) return parse_perm(gen_rho);
        return identity_perm(size);
      };
      Word w;
      if (gen_family == "a") w = word_a(gen_n, gen_m, need(gen_n + gen_m));
      else if (gen_family == "a-prime") w = word_a_prime(gen_n, gen_m, need(gen_n + gen_m));
      else if (gen_family == "a-dprime")
        w = word_a_dprime(gen_n, gen_m, need(gen_n + gen_m));
      else if (gen_family == "a-pq")
        w = word_a_pq(gen_n, gen_m, need(gen_n + gen_m), gen_p, gen_q);
      else if (gen_family == "c")
        w = word_c(gen_n, gen_m, gen_k, need(gen_n + gen_m + gen_k));
      else if (gen_family == "c-prime")
        w = word_c_prime(gen_n, gen_m, gen_k, need(gen_n + gen_m + gen_k));
      else if (gen_family == "d") w = word_d(gen_n, gen_m, gen_k, need(gen_n + gen_m + gen_k));
      else if (gen_family == "d-prime")
        w = word_d_prime(gen_n, gen_m, gen_k, need(gen_n + gen_m + gen_k));
      else if (gen_family == "ak") w = word_ak(gen_n, gen_m, need(gen_n + gen_m), gen_k);
      else if (gen_family == "ck") {
        CkCase c = gen_case == "iii" ? CkCase::III : CkCase::II;
        int size = c == CkCase::II ? gen_n + gen_m : 2 * (gen_n + gen_m) + 1;
        w = word_ck(c, gen_n, gen_m, need(size), gen_k);
      } else {
        std::cerr << "unknown family '" << gen_family << "'\n";
        return kExitUsage;
      }
      if (opt.as_json)
        std::cout << json{{"word", render(w)}, {"length", w.size()}}.dump(2) << "\n";
      else
        std::cout << render(w) << "\n";
      return kExitOk;
    }

    if (*mbuild) {
      std::vector<Word> ws;
      for (const auto& s : mb_words)
        for (const Word& w : parse_words_list(s)) ws.push_back(w);
      Monoid m = rees_quotient(ws, opt.cache_dir);
      if (opt.as_json)
        std::cout << monoid_to_json(m.core) << "\n";
      else
        std::cout << m.core.size << " elements\n";
      return kExitOk;
    }

    if (*csat) {
      Monoid m = rees_quotient(parse_words_list(cs_w), opt.cache_dir);
      SearchBudget budget{opt.budget, false};
      return emit_sat(opt, satisfies(m, parse_identity(cs_id), &budget));
    }

    if (*ciso) {
      Word w = parse_word(ci_w);
      std::vector<Monoid> ms;
      for (const auto& g : ci_gens) ms.push_back(rees_quotient(parse_words_list(g), opt.cache_dir));
      IsotermVerdict v = is_isoterm(w, ms, opt.analysis());
      MembershipVerdict mv;
      switch (v.status) {
        case IsotermVerdict::Status::IsotermWithinBounds:
          mv.status = MembershipVerdict::Status::MemberWithinBounds;
          break;
        case IsotermVerdict::Status::NotIsoterm:
          mv = {MembershipVerdict::Status::NonMember, w, v.witness};
          break;
        case IsotermVerdict::Status::Resource:
          mv.status = MembershipVerdict::Status::Resource;
          break;
      }
      return emit_membership(opt, mv);
    }

    if (*cmem) {
      Monoid m = rees_quotient(parse_words_list(cm_w), opt.cache_dir);
      return emit_membership(opt,
                             member_MW(parse_words_list(cm_wprime), m, opt.analysis()));
    }

    if (*cjoin) {
      Word w = parse_word(cj_w);
      std::vector<Monoid> ms;
      for (const auto& g : cj_gens) ms.push_back(rees_quotient(parse_words_list(g), opt.cache_dir));
      return emit_membership(opt, join_membership(w, ms, opt.analysis()));
    }

    if (*prv) {
      std::vector<Identity> sigma;
      if (pr_preset == "phi2") sigma = phi_set(2);
      else if (pr_preset == "phi2-omega2") {
        sigma = phi_set(2);
        sigma.push_back(omega_identity(2));
      } else if (pr_preset == "sigma3-psi1hat") {
        sigma.push_back(sigma_identity(3));
        for (const Identity& h : psi1_hat()) sigma.push_back(h);
      } else if (!pr_preset.empty()) {
        std::cerr << "unknown preset '" << pr_preset << "'\n";
        return kExitUsage;
      }
      if (!pr_rules.empty()) {
        std::stringstream ss(pr_rules);
        std::string part;
        while (std::getline(ss, part, ';')) sigma.push_back(parse_identity(part));
      }
      if (sigma.empty()) {
        std::cerr << "no rules given (use --rules or --preset)\n";
        return kExitUsage;
      }
      ProveBounds b;
      b.max_depth = opt.depth;
      if (opt.max_len) b.max_len = opt.max_len;
      b.match_budget = opt.budget;
      ProveResult r = prove(parse_identity(pr_goal), sigma, b);
      switch (r.status) {
        case ProveStatus::Found:
          if (opt.as_json)
            std::cout << proof_to_json(*r.proof) << "\n";
          else {
            std::cout << "FOUND\n";
            for (const Word& wd : r.proof->chain) std::cout << "  " << render(wd) << "\n";
          }
          return kExitOk;
        case ProveStatus::Exhausted:
          std::cout << (opt.as_json ? "{\"status\":\"EXHAUSTED\"}" : "EXHAUSTED") << "\n";
          return kExitFail;
        case ProveStatus::LimitExceeded:
          std::cout << (opt.as_json ? "{\"status\":\"INCONCLUSIVE\"}" : "INCONCLUSIVE")
                    << "\n";
          return kExitResource;
      }
    }

    if (*penum) {
      std::vector<PermTable> perms = enum_S(pe_n, pe_m);
      if (opt.as_json) {
        json arr = json::array();
        for (const PermTable& p : perms) arr.push_back(p.images);
        std::cout << json{{"count", perms.size()}, {"permutations", arr}}.dump(2) << "\n";
      } else {
        for (const PermTable& p : perms) {
          for (std::size_t i = 0; i < p.images.size(); ++i)
            std::cout << (i ? "," : "") << p.images[i];
          std::cout << "\n";
        }
        std::cout << perms.size() << " permutations\n";
      }
      return kExitOk;
    }

    if (*vpaper) {
      std::vector<Report> reports = verify_paper(vp_pattern, opt.harness());
      bool any_fail = false;
      if (opt.as_json)
        std::cout << reports_to_json(reports) << "\n";
      else
        for (const Report& r : reports) {
          std::cout << r.id << ": " << to_string(r.status);
          if (!r.witness.empty()) std::cout << " — " << r.witness;
          std::cout << " (" << r.elapsed_ms << " ms)\n";
        }
      for (const Report& r : reports)
        if (r.status == Report::Status::FAIL) any_fail = true;
      return any_fail ? kExitFail : kExitOk;
    }

    if (*replay) {
      std::ifstream in(rp_file);
      if (!in) {
        std::cerr << "cannot read " << rp_file << "\n";
        return kExitUsage;
      }
      json arr = json::parse(in);
      bool mismatch = false, any_fail = false;
      for (const auto& item : arr) {
        std::string id = item.at("id").get<std::string>();
        std::vector<Report> rerun = verify_paper(id, opt.harness());
        std::string now = to_string(rerun.at(0).status);
        std::string then = item.at("status").get<std::string>();
        std::cout << id << ": recorded " << then << ", replayed " << now << "\n";
        if (now != then) mismatch = true;
        if (now == "FAIL") any_fail = true;
      }
      return (mismatch || any_fail) ? kExitFail : kExitOk;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error at offset " << e.offset << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
