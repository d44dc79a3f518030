#pragma once

#include <string>

#include "monovar/analysis.hpp"

namespace monovar {

struct HarnessConfig {
  int bound = 4;            // schema expansion bound B
  std::size_t max_len = 0;  // 0: per-claim default
  int depth = 12;           // prove() depth
  std::int64_t budget = 500'000'000;  // node budget for heavy checks
  std::string cache_dir;              // empty: MONOVAR_CACHE_DIR
};

struct Report {
  enum class Status { PASS, FAIL, INCONCLUSIVE };

  std::string id;
  Status status = Status::PASS;
  std::string witness;  // on FAIL: machine-replayable description
  std::string params;
  std::int64_t elapsed_ms = 0;
};

std::string to_string(Report::Status s);

struct Claim {
  std::string id;
  std::string description;
  std::string location;
  std::function<Report(const HarnessConfig&)> run;
};

/// The registered claim set, ordered by id.
const std::vector<Claim>& claim_registry();

/// Runs every claim whose id matches the '*'-glob pattern; reports ordered
/// by claim id.  Throws std::invalid_argument when nothing matches.
std::vector<Report> verify_paper(const std::string& pattern, const HarnessConfig& config);

/// All formA identities with r, e_i, f_i <= n and sum e, sum f <= n, plus all
/// formB identities with k, l <= 2n, g_i <= n, p, q in [1, n], a_i in {x, y};
/// duplicate-free under canonical orientation, deterministic order.
std::vector<Identity> enumerate_Rn_basis_candidates(int n);

/// [{id, status, witness?, params, elapsed_ms}]
std::string reports_to_json(const std::vector<Report>& reports, bool with_timing = true);

/// {"chain": [...], "steps": [{rule, a, b, phi, dir}]}
std::string proof_to_json(const Proof& proof);

}  // namespace monovar
