#pragma once

#include <string>
#include <vector>

#include "fdim/report.hpp"

namespace formal {

enum class Provenance { paper, derived };

struct ExpectedValue {
  std::string quantity;
  Json value;
  Provenance provenance;
};

struct PaperClaim {
  std::string quantity;
  Json value;
  std::string note;
};

struct CorpusEntry {
  std::string id;
  std::string title;
  std::string session_text;
  std::vector<ExpectedValue> expected;
  /// Values printed in the source that disagree with the computation.
  std::vector<PaperClaim> paper_claims;
};

const std::vector<CorpusEntry>& corpus();

/// Value of a named quantity for a finished run. Known names: d,
/// dim_quotient, codim, fdim, small_height, big_height, vanishing_bound,
/// condition2, equidimensional, primes, prime_dims, heights, prediction,
/// witness_degree, corollary_rules, prime_rule_degree, toric_contains,
/// cech_higher_truncations_zero, cech_H2(-1,-1,-1). Throws
/// std::invalid_argument for anything else.
Json evaluate_quantity(const std::string& quantity, const SessionResult& result, const SessionSummary& summary,
                       const Json& expected);

struct CorpusRun {
  std::string id;
  std::string title;
  SessionSummary summary;
  double seconds = 0;
};

struct CorpusResult {
  std::vector<CorpusRun> runs;  // sorted by id
  std::size_t mismatches = 0;
  std::size_t paper_inconsistencies = 0;
  double seconds = 0;
};

CorpusResult run_corpus(const RunOptions& options = {});

/// Adds a generated_at timestamp; everything else is deterministic.
Json corpus_to_json(const CorpusResult& result);
std::string render_corpus_text(const CorpusResult& result);

}  // namespace formal
