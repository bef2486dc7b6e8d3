#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "fdim/session.hpp"

namespace formal {

using Json = nlohmann::ordered_json;

struct PrimeSummary {
  std::vector<std::string> gens;
  int dim = 0;
  int height = 0;
  std::string certificate;
  friend bool operator==(const PrimeSummary&, const PrimeSummary&) = default;
};

struct PredictionSummary {
  std::string kind;
  int bound = 0;
  std::optional<int> witness_degree;
  std::string reason;
  friend bool operator==(const PredictionSummary&, const PredictionSummary&) = default;
};

struct AssumptionSummary {
  bool complete_asserted = false;
  bool cohen_macaulay_asserted = false;
  bool regular_asserted = false;
  bool field_modeled_as_q = false;
  friend bool operator==(const AssumptionSummary&, const AssumptionSummary&) = default;
};

struct RuleSummary {
  std::string rule;
  std::string statement;
  std::optional<int> vanishing_above;
  std::optional<int> nonvanishing_degree;
  int theorem_bound = 0;
  friend bool operator==(const RuleSummary&, const RuleSummary&) = default;
};

struct ToricSummary {
  std::vector<std::vector<unsigned>> weights;
  std::vector<std::string> images;
  std::vector<std::string> gens;
  friend bool operator==(const ToricSummary&, const ToricSummary&) = default;
};

struct CechEntrySummary {
  int index = 0;
  std::vector<int> degree;
  long long dim = 0;
  friend bool operator==(const CechEntrySummary&, const CechEntrySummary&) = default;
};

struct CechSummary {
  std::string module;  // generators of the module ideal
  std::optional<unsigned> power;
  std::size_t generator_count = 0;
  std::optional<int> module_dimension;
  std::vector<int> box_lo;
  std::vector<int> box_hi;
  std::uint64_t cells = 0;
  std::vector<long long> totals;
  std::vector<long long> chain_totals;
  bool vanishes_above_generator_count = true;
  bool vanishes_above_module_dimension = true;
  bool euler_identity = true;
  std::vector<CechEntrySummary> entries;
  bool entries_truncated = false;
  std::string label;
  std::string skipped;
  friend bool operator==(const CechSummary&, const CechSummary&) = default;
};

struct AuditRow {
  std::string quantity;
  Json computed;
  Json expected;
  std::string provenance;  // paper | derived
  std::string status;      // match | mismatch | paper-inconsistency
  std::string note;
  friend bool operator==(const AuditRow&, const AuditRow&) = default;
};

/// Plain-data form of a session result. JSON and text output are both
/// rendered from this value.
struct SessionSummary {
  std::string session;
  std::string outcome;  // ok | empty_variety
  int d = 0;
  int dim_quotient = 0;
  int codim = 0;
  std::vector<PrimeSummary> primes;
  int fdim = 0;
  int small_height = 0;
  int big_height = 0;
  bool equidimensional = false;
  int vanishing_bound = 0;
  bool condition2 = false;
  bool decomposition_complete = false;
  std::vector<std::string> residuals;
  PredictionSummary prediction;
  AssumptionSummary assumptions;
  std::optional<std::vector<RuleSummary>> corollaries;
  std::optional<ToricSummary> toric;
  std::vector<CechSummary> cech;
  std::vector<AuditRow> audit;
  std::vector<std::string> notes;
  friend bool operator==(const SessionSummary&, const SessionSummary&) = default;
};

inline constexpr std::size_t kMaxReportedCechEntries = 512;

SessionSummary summarize(const SessionResult& result);

Json to_json(const SessionSummary& summary);
/// Inverse of to_json; throws nlohmann::json::exception on malformed input.
SessionSummary summary_from_json(const Json& json);

std::string render_text(const SessionSummary& summary);

}  // namespace formal
