#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "fdim/cech.hpp"
#include "fdim/invariants.hpp"

namespace formal {

struct InvariantsTask {};
struct CorollariesTask {};
struct CechTask {
  std::optional<int> box;
  std::optional<std::pair<unsigned, unsigned>> powers;
};
struct ToricTask {
  std::vector<std::vector<unsigned>> weights;
};
using Task = std::variant<InvariantsTask, CorollariesTask, CechTask, ToricTask>;

/// One ring, one ideal, assumption flags and a task list. Statements:
///
///   ring R = Q[x,y,z] / (y*z);      field is Q or F<p>
///   ideal a = (x, y);
///   assume complete;  assume cm;  assume regular;
///   task invariants;  task corollaries;
///   task cech box=4 powers=1..3;    both options optional
///   task toric weights=(4,0),(3,1),(1,3),(0,4);
///
/// '#' starts a comment running to the end of the line.
struct Session {
  std::string ring_name;
  std::string ideal_name;
  RingPtr ring;
  std::vector<Polynomial> defining;
  std::vector<Polynomial> ideal;
  Assumptions assumptions;
  std::vector<Task> tasks;

  bool has_task(std::size_t variant_index) const;
  /// Normalized one-line form, e.g. "ring R = Q[x,y] / (x^2); ideal a = (x); task invariants;"
  std::string to_string() const;
};

class SessionError : public std::runtime_error {
 public:
  SessionError(const std::string& message, std::size_t line, std::size_t column)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Throws SessionError with a 1-based line and column.
Session parse_session(std::string_view text);

struct RunOptions {
  std::uint64_t max_cells = kDefaultMaxCells;
  DecomposeOptions decompose;
};

struct CechRun {
  std::optional<CechReport> module_report;  // H^i_a(A/J)
  std::optional<TruncationReport> truncations;
  std::string skipped;
};

struct SessionResult {
  Session session;
  /// Defining ideal actually used, including a toric presentation.
  Ideal defining;
  std::optional<ToricPresentation> toric;
  InvariantOutcome outcome;
  std::optional<std::vector<RuleVerdict>> corollaries;
  std::vector<CechRun> cech;
};

/// Runs every task. A toric task replaces the ring's defining ideal by
/// defining + presentation ideal before anything else is computed.
SessionResult run_session(const Session& session, const RunOptions& options = {});

}  // namespace formal
