#include "fdim/corpus.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <future>
#include <sstream>
#include <stdexcept>

#include "fdim/parse.hpp"

namespace formal {
namespace {

ExpectedValue paper(std::string q, Json v) { return {std::move(q), std::move(v), Provenance::paper}; }
ExpectedValue derived(std::string q, Json v) { return {std::move(q), std::move(v), Provenance::derived}; }

std::vector<CorpusEntry> build_corpus() {
  std::vector<CorpusEntry> c;
  c.push_back({"ex:poly",
               "Polynomial ring",
               "ring R = Q[x,y]; ideal a = (x); assume complete; assume cm; task invariants; task cech powers=1..4;",
               {paper("d", 2), paper("codim", 1), paper("big_height", 1), paper("primes", {"(x)"}),
                paper("prime_dims", {1}), paper("fdim", 1), paper("vanishing_bound", 1),
                paper("prediction", "vanishing_above_bound"), paper("cech_higher_truncations_zero", true)},
               {}});
  c.push_back({"ex:non-equi",
               "Non-equidimensional ideal",
               "ring R = Q[x,y,z] / (x*z); ideal a = (x); assume complete; assume cm; task invariants; "
               "task cech powers=1..3;",
               {paper("d", 2), derived("primes", {"(x)"}), derived("prime_dims", {2}), derived("heights", {0}),
                derived("fdim", 2), derived("big_height", 0), derived("vanishing_bound", 2),
                derived("condition2", true), derived("cech_higher_truncations_zero", true)},
               {{"primes", {"(x)", "(x, z)"}, "(x, z) contains (x) and is not minimal"},
                {"prime_dims", {2, 1}, ""},
                {"big_height", 1, ""},
                {"vanishing_bound", 1, ""},
                {"cech_higher_truncations_zero", false,
                 "claimed H^2 containment in a module of dimension 1; Grothendieck vanishing forces 0"}}});
  c.push_back({"ex:reg-seq",
               "Regular sequence, d = 4, c = 2",
               "ring R = Q[x1,x2,x3,x4]; ideal a = (x1,x2); assume complete; assume cm; assume regular; "
               "task invariants; task corollaries;",
               {paper("d", 4), paper("big_height", 2), paper("codim", 2), paper("prime_dims", {2}),
                paper("vanishing_bound", 2), paper("prediction", "vanishing_above_bound"), derived("fdim", 2),
                derived("corollary_rules", {"prime_ideal", "set_theoretic_complete_intersection"}),
                derived("sci_vanishing_above", 2)},
               {}});
  c.push_back({"ex:prime",
               "Prime ideal in a regular ring",
               "ring R = Q[x,y,z]; ideal a = (x,y); assume complete; assume cm; assume regular; task invariants; "
               "task corollaries;",
               {paper("d", 3), paper("codim", 2), paper("big_height", 2), paper("primes", {"(x, y)"}),
                paper("fdim", 1), paper("vanishing_bound", 1), paper("prediction", "vanishing_above_bound"),
                derived("prime_rule_degree", 2)},
               {}});
  c.push_back({"ex:nonred",
               "Non-reduced ideal",
               "ring R = Q[x,y] / (x^2); ideal a = (x); assume complete; assume cm; task invariants;",
               {paper("d", 1), paper("primes", {"(x)"}), derived("prime_dims", {1}), derived("heights", {0}),
                derived("fdim", 1), derived("vanishing_bound", 1)},
               {{"prime_dims", {0}, "R/(x) is k[y]"}, {"big_height", 1, ""}, {"vanishing_bound", 0, ""}}});
  c.push_back({"ex:nonCM",
               "Non-Cohen-Macaulay ring",
               "ring R = Q[x,y,z] / (x*z, y*z); ideal a = (z); assume complete; task invariants; "
               "task cech powers=1..3;",
               {paper("d", 2), derived("primes", {"(z)"}), derived("prime_dims", {2}), derived("heights", {0}),
                derived("fdim", 2), derived("vanishing_bound", 2), derived("prediction", "indeterminate")},
               {{"primes", {"(x, z)", "(y, z)"}, "both contain (z), which is prime in R"},
                {"prime_dims", {1, 1}, ""},
                {"fdim", 1, ""},
                {"big_height", 1, ""},
                {"vanishing_bound", 1, ""}}});
  c.push_back({"ex:fpure",
               "F-pure ring, p = 7",
               "ring R = F7[x,y,z] / (x^3+y^3+z^3); ideal a = (x,y); assume complete; assume cm; task invariants;",
               {paper("d", 2), paper("big_height", 2), paper("prime_dims", {0}), paper("fdim", 0),
                paper("vanishing_bound", 0), paper("prediction", "vanishing_above_bound"),
                derived("primes", {"(x, y, z)"})},
               {}});
  c.push_back({"ex:axes",
               "Coordinate axes",
               "ring R = Q[x,y,z]; ideal a = (x*y, x*z); assume complete; assume cm; assume regular; "
               "task invariants; task corollaries; task cech powers=1..2;",
               {paper("d", 3), paper("primes", {"(x)", "(y, z)"}), paper("prime_dims", {2, 1}), paper("fdim", 2),
                paper("big_height", 2), paper("vanishing_bound", 1), paper("condition2", false),
                paper("prediction", "nonvanishing_expected_at_fdim"), paper("witness_degree", 2),
                derived("corollary_rules", Json::array()), derived("cech_H2(-1,-1,-1)", 1)},
               {}});
  c.push_back({"ex:curve",
               "Singular curve",
               "ring R = Q[x,y,z] / (x*y - z^2); ideal a = (x,z); assume complete; assume cm; task invariants; "
               "task cech;",
               {paper("d", 2), paper("codim", 1), paper("big_height", 1), paper("primes", {"(x, z)"}),
                paper("prime_dims", {1}), paper("fdim", 1), paper("vanishing_bound", 1),
                paper("prediction", "vanishing_above_bound")},
               {}});
  c.push_back({"ex:m2",
               "Computer algebra session",
               "ring R = Q[x,y,z] / (y*z); ideal a = (x,y); assume cm; task invariants;",
               {paper("d", 2), paper("fdim", 1), derived("primes", {"(x, y)"}), derived("codim", 1),
                derived("vanishing_bound", 1)},
               {{"codim", 2, "printed as codim I = 2"}, {"vanishing_bound", 0, "printed as d - c = 0"}}});
  c.push_back({"ex:num",
               "Numerical invariant via a toric presentation",
               "ring R = Q[a,b,c,d]; ideal I = (a,b); assume complete; task toric weights=(4,0),(3,1),(1,3),(0,4); "
               "task invariants;",
               {paper("d", 2), paper("big_height", 1), paper("fdim", 1), paper("vanishing_bound", 1),
                derived("primes", {"(a, b, c)"}),
                derived("toric_contains", {"b*c - a*d", "b^3 - a^2*c", "c^3 - b*d^2"})},
               {}});
  c.push_back({"ex:discon",
               "Disconnected support",
               "ring R = Q[x,y,u,v] / (x*u, x*v, y*u, y*v); ideal a = (x,y); assume complete; task invariants; "
               "task cech powers=1..2;",
               {paper("d", 2), paper("fdim", 2), derived("primes", {"(x, y)"}), derived("prime_dims", {2}),
                derived("heights", {0}), derived("vanishing_bound", 2)},
               {{"primes", {"(u, v)", "(x, y)"}, "(u, v) does not contain (x, y)"},
                {"prime_dims", {2, 2}, ""},
                {"big_height", 1, ""},
                {"vanishing_bound", 1, ""}}});
  c.push_back({"ex:finj",
               "F-injective ring, p = 3",
               "ring R = F3[x,y,z] / (x^3+y^3+z^3); ideal a = (x); assume complete; assume cm; task invariants;",
               {paper("d", 2), paper("big_height", 1), paper("prime_dims", {1}), paper("fdim", 1),
                paper("vanishing_bound", 1), paper("prediction", "vanishing_above_bound"),
                derived("primes", {"(x, y + z)"})},
               {}});
  c.push_back({"ex:dual",
               "Maximal ideal",
               "ring R = Q[x,y,z]; ideal a = (x,y,z); assume complete; assume cm; assume regular; task invariants; "
               "task corollaries;",
               {paper("d", 3), paper("big_height", 3), paper("codim", 3), paper("fdim", 0),
                paper("vanishing_bound", 0), paper("prediction", "vanishing_above_bound"),
                derived("corollary_rules", {"prime_ideal", "set_theoretic_complete_intersection"}),
                derived("prime_rule_degree", 3), derived("sci_vanishing_above", 3)},
               {}});
  std::sort(c.begin(), c.end(), [](const CorpusEntry& a, const CorpusEntry& b) { return a.id < b.id; });
  return c;
}

std::vector<int> parse_degree(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, ',')) out.push_back(std::stoi(part));
  return out;
}

const CechRun* first_cech(const SessionResult& result) {
  for (const auto& run : result.cech) {
    if (run.skipped.empty()) return &run;
  }
  return nullptr;
}

std::string provenance_name(Provenance p) { return p == Provenance::paper ? "paper" : "derived"; }

CorpusRun run_entry(const CorpusEntry& entry, const RunOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  CorpusRun run{entry.id, entry.title, {}, 0};
  try {
    const SessionResult result = run_session(parse_session(entry.session_text), options);
    run.summary = summarize(result);
    for (const auto& e : entry.expected) {
      Json computed = evaluate_quantity(e.quantity, result, run.summary, e.value);
      const bool ok = computed == e.value;
      run.summary.audit.push_back(
          {e.quantity, std::move(computed), e.value, provenance_name(e.provenance), ok ? "match" : "mismatch", ""});
    }
    for (const auto& claim : entry.paper_claims) {
      Json computed = evaluate_quantity(claim.quantity, result, run.summary, claim.value);
      const bool same = computed == claim.value;
      run.summary.audit.push_back(
          {claim.quantity, std::move(computed), claim.value, "paper", same ? "match" : "paper-inconsistency",
           claim.note});
    }
  } catch (const std::exception& ex) {
    run.summary.session = entry.session_text;
    run.summary.outcome = "error";
    run.summary.audit.push_back({"run", nullptr, "ok", "derived", "mismatch", ex.what()});
  }
  run.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return run;
}

}  // namespace

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> entries = build_corpus();
  return entries;
}

Json evaluate_quantity(const std::string& q, const SessionResult& result, const SessionSummary& s,
                       const Json& expected) {
  const auto* report = std::get_if<InvariantReport>(&result.outcome);
  if (q == "toric_contains") {
    if (!result.toric) return nullptr;
    Json found = Json::array();
    for (const auto& text : expected) {
      const auto f = parse_polynomial(text.get<std::string>(), result.toric->ideal.ring());
      if (result.toric->ideal.contains(f)) found.push_back(text);
    }
    return found;
  }
  if (q == "cech_higher_truncations_zero") {
    const CechRun* run = first_cech(result);
    if (!run || !run->truncations) return nullptr;
    return run->truncations->higher_vanishing_at_all_powers;
  }
  if (q.rfind("cech_H", 0) == 0) {
    const auto open = q.find('(');
    const auto close = q.find(')');
    if (open == std::string::npos || close == std::string::npos) throw std::invalid_argument("bad quantity " + q);
    const int index = std::stoi(q.substr(6, open - 6));
    const CechRun* run = first_cech(result);
    if (!run || !run->module_report) return nullptr;
    const auto degree = parse_degree(q.substr(open + 1, close - open - 1));
    return run->module_report->dim_at(index, degree);
  }
  if (q == "corollary_rules") {
    if (!result.corollaries) return nullptr;
    std::vector<std::string> names;
    for (const auto& r : *result.corollaries) names.push_back(r.rule);
    std::sort(names.begin(), names.end());
    return names;
  }
  if (q == "sci_vanishing_above" || q == "prime_rule_degree") {
    if (!result.corollaries) return nullptr;
    const std::string rule = q == "sci_vanishing_above" ? "set_theoretic_complete_intersection" : "prime_ideal";
    for (const auto& r : *result.corollaries) {
      if (r.rule != rule) continue;
      const auto& v = q == "sci_vanishing_above" ? r.vanishing_above : r.nonvanishing_degree;
      return v ? Json(*v) : Json(nullptr);
    }
    return nullptr;
  }
  if (!report) return nullptr;
  if (q == "d") return s.d;
  if (q == "dim_quotient") return s.dim_quotient;
  if (q == "codim") return s.codim;
  if (q == "fdim") return s.fdim;
  if (q == "small_height") return s.small_height;
  if (q == "big_height") return s.big_height;
  if (q == "vanishing_bound") return s.vanishing_bound;
  if (q == "condition2") return s.condition2;
  if (q == "equidimensional") return s.equidimensional;
  if (q == "prediction") return s.prediction.kind;
  if (q == "witness_degree") return s.prediction.witness_degree ? Json(*s.prediction.witness_degree) : Json(nullptr);
  if (q == "primes") {
    Json out = Json::array();
    for (const auto& p : report->primes) out.push_back(p.prime.canonical_string());
    return out;
  }
  if (q == "prime_dims" || q == "heights") {
    Json out = Json::array();
    for (const auto& p : report->primes) out.push_back(q == "heights" ? p.height : p.dim);
    return out;
  }
  throw std::invalid_argument("unknown quantity " + q);
}

CorpusResult run_corpus(const RunOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<std::future<CorpusRun>> pending;
  for (const auto& entry : corpus()) {
    pending.push_back(std::async(std::launch::async, [&entry, &options] { return run_entry(entry, options); }));
  }
  CorpusResult out;
  for (auto& f : pending) out.runs.push_back(f.get());
  for (const auto& run : out.runs) {
    for (const auto& row : run.summary.audit) {
      if (row.status == "mismatch") ++out.mismatches;
      if (row.status == "paper-inconsistency") ++out.paper_inconsistencies;
    }
  }
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

Json corpus_to_json(const CorpusResult& result) {
  Json j;
  const std::time_t now = std::time(nullptr);
  char stamp[32];
  std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  j["generated_at"] = stamp;
  j["entries"] = Json::array();
  for (const auto& run : result.runs) {
    j["entries"].push_back({{"id", run.id}, {"title", run.title}, {"report", to_json(run.summary)}});
  }
  j["totals"] = {{"entries", result.runs.size()},
                 {"mismatches", result.mismatches},
                 {"paper_inconsistencies", result.paper_inconsistencies}};
  return j;
}

std::string render_corpus_text(const CorpusResult& result) {
  std::ostringstream out;
  for (const auto& run : result.runs) {
    out << "== " << run.id << ": " << run.title << "\n";
    if (run.summary.outcome == "error") {
      for (const auto& row : run.summary.audit) out << "  [mismatch] " << row.note << "\n";
      continue;
    }
    out << render_text(run.summary);
  }
  out << "corpus: " << result.runs.size() << " entries, " << result.mismatches << " mismatches, "
      << result.paper_inconsistencies << " paper inconsistencies\n";
  return out.str();
}

}  // namespace formal
