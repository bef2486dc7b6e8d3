#include "fdim/report.hpp"

#include <sstream>

namespace formal {
namespace {

std::vector<std::string> render_gens(const Ideal& ideal) {
  std::vector<std::string> out;
  for (const auto& g : ideal.groebner().elements) out.push_back(g.to_string());
  return out;
}

CechSummary summarize_cech(const CechReport& r, const std::string& module, const std::string& label) {
  CechSummary c;
  c.module = module;
  c.power = r.power;
  c.generator_count = r.generator_count;
  c.module_dimension = r.module_dimension;
  c.box_lo = r.box.lo;
  c.box_hi = r.box.hi;
  c.cells = r.cells;
  c.totals = r.cohomology_totals;
  c.chain_totals = r.chain_totals;
  c.vanishes_above_generator_count = r.vanishes_above_generator_count;
  c.vanishes_above_module_dimension = r.vanishes_above_module_dimension;
  c.euler_identity = r.euler_identity;
  for (const auto& e : r.entries) {
    if (c.entries.size() == kMaxReportedCechEntries) {
      c.entries_truncated = true;
      break;
    }
    c.entries.push_back({e.index, e.degree, e.dim});
  }
  c.label = label;
  return c;
}

template <typename T>
Json optional_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

template <typename T>
std::optional<T> optional_from(const Json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

}  // namespace

SessionSummary summarize(const SessionResult& result) {
  SessionSummary s;
  s.session = result.session.to_string();
  s.assumptions.complete_asserted = result.session.assumptions.complete;
  s.assumptions.cohen_macaulay_asserted = result.session.assumptions.cohen_macaulay;
  s.assumptions.regular_asserted = result.session.assumptions.regular;
  s.assumptions.field_modeled_as_q = result.session.ring->field().is_rationals();
  s.notes.push_back("power series rings are modeled by polynomial rings");
  if (s.assumptions.field_modeled_as_q) s.notes.push_back("field modeled as Q");

  if (const auto* r = std::get_if<InvariantReport>(&result.outcome)) {
    s.outcome = "ok";
    s.d = r->d;
    s.dim_quotient = r->dim_quotient;
    s.codim = r->codim;
    for (const auto& p : r->primes) s.primes.push_back({render_gens(p.prime), p.dim, p.height, p.certificate.to_string()});
    s.fdim = r->fdim;
    s.small_height = r->small_height;
    s.big_height = r->big_height;
    s.equidimensional = r->equidimensional;
    s.vanishing_bound = r->vanishing_bound;
    s.condition2 = r->condition2;
    s.decomposition_complete = r->decomposition_complete;
    for (const auto& res : r->residuals) s.residuals.push_back(res.canonical_string());
    s.prediction = {to_string(r->prediction.kind), r->prediction.bound, r->prediction.witness_degree, r->prediction.reason};
  } else {
    s.outcome = "empty_variety";
    s.prediction = {to_string(VerdictKind::indeterminate), 0, std::nullopt, std::get<EmptyVariety>(result.outcome).reason};
  }

  if (result.corollaries) {
    s.corollaries.emplace();
    for (const auto& rule : *result.corollaries) {
      s.corollaries->push_back(
          {rule.rule, rule.statement, rule.vanishing_above, rule.nonvanishing_degree, rule.theorem_bound});
    }
  }
  if (result.toric) {
    ToricSummary t;
    for (const auto& task : result.session.tasks) {
      if (const auto* tt = std::get_if<ToricTask>(&task)) t.weights = tt->weights;
    }
    for (const auto& img : result.toric->images) t.images.push_back(img.to_string());
    t.gens = render_gens(result.toric->ideal);
    s.toric = std::move(t);
  }
  for (const auto& run : result.cech) {
    if (!run.skipped.empty()) {
      CechSummary c;
      c.skipped = run.skipped;
      s.cech.push_back(std::move(c));
      continue;
    }
    if (run.module_report) {
      s.cech.push_back(summarize_cech(*run.module_report, result.defining.to_string(), "H^i_a(A/J)"));
    }
    if (run.truncations) {
      for (const auto& r : run.truncations->reports) {
        s.cech.push_back(summarize_cech(r, "J + a^" + std::to_string(r.power.value_or(0)), run.truncations->label));
      }
    }
  }
  return s;
}

Json to_json(const SessionSummary& s) {
  const bool ok = s.outcome == "ok";
  const auto num = [&](int v) { return ok ? Json(v) : Json(nullptr); };
  Json j;
  j["session"] = s.session;
  j["outcome"] = s.outcome;
  j["d"] = num(s.d);
  j["dim_quotient"] = num(s.dim_quotient);
  j["codim"] = num(s.codim);
  j["primes"] = Json::array();
  for (const auto& p : s.primes) {
    j["primes"].push_back({{"gens", p.gens}, {"dim", p.dim}, {"height", p.height}, {"certificate", p.certificate}});
  }
  j["fdim"] = num(s.fdim);
  j["small_height"] = num(s.small_height);
  j["big_height"] = num(s.big_height);
  j["equidimensional"] = s.equidimensional;
  j["vanishing_bound"] = num(s.vanishing_bound);
  j["condition2"] = s.condition2;
  j["prediction"] = {{"kind", s.prediction.kind},
                     {"bound", s.prediction.bound},
                     {"witness_degree", optional_json(s.prediction.witness_degree)},
                     {"reason", s.prediction.reason}};
  j["assumptions"] = {{"complete_asserted", s.assumptions.complete_asserted},
                      {"cohen_macaulay_asserted", s.assumptions.cohen_macaulay_asserted},
                      {"regular_asserted", s.assumptions.regular_asserted},
                      {"field_modeled_as_Q", s.assumptions.field_modeled_as_q}};
  j["decomposition_complete"] = s.decomposition_complete;
  j["residuals"] = s.residuals;
  if (s.corollaries) {
    j["corollaries"] = Json::array();
    for (const auto& r : *s.corollaries) {
      j["corollaries"].push_back({{"rule", r.rule},
                                  {"statement", r.statement},
                                  {"vanishing_above", optional_json(r.vanishing_above)},
                                  {"nonvanishing_degree", optional_json(r.nonvanishing_degree)},
                                  {"theorem_bound", r.theorem_bound}});
    }
  } else {
    j["corollaries"] = nullptr;
  }
  if (s.toric) {
    j["toric"] = {{"weights", s.toric->weights}, {"images", s.toric->images}, {"gens", s.toric->gens}};
  } else {
    j["toric"] = nullptr;
  }
  j["cech"] = Json::array();
  for (const auto& c : s.cech) {
    Json e;
    if (!c.skipped.empty()) {
      e["skipped"] = c.skipped;
      j["cech"].push_back(std::move(e));
      continue;
    }
    e["label"] = c.label;
    e["module"] = c.module;
    e["power"] = optional_json(c.power);
    e["generator_count"] = c.generator_count;
    e["module_dimension"] = optional_json(c.module_dimension);
    e["box"] = {{"lo", c.box_lo}, {"hi", c.box_hi}};
    e["cells"] = c.cells;
    e["totals"] = c.totals;
    e["chain_totals"] = c.chain_totals;
    e["checks"] = {{"vanishes_above_generator_count", c.vanishes_above_generator_count},
                   {"vanishes_above_module_dimension", c.vanishes_above_module_dimension},
                   {"euler_identity", c.euler_identity}};
    e["entries"] = Json::array();
    for (const auto& x : c.entries) e["entries"].push_back({{"i", x.index}, {"degree", x.degree}, {"dim", x.dim}});
    e["entries_truncated"] = c.entries_truncated;
    j["cech"].push_back(std::move(e));
  }
  j["audit"] = Json::array();
  for (const auto& a : s.audit) {
    j["audit"].push_back({{"quantity", a.quantity},
                          {"computed", a.computed},
                          {"expected", a.expected},
                          {"provenance", a.provenance},
                          {"status", a.status},
                          {"note", a.note}});
  }
  j["notes"] = s.notes;
  return j;
}

SessionSummary summary_from_json(const Json& j) {
  SessionSummary s;
  s.session = j.at("session").get<std::string>();
  s.outcome = j.at("outcome").get<std::string>();
  const auto num = [&](const char* key) { return j.at(key).is_null() ? 0 : j.at(key).get<int>(); };
  s.d = num("d");
  s.dim_quotient = num("dim_quotient");
  s.codim = num("codim");
  for (const auto& p : j.at("primes")) {
    s.primes.push_back({p.at("gens").get<std::vector<std::string>>(), p.at("dim").get<int>(), p.at("height").get<int>(),
                        p.at("certificate").get<std::string>()});
  }
  s.fdim = num("fdim");
  s.small_height = num("small_height");
  s.big_height = num("big_height");
  s.equidimensional = j.at("equidimensional").get<bool>();
  s.vanishing_bound = num("vanishing_bound");
  s.condition2 = j.at("condition2").get<bool>();
  const auto& pred = j.at("prediction");
  s.prediction = {pred.at("kind").get<std::string>(), pred.at("bound").get<int>(),
                  optional_from<int>(pred, "witness_degree"), pred.at("reason").get<std::string>()};
  const auto& a = j.at("assumptions");
  s.assumptions = {a.at("complete_asserted").get<bool>(), a.at("cohen_macaulay_asserted").get<bool>(),
                   a.at("regular_asserted").get<bool>(), a.at("field_modeled_as_Q").get<bool>()};
  s.decomposition_complete = j.at("decomposition_complete").get<bool>();
  s.residuals = j.at("residuals").get<std::vector<std::string>>();
  if (!j.at("corollaries").is_null()) {
    s.corollaries.emplace();
    for (const auto& r : j.at("corollaries")) {
      s.corollaries->push_back({r.at("rule").get<std::string>(), r.at("statement").get<std::string>(),
                                optional_from<int>(r, "vanishing_above"), optional_from<int>(r, "nonvanishing_degree"),
                                r.at("theorem_bound").get<int>()});
    }
  }
  if (!j.at("toric").is_null()) {
    const auto& t = j.at("toric");
    s.toric = ToricSummary{t.at("weights").get<std::vector<std::vector<unsigned>>>(),
                           t.at("images").get<std::vector<std::string>>(), t.at("gens").get<std::vector<std::string>>()};
  }
  for (const auto& e : j.at("cech")) {
    CechSummary c;
    if (e.contains("skipped")) {
      c.skipped = e.at("skipped").get<std::string>();
      s.cech.push_back(std::move(c));
      continue;
    }
    c.label = e.at("label").get<std::string>();
    c.module = e.at("module").get<std::string>();
    c.power = optional_from<unsigned>(e, "power");
    c.generator_count = e.at("generator_count").get<std::size_t>();
    c.module_dimension = optional_from<int>(e, "module_dimension");
    c.box_lo = e.at("box").at("lo").get<std::vector<int>>();
    c.box_hi = e.at("box").at("hi").get<std::vector<int>>();
    c.cells = e.at("cells").get<std::uint64_t>();
    c.totals = e.at("totals").get<std::vector<long long>>();
    c.chain_totals = e.at("chain_totals").get<std::vector<long long>>();
    const auto& checks = e.at("checks");
    c.vanishes_above_generator_count = checks.at("vanishes_above_generator_count").get<bool>();
    c.vanishes_above_module_dimension = checks.at("vanishes_above_module_dimension").get<bool>();
    c.euler_identity = checks.at("euler_identity").get<bool>();
    for (const auto& x : e.at("entries")) {
      c.entries.push_back({x.at("i").get<int>(), x.at("degree").get<std::vector<int>>(), x.at("dim").get<long long>()});
    }
    c.entries_truncated = e.at("entries_truncated").get<bool>();
    s.cech.push_back(std::move(c));
  }
  for (const auto& a2 : j.at("audit")) {
    s.audit.push_back({a2.at("quantity").get<std::string>(), a2.at("computed"), a2.at("expected"),
                       a2.at("provenance").get<std::string>(), a2.at("status").get<std::string>(),
                       a2.at("note").get<std::string>()});
  }
  s.notes = j.at("notes").get<std::vector<std::string>>();
  return s;
}

std::string render_text(const SessionSummary& s) {
  std::ostringstream out;
  out << "session: " << s.session << "\n";
  if (s.outcome != "ok") {
    out << "outcome: empty variety (" << s.prediction.reason << ")\n";
    return out.str();
  }
  out << "d = dim R = " << s.d << "\n"
      << "dim R/a = " << s.dim_quotient << "   codim = " << s.codim << "\n"
      << "minimal primes" << (s.decomposition_complete ? "" : " (INCOMPLETE)") << ":\n";
  for (const auto& p : s.primes) {
    out << "  (";
    for (std::size_t i = 0; i < p.gens.size(); ++i) out << (i ? ", " : "") << p.gens[i];
    out << ")  dim R/p = " << p.dim << "  height = " << p.height << "  [" << p.certificate << "]\n";
  }
  for (const auto& r : s.residuals) out << "  uncertified branch: " << r << "\n";
  out << "fdim = " << s.fdim << "   heights " << s.small_height << ".." << s.big_height
      << "   vanishing bound d - c = " << s.vanishing_bound << "\n"
      << "equidimensional: " << (s.equidimensional ? "yes" : "no")
      << "   condition (2): " << (s.condition2 ? "holds" : "fails") << "\n"
      << "prediction: " << s.prediction.kind;
  if (s.prediction.kind == "vanishing_above_bound") out << " (F^i = 0 for i > " << s.prediction.bound << ")";
  if (s.prediction.witness_degree) out << " (F^" << *s.prediction.witness_degree << " != 0 expected)";
  out << " - " << s.prediction.reason << "\n";
  out << "assumptions:" << (s.assumptions.complete_asserted ? " complete" : "")
      << (s.assumptions.cohen_macaulay_asserted ? " cm" : "") << (s.assumptions.regular_asserted ? " regular" : "")
      << (s.assumptions.complete_asserted || s.assumptions.cohen_macaulay_asserted || s.assumptions.regular_asserted
              ? ""
              : " none")
      << "\n";
  if (s.corollaries) {
    out << "corollaries:" << (s.corollaries->empty() ? " none apply" : "") << "\n";
    for (const auto& r : *s.corollaries) out << "  " << r.rule << ": " << r.statement << "\n";
  }
  if (s.toric) {
    out << "toric presentation:";
    for (const auto& g : s.toric->gens) out << " " << g << ";";
    out << "\n";
  }
  for (const auto& c : s.cech) {
    if (!c.skipped.empty()) {
      out << "cech: skipped (" << c.skipped << ")\n";
      continue;
    }
    out << "cech " << c.label << " module " << c.module << ", " << c.cells << " cells:";
    for (std::size_t i = 0; i < c.totals.size(); ++i) out << " H^" << i << "=" << c.totals[i];
    out << (c.euler_identity ? "" : "  EULER CHECK FAILED")
        << (c.vanishes_above_module_dimension ? "" : "  VANISHING CHECK FAILED") << "\n";
  }
  for (const auto& a : s.audit) {
    out << "  [" << a.status << "] " << a.quantity << ": computed " << a.computed.dump() << ", "
        << (a.status == "paper-inconsistency" ? "paper " : "expected ") << a.expected.dump() << " (" << a.provenance
        << ")" << (a.note.empty() ? "" : " - " + a.note) << "\n";
  }
  for (const auto& n : s.notes) out << "note: " << n << "\n";
  return out.str();
}

}  // namespace formal
