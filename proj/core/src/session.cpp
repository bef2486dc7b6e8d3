#include "fdim/session.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

#include "fdim/error.hpp"
#include "fdim/parse.hpp"

namespace formal {

bool Session::has_task(std::size_t variant_index) const {
  return std::any_of(tasks.begin(), tasks.end(), [&](const Task& t) { return t.index() == variant_index; });
}

namespace {

std::string join(const std::vector<Polynomial>& polys) {
  std::string s;
  for (std::size_t i = 0; i < polys.size(); ++i) {
    if (i) s += ", ";
    s += polys[i].to_string();
  }
  return s;
}

}  // namespace

std::string Session::to_string() const {
  std::string s = "ring " + ring_name + " = " + ring->to_string();
  if (!defining.empty()) s += " / (" + join(defining) + ")";
  s += "; ideal " + ideal_name + " = (" + join(ideal) + ");";
  if (assumptions.complete) s += " assume complete;";
  if (assumptions.cohen_macaulay) s += " assume cm;";
  if (assumptions.regular) s += " assume regular;";
  for (const auto& task : tasks) {
    if (std::holds_alternative<InvariantsTask>(task)) {
      s += " task invariants;";
    } else if (std::holds_alternative<CorollariesTask>(task)) {
      s += " task corollaries;";
    } else if (const auto* cech = std::get_if<CechTask>(&task)) {
      s += " task cech";
      if (cech->box) s += " box=" + std::to_string(*cech->box);
      if (cech->powers) s += " powers=" + std::to_string(cech->powers->first) + ".." + std::to_string(cech->powers->second);
      s += ";";
    } else if (const auto* toric = std::get_if<ToricTask>(&task)) {
      s += " task toric weights=";
      for (std::size_t j = 0; j < toric->weights.size(); ++j) {
        if (j) s += ",";
        s += "(";
        for (std::size_t k = 0; k < toric->weights[j].size(); ++k) {
          if (k) s += ",";
          s += std::to_string(toric->weights[j][k]);
        }
        s += ")";
      }
      s += ";";
    }
  }
  return s;
}

namespace {

class SessionParser {
 public:
  explicit SessionParser(std::string_view text) : text_(text) {}

  Session parse() {
    Session session;
    bool have_ring = false;
    bool have_ideal = false;
    for (;;) {
      skip();
      if (at_end()) break;
      const std::size_t start = pos_;
      const std::string keyword = identifier("statement keyword");
      if (keyword == "ring") {
        if (have_ring) fail("ring declared twice", start);
        parse_ring(session);
        have_ring = true;
      } else if (keyword == "ideal") {
        if (!have_ring) fail("ideal declared before any ring", start);
        if (have_ideal) fail("ideal declared twice", start);
        session.ideal_name = identifier("ideal name");
        expect('=');
        session.ideal = polynomial_list(session.ring);
        have_ideal = true;
      } else if (keyword == "assume") {
        const std::size_t at = (skip(), pos_);
        const std::string what = identifier("assumption");
        if (what == "complete") {
          session.assumptions.complete = true;
        } else if (what == "cm") {
          session.assumptions.cohen_macaulay = true;
        } else if (what == "regular") {
          session.assumptions.regular = true;
        } else {
          fail("unknown assumption '" + what + "'", at);
        }
      } else if (keyword == "task") {
        if (!have_ring) fail("task before any ring", start);
        session.tasks.push_back(parse_task(session));
      } else {
        fail("unknown statement '" + keyword + "'", start);
      }
      expect(';');
    }
    if (!have_ring) fail("missing ring declaration", pos_);
    if (!have_ideal) fail("missing ideal declaration", pos_);
    if (session.tasks.empty()) session.tasks.emplace_back(InvariantsTask{});
    return session;
  }

 private:
  [[noreturn]] void fail(const std::string& message, std::size_t offset) const {
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i < offset && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw SessionError(message, line, column);
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void skip() {
    while (!at_end()) {
      if (std::isspace(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
      } else if (text_[pos_] == '#') {
        while (!at_end() && text_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  void expect(char c) {
    skip();
    if (peek() != c) {
      fail(std::string("expected '") + c + "'" + (at_end() ? " before end of input" : ""), pos_);
    }
    ++pos_;
  }

  bool accept(char c) {
    skip();
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  std::string identifier(const char* what) {
    skip();
    const std::size_t start = pos_;
    if (!(std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_')) fail(std::string("expected ") + what, pos_);
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  unsigned integer(const char* what) {
    skip();
    const std::size_t start = pos_;
    unsigned long long value = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + static_cast<unsigned>(text_[pos_] - '0');
      if (value > std::numeric_limits<unsigned>::max()) fail(std::string(what) + " too large", start);
      ++pos_;
    }
    if (start == pos_) fail(std::string("expected ") + what, start);
    return static_cast<unsigned>(value);
  }

  void parse_ring(Session& session) {
    session.ring_name = identifier("ring name");
    expect('=');
    skip();
    const std::size_t field_at = pos_;
    const std::string field_name = identifier("field (Q or F<p>)");
    FieldSpec field = FieldSpec::rationals();
    if (field_name == "Q") {
      field = FieldSpec::rationals();
    } else if (field_name.size() > 1 && field_name[0] == 'F' &&
               std::all_of(field_name.begin() + 1, field_name.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      try {
        field = FieldSpec::prime(std::stoull(field_name.substr(1)));
      } catch (const std::exception&) {
        fail("bad field " + field_name + ": characteristic must be prime", field_at);
      }
    } else {
      fail("bad field '" + field_name + "'; expected Q or F<p>", field_at);
    }
    expect('[');
    std::vector<std::string> vars;
    if (!accept(']')) {
      do {
        vars.push_back(identifier("variable name"));
      } while (accept(','));
      expect(']');
    }
    try {
      session.ring = PolyRing::make(vars, field);
    } catch (const std::invalid_argument& e) {
      fail(e.what(), field_at);
    }
    if (accept('/')) {
      session.defining = polynomial_list(session.ring);
    }
  }

  std::vector<Polynomial> polynomial_list(const RingPtr& ring) {
    expect('(');
    const std::size_t open = pos_;
    int depth = 0;
    std::vector<std::pair<std::size_t, std::size_t>> pieces;
    std::size_t piece_start = pos_;
    for (;;) {
      if (at_end()) fail("unterminated generator list", open - 1);
      const char c = text_[pos_];
      if (c == '(') {
        ++depth;
      } else if (c == ')') {
        if (depth == 0) break;
        --depth;
      } else if (c == ',' && depth == 0) {
        pieces.emplace_back(piece_start, pos_);
        piece_start = pos_ + 1;
      } else if (c == ';') {
        fail("unterminated generator list", open - 1);
      }
      ++pos_;
    }
    pieces.emplace_back(piece_start, pos_);
    ++pos_;  // ')'
    std::vector<Polynomial> out;
    if (pieces.size() == 1) {
      const auto body = text_.substr(pieces[0].first, pieces[0].second - pieces[0].first);
      if (std::all_of(body.begin(), body.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); })) {
        return out;
      }
    }
    for (const auto& [b, e] : pieces) {
      try {
        out.push_back(parse_polynomial(text_.substr(b, e - b), ring));
      } catch (const ParseError& err) {
        fail(err.message(), b + err.offset());
      }
    }
    return out;
  }

  Task parse_task(const Session& session) {
    skip();
    const std::size_t at = pos_;
    const std::string kind = identifier("task kind");
    if (kind == "invariants") return InvariantsTask{};
    if (kind == "corollaries") return CorollariesTask{};
    if (kind == "cech") {
      CechTask task;
      for (;;) {
        skip();
        if (peek() == ';' || at_end()) break;
        const std::size_t opt_at = pos_;
        const std::string key = identifier("cech option");
        expect('=');
        if (key == "box") {
          if (task.box) fail("box given twice", opt_at);
          task.box = static_cast<int>(integer("box bound"));
        } else if (key == "powers") {
          if (task.powers) fail("powers given twice", opt_at);
          const unsigned lo = integer("first power");
          expect('.');
          expect('.');
          const unsigned hi = integer("last power");
          if (lo < 1 || hi < lo) fail("powers must satisfy 1 <= a <= b", opt_at);
          task.powers = std::make_pair(lo, hi);
        } else {
          fail("unknown cech option '" + key + "'", opt_at);
        }
      }
      return task;
    }
    if (kind == "toric") {
      const std::size_t key_at = (skip(), pos_);
      if (identifier("weights") != "weights") fail("expected weights=", key_at);
      expect('=');
      ToricTask task;
      do {
        expect('(');
        std::vector<unsigned> w;
        do {
          w.push_back(integer("weight"));
        } while (accept(','));
        expect(')');
        if (!task.weights.empty() && task.weights.front().size() != w.size()) {
          fail("weights have inconsistent lengths", key_at);
        }
        task.weights.push_back(std::move(w));
      } while (accept(','));
      if (task.weights.size() != session.ring->arity()) {
        fail("toric task needs one weight per ring variable (" + std::to_string(session.ring->arity()) + ")", key_at);
      }
      return task;
    }
    fail("unknown task '" + kind + "'", at);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Session parse_session(std::string_view text) { return SessionParser(text).parse(); }

SessionResult run_session(const Session& session, const RunOptions& options) {
  const RingPtr& ring = session.ring;
  Ideal defining(ring, session.defining);
  std::optional<ToricPresentation> toric;
  for (const auto& task : session.tasks) {
    if (const auto* t = std::get_if<ToricTask>(&task)) {
      toric = toric_presentation(t->weights, ring->field(), ring->variables());
      std::vector<Polynomial> gens = session.defining;
      std::vector<std::size_t> identity(ring->arity());
      for (std::size_t i = 0; i < identity.size(); ++i) identity[i] = i;
      for (const auto& g : toric->ideal.generators()) gens.push_back(g.map_variables(ring, identity));
      defining = Ideal(ring, std::move(gens));
      break;
    }
  }

  QuotientRing quotient(ring, defining);
  IdealInQuotient ideal(quotient, session.ideal);
  SessionResult result{session, defining, toric, invariant_report(ideal, session.assumptions, options.decompose), {}, {}};

  if (session.has_task(1)) {
    if (const auto* report = std::get_if<InvariantReport>(&result.outcome)) {
      result.corollaries = corollary_rules(*report, {session.assumptions.regular, report->preimage_is_prime});
    } else {
      result.corollaries = std::vector<RuleVerdict>{};
    }
  }

  const Ideal cech_ideal(ring, session.ideal);
  for (const auto& task : session.tasks) {
    const auto* t = std::get_if<CechTask>(&task);
    if (!t) continue;
    CechRun run;
    if (!defining.is_monomial() || !cech_ideal.is_monomial()) {
      run.skipped = "non-monomial input; only invariant-level predictions apply";
      result.cech.push_back(std::move(run));
      continue;
    }
    const unsigned max_power = t->powers ? t->powers->second : 1;
    const int bound = t->box ? *t->box : default_box_bound(defining, cech_ideal, max_power);
    const DegreeBox box = DegreeBox::cube(ring->arity(), bound);
    run.module_report = cech_cohomology_box(GradedCechInput::from_ideals(defining, cech_ideal, box), options.max_cells);
    if (t->powers) {
      run.truncations =
          truncated_formal_report(defining, cech_ideal, t->powers->first, t->powers->second, box, options.max_cells);
    }
    result.cech.push_back(std::move(run));
  }
  return result;
}

}  // namespace formal
