#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "fdim/corpus.hpp"
#include "fdim/error.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kInputError = 2;

bool read_input(const std::string& path, std::string& text) {
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
    return true;
  }
  std::ifstream in(path);
  if (!in) return false;
  std::ostringstream buf;
  buf << in.rdbuf();
  text = buf.str();
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ideal invariants, minimal primes and graded Cech cohomology for formal local cohomology bounds"};
  std::string input;
  bool json = false;
  bool run_corpus = false;
  bool quiet = false;
  std::uint64_t max_cells = formal::kDefaultMaxCells;
  app.add_option("--input", input, "Session file, or - for stdin");
  app.add_flag("--json", json, "Emit JSON");
  app.add_flag("--corpus", run_corpus, "Run the built-in example corpus and its audit");
  app.add_option("--max-cells", max_cells, "Cell budget for each Cech run")->check(CLI::PositiveNumber);
  app.add_flag("--quiet", quiet, "Print nothing except errors and the corpus totals");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }
  if (run_corpus == !input.empty()) {
    std::cerr << "exactly one of --input or --corpus is required\n" << app.help();
    return kInputError;
  }

  formal::RunOptions options;
  options.max_cells = max_cells;

  if (run_corpus) {
    const auto result = formal::run_corpus(options);
    if (quiet) {
      std::cout << "corpus: " << result.runs.size() << " entries, " << result.mismatches << " mismatches, "
                << result.paper_inconsistencies << " paper inconsistencies\n";
    } else if (json) {
      std::cout << formal::corpus_to_json(result).dump(2) << "\n";
    } else {
      std::cout << formal::render_corpus_text(result);
    }
    return result.mismatches == 0 ? kOk : kMismatch;
  }

  std::string text;
  if (!read_input(input, text)) {
    std::cerr << "cannot read " << input << "\n";
    return kInputError;
  }
  try {
    const auto result = formal::run_session(formal::parse_session(text), options);
    if (!quiet) {
      const auto summary = formal::summarize(result);
      std::cout << (json ? formal::to_json(summary).dump(2) + "\n" : formal::render_text(summary));
    }
  } catch (const formal::SessionError& e) {
    std::cerr << input << ": " << e.what() << "\n";
    return kInputError;
  } catch (const formal::ParseError& e) {
    std::cerr << input << ": " << e.what() << "\n";
    return kInputError;
  } catch (const formal::BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << input << ": " << e.what() << "\n";
    return kInputError;
  }
  return kOk;
}
