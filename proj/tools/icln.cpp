// Command line front end: evaluate formulas in models, search for
// countermodels, classify negation words, and print the reference
// artifacts (validity table, entailment poset, errata, verification).
//
// Exit codes: 0 done, 1 verification failed or internal inconsistency,
// 2 bad usage or unparseable input, 3 model with semantic defects.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "icln/verify.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;
constexpr int kDefect = 3;

nlohmann::json read_json(const std::string& path) {
  std::string text;
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    text = buf.str();
  } else {
    std::ifstream in(path);
    if (!in) throw icln::MalformedModel("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw icln::MalformedModel(std::string("invalid JSON: ") + e.what());
  }
}

// Loads and validates; prints every defect and exits via kDefect when the
// model is structurally fine but semantically broken.
icln::RModel load_model(const std::string& path, int& rc) {
  icln::ValidatedModel v = icln::validate_model(icln::model_from_json(read_json(path)));
  if (!v.ok()) {
    for (const icln::ModelDefect& d : v.defects) std::cerr << d.message() << "\n";
    rc = kDefect;
    return {};
  }
  rc = kOk;
  return *std::move(v.model);
}

int cmd_eval(const std::string& model_path, const std::string& formula_text) {
  int rc = kOk;
  icln::RModel m = load_model(model_path, rc);
  if (rc != kOk) return rc;
  icln::FormulaPtr f = icln::parse_formula(formula_text);
  bool everywhere = true;
  for (int w = 0; w < m.size(); ++w) {
    bool fw = icln::forces(m, w, *f);
    everywhere = everywhere && fw;
    std::cout << m.names[w] << " " << (fw ? "+" : "-") << "\n";
  }
  std::cout << (everywhere ? "valid" : "invalid") << "\n";
  return kOk;
}

void print_countermodel(const icln::Countermodel& cm) {
  std::cout << "countermodel: " << icln::model_to_json(cm.model).dump() << "\n"
            << "refuting world: " << cm.world_name() << "\n";
}

int cmd_valid(const std::string& formula_text, const icln::SearchBound& bound) {
  icln::FormulaPtr f = icln::parse_formula(formula_text);
  if (auto cm = icln::find_countermodel(*f, bound)) {
    std::cout << "invalid\n";
    print_countermodel(*cm);
  } else {
    std::cout << "valid within bound (" << bound.max_worlds << " worlds, height "
              << bound.max_height << ")\n";
  }
  return kOk;
}

int cmd_countermodel(const std::string& formula_text, const icln::SearchBound& bound) {
  icln::FormulaPtr f = icln::parse_formula(formula_text);
  if (auto cm = icln::find_countermodel(*f, bound)) {
    print_countermodel(*cm);
  } else {
    std::cout << "no countermodel within bound (" << bound.max_worlds << " worlds, height "
              << bound.max_height << ")\n";
  }
  return kOk;
}

int cmd_classify(const std::string& word_text) {
  icln::NWord w = icln::parse_nword(word_text);
  icln::NWord by_rules = icln::normalize(w);
  icln::NWord by_models = icln::normalize_semantic(w);
  std::cout << "word: " << icln::render(w) << "\n"
            << "representative: " << icln::render(by_rules) << "\n"
            << "semantic: " << icln::render(by_models) << "\n"
            << "signature: " << icln::signature(w).str() << "\n"
            << "irreducible: " << (icln::irreducible(w) ? "yes" : "no") << "\n";
  if (by_rules != by_models) {
    std::cerr << "internal inconsistency: rewriting and evaluation disagree\n";
    return kFailed;
  }
  return kOk;
}

int cmd_census(int max_len, const std::string& format) {
  std::vector<icln::EquivClass> classes = icln::census(max_len);
  if (format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const icln::EquivClass& c : classes) {
      nlohmann::json irr = nlohmann::json::array();
      for (const icln::NWord& w : c.irreducibles) irr.push_back(icln::render(w));
      arr.push_back({{"representative", icln::render(c.rep)},
                     {"signature", c.sig.str()},
                     {"member_count", c.members.size()},
                     {"irreducible_members", std::move(irr)}});
    }
    std::cout << arr.dump(2) << "\n";
  } else {
    std::cout << classes.size() << " classes among words of length <= " << max_len << "\n";
    for (const icln::EquivClass& c : classes) {
      std::cout << icln::render(c.rep) << "  " << c.sig.str() << "  members "
                << c.members.size() << "  irreducible";
      for (const icln::NWord& w : c.irreducibles) std::cout << " " << icln::render(w);
      std::cout << "\n";
    }
  }
  return kOk;
}

int cmd_table(int max_len, const std::string& format) {
  icln::TableFormat fmt =
      format == "csv" ? icln::TableFormat::Csv : icln::TableFormat::Markdown;
  std::cout << icln::render_table(max_len, fmt);
  return kOk;
}

int cmd_errata(const std::string& format) {
  std::vector<icln::Mismatch> errata = icln::find_errata();
  if (format == "json") {
    std::cout << icln::errata_to_json(errata).dump(2) << "\n";
  } else {
    for (const icln::Mismatch& m : errata)
      std::cout << "row " << icln::render(m.word) << ", column "
                << icln::context_name(m.context) << ": printed '" << (m.printed ? '+' : '-')
                << "', computed '" << (m.computed ? '+' : '-') << "' — " << m.justification
                << "\n";
    std::cout << errata.size() << " cells disagree with evaluation\n";
  }
  return kOk;
}

int cmd_poset(int max_len, bool constants, const std::string& format) {
  icln::Poset p = icln::build_poset(icln::census(max_len), constants);
  if (format == "json")
    std::cout << icln::poset_to_json(p).dump(2) << "\n";
  else
    std::cout << icln::emit_dot(p);
  return kOk;
}

int cmd_verify(const icln::VerifyOptions& opt) {
  auto start = std::chrono::steady_clock::now();
  std::vector<icln::SuiteResult> results = icln::run_verification(opt);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  long long checks = 0;
  for (const icln::SuiteResult& r : results) {
    checks += r.checks;
    std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.checks << " checks)";
    if (!r.passed) std::cout << ": " << r.detail;
    std::cout << "\n";
  }
  bool ok = icln::all_passed(results);
  std::ostringstream secs_text;
  secs_text.precision(2);
  secs_text << std::fixed << secs;
  std::cout << results.size() << " suites, " << checks << " checks, "
            << (ok ? "all passed" : "FAILURES") << " (" << secs_text.str() << " s)\n";
  return ok ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"toolkit for the negation fragment over rooted Kripke models"};
  app.require_subcommand(1);

  icln::SearchBound bound;
  auto add_bounds = [&](CLI::App* cmd) {
    cmd->add_option("--max-worlds", bound.max_worlds, "world budget (1..6)")
        ->check(CLI::Range(1, 6));
    cmd->add_option("--max-height", bound.max_height, "chain length budget")
        ->check(CLI::Range(1, 6));
  };

  std::string model_path, formula_text, word_text;
  std::string format;
  int max_len = 5;
  bool constants = false;

  CLI::App* eval = app.add_subcommand("eval", "evaluate a formula in a model (JSON file or -)");
  eval->add_option("model", model_path, "model JSON path")->required();
  eval->add_option("formula", formula_text, "formula text")->required();

  CLI::App* valid = app.add_subcommand("valid", "bounded validity check");
  valid->add_option("formula", formula_text, "formula text")->required();
  add_bounds(valid);

  CLI::App* counter = app.add_subcommand("countermodel", "search for a refuting model");
  counter->add_option("formula", formula_text, "formula text")->required();
  add_bounds(counter);

  CLI::App* classify = app.add_subcommand("classify", "canonical form of a negation word");
  classify->add_option("word", word_text, "negation word, e.g. ~!!p")->required();

  CLI::App* census = app.add_subcommand("census", "equivalence classes of negation words");
  census->add_option("--max-len", max_len, "word length cap (0..16)")->check(CLI::Range(0, 16));
  census->add_option("--format", format, "text (default) or json")
      ->check(CLI::IsMember({"text", "json"}));

  CLI::App* table = app.add_subcommand("table", "computed validity table");
  table->add_option("--max-len", max_len, "word length cap (0..8)")->check(CLI::Range(0, 8));
  table->add_option("--format", format, "markdown (default) or csv")
      ->check(CLI::IsMember({"markdown", "csv"}));

  CLI::App* errata = app.add_subcommand("errata", "published table cells that evaluation refutes");
  errata->add_option("--format", format, "text (default) or json")
      ->check(CLI::IsMember({"text", "json"}));

  CLI::App* poset = app.add_subcommand("poset", "entailment order of the representatives");
  poset->add_option("--max-len", max_len, "census length cap (0..16)")->check(CLI::Range(0, 16));
  poset->add_flag("--constants", constants, "include 0, bot and 1");
  poset->add_option("--format", format, "dot (default) or json")
      ->check(CLI::IsMember({"dot", "json"}));

  icln::VerifyOptions opt;
  int verify_len = -1;
  CLI::App* verify = app.add_subcommand("verify", "run the self-verification suites");
  verify->add_option("--max-len", verify_len, "word length budget (scales every suite)")
      ->check(CLI::Range(1, 12));
  verify->add_option("--samples", opt.samples, "sampled pairs per suite")
      ->check(CLI::Range(0, 1000000));
  verify->add_option("--seed", opt.seed, "sampling seed");
  verify->add_option("--max-worlds", opt.bound.max_worlds, "world budget (1..6)")
      ->check(CLI::Range(1, 6));
  verify->add_option("--max-height", opt.bound.max_height, "chain length budget")
      ->check(CLI::Range(1, 6));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (eval->parsed()) return cmd_eval(model_path, formula_text);
    if (valid->parsed()) return cmd_valid(formula_text, bound);
    if (counter->parsed()) return cmd_countermodel(formula_text, bound);
    if (classify->parsed()) return cmd_classify(word_text);
    if (census->parsed()) return cmd_census(max_len, format);
    if (table->parsed()) return cmd_table(max_len, format);
    if (errata->parsed()) return cmd_errata(format);
    if (poset->parsed()) return cmd_poset(max_len, constants, format);
    if (verify->parsed()) {
      if (verify_len > 0) {
        opt.max_len = verify_len;
        opt.agreement_len = std::min(12, 2 * verify_len);
        opt.parity_len = std::min(8, 2 * verify_len);
      }
      return cmd_verify(opt);
    }
  } catch (const icln::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  } catch (const icln::MalformedModel& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  } catch (const icln::UnknownWorld& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  } catch (const std::logic_error& e) {
    std::cerr << "internal inconsistency: " << e.what() << "\n";
    return kFailed;
  }
  return kUsage;
}
