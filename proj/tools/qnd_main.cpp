// qnd: command-line front end.
//
// Exit codes: 0 success, 1 mathematical failure (invalid input, theorem
// violation, non-surjective map), 2 parse or usage error.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "qnd/error.hpp"
#include "qnd/io.hpp"
#include "qnd/verify.hpp"

namespace fs = std::filesystem;
using namespace qnd;

namespace {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;

std::string witness_text(std::vector<std::size_t> const& w) {
  std::string out;
  for (auto x : w) {
    if (!out.empty()) out += ' ';
    out += std::to_string(x);
  }
  return out;
}

int report_error(Error const& e) {
  std::cerr << "error: " << to_string(e.kind()) << ": " << e.what() << '\n';
  bool const usage = e.kind() == ErrorKind::Parse || e.kind() == ErrorKind::OrderTooLarge;
  return usage ? kUsage : kFailure;
}

Quandle load_quandle(std::string const& path) { return parse_quandle(read_text(path)); }

int cmd_validate(std::string const& path) {
  auto const table = parse_quandle_table(read_text(path));
  try {
    validate(table);
  } catch (Error const& e) {
    std::cout << "valid: false\n" << to_string(e.kind()) << ": " << witness_text(e.witness()) << '\n';
    return kFailure;
  }
  std::cout << "valid: true\n";
  return kOk;
}

int cmd_props(std::string const& path) {
  std::cout << format_props(load_quandle(path));
  return kOk;
}

int cmd_reflect(std::string const& path, std::string const& variety) {
  auto const q = load_quandle(path);
  std::cout << format_reflection(reflect(q, variety == "sym" ? Variety::Symmetric : Variety::AbelianSymmetric));
  return kOk;
}

int cmd_classify(std::string const& dom_path, std::string const& cod_path, std::string const& map_path) {
  auto const dom = load_quandle(dom_path);
  auto const cod = load_quandle(cod_path);
  auto const f = make_hom(dom, cod, parse_hom(read_text(map_path)));
  auto const report = classify(f);
  std::cout << format_classification(report);
  return report.surjective ? kOk : kFailure;
}

int cmd_enumerate(std::size_t n, std::string const& out_dir, unsigned threads, bool allow_large) {
  auto const c = enumerate_quandles(n, {threads, allow_large});
  fs::create_directories(out_dir);
  for (std::size_t i = 0; i < c.representatives.size(); ++i) {
    auto const name = "q" + std::to_string(n) + "_" + std::to_string(i) + ".qnd";
    std::ofstream(fs::path(out_dir) / name, std::ios::binary) << format_quandle(c.representatives[i]);
  }
  auto const summary = format_census_summary(c);
  std::ofstream(fs::path(out_dir) / "summary", std::ios::binary) << summary;
  std::cout << summary;
  return kOk;
}

int cmd_verify_theorem(std::size_t n, unsigned threads, bool allow_large) {
  auto const report = verify_main_theorem(n, {threads, allow_large});
  std::cout << format_theorem_report(report);
  return report.ok() ? kOk : kFailure;
}

int cmd_verify_lemmas(std::size_t n, unsigned threads) {
  auto const report = verify_lemmas(n, threads);
  std::cout << format_lemma_report(report);
  return report.ok() ? kOk : kFailure;
}

int cmd_conj(std::string const& path) {
  std::cout << format_quandle(conj_quandle(parse_group(read_text(path))));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite quandles: validation, reflections, extension classification and census"};
  app.require_subcommand(1);

  std::string path, variety, dom, cod, map, out_dir;
  std::size_t order = 0;
  unsigned threads = 1;
  bool allow_large = false;

  auto* validate_cmd = app.add_subcommand("validate", "Check the quandle axioms for a table");
  validate_cmd->add_option("file", path, "Quandle file")->required();

  auto* props_cmd = app.add_subcommand("props", "Report subvariety memberships");
  props_cmd->add_option("file", path, "Quandle file")->required();

  auto* reflect_cmd = app.add_subcommand("reflect", "Reflect onto a subvariety");
  reflect_cmd->add_option("file", path, "Quandle file")->required();
  reflect_cmd->add_option("--variety", variety, "sym or absym")
      ->required()
      ->check(CLI::IsMember({"sym", "absym"}));

  auto* classify_cmd = app.add_subcommand("classify", "Classify a surjection as an extension");
  classify_cmd->add_option("--dom", dom, "Domain quandle file")->required();
  classify_cmd->add_option("--cod", cod, "Codomain quandle file")->required();
  classify_cmd->add_option("--map", map, "Hom file")->required();

  auto* enumerate_cmd = app.add_subcommand("enumerate", "Write all quandles of order n up to isomorphism");
  enumerate_cmd->add_option("n", order, "Order")->required()->check(CLI::PositiveNumber);
  enumerate_cmd->add_option("--out", out_dir, "Output directory")->required();
  enumerate_cmd->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);
  enumerate_cmd->add_flag("--allow-large", allow_large, "Lift the order cap");

  auto* theorem_cmd = app.add_subcommand("verify-theorem", "Check the central/normal characterization exhaustively");
  theorem_cmd->add_option("n", order, "Maximal order")->required()->check(CLI::PositiveNumber);
  theorem_cmd->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);
  theorem_cmd->add_flag("--allow-large", allow_large, "Permit order 5");

  auto* lemmas_cmd = app.add_subcommand("verify-lemmas", "Run the property suites exhaustively");
  lemmas_cmd->add_option("n", order, "Maximal order")->required()->check(CLI::PositiveNumber);
  lemmas_cmd->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);

  auto* conj_cmd = app.add_subcommand("conj", "Conjugation quandle of a group");
  conj_cmd->add_option("file", path, "Group file")->required();

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::CallForAllHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*validate_cmd) return cmd_validate(path);
    if (*props_cmd) return cmd_props(path);
    if (*reflect_cmd) return cmd_reflect(path, variety);
    if (*classify_cmd) return cmd_classify(dom, cod, map);
    if (*enumerate_cmd) return cmd_enumerate(order, out_dir, threads, allow_large);
    if (*theorem_cmd) return cmd_verify_theorem(order, threads, allow_large);
    if (*lemmas_cmd) return cmd_verify_lemmas(order, threads);
    if (*conj_cmd) return cmd_conj(path);
  } catch (Error const& e) {
    return report_error(e);
  } catch (InvariantViolation const& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kFailure;
  } catch (fs::filesystem_error const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
