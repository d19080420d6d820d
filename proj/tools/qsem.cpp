// qsem: evaluate proposition scripts and print the Hardy paradox report.
//
//   qsem run <file> [--format text|json]
//   qsem hardy [--format text|json]
//
// Exit status: 0 success, 1 usage error, 2 unreadable file, 3 parse/check
// error, 4 evaluation error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "qsem/dsl.hpp"
#include "qsem/hardy.hpp"
#include "qsem/report.hpp"

namespace {

enum ExitCode : int { kOk = 0, kUsage = 1, kMissingFile = 2, kBadScript = 3, kEvalFailed = 4 };

int cmd_run(const std::string& path, const std::string& format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "qsem: cannot read '" << path << "'\n";
    return kMissingFile;
  }
  std::ostringstream buf;
  buf << in.rdbuf();

  std::vector<qsem::dsl::QueryResult> results;
  try {
    auto checked = qsem::dsl::check(qsem::dsl::parse(buf.str()));
    results = qsem::dsl::run(checked);
  } catch (const qsem::dsl::EvalError& e) {
    std::cerr << path << ":" << e.what() << "\n";
    return kEvalFailed;
  } catch (const qsem::dsl::ScriptError& e) {
    std::cerr << path << ":" << e.what() << "\n";
    return kBadScript;
  }

  if (format == "json")
    std::cout << qsem::dump(qsem::queries_to_json(results));
  else
    std::cout << qsem::queries_to_text(results);
  return kOk;
}

int cmd_hardy(const std::string& format) {
  const auto scenario = qsem::hardy::build_scenario();
  const auto report = qsem::hardy::paradox_report(scenario);
  if (format == "json")
    std::cout << qsem::dump(qsem::hardy::to_json(scenario, report));
  else
    std::cout << qsem::hardy::to_text(scenario, report);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact evaluation of quantum propositions under non-classical semantics"};
  app.require_subcommand(1);

  std::string format = "text";
  std::string path;

  auto* run = app.add_subcommand("run", "Evaluate the queries of a proposition script");
  run->add_option("file", path, "Script file")->required();
  run->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  auto* hardy = app.add_subcommand("hardy", "Print the Hardy paradox report");
  hardy->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  if (*run) return cmd_run(path, format);
  return cmd_hardy(format);
}
