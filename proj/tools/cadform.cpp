// Command-line front end: parses a problem file, runs one command and prints
// a JSON report (default) or an aligned text table.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "cadform/runner.hpp"

using namespace cadform;

namespace {

constexpr int kUsageExit = 64;
constexpr int kInputExit = 66;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Formulation advisor for cylindrical algebraic decomposition", "cadform"};
  app.set_version_flag("--version", std::string(kToolName) + " " + kToolVersion);
  app.require_subcommand(1);
  app.fallthrough();

  RunOptions opts;
  std::string heuristic = "sotd+ndrr";
  std::string mode;
  bool as_table = false;
  bool as_json = false;
  app.add_option("--order", opts.order, "Restrict to one ordering, lowest variable first, e.g. \"y < x\"");
  app.add_option("--mode", mode, "Override the problem's mode")->check(CLI::IsMember({"full", "ec", "tticad"}));
  app.add_option("--heuristic", heuristic, "Measure priority")
      ->check(CLI::IsMember({"sotd", "ndrr", "sotd+ndrr", "ndrr+sotd", "sum"}))
      ->capture_default_str();
  app.add_flag("--greedy", opts.greedy, "Build one ordering greedily instead of trying all");
  app.add_option("--max-orderings", opts.max_orderings, "Cap on orderings tried exhaustively")->capture_default_str();
  app.add_option("--max-partitions", opts.max_partitions, "Cap on sub-QFF options per clause")->capture_default_str();
  app.add_flag("--cells", opts.cells, "Count cells by lifting (at most two variables)");
  app.add_flag("--precondition", opts.precondition, "Replace equations by a lex Groebner basis first");
  app.add_flag("--rescore", opts.rescore, "Score whole TTICAD tables instead of clause by clause");
  auto* json_flag = app.add_flag("--json", as_json, "JSON output (default)");
  app.add_flag("--table", as_table, "Aligned text output")->excludes(json_flag);
  app.add_flag("--trace", opts.trace, "Include Sturm chains of the univariate projection factors");

  std::string file;
  std::vector<std::string> files;
  struct Sub {
    Command command;
    const char* help;
  };
  const Sub subs[] = {
      {Command::Project, "Projection table per ordering"},
      {Command::Measure, "sotd, ndrr and TNoI per ordering"},
      {Command::AdviseOrder, "Rank variable orderings"},
      {Command::AdviseEc, "Rank equational-constraint designations"},
      {Command::Formulate, "Choose a TTICAD formulation: sub-QFF split and designations"},
      {Command::Precondition, "Groebner preconditioning of each clause"},
      {Command::Cells, "Lift and dump the cells (at most two variables)"},
      {Command::Bench, "Full, TTICAD and preconditioned TTICAD rows for every designation"},
  };
  std::vector<std::pair<CLI::App*, Command>> commands;
  for (const auto& s : subs) {
    auto* sub = app.add_subcommand(std::string(to_string(s.command)), s.help);
    sub->add_option("problem", file, "Problem file, or - for standard input")->required();
    commands.emplace_back(sub, s.command);
  }
  auto* report = app.add_subcommand("report", "Run every problem file of a corpus with its mode's advisor");
  report->add_option("problems", files, "Problem files")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kUsageExit;
  }

  opts.heuristic = *parse_heuristic(heuristic);
  if (!mode.empty()) opts.mode = mode == "full" ? Mode::Full : mode == "ec" ? Mode::Ec : Mode::Tticad;

  std::string command_name = report->parsed() ? "report" : "";
  try {
    RunReport out;
    if (report->parsed()) {
      std::vector<std::pair<std::string, std::string>> inputs;
      for (const auto& f : files) inputs.emplace_back(f, read_input(f));
      out = run_corpus(inputs, opts);
    } else {
      Command command = Command::Project;
      for (const auto& [sub, c] : commands) {
        if (sub->parsed()) command = c;
      }
      command_name = std::string(to_string(command));
      ProblemFile problem = parse_problem(read_input(file));
      out = run_command(command, problem, opts);
    }
    if (as_table) {
      std::cout << format_text(out);
    } else {
      std::cout << to_json(out).dump(2) << "\n";
    }
    return 0;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputExit;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (!as_table) std::cout << error_json(e, opts, command_name).dump(2) << "\n";
    return exit_code(e);
  }
}
