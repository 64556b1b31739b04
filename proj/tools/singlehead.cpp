#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "singlehead/singlehead.hpp"

namespace {

int emit(const singlehead::ModeResult& result) {
  if (!result.out.empty()) std::cout << result.out;
  if (!result.err.empty()) std::cerr << result.err;
  return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace singlehead;

  CLI::App app{
      "Single-head analysis of definite Horn formulae: body minimization, "
      "equivalence tests and variable forgetting"};

  std::vector<std::string> specs;
  std::string test_file;
  std::string graph_kind;
  std::string var_mode = "single";
  unsigned attempts = 0;
  std::uint64_t seed = 0;

  app.add_option("-f,--formula", specs,
                 "clause specs, e.g. 'ab->c' or 'b=d'");
  app.add_option("-t,--test", test_file, "run the cases in a test file");
  app.add_option("--graph", graph_kind, "print a graph in DOT format")
      ->check(CLI::IsMember({"syntactic", "semantic"}));
  app.add_option("--vars", var_mode,
                 "variable tokens: single characters or comma-separated "
                 "identifiers")
      ->check(CLI::IsMember({"single", "multi"}));
  app.add_option("--attempts", attempts,
                 "retry over random clause orders up to N times");
  app.add_option("--seed", seed, "seed for the clause-order permutations");

  auto* forget_cmd =
      app.add_subcommand("forget", "forget variables from a formula");
  std::vector<std::string> forget_specs;
  std::vector<std::string> forget_vars;
  bool naive = false;
  unsigned forget_attempts = 1;
  std::uint64_t forget_seed = 0;
  forget_cmd->add_option("-f,--formula", forget_specs, "clause specs")
      ->required();
  forget_cmd->add_option("--vars", forget_vars, "variables to forget")
      ->required();
  forget_cmd->add_flag("--naive", naive,
                       "skip the single-head preprocessing");
  forget_cmd->add_option("--attempts", forget_attempts,
                         "clause-order attempts for preprocessing");
  forget_cmd->add_option("--seed", forget_seed, "permutation seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 2;
  }

  RunOptions options;
  options.mode = var_mode == "multi" ? VarMode::Multi : VarMode::Single;
  options.attempts = attempts;
  options.seed = seed;

  if (forget_cmd->parsed()) {
    options.attempts = forget_attempts;
    options.seed = forget_seed;
    return emit(run_forget_mode(forget_specs, forget_vars, naive, options));
  }
  if (!test_file.empty()) return emit(run_test_mode(test_file, options));
  if (!graph_kind.empty()) {
    if (specs.empty()) {
      std::cerr << "error: --graph needs a formula (-f ...)\n";
      return 2;
    }
    GraphKind kind = graph_kind == "semantic" ? GraphKind::Semantic
                                              : GraphKind::Syntactic;
    return emit(run_graph_mode(specs, kind, options));
  }
  if (!specs.empty()) return emit(run_formula_mode(specs, options));

  std::cerr << app.help();
  return 2;
}
