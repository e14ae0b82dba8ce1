#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "pbz/error.hpp"
#include "pbz/io/commands.hpp"

namespace {

using pbz::io::OutputFormat;
using pbz::io::RunConfig;

struct TokenLists {
  std::vector<std::string> positive, negative, unknown;
};

void add_table_options(CLI::App& cmd, RunConfig& cfg, TokenLists& tokens, bool required) {
  auto* input = cmd.add_option("-i,--input", cfg.input, "decision table (CSV)");
  if (required) input->required()->check(CLI::ExistingFile);
  cmd.add_option("-a,--attributes", cfg.table.attributes,
                 "condition attributes for indiscernibility (default: all)")
      ->delimiter(',');
  cmd.add_option("-d,--decision", cfg.table.decision_column, "decision column (default: last)");
  cmd.add_option("--positive", tokens.positive, "tokens meaning positive")->delimiter(',');
  cmd.add_option("--negative", tokens.negative, "tokens meaning negative")->delimiter(',');
  cmd.add_option("--unknown", tokens.unknown, "tokens meaning unknown")->delimiter(',');
}

void add_format_option(CLI::App& cmd, OutputFormat& format) {
  const std::map<std::string, OutputFormat> formats{{"text", OutputFormat::text},
                                                    {"json", OutputFormat::json}};
  cmd.add_option("-f,--format", format, "text or json")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
}

void add_logic_options(CLI::App& cmd, RunConfig& cfg) {
  auto* name = cmd.add_option("-l,--logic", cfg.logic, "built-in logic (see list-logics)");
  auto* spec = cmd.add_option("--logic-spec", cfg.logic_spec_path, "logic spec JSON file")
                   ->check(CLI::ExistingFile);
  name->excludes(spec);
}

void apply_tokens(const TokenLists& tokens, RunConfig& cfg) {
  auto& m = cfg.table.mapping;
  if (!tokens.positive.empty()) m.positive = {tokens.positive.begin(), tokens.positive.end()};
  if (!tokens.negative.empty()) m.negative = {tokens.negative.begin(), tokens.negative.end()};
  if (!tokens.unknown.empty()) m.unknown = {tokens.unknown.begin(), tokens.unknown.end()};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Seven-valued rough-set classification over orthopairs"};
  app.require_subcommand(1);

  RunConfig cfg;
  TokenLists tokens;
  std::string mutation;

  auto* classify = app.add_subcommand("classify", "classify every object of a decision table");
  add_table_options(*classify, cfg, tokens, true);
  add_logic_options(*classify, cfg);
  add_format_option(*classify, cfg.format);

  auto* verify = app.add_subcommand("verify", "check the lattice axioms exhaustively");
  add_table_options(*verify, cfg, tokens, false);
  verify->add_option("--synthetic-size", cfg.synthetic_sizes,
                     "sweep all partitions of universes of these sizes (default 1,2,3,4)")
      ->delimiter(',');
  verify->add_option("--budget", cfg.axiom_budget.max_tuples,
                     "largest tuple count checked exhaustively");
  verify->add_option("--samples", cfg.axiom_budget.samples, "random tuples beyond the budget");
  verify->add_option("--seed", cfg.axiom_budget.seed, "sampling seed");
  verify->add_option("--mutation", mutation)->group("");
  add_format_option(*verify, cfg.format);

  auto* validate = app.add_subcommand("validate-logic", "check that a logic partitions U");
  add_table_options(*validate, cfg, tokens, false);
  add_logic_options(*validate, cfg);
  validate->add_option("--synthetic-size", cfg.synthetic_sizes,
                       "sweep all partitions of universes of these sizes (default 1,2,3,4)")
      ->delimiter(',');
  validate->add_option("--budget", cfg.validation_budget.exhaustive_limit,
                       "largest orthopair count checked exhaustively");
  validate->add_option("--samples", cfg.validation_budget.samples,
                       "random orthopairs beyond the budget");
  validate->add_option("--seed", cfg.validation_budget.seed, "sampling seed");
  add_format_option(*validate, cfg.format);

  auto* list = app.add_subcommand("list-logics", "print the built-in logics");
  add_format_option(*list, cfg.format);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : pbz::io::kExitDataError;
  }
  apply_tokens(tokens, cfg);

  try {
    if (!mutation.empty()) {
      auto m = pbz::parse_mutation(mutation);
      if (!m) throw pbz::Error("unknown mutation '" + mutation + "'");
      cfg.mutation = *m;
    }
    if (classify->parsed()) {
      std::cout << pbz::io::render(pbz::io::classify_command(cfg), cfg.format);
      return pbz::io::kExitOk;
    }
    if (verify->parsed()) {
      auto report = pbz::io::verify_command(cfg);
      std::cout << pbz::io::render(report, cfg.format);
      return report.certified ? pbz::io::kExitOk : pbz::io::kExitCheckFailed;
    }
    if (validate->parsed()) {
      auto report = pbz::io::validate_logic_command(cfg);
      std::cout << pbz::io::render(report, cfg.format);
      return report.valid ? pbz::io::kExitOk : pbz::io::kExitCheckFailed;
    }
    if (list->parsed()) {
      std::cout << pbz::io::list_logics_command(cfg.format);
      return pbz::io::kExitOk;
    }
  } catch (const pbz::LogicSpecError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return pbz::io::kExitCheckFailed;
  } catch (const pbz::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return pbz::io::kExitDataError;
  }
  return pbz::io::kExitDataError;
}
