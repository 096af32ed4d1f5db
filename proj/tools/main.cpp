// blocksep: compute and cross-check block-separated overpartition counts.

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"

namespace {

using namespace blocksep::cli;

const std::map<std::string, Method> kMethods{{"matrix", Method::matrix},
                                             {"recurrence", Method::recurrence},
                                             {"symmetric", Method::symmetric},
                                             {"bruteforce", Method::bruteforce},
                                             {"all", Method::all}};

const std::map<std::string, Format> kFormats{{"plain", Format::plain},
                                             {"csv", Format::csv},
                                             {"json", Format::json},
                                             {"bfile", Format::bfile}};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Block-separated overpartitions: exact counts by four independent methods"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  std::size_t cap = 0;
  std::string output;
  std::optional<std::size_t> positional;

  app.add_option("--limit", cfg.limit, "Highest n (or r for decorations)")
      ->envname("BLOCKSEP_LIMIT")
      ->capture_default_str();
  app.add_option("--method", cfg.method, "matrix | recurrence | symmetric | bruteforce | all")
      ->transform(CLI::CheckedTransformer(kMethods, CLI::ignore_case))
      ->envname("BLOCKSEP_METHOD");
  app.add_option("--format", cfg.format, "plain | csv | json | bfile")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case))
      ->envname("BLOCKSEP_FORMAT");
  auto* cap_opt = app.add_option("--cap-enum", cap, "Override the enumeration cap of the command")
                      ->envname("BLOCKSEP_CAP_ENUM");
  auto* out_opt =
      app.add_option("--output", output, "Write to this file instead of stdout")->envname("BLOCKSEP_OUTPUT");
  app.add_flag("--parallel", cfg.parallel, "Run independent methods concurrently")
      ->envname("BLOCKSEP_PARALLEL");

  auto* seq = app.add_subcommand("seq", "Print b(0..limit)");
  auto* table = app.add_subcommand("table", "Print p(n), pbar(n), b(n) for n = 0..limit");
  auto* verify = app.add_subcommand("verify", "Run the cross-method and oracle checks");
  verify->add_flag("--inject-fault", cfg.inject_fault,
                   "Corrupt one coefficient of the matrix route (detector self-test)");
  auto* decorations = app.add_subcommand("decorations", "List legal decorations of r blocks");
  decorations->add_option("r", positional, "Number of blocks (defaults to --limit)");
  auto* bivariate = app.add_subcommand("bivariate", "Print b(n, m) by number of overlined blocks");
  auto* list = app.add_subcommand("list", "List every block-separated overpartition of n");
  list->add_option("n", positional, "Weight (defaults to --limit)");

  CLI11_PARSE(app, argc, argv);

  if (*cap_opt) cfg.cap_enum = cap;
  if (*out_opt) cfg.output = output;

  if (cfg.format == Format::bfile && !seq->parsed()) {
    std::cerr << "error: --format bfile is only supported by seq\n";
    return exit_usage;
  }

  std::ofstream file;
  if (cfg.output) {
    file.open(*cfg.output);
    if (!file) {
      std::cerr << "error: cannot open " << *cfg.output << " for writing\n";
      return exit_usage;
    }
  }
  std::ostream& out = cfg.output ? static_cast<std::ostream&>(file) : std::cout;

  try {
    if (seq->parsed()) return cmd_seq(cfg, out, std::cerr);
    if (table->parsed()) return cmd_table(cfg, out, std::cerr);
    if (verify->parsed()) return cmd_verify(cfg, out, std::cerr);
    if (decorations->parsed()) return cmd_decorations(cfg, positional.value_or(cfg.limit), out, std::cerr);
    if (bivariate->parsed()) return cmd_bivariate(cfg, out, std::cerr);
    if (list->parsed()) return cmd_list(cfg, positional.value_or(cfg.limit), out, std::cerr);
  } catch (const blocksep::resource_limit_error& e) {
    std::cerr << "error: " << e.what() << " (raise with --cap-enum)\n";
    return exit_usage;
  } catch (const blocksep::usage_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  }
  return exit_usage;
}
