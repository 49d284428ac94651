// stringy_mckay: orbifold E-polynomials, crepant resolutions and McKay checks.

#include "stringy/cli.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
  namespace cli = stringy::cli;

  CLI::App app{"Stringy E-polynomials of orbifolds and their crepant resolutions"};
  app.require_subcommand(1);

  cli::Options options;
  options.cap = cli::default_cap();
  std::string format = "table";
  std::vector<std::string> files;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "output format")->check(CLI::IsMember({"table", "kv"}));
    sub->add_flag("--allow-fractional", options.allow_fractional, "accept non-SL models with fractional exponents");
    sub->add_option("--cap", options.cap, "group closure cap")->check(CLI::PositiveNumber);
  };

  const std::vector<std::pair<std::string, std::string>> help{
      {"sectors", "print the twisted-sector table of a model"},
      {"stringy", "print the orbifold E-polynomial of a model"},
      {"resolve", "print a crepant resolution as a fan file"},
      {"verify", "compare the orbifold E-polynomial with a crepant resolution"},
      {"compare", "compare the E-polynomials of two K-equivalent smooth fans"},
      {"catalog", "verify every built-in example"},
      {"selftest", "run the invariant suites"}};
  for (const auto& [name, text] : help) {
    auto* sub = app.add_subcommand(name, text);
    add_common(sub);
    if (name == "compare")
      sub->add_option("files", files, "two fan files")->expected(2)->required()->check(CLI::ExistingFile);
    else if (name != "catalog" && name != "selftest")
      sub->add_option("file", files, "model file")->expected(1)->required()->check(CLI::ExistingFile);
  }

  CLI11_PARSE(app, argc, argv);

  options.format = format == "kv" ? cli::Format::kKv : cli::Format::kTable;
  auto result = cli::run(app.get_subcommands().front()->get_name(), files, options);
  std::cout << result.out;
  std::cerr << result.err;
  return result.status;
}
