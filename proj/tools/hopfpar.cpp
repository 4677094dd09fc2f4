#include <iostream>

#include <CLI11.hpp>

#include "hopfpar/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"hopfpar: exact workbench for partial representations of "
               "finite-dimensional Hopf algebras"};
  app.require_subcommand(1);

  hopfpar::CliOptions opt;
  std::string name, path;

  auto* cat = app.add_subcommand("catalog", "list the named constructions");

  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("name", name, "catalog item")->required();
  verify->add_option("--suite", opt.suite,
                     "axioms|coradical|par|smash|all (default all)");
  verify->add_option("--field", opt.field, "q or fp:<p>");
  verify->add_option("--degree", opt.degree, "truncation degree (default 6)");
  verify->add_option("--oracle", opt.oracle, "groupoid|none");
  verify->add_option("--report", opt.report_path, "write the report here");

  auto* par = app.add_subcommand("par", "truncated k_par with dimension table");
  par->add_option("name", name, "catalog Hopf algebra")->required();
  par->add_option("--degree", opt.degree, "truncation degree (default 6)");
  par->add_option("--oracle", opt.oracle, "groupoid|none");
  par->add_option("--field", opt.field, "q or fp:<p>");
  par->add_option("--report", opt.report_path, "write the report here");

  auto* exp = app.add_subcommand("export", "write a catalog item to a file");
  exp->add_option("name", name, "catalog Hopf algebra")->required();
  exp->add_option("path", path, "output path")->required();
  exp->add_option("--field", opt.field, "q or fp:<p>");

  auto* imp = app.add_subcommand("import", "read a file and verify the axioms");
  imp->add_option("path", path, "input path")->required();
  imp->add_option("--report", opt.report_path, "write the report here");

  CLI11_PARSE(app, argc, argv);

  try {
    if (cat->parsed()) return hopfpar::cmd_catalog(std::cout);
    if (verify->parsed()) return hopfpar::cmd_verify(name, opt, std::cout);
    if (par->parsed()) return hopfpar::cmd_par(name, opt, std::cout);
    if (exp->parsed()) return hopfpar::cmd_export(name, path, opt, std::cout);
    if (imp->parsed()) return hopfpar::cmd_import(path, opt, std::cout);
  } catch (const std::invalid_argument& e) {
    std::cout << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cout << "check failed: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
