#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "frobdepth/commands.hpp"

using namespace frobdepth;

int main(int argc, char** argv) {
  CLI::App app{"Frobenius depth and local cohomology vanishing over F_p[x1..xn]"};
  app.require_subcommand(1);

  Options opt;
  std::string order = "grevlex";
  std::string json;
  std::string target;
  const std::map<std::string, OrderKind> orders{{"grevlex", OrderKind::Grevlex},
                                                {"lex", OrderKind::Lex}};

  auto common = [&](CLI::App* sub, const char* what) {
    sub->add_option(what, target)->required();
    sub->add_option("--order", order, "monomial order")
        ->check(CLI::IsMember({"grevlex", "lex"}));
    sub->add_option("--pair-cap", opt.pair_cap, "abort after this many S-pairs");
  };

  auto* analyze = app.add_subcommand("analyze", "invariants and checks for one ideal file");
  common(analyze, "file");
  analyze->add_option("--max-e", opt.max_e, "Frobenius iterations per chain")->check(CLI::PositiveNumber);
  analyze->add_option("--json", json, "write the JSON report here");

  auto* verify = app.add_subcommand("verify", "run every .ideal file of a directory");
  common(verify, "dir");
  verify->add_option("--max-e", opt.max_e, "Frobenius iterations per chain")->check(CLI::PositiveNumber);

  auto* ext = app.add_subcommand("ext", "print Ext^j(R/I, R) as a subquotient");
  common(ext, "file");
  ext->add_option("--j", opt.j, "cohomological index")->required();

  auto* gb = app.add_subcommand("gb", "print the reduced Groebner basis");
  common(gb, "file");

  auto* resolve = app.add_subcommand("resolve", "print the minimal free resolution");
  common(resolve, "file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : exit_code::parse;
  }
  opt.order = orders.at(order);
  if (!json.empty()) opt.json = json;

  if (analyze->parsed()) return cmd_analyze(target, opt, std::cout, std::cerr);
  if (verify->parsed()) return cmd_verify(target, opt, std::cout, std::cerr);
  if (ext->parsed()) return cmd_ext(target, opt, std::cout, std::cerr);
  if (gb->parsed()) return cmd_gb(target, opt, std::cout, std::cerr);
  return cmd_resolve(target, opt, std::cout, std::cerr);
}
