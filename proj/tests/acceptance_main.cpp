// Runs every acceptance criterion and prints one PASS/FAIL line per criterion.

#include <CLI11.hpp>

#include <iostream>

#include "kedge/acceptance.hpp"

int main(int argc, char** argv) {
  CLI::App app{"kedge acceptance suite"};
  std::string scope = "all";
  kedge::AcceptanceOptions opt;
  app.add_option("--scope", scope)->check(CLI::IsMember({"bounds", "identity", "central", "constructions", "all"}));
  app.add_option("--seed", opt.seed);
  CLI11_PARSE(app, argc, argv);

  int failed = 0;
  for (int id : kedge::criteria_for_scope(scope)) {
    auto r = kedge::run_criterion(id, opt);
    std::cout << kedge::format_result(r) << std::endl;
    failed += !r.passed();
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criterion(s) failed") << '\n';
  return failed == 0 ? 0 : 1;
}
