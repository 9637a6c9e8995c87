// Runs acceptance criteria and prints one line per criterion.
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dpl/verify.hpp"

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  std::vector<int> ids;
  dpl::VerifyOptions opt;
  app.add_option("--criterion,-c", ids, "criterion numbers (default: all)")->check(CLI::Range(0, dpl::kCriteria));
  app.add_flag("--skip-weyl", opt.skip_weyl, "skip the W(E7) pass");
  app.add_option("--threads", opt.threads, "worker threads for the W(E7) pass");
  CLI11_PARSE(app, argc, argv);
  if (ids.empty())
    for (int i = 1; i <= dpl::kCriteria; ++i) ids.push_back(i);

  bool ok = true;
  for (int id : ids) {
    const auto r = dpl::run_criterion(id, opt);
    const std::string tag = r.status == "pass" ? "PASS" : r.status == "skipped" ? "SKIP" : "FAIL";
    std::cout << tag << " criterion " << id << " [" << r.name << "] " << r.actual << " (" << r.seconds << " s)\n";
    if (r.status == "fail") {
      ok = false;
      std::cout << "  expected: " << r.expected << "\n  detail: " << r.detail << "\n";
    }
  }
  return ok ? EXIT_SUCCESS : EXIT_FAILURE;
}
