#include <iomanip>
#include <iostream>

#include "sdspectra/verify.hpp"

using namespace sdspectra;

int main() {
  const VerifyConfig cfg;
  int failed = 0;
  for (const Criterion& cr : criteria()) {
    const Check c = run_criterion(cr, cfg);
    failed += !c.passed;
    std::cout << (c.passed ? "PASS" : "FAIL") << "  criterion " << std::setw(2) << cr.id << "  " << cr.title << ": " << c.detail << " (" << std::fixed
              << std::setprecision(2) << c.seconds << " s)" << std::endl;
    std::cout.unsetf(std::ios::fixed);
  }
  std::cout << (failed ? "FAILED " : "ALL PASSED ") << criteria().size() - std::size_t(failed) << "/" << criteria().size() << std::endl;
  return failed ? 1 : 0;
}
