#include <cstdlib>
#include <iostream>
#include <string>

#include "qg/selftest.hpp"

// One PASS/FAIL line per acceptance criterion.
int main(int argc, char **argv) {
  std::uint64_t seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 20261016;
  int failed = 0;
  for (int id = 1; id <= qg::kCriteria; ++id) {
    auto c = qg::run_criterion(id, seed);
    std::cout << (c.pass ? "PASS" : "FAIL") << " criterion " << c.id << " (" << c.title
              << "): " << c.detail << " [" << static_cast<int>(c.seconds * 1000) << " ms]"
              << std::endl;
    if (!c.pass) {
      ++failed;
      for (const auto &x : c.checks)
        if (x.status == qg::Status::fails)
          std::cout << "    failed: " << x.name << (x.witness.empty() ? "" : " -- " + x.witness)
                    << std::endl;
    }
  }
  return failed == 0 ? 0 : 1;
}
