// One PASS/FAIL line per acceptance criterion; exit status 0 iff all pass.
//
// Expected values that are not produced by the library itself (hexagon
// vectors, counts, Catalan numbers) are written out here by hand.

#include "multiquilt/verify.hpp"

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <set>

using namespace multiquilt;

namespace {

std::vector<long long> catalan_by_recurrence(int k) {
  std::vector<long long> c{1};
  for (int m = 1; m <= k; ++m) {
    long long s = 0;
    for (int i = 0; i < m; ++i) s += c[i] * c[m - 1 - i];
    c.push_back(s);
  }
  return c;
}

// Extra literal checks layered on top of the shared suites.
void literal_checks(Criterion& c) {
  switch (c.id) {
    case 1: {
      std::set<IntVec> got;
      for (const auto& t : enumerate_colored_trees(3, true)) got.insert(weight_vector(t).entries);
      const std::set<IntVec> want{{1, 2, 0}, {1, 4, -2}, {2, 4, -3}, {2, 1, 0}, {4, 1, -2}, {4, 2, -3}};
      c.checks.push_back({"weight vectors equal the hand-derived set", got == want, ""});
      break;
    }
    case 11: {
      const auto cat = catalan_by_recurrence(5);
      const long long colored[] = {2, 6, 21, 80};
      bool ok = true;
      for (int n = 2; n <= 5; ++n) {
        ok = ok && static_cast<long long>(enumerate_ribbon_trees(n, true).size()) == cat[n - 1];
        ok = ok && static_cast<long long>(enumerate_colored_trees(n, true).size()) == colored[n - 2];
      }
      c.checks.push_back({"counts 2,6,21,80 and Catalan 1,2,5,14", ok, ""});
      break;
    }
    default:
      break;
  }
}

}  // namespace

int main(int argc, char** argv) {
  const std::uint64_t seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 1;
  int failed = 0;
  for (int k = 1; k <= criterion_count; ++k) {
    const auto start = std::chrono::steady_clock::now();
    Criterion c;
    try {
      c = run_criterion(k, seed);
      literal_checks(c);
    } catch (const std::exception& e) {
      c.id = k;
      c.checks.push_back({"exception", false, e.what()});
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::string why;
    for (const auto& r : c.checks) {
      if (!r.passed) why += " | " + r.name + ": " + r.detail;
    }
    if (k == 5 && c.checks.size() > 1) why += " | note: " + c.checks[1].detail;
    failed += !c.passed();
    std::cout << (c.passed() ? "PASS" : "FAIL") << " criterion " << k << " (" << c.title << ", " << c.checks.size()
              << " checks, " << secs << " s)" << why << "\n";
  }
  std::cout << (criterion_count - failed) << "/" << criterion_count << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
