// Acceptance run: one PASS/FAIL line per criterion, each with its runtime
// against the allowed budget. Exit status is nonzero if any line fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "cgl/checks.hpp"

namespace {

constexpr std::uint64_t kSeed = 20261016;

struct Criterion {
  int id;
  const char* title;
  double budget_seconds;
  std::function<std::vector<cgl::CheckResult>()> run;
};

}  // namespace

int main() {
  using namespace cgl::checks;
  const std::vector<Criterion> criteria{
      {1, "smoothing function", 1.0, [] { return std::vector{smoothing_function()}; }},
      {2, "class group correctness", 120.0, [] { return std::vector{class_numbers(10000), group_axioms(500)}; }},
      {3, "ideal-count identities", 300.0, [] { return std::vector{ideal_count_identities(500, 10000)}; }},
      {4, "central-value integrity", 120.0,
       [] { return std::vector{central_integrity(2000), genus_factorization(10000)}; }},
      {5, "majorant sum bound", 600.0, [] { return std::vector{majorant_bound(50, 10000)}; }},
      {6, "resonance keystone", 600.0, [] { return std::vector{resonance_keystone(kSeed, 10, 100)}; }},
      {7, "sums as products", 60.0, [] { return std::vector{sums_as_products(kSeed, 5, 12)}; }},
      {8, "resonator set structure", 60.0, [] { return std::vector{m_set_structure()}; }},
      {9, "crivo bound", 60.0, [] { return std::vector{crivo_bound({100, 1000, 10000, 100000}, 100)}; }},
      {10, "prime-sum integral", 30.0, [] { return std::vector{prime_integral()}; }},
      {11, "family --x 5000 --delta 0.24 (reported)", 1800.0, [] { return std::vector{family_reproducible(5000, 0.24)}; }},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    const auto results = c.run();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool ok = secs < c.budget_seconds;
    for (const auto& r : results) ok = ok && r.passed;
    if (!ok) ++failed;
    std::printf("%s criterion %d: %s (%.2f s, budget %.0f s)\n", ok ? "PASS" : "FAIL", c.id, c.title, secs,
                c.budget_seconds);
    for (const auto& r : results) {
      std::printf("    %s %s: %s\n", r.passed ? "ok  " : "FAIL", r.name.c_str(), r.detail.c_str());
    }
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
