#pragma once

// Invariant suites shared by `cgl verify` and the acceptance binary. Each
// check takes its scale as arguments; the defaults are the full acceptance
// sizes and `run_suite` uses smaller ones.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cgl/reports.hpp"

namespace cgl::checks {

CheckResult smoothing_function();
CheckResult afe_tail_majorant(std::uint64_t seed, int samples = 50);
CheckResult arith_basics(std::int64_t x_max = 100000);

CheckResult class_numbers(std::int64_t d_max = 10000);
CheckResult group_axioms(std::int64_t d_max = 500);
CheckResult character_orthogonality(std::int64_t d_max = 500);

CheckResult ideal_count_identities(std::int64_t d_max = 500, std::int64_t n_max = 10000);

CheckResult central_integrity(std::int64_t d_max = 2000);
CheckResult genus_factorization(std::int64_t n_max = 10000);
CheckResult majorant_bound(std::int64_t d_lo = 50, std::int64_t d_hi = 10000);

CheckResult resonance_keystone(std::uint64_t seed, int discriminants = 10, int trials = 100);
CheckResult sums_as_products(std::uint64_t seed, int configurations = 5, int ideals = 12);
CheckResult m_set_structure();
CheckResult resonator_chain(std::int64_t d_lo = 100, std::int64_t d_hi = 3000, std::int64_t step = 37);

CheckResult crivo_bound(const std::vector<std::int64_t>& xs = {100, 1000, 10000, 100000}, std::int64_t p_max = 100);
CheckResult prime_integral();
/// Runs the family twice (one and two worker threads) and compares the CSV
/// and JSON byte for byte; the detail line carries geo_mean, the comparison
/// bound and their ratio.
CheckResult family_reproducible(std::int64_t x = 5000, double delta = 0.24);

const std::vector<std::string>& suite_names();

/// Throws DomainError for an unknown suite name.
VerifyReport run_suite(std::string_view suite, std::uint64_t seed);

}  // namespace cgl::checks
