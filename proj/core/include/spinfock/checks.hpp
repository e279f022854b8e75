#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "spinfock/modular.hpp"

namespace spinfock::checks {

struct CheckResult {
  std::string name;
  bool ok = true;
  std::string detail;
  double seconds = 0.0;
};

struct SuiteOptions {
  int max_degree = 9;
  int jobs = 1;
  std::uint64_t seed = 0x5eedf0c5ULL;
  int random_words = 10000;
};

// -- embedded reference fixtures --------------------------------------------

CheckResult action_fixtures();
CheckResult degree9_vectors();
CheckResult degree10_basis(int jobs = 1);
/// Both h = 7, m = 21 columns and their shared bottom row (9 7 5).
CheckResult degree21_columns(int jobs = 1);
CheckResult degree10_reduction(int jobs = 1);
CheckResult crystal_strings();
CheckResult ladder_word();
/// Column labels of the p = 3, m = 11 reduced matrix and nonnegativity of
/// the listed column combinations.
CheckResult degree11_export(int jobs = 1);

// -- properties ---------------------------------------------------------------

CheckResult partition_identity(const std::vector<int>& moduli, int max_m);
CheckResult triangularity(int h, int max_m, int jobs = 1);
CheckResult shift_equivariance(int h, int max_degree);
CheckResult normal_order_confluence(int h, int words, std::uint64_t seed);
CheckResult fast_equals_slow(int h, int max_m, int jobs = 1);
CheckResult quotient_intertwiner(int p, int max_m);
CheckResult divided_powers(int h, int max_degree, int max_k);
/// Exhaustive on basis vectors up to `exhaustive_degree`, then `samples`
/// random combinations of degree <= max_degree - 1.
CheckResult commutator(int h, int exhaustive_degree, int max_degree, int samples, std::uint64_t seed);
CheckResult rank(int p, int max_m);
CheckResult nonnegative_reduced(int p, int max_m, int jobs = 1);

std::vector<CheckResult> paper_suite(int jobs = 1);
std::vector<CheckResult> property_suite(const SuiteOptions& options);

}  // namespace spinfock::checks
