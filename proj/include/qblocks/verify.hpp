#pragma once

// Invariant suites shared by the CLI `verify` command and the test binaries.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "qblocks/qfield.hpp"
#include "qblocks/uqsl2.hpp"

namespace qblocks {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

struct SuiteResult {
  std::string name;
  std::vector<CheckResult> checks;
  bool passed() const;
  double seconds() const;
};

struct VerifyOptions {
  int n_max = 4;
  std::uint64_t seed = 1;
  int samples = 100;
};

/// qfield, dyck, tilings, qmatrix, uqsl2, blocks, cross.
const std::vector<std::string>& suite_names();
/// Throws std::invalid_argument for an unknown suite name.
SuiteResult run_suite(const std::string& name, const VerifyOptions& opts);
std::vector<SuiteResult> run_all_suites(const VerifyOptions& opts);

// Random inputs for the property suites.
LaurentPoly random_laurent(std::mt19937_64& rng, int max_terms = 3, int max_exp = 3, int max_coeff = 5);
RatQ random_ratq(std::mt19937_64& rng);
TensorVec random_tensor(std::mt19937_64& rng, int n, int max_terms = 4);

// Individual checks used by the acceptance binary.
CheckResult check_catalan_counts(int n_max);
CheckResult check_inverse_theorem(int n_max, int eliminate_n);
CheckResult check_recursion(int n_max);
CheckResult check_relations(std::uint64_t seed, int samples, int n_lo, int n_hi);
CheckResult check_highest_weight_and_projections(int n_max);
CheckResult check_basis(int rank_n_max, int kernel_n_max);
CheckResult check_cross_module(int n_max, const std::vector<double>& kappas);
CheckResult check_block_analytics();
CheckResult check_q1_degeneration(int n_max);

}  // namespace qblocks
