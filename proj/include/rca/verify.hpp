#pragma once

// Verification suites. Each suite checks one proved statement about the
// seed trajectories exhaustively over a finite prefix and reports the first
// counterexample it meets.
//
// Suites take the KernelSet that drives the simulation so tests can hand them
// a deliberately broken rule and confirm they fail.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rca/kernels.hpp"
#include "rca/poly.hpp"
#include "rca/rule_id.hpp"

namespace rca {

struct SuiteReport {
  std::string suite;
  std::string range;
  bool passed = true;
  std::optional<std::string> witness;  // set iff !passed

  friend bool operator==(const SuiteReport&, const SuiteReport&) = default;
};

SuiteReport suite_counts(std::int64_t n_max, const KernelSet& ks = kernels::best());
SuiteReport suite_equivalence(std::int64_t n_max, const KernelSet& ks = kernels::best());
SuiteReport suite_replication(int k_max, const KernelSet& ks = kernels::best());
SuiteReport suite_reversibility(std::int64_t n_max, const KernelSet& ks = kernels::best());
SuiteReport suite_polynomial(std::int64_t n_max, const KernelSet& ks = kernels::best());
SuiteReport suite_coloring(std::int64_t n_max, const KernelSet& ks = kernels::best());
SuiteReport suite_sublattice(std::int64_t n_max, const KernelSet& ks = kernels::best());
SuiteReport suite_diamond(int k_max, const KernelSet& ks = kernels::best());
SuiteReport suite_backward_growth(int k_max, const KernelSet& ks = kernels::best());

// Split of f_(2^k + j)(T) into four shifted copies of f_j(T) and the central
// f_(2^k - j)(T), for 0 <= j <= 2^k.
struct FivePattern {
  std::vector<LaurentPoly2> copies;  // four, in shift order
  LaurentPoly2 central;
  LaurentPoly2 whole;                // f_(2^k + j)(T) from the ladder
  bool sums_to_whole = false;
  bool disjoint = false;
};
FivePattern five_pattern(RuleId rule, int k, std::int64_t j);

// Shifts by which 2^k steps of a linear rule replicate a pattern.
std::vector<Cell> replication_offsets(RuleId rule, int k);

struct SuiteInfo {
  std::string_view name;
  bool indexed_by_k;        // --max is k_max rather than n_max
  std::int64_t default_max;
};

const std::vector<SuiteInfo>& suite_catalog();
const SuiteInfo* find_suite(std::string_view name);

// Default range for a suite; CA_DEFAULT_MAX overrides the n-indexed ones.
std::int64_t default_max_for(const SuiteInfo& info);

SuiteReport run_suite(const SuiteInfo& info, std::int64_t max,
                      const KernelSet& ks = kernels::best());
// Every suite at its default range, in catalog order.
std::vector<SuiteReport> run_all_suites(const KernelSet& ks = kernels::best());

// "[PASS] name range" or "[FAIL] name range: witness".
std::string format_report(const SuiteReport& r);
void write_reports_json(std::ostream& os, const std::vector<SuiteReport>& reports);

}  // namespace rca
