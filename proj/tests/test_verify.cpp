#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "rca/verify.hpp"

using namespace rca;

namespace {

using rowops::from_left;
using rowops::from_right;

// C2 that forgets the right-hand neighbor.
void c2_missing_right(const Word* up, const Word* mid, const Word* down, Word* acc,
                      std::size_t n) {
  for (std::size_t w = 0; w < n; ++w) acc[w] ^= up[w] ^ down[w] ^ from_left(mid, w);
}

// C1 that forgets the lower-right diagonal.
void c1_missing_diag(const Word* up, const Word* mid, const Word* down, Word* acc,
                     std::size_t n) {
  (void)mid;
  for (std::size_t w = 0; w < n; ++w)
    acc[w] ^= from_left(up, w) ^ from_right(up, w) ^ from_left(down, w);
}

// C3 with "at least one" in place of "exactly one".
void c3_any(const Word* up, const Word* mid, const Word* down, Word* acc, std::size_t n) {
  for (std::size_t w = 0; w < n; ++w)
    acc[w] ^= up[w] | down[w] | from_left(mid, w) | from_right(mid, w);
}

// C2 that overwrites the accumulator instead of adding to it.
void c2_overwrite(const Word* up, const Word* mid, const Word* down, Word* acc, std::size_t n) {
  for (std::size_t w = 0; w < n; ++w)
    acc[w] = up[w] ^ down[w] ^ from_left(mid, w) ^ from_right(mid, w);
}

// C2 that also counts the cell itself, which breaks the parity structure.
void c2_with_center(const Word* up, const Word* mid, const Word* down, Word* acc,
                    std::size_t n) {
  for (std::size_t w = 0; w < n; ++w)
    acc[w] ^= up[w] ^ down[w] ^ mid[w] ^ from_left(mid, w) ^ from_right(mid, w);
}

KernelSet patched(RuleId rule, RowKernel k, std::string_view name) {
  KernelSet ks = kernels::scalar();
  ks.name = name;
  ks.first_order[static_cast<int>(rule)] = k;
  return ks;
}

}  // namespace

TEST_CASE("every suite passes at reduced range") {
  CHECK(suite_counts(96).passed);
  CHECK(suite_equivalence(96).passed);
  CHECK(suite_replication(5).passed);
  CHECK(suite_reversibility(48).passed);
  CHECK(suite_polynomial(64).passed);
  CHECK(suite_coloring(96).passed);
  CHECK(suite_sublattice(96).passed);
  CHECK(suite_diamond(6).passed);
  CHECK(suite_backward_growth(5).passed);
}

TEST_CASE("suites pass with scalar kernels") {
  const KernelSet& s = kernels::scalar();
  CHECK(suite_counts(40, s).passed);
  CHECK(suite_equivalence(40, s).passed);
  CHECK(suite_reversibility(24, s).passed);
}

TEST_CASE("trivial ranges pass") {
  CHECK(suite_counts(0).passed);
  CHECK(suite_diamond(0).passed);
  CHECK(suite_replication(0).passed);
  CHECK(suite_reversibility(0).passed);
}

TEST_CASE("negative controls fail with a witness") {
  const KernelSet bad_c2 = patched(RuleId::C2, c2_missing_right, "bad-c2");
  const KernelSet bad_c1 = patched(RuleId::C1, c1_missing_diag, "bad-c1");
  const KernelSet bad_c3 = patched(RuleId::C3, c3_any, "bad-c3");
  const KernelSet overwrite = patched(RuleId::C2, c2_overwrite, "overwrite");
  const KernelSet centered = patched(RuleId::C2, c2_with_center, "centered");

  for (const SuiteReport& r :
       {suite_counts(16, bad_c2), suite_counts(16, bad_c1), suite_equivalence(16, bad_c3),
        suite_equivalence(16, bad_c2), suite_replication(3, bad_c1), suite_replication(3, bad_c2),
        suite_reversibility(16, overwrite), suite_polynomial(16, bad_c1),
        suite_coloring(16, centered), suite_sublattice(16, bad_c1), suite_diamond(3, bad_c1),
        suite_backward_growth(3, bad_c2)}) {
    INFO(r.suite);
    CHECK_FALSE(r.passed);
    REQUIRE(r.witness.has_value());
    CHECK_FALSE(r.witness->empty());
  }
}

TEST_CASE("five-pattern decomposition") {
  for (RuleId rule : {RuleId::C1, RuleId::C2})
    for (int k = 0; k <= 5; ++k)
      for (std::int64_t j = 0; j <= (std::int64_t{1} << k); ++j) {
        const FivePattern fp = five_pattern(rule, k, j);
        CHECK(fp.copies.size() == 4);
        CHECK(fp.sums_to_whole);
        CHECK(fp.disjoint);
      }
  CHECK_THROWS_AS(five_pattern(RuleId::C1, 2, 5), IndexOutOfRangeError);
  CHECK_THROWS_AS(replication_offsets(RuleId::C3, 2), NonlinearRuleError);
}

TEST_CASE("catalog and formatting") {
  CHECK(suite_catalog().size() == 9);
  CHECK(find_suite("diamond") != nullptr);
  CHECK(find_suite("diamond")->indexed_by_k);
  CHECK(find_suite("nope") == nullptr);

  const SuiteReport ok{"counts", "n=0..4", true, std::nullopt};
  const SuiteReport bad{"counts", "n=0..4", false, "n=3 wrong"};
  CHECK(format_report(ok) == "[PASS] counts n=0..4");
  CHECK(format_report(bad) == "[FAIL] counts n=0..4: n=3 wrong");

  std::ostringstream os;
  write_reports_json(os, {ok, bad});
  const auto j = nlohmann::json::parse(os.str());
  REQUIRE(j.size() == 2);
  CHECK(j[0]["passed"] == true);
  CHECK(j[0]["witness"].is_null());
  CHECK(j[1]["witness"] == "n=3 wrong");
}
