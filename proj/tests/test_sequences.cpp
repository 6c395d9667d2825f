#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "rca/rules.hpp"
#include "rca/sequences.hpp"

using namespace rca;

namespace {

// Published table, n = 0..15.
constexpr std::uint64_t kR[16] = {1, 5, 9, 21, 25, 29, 41, 85, 89, 61, 65, 109, 121, 125, 169, 341};
constexpr std::uint64_t kR1[16] = {1, 4, 5, 16, 9, 20, 21, 64, 25, 36, 29, 80, 41, 84, 85, 256};
constexpr std::uint64_t kR2[16] = {0, 1, 4, 5, 16, 9, 20, 21, 64, 25, 36, 29, 80, 41, 84, 85};

}  // namespace

TEST_CASE("table values") {
  for (int n = 0; n < 16; ++n) {
    CHECK(seq_value(SeqId::R, n) == kR[n]);
    CHECK(seq_value(SeqId::R1, n) == kR1[n]);
    CHECK(seq_value(SeqId::R2, n) == kR2[n]);
  }
  CHECK(seq_value(SeqId::R1, -1) == 0);
  CHECK(seq_value(SeqId::R, 16) == 345);
  CHECK(seq_value(SeqId::R, 21) == 181);
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS(seq_value(SeqId::R, -1), IndexOutOfRangeError);
  CHECK_THROWS_AS(seq_value(SeqId::R2, -1), IndexOutOfRangeError);
  CHECK_THROWS_AS(seq_value(SeqId::R1, -2), IndexOutOfRangeError);
  CHECK_THROWS_AS(seq_value_alt(SeqId::R1, -1), IndexOutOfRangeError);
  CHECK_THROWS_AS(build_table(-1), IndexOutOfRangeError);
}

TEST_CASE("parity split agrees with power-of-two split") {
  for (std::int64_t n = 0; n <= 4096; ++n) {
    REQUIRE(seq_value_alt(SeqId::R1, n) == seq_value(SeqId::R1, n));
    REQUIRE(seq_value_alt(SeqId::R2, n) == seq_value(SeqId::R2, n));
    REQUIRE(seq_value_alt(SeqId::R, n) == seq_value(SeqId::R, n));
  }
}

TEST_CASE("cross relations hold") {
  for (std::int64_t n = 0; n <= 2048; ++n) {
    const Count r = seq_value(SeqId::R, n);
    REQUIRE(seq_value(SeqId::R2, n + 1) == seq_value(SeqId::R1, n));
    REQUIRE(seq_value(SeqId::R2, n) + seq_value(SeqId::R2, n + 1) == r);
    REQUIRE(seq_value(SeqId::R1, 2 * n) == r);
    REQUIRE(seq_value(SeqId::R2, 2 * n + 1) == r);
  }
}

TEST_CASE("power-of-two landmarks") {
  for (int k = 0; k <= 30; ++k) {
    const std::int64_t n = (std::int64_t{1} << k) - 1;
    const Count four_k = Count{1} << (2 * k);
    CHECK(seq_value(SeqId::R1, n) == four_k);
    CHECK(seq_value(SeqId::R, n) == (4 * four_k - 1) / 3);
  }
}

TEST_CASE("simulation agrees for the first 128 steps") {
  for (RuleId rule : kAllRules) {
    for (const CountRecord& c : trajectory_counts(rule, 128)) {
      REQUIRE(c.total == seq_value(SeqId::R, c.n));
      REQUIRE(c.r1 == seq_value(SeqId::R1, c.n));
      REQUIRE(c.r2 == seq_value(SeqId::R2, c.n));
      REQUIRE(c.r3 == 0);
    }
  }
}

TEST_CASE("binary weight and linear counts") {
  CHECK(binary_weight(0) == 0);
  CHECK(binary_weight(255) == 8);
  CHECK(linear_count(Dim::one, 5) == 4);
  CHECK(linear_count(Dim::two, 5) == 16);
}

TEST_CASE("large indices stay exact") {
  const std::int64_t n = (std::int64_t{1} << 40) + 12345;
  const Count r = seq_value(SeqId::R, n);
  CHECK(r > Count{std::numeric_limits<std::uint64_t>::max() >> 40});
  CHECK(seq_value(SeqId::R2, n) + seq_value(SeqId::R2, n + 1) == r);
  CHECK(seq_value_alt(SeqId::R, n) == r);
  CHECK(to_string(Count{0}) == "0");
  CHECK(to_string(Count{1} << 100) == "1267650600228229401496703205376");
}

TEST_CASE("engine cache can be cleared") {
  SequenceEngine e;
  CHECK(e.value(SeqId::R, 1000) == seq_value(SeqId::R, 1000));
  CHECK(e.cache_size() > 0);
  e.clear();
  CHECK(e.cache_size() == 0);
}

TEST_CASE("csv and json output") {
  const SequenceTable t = build_table(3);
  std::ostringstream csv;
  write_csv(csv, t);
  CHECK(csv.str() == "n,R,R1,R2\n0,1,1,0\n1,5,4,1\n2,9,5,4\n3,21,16,5\n");

  std::ostringstream js;
  write_json(js, t);
  const auto parsed = nlohmann::json::parse(js.str());
  REQUIRE(parsed.size() == 4);
  CHECK(parsed[3]["R"] == 21);
  CHECK(parsed[3]["R1"] == 16);
  CHECK(parsed[3]["n"] == 3);
}
