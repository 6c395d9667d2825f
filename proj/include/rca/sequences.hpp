#pragma once

// Population sequences of the lifts started from a single seed:
//
//   R(n)   cells with nonzero value
//   R1(n)  cells with value 1
//   R2(n)  cells with value 2
//
// computed without simulation by power-of-two splitting,
//
//   R(2^k + j)  = 4 R(j)  + R(2^k - j - 1),    0 <= j < 2^k,   R(0) = 1
//   R1(2^k + j) = 4 R1(j) + R1(2^k - j - 2),   0 <= j < 2^k,   R1(-1) = 0, R1(0) = 1
//   R2(2^k + j) = 4 R2(j) + R2(2^k - j),       0 <  j <= 2^k,  R2(0) = 0, R2(1) = 1
//
// or by the parity split R2(2n) = 4 R2(n), R2(2n+1) = R2(n) + R2(n+1) and
// R1(2n+1) = 4 R1(n), R1(2n+2) = R1(n) + R1(n+1).

#include <cstdint>
#include <iosfwd>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "rca/errors.hpp"

namespace rca {

// R(n) grows like n^2, so indices past 2^32 overflow 64 bits.
__extension__ using Count = unsigned __int128;

std::string to_string(Count v);

enum class SeqId { R, R1, R2 };

std::string_view seq_name(SeqId s) noexcept;
std::optional<SeqId> parse_seq(std::string_view name) noexcept;

// Number of ones in the binary expansion of k.
int binary_weight(std::uint64_t k) noexcept;

enum class Dim { one, two };
// 2^weight(k) for rule 90, 4^weight(k) for the first-order C1/C2 patterns.
Count linear_count(Dim dim, std::uint64_t k) noexcept;

// Memoized evaluator. Queries are serialized by an internal mutex, so one
// instance can be shared between threads.
class SequenceEngine {
 public:
  // Throws IndexOutOfRangeError below the base domain (n < 0 for R and R2,
  // n < -1 for R1).
  Count value(SeqId which, std::int64_t n);
  // Parity-split recursion; R is routed through R(n) = R1(2n).
  Count value_alt(SeqId which, std::int64_t n);

  std::size_t cache_size() const;
  void clear();

 private:
  Count split(SeqId which, std::int64_t n);
  Count alt(SeqId which, std::int64_t n);

  mutable std::mutex mu_;
  std::unordered_map<std::int64_t, Count> memo_[3];
  std::unordered_map<std::int64_t, Count> alt_memo_[2];
};

// Process-wide engine used by the free functions.
SequenceEngine& default_sequence_engine();

Count seq_value(SeqId which, std::int64_t n);
Count seq_value_alt(SeqId which, std::int64_t n);

struct SequenceRow {
  std::int64_t n = 0;
  Count r = 0;
  Count r1 = 0;
  Count r2 = 0;

  friend bool operator==(const SequenceRow&, const SequenceRow&) = default;
};

struct SequenceTable {
  std::vector<SequenceRow> rows;
};

// Rows 0..n_max. Cross-checks R2(n+1) = R1(n), R(n) = R2(n) + R2(n+1) and
// R(n) = R1(2n) = R2(2n+1) while building; throws RelationViolationError if
// any fails.
SequenceTable build_table(std::int64_t n_max);

// Header "n,R,R1,R2".
void write_csv(std::ostream& os, const SequenceTable& t);
// Array of {"n","R","R1","R2"} objects.
void write_json(std::ostream& os, const SequenceTable& t);

}  // namespace rca
