#include "rca/sequences.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <ostream>

#include "json.hpp"

namespace rca {

std::string to_string(Count v) {
  if (v == 0) return "0";
  std::string s;
  while (v != 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

std::string_view seq_name(SeqId s) noexcept {
  switch (s) {
    case SeqId::R: return "R";
    case SeqId::R1: return "R1";
    case SeqId::R2: return "R2";
  }
  return "?";
}

std::optional<SeqId> parse_seq(std::string_view name) noexcept {
  if (name == "R") return SeqId::R;
  if (name == "R1") return SeqId::R1;
  if (name == "R2") return SeqId::R2;
  return std::nullopt;
}

int binary_weight(std::uint64_t k) noexcept { return std::popcount(k); }

Count linear_count(Dim dim, std::uint64_t k) noexcept {
  const int bits = binary_weight(k) * (dim == Dim::one ? 1 : 2);
  return Count{1} << bits;
}

namespace {

constexpr std::int64_t min_index(SeqId s) { return s == SeqId::R1 ? -1 : 0; }

void check_domain(SeqId which, std::int64_t n) {
  if (n < min_index(which))
    throw IndexOutOfRangeError(std::string(seq_name(which)) + "(" + std::to_string(n) +
                               ") is below the base domain");
}

}  // namespace

Count SequenceEngine::value(SeqId which, std::int64_t n) {
  check_domain(which, n);
  std::scoped_lock lock(mu_);
  return split(which, n);
}

Count SequenceEngine::value_alt(SeqId which, std::int64_t n) {
  if (n < 0) throw IndexOutOfRangeError("alternative recursion is defined for n >= 0");
  std::scoped_lock lock(mu_);
  if (which == SeqId::R) {
    if (n > std::numeric_limits<std::int64_t>::max() / 2)
      throw IndexOutOfRangeError("R(n) via R1(2n): index too large");
    return alt(SeqId::R1, 2 * n);
  }
  return alt(which, n);
}

Count SequenceEngine::split(SeqId which, std::int64_t n) {
  switch (which) {
    case SeqId::R:
      if (n == 0) return 1;
      break;
    case SeqId::R1:
      if (n == -1) return 0;
      if (n == 0) return 1;
      break;
    case SeqId::R2:
      if (n == 0) return 0;
      if (n == 1) return 1;
      break;
  }
  auto& memo = memo_[static_cast<int>(which)];
  if (auto it = memo.find(n); it != memo.end()) return it->second;

  const auto u = static_cast<std::uint64_t>(n);
  Count v = 0;
  if (which == SeqId::R2) {
    // n = 2^k + j with 0 < j <= 2^k; j = 0 would make the relation circular.
    const std::int64_t pow = std::int64_t{1} << (std::bit_width(u - 1) - 1);
    const std::int64_t j = n - pow;
    v = 4 * split(which, j) + split(which, pow - j);
  } else {
    const std::int64_t pow = std::int64_t{1} << (std::bit_width(u) - 1);
    const std::int64_t j = n - pow;
    const std::int64_t tail = which == SeqId::R ? pow - j - 1 : pow - j - 2;
    v = 4 * split(which, j) + split(which, tail);
  }
  memo.emplace(n, v);
  return v;
}

Count SequenceEngine::alt(SeqId which, std::int64_t n) {
  if (which == SeqId::R1) {
    if (n == 0) return 1;
  } else {
    if (n == 0) return 0;
    if (n == 1) return 1;
  }
  auto& memo = alt_memo_[which == SeqId::R1 ? 0 : 1];
  if (auto it = memo.find(n); it != memo.end()) return it->second;

  Count v = 0;
  if (which == SeqId::R1) {
    // R1(2m+1) = 4 R1(m), R1(2m+2) = R1(m) + R1(m+1)
    if (n & 1) {
      v = 4 * alt(which, (n - 1) / 2);
    } else {
      const std::int64_t m = (n - 2) / 2;
      v = alt(which, m) + alt(which, m + 1);
    }
  } else {
    // R2(2m) = 4 R2(m), R2(2m+1) = R2(m) + R2(m+1)
    if (n & 1) {
      const std::int64_t m = (n - 1) / 2;
      v = alt(which, m) + alt(which, m + 1);
    } else {
      v = 4 * alt(which, n / 2);
    }
  }
  memo.emplace(n, v);
  return v;
}

std::size_t SequenceEngine::cache_size() const {
  std::scoped_lock lock(mu_);
  std::size_t total = 0;
  for (const auto& m : memo_) total += m.size();
  for (const auto& m : alt_memo_) total += m.size();
  return total;
}

void SequenceEngine::clear() {
  std::scoped_lock lock(mu_);
  for (auto& m : memo_) m.clear();
  for (auto& m : alt_memo_) m.clear();
}

SequenceEngine& default_sequence_engine() {
  static SequenceEngine engine;
  return engine;
}

Count seq_value(SeqId which, std::int64_t n) { return default_sequence_engine().value(which, n); }

Count seq_value_alt(SeqId which, std::int64_t n) {
  return default_sequence_engine().value_alt(which, n);
}

SequenceTable build_table(std::int64_t n_max) {
  if (n_max < 0) throw IndexOutOfRangeError("build_table: n_max must be non-negative");
  SequenceEngine& e = default_sequence_engine();
  SequenceTable t;
  t.rows.reserve(static_cast<std::size_t>(n_max) + 1);
  auto fail = [](std::int64_t n, const char* what) {
    throw RelationViolationError(std::string(what) + " violated at n=" + std::to_string(n));
  };
  for (std::int64_t n = 0; n <= n_max; ++n) {
    SequenceRow row{n, e.value(SeqId::R, n), e.value(SeqId::R1, n), e.value(SeqId::R2, n)};
    if (e.value(SeqId::R2, n + 1) != row.r1) fail(n, "R2(n+1) = R1(n)");
    if (row.r2 + e.value(SeqId::R2, n + 1) != row.r) fail(n, "R(n) = R2(n) + R2(n+1)");
    if (e.value(SeqId::R1, 2 * n) != row.r || e.value(SeqId::R2, 2 * n + 1) != row.r)
      fail(n, "R(n) = R1(2n) = R2(2n+1)");
    t.rows.push_back(row);
  }
  return t;
}

void write_csv(std::ostream& os, const SequenceTable& t) {
  os << "n,R,R1,R2\n";
  for (const auto& row : t.rows)
    os << row.n << ',' << to_string(row.r) << ',' << to_string(row.r1) << ','
       << to_string(row.r2) << '\n';
}

namespace {

nlohmann::json count_json(Count v) {
  if (v <= std::numeric_limits<std::uint64_t>::max()) return static_cast<std::uint64_t>(v);
  return to_string(v);
}

}  // namespace

void write_json(std::ostream& os, const SequenceTable& t) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : t.rows)
    rows.push_back({{"n", row.n}, {"R", count_json(row.r)}, {"R1", count_json(row.r1)},
                    {"R2", count_json(row.r2)}});
  os << rows.dump(2) << '\n';
}

}  // namespace rca
