#pragma once

// Row kernels for bit-packed lattice stepping.
//
// A row is a run of 64-bit words; bit b of word w holds column base + 64*w + b.
// Every kernel accumulates into `acc`:
//
//   acc[w] ^= f(up, mid, down)[w]     for w in [0, nwords)
//
// where up/mid/down are the rows at j-1, j, j+1. Kernels read words w-1 and
// w+1 of each input row, so callers must provide one readable (zero) word on
// each side of the processed range.
//
// Every rule has a scalar reference kernel and, where the CPU supports it, an
// AVX2 variant. The two are bit-for-bit equivalent; tests/test_kernels.cpp
// checks that on random rows.

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <string_view>

#include "rca/rule_id.hpp"

namespace rca {

using Word = std::uint64_t;

using RowKernel = void (*)(const Word* up, const Word* mid, const Word* down, Word* acc,
                           std::size_t nwords);

struct PlaneCounts {
  std::uint64_t only_current = 0;   // value 1
  std::uint64_t only_previous = 0;  // value 2
  std::uint64_t both = 0;           // value 3

  PlaneCounts& operator+=(const PlaneCounts& o) noexcept {
    only_current += o.only_current;
    only_previous += o.only_previous;
    both += o.both;
    return *this;
  }
};

using CountKernel = PlaneCounts (*)(const Word* current, const Word* previous,
                                    std::size_t nwords);

struct KernelSet {
  std::string_view name;
  std::array<RowKernel, 4> first_order{};  // indexed by RuleId
  CountKernel count = nullptr;

  RowKernel operator[](RuleId r) const noexcept { return first_order[static_cast<int>(r)]; }
};

namespace kernels {

const KernelSet& scalar();
// nullptr when the build or the running CPU lacks AVX2.
const KernelSet* avx2();
// Widest supported variant; chosen once per process.
const KernelSet& best();

}  // namespace kernels

// Scalar row helpers shared by kernels and verification code.
namespace rowops {

// Value of column x-1 moved to x.
inline Word from_left(const Word* r, std::size_t w) noexcept {
  return (r[w] << 1) | (r[w - 1] >> 63);
}
// Value of column x+1 moved to x.
inline Word from_right(const Word* r, std::size_t w) noexcept {
  return (r[w] >> 1) | (r[w + 1] << 63);
}

inline Word exactly_one(Word a, Word b, Word c, Word d) noexcept {
  return (a ^ b ^ c ^ d) & ~((a & b) | (c & d));
}

inline Word exactly_three(Word a, Word b, Word c, Word d) noexcept {
  const Word s1 = a ^ b, c1 = a & b, s2 = c ^ d, c2 = c & d;
  return (c1 & s2) | (c2 & s1);
}

}  // namespace rowops

}  // namespace rca
