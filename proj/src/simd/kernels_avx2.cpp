// AVX2 variants of the row kernels. Four words per iteration; the tail falls
// back to the scalar helpers so results match the reference bit for bit.

#include <immintrin.h>

#include "kernels_impl.hpp"

namespace rca::kernels::detail {

namespace {

using rowops::exactly_one;
using rowops::from_left;
using rowops::from_right;

inline __m256i load(const Word* p) {
  return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
}
inline void store(Word* p, __m256i v) {
  _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v);
}

inline __m256i left_v(const Word* r, std::size_t w) {
  return _mm256_or_si256(_mm256_slli_epi64(load(r + w), 1),
                         _mm256_srli_epi64(load(r + w - 1), 63));
}
inline __m256i right_v(const Word* r, std::size_t w) {
  return _mm256_or_si256(_mm256_srli_epi64(load(r + w), 1),
                         _mm256_slli_epi64(load(r + w + 1), 63));
}

inline __m256i exactly_one_v(__m256i a, __m256i b, __m256i c, __m256i d) {
  const __m256i odd = _mm256_xor_si256(_mm256_xor_si256(a, b), _mm256_xor_si256(c, d));
  const __m256i pair = _mm256_or_si256(_mm256_and_si256(a, b), _mm256_and_si256(c, d));
  return _mm256_andnot_si256(pair, odd);
}

// Nibble-table popcount, summed per 64-bit lane.
inline __m256i popcount_v(__m256i v) {
  const __m256i table = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                         0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low_mask = _mm256_set1_epi8(0x0f);
  const __m256i lo = _mm256_and_si256(v, low_mask);
  const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
  const __m256i bytes =
      _mm256_add_epi8(_mm256_shuffle_epi8(table, lo), _mm256_shuffle_epi8(table, hi));
  return _mm256_sad_epu8(bytes, _mm256_setzero_si256());
}

inline std::uint64_t hsum(__m256i v) {
  alignas(32) std::uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), v);
  return lanes[0] + lanes[1] + lanes[2] + lanes[3];
}

}  // namespace

void c1_avx2(const Word* up, const Word* mid, const Word* down, Word* acc, std::size_t n) {
  std::size_t w = 0;
  for (; w + 4 <= n; w += 4) {
    const __m256i f = _mm256_xor_si256(_mm256_xor_si256(left_v(up, w), right_v(up, w)),
                                       _mm256_xor_si256(left_v(down, w), right_v(down, w)));
    store(acc + w, _mm256_xor_si256(load(acc + w), f));
  }
  if (w < n) c1_scalar(up + w, mid + w, down + w, acc + w, n - w);
}

void c2_avx2(const Word* up, const Word* mid, const Word* down, Word* acc, std::size_t n) {
  std::size_t w = 0;
  for (; w + 4 <= n; w += 4) {
    const __m256i f = _mm256_xor_si256(_mm256_xor_si256(load(up + w), load(down + w)),
                                       _mm256_xor_si256(left_v(mid, w), right_v(mid, w)));
    store(acc + w, _mm256_xor_si256(load(acc + w), f));
  }
  if (w < n) c2_scalar(up + w, mid + w, down + w, acc + w, n - w);
}

void c3_avx2(const Word* up, const Word* mid, const Word* down, Word* acc, std::size_t n) {
  std::size_t w = 0;
  for (; w + 4 <= n; w += 4) {
    const __m256i f =
        exactly_one_v(load(up + w), load(down + w), left_v(mid, w), right_v(mid, w));
    store(acc + w, _mm256_xor_si256(load(acc + w), f));
  }
  if (w < n) c3_scalar(up + w, mid + w, down + w, acc + w, n - w);
}

void c3p_avx2(const Word* up, const Word* mid, const Word* down, Word* acc, std::size_t n) {
  std::size_t w = 0;
  for (; w + 4 <= n; w += 4) {
    const __m256i diag = _mm256_or_si256(_mm256_or_si256(left_v(up, w), right_v(up, w)),
                                         _mm256_or_si256(left_v(down, w), right_v(down, w)));
    const __m256i f = _mm256_andnot_si256(
        diag, exactly_one_v(load(up + w), load(down + w), left_v(mid, w), right_v(mid, w)));
    store(acc + w, _mm256_xor_si256(load(acc + w), f));
  }
  if (w < n) c3p_scalar(up + w, mid + w, down + w, acc + w, n - w);
}

PlaneCounts count_avx2(const Word* current, const Word* previous, std::size_t n) {
  __m256i ones = _mm256_setzero_si256();
  __m256i twos = _mm256_setzero_si256();
  __m256i threes = _mm256_setzero_si256();
  std::size_t w = 0;
  for (; w + 4 <= n; w += 4) {
    const __m256i c = load(current + w);
    const __m256i p = load(previous + w);
    ones = _mm256_add_epi64(ones, popcount_v(_mm256_andnot_si256(p, c)));
    twos = _mm256_add_epi64(twos, popcount_v(_mm256_andnot_si256(c, p)));
    threes = _mm256_add_epi64(threes, popcount_v(_mm256_and_si256(c, p)));
  }
  PlaneCounts pc{hsum(ones), hsum(twos), hsum(threes)};
  if (w < n) pc += count_scalar(current + w, previous + w, n - w);
  return pc;
}

}  // namespace rca::kernels::detail
