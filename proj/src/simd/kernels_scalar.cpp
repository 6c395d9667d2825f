#include "kernels_impl.hpp"

namespace rca::kernels::detail {

using rowops::exactly_one;
using rowops::from_left;
using rowops::from_right;

void c1_scalar(const Word* up, const Word* /*mid*/, const Word* down, Word* acc,
               std::size_t nwords) {
  for (std::size_t w = 0; w < nwords; ++w)
    acc[w] ^= from_left(up, w) ^ from_right(up, w) ^ from_left(down, w) ^ from_right(down, w);
}

void c2_scalar(const Word* up, const Word* mid, const Word* down, Word* acc,
               std::size_t nwords) {
  for (std::size_t w = 0; w < nwords; ++w)
    acc[w] ^= up[w] ^ down[w] ^ from_left(mid, w) ^ from_right(mid, w);
}

void c3_scalar(const Word* up, const Word* mid, const Word* down, Word* acc,
               std::size_t nwords) {
  for (std::size_t w = 0; w < nwords; ++w)
    acc[w] ^= exactly_one(up[w], down[w], from_left(mid, w), from_right(mid, w));
}

void c3p_scalar(const Word* up, const Word* mid, const Word* down, Word* acc,
                std::size_t nwords) {
  for (std::size_t w = 0; w < nwords; ++w) {
    const Word diag =
        from_left(up, w) | from_right(up, w) | from_left(down, w) | from_right(down, w);
    acc[w] ^= exactly_one(up[w], down[w], from_left(mid, w), from_right(mid, w)) & ~diag;
  }
}

PlaneCounts count_scalar(const Word* current, const Word* previous, std::size_t nwords) {
  PlaneCounts pc;
  for (std::size_t w = 0; w < nwords; ++w) {
    const Word c = current[w], p = previous[w];
    pc.only_current += std::popcount(c & ~p);
    pc.only_previous += std::popcount(p & ~c);
    pc.both += std::popcount(c & p);
  }
  return pc;
}

}  // namespace rca::kernels::detail
