#pragma once

#include "rca/kernels.hpp"

namespace rca::kernels::detail {

void c1_scalar(const Word* up, const Word* mid, const Word* down, Word* acc, std::size_t n);
void c2_scalar(const Word* up, const Word* mid, const Word* down, Word* acc, std::size_t n);
void c3_scalar(const Word* up, const Word* mid, const Word* down, Word* acc, std::size_t n);
void c3p_scalar(const Word* up, const Word* mid, const Word* down, Word* acc, std::size_t n);
PlaneCounts count_scalar(const Word* current, const Word* previous, std::size_t n);

#if defined(RCA_HAVE_AVX2)
void c1_avx2(const Word* up, const Word* mid, const Word* down, Word* acc, std::size_t n);
void c2_avx2(const Word* up, const Word* mid, const Word* down, Word* acc, std::size_t n);
void c3_avx2(const Word* up, const Word* mid, const Word* down, Word* acc, std::size_t n);
void c3p_avx2(const Word* up, const Word* mid, const Word* down, Word* acc, std::size_t n);
PlaneCounts count_avx2(const Word* current, const Word* previous, std::size_t n);
#endif

}  // namespace rca::kernels::detail
