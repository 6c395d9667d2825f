#include <cstdlib>
#include <string_view>

#include "kernels_impl.hpp"

namespace rca {

std::optional<RuleId> parse_rule(std::string_view name) noexcept {
  if (name == "C1" || name == "R1") return RuleId::C1;
  if (name == "C2" || name == "R2") return RuleId::C2;
  if (name == "C3" || name == "R3") return RuleId::C3;
  if (name == "C3p" || name == "R3p" || name == "C3'" || name == "R3'") return RuleId::C3p;
  return std::nullopt;
}

namespace kernels {

const KernelSet& scalar() {
  static const KernelSet set{
      "scalar",
      {detail::c1_scalar, detail::c2_scalar, detail::c3_scalar, detail::c3p_scalar},
      detail::count_scalar};
  return set;
}

const KernelSet* avx2() {
#if defined(RCA_HAVE_AVX2)
  static const KernelSet set{
      "avx2",
      {detail::c1_avx2, detail::c2_avx2, detail::c3_avx2, detail::c3p_avx2},
      detail::count_avx2};
  static const bool supported = __builtin_cpu_supports("avx2");
  return supported ? &set : nullptr;
#else
  return nullptr;
#endif
}

const KernelSet& best() {
  // RCA_KERNELS=scalar pins the reference path, e.g. for profiling.
  static const KernelSet& chosen = [] () -> const KernelSet& {
    const char* pin = std::getenv("RCA_KERNELS");
    if (pin != nullptr && std::string_view(pin) == "scalar") return scalar();
    if (const KernelSet* wide = avx2()) return *wide;
    return scalar();
  }();
  return chosen;
}

}  // namespace kernels
}  // namespace rca
