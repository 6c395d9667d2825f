#pragma once

#include <array>
#include <optional>
#include <string_view>

namespace rca {

// First-order local rules. The second-order lifts R1, R2, R3, R3' are derived
// from these by the (f[c] + c', c) construction and share the same tag.
enum class RuleId { C1 = 0, C2 = 1, C3 = 2, C3p = 3 };

inline constexpr std::array<RuleId, 4> kAllRules{RuleId::C1, RuleId::C2, RuleId::C3,
                                                 RuleId::C3p};

constexpr bool is_linear(RuleId r) noexcept { return r == RuleId::C1 || r == RuleId::C2; }

constexpr std::string_view rule_name(RuleId r) noexcept {
  switch (r) {
    case RuleId::C1: return "C1";
    case RuleId::C2: return "C2";
    case RuleId::C3: return "C3";
    case RuleId::C3p: return "C3p";
  }
  return "?";
}

constexpr std::string_view lift_name(RuleId r) noexcept {
  switch (r) {
    case RuleId::C1: return "R1";
    case RuleId::C2: return "R2";
    case RuleId::C3: return "R3";
    case RuleId::C3p: return "R3p";
  }
  return "?";
}

// Accepts either the first-order name (C1, C3p, C3') or the lift name (R1, R3p, R3').
std::optional<RuleId> parse_rule(std::string_view name) noexcept;

}  // namespace rca
