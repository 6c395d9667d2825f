#pragma once

// First-order rules C1, C2, C3, C3' and their reversible second-order lifts.
//
//   C1   c -> Σ× c mod 2
//   C2   c -> Σ+ c mod 2
//   C3   c -> [Σ+ c = 1]
//   C3'  c -> [Σ+ c = 1 and Σ× c = 0]
//
// Lift:    (c, c') -> (f[c] + c', c)
// Inverse: (c, c') -> (c', f[c'] + c)

#include <cstdint>
#include <vector>

#include "rca/bit_plane.hpp"
#include "rca/grid.hpp"
#include "rca/kernels.hpp"
#include "rca/rule_id.hpp"

namespace rca {

BinaryGrid first_order_step(RuleId rule, const BinaryGrid& g,
                            const KernelSet& ks = kernels::best());
BinaryGrid first_order_evolve(RuleId rule, const BinaryGrid& g, int steps,
                              const KernelSet& ks = kernels::best());

SecondOrderState second_order_step(RuleId rule, const SecondOrderState& s,
                                   const KernelSet& ks = kernels::best());
SecondOrderState second_order_inverse(RuleId rule, const SecondOrderState& s,
                                      const KernelSet& ks = kernels::best());

// |n| forward steps for n >= 0, |n| inverse steps otherwise.
SecondOrderState evolve(RuleId rule, const SecondOrderState& s, std::int64_t n,
                        const KernelSet& ks = kernels::best());

// A second-order trajectory stepped in place on a dense window.
class Trajectory {
 public:
  Trajectory(RuleId rule, const SecondOrderState& start, int reserve_steps = 0,
             const KernelSet& ks = kernels::best());
  explicit Trajectory(RuleId rule, int reserve_steps = 0,
                      const KernelSet& ks = kernels::best())
      : Trajectory(rule, single_seed(), reserve_steps, ks) {}

  RuleId rule() const noexcept { return rule_; }
  std::int64_t index() const noexcept { return index_; }

  void advance();
  void retreat();
  void advance_to(std::int64_t n);

  CountRecord counts() const;
  SecondOrderState state() const { return dense_.to_state(); }
  const DenseState& dense() const noexcept { return dense_; }

 private:
  RuleId rule_;
  const KernelSet* ks_;
  DenseState dense_;
  std::int64_t index_ = 0;
};

// Counts for n = 0..n_max from the single seed; only the running state is kept.
std::vector<CountRecord> trajectory_counts(RuleId rule, std::int64_t n_max,
                                           const KernelSet& ks = kernels::best());

}  // namespace rca
