#include "rca/rules.hpp"

#include <cstdlib>
#include <stdexcept>

namespace rca {

namespace {

int reserve_for(std::int64_t n) {
  const auto m = std::llabs(n);
  return m > (1 << 20) ? (1 << 20) : static_cast<int>(m);
}

}  // namespace

BinaryGrid first_order_step(RuleId rule, const BinaryGrid& g, const KernelSet& ks) {
  return first_order_evolve(rule, g, 1, ks);
}

BinaryGrid first_order_evolve(RuleId rule, const BinaryGrid& g, int steps,
                              const KernelSet& ks) {
  if (steps < 0) throw std::invalid_argument("first-order rules are not invertible");
  DenseGrid dense(g, steps);
  for (int k = 0; k < steps; ++k) dense.step(rule, ks);
  return dense.to_grid();
}

SecondOrderState second_order_step(RuleId rule, const SecondOrderState& s,
                                   const KernelSet& ks) {
  DenseState d(s, 1);
  d.step(rule, ks);
  return d.to_state();
}

SecondOrderState second_order_inverse(RuleId rule, const SecondOrderState& s,
                                      const KernelSet& ks) {
  DenseState d(s, 1);
  d.step_back(rule, ks);
  return d.to_state();
}

SecondOrderState evolve(RuleId rule, const SecondOrderState& s, std::int64_t n,
                        const KernelSet& ks) {
  DenseState d(s, reserve_for(n));
  if (n >= 0) {
    for (std::int64_t k = 0; k < n; ++k) d.step(rule, ks);
  } else {
    for (std::int64_t k = 0; k < -n; ++k) d.step_back(rule, ks);
  }
  return d.to_state();
}

Trajectory::Trajectory(RuleId rule, const SecondOrderState& start, int reserve_steps,
                       const KernelSet& ks)
    : rule_(rule), ks_(&ks), dense_(start, reserve_steps) {}

void Trajectory::advance() {
  dense_.step(rule_, *ks_);
  ++index_;
}

void Trajectory::retreat() {
  dense_.step_back(rule_, *ks_);
  --index_;
}

void Trajectory::advance_to(std::int64_t n) {
  while (index_ < n) advance();
  while (index_ > n) retreat();
}

CountRecord Trajectory::counts() const {
  const PlaneCounts pc = dense_.counts(*ks_);
  CountRecord r;
  r.n = index_;
  r.r1 = pc.only_current;
  r.r2 = pc.only_previous;
  r.r3 = pc.both;
  r.total = r.r1 + r.r2 + r.r3;
  return r;
}

std::vector<CountRecord> trajectory_counts(RuleId rule, std::int64_t n_max,
                                           const KernelSet& ks) {
  if (n_max < 0) throw std::invalid_argument("n_max must be non-negative");
  std::vector<CountRecord> out;
  out.reserve(static_cast<std::size_t>(n_max) + 1);
  Trajectory t(rule, reserve_for(n_max), ks);
  out.push_back(t.counts());
  for (std::int64_t n = 1; n <= n_max; ++n) {
    t.advance();
    out.push_back(t.counts());
  }
  return out;
}

}  // namespace rca
