#include "rca/verify.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "rca/bit_plane.hpp"
#include "rca/rules.hpp"
#include "rca/sequences.hpp"

namespace rca {

namespace {

std::string n_range(std::int64_t lo, std::int64_t hi) {
  return "n=" + std::to_string(lo) + ".." + std::to_string(hi);
}

std::string k_range(int lo, int hi) {
  return "k=" + std::to_string(lo) + ".." + std::to_string(hi);
}

SuiteReport pass(std::string name, std::string range) {
  return {std::move(name), std::move(range), true, std::nullopt};
}

SuiteReport fail(std::string name, std::string range, std::string witness) {
  return {std::move(name), std::move(range), false, std::move(witness)};
}

std::string counts_text(std::uint64_t r1, std::uint64_t r2, std::uint64_t r3,
                        std::uint64_t total) {
  std::ostringstream os;
  os << "(R1=" << r1 << " R2=" << r2 << " R3=" << r3 << " R=" << total << ')';
  return os.str();
}

std::string state_diff(const SecondOrderState& expected, const SecondOrderState& actual) {
  std::ostringstream os;
  if (expected.current != actual.current)
    os << "current " << describe_diff(expected.current, actual.current);
  if (expected.previous != actual.previous) {
    if (os.tellp() > 0) os << "; ";
    os << "previous " << describe_diff(expected.previous, actual.previous);
  }
  return os.str();
}

std::string at(RuleId rule, std::int64_t n) {
  return "rule=" + std::string(lift_name(rule)) + " n=" + std::to_string(n);
}

int reserve_for(std::int64_t n) { return static_cast<int>(std::min<std::int64_t>(n, 1 << 20)); }

BinaryGrid value_one_cells(const SecondOrderState& s) { return grid_minus(s.current, s.previous); }

// Intersection of region with the frame, in cell coordinates.
Box clip(const Box& region, const Box& frame) {
  return {std::max(region.imin, frame.imin), std::min(region.imax, frame.imax),
          std::max(region.jmin, frame.jmin), std::min(region.jmax, frame.jmax)};
}

// First cell whose orthogonal neighborhood in `c` holds exactly three cells,
// or exactly one cell together with an occupied diagonal neighbor. Those are
// the only neighborhoods on which C2, C3 and C3' disagree.
std::optional<std::string> neighborhood_violation(const BitPlane& c, const Box& active) {
  const Box region = clip(active.grown(1), c.frame());
  if (region.empty()) return std::nullopt;
  const std::size_t w0 = c.word_of(region.imin);
  const std::size_t w1 = c.word_of(region.imax);
  for (int j = region.jmin; j <= region.jmax; ++j) {
    const Word* up = c.row(j - 1);
    const Word* mid = c.row(j);
    const Word* down = c.row(j + 1);
    for (std::size_t w = w0; w <= w1; ++w) {
      const Word a = up[w], b = down[w];
      const Word l = rowops::from_left(mid, w), r = rowops::from_right(mid, w);
      const Word diag = rowops::from_left(up, w) | rowops::from_right(up, w) |
                        rowops::from_left(down, w) | rowops::from_right(down, w);
      const Word three = rowops::exactly_three(a, b, l, r);
      const Word corner = rowops::exactly_one(a, b, l, r) & diag;
      if (three | corner) {
        const Word bad = three ? three : corner;
        const int i = c.frame().imin + static_cast<int>(w * 64) + std::countr_zero(bad);
        std::ostringstream os;
        os << "cell (" << i << ',' << j << ") has "
           << (three ? "three orthogonal neighbors" : "one orthogonal and a diagonal neighbor");
        return os.str();
      }
    }
  }
  return std::nullopt;
}

// Cells of g whose coordinates are not both congruent to `residue` mod 2.
std::optional<Cell> off_coset(const BinaryGrid& g, int residue) {
  for (const Cell& c : g)
    if (((c.i & 1) != residue) || ((c.j & 1) != residue)) return c;
  return std::nullopt;
}

std::optional<Cell> off_parity(const BinaryGrid& g, Parity p) {
  for (const Cell& c : g)
    if (parity_of(c) != p) return c;
  return std::nullopt;
}

std::string cell_text(Cell c) {
  return "(" + std::to_string(c.i) + "," + std::to_string(c.j) + ")";
}

Box square(int radius) { return {-radius, radius, -radius, radius}; }

}  // namespace

// ---------------------------------------------------------------------------

std::vector<Cell> replication_offsets(RuleId rule, int k) {
  const int s = 1 << k;
  switch (rule) {
    case RuleId::C1: return {{-s, -s}, {s, -s}, {-s, s}, {s, s}};
    case RuleId::C2: return {{-s, 0}, {s, 0}, {0, -s}, {0, s}};
    default: break;
  }
  throw NonlinearRuleError("replication holds only for the linear rules");
}

FivePattern five_pattern(RuleId rule, int k, std::int64_t j) {
  const std::int64_t span = std::int64_t{1} << k;
  if (j < 0 || j > span) throw IndexOutOfRangeError("five_pattern: need 0 <= j <= 2^k");
  const LaurentPoly2 t = transition_poly(rule);
  FivePattern fp;
  const LaurentPoly2 fj = fib_poly_eval(t, static_cast<std::uint64_t>(j));
  for (const Cell& off : replication_offsets(rule, k))
    fp.copies.push_back(poly_shift(fj, off.i, off.j));
  fp.central = fib_poly_eval(t, static_cast<std::uint64_t>(span - j));
  fp.whole = fib_poly_eval(t, static_cast<std::uint64_t>(span + j));
  LaurentPoly2 sum = fp.central;
  std::size_t parts = fp.central.size();
  for (const auto& c : fp.copies) {
    sum = poly_add(sum, c);
    parts += c.size();
  }
  fp.sums_to_whole = sum == fp.whole;
  // Any overlap cancels or merges terms, so disjointness is |sum| == Σ|part|.
  fp.disjoint = sum.size() == parts;
  return fp;
}

// ---------------------------------------------------------------------------

SuiteReport suite_counts(std::int64_t n_max, const KernelSet& ks) {
  const std::string name = "counts", range = n_range(0, n_max);
  for (RuleId rule : kAllRules) {
    Trajectory t(rule, reserve_for(n_max), ks);
    for (std::int64_t n = 0; n <= n_max; ++n) {
      if (n > 0) t.advance();
      const CountRecord got = t.counts();
      const auto r1 = static_cast<std::uint64_t>(seq_value(SeqId::R1, n));
      const auto r2 = static_cast<std::uint64_t>(seq_value(SeqId::R2, n));
      const auto r = static_cast<std::uint64_t>(seq_value(SeqId::R, n));
      if (got.r1 != r1 || got.r2 != r2 || got.r3 != 0 || got.total != r)
        return fail(name, range,
                    at(rule, n) + " expected " + counts_text(r1, r2, 0, r) + " got " +
                        counts_text(got.r1, got.r2, got.r3, got.total));
    }
  }
  return pass(name, range);
}

SuiteReport suite_equivalence(std::int64_t n_max, const KernelSet& ks) {
  const std::string name = "equivalence", range = n_range(0, n_max);
  const int reserve = reserve_for(n_max + 2);
  Trajectory r2(RuleId::C2, reserve, ks);
  Trajectory r3(RuleId::C3, reserve, ks);
  Trajectory r3p(RuleId::C3p, reserve, ks);
  for (std::int64_t n = 0; n <= n_max; ++n) {
    if (n > 0) {
      r2.advance();
      r3.advance();
      r3p.advance();
    }
    for (const Trajectory* other : {&r3, &r3p}) {
      if (!r2.dense().same_content(other->dense()))
        return fail(name, range,
                    at(other->rule(), n) + " differs from R2: " +
                        state_diff(r2.state(), other->state()));
    }
    if (auto bad = neighborhood_violation(r2.dense().current(), r2.dense().active()))
      return fail(name, range, at(RuleId::C2, n) + " " + *bad);
  }
  return pass(name, range);
}

SuiteReport suite_replication(int k_max, const KernelSet& ks) {
  const std::string name = "replication", range = k_range(0, k_max);
  for (RuleId rule : {RuleId::C1, RuleId::C2}) {
    for (int k = 0; k <= k_max; ++k) {
      const int period = 1 << k;
      const auto offsets = replication_offsets(rule, k);
      DenseGrid pattern(BinaryGrid{{0, 0}}, period);
      for (int m = 0; m < period; ++m) {
        if (m > 0) pattern.step(rule, ks);
        const BinaryGrid g = pattern.to_grid();
        const BinaryGrid evolved = first_order_evolve(rule, g, period, ks);
        BinaryGrid expected;
        std::size_t parts = 0;
        for (const Cell& off : offsets) {
          expected = grid_xor(expected, shift(g, off.i, off.j));
          parts += g.size();
        }
        const std::string where = "rule=" + std::string(rule_name(rule)) +
                                  " k=" + std::to_string(k) + " pattern=step " +
                                  std::to_string(m);
        if (evolved != expected)
          return fail(name, range, where + ": " + describe_diff(expected, evolved));
        if (expected.size() != parts)
          return fail(name, range, where + ": the four copies overlap");
      }
    }
  }
  return pass(name, range);
}

SuiteReport suite_reversibility(std::int64_t n_max, const KernelSet& ks) {
  const std::string name = "reversibility", range = n_range(0, n_max);
  const SecondOrderState seed = single_seed();
  for (RuleId rule : kAllRules) {
    Trajectory t(rule, reserve_for(n_max + 1), ks);
    for (std::int64_t n = 0; n <= n_max; ++n) {
      if (n > 0) t.advance();

      DenseState back = t.dense();
      for (std::int64_t s = 0; s < n; ++s) {
        back.step_back(rule, ks);
        if ((s & 7) == 7) back.tighten();
      }
      const SecondOrderState returned = back.to_state();
      if (returned != seed)
        return fail(name, range,
                    at(rule, n) + " round trip does not return the seed: " +
                        state_diff(seed, returned));

      // F^-1 = X F X
      DenseState inverse = t.dense();
      inverse.step_back(rule, ks);
      DenseState conj = t.dense();
      conj.swap_x();
      conj.step(rule, ks);
      conj.swap_x();
      if (!inverse.same_content(conj))
        return fail(name, range,
                    at(rule, n) + " X F X differs from the inverse: " +
                        state_diff(inverse.to_state(), conj.to_state()));
    }
  }
  return pass(name, range);
}

SuiteReport suite_polynomial(std::int64_t n_max, const KernelSet& ks) {
  const std::string name = "polynomial", range = n_range(0, n_max);
  for (RuleId rule : {RuleId::C1, RuleId::C2}) {
    const LaurentPoly2 t = transition_poly(rule);
    Trajectory traj(rule, reserve_for(n_max), ks);
    for (std::int64_t n = 0; n <= n_max; ++n) {
      if (n > 0) traj.advance();
      const SecondOrderState simulated = traj.state();
      const PolyPair p = state_poly_at(rule, static_cast<std::uint64_t>(n));
      const SecondOrderState algebraic = polys_to_state(p);
      if (algebraic != simulated)
        return fail(name, range,
                    at(rule, n) + " (f_{n+1}(T), f_n(T)) differs from simulation: " +
                        state_diff(algebraic, simulated));
      if (n == 0) continue;

      const int k = std::bit_width(static_cast<std::uint64_t>(n)) - 1;
      const std::int64_t span = std::int64_t{1} << k;
      const std::int64_t j = n - span;

      const FivePattern fp = five_pattern(rule, k, j);
      if (!fp.sums_to_whole || !fp.disjoint || fp.whole != p.second)
        return fail(name, range,
                    at(rule, n) + " five-pattern split of f_n fails (" +
                        (fp.disjoint ? "sum" : "overlap") + ")");
      const Count predicted =
          4 * seq_value(SeqId::R2, j) + seq_value(SeqId::R2, span - j);
      if (Count{p.second.size()} != predicted)
        return fail(name, range,
                    at(rule, n) + " |f_n| = " + std::to_string(p.second.size()) +
                        " but 4 R2(j) + R2(2^k - j) = " + to_string(predicted));

      // P[C_{2^k+j}] = T^{2^k} P[C_j] + P[X C_{2^k-j-1}]
      const LaurentPoly2 lift = poly_pow_2k(t, k);
      const PolyPair pj = state_poly_at(rule, static_cast<std::uint64_t>(j));
      const PolyPair inner = state_poly_at(rule, static_cast<std::uint64_t>(span - j - 1));
      const PolyPair composed{poly_add(poly_mul(lift, pj.first), inner.second),
                              poly_add(poly_mul(lift, pj.second), inner.first)};
      if (composed != p)
        return fail(name, range,
                    at(rule, n) + " pair composition differs: " +
                        state_diff(polys_to_state(composed), algebraic));
    }
  }
  return pass(name, range);
}

SuiteReport suite_coloring(std::int64_t n_max, const KernelSet& ks) {
  const std::string name = "coloring", range = n_range(0, n_max);
  Trajectory r2(RuleId::C2, reserve_for(n_max), ks);
  Trajectory r1(RuleId::C1, reserve_for(n_max), ks);
  for (std::int64_t n = 0; n <= n_max; ++n) {
    if (n > 0) {
      r2.advance();
      r1.advance();
    }
    const int now = static_cast<int>(n & 1);
    const int before = 1 - now;

    const SecondOrderState s2 = r2.state();
    if (const BinaryGrid both = grid_and(s2.current, s2.previous); !both.empty())
      return fail(name, range,
                  at(RuleId::C2, n) + " value-3 cell at " + cell_text(*both.begin()));
    if (auto c = off_parity(s2.current, static_cast<Parity>(now)))
      return fail(name, range, at(RuleId::C2, n) + " value-1 cell off its color " + cell_text(*c));
    if (auto c = off_parity(s2.previous, static_cast<Parity>(before)))
      return fail(name, range, at(RuleId::C2, n) + " value-2 cell off its color " + cell_text(*c));

    // On R1 both components sit on the even sublattice, split further into
    // the (even, even) and (odd, odd) cosets.
    const SecondOrderState s1 = r1.state();
    if (const BinaryGrid both = grid_and(s1.current, s1.previous); !both.empty())
      return fail(name, range,
                  at(RuleId::C1, n) + " value-3 cell at " + cell_text(*both.begin()));
    if (auto c = off_coset(s1.current, now))
      return fail(name, range, at(RuleId::C1, n) + " value-1 cell off its coset " + cell_text(*c));
    if (auto c = off_coset(s1.previous, before))
      return fail(name, range, at(RuleId::C1, n) + " value-2 cell off its coset " + cell_text(*c));
  }
  return pass(name, range);
}

SuiteReport suite_sublattice(std::int64_t n_max, const KernelSet& ks) {
  const std::string name = "sublattice", range = n_range(0, n_max);
  Trajectory r1(RuleId::C1, reserve_for(n_max), ks);
  Trajectory r2(RuleId::C2, reserve_for(n_max), ks);
  for (std::int64_t n = 0; n <= n_max; ++n) {
    if (n > 0) {
      r1.advance();
      r2.advance();
    }
    const SecondOrderState s1 = r1.state();
    SecondOrderState extracted;
    try {
      extracted = {diagonal_extract(s1.current, Parity::even),
                   diagonal_extract(s1.previous, Parity::even)};
    } catch (const MixedParityError& e) {
      return fail(name, range, at(RuleId::C1, n) + " " + e.what());
    }
    const SecondOrderState s2 = r2.state();
    if (extracted != s2)
      return fail(name, range,
                  "n=" + std::to_string(n) + " R1 on the even sublattice differs from R2: " +
                      state_diff(s2, extracted));
  }
  return pass(name, range);
}

SuiteReport suite_diamond(int k_max, const KernelSet& ks) {
  const std::string name = "diamond", range = k_range(0, k_max);
  const std::int64_t last = (std::int64_t{1} << k_max) - 1;
  Trajectory r1(RuleId::C1, reserve_for(last), ks);
  Trajectory r2(RuleId::C2, reserve_for(last), ks);
  for (int k = 0; k <= k_max; ++k) {
    const std::int64_t n = (std::int64_t{1} << k) - 1;
    r1.advance_to(n);
    r2.advance_to(n);
    const int m = static_cast<int>(n);
    const int residue = m & 1;

    // R1: every cell of the (n mod 2, n mod 2) coset in [-n, n]^2.
    std::vector<Cell> square_cells;
    for (int i = -m; i <= m; ++i)
      for (int j = -m; j <= m; ++j)
        if ((i & 1) == residue && (j & 1) == residue) square_cells.push_back({i, j});
    const BinaryGrid predicted1(std::move(square_cells));
    // R2: every cell with |i| + |j| <= n and i + j = n mod 2.
    std::vector<Cell> diamond_cells;
    for (int i = -m; i <= m; ++i)
      for (int j = -m; j <= m; ++j)
        if (std::abs(i) + std::abs(j) <= m && ((i + j) & 1) == residue)
          diamond_cells.push_back({i, j});
    const BinaryGrid predicted2(std::move(diamond_cells));

    const BinaryGrid ones1 = value_one_cells(r1.state());
    const BinaryGrid ones2 = value_one_cells(r2.state());
    const std::uint64_t four_k = std::uint64_t{1} << (2 * k);
    const std::string where = "k=" + std::to_string(k) + " n=" + std::to_string(n);
    if (ones1.size() != four_k || Count{ones1.size()} != seq_value(SeqId::R1, n))
      return fail(name, range,
                  where + " R1 has " + std::to_string(ones1.size()) + " value-1 cells, expected " +
                      std::to_string(four_k));
    if (ones1 != predicted1)
      return fail(name, range, where + " R1 shape: " + describe_diff(predicted1, ones1));
    if (ones2 != predicted2)
      return fail(name, range, where + " R2 shape: " + describe_diff(predicted2, ones2));
  }
  return pass(name, range);
}

SuiteReport suite_backward_growth(int k_max, const KernelSet& ks) {
  const std::string name = "backward_growth", range = k_range(1, k_max);
  if (k_max < 1) return pass(name, range);
  const std::int64_t horizon = std::int64_t{1} << (k_max + 1);
  for (RuleId rule : {RuleId::C1, RuleId::C2}) {
    std::vector<SecondOrderState> states;
    states.reserve(static_cast<std::size_t>(horizon) + 1);
    Trajectory t(rule, reserve_for(horizon), ks);
    states.push_back(t.state());
    for (std::int64_t n = 1; n <= horizon; ++n) {
      t.advance();
      states.push_back(t.state());
    }

    for (int k = 1; k <= k_max; ++k) {
      const std::int64_t span = std::int64_t{1} << k;
      for (std::int64_t j = 0; j < span; ++j) {
        const std::int64_t n = span + j;
        const std::int64_t inner = span - j - 1;
        const SecondOrderState& cn = states[static_cast<std::size_t>(n)];
        const std::string where = at(rule, n) + " (k=" + std::to_string(k) +
                                  " j=" + std::to_string(j) + ")";

        // Central region is X C_{2^k - j - 1}.
        const Box centre = square(static_cast<int>(inner));
        const SecondOrderState central{restrict_to(cn.current, centre),
                                       restrict_to(cn.previous, centre)};
        const SecondOrderState expected_central = swap_x(states[static_cast<std::size_t>(inner)]);
        if (central != expected_central)
          return fail(name, range,
                      where + " central region is not X C_" + std::to_string(inner) + ": " +
                          state_diff(expected_central, central));

        // The rest is four disjoint copies of C_j.
        const SecondOrderState& cj = states[static_cast<std::size_t>(j)];
        SecondOrderState outer;
        std::size_t parts = 0;
        for (const Cell& off : replication_offsets(rule, k)) {
          const SecondOrderState moved = shift(cj, off.i, off.j);
          outer.current = grid_xor(outer.current, moved.current);
          outer.previous = grid_xor(outer.previous, moved.previous);
          parts += cj.current.size() + cj.previous.size();
        }
        const SecondOrderState rest{grid_minus(cn.current, central.current),
                                    grid_minus(cn.previous, central.previous)};
        if (outer.current.size() + outer.previous.size() != parts)
          return fail(name, range, where + " the four copies of C_j overlap");
        if (rest != outer)
          return fail(name, range,
                      where + " outer region is not four copies of C_" + std::to_string(j) +
                          ": " + state_diff(outer, rest));

        // F: X C_i -> X C_{i-1}
        if (inner > 0) {
          const SecondOrderState stepped =
              second_order_step(rule, expected_central, ks);
          const SecondOrderState target = swap_x(states[static_cast<std::size_t>(inner - 1)]);
          if (stepped != target)
            return fail(name, range,
                        where + " F(X C_" + std::to_string(inner) + ") != X C_" +
                            std::to_string(inner - 1) + ": " + state_diff(target, stepped));
        }
      }

      // After j = 2^k - 1 the outer copies merge into X C_{2^{k+1}-1} and
      // four fresh seeds appear.
      const std::int64_t next = 2 * span;
      const SecondOrderState& merged = states[static_cast<std::size_t>(next)];
      const Box centre = square(static_cast<int>(next - 1));
      const SecondOrderState central{restrict_to(merged.current, centre),
                                     restrict_to(merged.previous, centre)};
      std::vector<Cell> seeds;
      for (const Cell& off : replication_offsets(rule, k + 1)) seeds.push_back(off);
      const SecondOrderState expected_rest{BinaryGrid(std::move(seeds)), BinaryGrid{}};
      const SecondOrderState rest{grid_minus(merged.current, central.current),
                                  grid_minus(merged.previous, central.previous)};
      const std::string where = at(rule, next);
      if (central != swap_x(states[static_cast<std::size_t>(next - 1)]))
        return fail(name, range, where + " central region is not X C_" + std::to_string(next - 1));
      if (rest != expected_rest)
        return fail(name, range,
                    where + " expected four seeds outside the centre: " +
                        state_diff(expected_rest, rest));
    }
  }
  return pass(name, range);
}

// ---------------------------------------------------------------------------

const std::vector<SuiteInfo>& suite_catalog() {
  static const std::vector<SuiteInfo> catalog{
      {"counts", false, 512},      {"equivalence", false, 256}, {"replication", true, 6},
      {"reversibility", false, 256}, {"polynomial", false, 128},  {"coloring", false, 256},
      {"sublattice", false, 256},  {"diamond", true, 8},        {"backward_growth", true, 6},
  };
  return catalog;
}

const SuiteInfo* find_suite(std::string_view name) {
  for (const auto& info : suite_catalog())
    if (info.name == name) return &info;
  return nullptr;
}

std::int64_t default_max_for(const SuiteInfo& info) {
  if (!info.indexed_by_k) {
    if (const char* env = std::getenv("CA_DEFAULT_MAX")) {
      char* end = nullptr;
      const long long v = std::strtoll(env, &end, 10);
      if (end != env && *end == '\0' && v >= 0) return v;
    }
  }
  return info.default_max;
}

SuiteReport run_suite(const SuiteInfo& info, std::int64_t max, const KernelSet& ks) {
  const std::string_view n = info.name;
  const int k = static_cast<int>(std::min<std::int64_t>(max, 24));
  if (n == "counts") return suite_counts(max, ks);
  if (n == "equivalence") return suite_equivalence(max, ks);
  if (n == "replication") return suite_replication(k, ks);
  if (n == "reversibility") return suite_reversibility(max, ks);
  if (n == "polynomial") return suite_polynomial(max, ks);
  if (n == "coloring") return suite_coloring(max, ks);
  if (n == "sublattice") return suite_sublattice(max, ks);
  if (n == "diamond") return suite_diamond(k, ks);
  if (n == "backward_growth") return suite_backward_growth(k, ks);
  throw std::invalid_argument("unknown suite " + std::string(n));
}

std::vector<SuiteReport> run_all_suites(const KernelSet& ks) {
  std::vector<SuiteReport> out;
  for (const auto& info : suite_catalog()) out.push_back(run_suite(info, default_max_for(info), ks));
  return out;
}

std::string format_report(const SuiteReport& r) {
  std::string line = (r.passed ? "[PASS] " : "[FAIL] ") + r.suite + " " + r.range;
  if (r.witness) line += ": " + *r.witness;
  return line;
}

void write_reports_json(std::ostream& os, const std::vector<SuiteReport>& reports) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : reports) {
    nlohmann::json j{{"suite", r.suite}, {"range", r.range}, {"passed", r.passed}};
    j["witness"] = r.witness ? nlohmann::json(*r.witness) : nlohmann::json(nullptr);
    arr.push_back(std::move(j));
  }
  os << arr.dump(2) << '\n';
}

}  // namespace rca
