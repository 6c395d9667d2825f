#pragma once

// Dense bit-packed windows used for stepping.
//
// A BitPlane covers a rectangular frame of the lattice. Each row carries one
// zero guard word on both sides and the plane carries one zero guard row
// above and below, so row kernels may read one word and one row past any
// processed cell without bounds checks.
//
// DenseGrid and DenseState track a conservative bounding box of live cells
// and only run kernels over that box grown by one. They regrow their frame
// before a step could write outside it.

#include <cstddef>
#include <vector>

#include "rca/grid.hpp"
#include "rca/kernels.hpp"

namespace rca {

class BitPlane {
 public:
  BitPlane();
  // The covered frame contains `need`; columns are rounded up to whole words.
  explicit BitPlane(const Box& need);

  const Box& frame() const noexcept { return frame_; }
  std::size_t words() const noexcept { return words_; }

  bool test(Cell c) const noexcept;
  void set(Cell c) noexcept;
  void clear() noexcept;

  // Word index of column i (frame-relative).
  std::size_t word_of(int i) const noexcept {
    return static_cast<std::size_t>(i - frame_.imin) >> 6;
  }
  // First interior word of row j; j may be one past either frame edge.
  Word* row(int j) noexcept { return data_.data() + row_offset(j); }
  const Word* row(int j) const noexcept { return data_.data() + row_offset(j); }

  BinaryGrid to_grid() const;
  void fill(const BinaryGrid& g);  // cells must lie inside the frame
  // Copy of this plane's contents in a larger frame.
  BitPlane reframed(const Box& need) const;
  // Tight bounding box of set cells (scans the plane).
  Box occupied_bounds() const noexcept;

  bool same_frame(const BitPlane& o) const noexcept { return frame_ == o.frame_; }
  friend bool operator==(const BitPlane& a, const BitPlane& b) noexcept {
    return a.frame_ == b.frame_ && a.data_ == b.data_;
  }

 private:
  std::size_t row_offset(int j) const noexcept {
    return static_cast<std::size_t>(j - frame_.jmin + 1) * stride_ + 1;
  }

  Box frame_;
  std::size_t words_ = 0;
  std::size_t stride_ = 0;
  std::vector<Word> data_;
};

// acc ^= f(src) over `region` (cells, inclusive). Region plus a one-cell
// ring must lie inside both frames, which must be identical.
void accumulate_rule(const KernelSet& ks, RuleId rule, const BitPlane& src, BitPlane& acc,
                     const Box& region);

// First-order configuration stepping in place.
class DenseGrid {
 public:
  explicit DenseGrid(const BinaryGrid& g, int reserve_steps = 0);

  void step(RuleId rule, const KernelSet& ks = kernels::best());
  BinaryGrid to_grid() const { return plane_.to_grid(); }
  const BitPlane& plane() const noexcept { return plane_; }
  const Box& active() const noexcept { return active_; }

 private:
  void ensure_room();

  BitPlane plane_;
  BitPlane scratch_;
  Box active_;
};

// Second-order (current, previous) stepping in place.
class DenseState {
 public:
  explicit DenseState(const SecondOrderState& s, int reserve_steps = 0);

  // (c, c') -> (f[c] + c', c)
  void step(RuleId rule, const KernelSet& ks = kernels::best());
  // (c, c') -> (c', f[c'] + c)
  void step_back(RuleId rule, const KernelSet& ks = kernels::best());
  void swap_x() noexcept { std::swap(cur_, prev_); }

  PlaneCounts counts(const KernelSet& ks = kernels::best()) const;
  SecondOrderState to_state() const { return {cur_.to_grid(), prev_.to_grid()}; }
  const BitPlane& current() const noexcept { return cur_; }
  const BitPlane& previous() const noexcept { return prev_; }
  const Box& active() const noexcept { return active_; }

  // Shrinks the tracked box to the occupied cells.
  void tighten() noexcept;

  bool same_content(const DenseState& o) const;

 private:
  void ensure_room();

  BitPlane cur_;
  BitPlane prev_;
  Box active_;
};

}  // namespace rca
