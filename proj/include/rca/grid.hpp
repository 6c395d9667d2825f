#pragma once

// Sparse two-state and four-state configurations on the unbounded lattice.
//
// A BinaryGrid is the canonical interchange form: a sorted, duplicate-free
// list of occupied cells. Dense stepping lives in bit_plane.hpp; everything
// that compares or hashes configurations goes through this form so window
// padding never leaks into equality.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "rca/errors.hpp"

namespace rca {

struct Cell {
  int i = 0;  // column (x)
  int j = 0;  // row (y)

  friend constexpr auto operator<=>(const Cell&, const Cell&) = default;
};

enum class Parity { even = 0, odd = 1 };

constexpr Parity parity_of(Cell c) noexcept {
  return ((c.i + c.j) & 1) ? Parity::odd : Parity::even;
}

// Inclusive axis-aligned box. An empty grid has no box.
struct Box {
  int imin = 0, imax = -1, jmin = 0, jmax = -1;

  bool empty() const noexcept { return imin > imax || jmin > jmax; }
  bool contains(Cell c) const noexcept {
    return c.i >= imin && c.i <= imax && c.j >= jmin && c.j <= jmax;
  }
  Box grown(int by) const noexcept {
    return empty() ? *this : Box{imin - by, imax + by, jmin - by, jmax + by};
  }
  Box united(const Box& o) const noexcept;

  friend bool operator==(const Box&, const Box&) = default;
};

class BinaryGrid {
 public:
  BinaryGrid() = default;
  BinaryGrid(std::initializer_list<Cell> cells);
  // Canonicalizes: sorts and removes duplicates.
  explicit BinaryGrid(std::vector<Cell> cells);

  // Trusted constructor for already sorted, duplicate-free input.
  static BinaryGrid from_sorted(std::vector<Cell> cells);

  std::size_t size() const noexcept { return cells_.size(); }
  bool empty() const noexcept { return cells_.empty(); }
  bool contains(Cell c) const noexcept;
  std::span<const Cell> cells() const noexcept { return cells_; }
  auto begin() const noexcept { return cells_.begin(); }
  auto end() const noexcept { return cells_.end(); }

  Box bounds() const noexcept;
  std::size_t hash() const noexcept;

  friend bool operator==(const BinaryGrid&, const BinaryGrid&) = default;

 private:
  std::vector<Cell> cells_;
};

// (current, previous) = (c, c'). Cell value is [in current] + 2*[in previous].
struct SecondOrderState {
  BinaryGrid current;
  BinaryGrid previous;

  int value_at(Cell c) const noexcept {
    return (current.contains(c) ? 1 : 0) + (previous.contains(c) ? 2 : 0);
  }
  Box bounds() const noexcept { return current.bounds().united(previous.bounds()); }

  friend bool operator==(const SecondOrderState&, const SecondOrderState&) = default;
};

struct CountRecord {
  std::int64_t n = 0;
  std::uint64_t r1 = 0;
  std::uint64_t r2 = 0;
  std::uint64_t r3 = 0;
  std::uint64_t total = 0;

  friend bool operator==(const CountRecord&, const CountRecord&) = default;
};

SecondOrderState single_seed();

// n is left at 0; callers that track time fill it in.
CountRecord count_values(const SecondOrderState& s);

BinaryGrid grid_xor(const BinaryGrid& a, const BinaryGrid& b);
BinaryGrid grid_and(const BinaryGrid& a, const BinaryGrid& b);
BinaryGrid grid_minus(const BinaryGrid& a, const BinaryGrid& b);
BinaryGrid shift(const BinaryGrid& g, int dx, int dy);
SecondOrderState shift(const SecondOrderState& s, int dx, int dy);

SecondOrderState swap_x(const SecondOrderState& s);

// Even: (i, j) -> (i + j, i - j). Odd: (i, j) -> (i + j + 1, i - j).
BinaryGrid diagonal_embed(const BinaryGrid& g, Parity parity);
// Inverse of diagonal_embed on its image. Throws MixedParityError when a
// cell's coordinate-sum parity differs from `parity`.
BinaryGrid diagonal_extract(const BinaryGrid& g, Parity parity);

// Cells of `g` inside box `b`.
BinaryGrid restrict_to(const BinaryGrid& g, const Box& b);

// "#bgrid v1 count=<N>" followed by one "i j" line per cell, sorted.
void write_grid(std::ostream& os, const BinaryGrid& g);
BinaryGrid read_grid(std::istream& is);
std::string to_text(const BinaryGrid& g);

// "#bstate v1" followed by the current grid block, then the previous one.
void write_state(std::ostream& os, const SecondOrderState& s);
SecondOrderState read_state(std::istream& is);

// Short description of a ⊕ b for failure witnesses; lists at most `limit` cells.
std::string describe_diff(const BinaryGrid& expected, const BinaryGrid& actual,
                          std::size_t limit = 8);

}  // namespace rca
