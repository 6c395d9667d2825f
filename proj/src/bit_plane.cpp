#include "rca/bit_plane.hpp"

#include <algorithm>
#include <bit>

namespace rca {

namespace {

// Non-empty frame covering `need` with some headroom for growth.
Box padded(const Box& need) {
  if (need.empty()) return {-1, 1, -1, 1};
  const int w = need.imax - need.imin + 1;
  const int h = need.jmax - need.jmin + 1;
  const int slack = std::max(8, std::max(w, h) / 4);
  return need.grown(slack);
}

}  // namespace

BitPlane::BitPlane() : BitPlane(Box{0, 0, 0, 0}) {}

BitPlane::BitPlane(const Box& need) {
  frame_ = need.empty() ? Box{0, 0, 0, 0} : need;
  const auto width = static_cast<std::size_t>(frame_.imax - frame_.imin + 1);
  words_ = (width + 63) / 64;
  frame_.imax = frame_.imin + static_cast<int>(words_ * 64) - 1;
  stride_ = words_ + 2;
  const auto rows = static_cast<std::size_t>(frame_.jmax - frame_.jmin + 1);
  data_.assign((rows + 2) * stride_, 0);
}

bool BitPlane::test(Cell c) const noexcept {
  if (!frame_.contains(c)) return false;
  const auto off = static_cast<unsigned>(c.i - frame_.imin);
  return (row(c.j)[off >> 6] >> (off & 63)) & 1u;
}

void BitPlane::set(Cell c) noexcept {
  const auto off = static_cast<unsigned>(c.i - frame_.imin);
  row(c.j)[off >> 6] |= Word{1} << (off & 63);
}

void BitPlane::clear() noexcept { std::fill(data_.begin(), data_.end(), 0); }

void BitPlane::fill(const BinaryGrid& g) {
  for (const Cell& c : g) set(c);
}

BinaryGrid BitPlane::to_grid() const {
  std::vector<Cell> cells;
  for (int j = frame_.jmin; j <= frame_.jmax; ++j) {
    const Word* r = row(j);
    for (std::size_t w = 0; w < words_; ++w) {
      Word bits = r[w];
      while (bits) {
        const int b = std::countr_zero(bits);
        bits &= bits - 1;
        cells.push_back({frame_.imin + static_cast<int>(w * 64) + b, j});
      }
    }
  }
  std::sort(cells.begin(), cells.end());
  return BinaryGrid::from_sorted(std::move(cells));
}

BitPlane BitPlane::reframed(const Box& need) const {
  BitPlane out(need.united(frame_));
  // Per cell: the two frames need not share column phase.
  for (int j = frame_.jmin; j <= frame_.jmax; ++j) {
    const Word* r = row(j);
    for (std::size_t w = 0; w < words_; ++w) {
      Word bits = r[w];
      while (bits) {
        const int b = std::countr_zero(bits);
        bits &= bits - 1;
        out.set({frame_.imin + static_cast<int>(w * 64) + b, j});
      }
    }
  }
  return out;
}

Box BitPlane::occupied_bounds() const noexcept {
  Box b;
  bool any = false;
  for (int j = frame_.jmin; j <= frame_.jmax; ++j) {
    const Word* r = row(j);
    for (std::size_t w = 0; w < words_; ++w) {
      if (!r[w]) continue;
      const int lo = frame_.imin + static_cast<int>(w * 64) + std::countr_zero(r[w]);
      const int hi = frame_.imin + static_cast<int>(w * 64) + 63 - std::countl_zero(r[w]);
      if (!any) {
        b = {lo, hi, j, j};
        any = true;
      } else {
        b = b.united({lo, hi, j, j});
      }
    }
  }
  return b;
}

void accumulate_rule(const KernelSet& ks, RuleId rule, const BitPlane& src, BitPlane& acc,
                     const Box& region) {
  if (region.empty()) return;
  const RowKernel kernel = ks[rule];
  const std::size_t w0 = src.word_of(region.imin);
  const std::size_t w1 = src.word_of(region.imax);
  const std::size_t n = w1 - w0 + 1;
  for (int j = region.jmin; j <= region.jmax; ++j)
    kernel(src.row(j - 1) + w0, src.row(j) + w0, src.row(j + 1) + w0, acc.row(j) + w0, n);
}

// ---------------------------------------------------------------------------

DenseGrid::DenseGrid(const BinaryGrid& g, int reserve_steps)
    : plane_(padded(g.bounds().grown(reserve_steps + 1))), active_(g.bounds()) {
  plane_.fill(g);
  scratch_ = BitPlane(plane_.frame());
}

void DenseGrid::ensure_room() {
  const Box need = active_.grown(1);
  const Box& f = plane_.frame();
  if (need.empty() || (need.imin >= f.imin && need.imax <= f.imax && need.jmin >= f.jmin &&
                       need.jmax <= f.jmax))
    return;
  plane_ = plane_.reframed(padded(need));
  scratch_ = BitPlane(plane_.frame());
}

void DenseGrid::step(RuleId rule, const KernelSet& ks) {
  if (active_.empty()) return;
  ensure_room();
  const Box region = active_.grown(1);
  scratch_.clear();
  accumulate_rule(ks, rule, plane_, scratch_, region);
  std::swap(plane_, scratch_);
  active_ = region;
}

// ---------------------------------------------------------------------------

DenseState::DenseState(const SecondOrderState& s, int reserve_steps)
    : cur_(padded(s.bounds().grown(reserve_steps + 1))),
      prev_(cur_.frame()),
      active_(s.bounds()) {
  cur_.fill(s.current);
  prev_.fill(s.previous);
}

void DenseState::ensure_room() {
  const Box need = active_.grown(1);
  const Box& f = cur_.frame();
  if (need.empty() || (need.imin >= f.imin && need.imax <= f.imax && need.jmin >= f.jmin &&
                       need.jmax <= f.jmax))
    return;
  const Box frame = padded(need);
  cur_ = cur_.reframed(frame);
  prev_ = prev_.reframed(cur_.frame());
}

void DenseState::step(RuleId rule, const KernelSet& ks) {
  if (!active_.empty()) {
    ensure_room();
    const Box region = active_.grown(1);
    accumulate_rule(ks, rule, cur_, prev_, region);
    active_ = region;
  }
  std::swap(cur_, prev_);
}

void DenseState::step_back(RuleId rule, const KernelSet& ks) {
  if (!active_.empty()) {
    ensure_room();
    const Box region = active_.grown(1);
    accumulate_rule(ks, rule, prev_, cur_, region);
    active_ = region;
  }
  std::swap(cur_, prev_);
}

PlaneCounts DenseState::counts(const KernelSet& ks) const {
  PlaneCounts pc;
  if (active_.empty()) return pc;
  const std::size_t w0 = cur_.word_of(active_.imin);
  const std::size_t n = cur_.word_of(active_.imax) - w0 + 1;
  for (int j = active_.jmin; j <= active_.jmax; ++j)
    pc += ks.count(cur_.row(j) + w0, prev_.row(j) + w0, n);
  return pc;
}

void DenseState::tighten() noexcept {
  active_ = cur_.occupied_bounds().united(prev_.occupied_bounds());
}

bool DenseState::same_content(const DenseState& o) const {
  if (cur_.same_frame(o.cur_)) return cur_ == o.cur_ && prev_ == o.prev_;
  return to_state() == o.to_state();
}

}  // namespace rca
