#include "rca/grid.hpp"

#include <algorithm>
#include <functional>
#include <istream>
#include <ostream>
#include <sstream>

namespace rca {

Box Box::united(const Box& o) const noexcept {
  if (empty()) return o;
  if (o.empty()) return *this;
  return {std::min(imin, o.imin), std::max(imax, o.imax), std::min(jmin, o.jmin),
          std::max(jmax, o.jmax)};
}

BinaryGrid::BinaryGrid(std::initializer_list<Cell> cells)
    : BinaryGrid(std::vector<Cell>(cells)) {}

BinaryGrid::BinaryGrid(std::vector<Cell> cells) : cells_(std::move(cells)) {
  std::sort(cells_.begin(), cells_.end());
  cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
}

BinaryGrid BinaryGrid::from_sorted(std::vector<Cell> cells) {
  BinaryGrid g;
  g.cells_ = std::move(cells);
  return g;
}

bool BinaryGrid::contains(Cell c) const noexcept {
  return std::binary_search(cells_.begin(), cells_.end(), c);
}

Box BinaryGrid::bounds() const noexcept {
  if (cells_.empty()) return {};
  Box b{cells_.front().i, cells_.back().i, cells_.front().j, cells_.front().j};
  for (const Cell& c : cells_) {
    b.jmin = std::min(b.jmin, c.j);
    b.jmax = std::max(b.jmax, c.j);
  }
  return b;
}

std::size_t BinaryGrid::hash() const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (const Cell& c : cells_) {
    auto packed = (static_cast<std::uint64_t>(static_cast<std::uint32_t>(c.i)) << 32) |
                  static_cast<std::uint32_t>(c.j);
    h ^= std::hash<std::uint64_t>{}(packed) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

SecondOrderState single_seed() { return {BinaryGrid{{0, 0}}, BinaryGrid{}}; }

CountRecord count_values(const SecondOrderState& s) {
  CountRecord r;
  const auto both = grid_and(s.current, s.previous).size();
  r.r3 = both;
  r.r1 = s.current.size() - both;
  r.r2 = s.previous.size() - both;
  r.total = r.r1 + r.r2 + r.r3;
  return r;
}

BinaryGrid grid_xor(const BinaryGrid& a, const BinaryGrid& b) {
  std::vector<Cell> out;
  out.reserve(a.size() + b.size());
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                std::back_inserter(out));
  return BinaryGrid::from_sorted(std::move(out));
}

BinaryGrid grid_and(const BinaryGrid& a, const BinaryGrid& b) {
  std::vector<Cell> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return BinaryGrid::from_sorted(std::move(out));
}

BinaryGrid grid_minus(const BinaryGrid& a, const BinaryGrid& b) {
  std::vector<Cell> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return BinaryGrid::from_sorted(std::move(out));
}

BinaryGrid shift(const BinaryGrid& g, int dx, int dy) {
  std::vector<Cell> out;
  out.reserve(g.size());
  for (const Cell& c : g) out.push_back({c.i + dx, c.j + dy});
  // Translation preserves lexicographic order.
  return BinaryGrid::from_sorted(std::move(out));
}

SecondOrderState shift(const SecondOrderState& s, int dx, int dy) {
  return {shift(s.current, dx, dy), shift(s.previous, dx, dy)};
}

SecondOrderState swap_x(const SecondOrderState& s) { return {s.previous, s.current}; }

BinaryGrid diagonal_embed(const BinaryGrid& g, Parity parity) {
  const int off = parity == Parity::odd ? 1 : 0;
  std::vector<Cell> out;
  out.reserve(g.size());
  for (const Cell& c : g) out.push_back({c.i + c.j + off, c.i - c.j});
  return BinaryGrid(std::move(out));
}

BinaryGrid diagonal_extract(const BinaryGrid& g, Parity parity) {
  const int off = parity == Parity::odd ? 1 : 0;
  std::vector<Cell> out;
  out.reserve(g.size());
  for (const Cell& c : g) {
    if (parity_of(c) != parity) {
      std::ostringstream msg;
      msg << "cell (" << c.i << "," << c.j << ") is not on the "
          << (parity == Parity::even ? "even" : "odd") << " diagonal sublattice";
      throw MixedParityError(msg.str());
    }
    const int s = c.i - off;  // i + j
    const int d = c.j;        // i - j
    out.push_back({(s + d) / 2, (s - d) / 2});
  }
  return BinaryGrid(std::move(out));
}

BinaryGrid restrict_to(const BinaryGrid& g, const Box& b) {
  std::vector<Cell> out;
  for (const Cell& c : g)
    if (b.contains(c)) out.push_back(c);
  return BinaryGrid::from_sorted(std::move(out));
}

void write_grid(std::ostream& os, const BinaryGrid& g) {
  os << "#bgrid v1 count=" << g.size() << '\n';
  for (const Cell& c : g) os << c.i << ' ' << c.j << '\n';
}

namespace {

std::string next_content_line(std::istream& is) {
  std::string line;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) return line;
  }
  throw FormatError("unexpected end of input");
}

}  // namespace

BinaryGrid read_grid(std::istream& is) {
  const std::string header = next_content_line(is);
  constexpr std::string_view prefix = "#bgrid v1 count=";
  if (header.rfind(prefix, 0) != 0) throw FormatError("bad grid header: " + header);
  std::size_t count = 0;
  try {
    std::size_t used = 0;
    count = std::stoull(header.substr(prefix.size()), &used);
    if (used != header.size() - prefix.size()) throw FormatError("bad grid count");
  } catch (const std::logic_error&) {
    throw FormatError("bad grid count: " + header);
  }
  std::vector<Cell> cells;
  cells.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    std::istringstream row(next_content_line(is));
    Cell c;
    std::string extra;
    if (!(row >> c.i >> c.j) || (row >> extra)) throw FormatError("bad grid cell line");
    cells.push_back(c);
  }
  BinaryGrid g(std::move(cells));
  if (g.size() != count) throw FormatError("duplicate cells in grid");
  return g;
}

std::string to_text(const BinaryGrid& g) {
  std::ostringstream os;
  write_grid(os, g);
  return os.str();
}

void write_state(std::ostream& os, const SecondOrderState& s) {
  os << "#bstate v1\n";
  write_grid(os, s.current);
  write_grid(os, s.previous);
}

SecondOrderState read_state(std::istream& is) {
  if (next_content_line(is) != "#bstate v1") throw FormatError("bad state header");
  SecondOrderState s;
  s.current = read_grid(is);
  s.previous = read_grid(is);
  return s;
}

std::string describe_diff(const BinaryGrid& expected, const BinaryGrid& actual,
                          std::size_t limit) {
  const BinaryGrid missing = grid_minus(expected, actual);
  const BinaryGrid extra = grid_minus(actual, expected);
  std::ostringstream os;
  auto list = [&](const char* label, const BinaryGrid& g) {
    os << label << g.size() << " {";
    std::size_t shown = 0;
    for (const Cell& c : g) {
      if (shown == limit) {
        os << " ...";
        break;
      }
      os << (shown ? " " : "") << '(' << c.i << ',' << c.j << ')';
      ++shown;
    }
    os << '}';
  };
  list("missing=", missing);
  os << ' ';
  list("extra=", extra);
  return os.str();
}

}  // namespace rca
