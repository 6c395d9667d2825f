#include "rca/poly.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace rca {

namespace {

std::vector<Monomial> cancel_pairs(std::vector<Monomial> terms) {
  std::sort(terms.begin(), terms.end());
  std::vector<Monomial> out;
  out.reserve(terms.size());
  for (std::size_t a = 0; a < terms.size();) {
    std::size_t b = a;
    while (b < terms.size() && terms[b] == terms[a]) ++b;
    if ((b - a) & 1) out.push_back(terms[a]);
    a = b;
  }
  return out;
}

std::vector<Monomial> sym_diff(const std::vector<Monomial>& a, std::span<const Monomial> b) {
  std::vector<Monomial> out;
  out.reserve(a.size() + b.size());
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                std::back_inserter(out));
  return out;
}

void check_doubling(const LaurentPoly2& p) {
  for (const Monomial& m : p)
    if (m.ex > INT_MAX / 2 || m.ex < INT_MIN / 2 || m.ey > INT_MAX / 2 || m.ey < INT_MIN / 2)
      throw std::overflow_error("exponent overflow while squaring");
}

}  // namespace

LaurentPoly2::LaurentPoly2(std::initializer_list<Monomial> terms)
    : LaurentPoly2(std::vector<Monomial>(terms)) {}

LaurentPoly2::LaurentPoly2(std::vector<Monomial> terms) : terms_(cancel_pairs(std::move(terms))) {}

LaurentPoly2 LaurentPoly2::from_sorted(std::vector<Monomial> terms) {
  LaurentPoly2 p;
  p.terms_ = std::move(terms);
  return p;
}

bool LaurentPoly2::has(Monomial m) const noexcept {
  return std::binary_search(terms_.begin(), terms_.end(), m);
}

LaurentPoly2 poly_add(const LaurentPoly2& p, const LaurentPoly2& q) {
  std::vector<Monomial> out;
  out.reserve(p.size() + q.size());
  std::set_symmetric_difference(p.begin(), p.end(), q.begin(), q.end(),
                                std::back_inserter(out));
  return LaurentPoly2::from_sorted(std::move(out));
}

LaurentPoly2 poly_shift(const LaurentPoly2& p, int dx, int dy) {
  std::vector<Monomial> out;
  out.reserve(p.size());
  for (const Monomial& m : p) out.push_back({m.ex + dx, m.ey + dy});
  return LaurentPoly2::from_sorted(std::move(out));
}

LaurentPoly2 poly_mul(const LaurentPoly2& p, const LaurentPoly2& q) {
  if (p.is_zero() || q.is_zero()) return {};
  const LaurentPoly2& small = p.size() <= q.size() ? p : q;
  const LaurentPoly2& large = p.size() <= q.size() ? q : p;
  if (small.size() <= 8) {
    // Sum of shifted copies of the larger factor; each copy stays sorted.
    std::vector<Monomial> acc;
    for (const Monomial& m : small) {
      const LaurentPoly2 copy = poly_shift(large, m.ex, m.ey);
      acc = sym_diff(acc, copy.terms());
    }
    return LaurentPoly2::from_sorted(std::move(acc));
  }
  std::vector<Monomial> products;
  products.reserve(p.size() * q.size());
  for (const Monomial& a : p)
    for (const Monomial& b : q) products.push_back({a.ex + b.ex, a.ey + b.ey});
  return LaurentPoly2(std::move(products));
}

LaurentPoly2 poly_square(const LaurentPoly2& p) {
  check_doubling(p);
  std::vector<Monomial> out;
  out.reserve(p.size());
  for (const Monomial& m : p) out.push_back({2 * m.ex, 2 * m.ey});
  return LaurentPoly2::from_sorted(std::move(out));
}

LaurentPoly2 poly_pow_2k(const LaurentPoly2& p, int k) {
  if (k < 0) throw std::invalid_argument("poly_pow_2k: negative k");
  LaurentPoly2 r = p;
  for (int s = 0; s < k; ++s) r = poly_square(r);
  return r;
}

LaurentPoly2 poly_pow(const LaurentPoly2& p, std::uint64_t n) {
  LaurentPoly2 result = LaurentPoly2::one();
  if (n == 0) return result;
  for (int bit = std::bit_width(n) - 1; bit >= 0; --bit) {
    result = poly_square(result);
    if ((n >> bit) & 1) result = poly_mul(result, p);
  }
  return result;
}

LaurentPoly2 transition_poly(RuleId rule) {
  switch (rule) {
    case RuleId::C1:
      return LaurentPoly2{{-1, -1}, {1, -1}, {-1, 1}, {1, 1}};
    case RuleId::C2:
      return LaurentPoly2{{-1, 0}, {1, 0}, {0, -1}, {0, 1}};
    case RuleId::C3:
    case RuleId::C3p:
      break;
  }
  throw NonlinearRuleError(std::string("rule ") + std::string(rule_name(rule)) +
                           " has no transition polynomial");
}

LaurentPoly2 rule90_transition() { return LaurentPoly2{{-1, 0}, {1, 0}}; }

std::pair<LaurentPoly2, LaurentPoly2> fib_poly_pair(const LaurentPoly2& t, std::uint64_t k) {
  LaurentPoly2 lo;                        // f_m
  LaurentPoly2 hi = LaurentPoly2::one();  // f_{m+1}
  for (int bit = std::bit_width(k) - 1; bit >= 0; --bit) {
    LaurentPoly2 odd = poly_square(poly_add(lo, hi));  // f_2m+1
    if ((k >> bit) & 1) {
      hi = poly_mul(t, poly_square(hi));  // f_2m+2
      lo = std::move(odd);
    } else {
      lo = poly_mul(t, poly_square(lo));  // f_2m
      hi = std::move(odd);
    }
  }
  return {std::move(lo), std::move(hi)};
}

LaurentPoly2 fib_poly_eval(const LaurentPoly2& t, std::uint64_t k) {
  return fib_poly_pair(t, k).first;
}

LaurentPoly2 lucas_poly_eval(const LaurentPoly2& t, std::uint64_t k) {
  if (k == 0) return {};
  return poly_mul(t, fib_poly_eval(t, k));
}

LaurentPoly2 fib_addition_split(int k, std::int64_t j, const LaurentPoly2& t) {
  if (k < 0 || k > 62) throw IndexOutOfRangeError("fib_addition_split: k out of range");
  const std::int64_t span = std::int64_t{1} << k;
  if (j < 0 || j >= span)
    throw IndexOutOfRangeError("fib_addition_split: j must satisfy 0 <= j < 2^k");
  const LaurentPoly2 outer =
      poly_mul(poly_pow_2k(t, k), fib_poly_eval(t, static_cast<std::uint64_t>(j)));
  return poly_add(outer, fib_poly_eval(t, static_cast<std::uint64_t>(span - j)));
}

PolyPair state_poly_at(RuleId rule, std::uint64_t n) {
  auto [fn, fn1] = fib_poly_pair(transition_poly(rule), n);
  return {std::move(fn1), std::move(fn)};
}

LaurentPoly2 grid_to_poly(const BinaryGrid& g) {
  std::vector<Monomial> out;
  out.reserve(g.size());
  for (const Cell& c : g) out.push_back({c.i, c.j});
  return LaurentPoly2::from_sorted(std::move(out));
}

BinaryGrid poly_to_grid(const LaurentPoly2& p) {
  std::vector<Cell> out;
  out.reserve(p.size());
  for (const Monomial& m : p) out.push_back({m.ex, m.ey});
  return BinaryGrid::from_sorted(std::move(out));
}

PolyPair state_to_polys(const SecondOrderState& s) {
  return {grid_to_poly(s.current), grid_to_poly(s.previous)};
}

SecondOrderState polys_to_state(const PolyPair& p) {
  return {poly_to_grid(p.first), poly_to_grid(p.second)};
}

void write_poly(std::ostream& os, const LaurentPoly2& p) {
  os << "#lpoly v1 terms=" << p.size() << '\n';
  for (const Monomial& m : p) os << m.ex << ' ' << m.ey << '\n';
}

LaurentPoly2 read_poly(std::istream& is) {
  std::string line;
  while (std::getline(is, line) && line.empty()) {
  }
  constexpr std::string_view prefix = "#lpoly v1 terms=";
  if (line.rfind(prefix, 0) != 0) throw FormatError("bad polynomial header: " + line);
  std::size_t count = 0;
  try {
    count = std::stoull(line.substr(prefix.size()));
  } catch (const std::logic_error&) {
    throw FormatError("bad polynomial term count: " + line);
  }
  std::vector<Monomial> terms;
  terms.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    if (!std::getline(is, line)) throw FormatError("unexpected end of polynomial");
    std::istringstream row(line);
    Monomial m;
    if (!(row >> m.ex >> m.ey)) throw FormatError("bad polynomial term line: " + line);
    terms.push_back(m);
  }
  LaurentPoly2 p(std::move(terms));
  if (p.size() != count) throw FormatError("repeated exponent pair in polynomial");
  return p;
}

}  // namespace rca
