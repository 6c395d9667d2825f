#pragma once

// Sparse Laurent polynomials in x, y over GF(2).
//
// A polynomial is its support: the set of exponent pairs with coefficient 1.
// Addition is symmetric difference of supports and multiplication is a set
// convolution in which colliding terms cancel in pairs. A configuration c
// corresponds to sum c_ij x^i y^j, so grids and polynomials convert 1:1.
//
// For the linear rules one step is multiplication by a fixed transition
// polynomial T, and the second-order state after k steps from the seed is
// (f_{k+1}(T), f_k(T)) where f_k are the Fibonacci polynomials
// f_{k+1} = t f_k + f_{k-1}, f_0 = 0, f_1 = 1.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include "rca/errors.hpp"
#include "rca/grid.hpp"
#include "rca/rule_id.hpp"

namespace rca {

struct Monomial {
  int ex = 0;
  int ey = 0;

  friend constexpr auto operator<=>(const Monomial&, const Monomial&) = default;
};

class LaurentPoly2 {
 public:
  LaurentPoly2() = default;  // zero
  LaurentPoly2(std::initializer_list<Monomial> terms);
  // Reduces mod 2: a pair present an even number of times cancels.
  explicit LaurentPoly2(std::vector<Monomial> terms);

  static LaurentPoly2 one() { return LaurentPoly2{{0, 0}}; }
  static LaurentPoly2 from_sorted(std::vector<Monomial> terms);

  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool has(Monomial m) const noexcept;
  std::span<const Monomial> terms() const noexcept { return terms_; }
  auto begin() const noexcept { return terms_.begin(); }
  auto end() const noexcept { return terms_.end(); }

  friend bool operator==(const LaurentPoly2&, const LaurentPoly2&) = default;

 private:
  std::vector<Monomial> terms_;
};

// (p1, p2) = polynomials of (current, previous).
struct PolyPair {
  LaurentPoly2 first;
  LaurentPoly2 second;

  friend bool operator==(const PolyPair&, const PolyPair&) = default;
};

LaurentPoly2 poly_add(const LaurentPoly2& p, const LaurentPoly2& q);
LaurentPoly2 poly_mul(const LaurentPoly2& p, const LaurentPoly2& q);
// Over GF(2), p^2 maps every exponent (i, j) to (2i, 2j).
LaurentPoly2 poly_square(const LaurentPoly2& p);
// Multiplication by the monomial x^dx y^dy.
LaurentPoly2 poly_shift(const LaurentPoly2& p, int dx, int dy);
// p^(2^k) by k squarings.
LaurentPoly2 poly_pow_2k(const LaurentPoly2& p, int k);
// p^n by binary powering.
LaurentPoly2 poly_pow(const LaurentPoly2& p, std::uint64_t n);

inline LaurentPoly2 operator+(const LaurentPoly2& p, const LaurentPoly2& q) {
  return poly_add(p, q);
}
inline LaurentPoly2 operator*(const LaurentPoly2& p, const LaurentPoly2& q) {
  return poly_mul(p, q);
}

// T_C1 = (1/x + x)(1/y + y), T_C2 = 1/x + x + 1/y + y.
// Throws NonlinearRuleError for C3 and C3'.
LaurentPoly2 transition_poly(RuleId rule);
// 1/x + x: rule 90 in one variable (e_y = 0).
LaurentPoly2 rule90_transition();

// f_k(T) by a doubling ladder over the bits of k using
// f_2n = T f_n^2 and f_2n+1 = (f_n+1 + f_n)^2.
LaurentPoly2 fib_poly_eval(const LaurentPoly2& t, std::uint64_t k);
// (f_k(T), f_{k+1}(T)) from the same ladder.
std::pair<LaurentPoly2, LaurentPoly2> fib_poly_pair(const LaurentPoly2& t, std::uint64_t k);
// l_k(T) = T f_k(T) over GF(2); l_0 = 2 = 0.
LaurentPoly2 lucas_poly_eval(const LaurentPoly2& t, std::uint64_t k);
// T^(2^k) f_j(T) + f_(2^k - j)(T), which equals f_(2^k + j)(T).
// Throws IndexOutOfRangeError unless 0 <= j < 2^k.
LaurentPoly2 fib_addition_split(int k, std::int64_t j, const LaurentPoly2& t);

// (f_{n+1}(T), f_n(T)) for the rule's transition polynomial: the exact
// second-order state after n steps from the single seed.
PolyPair state_poly_at(RuleId rule, std::uint64_t n);

LaurentPoly2 grid_to_poly(const BinaryGrid& g);
BinaryGrid poly_to_grid(const LaurentPoly2& p);
PolyPair state_to_polys(const SecondOrderState& s);
SecondOrderState polys_to_state(const PolyPair& p);

// "#lpoly v1 terms=<N>" followed by one "e_x e_y" line per term, sorted.
void write_poly(std::ostream& os, const LaurentPoly2& p);
LaurentPoly2 read_poly(std::istream& is);

}  // namespace rca
