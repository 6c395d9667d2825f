#pragma once

// Slow reference implementations that share no code with the library's
// bit-plane or polynomial paths. Tests compare the library against these.

#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "rca/grid.hpp"
#include "rca/poly.hpp"
#include "rca/rule_id.hpp"

namespace oracle {

using CellSet = std::set<rca::Cell>;

inline CellSet to_set(const rca::BinaryGrid& g) { return CellSet(g.begin(), g.end()); }

inline rca::BinaryGrid to_grid(const CellSet& s) {
  return rca::BinaryGrid(std::vector<rca::Cell>(s.begin(), s.end()));
}

// f[c] evaluated cell by cell from the neighbor sums.
inline CellSet first_order(rca::RuleId rule, const CellSet& c) {
  static constexpr int orth[4][2] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
  static constexpr int diag[4][2] = {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}};
  CellSet candidates;
  for (const auto& p : c)
    for (int di = -1; di <= 1; ++di)
      for (int dj = -1; dj <= 1; ++dj) candidates.insert({p.i + di, p.j + dj});
  CellSet out;
  for (const auto& p : candidates) {
    int plus = 0, cross = 0;
    for (const auto& d : orth) plus += c.count({p.i + d[0], p.j + d[1]}) ? 1 : 0;
    for (const auto& d : diag) cross += c.count({p.i + d[0], p.j + d[1]}) ? 1 : 0;
    bool v = false;
    switch (rule) {
      case rca::RuleId::C1: v = cross % 2 == 1; break;
      case rca::RuleId::C2: v = plus % 2 == 1; break;
      case rca::RuleId::C3: v = plus == 1; break;
      case rca::RuleId::C3p: v = plus == 1 && cross == 0; break;
    }
    if (v) out.insert(p);
  }
  return out;
}

inline CellSet sym_diff(const CellSet& a, const CellSet& b) {
  CellSet out = a;
  for (const auto& p : b)
    if (!out.erase(p)) out.insert(p);
  return out;
}

struct State {
  CellSet cur, prev;
};

inline State seed() { return {{{0, 0}}, {}}; }

inline State step(rca::RuleId rule, const State& s) {
  return {sym_diff(first_order(rule, s.cur), s.prev), s.cur};
}

inline rca::SecondOrderState to_state(const State& s) {
  return {to_grid(s.cur), to_grid(s.prev)};
}

// --- polynomials --------------------------------------------------------

using Poly = std::map<std::pair<int, int>, int>;  // coefficient mod 2, zero terms dropped

inline Poly from(const rca::LaurentPoly2& p) {
  Poly out;
  for (const auto& m : p) out[{m.ex, m.ey}] = 1;
  return out;
}

inline rca::LaurentPoly2 to_lib(const Poly& p) {
  std::vector<rca::Monomial> terms;
  for (const auto& [e, c] : p)
    if (c) terms.push_back({e.first, e.second});
  return rca::LaurentPoly2(std::move(terms));
}

inline Poly add(const Poly& a, const Poly& b) {
  Poly out = a;
  for (const auto& [e, c] : b) {
    if ((out[e] ^= c) == 0) out.erase(e);
  }
  return out;
}

inline Poly mul(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      const std::pair<int, int> e{ea.first + eb.first, ea.second + eb.second};
      if ((out[e] ^= (ca & cb)) == 0) out.erase(e);
    }
  return out;
}

// f_0..f_kmax by f_{k+1} = T f_k + f_{k-1}.
inline std::vector<Poly> fib_naive(const Poly& t, int kmax) {
  std::vector<Poly> f{Poly{}, Poly{{{0, 0}, 1}}};
  while (static_cast<int>(f.size()) <= kmax) {
    const auto n = f.size();
    f.push_back(add(mul(t, f[n - 1]), f[n - 2]));
  }
  f.resize(static_cast<std::size_t>(kmax) + 1);
  return f;
}

// Integer-coefficient Fibonacci and Lucas polynomials in one variable t,
// f_0 = 0, f_1 = 1, l_0 = 2, l_1 = t, both with g_{k+1} = t g_k + g_{k-1}.
// Index i of the vector is the coefficient of t^i.
using ZPoly = std::vector<std::int64_t>;

inline ZPoly ztrim(ZPoly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

inline ZPoly zadd(ZPoly a, const ZPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  return ztrim(std::move(a));
}

inline ZPoly zshift(const ZPoly& a) {
  ZPoly out(a.size() + 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i + 1] = a[i];
  return out;
}

inline ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return ztrim(std::move(out));
}

inline std::vector<ZPoly> zseq(ZPoly g0, ZPoly g1, int kmax) {
  std::vector<ZPoly> g{std::move(g0), std::move(g1)};
  while (static_cast<int>(g.size()) <= kmax) {
    const auto n = g.size();
    g.push_back(zadd(zshift(g[n - 1]), g[n - 2]));
  }
  return g;
}

inline std::vector<ZPoly> zfib(int kmax) { return zseq({}, {1}, kmax); }
inline std::vector<ZPoly> zlucas(int kmax) { return zseq({2}, {0, 1}, kmax); }

// Reduces mod 2 and substitutes t = T.
inline Poly eval_mod2(const ZPoly& z, const Poly& t) {
  Poly out, power{{{0, 0}, 1}};
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (((z[i] % 2) + 2) % 2 == 1) out = add(out, power);
    power = mul(power, t);
  }
  return out;
}

}  // namespace oracle
