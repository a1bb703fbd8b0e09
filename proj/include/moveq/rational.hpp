#pragma once

// Conway rational-tangle calculus.  T(a_1,...,a_n) has slope
// a_n + 1/(a_{n-1} + ... + 1/a_1); the diagram is built from twist blocks
// applied innermost first, a block being horizontal (twisting endpoints 2,3)
// or vertical (twisting endpoints 1,2) so that the outermost block a_n is
// horizontal.  Odd-length vectors start from the 0-tangle, even-length ones
// from the infinity tangle; a coloring transfer argument shows this is the
// unique reading that reproduces the slope formula on boundary colorings.

#include <cstdint>
#include <string>
#include <vector>

#include "moveq/coloring.hpp"
#include "moveq/diagram.hpp"
#include "moveq/fraction.hpp"
#include "moveq/zk.hpp"

namespace moveq {

inline Fraction slope(const std::vector<std::int64_t>& conway) {
  if (conway.empty()) throw std::invalid_argument("empty Conway vector");
  Fraction f(conway.front(), 1);
  for (std::size_t i = 1; i < conway.size(); ++i)
    f = f.inverse().plus_int(conway[i]);
  return f;
}

struct RationalTangleSpec {
  std::vector<std::int64_t> conway;
  Fraction slope_value;

  explicit RationalTangleSpec(std::vector<std::int64_t> c)
      : conway(std::move(c)), slope_value(slope(conway)) {}

  std::string str() const {
    std::string s = "T(";
    for (std::size_t i = 0; i < conway.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(conway[i]);
    }
    return s + ")";
  }
};

namespace detail {

// mutable 2-tangle under twist construction
struct TangleBuilder {
  std::vector<Crossing> crossings;
  std::array<int, 4> bnd{};  // edge at endpoints 1..4
  int next = 1;

  int fresh() { return next++; }

  void start_zero() {
    const int a = fresh(), b = fresh();
    bnd = {a, a, b, b};
  }
  void start_infinity() {
    const int a = fresh(), b = fresh();
    bnd = {a, b, b, a};
  }

  // one half-twist of endpoints 2,3 on the east side
  void h_twist(int sign) {
    const int u = bnd[1], v = bnd[2];
    const int e2 = fresh(), e3 = fresh();
    if (sign > 0)
      crossings.push_back(Crossing(e2, e3, v, u));
    else
      crossings.push_back(Crossing(u, e2, e3, v));
    bnd[1] = e2;
    bnd[2] = e3;
  }

  // one half-twist of endpoints 1,2 at the bottom
  void v_twist(int sign) {
    const int p1 = bnd[0], p2 = bnd[1];
    const int e1 = fresh(), e2 = fresh();
    if (sign > 0)
      crossings.push_back(Crossing(e2, p2, p1, e1));
    else
      crossings.push_back(Crossing(e1, e2, p2, p1));
    bnd[0] = e1;
    bnd[1] = e2;
  }

  Diagram finish(const std::string& name) const {
    return Diagram::make(name, crossings, {}, {bnd[0], bnd[1], bnd[2], bnd[3]});
  }
};

}  // namespace detail

inline Diagram build_tangle(const RationalTangleSpec& spec, const std::string& name = "") {
  const auto& a = spec.conway;
  const int n = static_cast<int>(a.size());
  detail::TangleBuilder tb;
  if (n % 2)
    tb.start_zero();
  else
    tb.start_infinity();
  for (int i = 0; i < n; ++i) {
    const bool horizontal = (n - 1 - i) % 2 == 0;
    const int sign = a[i] >= 0 ? 1 : -1;
    for (std::int64_t t = 0; t < (a[i] >= 0 ? a[i] : -a[i]); ++t) {
      if (horizontal)
        tb.h_twist(sign);
      else
        tb.v_twist(sign);
    }
  }
  return tb.finish(name.empty() ? spec.str() : name);
}

inline Fraction mq_to_slope(std::int64_t m, std::int64_t q) {
  if (q == 0)
    throw std::invalid_argument("(m,0) is a plain m-move; use an n-move instead");
  return Fraction(m * q + 1, q);
}

// Conway vector realizing a slope (continued-fraction digits, outermost first)
inline std::vector<std::int64_t> slope_to_conway(const Fraction& f) {
  if (f.is_infinite()) return {0, 0};
  std::vector<std::int64_t> digits;
  std::int64_t num = f.num, den = f.den;
  while (true) {
    const std::int64_t a = num / den;  // truncated division
    digits.push_back(a);
    const std::int64_t rem = num - a * den;
    if (rem == 0) break;
    num = den;
    den = rem;
    if (den < 0) {
      den = -den;
      num = -num;
    }
  }
  std::reverse(digits.begin(), digits.end());
  return digits;
}

// The paper's boundary relations for a rational p/q-tangle, evaluated on the
// whole coloring space mod r.  With corners x1..x4 counterclockwise from
// bottom-left, the colorings satisfy q(x1 - x2) = p(x3 - x2) and
// x4 = x3 + x1 - x2.
inline bool slope_relation_check(const RationalTangleSpec& spec, std::int64_t r) {
  if (!is_prime(r)) throw std::domain_error("prime required");
  auto t = build_tangle(spec);
  auto cs = coloring_space(t, r);
  const auto& basis = cs.basis->vectors;
  const int dim = static_cast<int>(basis.size());
  std::int64_t p = spec.slope_value.num % r, q = spec.slope_value.den % r;
  std::vector<std::int64_t> coef(dim, 0);
  while (true) {
    std::array<std::int64_t, 4> x{};
    for (int i = 0; i < 4; ++i) {
      const int arc = cs.arc_index.arc_of.at(t.boundary[i]);
      std::int64_t acc = 0;
      for (int j = 0; j < dim; ++j) acc += coef[j] * basis[j][arc];
      x[i] = mod_reduce(acc, r);
    }
    if (mod_reduce(q * (x[0] - x[1]) - p * (x[2] - x[1]), r) != 0) return false;
    if (mod_reduce(x[3] - (x[2] + x[0] - x[1]), r) != 0) return false;
    int i = 0;
    while (i < dim && ++coef[i] == r) coef[i++] = 0;
    if (i == dim) break;
  }
  return true;
}

}  // namespace moveq
