#pragma once

// Exact fractions for tangle slopes.  Denominators are kept non-negative and
// the formal value 1/0 stands for the slope of the infinity tangle.

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace moveq {

struct Fraction {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Fraction() = default;
  Fraction(std::int64_t n, std::int64_t d) : num(n), den(d) { normalize(); }

  static Fraction infinity() { return Fraction(1, 0); }
  bool is_infinite() const { return den == 0; }

  void normalize() {
    if (den == 0) {
      if (num == 0) throw std::domain_error("0/0 is not a slope");
      num = 1;
      return;
    }
    if (den < 0) {
      den = -den;
      num = -num;
    }
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  Fraction inverse() const {
    if (num == 0) return infinity();
    return Fraction(den, num);
  }

  Fraction plus_int(std::int64_t a) const {
    if (is_infinite()) return *this;
    return Fraction(num + a * den, den);
  }

  Fraction negated() const { return is_infinite() ? *this : Fraction(-num, den); }

  bool operator==(const Fraction&) const = default;

  std::string str() const {
    if (is_infinite()) return "1/0";
    return std::to_string(num) + "/" + std::to_string(den);
  }
};

}  // namespace moveq
