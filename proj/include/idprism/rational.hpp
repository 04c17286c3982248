#ifndef IDPRISM_RATIONAL_HPP
#define IDPRISM_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace idprism {

/// Exact fraction in lowest terms with a positive denominator.
struct Rational
{
  std::int64_t num = 0;
  std::int64_t den = 1;

  constexpr Rational() = default;
  constexpr Rational(std::int64_t n, std::int64_t d = 1) : num(n), den(d) {
    if (d == 0)
      throw std::domain_error("zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const std::int64_t g = std::gcd(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  auto to_double() const -> double { return static_cast<double>(num) / static_cast<double>(den); }

  auto to_string() const -> std::string {
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
  }

  friend constexpr auto operator==(const Rational &, const Rational &) -> bool = default;

  friend constexpr auto operator<=>(const Rational & a, const Rational & b) -> std::strong_ordering {
    return a.num * b.den <=> b.num * a.den;
  }
};

} // namespace idprism

#endif
