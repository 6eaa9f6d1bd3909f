#pragma once

#include <string>

#include "segopt/rational.hpp"

namespace segopt {

// Exact value base + coefficient * sqrt(radicand), coefficient and radicand
// non-negative. Comparisons square both sides, so no irrational is ever
// evaluated.
struct Bound {
  Rational base;
  Rational coefficient;
  Rational radicand;

  static Bound rational(Rational value) { return Bound{std::move(value), Rational(0), Rational(0)}; }

  // value >= base + coefficient * sqrt(radicand)
  [[nodiscard]] bool satisfied_by(const Rational& value) const;
  // Smallest integer satisfying the bound.
  [[nodiscard]] std::int64_t ceiling() const;
  [[nodiscard]] double approx() const;
  // "n/4", or "base+coef*sqrt(r)" when an irrational part is present.
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const Bound&, const Bound&) = default;
};

}  // namespace segopt
