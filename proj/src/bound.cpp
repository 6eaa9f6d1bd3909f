#include "segopt/bound.hpp"

#include <cmath>
#include <stdexcept>

namespace segopt {

bool Bound::satisfied_by(const Rational& value) const {
  if (coefficient.sign() < 0 || radicand.sign() < 0) throw std::domain_error("bound with negative root term");
  Rational slack = value - base;
  if (slack.sign() < 0) return false;
  if (coefficient.sign() == 0 || radicand.sign() == 0) return true;
  return slack * slack >= coefficient * coefficient * radicand;
}

std::int64_t Bound::ceiling() const {
  auto k = static_cast<std::int64_t>(std::floor(approx())) - 1;
  while (!satisfied_by(Rational(k))) ++k;
  return k;
}

double Bound::approx() const { return base.to_double() + coefficient.to_double() * std::sqrt(radicand.to_double()); }

std::string Bound::to_string() const {
  if (coefficient.sign() == 0 || radicand.sign() == 0) return base.to_string();
  return base.to_string() + "+" + coefficient.to_string() + "*sqrt(" + radicand.to_string() + ")";
}

}  // namespace segopt
