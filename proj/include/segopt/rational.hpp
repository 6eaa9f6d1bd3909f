#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace segopt {

// Exact rational number in canonical form (reduced, positive denominator).
//
// Values whose numerator and denominator fit in 64 bits are stored inline and
// handled with 128-bit intermediates; anything larger is promoted to a GMP
// rational. Promotion and demotion are transparent: two equal values compare
// equal regardless of representation.
class Rational {
 public:
  Rational() = default;

  template <std::integral T>
  Rational(T value) {  // NOLINT(google-explicit-constructor)
    if constexpr (std::is_signed_v<T>) {
      assign(static_cast<__int128>(value), 1);
    } else {
      assign(static_cast<__int128>(static_cast<unsigned __int128>(value)), 1);
    }
  }

  // Throws std::domain_error when den == 0.
  Rational(std::int64_t num, std::int64_t den);

  explicit Rational(const mpq_class& value);

  // Accepts "p", "-p", "p/q" with arbitrary-length decimal integers.
  // Throws std::invalid_argument on malformed input or a zero denominator.
  static Rational parse(std::string_view text);

  [[nodiscard]] std::string to_string() const;
  [[nodiscard]] double to_double() const;
  [[nodiscard]] mpq_class to_mpq() const;

  [[nodiscard]] bool is_integer() const;
  [[nodiscard]] int sign() const;
  [[nodiscard]] bool is_small() const { return big_ == nullptr; }

  // Midpoint of two values.
  static Rational midpoint(const Rational& a, const Rational& b);

  Rational operator-() const;
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b);
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  void assign(__int128 num, __int128 den);
  void assign(mpq_class value);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  // Immutable once built, so sharing between copies keeps value semantics.
  std::shared_ptr<const mpq_class> big_;
};

Rational abs(const Rational& r);

}  // namespace segopt
