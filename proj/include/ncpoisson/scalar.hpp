#pragma once

#include <compare>
#include <iosfwd>
#include <string>

#include <gmpxx.h>

namespace ncpoisson {

/// Exact rational number over arbitrary-precision integers.
///
/// Every value is kept in lowest terms with a positive denominator, so
/// equality is plain representation equality and serialized forms are
/// canonical.
class Scalar {
public:
  Scalar() : m_value(0) {}
  Scalar(long numerator) : m_value(numerator) {}
  Scalar(long numerator, long denominator);
  explicit Scalar(mpq_class value);

  /// Parses "num" or "num/den" with an optional leading sign.
  /// Rejects anything else with ParseError.
  static Scalar parse(const std::string& text);

  bool is_zero() const { return m_value == 0; }
  bool is_integer() const { return m_value.get_den() == 1; }

  /// Canonical text form: "num" when the denominator is 1, else "num/den".
  std::string str() const;

  const mpq_class& value() const { return m_value; }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Scalar& other);
  Scalar& operator/=(const Scalar& other);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.m_value == b.m_value; }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return a.m_value != b.m_value; }
  friend bool operator<(const Scalar& a, const Scalar& b) { return a.m_value < b.m_value; }

  friend std::ostream& operator<<(std::ostream& os, const Scalar& s);

private:
  mpq_class m_value;
};

/// (-1)^exponent as a Scalar-friendly int.
inline int sign_pow(long exponent) { return (exponent % 2 == 0) ? 1 : -1; }

} // namespace ncpoisson
