#include "ncpoisson/scalar.hpp"

#include <cctype>
#include <ostream>

#include "ncpoisson/errors.hpp"

namespace ncpoisson {

Scalar::Scalar(long numerator, long denominator) {
  if (denominator == 0) {
    raise("ParseError", "zero denominator");
  }
  m_value = mpq_class(numerator, denominator);
  m_value.canonicalize();
}

Scalar::Scalar(mpq_class value) : m_value(std::move(value)) {
  if (m_value.get_den() == 0) {
    raise("ParseError", "zero denominator");
  }
  m_value.canonicalize();
}

Scalar Scalar::parse(const std::string& text) {
  // Accepted grammar: [+-]? digits ( "/" [+-]? digits )?
  auto is_int = [](const std::string& s) {
    if (s.empty()) return false;
    size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
  };
  std::string num = text;
  std::string den = "1";
  if (auto slash = text.find('/'); slash != std::string::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  if (!is_int(num) || !is_int(den)) {
    raise("ParseError", "malformed rational '" + text + "'");
  }
  // GMP's string constructor accepts "-" but not a leading "+".
  if (num[0] == '+') num.erase(0, 1);
  if (den[0] == '+') den.erase(0, 1);
  mpq_class value{mpz_class(num), mpz_class(den)};
  if (value.get_den() == 0) {
    raise("ParseError", "zero denominator in '" + text + "'");
  }
  value.canonicalize();
  return Scalar(std::move(value));
}

std::string Scalar::str() const {
  if (is_integer()) {
    return m_value.get_num().get_str();
  }
  return m_value.get_num().get_str() + "/" + m_value.get_den().get_str();
}

Scalar Scalar::operator-() const {
  Scalar out;
  out.m_value = -m_value;
  return out;
}

Scalar& Scalar::operator+=(const Scalar& other) {
  m_value += other.m_value;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) {
  m_value -= other.m_value;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& other) {
  m_value *= other.m_value;
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& other) {
  if (other.is_zero()) {
    raise("InvalidInput", "division by zero");
  }
  m_value /= other.m_value;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

} // namespace ncpoisson
