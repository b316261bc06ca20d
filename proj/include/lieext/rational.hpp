#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "lieext/error.hpp"

namespace lieext {

/// Exact fraction in canonical form: positive denominator, coprime parts.
/// Thin value wrapper over GMP's mpq_class.
class Rational {
public:
  Rational() = default;
  Rational(std::int64_t value) : value_(static_cast<long>(value)) {}  // NOLINT: implicit by intent
  Rational(std::int64_t numerator, std::int64_t denominator) {
    detail::require(denominator != 0, "Rational: zero denominator");
    value_ = mpq_class(mpz_class(static_cast<long>(numerator)),
                       mpz_class(static_cast<long>(denominator)));
    value_.canonicalize();
  }
  explicit Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

  /// Accepts "p" or "p/q" with optional leading '-', any nonzero q, and
  /// surrounding blanks; the result is canonicalized.
  static Rational parse(std::string_view text) {
    const auto first = text.find_first_not_of(" \t");
    text = first == std::string_view::npos ? std::string_view{} : text.substr(first, text.find_last_not_of(" \t") - first + 1);
    if (!well_formed(text)) throw InvalidArgument("malformed rational: '" + std::string(text) + "'");
    mpq_class q;
    if (q.set_str(std::string(text), 10) != 0) {
      throw InvalidArgument("malformed rational: '" + std::string(text) + "'");
    }
    detail::require(q.get_den() != 0, "Rational: zero denominator in '" + std::string(text) + "'");
    q.canonicalize();
    return Rational(std::move(q));
  }

  /// Like parse, but rejects anything that is not already the canonical
  /// spelling ("2/4", "3/1", "-0", "+1" are refused).
  static Rational parse_canonical(std::string_view text) {
    Rational r = parse(text);
    if (r.to_string() != text) {
      throw InvalidArgument("non-canonical rational: '" + std::string(text) + "' (expected '" +
                            r.to_string() + "')");
    }
    return r;
  }

  [[nodiscard]] std::string to_string() const { return value_.get_str(10); }
  [[nodiscard]] double to_double() const { return value_.get_d(); }
  [[nodiscard]] bool is_zero() const { return sgn(value_) == 0; }
  [[nodiscard]] int sign() const { return sgn(value_); }
  [[nodiscard]] mpz_class numerator() const { return value_.get_num(); }
  [[nodiscard]] mpz_class denominator() const { return value_.get_den(); }
  [[nodiscard]] const mpq_class& raw() const { return value_; }

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o) {
    detail::require(!o.is_zero(), "Rational: division by zero");
    value_ /= o.value_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
  friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) < 0; }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

private:
  static bool well_formed(std::string_view text) {
    std::size_t i = 0;
    if (i < text.size() && text[i] == '-') ++i;
    auto digits = [&] {
      std::size_t start = i;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
      return i > start;
    };
    if (!digits()) return false;
    if (i == text.size()) return true;
    if (text[i] != '/') return false;
    ++i;
    return digits() && i == text.size();
  }

  mpq_class value_;
};

}  // namespace lieext
