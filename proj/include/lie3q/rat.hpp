#pragma once

// Exact rationals over arbitrary-precision integers.

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <ostream>
#include <string>
#include <string_view>

#include "lie3q/error.hpp"

namespace lie3q {

using Int = mpz_class;

/// A reduced rational num/den with den > 0. Zero is 0/1.
class Rat {
 public:
  Rat() = default;

  template <std::signed_integral T>
  Rat(T v) : q_(static_cast<long>(v)) {}

  template <std::unsigned_integral T>
  Rat(T v) : q_(static_cast<unsigned long>(v)) {}

  Rat(const Int& v) : q_(v) {}

  Rat(const Int& num, const Int& den) {
    if (den == 0) throw Error(Errc::DivisionByZero, "rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
  }

  /// Accepts `[+-]digits[/digits]`; anything else (decimals, exponents,
  /// whitespace, empty parts) is a ParseError.
  static Rat parse(std::string_view text) {
    auto fail = [&]() -> Error {
      return Error(Errc::ParseError, "malformed rational literal '" + std::string(text) + "'");
    };
    std::string_view s = text;
    bool negative = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
      negative = s.front() == '-';
      s.remove_prefix(1);
    }
    auto slash = s.find('/');
    std::string_view num_part = s.substr(0, slash);
    std::string_view den_part = slash == std::string_view::npos ? std::string_view{} : s.substr(slash + 1);
    auto all_digits = [](std::string_view d) {
      if (d.empty()) return false;
      for (char c : d)
        if (c < '0' || c > '9') return false;
      return true;
    };
    if (!all_digits(num_part)) throw fail();
    if (slash != std::string_view::npos && !all_digits(den_part)) throw fail();
    Int num(std::string(num_part), 10);
    Int den = slash == std::string_view::npos ? Int(1) : Int(std::string(den_part), 10);
    if (den == 0) throw Error(Errc::DivisionByZero, "rational literal '" + std::string(text) + "' has zero denominator");
    if (negative) num = -num;
    return Rat(num, den);
  }

  Int num() const { return q_.get_num(); }
  Int den() const { return q_.get_den(); }
  int sign() const { return sgn(q_); }
  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }

  Rat abs() const { return Rat(mpq_class(::abs(q_))); }

  Rat inverse() const {
    if (is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero");
    mpq_class r;
    mpq_inv(r.get_mpq_t(), q_.get_mpq_t());
    return Rat(r);
  }

  std::string str() const { return q_.get_str(10); }

  Rat operator-() const { return Rat(mpq_class(-q_)); }
  Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
  Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
  Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
  Rat& operator/=(const Rat& o) {
    if (o.is_zero()) throw Error(Errc::DivisionByZero, "division by zero");
    q_ /= o.q_;
    return *this;
  }

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) { return cmp(a.q_, b.q_) == 0; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

  const mpq_class& raw() const { return q_; }

 private:
  explicit Rat(mpq_class q) : q_(std::move(q)) {}

  mpq_class q_;
};

/// r^e for any integer e; negative exponents need r != 0.
inline Rat pow(const Rat& r, long e) {
  if (e < 0) return pow(r.inverse(), -e);
  Rat acc(1);
  Rat base = r;
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

}  // namespace lie3q
