#pragma once

// Factorization, p-adic valuations, square classes and the sums-of-two-squares
// subgroup of Q*. All primality decisions go through trial division.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lie3q/error.hpp"
#include "lie3q/rat.hpp"

namespace lie3q {

using Prime = std::uint64_t;

namespace detail {

inline std::atomic<std::uint64_t>& factor_bound_storage() {
  static std::atomic<std::uint64_t> bound{std::uint64_t{1} << 63};
  return bound;
}

static_assert(sizeof(unsigned long) == sizeof(std::uint64_t), "LP64 target expected");

// caller guarantees 0 <= z < 2^64
inline std::uint64_t to_u64(const Int& z) { return mpz_get_ui(z.get_mpz_t()); }

inline Int from_u64(std::uint64_t v) { return Int(static_cast<unsigned long>(v)); }

inline void require_nonzero(const Rat& r, const char* what) {
  if (r.is_zero()) throw Error(Errc::ZeroInput, std::string(what) + " requires a nonzero argument");
}

/// Trial division of n > 0, appending (p, sign * e) pairs.
inline void trial_divide(std::uint64_t n, int sign, std::vector<std::pair<std::uint64_t, long>>& out) {
  auto strip = [&](std::uint64_t p) {
    long e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) out.emplace_back(p, sign * e);
  };
  strip(2);
  strip(3);
  for (std::uint64_t p = 5; p <= n / p; p += 6) {
    strip(p);
    strip(p + 2);
  }
  if (n > 1) out.emplace_back(n, sign);
}

}  // namespace detail

/// Largest |numerator| and denominator accepted by factor(). Default 2^63.
inline std::uint64_t factor_bound() { return detail::factor_bound_storage().load(std::memory_order_relaxed); }

inline void set_factor_bound(std::uint64_t bound) {
  detail::factor_bound_storage().store(bound, std::memory_order_relaxed);
}

inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  if (n % 3 == 0) return n == 3;
  for (std::uint64_t d = 5; d <= n / d; d += 6)
    if (n % d == 0 || n % (d + 2) == 0) return false;
  return true;
}

struct PrimePower {
  Prime prime;
  long exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// sign * prod p^e with distinct primes ascending and e != 0.
struct Factorization {
  int sign = 1;
  std::vector<PrimePower> factors;

  Rat value() const {
    Rat acc(sign);
    for (const auto& [p, e] : factors) acc *= pow(Rat(detail::from_u64(p)), e);
    return acc;
  }

  long exponent_of(Prime p) const {
    for (const auto& f : factors)
      if (f.prime == p) return f.exponent;
    return 0;
  }

  friend bool operator==(const Factorization&, const Factorization&) = default;
};

inline Factorization factor(const Rat& r) {
  detail::require_nonzero(r, "factor");
  const Int bound = detail::from_u64(factor_bound());
  Int n = r.num();
  n = abs(n);
  Int d = r.den();
  if (n > bound || d > bound)
    throw Error(Errc::BoundExceeded, "cannot factor " + r.str() + ": exceeds factorization bound");

  std::vector<std::pair<std::uint64_t, long>> raw;
  detail::trial_divide(detail::to_u64(n), +1, raw);
  detail::trial_divide(detail::to_u64(d), -1, raw);

  Factorization f;
  f.sign = r.sign();
  for (const auto& [p, e] : raw) f.factors.push_back({p, e});
  std::sort(f.factors.begin(), f.factors.end(),
            [](const PrimePower& a, const PrimePower& b) { return a.prime < b.prime; });
  return f;
}

/// Exponent of p in r. p must be prime.
inline long valuation(const Rat& r, Prime p) {
  detail::require_nonzero(r, "valuation");
  Int pz = detail::from_u64(p);
  Int rest;
  long up = static_cast<long>(mpz_remove(rest.get_mpz_t(), r.num().get_mpz_t(), pz.get_mpz_t()));
  long down = static_cast<long>(mpz_remove(rest.get_mpz_t(), r.den().get_mpz_t(), pz.get_mpz_t()));
  return up - down;
}

/// r / p^valuation(r, p).
inline Rat unit_part(const Rat& r, Prime p) {
  detail::require_nonzero(r, "unit_part");
  return r / pow(Rat(detail::from_u64(p)), valuation(r, p));
}

/// The squarefree integer s with r/s a rational square; keeps the sign.
inline Rat squarefree_part(const Rat& r) {
  Factorization f = factor(r);
  Int s = f.sign;
  for (const auto& [p, e] : f.factors)
    if (e % 2 != 0) s *= detail::from_u64(p);
  return Rat(s);
}

inline bool is_square(const Rat& r) {
  if (r.sign() < 0) return false;
  if (r.is_zero()) return true;
  return mpz_perfect_square_p(r.num().get_mpz_t()) && mpz_perfect_square_p(r.den().get_mpz_t());
}

/// Membership in Q*_{-1}, the nonzero sums of two rational squares: r > 0
/// and every prime p = 3 (mod 4) occurs to an even power.
inline bool is_sum_two_squares(const Rat& r) {
  detail::require_nonzero(r, "is_sum_two_squares");
  if (r.sign() < 0) return false;
  for (const auto& [p, e] : factor(r).factors)
    if (p % 4 == 3 && e % 2 != 0) return false;
  return true;
}

/// Bounded search for x = u/w, y = v/w with x^2 + y^2 = r and 1 <= w <= max_den.
/// Used for human-readable witnesses; membership itself is decided by
/// is_sum_two_squares.
inline std::optional<std::pair<Rat, Rat>> find_two_squares(const Rat& r, unsigned max_den = 50) {
  if (r.sign() <= 0) return std::nullopt;
  for (unsigned w = 1; w <= max_den; ++w) {
    Rat target = r * Rat(w) * Rat(w);
    if (!target.is_integer()) continue;
    Int t = target.num();
    for (Int u = 0; 2 * u * u <= t; ++u) {
      Int rest = t - u * u;
      if (mpz_perfect_square_p(rest.get_mpz_t())) {
        Int v = sqrt(rest);
        return std::make_pair(Rat(Int(v), Int(w)), Rat(Int(u), Int(w)));
      }
    }
  }
  return std::nullopt;
}

/// A place of Q: the real place or a finite prime.
class Place {
 public:
  static Place real() { return Place(0); }

  static Place finite(Prime p) {
    if (!is_prime_u64(p)) throw Error(Errc::InvalidPlace, std::to_string(p) + " is not prime");
    return Place(p);
  }

  /// For primes already certified by factor(); skips the primality check.
  static Place certified(Prime p) { return Place(p); }

  /// "inf" or a decimal prime.
  static Place parse(std::string_view text) {
    if (text == "inf" || text == "oo" || text == "infinity") return real();
    if (text.empty() || text.size() > 19) throw Error(Errc::ParseError, "bad place '" + std::string(text) + "'");
    std::uint64_t p = 0;
    for (char c : text) {
      if (c < '0' || c > '9') throw Error(Errc::ParseError, "bad place '" + std::string(text) + "'");
      p = p * 10 + static_cast<std::uint64_t>(c - '0');
    }
    return finite(p);
  }

  bool is_real() const { return p_ == 0; }
  Prime prime() const { return p_; }
  std::string str() const { return is_real() ? "inf" : std::to_string(p_); }

  friend auto operator<=>(const Place&, const Place&) = default;

 private:
  explicit Place(Prime p) : p_(p) {}
  Prime p_;
};

}  // namespace lie3q
