#pragma once

// Legendre symbols and Hilbert symbols at every place of Q.

#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "lie3q/arith.hpp"

namespace lie3q {

enum class Symbol : int { Minus = -1, Zero = 0, Plus = 1 };

constexpr int to_int(Symbol s) { return static_cast<int>(s); }

constexpr Symbol operator*(Symbol a, Symbol b) { return static_cast<Symbol>(to_int(a) * to_int(b)); }

namespace detail {

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t acc = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) acc = mul_mod(acc, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return acc;
}

inline std::uint64_t mod_u64(const Int& a, std::uint64_t m) {
  return mpz_fdiv_ui(a.get_mpz_t(), static_cast<unsigned long>(m));
}

/// Inverse modulo an odd prime p of a residue not divisible by p.
inline std::uint64_t inv_mod_prime(std::uint64_t a, std::uint64_t p) { return pow_mod(a, p - 2, p); }

/// Residue mod p of a rational with p dividing neither numerator nor denominator.
inline std::uint64_t unit_residue(const Rat& u, std::uint64_t p) {
  return mul_mod(mod_u64(u.num(), p), inv_mod_prime(mod_u64(u.den(), p), p), p);
}

/// Euler's criterion on a residue already reduced mod the odd prime p.
inline Symbol euler_criterion(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (a == 0) return Symbol::Zero;
  return pow_mod(a, (p - 1) / 2, p) == 1 ? Symbol::Plus : Symbol::Minus;
}

inline std::uint64_t pow_mod_signed(std::uint64_t x, long e, std::uint64_t p) {
  if (e < 0) return pow_mod(inv_mod_prime(x, p), static_cast<std::uint64_t>(-e), p);
  return pow_mod(x, static_cast<std::uint64_t>(e), p);
}

inline void require_odd_prime(std::uint64_t p) {
  if (p % 2 == 0 || !is_prime_u64(p))
    throw Error(Errc::EvenOrCompositeModulus, std::to_string(p) + " is not an odd prime");
}

/// Residue mod 8 of a 2-adic unit (odd numerator and denominator).
inline unsigned dyadic_unit_mod8(const Rat& u) {
  // odd d satisfies d^2 = 1 (mod 8), so d^{-1} = d
  return static_cast<unsigned>((mod_u64(u.num(), 8) * mod_u64(u.den(), 8)) % 8);
}

}  // namespace detail

inline Symbol legendre(const Int& a, std::uint64_t p) {
  detail::require_odd_prime(p);
  return detail::euler_criterion(detail::mod_u64(a, p), p);
}

inline Symbol hilbert_real(const Rat& alpha, const Rat& beta) {
  detail::require_nonzero(alpha, "hilbert");
  detail::require_nonzero(beta, "hilbert");
  return alpha.sign() < 0 && beta.sign() < 0 ? Symbol::Minus : Symbol::Plus;
}

/// Hilbert symbol over Q_p. For odd p, with a = v_p(alpha), b = v_p(beta)
/// and unit parts u, v, this is the Legendre symbol of (-1)^{ab} u^b v^{-a}.
/// At p = 2 the closed form (-1)^{e(u)e(v) + a w(v) + b w(u)} is used with
/// e(u) = (u-1)/2 and w(u) = (u^2-1)/8 taken mod 2.
namespace detail {

inline Symbol hilbert_at_prime(const Rat& alpha, const Rat& beta, Prime p) {
  const long a = valuation(alpha, p);
  const long b = valuation(beta, p);
  const Rat u = unit_part(alpha, p);
  const Rat v = unit_part(beta, p);

  if (p == 2) {
    const unsigned u8 = detail::dyadic_unit_mod8(u);
    const unsigned v8 = detail::dyadic_unit_mod8(v);
    auto eps = [](unsigned x) { return ((x - 1) / 2) % 2; };
    auto omega = [](unsigned x) { return ((x * x - 1) / 8) % 2; };
    const long exponent = static_cast<long>(eps(u8) * eps(v8)) + (a & 1) * static_cast<long>(omega(v8)) +
                          (b & 1) * static_cast<long>(omega(u8));
    return exponent % 2 == 0 ? Symbol::Plus : Symbol::Minus;
  }

  std::uint64_t t = ((a * b) % 2 == 0) ? 1 : p - 1;
  t = detail::mul_mod(t, detail::pow_mod_signed(detail::unit_residue(u, p), b, p), p);
  t = detail::mul_mod(t, detail::pow_mod_signed(detail::unit_residue(v, p), -a, p), p);
  return euler_criterion(t, p);
}

}  // namespace detail

inline Symbol hilbert_p(const Rat& alpha, const Rat& beta, Prime p) {
  detail::require_nonzero(alpha, "hilbert");
  detail::require_nonzero(beta, "hilbert");
  if (!is_prime_u64(p)) throw Error(Errc::InvalidPlace, std::to_string(p) + " is not prime");
  return detail::hilbert_at_prime(alpha, beta, p);
}

inline Symbol hilbert(const Rat& alpha, const Rat& beta, const Place& place) {
  if (place.is_real()) return hilbert_real(alpha, beta);
  detail::require_nonzero(alpha, "hilbert");
  detail::require_nonzero(beta, "hilbert");
  return detail::hilbert_at_prime(alpha, beta, place.prime());
}

/// The real place, 2, and every odd prime where some coefficient is not a
/// unit. Hilbert symbols of these coefficients are +1 everywhere else.
inline std::vector<Place> relevant_places(std::span<const Rat> coeffs) {
  std::set<Place> places{Place::real(), Place::finite(2)};
  for (const Rat& c : coeffs) {
    detail::require_nonzero(c, "relevant_places");
    for (const auto& [p, e] : factor(c).factors)
      if (p != 2) places.insert(Place::certified(p));
  }
  return {places.begin(), places.end()};
}

inline std::vector<Place> relevant_places(std::initializer_list<Rat> coeffs) {
  return relevant_places(std::span<const Rat>(coeffs.begin(), coeffs.size()));
}

}  // namespace lie3q
