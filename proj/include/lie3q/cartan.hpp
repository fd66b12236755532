#pragma once

// Involutions of sl(2, Q), the graded construction s' = l ⊕ λp, and the
// obtainability criteria for non-split algebras over Q and Q_p.

#include <optional>
#include <string>
#include <vector>

#include "lie3q/lie3.hpp"

namespace lie3q {

/// The involution of sl(2, Q) with h -> -h, e -> a f, f -> e / a, in the
/// basis {h, e, f} of sl2_hef().
class CartanReflection {
 public:
  explicit CartanReflection(Rat a) : a_(std::move(a)) {
    if (a_.is_zero()) throw Error(Errc::ZeroInput, "reflection parameter must be nonzero");
  }

  const Rat& a() const { return a_; }

  /// Columns are the images of h, e, f.
  Mat3 matrix() const {
    Mat3 m;
    m[0][0] = Rat(-1);
    m[2][1] = a_;
    m[1][2] = a_.inverse();
    return m;
  }

  /// Spans the fixed line.
  LieVec fixed_vector() const { return {Rat(0), Rat(1), a_}; }

  friend bool operator==(const CartanReflection&, const CartanReflection&) = default;

 private:
  Rat a_;
};

inline bool is_automorphism(const Lie3& l, const Mat3& m) {
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j)
      if (m * l.basis_bracket(i, j) != l.bracket(column(m, i), column(m, j))) return false;
  return true;
}

/// K(x, x) for the fixed vector x = e + a f; equals 8a.
inline Rat fixed_norm(const CartanReflection& s) {
  const LieVec x = s.fixed_vector();
  return form_value(killing(sl2_hef()), x, x);
}

/// sigma is of Cartan type iff K(x, x) is not a sum of two squares.
inline bool is_cartan_type(const CartanReflection& s) { return !is_sum_two_squares(fixed_norm(s)); }

/// Reduces an arbitrary involutive automorphism of sl(2, Q) (matrix in the
/// {h, e, f} basis) to the reflection with the same fixed-vector norm, which
/// is conjugate to it. Matrices already of reflection form return their own
/// a; otherwise a is determined up to a square factor.
inline CartanReflection reflection_from_matrix(const Mat3& m) {
  const Lie3 sl2 = sl2_hef();
  if (!is_automorphism(sl2, m)) throw Error(Errc::NotInvolutiveAutomorphism, "matrix is not an automorphism of sl(2)");
  if (m * m != identity<3>()) throw Error(Errc::NotInvolutiveAutomorphism, "matrix does not square to the identity");
  if (m == identity<3>()) throw Error(Errc::NotInvolutiveAutomorphism, "identity is not a non-trivial involution");
  if (!m[2][1].is_zero() && m == CartanReflection(m[2][1]).matrix()) return CartanReflection(m[2][1]);
  Mat3 shifted = m;
  for (std::size_t i = 0; i < 3; ++i) shifted[i][i] -= Rat(1);
  const auto fixed = kernel(shifted);
  if (fixed.size() != 1) throw Error(Errc::NotInvolutiveAutomorphism, "fixed space is not a line");
  const LieVec& x = fixed.front();
  const Rat norm = form_value(killing(sl2), x, x);
  if (norm.is_zero()) throw Error(Errc::NotInvolutiveAutomorphism, "fixed line is isotropic");
  return CartanReflection(norm / Rat(8));
}

/// Equivalent iff the fixed-vector norms agree in Q* / Q*_{-1}.
inline bool equivalent_involutions(const CartanReflection& s, const CartanReflection& s2) {
  if (!is_cartan_type(s) || !is_cartan_type(s2))
    throw Error(Errc::NotCartanType, "equivalence is defined for Cartan-type involutions only");
  return is_sum_two_squares(s.a() / s2.a());
}

/// s' = l ⊕ λp in the basis u1 = (e + af)/2, u2 = λh/2, u3 = λ(e - af)/2.
struct ObtainedAlgebra {
  Rat a;
  /// Λ = K(x, x)/2 = 4a.
  Rat lambda;
  Lie3 algebra;
  LParams params;
};

namespace detail {

/// even + λ odd with both parts in sl(2) coordinates; λ^2 acts as Λ.
struct Graded {
  LieVec even;
  LieVec odd;
};

inline Graded graded_bracket(const Lie3& sl2, const Rat& lambda_sq, const Graded& u, const Graded& v) {
  return {sl2.bracket(u.even, v.even) + lambda_sq * sl2.bracket(u.odd, v.odd),
          sl2.bracket(u.odd, v.even) + sl2.bracket(u.even, v.odd)};
}

inline ObtainedAlgebra build_graded(const CartanReflection& s) {
  const Lie3 sl2 = sl2_hef();
  const Rat& a = s.a();
  const Rat lambda_sq = fixed_norm(s) / Rat(2);
  if (is_square(lambda_sq))
    throw Error(Errc::HypothesisViolated, "K(x,x)/2 = " + lambda_sq.str() + " is a square");

  const Rat half(Int(1), Int(2));
  const std::array<Graded, 3> u{
      Graded{half * LieVec{Rat(0), Rat(1), a}, LieVec{}},
      Graded{LieVec{}, half * LieVec{Rat(1), Rat(0), Rat(0)}},
      Graded{LieVec{}, half * LieVec{Rat(0), Rat(1), -a}},
  };
  auto coords = [&](const Graded& g) {
    LieVec c{Rat(2) * g.even[1], Rat(2) * g.odd[0], Rat(2) * g.odd[1]};
    Graded back{c[0] * u[0].even, c[1] * u[1].odd + c[2] * u[2].odd};
    if (back.even != g.even || back.odd != g.odd)
      throw Error(Errc::InternalInconsistency, "graded bracket left the span of u1, u2, u3");
    return c;
  };

  Lie3::Table t{};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) t[i][j] = coords(graded_bracket(sl2, lambda_sq, u[i], u[j]));
  Lie3 algebra = Lie3::from_table(t);
  LParams params = standardize(algebra).params;
  return {a, lambda_sq, std::move(algebra), std::move(params)};
}

}  // namespace detail

inline ObtainedAlgebra construct(const CartanReflection& s) {
  if (!is_cartan_type(s))
    throw Error(Errc::NotCartanType, "K(x,x) = " + fixed_norm(s).str() + " is a sum of two squares");
  return detail::build_graded(s);
}

/// [u2,u1] = u3, [u1,u3] = -a u2, [u3,u2] = -Λ u1.
inline bool matches_structure_table(const ObtainedAlgebra& o) {
  const Lie3& l = o.algebra;
  return l.basis_bracket(1, 0) == basis_vector(2) && l.basis_bracket(0, 2) == -o.a * basis_vector(1) &&
         l.basis_bracket(2, 1) == -o.lambda * basis_vector(0);
}

/// Both sides of the splitness criterion for the constructed algebra,
/// computed independently.
struct SplitComparison {
  bool constructed_split;
  bool fixed_norm_sum_of_two_squares;

  bool consistent() const { return constructed_split == fixed_norm_sum_of_two_squares; }
};

/// Any non-trivial reflection with K(x,x)/2 a non-square, Cartan type or not.
inline SplitComparison split_verdict(const CartanReflection& s) {
  const ObtainedAlgebra o = detail::build_graded(s);
  return {is_split(o.params), is_sum_two_squares(fixed_norm(s))};
}

struct LegendreWitness {
  Prime p;
  Symbol legendre;

  friend bool operator==(const LegendreWitness&, const LegendreWitness&) = default;
};

enum class DeltaSource { Diagonalization, Ramification, None };

struct ObtainReport {
  bool split = false;
  /// Isomorphic to L(-Δ, -Δ) for some Δ.
  bool cond_c = false;
  /// Killing form represents -2.
  bool cond_d = false;
  bool legendre_route = false;
  /// One entry per prime p = 1 (mod 4) dividing alpha or beta, ascending.
  std::vector<LegendreWitness> witnesses;
  std::optional<Rat> delta;
  DeltaSource delta_source = DeltaSource::None;

  bool obtainable() const { return !split && cond_d; }
};

/// For every prime q = 1 (mod 4) with v_q(alpha) or v_q(beta) nonzero, the
/// Legendre symbol of alpha^{v_q(beta)} / beta^{v_q(alpha)} mod q.
inline std::vector<LegendreWitness> legendre_witnesses(const LParams& p) {
  std::set<Prime> primes;
  for (const auto& f : factor(p.alpha()).factors)
    if (f.prime % 4 == 1) primes.insert(f.prime);
  for (const auto& f : factor(p.beta()).factors)
    if (f.prime % 4 == 1) primes.insert(f.prime);
  std::vector<LegendreWitness> out;
  for (Prime q : primes) {
    const Rat t = pow(p.alpha(), valuation(p.beta(), q)) / pow(p.beta(), valuation(p.alpha(), q));
    // t is a q-adic unit, so its residue is num * den^{-1}
    const std::uint64_t residue = detail::unit_residue(t, q);
    out.push_back({q, legendre(detail::from_u64(residue), q)});
  }
  return out;
}

namespace detail {

/// Deterministic search for w with K(w, w) = -2 t^2 among small integer
/// vectors; returns δ with K ≅ <-2, δ, δ>.
inline std::optional<Rat> minus_two_diagonalization(const LParams& p) {
  const DiagForm k = killing_form(p);
  constexpr int box = 3;
  for (int s = 1; s <= 3 * box; ++s)
    for (int x = -box; x <= box; ++x)
      for (int y = -box; y <= box; ++y)
        for (int z = -box; z <= box; ++z) {
          if (std::abs(x) + std::abs(y) + std::abs(z) != s) continue;
          const Rat v = k[0] * Rat(x * x) + k[1] * Rat(y * y) + k[2] * Rat(z * z);
          if (v.is_zero() || !is_square(v / Rat(-2))) continue;
          // complement of w = (x,y,z) in the diagonal metric
          const LieVec w{Rat(x), Rat(y), Rat(z)};
          Mat3 row{};
          for (std::size_t i = 0; i < 3; ++i) row[0][i] = k[i] * w[i];
          const auto perp = kernel(row);
          for (const LieVec& cand : {perp[0], perp[1], perp[0] + perp[1]}) {
            Rat n;
            for (std::size_t i = 0; i < 3; ++i) n += k[i] * cand[i] * cand[i];
            if (!n.is_zero()) return n;
          }
        }
  return std::nullopt;
}

/// Δ = sign * (primes p = 3 mod 4 where L ramifies); the only class that
/// can satisfy L ≅ L(-Δ, -Δ).
inline Rat ramification_delta(const LParams& p) {
  Int d = 1;
  for (const Place& v : ramification(p)) {
    if (v.is_real()) d = -d;
    else if (v.prime() % 4 == 3) d *= from_u64(v.prime());
  }
  return Rat(d);
}

}  // namespace detail

inline ObtainReport obtain_report(const LParams& p) {
  ObtainReport r;
  r.split = is_split(p);
  r.cond_d = represents(killing_form(p), Rat(-2));
  r.witnesses = legendre_witnesses(p);
  r.legendre_route = std::all_of(r.witnesses.begin(), r.witnesses.end(),
                                 [](const LegendreWitness& w) { return w.legendre == Symbol::Plus; });

  if (auto delta = detail::minus_two_diagonalization(p)) {
    const Rat d = *delta / Rat(2);
    if (!is_isomorphic(p, LParams(-d, -d)))
      throw Error(Errc::InternalInconsistency, "-2 diagonalization does not give L(-Δ,-Δ) for " + p.str());
    r.cond_c = true;
    r.delta = d;
    r.delta_source = DeltaSource::Diagonalization;
  } else {
    const Rat d = detail::ramification_delta(p);
    if (is_isomorphic(p, LParams(-d, -d))) {
      r.cond_c = true;
      r.delta = d;
      r.delta_source = DeltaSource::Ramification;
    }
  }

  if (!r.split && !(r.cond_c == r.cond_d && r.cond_d == r.legendre_route))
    throw Error(Errc::InternalInconsistency, "obtainability criteria disagree for " + p.str());
  return r;
}

namespace detail {

inline void require_odd_prime_place(Prime q) {
  if (q == 2) throw Error(Errc::EvenPrime, "the criterion covers odd primes only");
  if (!is_prime_u64(q)) throw Error(Errc::EvenOrCompositeModulus, std::to_string(q) + " is not prime");
}

}  // namespace detail

/// Local representation of -2 by the Killing form: isotropy of K ⊥ <2> at q.
inline bool represents_minus_two_locally(const LParams& p, const Place& v) {
  return is_isotropic_local(killing_form(p).perp(DiagForm{Rat(2)}), v);
}

/// Over Q_q (q odd) the non-split algebra is obtainable iff q = 3 (mod 4).
inline bool obtainable_over_Qp(const LParams& p, Prime q) {
  detail::require_odd_prime_place(q);
  const Place v = Place::certified(q);
  if (hilbert(-p.alpha(), -p.beta(), v) == Symbol::Plus)
    throw Error(Errc::SplitLocally, p.str() + " is split over Q_" + std::to_string(q));
  const bool by_residue_field = q % 4 == 3;
  if (by_residue_field != represents_minus_two_locally(p, v))
    throw Error(Errc::InternalInconsistency, "local criterion disagrees with local isotropy of K ⊥ <2>");
  return by_residue_field;
}

/// -1 is a square in Q_q (q odd) iff q = 1 (mod 4).
inline bool minus_one_square_Qp(Prime q) {
  detail::require_odd_prime_place(q);
  const bool r = q % 4 == 1;
  if (r != (legendre(Int(-1), q) == Symbol::Plus))
    throw Error(Errc::InternalInconsistency, "Euler criterion disagrees for -1");
  return r;
}

}  // namespace lie3q
