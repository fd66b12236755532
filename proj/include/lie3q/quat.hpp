#pragma once

// Quaternion algebras (alpha, beta | Q) with i^2 = alpha, j^2 = beta, ij = -ji,
// and the algebra H(s) = Q ⊕ s attached to a 3-dimensional simple Lie algebra.

#include <array>
#include <string>
#include <vector>

#include "lie3q/lie3.hpp"

namespace lie3q {

class QuatAlg {
 public:
  QuatAlg(Rat alpha, Rat beta) : alpha_(std::move(alpha)), beta_(std::move(beta)) {
    if (alpha_.is_zero() || beta_.is_zero()) throw Error(Errc::ZeroInput, "quaternion algebra needs alpha, beta != 0");
  }

  const Rat& alpha() const { return alpha_; }
  const Rat& beta() const { return beta_; }
  std::string str() const { return "(" + alpha_.str() + "," + beta_.str() + "|Q)"; }

  friend bool operator==(const QuatAlg&, const QuatAlg&) = default;

 private:
  Rat alpha_;
  Rat beta_;
};

/// a + b i + c j + d ij.
struct QuatElt {
  Rat a, b, c, d;

  static QuatElt one() { return {Rat(1), {}, {}, {}}; }
  static QuatElt i() { return {{}, Rat(1), {}, {}}; }
  static QuatElt j() { return {{}, {}, Rat(1), {}}; }
  static QuatElt ij() { return {{}, {}, {}, Rat(1)}; }

  Vec<4> coords() const { return {a, b, c, d}; }
  static QuatElt from_coords(const Vec<4>& v) { return {v[0], v[1], v[2], v[3]}; }

  friend QuatElt operator+(const QuatElt& x, const QuatElt& y) { return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d}; }
  friend QuatElt operator-(const QuatElt& x, const QuatElt& y) { return {x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d}; }
  friend QuatElt operator*(const Rat& s, const QuatElt& x) { return {s * x.a, s * x.b, s * x.c, s * x.d}; }
  friend bool operator==(const QuatElt&, const QuatElt&) = default;

  std::string str() const { return a.str() + " + " + b.str() + "i + " + c.str() + "j + " + d.str() + "ij"; }
};

/// Product from i^2 = alpha, j^2 = beta, ij = -ji; so (ij)^2 = -alpha beta,
/// i(ij) = alpha j, (ij)i = -alpha j, j(ij) = -beta i, (ij)j = beta i.
inline QuatElt mul(const QuatAlg& A, const QuatElt& x, const QuatElt& y) {
  const Rat& al = A.alpha();
  const Rat& be = A.beta();
  return {
      x.a * y.a + al * x.b * y.b + be * x.c * y.c - al * be * x.d * y.d,
      x.a * y.b + x.b * y.a - be * x.c * y.d + be * x.d * y.c,
      x.a * y.c + x.c * y.a + al * x.b * y.d - al * x.d * y.b,
      x.a * y.d + x.d * y.a + x.b * y.c - x.c * y.b,
  };
}

inline QuatElt conj(const QuatElt& x) { return {x.a, -x.b, -x.c, -x.d}; }

/// a^2 - alpha b^2 - beta c^2 + alpha beta d^2.
inline Rat norm(const QuatAlg& A, const QuatElt& x) {
  const Rat& al = A.alpha();
  const Rat& be = A.beta();
  return x.a * x.a - al * x.b * x.b - be * x.c * x.c + al * be * x.d * x.d;
}

/// Multiplication table of a 4-dimensional algebra: table[i][j] = e_i e_j.
using MulTable = std::array<std::array<Vec<4>, 4>, 4>;

inline Vec<4> table_mul(const MulTable& t, const Vec<4>& x, const Vec<4>& y) {
  Vec<4> r;
  for (std::size_t i = 0; i < 4; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < 4; ++j) {
      if (y[j].is_zero()) continue;
      r = r + (x[i] * y[j]) * t[i][j];
    }
  }
  return r;
}

inline MulTable basis_table(const QuatAlg& A) {
  const std::array<QuatElt, 4> e{QuatElt::one(), QuatElt::i(), QuatElt::j(), QuatElt::ij()};
  MulTable t;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) t[i][j] = mul(A, e[i], e[j]).coords();
  return t;
}

inline bool is_associative(const MulTable& t) {
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      for (std::size_t k = 0; k < 4; ++k)
        if (table_mul(t, t[i][j], unit_vector<4>(k)) != table_mul(t, unit_vector<4>(i), t[j][k])) return false;
  return true;
}

/// The algebra H(s) = Q ⊕ s built from a simple Lie algebra.
struct LieQuaternion {
  /// Basis {1, e1, e2, e3}; for v, w in s, v.w = K(v,w)/8 + [v,w]/2.
  MulTable table;
  /// (-beta, -alpha | Q) where s ≅ L(alpha, beta).
  QuatAlg identified;
  /// Columns are the images of 1, i, j, ij in the {1, e1, e2, e3} basis;
  /// i = 2x, j = 2y, ij = 2z for the standard basis x, y, z of s.
  Mat<4> embedding;
};

inline LieQuaternion from_lie(const Lie3& l) {
  const Mat3 g = killing(l);
  if (det(g).is_zero()) throw Error(Errc::NotSimple, "H(s) needs a simple Lie algebra");
  MulTable t{};
  t[0][0][0] = Rat(1);
  for (std::size_t k = 1; k < 4; ++k) {
    t[0][k][k] = Rat(1);
    t[k][0][k] = Rat(1);
  }
  const Rat eighth(Int(1), Int(8));
  const Rat half(Int(1), Int(2));
  for (std::size_t v = 0; v < 3; ++v)
    for (std::size_t w = 0; w < 3; ++w) {
      Vec<4> prod;
      prod[0] = g[v][w] * eighth;
      const LieVec br = l.basis_bracket(v, w);
      for (std::size_t k = 0; k < 3; ++k) prod[k + 1] = half * br[k];
      t[v + 1][w + 1] = prod;
    }

  const Standardization s = standardize(l);
  Mat<4> emb{};
  emb[0][0] = Rat(1);
  for (std::size_t c = 0; c < 3; ++c)
    for (std::size_t r = 0; r < 3; ++r) emb[r + 1][c + 1] = Rat(2) * s.basis[r][c];
  return {t, QuatAlg(-s.params.beta(), -s.params.alpha()), emb};
}

/// Im(alpha, beta | Q) under the commutator is L(-beta, -alpha).
inline LParams im_to_lie(const QuatAlg& A) { return LParams(-A.beta(), -A.alpha()); }

/// Places where (alpha, beta | Q) is a division algebra.
inline std::vector<Place> ramification_set(const QuatAlg& A) {
  std::vector<Place> out;
  for (const Place& v : relevant_places({A.alpha(), A.beta()}))
    if (hilbert(A.alpha(), A.beta(), v) == Symbol::Minus) out.push_back(v);
  return out;
}

inline bool is_division_algebra(const QuatAlg& A) { return !ramification_set(A).empty(); }

}  // namespace lie3q
