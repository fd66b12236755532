#pragma once

// Three-dimensional Lie algebras over Q given by structure constants, and
// the standard family L(alpha, beta): [x,y] = z, [y,z] = alpha x, [z,x] = beta y.

#include <array>
#include <string>
#include <vector>

#include "lie3q/linalg.hpp"
#include "lie3q/qforms.hpp"
#include "lie3q/symbols.hpp"

namespace lie3q {

using LieVec = Vec3;

inline LieVec basis_vector(std::size_t i) {
  LieVec v;
  v[i] = Rat(1);
  return v;
}

/// Parameters (alpha, beta) of L(alpha, beta); both nonzero.
class LParams {
 public:
  LParams(Rat alpha, Rat beta) : alpha_(std::move(alpha)), beta_(std::move(beta)) {
    if (alpha_.is_zero() || beta_.is_zero()) throw Error(Errc::ZeroInput, "L(alpha, beta) needs alpha, beta != 0");
  }

  const Rat& alpha() const { return alpha_; }
  const Rat& beta() const { return beta_; }
  std::string str() const { return "L(" + alpha_.str() + "," + beta_.str() + ")"; }

  friend bool operator==(const LParams&, const LParams&) = default;

 private:
  Rat alpha_;
  Rat beta_;
};

/// A 3-dimensional Lie algebra: table[i][j] holds the coordinates of [e_i, e_j].
class Lie3 {
 public:
  using Table = std::array<std::array<LieVec, 3>, 3>;

  /// Checks antisymmetry and the Jacobi identity on all basis triples.
  static Lie3 from_table(const Table& table) {
    Lie3 l(table);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        if (table[i][j] != Rat(-1) * table[j][i])
          throw Error(Errc::NotLieAlgebra, "bracket table is not antisymmetric");
    if (!l.satisfies_jacobi()) throw Error(Errc::NotLieAlgebra, "bracket table violates the Jacobi identity");
    return l;
  }

  static Lie3 abelian() { return Lie3(Table{}); }

  const LieVec& basis_bracket(std::size_t i, std::size_t j) const { return table_[i][j]; }
  const Table& table() const { return table_; }

  /// Structure constant c[i][j][k]: coefficient of e_k in [e_i, e_j].
  const Rat& sc(std::size_t i, std::size_t j, std::size_t k) const { return table_[i][j][k]; }

  LieVec bracket(const LieVec& u, const LieVec& v) const {
    LieVec r;
    for (std::size_t i = 0; i < 3; ++i) {
      if (u[i].is_zero()) continue;
      for (std::size_t j = 0; j < 3; ++j) {
        if (v[j].is_zero()) continue;
        r = r + (u[i] * v[j]) * table_[i][j];
      }
    }
    return r;
  }

  bool satisfies_jacobi() const {
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t k = 0; k < 3; ++k) {
          const LieVec a = basis_vector(i), b = basis_vector(j), c = basis_vector(k);
          LieVec s = bracket(a, bracket(b, c)) + bracket(b, bracket(c, a)) + bracket(c, bracket(a, b));
          if (!is_zero(s)) return false;
        }
    return true;
  }

  friend bool operator==(const Lie3&, const Lie3&) = default;

 private:
  explicit Lie3(const Table& t) : table_(t) {}
  Table table_;
};

inline Lie3 from_params(const LParams& p) {
  Lie3::Table t{};
  // basis order x, y, z
  t[0][1] = basis_vector(2);
  t[1][0] = Rat(-1) * basis_vector(2);
  t[1][2] = p.alpha() * basis_vector(0);
  t[2][1] = -p.alpha() * basis_vector(0);
  t[2][0] = p.beta() * basis_vector(1);
  t[0][2] = -p.beta() * basis_vector(1);
  return Lie3::from_table(t);
}

/// sl(2, Q) in the basis {h, e, f}: [h,e] = 2e, [h,f] = -2f, [e,f] = h.
inline Lie3 sl2_hef() {
  Lie3::Table t{};
  t[0][1] = Rat(2) * basis_vector(1);
  t[1][0] = Rat(-2) * basis_vector(1);
  t[0][2] = Rat(-2) * basis_vector(2);
  t[2][0] = Rat(2) * basis_vector(2);
  t[1][2] = basis_vector(0);
  t[2][1] = Rat(-1) * basis_vector(0);
  return Lie3::from_table(t);
}

/// Heisenberg algebra: [e1, e2] = e3, all other basis brackets zero.
inline Lie3 heisenberg() {
  Lie3::Table t{};
  t[0][1] = basis_vector(2);
  t[1][0] = Rat(-1) * basis_vector(2);
  return Lie3::from_table(t);
}

inline LieVec bracket(const Lie3& l, const LieVec& u, const LieVec& v) { return l.bracket(u, v); }

/// Matrix of ad(h); column j is [h, e_j].
inline Mat3 ad_matrix(const Lie3& l, const LieVec& h) {
  Mat3 m;
  for (std::size_t j = 0; j < 3; ++j) {
    const LieVec c = l.bracket(h, basis_vector(j));
    for (std::size_t i = 0; i < 3; ++i) m[i][j] = c[i];
  }
  return m;
}

/// Gram matrix of the Killing form, K(e_i, e_j) = trace(ad e_i ad e_j).
inline Mat3 killing(const Lie3& l) {
  std::array<Mat3, 3> ads{ad_matrix(l, basis_vector(0)), ad_matrix(l, basis_vector(1)), ad_matrix(l, basis_vector(2))};
  Mat3 g;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i; j < 3; ++j) {
      g[i][j] = trace(ads[i] * ads[j]);
      g[j][i] = g[i][j];
    }
  return g;
}

inline Rat form_value(const Mat3& gram, const LieVec& u, const LieVec& v) {
  Rat s;
  for (std::size_t i = 0; i < 3; ++i) {
    if (u[i].is_zero()) continue;
    for (std::size_t j = 0; j < 3; ++j) s += u[i] * gram[i][j] * v[j];
  }
  return s;
}

/// Killing form of L(alpha, beta), <-2 beta, -2 alpha, -2 alpha beta>.
inline DiagForm killing_form(const LParams& p) {
  return DiagForm{Rat(-2) * p.beta(), Rat(-2) * p.alpha(), Rat(-2) * p.alpha() * p.beta()};
}

/// c[0] + c[1] X + c[2] X^2 + c[3] X^3.
struct CharPoly {
  std::array<Rat, 4> c;

  Rat operator()(const Rat& x) const { return ((c[3] * x + c[2]) * x + c[1]) * x + c[0]; }

  std::string str() const {
    std::string s;
    for (int k = 3; k >= 0; --k) {
      if (c[k].is_zero()) continue;
      if (!s.empty()) s += c[k].sign() < 0 ? " - " : " + ";
      else if (c[k].sign() < 0) s += "-";
      const Rat mag = c[k].abs();
      const bool unit = mag == Rat(1);
      if (!unit || k == 0) s += mag.str();
      if (k >= 1) s += std::string(unit ? "" : "*") + "X";
      if (k >= 2) s += "^" + std::to_string(k);
    }
    return s.empty() ? "0" : s;
  }

  friend bool operator==(const CharPoly&, const CharPoly&) = default;
};

/// det(ad(h) - X I) expanded as -X^3 + tr X^2 - (sum of principal 2-minors) X + det.
inline CharPoly ad_char_poly(const Lie3& l, const LieVec& h) {
  const Mat3 a = ad_matrix(l, h);
  Rat minors = (a[0][0] * a[1][1] - a[0][1] * a[1][0]) + (a[0][0] * a[2][2] - a[0][2] * a[2][0]) +
               (a[1][1] * a[2][2] - a[1][2] * a[2][1]);
  return CharPoly{{det(a), -minors, trace(a), Rat(-1)}};
}

/// ad(h) diagonalisable over Q iff K(h,h)/2 is a nonzero square (simple l).
inline bool ad_diagonalisable(const Lie3& l, const LieVec& h) {
  const Rat half = form_value(killing(l), h, h) / Rat(2);
  return !half.is_zero() && is_square(half);
}

/// In dimension 3 over Q, simple iff the Killing form is nondegenerate.
inline bool is_simple(const Lie3& l) { return !det(killing(l)).is_zero(); }

/// The algebra rewritten in the basis given by the columns of `basis`.
inline Lie3 change_basis(const Lie3& l, const Mat3& basis) {
  auto inv = inverse(basis);
  if (!inv) throw Error(Errc::ZeroInput, "basis change matrix is singular");
  Lie3::Table t{};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) t[i][j] = *inv * l.bracket(column(basis, i), column(basis, j));
  return Lie3::from_table(t);
}

struct Standardization {
  LParams params;
  /// Columns are x, y, z in the original coordinates.
  Mat3 basis;
};

/// Finds x, y, z with [x,y] = z, [y,z] = alpha x, [z,x] = beta y.
///
/// x is the first anisotropic vector among e1, e2, e3, e1+e2, e1+e3, e2+e3,
/// e1+e2+e3; y is anisotropic in x's orthogonal complement and z = [x, y].
/// Invariance of the Killing form makes x, y, z pairwise orthogonal, so
/// [y,z] is a multiple of x and [z,x] a multiple of y.
inline Standardization standardize(const Lie3& l) {
  const Mat3 g = killing(l);
  if (det(g).is_zero()) throw Error(Errc::NotSimple, "algebra is not simple (degenerate Killing form)");
  auto q = [&](const LieVec& v) { return form_value(g, v, v); };

  const std::array<LieVec, 7> candidates{
      basis_vector(0), basis_vector(1), basis_vector(2),
      basis_vector(0) + basis_vector(1), basis_vector(0) + basis_vector(2), basis_vector(1) + basis_vector(2),
      basis_vector(0) + basis_vector(1) + basis_vector(2)};
  LieVec x;
  for (const LieVec& c : candidates)
    if (!q(c).is_zero()) {
      x = c;
      break;
    }
  if (is_zero(x)) throw Error(Errc::InternalInconsistency, "no anisotropic vector among search candidates");

  // orthogonal complement of x: kernel of the 1x3 row (g x)^T
  const LieVec gx = g * x;
  Mat3 row{};
  row[0] = gx;
  const auto perp = kernel(row);
  if (perp.size() != 2) throw Error(Errc::InternalInconsistency, "orthogonal complement is not a plane");
  LieVec y = perp[0];
  if (q(y).is_zero()) y = q(perp[1]).is_zero() ? perp[0] + perp[1] : perp[1];

  const LieVec z = l.bracket(x, y);
  const Rat alpha = form_value(g, l.bracket(y, z), x) / q(x);
  const Rat beta = form_value(g, l.bracket(z, x), y) / q(y);

  Standardization s{LParams(alpha, beta), from_columns<3>({x, y, z})};
  if (change_basis(l, s.basis) != from_params(s.params))
    throw Error(Errc::InternalInconsistency, "standardized structure constants do not match L(alpha, beta)");
  return s;
}

/// Places v with hilbert(-alpha, -beta, v) = -1.
inline std::vector<Place> ramification(const LParams& p) {
  const Rat a = -p.alpha(), b = -p.beta();
  std::vector<Place> out;
  for (const Place& v : relevant_places({a, b}))
    if (hilbert(a, b, v) == Symbol::Minus) out.push_back(v);
  return out;
}

inline bool is_split_by_symbols(const LParams& p) { return ramification(p).empty(); }

inline bool is_split_by_killing(const LParams& p) { return is_isotropic_global(killing_form(p)); }

/// Split iff (-alpha, -beta) = 1 at every place; cross-checked against
/// isotropy of the Killing form.
inline bool is_split(const LParams& p) {
  const bool by_symbols = is_split_by_symbols(p);
  if (by_symbols != is_split_by_killing(p))
    throw Error(Errc::InternalInconsistency, "symbol and Killing-form splitness disagree for " + p.str());
  return by_symbols;
}

inline bool is_isomorphic_by_forms(const LParams& p, const LParams& p2) {
  return isometric_ternary(killing_form(p), killing_form(p2));
}

inline bool is_isomorphic_by_ramification(const LParams& p, const LParams& p2) {
  return ramification(p) == ramification(p2);
}

inline bool is_isomorphic(const LParams& p, const LParams& p2) {
  const bool by_forms = is_isomorphic_by_forms(p, p2);
  if (by_forms != is_isomorphic_by_ramification(p, p2))
    throw Error(Errc::InternalInconsistency, "isometry and ramification disagree for " + p.str() + ", " + p2.str());
  return by_forms;
}

inline bool is_isomorphic_local(const LParams& p, const LParams& p2, const Place& v) {
  return hilbert(-p.alpha(), -p.beta(), v) == hilbert(-p2.alpha(), -p2.beta(), v);
}

}  // namespace lie3q
