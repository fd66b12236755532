#pragma once

// Nondegenerate diagonal quadratic forms over Q: discriminants, Hasse
// invariants, local and global isotropy, representation and isometry.

#include <algorithm>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "lie3q/arith.hpp"
#include "lie3q/symbols.hpp"

namespace lie3q {

/// The form <a_1, ..., a_n> with every a_i nonzero.
class DiagForm {
 public:
  explicit DiagForm(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
    for (const Rat& c : coeffs_)
      if (c.is_zero()) throw Error(Errc::ZeroInput, "diagonal form coefficients must be nonzero");
  }

  DiagForm(std::initializer_list<Rat> coeffs) : DiagForm(std::vector<Rat>(coeffs)) {}

  /// Comma-separated rational literals, e.g. "-6,-4,-12".
  static DiagForm parse(std::string_view text) {
    std::vector<Rat> coeffs;
    std::size_t start = 0;
    while (true) {
      auto comma = text.find(',', start);
      coeffs.push_back(Rat::parse(text.substr(start, comma - start)));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    return DiagForm(std::move(coeffs));
  }

  std::size_t rank() const { return coeffs_.size(); }
  const std::vector<Rat>& coeffs() const { return coeffs_; }
  const Rat& operator[](std::size_t i) const { return coeffs_[i]; }

  /// Orthogonal sum q ⊥ other.
  DiagForm perp(const DiagForm& other) const {
    std::vector<Rat> c = coeffs_;
    c.insert(c.end(), other.coeffs_.begin(), other.coeffs_.end());
    return DiagForm(std::move(c));
  }

  /// Number of positive coefficients.
  std::size_t positive_index() const {
    return static_cast<std::size_t>(std::count_if(coeffs_.begin(), coeffs_.end(), [](const Rat& c) { return c.sign() > 0; }));
  }

  std::string str() const {
    std::string s = "<";
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (i) s += ",";
      s += coeffs_[i].str();
    }
    return s + ">";
  }

  friend bool operator==(const DiagForm&, const DiagForm&) = default;

 private:
  std::vector<Rat> coeffs_;
};

inline Rat disc_class(const DiagForm& q) {
  Rat prod(1);
  for (const Rat& c : q.coeffs()) prod *= c;
  return squarefree_part(prod);
}

/// Product of hilbert(a_i, a_j) over i < j.
inline Symbol hasse_invariant(const DiagForm& q, const Place& v) {
  Symbol s = Symbol::Plus;
  const auto& c = q.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = i + 1; j < c.size(); ++j) s = s * hilbert(c[i], c[j], v);
  return s;
}

inline bool is_local_square(const Rat& r, const Place& v) {
  detail::require_nonzero(r, "is_local_square");
  if (v.is_real()) return r.sign() > 0;
  const Prime p = v.prime();
  if (valuation(r, p) % 2 != 0) return false;
  const Rat u = unit_part(r, p);
  if (p == 2) return detail::dyadic_unit_mod8(u) == 1;
  return detail::euler_criterion(detail::unit_residue(u, p), p) == Symbol::Plus;
}

inline std::vector<Place> relevant_places(const DiagForm& q) { return relevant_places(std::span<const Rat>(q.coeffs())); }

inline bool is_isotropic_local(const DiagForm& q, const Place& v) {
  const auto& c = q.coeffs();
  if (c.empty()) throw Error(Errc::UnsupportedRank, "rank 0 form");
  if (c.size() == 1) return false;
  if (v.is_real()) return q.positive_index() != 0 && q.positive_index() != q.rank();
  switch (c.size()) {
    case 2:
      return is_local_square(-(c[0] * c[1]), v);
    case 3:
      return hilbert(-(c[0] * c[1]), -(c[0] * c[2]), v) == Symbol::Plus;
    case 4:
      return !(is_local_square(disc_class(q), v) &&
               hasse_invariant(q, v) == Symbol::Minus * hilbert(Rat(-1), Rat(-1), v));
    default:
      // every form of rank >= 5 over Q_p is isotropic
      return true;
  }
}

struct IsotropyReport {
  bool verdict = false;
  std::vector<Place> local_failures;
};

/// Hasse-Minkowski over the finite set of places where isotropy can fail.
inline IsotropyReport isotropy_report(const DiagForm& q) {
  if (q.rank() == 0 || q.rank() > 4) throw Error(Errc::UnsupportedRank, "global isotropy supports ranks 1 to 4");
  IsotropyReport r;
  for (const Place& v : relevant_places(q))
    if (!is_isotropic_local(q, v)) r.local_failures.push_back(v);
  r.verdict = q.rank() > 1 && r.local_failures.empty();
  return r;
}

inline bool is_isotropic_global(const DiagForm& q) { return isotropy_report(q).verdict; }

/// Whether q takes the value c over Q. The report's local failures refer to
/// q ⊥ <-c> and are empty when q is isotropic (isotropic forms are universal).
inline IsotropyReport representation_report(const DiagForm& q, const Rat& c) {
  detail::require_nonzero(c, "represents");
  if (q.rank() >= 2 && is_isotropic_global(q)) return {true, {}};
  return isotropy_report(q.perp(DiagForm{-c}));
}

inline bool represents(const DiagForm& q, const Rat& c) { return representation_report(q, c).verdict; }

struct IsometryReport {
  bool verdict = false;
  bool same_disc = false;
  bool same_signature = false;
  /// Places at which the Hasse invariants differ.
  std::vector<Place> local_failures;
};

/// Isometry of ternary forms by discriminant, signature and Hasse invariants.
inline IsometryReport isometry_report(const DiagForm& q, const DiagForm& q2) {
  if (q.rank() != 3 || q2.rank() != 3) throw Error(Errc::UnsupportedRank, "isometric_ternary needs two rank-3 forms");
  IsometryReport r;
  r.same_disc = disc_class(q) == disc_class(q2);
  r.same_signature = q.positive_index() == q2.positive_index();
  std::set<Place> places;
  for (const Place& v : relevant_places(q)) places.insert(v);
  for (const Place& v : relevant_places(q2)) places.insert(v);
  for (const Place& v : places)
    if (hasse_invariant(q, v) != hasse_invariant(q2, v)) r.local_failures.push_back(v);
  r.verdict = r.same_disc && r.same_signature && r.local_failures.empty();
  return r;
}

inline bool isometric_ternary(const DiagForm& q, const DiagForm& q2) { return isometry_report(q, q2).verdict; }

}  // namespace lie3q
