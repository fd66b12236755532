#pragma once

// The group Q*/Q*_{-1} and the subgroup of the Brauer group it parametrizes.

#include <string>

#include "lie3q/cartan.hpp"
#include "lie3q/quat.hpp"

namespace lie3q {

/// A class in Q*/Q*_{-1}, stored by its canonical representative
/// sign * (product of primes p = 3 mod 4 with odd valuation).
class BrauerClass {
 public:
  const Int& rep() const { return rep_; }
  bool is_trivial() const { return rep_ == 1; }
  std::string str() const { return rep_.get_str(); }

  friend bool operator==(const BrauerClass&, const BrauerClass&) = default;

 private:
  friend BrauerClass class_of(const Rat& r);
  explicit BrauerClass(Int rep) : rep_(std::move(rep)) {}
  Int rep_;
};

inline BrauerClass class_of(const Rat& r) {
  detail::require_nonzero(r, "class_of");
  Int rep = r.sign();
  for (const auto& [p, e] : factor(r).factors)
    if (p % 4 == 3 && e % 2 != 0) rep *= detail::from_u64(p);
  return BrauerClass(rep);
}

inline BrauerClass group_mul(const BrauerClass& c, const BrauerClass& c2) { return class_of(Rat(Int(c.rep() * c2.rep()))); }

/// The class [Δ] with L(alpha, beta) ≅ L(-Δ, 1), for obtainable non-split
/// algebras. The quaternion algebra H(L) is then (-1, Δ | Q).
inline BrauerClass class_from_obtainable(const LParams& p) {
  const ObtainReport r = obtain_report(p);
  if (r.split || !r.cond_d || !r.delta)
    throw Error(Errc::NotObtainable, p.str() + " is not an obtainable non-split algebra");
  return class_of(*r.delta);
}

/// Runs every arrow of the correspondence for one Δ: involution with fixed
/// norm Δ, constructed algebra, its class, and the quaternion data.
inline bool correspondence_roundtrip(const Rat& delta) {
  if (class_of(delta).is_trivial()) throw Error(Errc::TrivialClass, delta.str() + " is a sum of two squares");
  const CartanReflection sigma(delta / Rat(8));
  if (!is_cartan_type(sigma) || fixed_norm(sigma) != delta) return false;
  const ObtainedAlgebra o = construct(sigma);
  const ObtainReport r = obtain_report(o.params);
  if (r.split || !r.obtainable()) return false;
  if (class_from_obtainable(o.params) != class_of(delta)) return false;
  const LieQuaternion h = from_lie(o.algebra);
  return ramification_set(h.identified) == ramification_set(QuatAlg(Rat(-1), delta));
}

}  // namespace lie3q
