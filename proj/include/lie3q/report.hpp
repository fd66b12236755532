#pragma once

// Verdicts, census rows and their text / JSON / CSV renderings, as used by
// the command-line tool.

#include <json.hpp>

#include <algorithm>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "lie3q/brauer.hpp"

namespace lie3q {

enum class VerdictKind { Split, Obtainable, Unobtainable };

inline std::string to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::Split: return "SPLIT";
    case VerdictKind::Obtainable: return "OBTAINABLE";
    case VerdictKind::Unobtainable: return "UNOBTAINABLE";
  }
  return "?";
}

struct Verdict {
  LParams params;
  VerdictKind kind;
  /// Legendre decisions at primes p = 1 (mod 4); empty for split algebras.
  std::vector<LegendreWitness> witnesses;
  /// Λ with L ≅ L(-Λ, -Λ), for obtainable algebras.
  std::optional<Rat> lambda;
  /// Class in Q*/Q*_{-1}; trivial for split algebras, absent when unobtainable.
  std::optional<BrauerClass> iso_class;
  std::vector<Place> ramification;
};

inline Verdict classify(const LParams& p) {
  const ObtainReport r = obtain_report(p);
  Verdict v{p, VerdictKind::Split, {}, std::nullopt, std::nullopt, ramification(p)};
  if (r.split) {
    v.iso_class = class_of(Rat(1));
    return v;
  }
  v.witnesses = r.witnesses;
  if (r.obtainable()) {
    v.kind = VerdictKind::Obtainable;
    v.lambda = r.delta;
    v.iso_class = class_of(*r.delta);
  } else {
    v.kind = VerdictKind::Unobtainable;
  }
  return v;
}

inline std::string join_places(const std::vector<Place>& places, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < places.size(); ++i) {
    if (i) s += sep;
    s += places[i].str();
  }
  return s;
}

inline nlohmann::json places_json(const std::vector<Place>& places) {
  nlohmann::json a = nlohmann::json::array();
  for (const Place& p : places) a.push_back(p.str());
  return a;
}

inline nlohmann::json witnesses_json(const std::vector<LegendreWitness>& ws) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& w : ws) a.push_back({{"p", w.p}, {"legendre", to_int(w.legendre)}});
  return a;
}

inline nlohmann::json to_json(const Verdict& v) {
  nlohmann::json j;
  j["alpha"] = v.params.alpha().str();
  j["beta"] = v.params.beta().str();
  j["verdict"] = to_string(v.kind);
  j["split"] = v.kind == VerdictKind::Split;
  j["lambda"] = v.lambda ? nlohmann::json(v.lambda->str()) : nlohmann::json(nullptr);
  j["witnesses"] = witnesses_json(v.witnesses);
  j["ramification"] = places_json(v.ramification);
  j["class"] = v.iso_class ? nlohmann::json(v.iso_class->str()) : nlohmann::json(nullptr);
  return j;
}

inline void render_text(std::ostream& os, const Verdict& v) {
  os << v.params.str() << ": " << to_string(v.kind) << "\n";
  os << "ramification: {" << join_places(v.ramification, ", ") << "}\n";
  for (const auto& w : v.witnesses) os << "witness p=" << w.p << " legendre=" << to_int(w.legendre) << "\n";
  if (v.lambda) os << "lambda: " << v.lambda->str() << "  (isomorphic to L(-lambda,-lambda))\n";
  if (v.iso_class) os << "class: " << v.iso_class->str() << " (canonical-rep)\n";
}

struct CensusRow {
  long alpha;
  long beta;
  VerdictKind kind;
  std::vector<Place> ramification;
  std::optional<BrauerClass> iso_class;
};

inline constexpr long kMaxCensusBound = 1000;

/// Nonzero integer pairs with |alpha|, |beta| <= bound in lexicographic
/// order. Rows are independent, so they are spread over `jobs` threads; the
/// result does not depend on `jobs`.
inline std::vector<CensusRow> census(long bound, unsigned jobs = 1) {
  if (bound < 1 || bound > kMaxCensusBound)
    throw Error(Errc::BoundExceeded, "census bound must be in 1.." + std::to_string(kMaxCensusBound));
  std::vector<std::pair<long, long>> pairs;
  for (long a = -bound; a <= bound; ++a)
    for (long b = -bound; b <= bound; ++b)
      if (a != 0 && b != 0) pairs.emplace_back(a, b);

  std::vector<std::optional<CensusRow>> rows(pairs.size());
  auto work = [&](std::size_t start) {
    for (std::size_t i = start; i < pairs.size(); i += std::max(1u, jobs)) {
      const auto [a, b] = pairs[i];
      const Verdict v = classify(LParams(Rat(a), Rat(b)));
      rows[i] = CensusRow{a, b, v.kind, v.ramification, v.iso_class};
    }
  };
  if (jobs <= 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(work, t);
  }
  std::vector<CensusRow> out;
  out.reserve(rows.size());
  for (auto& r : rows) out.push_back(std::move(*r));
  return out;
}

inline void write_census_csv(std::ostream& os, const std::vector<CensusRow>& rows) {
  os << "alpha,beta,verdict,ramification,class\n";
  for (const auto& r : rows)
    os << r.alpha << ',' << r.beta << ',' << to_string(r.kind) << ',' << join_places(r.ramification, ";") << ','
       << (r.iso_class ? r.iso_class->str() : "") << '\n';
}

/// Outcome of the graded construction for a reflection parameter a.
struct ConstructOutcome {
  Rat a;
  bool cartan_type = false;
  /// Set when a is not of Cartan type and a bounded search found x^2 + y^2 = 8a.
  std::optional<std::pair<Rat, Rat>> two_squares;
  std::optional<ObtainedAlgebra> obtained;
  bool split = false;
};

inline ConstructOutcome run_construct(const Rat& a) {
  const CartanReflection sigma(a);
  ConstructOutcome out{a};
  out.cartan_type = is_cartan_type(sigma);
  if (!out.cartan_type) {
    out.two_squares = find_two_squares(fixed_norm(sigma));
    return out;
  }
  out.obtained = construct(sigma);
  out.split = is_split(out.obtained->params);
  return out;
}

inline nlohmann::json to_json(const ConstructOutcome& c) {
  nlohmann::json j;
  j["a"] = c.a.str();
  j["cartan_type"] = c.cartan_type;
  if (!c.obtained) {
    j["verdict"] = "NOT_CARTAN_TYPE";
    j["lambda"] = nullptr;
    if (c.two_squares) j["two_squares"] = {c.two_squares->first.str(), c.two_squares->second.str()};
    j["witnesses"] = nlohmann::json::array();
    return j;
  }
  const ObtainedAlgebra& o = *c.obtained;
  j["verdict"] = c.split ? "SPLIT" : "NON-SPLIT";
  j["lambda"] = o.lambda.str();
  j["params"] = {o.params.alpha().str(), o.params.beta().str()};
  nlohmann::json table = nlohmann::json::array();
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t k = i + 1; k < 3; ++k) {
      nlohmann::json coords = nlohmann::json::array();
      for (const Rat& x : o.algebra.basis_bracket(i, k)) coords.push_back(x.str());
      table.push_back({{"i", i + 1}, {"j", k + 1}, {"bracket", coords}});
    }
  j["structure_constants"] = table;
  j["witnesses"] = nlohmann::json::array();
  return j;
}

inline void render_text(std::ostream& os, const ConstructOutcome& c) {
  if (!c.obtained) {
    os << "a = " << c.a.str() << ": NotCartanType, K(x,x) = 8a is a sum of two squares";
    if (c.two_squares)
      os << ": (" << c.two_squares->first.str() << ")^2 + (" << c.two_squares->second.str() << ")^2 = "
         << (Rat(8) * c.a).str();
    os << "\n";
    return;
  }
  const ObtainedAlgebra& o = *c.obtained;
  os << "a = " << c.a.str() << ", Lambda = " << o.lambda.str() << "\n";
  os << "basis u1 = (e+af)/2, u2 = lambda h/2, u3 = lambda (e-af)/2\n";
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t k = i + 1; k < 3; ++k)
      os << "[u" << i + 1 << ",u" << k + 1 << "] = " << to_string(o.algebra.basis_bracket(i, k)) << "\n";
  os << "recognized: " << o.params.str() << ", isomorphic to L(" << (-o.lambda).str() << "," << (-o.lambda).str()
     << ")\n";
  os << (c.split ? "SPLIT" : "NON-SPLIT") << "\n";
}

}  // namespace lie3q
