#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "lie3q/qforms.hpp"
#include "oracles.hpp"

using namespace lie3q;

namespace {

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an Error";
  return Errc::InternalInconsistency;
}

DiagForm random_form(std::mt19937_64& rng, std::size_t rank, long bound = 40) {
  std::vector<Rat> c;
  for (std::size_t i = 0; i < rank; ++i) c.push_back(gen::nonzero(rng, bound, 4));
  return DiagForm(c);
}

}  // namespace

TEST(DiagForm, ConstructionAndParse) {
  EXPECT_EQ(code_of([] { DiagForm{Rat(1), Rat(0)}; }), Errc::ZeroInput);
  const DiagForm q = DiagForm::parse("-6,-4,-12");
  EXPECT_EQ(q, (DiagForm{Rat(-6), Rat(-4), Rat(-12)}));
  EXPECT_EQ(q.str(), "<-6,-4,-12>");
  EXPECT_EQ(DiagForm::parse("1/2,3").rank(), 2u);
  EXPECT_EQ(code_of([] { DiagForm::parse("1,,2"); }), Errc::ParseError);
  EXPECT_EQ(code_of([] { DiagForm::parse("1,0"); }), Errc::ZeroInput);
}

TEST(DiscClass, Examples) {
  EXPECT_EQ(disc_class(DiagForm{Rat(-2), Rat(2), Rat(2)}), Rat(-2));
  EXPECT_EQ(disc_class(DiagForm{Rat(-6), Rat(-4), Rat(-12)}), Rat(-2));
  EXPECT_EQ(disc_class(DiagForm{Rat(1)}), Rat(1));
}

TEST(Hasse, Examples) {
  for (const Place& v : {Place::real(), Place::finite(2), Place::finite(3), Place::finite(5)})
    EXPECT_EQ(hasse_invariant(DiagForm{Rat(1), Rat(1), Rat(1)}, v), Symbol::Plus);
  EXPECT_EQ(hasse_invariant(DiagForm{Rat(-1), Rat(-1)}, Place::real()), Symbol::Minus);
  EXPECT_EQ(hasse_invariant(DiagForm{Rat(2), Rat(5)}, Place::finite(5)), hilbert_p(Rat(2), Rat(5), 5));
  EXPECT_EQ(hasse_invariant(DiagForm{Rat(2), Rat(5)}, Place::finite(5)), Symbol::Minus);
}

TEST(LocalIsotropy, Examples) {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 100; ++i) {
    const Rat a = gen::nonzero(rng, 50, 9), b = gen::nonzero(rng, 50, 9);
    EXPECT_TRUE(is_isotropic_local(DiagForm{a, b, a * b, Rat(-1)}, Place::finite(2))) << a.str() << "," << b.str();
  }
  EXPECT_TRUE(is_isotropic_local(DiagForm{Rat(-2), Rat(2), Rat(2)}, Place::real()));
  EXPECT_FALSE(is_isotropic_local(DiagForm{Rat(1), Rat(1), Rat(1)}, Place::real()));
  EXPECT_FALSE(is_isotropic_local(DiagForm{Rat(3)}, Place::finite(3)));
  EXPECT_TRUE(is_isotropic_local(DiagForm{Rat(1), Rat(1), Rat(1), Rat(1), Rat(1)}, Place::finite(2)));
  EXPECT_EQ(code_of([] { is_isotropic_local(DiagForm(std::vector<Rat>{}), Place::real()); }), Errc::UnsupportedRank);
}

TEST(LocalIsotropy, KillingFormOfL25) {
  // the true Killing form of L(2,5) is anisotropic at 5
  const DiagForm k{Rat(-10), Rat(-4), Rat(-20)};
  EXPECT_FALSE(is_isotropic_local(k, Place::finite(5)));
  EXPECT_FALSE(oracle::isotropic_mod_pk(k.coeffs(), 5));
  EXPECT_EQ(hilbert(Rat(-40), Rat(-200), Place::finite(5)), Symbol::Minus);
  // <-4,-10,-40> differs from it by the square class of the last coefficient
  const DiagForm other{Rat(-4), Rat(-10), Rat(-40)};
  EXPECT_EQ(is_isotropic_local(other, Place::finite(5)), oracle::isotropic_mod_pk(other.coeffs(), 5));
}

TEST(LocalIsotropy, AgreesWithSolutionSearch) {
  std::mt19937_64 rng(32);
  for (Prime p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u}) {
    for (int i = 0; i < (p < 15 ? 40 : 12); ++i) {
      for (std::size_t rank : {2u, 3u}) {
        const DiagForm q = random_form(rng, rank, 60);
        EXPECT_EQ(is_isotropic_local(q, Place::finite(p)), oracle::isotropic_mod_pk(q.coeffs(), p))
            << q.str() << " at " << p;
      }
    }
  }
}

TEST(GlobalIsotropy, Examples) {
  EXPECT_FALSE(is_isotropic_global(DiagForm{Rat(-10), Rat(-4), Rat(-20), Rat(2)}));
  EXPECT_TRUE(is_isotropic_global(DiagForm{Rat(-6), Rat(-4), Rat(-12), Rat(2)}));
  EXPECT_TRUE(is_isotropic_global(DiagForm{Rat(1), Rat(-1)}));
  EXPECT_FALSE(is_isotropic_global(DiagForm{Rat(1), Rat(-2)}));
  EXPECT_FALSE(is_isotropic_global(DiagForm{Rat(1)}));

  const IsotropyReport r = isotropy_report(DiagForm{Rat(-10), Rat(-4), Rat(-20), Rat(2)});
  ASSERT_EQ(r.local_failures.size(), 1u);
  EXPECT_EQ(r.local_failures[0], Place::finite(5));
  EXPECT_EQ(code_of([] { is_isotropic_global(DiagForm{Rat(1), Rat(1), Rat(1), Rat(1), Rat(-1)}); }),
            Errc::UnsupportedRank);
}

TEST(GlobalIsotropy, LiteralFormWithMinus40) {
  // <-10,-4,-40,2> is isotropic everywhere (at 5 it contains a hyperbolic plane)
  EXPECT_TRUE(is_isotropic_local(DiagForm{Rat(-10), Rat(-4), Rat(-40), Rat(2)}, Place::finite(5)));
  EXPECT_TRUE(represents(DiagForm{Rat(-10), Rat(-4), Rat(-40)}, Rat(-2)));
}

TEST(Represents, Examples) {
  EXPECT_TRUE(represents(DiagForm{Rat(-6), Rat(-4), Rat(-12)}, Rat(-2)));
  EXPECT_FALSE(represents(DiagForm{Rat(-10), Rat(-4), Rat(-20)}, Rat(-2)));
  EXPECT_TRUE(represents(DiagForm{Rat(1), Rat(1)}, Rat(2)));
  EXPECT_FALSE(represents(DiagForm{Rat(1), Rat(1)}, Rat(3)));
  EXPECT_TRUE(represents(DiagForm{Rat(5)}, Rat(20)));
  EXPECT_EQ(code_of([] { represents(DiagForm{Rat(1)}, Rat(0)); }), Errc::ZeroInput);
}

TEST(Represents, IsotropicFormsAreUniversal) {
  std::mt19937_64 rng(33);
  int isotropic = 0;
  for (int i = 0; i < 300; ++i) {
    const DiagForm q = random_form(rng, 3, 20);
    if (!is_isotropic_global(q)) continue;
    ++isotropic;
    for (int k = 0; k < 5; ++k) EXPECT_TRUE(represents(q, gen::nonzero(rng, 100, 10))) << q.str();
  }
  EXPECT_GT(isotropic, 20);
}

TEST(Isometry, Examples) {
  const Rat L(3);
  EXPECT_TRUE(isometric_ternary(DiagForm{Rat(2) * L, Rat(2) * L, Rat(-2) * L * L}, DiagForm{Rat(-2), Rat(2) * L, Rat(2) * L}));
  const DiagForm q{Rat(-6), Rat(-4), Rat(-12)};
  EXPECT_TRUE(isometric_ternary(q, q));
  EXPECT_FALSE(isometric_ternary(DiagForm{Rat(-2), Rat(2), Rat(2)}, q));
  EXPECT_EQ(code_of([] { isometric_ternary(DiagForm{Rat(1), Rat(1)}, DiagForm{Rat(1), Rat(1)}); }), Errc::UnsupportedRank);

  const IsometryReport r = isometry_report(DiagForm{Rat(1), Rat(1), Rat(1)}, DiagForm{Rat(-1), Rat(-1), Rat(1)});
  EXPECT_FALSE(r.verdict);
  EXPECT_FALSE(r.same_signature);
}

TEST(Invariance, SquareScalingAndPermutation) {
  std::mt19937_64 rng(34);
  for (int i = 0; i < 150; ++i) {
    const DiagForm q = random_form(rng, 3, 30);
    const Rat c = gen::nonzero(rng, 30, 5);
    std::vector<Rat> scaled, perm = q.coeffs();
    for (const Rat& x : q.coeffs()) {
      const Rat s = gen::nonzero(rng, 7, 3);
      scaled.push_back(x * s * s);
    }
    std::reverse(perm.begin(), perm.end());
    std::swap(perm[0], perm[1]);
    for (const DiagForm& q2 : {DiagForm(scaled), DiagForm(perm)}) {
      EXPECT_EQ(is_isotropic_global(q2), is_isotropic_global(q));
      EXPECT_EQ(represents(q2, c), represents(q, c));
      EXPECT_TRUE(isometric_ternary(q, q2));
      for (const Place& v : relevant_places(q)) EXPECT_EQ(is_isotropic_local(q2, v), is_isotropic_local(q, v));
    }
  }
}

TEST(Isometry, EquivalenceRelationOnDiscMinus2) {
  // forms <-2b,-2a,-2ab> all have disc class -2
  std::mt19937_64 rng(35);
  std::vector<DiagForm> forms;
  for (int i = 0; i < 15; ++i) {
    const Rat a(gen::uniform(rng, 1, 12) * (gen::uniform(rng, 0, 1) ? 1 : -1));
    const Rat b(gen::uniform(rng, 1, 12) * (gen::uniform(rng, 0, 1) ? 1 : -1));
    forms.push_back(DiagForm{Rat(-2) * b, Rat(-2) * a, Rat(-2) * a * b});
    EXPECT_EQ(disc_class(forms.back()), Rat(-2));
  }
  for (const auto& f : forms) {
    EXPECT_TRUE(isometric_ternary(f, f));
    for (const auto& g : forms) {
      EXPECT_EQ(isometric_ternary(f, g), isometric_ternary(g, f));
      for (const auto& h : forms)
        if (isometric_ternary(f, g) && isometric_ternary(g, h)) EXPECT_TRUE(isometric_ternary(f, h));
    }
  }
}
