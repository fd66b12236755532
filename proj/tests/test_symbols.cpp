#include <gtest/gtest.h>

#include <random>

#include "lie3q/symbols.hpp"
#include "oracles.hpp"

using namespace lie3q;

namespace {

const std::vector<Prime> kOddPrimes{3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47};

Rat random_arg(std::mt19937_64& rng) { return gen::nonzero(rng, 200, 40); }

}  // namespace

TEST(Legendre, Examples) {
  EXPECT_EQ(legendre(Int(2), 5), Symbol::Minus);
  EXPECT_EQ(legendre(Int(9), 5), Symbol::Plus);
  EXPECT_EQ(legendre(Int(3), 5), Symbol::Minus);
  EXPECT_EQ(legendre(Int(10), 5), Symbol::Zero);
  EXPECT_EQ(legendre(Int(-1), 7), Symbol::Minus);
}

TEST(Legendre, RejectsBadModulus) {
  for (std::uint64_t m : {0u, 1u, 2u, 9u, 15u}) {
    try {
      legendre(Int(3), m);
      ADD_FAILURE() << m;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::EvenOrCompositeModulus);
    }
  }
}

TEST(Legendre, AgreesWithExhaustiveSquaring) {
  for (Prime p : kOddPrimes)
    for (long a = -60; a <= 60; ++a)
      EXPECT_EQ(to_int(legendre(Int(a), p)), oracle::legendre(a, static_cast<long>(p))) << a << " mod " << p;
}

TEST(Legendre, Multiplicative) {
  for (Prime p : kOddPrimes)
    for (long a = 1; a < 40; ++a)
      for (long b = 1; b < 40; ++b) {
        if (a % static_cast<long>(p) == 0 || b % static_cast<long>(p) == 0) continue;
        EXPECT_EQ(legendre(Int(a * b), p), legendre(Int(a), p) * legendre(Int(b), p));
      }
}

TEST(HilbertReal, Examples) {
  EXPECT_EQ(hilbert_real(Rat(-1), Rat(-1)), Symbol::Minus);
  EXPECT_EQ(hilbert_real(Rat(1), Rat(-7)), Symbol::Plus);
  EXPECT_EQ(hilbert_real(Rat(2), Rat(3)), Symbol::Plus);
  EXPECT_THROW(hilbert_real(Rat(0), Rat(3)), Error);
}

TEST(HilbertP, Examples) {
  EXPECT_EQ(hilbert_p(Rat(2), Rat(5), 5), Symbol::Minus);
  EXPECT_EQ(hilbert_p(Rat(3), Rat(25), 5), Symbol::Plus);
  EXPECT_EQ(hilbert(Rat(3), Rat(-5), Place::finite(5)), Symbol::Minus);
  EXPECT_EQ(hilbert(Rat(-1), Rat(-1), Place::real()), Symbol::Minus);
  EXPECT_EQ(hilbert(Rat(2), Rat(3), Place::finite(7)), Symbol::Plus);
  EXPECT_EQ(hilbert_p(Rat(-1), Rat(-1), 2), Symbol::Minus);
  std::mt19937_64 rng(21);
  for (int i = 0; i < 100; ++i)
    for (Prime p : {2u, 3u, 5u, 13u}) EXPECT_EQ(hilbert_p(Rat(1), random_arg(rng), p), Symbol::Plus);
}

TEST(HilbertP, Errors) {
  try {
    hilbert_p(Rat(0), Rat(3), 5);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ZeroInput);
  }
  EXPECT_THROW(hilbert_p(Rat(2), Rat(3), 9), Error);
}

TEST(Hilbert, SymmetryBimultiplicativitySquares) {
  std::mt19937_64 rng(22);
  const std::vector<Place> places{Place::real(), Place::finite(2), Place::finite(3), Place::finite(5),
                                  Place::finite(7), Place::finite(13)};
  for (int i = 0; i < 300; ++i) {
    const Rat a = random_arg(rng), a2 = random_arg(rng), b = random_arg(rng), s = gen::nonzero(rng, 20, 7);
    for (const Place& v : places) {
      EXPECT_EQ(hilbert(a, b, v), hilbert(b, a, v));
      EXPECT_EQ(hilbert(a * a2, b, v), hilbert(a, b, v) * hilbert(a2, b, v));
      EXPECT_EQ(hilbert(a * s * s, b, v), hilbert(a, b, v));
      EXPECT_NE(hilbert(a, b, v), Symbol::Zero);
    }
  }
}

TEST(Hilbert, ProductFormula) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 500; ++i) {
    const Rat a = random_arg(rng), b = random_arg(rng);
    Symbol prod = Symbol::Plus;
    for (const Place& v : relevant_places({a, b})) prod = prod * hilbert(a, b, v);
    EXPECT_EQ(prod, Symbol::Plus) << a.str() << " " << b.str();
  }
}

TEST(Hilbert, OddPrimeOracle) {
  for (Prime p : kOddPrimes) {
    const long n = [&] {
      for (long x = 2;; ++x)
        if (oracle::legendre(x, static_cast<long>(p)) == -1) return x;
    }();
    const long pl = static_cast<long>(p);
    const std::vector<Rat> args{Rat(1), Rat(n), Rat(-1), Rat(pl), Rat(n * pl), Rat(-pl), Rat(pl * pl * n),
                                Rat(Int(1), Int(pl))};
    for (std::size_t i = 0; i < args.size(); ++i)
      for (std::size_t j = i; j < args.size(); ++j)
        EXPECT_EQ(to_int(hilbert_p(args[i], args[j], p)), oracle::hilbert(args[i], args[j], p))
            << args[i].str() << "," << args[j].str() << " at " << p;
  }
}

TEST(Hilbert, DyadicOracle) {
  std::vector<Rat> args;
  for (long u : {1, 3, 5, 7, -1, -3, -5, -7})
    for (long e : {0, 1, 3}) args.push_back(Rat(u * (1L << e)));
  args.push_back(Rat(Int(3), Int(4)));
  args.push_back(Rat(Int(-5), Int(8)));
  for (const Rat& a : args)
    for (const Rat& b : args)
      EXPECT_EQ(to_int(hilbert_p(a, b, 2)), oracle::hilbert(a, b, 2)) << a.str() << "," << b.str();
}

TEST(RelevantPlaces, Examples) {
  auto strs = [](const std::vector<Place>& ps) {
    std::vector<std::string> out;
    for (const Place& p : ps) out.push_back(p.str());
    return out;
  };
  EXPECT_EQ(strs(relevant_places({Rat(2), Rat(3)})), (std::vector<std::string>{"inf", "2", "3"}));
  EXPECT_EQ(strs(relevant_places({Rat(3), Rat(25)})), (std::vector<std::string>{"inf", "2", "3", "5"}));
  EXPECT_EQ(strs(relevant_places({Rat(1), Rat(1)})), (std::vector<std::string>{"inf", "2"}));
  EXPECT_EQ(strs(relevant_places({Rat(Int(7), Int(11))})), (std::vector<std::string>{"inf", "2", "7", "11"}));
  EXPECT_THROW(relevant_places({Rat(0)}), Error);
}
