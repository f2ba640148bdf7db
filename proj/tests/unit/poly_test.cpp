#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "specgap/families.hpp"
#include "specgap/poly.hpp"
#include "specgap/spectra.hpp"

namespace specgap {
namespace {

IntPoly x_minus(long r) { return IntPoly{-r, 1}; }

IntPoly random_poly(std::mt19937_64& rng, int max_degree, long bound) {
  std::uniform_int_distribution<long> coeff(-bound, bound);
  const int degree = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_degree));
  std::vector<BigInt> c;
  for (int i = 0; i <= degree; ++i) c.emplace_back(coeff(rng));
  if (c.back() == 0) c.back() = 1;
  return IntPoly(c);
}

TEST(Rational, ParsesAndNormalises) {
  EXPECT_EQ(parse_rational("3"), BigRat(3));
  EXPECT_EQ(parse_rational("-6/4"), BigRat(-3, 2));
  EXPECT_EQ(parse_rational("2.9"), BigRat(29, 10));
  EXPECT_EQ(parse_rational("-0.25"), BigRat(-1, 4));
  EXPECT_EQ(to_string(make_rational(4, -6)), "-2/3");
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("abc"), std::invalid_argument);
  EXPECT_THROW(make_rational(1, 0), std::invalid_argument);
}

TEST(IntPoly, TrimsAndCompares) {
  EXPECT_TRUE(IntPoly({0, 0}).is_zero());
  EXPECT_EQ(IntPoly({1, 2, 0}).degree(), 1);
  EXPECT_EQ(IntPoly().degree(), -1);
  EXPECT_EQ(IntPoly({1, 1}) * IntPoly({-1, 1}), IntPoly({-1, 0, 1}));
  EXPECT_EQ(poly_add(IntPoly{1, 1}, IntPoly{-1, -1}), IntPoly());
  EXPECT_EQ(poly_derivative(IntPoly{5, 3, 0, 2}), (IntPoly{3, 0, 6}));
  EXPECT_EQ(IntPoly({0, 1}).compose(IntPoly{1, 1}), (IntPoly{1, 1}));
  EXPECT_EQ(IntPoly({1, 2, 3}).reflected(), (IntPoly{1, -2, 3}));
}

TEST(ExactDivide, Examples) {
  EXPECT_EQ(exact_divide(IntPoly{-1, 0, 1}, x_minus(1)), (IntPoly{1, 1}));
  EXPECT_THROW(exact_divide(IntPoly{-2, 0, 1}, x_minus(1)), NotDivisible);
  EXPECT_THROW(exact_divide(IntPoly{1, 1}, IntPoly{0, 2}), NotDivisible);
}

TEST(ExactDivide, GuoMoharCharpolyLosesPlusMinusOne) {
  const IntPoly phi = char_poly(guo_mohar(3));
  const IntPoly q = exact_divide(phi, poly_mul(poly_pow(x_minus(1), 3), poly_pow(x_minus(-1), 3)));
  EXPECT_EQ(q.degree(), 6);
  EXPECT_NE(sign_at(q, 1), 0);
  EXPECT_NE(sign_at(q, -1), 0);
}

TEST(Gcd, Examples) {
  EXPECT_EQ(poly_gcd(IntPoly{-1, 0, 1}, IntPoly{1, -2, 1}), x_minus(1));
  EXPECT_EQ(poly_gcd(IntPoly{2, 4}, IntPoly{3, 6}), (IntPoly{1, 2}));
  EXPECT_EQ(poly_gcd(IntPoly{}, IntPoly{}), IntPoly());
  EXPECT_EQ(poly_gcd(IntPoly{-2, -2}, IntPoly{}), (IntPoly{1, 1}));
}

TEST(Squarefree, Examples) {
  const IntPoly p = poly_mul(poly_pow(x_minus(1), 3), x_minus(-2));
  const auto d = squarefree_decomposition(p);
  ASSERT_EQ(d.factors.size(), 2U);
  EXPECT_EQ(d.factors[0].factor, x_minus(-2));
  EXPECT_EQ(d.factors[0].multiplicity, 1);
  EXPECT_EQ(d.factors[1].factor, x_minus(1));
  EXPECT_EQ(d.factors[1].multiplicity, 3);

  const auto single = squarefree_decomposition(IntPoly{-2, 0, 1});
  ASSERT_EQ(single.factors.size(), 1U);
  EXPECT_EQ(single.factors[0].multiplicity, 1);
  EXPECT_THROW(squarefree_decomposition(IntPoly{}), std::invalid_argument);
}

TEST(Squarefree, PetersenMultiplicitiesMatchNumericSpectrum) {
  const auto d = squarefree_decomposition(char_poly(petersen()));
  std::map<long, int> found;
  for (const auto& f : d.factors) {
    ASSERT_EQ(f.factor.degree(), 1);
    const long root = -f.factor.coeff(0).get_si();
    found[root] = f.multiplicity;
  }
  std::map<long, int> numeric;
  for (double e : oracle::eigenvalues(petersen())) ++numeric[std::lround(e)];
  EXPECT_EQ(found, numeric);
  EXPECT_EQ(found, (std::map<long, int>{{3, 1}, {1, 5}, {-2, 4}}));
}

TEST(Squarefree, ReassemblesRandomProducts) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    IntPoly p = IntPoly::constant(BigInt(1 + static_cast<long>(rng() % 5)) * (trial % 2 ? 1 : -1));
    for (int f = 0; f < 3; ++f) p = poly_mul(p, poly_pow(random_poly(rng, 3, 5), 1 + static_cast<int>(rng() % 3)));
    const auto d = squarefree_decomposition(p);
    IntPoly back = IntPoly::constant(d.unit);
    for (const auto& f : d.factors) {
      EXPECT_GT(f.factor.leading(), 0);
      EXPECT_EQ(poly_gcd(f.factor, poly_derivative(f.factor)).degree(), 0);
      back = poly_mul(back, poly_pow(f.factor, f.multiplicity));
    }
    ASSERT_EQ(back, p);
    for (std::size_t i = 0; i < d.factors.size(); ++i) {
      for (std::size_t j = i + 1; j < d.factors.size(); ++j) {
        EXPECT_EQ(poly_gcd(d.factors[i].factor, d.factors[j].factor).degree(), 0);
      }
    }
  }
}

TEST(SignAt, Examples) {
  EXPECT_EQ(sign_at(IntPoly{-2, 0, 1}, 1), -1);
  EXPECT_EQ(sign_at(char_poly(complete(4)), 3), 0);
  EXPECT_EQ(sign_at(IntPoly{-1, 2}, BigRat(1, 2)), 0);
  EXPECT_EQ(sign_at_infinity(IntPoly{0, 0, 0, -1}, false), 1);
}

TEST(CountRoots, Examples) {
  EXPECT_EQ(count_roots_open(IntPoly{-2, 0, 1}, -1, 1, false), 0);
  EXPECT_EQ(count_roots_open(IntPoly{-1, 0, 4}, -1, 1, false), 2);
  const IntPoly heawood_phi = char_poly(heawood());
  EXPECT_EQ(count_roots_open(heawood_phi, -1, 1, true), 0);
  EXPECT_EQ(count_roots_open(heawood_phi, BigRat(-3, 2), BigRat(3, 2), true), 12);
  EXPECT_EQ(count_roots_open(heawood_phi, BigRat(-3, 2), BigRat(3, 2), false), 2);
  EXPECT_THROW(count_roots_open(IntPoly{1, 1}, 1, 1, false), std::invalid_argument);
  EXPECT_THROW(count_roots_open(IntPoly{}, 0, 1, false), std::invalid_argument);
}

TEST(CountRoots, HeawoodMultiplicityOfRootTwoMatchesNumeric) {
  int near_sqrt2 = 0;
  for (double e : oracle::eigenvalues(heawood())) near_sqrt2 += std::abs(std::abs(e) - std::sqrt(2.0)) < 1e-9;
  EXPECT_EQ(near_sqrt2, 12);
}

TEST(CountRoots, EndpointRootsAreExcluded) {
  // (x-1)^2 (x+1)(2x-1)(x-3): roots in (-1,1) = {1/2}; in [-1,1] also -1, 1.
  const IntPoly p = poly_mul(poly_mul(poly_pow(x_minus(1), 2), x_minus(-1)),
                             poly_mul(IntPoly{-1, 2}, x_minus(3)));
  EXPECT_EQ(count_roots_open(p, -1, 1, true), 1);
  EXPECT_EQ(count_roots_at(p, 1, true), 2);
  EXPECT_EQ(count_roots_at(p, 1, false), 1);
  EXPECT_EQ(count_roots_at(p, BigRat(1, 2), false), 1);
  EXPECT_EQ(count_roots_open(p, BigRat(1, 2), 3, true), 2);
  EXPECT_EQ(count_roots_open(p, -5, 5, true), 5);
  EXPECT_EQ(count_roots_open(p, -5, 5, false), 4);
}

TEST(CountRoots, AgreesWithNumericRootFinder) {
  std::mt19937_64 rng(12);
  int checked = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const IntPoly p = random_poly(rng, 12, 20);
    const BigRat a(static_cast<long>(rng() % 9) - 4, 1 + static_cast<long>(rng() % 3));
    const BigRat b = a + BigRat(1 + static_cast<long>(rng() % 6), 2);
    bool ambiguous = false;
    const auto roots = oracle::real_roots(p, 1e-7, &ambiguous);
    if (ambiguous) continue;
    const double ad = a.get_d();
    const double bd = b.get_d();
    bool near_end = false;
    int inside = 0;
    for (double r : roots) {
      near_end = near_end || std::abs(r - ad) < 1e-6 || std::abs(r - bd) < 1e-6;
      inside += r > ad && r < bd;
    }
    if (near_end) continue;
    ++checked;
    ASSERT_EQ(count_roots_open(p, a, b, true), inside) << to_text(p);
  }
  EXPECT_GT(checked, 400);
}

TEST(CountRoots, PartitionOfSquarefreeDegree) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    IntPoly p = random_poly(rng, 6, 6);
    p = poly_mul(p, poly_mul(x_minus(static_cast<long>(rng() % 5) - 2), x_minus(static_cast<long>(rng() % 5) - 2)));
    const BigRat a(static_cast<long>(rng() % 7) - 3);
    const BigRat b = a + BigRat(1 + static_cast<long>(rng() % 4));
    const BigInt bound = root_bound(p) + 1;
    const BigRat lo = std::min<BigRat>(BigRat(-bound), BigRat(a - 1));
    const BigRat hi = std::max<BigRat>(BigRat(bound), BigRat(b + 1));
    IntPoly squarefree = IntPoly::constant(1);
    for (const auto& f : squarefree_decomposition(p).factors) squarefree = poly_mul(squarefree, f.factor);
    const int real = count_roots_open(p, lo, hi, false);
    const int total = count_roots_open(p, lo, a, false) + count_roots_at(p, a, false) +
                      count_roots_open(p, a, b, false) + count_roots_at(p, b, false) +
                      count_roots_open(p, b, hi, false);
    EXPECT_EQ(total, real);
    EXPECT_LE(real, squarefree.degree());
    bool ambiguous = false;
    const auto roots = oracle::real_roots(squarefree, 1e-7, &ambiguous);
    if (!ambiguous) EXPECT_EQ(real, static_cast<int>(roots.size())) << to_text(p);
  }
}

TEST(SturmChain, ScalingByPositiveConstantsKeepsVariations) {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 100; ++trial) {
    IntPoly p = random_poly(rng, 8, 10);
    IntPoly squarefree = IntPoly::constant(1);
    for (const auto& f : squarefree_decomposition(p).factors) squarefree = poly_mul(squarefree, f.factor);
    if (squarefree.degree() < 1) continue;
    const SturmChain chain(squarefree);
    const BigRat r(static_cast<long>(rng() % 11) - 5, 1 + static_cast<long>(rng() % 4));
    std::vector<int> plain;
    std::vector<int> scaled;
    for (const auto& q : chain.polys()) {
      plain.push_back(sign_at(q, r));
      scaled.push_back(sign_at(q * BigInt(1 + static_cast<long>(rng() % 50)), r));
    }
    EXPECT_EQ(sign_variations(plain), sign_variations(scaled));
    EXPECT_EQ(sign_variations(plain), chain.variations_at(r));
    EXPECT_EQ(chain.polys().back().degree(), 0);
  }
}

TEST(Multiplicity, AtIntegers) {
  EXPECT_EQ(multiplicity_at_integer(char_poly(complete(4)), -1), 3);
  EXPECT_EQ(multiplicity_at_integer(IntPoly{1, 0, 1}, 1), 0);
  for (int k = 2; k <= 8; ++k) EXPECT_GE(multiplicity_at_integer(char_poly(guo_mohar(k)), 1), k) << k;
  EXPECT_THROW(multiplicity_at_integer(IntPoly{}, 0), std::invalid_argument);
}

TEST(PolyText, Format) {
  EXPECT_EQ(to_text(IntPoly{-2, 0, 1}), "1*x^2 - 2");
  EXPECT_EQ(to_text(IntPoly{}), "0");
  EXPECT_EQ(to_text(IntPoly{1, -3}), "-3*x + 1");
  EXPECT_EQ(to_coefficient_strings(IntPoly{-2, 0, 1}), (std::vector<std::string>{"-2", "0", "1"}));
  EXPECT_EQ(parse_coefficients("-2, 0, 1"), (IntPoly{-2, 0, 1}));
  EXPECT_THROW(parse_coefficients("1,,2"), std::invalid_argument);
}

}  // namespace
}  // namespace specgap
