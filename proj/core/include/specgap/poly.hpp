#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace specgap {

using BigInt = mpz_class;
/// Always canonical: lowest terms, positive denominator.
using BigRat = mpq_class;

BigRat make_rational(const BigInt& num, const BigInt& den);
/// Parses "p", "-p/q" or a decimal such as "2.9".
BigRat parse_rational(std::string_view text);
std::string to_string(const BigRat& r);

/// Dense polynomial with integer coefficients, lowest degree first.
/// The zero polynomial has no coefficients; otherwise the leading
/// coefficient is nonzero.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly constant(const BigInt& c);
  static IntPoly monomial(const BigInt& c, int degree);
  /// den*x - num, the primitive linear polynomial vanishing at num/den.
  static IntPoly linear_root(const BigRat& r);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const BigInt& leading() const;
  const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
  BigInt coeff(int i) const;

  IntPoly operator-() const;
  IntPoly& operator+=(const IntPoly& other);
  IntPoly& operator-=(const IntPoly& other);
  IntPoly& operator*=(const BigInt& c);

  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(IntPoly a, const BigInt& c) { return a *= c; }
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// p(-x).
  IntPoly reflected() const;
  /// p(q(x)).
  IntPoly compose(const IntPoly& q) const;
  BigInt eval(const BigInt& x) const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

IntPoly poly_add(const IntPoly& p, const IntPoly& q);
IntPoly poly_mul(const IntPoly& p, const IntPoly& q);
IntPoly poly_pow(const IntPoly& p, int e);
IntPoly poly_derivative(const IntPoly& p);

/// Nonnegative gcd of the coefficients (0 for the zero polynomial).
BigInt content(const IntPoly& p);
/// p / content(p), with positive leading coefficient.
IntPoly primitive_part(const IntPoly& p);

/// lc(q)^(deg p - deg q + 1) * p = quot * q + rem.
struct PseudoDivision {
  IntPoly quotient;
  IntPoly remainder;
};
PseudoDivision pseudo_divide(const IntPoly& p, const IntPoly& q);

/// Primitive gcd with positive leading coefficient; gcd(0, 0) = 0.
IntPoly poly_gcd(const IntPoly& p, const IntPoly& q);

class NotDivisible : public std::runtime_error {
 public:
  explicit NotDivisible(IntPoly remainder);
  const IntPoly& remainder() const noexcept { return remainder_; }

 private:
  IntPoly remainder_;
};

/// Exact quotient p / q in Z[x]. Throws NotDivisible (carrying the
/// pseudo-remainder) when q does not divide p with an integral quotient.
IntPoly exact_divide(const IntPoly& p, const IntPoly& q);

struct SquarefreeFactor {
  IntPoly factor;
  int multiplicity;
};

/// Yun decomposition: p = unit * prod factor_i^multiplicity_i with each factor
/// primitive, squarefree, positive leading coefficient and pairwise coprime.
/// Factors are listed by increasing multiplicity.
struct SquarefreeDecomposition {
  BigInt unit;
  std::vector<SquarefreeFactor> factors;
};
SquarefreeDecomposition squarefree_decomposition(const IntPoly& p);

/// Sign of p(r), computed exactly.
int sign_at(const IntPoly& p, const BigRat& r);
/// Sign of p at +infinity (positive) or -infinity.
int sign_at_infinity(const IntPoly& p, bool positive);

/// Sturm chain of a squarefree polynomial: p, p', then negated
/// pseudo-remainders scaled by positive factors only.
class SturmChain {
 public:
  explicit SturmChain(const IntPoly& squarefree);
  const std::vector<IntPoly>& polys() const noexcept { return polys_; }
  int variations_at(const BigRat& r) const;
  int variations_at_infinity(bool positive) const;
  /// Distinct roots in (a, b]; both endpoints may be roots only on the right.
  int count_half_open(const BigRat& a, const BigRat& b) const;

 private:
  std::vector<IntPoly> polys_;
};

int sign_variations(const std::vector<int>& signs);

/// Real roots of p strictly inside (a, b), counted with multiplicity when
/// requested. Throws std::invalid_argument unless a < b and p != 0.
int count_roots_open(const IntPoly& p, const BigRat& a, const BigRat& b,
                     bool with_multiplicity);

/// Number of roots equal to r (with multiplicity when requested).
int count_roots_at(const IntPoly& p, const BigRat& r, bool with_multiplicity);

/// Largest m with (x - r)^m dividing p. Throws for the zero polynomial.
int multiplicity_at_integer(const IntPoly& p, const BigInt& r);

/// Bound B with every real root in (-B, B).
BigInt root_bound(const IntPoly& p);

/// "c_d*x^d + ... + c_0" with explicit signs; "0" for the zero polynomial.
std::string to_text(const IntPoly& p);
/// Decimal coefficient strings, low to high degree.
std::vector<std::string> to_coefficient_strings(const IntPoly& p);
/// Comma-separated integer coefficients, low to high degree.
IntPoly parse_coefficients(std::string_view text);

}  // namespace specgap
