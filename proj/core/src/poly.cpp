#include "specgap/poly.hpp"

#include <algorithm>
#include <cctype>

namespace specgap {

// --- rationals ---------------------------------------------------------------

BigRat make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  BigRat r(num, den);
  r.canonicalize();
  return r;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

BigInt parse_integer(std::string_view text) {
  text = trim(text);
  std::string s(text);
  if (!s.empty() && s.front() == '+') s.erase(0, 1);
  const bool digits = !s.empty() &&
                      std::all_of(s.begin() + (s.front() == '-' ? 1 : 0), s.end(),
                                  [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) &&
                      s != "-";
  if (!digits) throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  return BigInt(s, 10);
}

}  // namespace

BigRat parse_rational(std::string_view text) {
  text = trim(text);
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    return make_rational(parse_integer(text.substr(0, slash)), parse_integer(text.substr(slash + 1)));
  }
  if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    const std::string_view whole = text.substr(0, dot);
    const std::string_view frac = text.substr(dot + 1);
    const bool negative = whole.starts_with('-');
    std::string digits(whole.substr(negative || whole.starts_with('+') ? 1 : 0));
    digits += frac;
    if (digits.empty()) throw std::invalid_argument("not a number: '" + std::string(text) + "'");
    BigInt den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
    BigInt num = parse_integer(digits);
    if (negative) num = -num;
    return make_rational(num, den);
  }
  return BigRat(parse_integer(text));
}

std::string to_string(const BigRat& r) { return r.get_str(); }

// --- IntPoly -----------------------------------------------------------------

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPoly IntPoly::constant(const BigInt& c) { return IntPoly(std::vector<BigInt>{c}); }

IntPoly IntPoly::monomial(const BigInt& c, int degree) {
  std::vector<BigInt> coeffs(static_cast<std::size_t>(degree) + 1);
  coeffs.back() = c;
  return IntPoly(std::move(coeffs));
}

IntPoly IntPoly::linear_root(const BigRat& r) {
  return IntPoly(std::vector<BigInt>{-r.get_num(), r.get_den()});
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const BigInt& IntPoly::leading() const {
  if (coeffs_.empty()) throw std::logic_error("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

BigInt IntPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[i];
}

IntPoly IntPoly::operator-() const {
  IntPoly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

IntPoly& IntPoly::operator+=(const IntPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator*=(const BigInt& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
  }
  return IntPoly(std::move(out));
}

IntPoly IntPoly::reflected() const {
  IntPoly out = *this;
  for (std::size_t i = 1; i < out.coeffs_.size(); i += 2) out.coeffs_[i] = -out.coeffs_[i];
  return out;
}

IntPoly IntPoly::compose(const IntPoly& q) const {
  IntPoly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * q + IntPoly::constant(*it);
  }
  return acc;
}

BigInt IntPoly::eval(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPoly poly_add(const IntPoly& p, const IntPoly& q) { return p + q; }
IntPoly poly_mul(const IntPoly& p, const IntPoly& q) { return p * q; }

IntPoly poly_pow(const IntPoly& p, int e) {
  if (e < 0) throw std::invalid_argument("negative exponent");
  IntPoly result{1};
  IntPoly base = p;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

IntPoly poly_derivative(const IntPoly& p) {
  if (p.degree() < 1) return {};
  std::vector<BigInt> out(static_cast<std::size_t>(p.degree()));
  for (int i = 1; i <= p.degree(); ++i) out[i - 1] = p.coeffs()[i] * i;
  return IntPoly(std::move(out));
}

BigInt content(const IntPoly& p) {
  BigInt g = 0;
  for (const auto& c : p.coeffs()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

namespace {

// In-place division of every coefficient by a known exact divisor.
IntPoly divide_coefficients(const IntPoly& p, const BigInt& d) {
  std::vector<BigInt> out = p.coeffs();
  for (auto& c : out) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
  return IntPoly(std::move(out));
}

}  // namespace

IntPoly primitive_part(const IntPoly& p) {
  if (p.is_zero()) return {};
  BigInt c = content(p);
  if (p.leading() < 0) c = -c;
  if (c == 1) return p;
  return divide_coefficients(p, c);
}

PseudoDivision pseudo_divide(const IntPoly& p, const IntPoly& q) {
  if (q.is_zero()) throw std::invalid_argument("pseudo-division by the zero polynomial");
  const int dq = q.degree();
  if (p.degree() < dq) return {IntPoly{}, p};

  const BigInt& lc = q.leading();
  std::vector<BigInt> r = p.coeffs();
  std::vector<BigInt> quot(static_cast<std::size_t>(p.degree() - dq) + 1);
  int e = p.degree() - dq + 1;
  int dr = p.degree();
  while (dr >= dq) {
    const BigInt lead = r[dr];
    const int shift = dr - dq;
    for (auto& c : quot) c *= lc;
    quot[shift] += lead;
    for (int i = 0; i < dr; ++i) r[i] *= lc;
    for (int i = 0; i < dq; ++i) {
      mpz_submul(r[i + shift].get_mpz_t(), lead.get_mpz_t(), q.coeffs()[i].get_mpz_t());
    }
    r[dr] = 0;
    --e;
    while (dr >= 0 && r[dr] == 0) --dr;
  }
  r.resize(static_cast<std::size_t>(dr + 1));
  IntPoly rem(std::move(r));
  IntPoly qq(std::move(quot));
  if (e > 0) {
    BigInt scale;
    mpz_pow_ui(scale.get_mpz_t(), lc.get_mpz_t(), static_cast<unsigned long>(e));
    rem *= scale;
    qq *= scale;
  }
  return {std::move(qq), std::move(rem)};
}

IntPoly poly_gcd(const IntPoly& p, const IntPoly& q) {
  IntPoly a = primitive_part(p);
  IntPoly b = primitive_part(q);
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    IntPoly r = pseudo_divide(a, b).remainder;
    a = std::move(b);
    b = primitive_part(r);
  }
  return a;
}

NotDivisible::NotDivisible(IntPoly remainder)
    : std::runtime_error("polynomial not divisible; remainder " + to_text(remainder)),
      remainder_(std::move(remainder)) {}

IntPoly exact_divide(const IntPoly& p, const IntPoly& q) {
  if (q.is_zero()) throw std::invalid_argument("division by the zero polynomial");
  if (p.is_zero()) return {};
  const int dq = q.degree();
  if (p.degree() < dq) throw NotDivisible(p);

  const BigInt& lc = q.leading();
  std::vector<BigInt> r = p.coeffs();
  std::vector<BigInt> quot(static_cast<std::size_t>(p.degree() - dq) + 1);
  int dr = p.degree();
  BigInt c;
  while (dr >= dq) {
    if (!mpz_divisible_p(r[dr].get_mpz_t(), lc.get_mpz_t())) {
      throw NotDivisible(pseudo_divide(p, q).remainder);
    }
    mpz_divexact(c.get_mpz_t(), r[dr].get_mpz_t(), lc.get_mpz_t());
    const int shift = dr - dq;
    quot[shift] = c;
    for (int i = 0; i <= dq; ++i) {
      mpz_submul(r[i + shift].get_mpz_t(), c.get_mpz_t(), q.coeffs()[i].get_mpz_t());
    }
    while (dr >= 0 && r[dr] == 0) --dr;
  }
  if (dr >= 0) {
    r.resize(static_cast<std::size_t>(dr + 1));
    throw NotDivisible(IntPoly(std::move(r)));
  }
  return IntPoly(std::move(quot));
}

SquarefreeDecomposition squarefree_decomposition(const IntPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("squarefree decomposition of the zero polynomial");
  SquarefreeDecomposition out;
  IntPoly f = primitive_part(p);
  out.unit = p.leading() / f.leading();
  if (f.degree() == 0) return out;

  // Yun: b_i carries the product of factors of multiplicity >= i.
  const IntPoly df = poly_derivative(f);
  const IntPoly a0 = poly_gcd(f, df);
  IntPoly b = exact_divide(f, a0);
  IntPoly c = exact_divide(df, a0);
  IntPoly d = c - poly_derivative(b);
  for (int i = 1; b.degree() > 0; ++i) {
    const IntPoly a = poly_gcd(b, d);
    if (a.degree() > 0) out.factors.push_back({a, i});
    b = exact_divide(b, a);
    c = exact_divide(d, a);
    d = c - poly_derivative(b);
  }
  return out;
}

int sign_at(const IntPoly& p, const BigRat& r) {
  if (p.is_zero()) return 0;
  const BigInt& num = r.get_num();
  const BigInt& den = r.get_den();
  const auto& cs = p.coeffs();
  BigInt acc = cs.back();
  BigInt den_pow = 1;
  for (int i = p.degree() - 1; i >= 0; --i) {
    den_pow *= den;
    acc *= num;
    mpz_addmul(acc.get_mpz_t(), cs[i].get_mpz_t(), den_pow.get_mpz_t());
  }
  return sgn(acc);
}

int sign_at_infinity(const IntPoly& p, bool positive) {
  if (p.is_zero()) return 0;
  const int s = sgn(p.leading());
  return (positive || p.degree() % 2 == 0) ? s : -s;
}

int sign_variations(const std::vector<int>& signs) {
  int count = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

SturmChain::SturmChain(const IntPoly& squarefree) {
  if (squarefree.is_zero()) return;
  polys_.push_back(primitive_part(squarefree));
  if (squarefree.degree() == 0) return;
  polys_.push_back(primitive_part(poly_derivative(polys_[0])));
  while (polys_.back().degree() > 0) {
    const IntPoly& prev = polys_[polys_.size() - 2];
    const IntPoly& cur = polys_.back();
    IntPoly rem = pseudo_divide(prev, cur).remainder;
    if (rem.is_zero()) break;
    // The pseudo-remainder was scaled by lc^(deg prev - deg cur + 1); undo a
    // negative scale so that only positive factors enter the chain.
    const int e = prev.degree() - cur.degree() + 1;
    const bool negative_scale = cur.leading() < 0 && e % 2 == 1;
    if (!negative_scale) rem = -rem;
    const BigInt c = content(rem);
    polys_.push_back(c == 1 ? std::move(rem) : divide_coefficients(rem, c));
  }
}

int SturmChain::variations_at(const BigRat& r) const {
  std::vector<int> signs;
  signs.reserve(polys_.size());
  for (const auto& p : polys_) signs.push_back(sign_at(p, r));
  return sign_variations(signs);
}

int SturmChain::variations_at_infinity(bool positive) const {
  std::vector<int> signs;
  signs.reserve(polys_.size());
  for (const auto& p : polys_) signs.push_back(sign_at_infinity(p, positive));
  return sign_variations(signs);
}

int SturmChain::count_half_open(const BigRat& a, const BigRat& b) const {
  return variations_at(a) - variations_at(b);
}

namespace {

IntPoly strip_root(const IntPoly& q, const BigRat& r) {
  if (q.degree() > 0 && sign_at(q, r) == 0) return exact_divide(q, IntPoly::linear_root(r));
  return q;
}

}  // namespace

int count_roots_open(const IntPoly& p, const BigRat& a, const BigRat& b, bool with_multiplicity) {
  if (p.is_zero()) throw std::invalid_argument("root count of the zero polynomial");
  if (!(a < b)) {
    throw std::invalid_argument("empty interval (" + to_string(a) + ", " + to_string(b) + ")");
  }
  int total = 0;
  for (const auto& [factor, mult] : squarefree_decomposition(p).factors) {
    const IntPoly q = strip_root(strip_root(factor, a), b);
    if (q.degree() < 1) continue;
    const int distinct = SturmChain(q).count_half_open(a, b);
    total += with_multiplicity ? distinct * mult : distinct;
  }
  return total;
}

int count_roots_at(const IntPoly& p, const BigRat& r, bool with_multiplicity) {
  if (p.is_zero()) throw std::invalid_argument("root count of the zero polynomial");
  for (const auto& [factor, mult] : squarefree_decomposition(p).factors) {
    if (sign_at(factor, r) == 0) return with_multiplicity ? mult : 1;
  }
  return 0;
}

int multiplicity_at_integer(const IntPoly& p, const BigInt& r) {
  if (p.is_zero()) throw std::invalid_argument("multiplicity in the zero polynomial");
  std::vector<BigInt> cs = p.coeffs();
  int m = 0;
  while (cs.size() > 1) {
    // Synthetic division by (x - r); the final accumulator is p(r).
    std::vector<BigInt> quot(cs.size() - 1);
    BigInt acc = cs.back();
    for (std::size_t i = cs.size() - 1; i-- > 0;) {
      quot[i] = acc;
      acc = cs[i] + acc * r;
    }
    if (acc != 0) break;
    cs = std::move(quot);
    ++m;
  }
  return m;
}

BigInt root_bound(const IntPoly& p) {
  if (p.degree() < 1) return 1;
  BigInt max_abs = 0;
  for (int i = 0; i < p.degree(); ++i) {
    const BigInt a = abs(p.coeffs()[i]);
    if (a > max_abs) max_abs = a;
  }
  BigInt q = max_abs / abs(p.leading());
  return q + 2;
}

std::string to_text(const IntPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int i = p.degree(); i >= 0; --i) {
    const BigInt& c = p.coeffs()[i];
    if (c == 0) continue;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    out += BigInt(abs(c)).get_str();
    if (i == 1) {
      out += "*x";
    } else if (i > 1) {
      out += "*x^" + std::to_string(i);
    }
  }
  return out;
}

std::vector<std::string> to_coefficient_strings(const IntPoly& p) {
  std::vector<std::string> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.push_back(c.get_str());
  return out;
}

IntPoly parse_coefficients(std::string_view text) {
  std::vector<BigInt> coeffs;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    coeffs.push_back(parse_integer(text.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return IntPoly(std::move(coeffs));
}

}  // namespace specgap
