#include "specgap/spectra.hpp"

#include <algorithm>
#include <json.hpp>

#include "specgap/families.hpp"

namespace specgap {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : IntMatrix(static_cast<int>(rows.size())) {
  int i = 0;
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != n_) throw std::invalid_argument("matrix is not square");
    int j = 0;
    for (long x : r) (*this)(i, j++) = x;
    ++i;
  }
}

IntMatrix IntMatrix::principal(const std::vector<int>& subset) const {
  const int k = static_cast<int>(subset.size());
  IntMatrix out(k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) out(i, j) = (*this)(subset[i], subset[j]);
  }
  return out;
}

IntMatrix adjacency_matrix(const Graph& g) {
  IntMatrix a(g.order());
  for (const auto& [u, v] : g.edges()) a(u, v) = a(v, u) = 1;
  return a;
}

IntMatrix m_matrix(const Graph& g) {
  const int n = g.order();
  IntMatrix m(n);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) m(u, v) = popcount(g.row(u) & g.row(v)) - (u == v ? 1 : 0);
  }
  return m;
}

BigInt determinant(const IntMatrix& m) {
  const int n = m.dim();
  if (n == 0) return 1;
  std::vector<BigInt> a(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i * n + j] = m(i, j);
  }
  auto at = [&](int i, int j) -> BigInt& { return a[static_cast<std::size_t>(i) * n + j]; };
  int sign = 1;
  BigInt prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (at(k, k) == 0) {
      int swap_row = k + 1;
      while (swap_row < n && at(swap_row, k) == 0) ++swap_row;
      if (swap_row == n) return 0;
      for (int j = 0; j < n; ++j) std::swap(at(k, j), at(swap_row, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        BigInt t = at(i, j) * at(k, k) - at(i, k) * at(k, j);
        mpz_divexact(at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = at(k, k);
  }
  return sign * at(n - 1, n - 1);
}

IntPoly char_poly_berkowitz(const IntMatrix& m) {
  const int n = m.dim();
  if (n == 0) return IntPoly{1};
  // Coefficients of the running characteristic polynomial, highest first.
  std::vector<BigInt> poly{1, -m(0, 0)};
  std::vector<BigInt> toeplitz;
  std::vector<BigInt> v;
  std::vector<BigInt> next;
  for (int r = 1; r < n; ++r) {
    toeplitz.assign(static_cast<std::size_t>(r) + 2, 0);
    toeplitz[0] = 1;
    toeplitz[1] = -m(r, r);
    v.assign(static_cast<std::size_t>(r), 0);
    for (int i = 0; i < r; ++i) v[i] = m(i, r);
    for (int k = 0; k < r; ++k) {
      BigInt dot = 0;
      for (int j = 0; j < r; ++j) {
        if (m(r, j) != 0 && v[j] != 0) dot += v[j] * m(r, j);
      }
      toeplitz[k + 2] = -dot;
      if (k + 1 == r) break;
      next.assign(static_cast<std::size_t>(r), 0);
      for (int i = 0; i < r; ++i) {
        for (int j = 0; j < r; ++j) {
          const long e = m(i, j);
          if (e == 1) {
            next[i] += v[j];
          } else if (e != 0) {
            next[i] += v[j] * e;
          }
        }
      }
      v.swap(next);
    }
    std::vector<BigInt> updated(static_cast<std::size_t>(r) + 2, 0);
    for (int i = 0; i <= r + 1; ++i) {
      for (int j = 0; j <= std::min(i, r); ++j) {
        if (toeplitz[i - j] != 0) {
          mpz_addmul(updated[i].get_mpz_t(), toeplitz[i - j].get_mpz_t(), poly[j].get_mpz_t());
        }
      }
    }
    poly.swap(updated);
  }
  std::reverse(poly.begin(), poly.end());
  return IntPoly(std::move(poly));
}

IntPoly char_poly_faddeev_leverrier(const IntMatrix& m) {
  const int n = m.dim();
  std::vector<BigInt> coeffs(static_cast<std::size_t>(n) + 1);
  coeffs[n] = 1;
  std::vector<BigInt> mk(static_cast<std::size_t>(n) * n, 0);
  std::vector<BigInt> prod(static_cast<std::size_t>(n) * n);
  for (int k = 1; k <= n; ++k) {
    // M_k = A M_{k-1} + c_{n-k+1} I
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        BigInt s = 0;
        for (int l = 0; l < n; ++l) {
          const long e = m(i, l);
          if (e != 0) s += mk[l * n + j] * e;
        }
        prod[i * n + j] = s;
      }
    }
    for (int i = 0; i < n; ++i) prod[i * n + i] += coeffs[n - k + 1];
    mk.swap(prod);
    // c_{n-k} = -tr(A M_k) / k
    BigInt trace = 0;
    for (int i = 0; i < n; ++i) {
      for (int l = 0; l < n; ++l) {
        const long e = m(i, l);
        if (e != 0) trace += mk[l * n + i] * e;
      }
    }
    BigInt c = -trace;
    mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(k));
    coeffs[n - k] = c;
  }
  return IntPoly(std::move(coeffs));
}

IntPoly char_poly(const Graph& g) { return char_poly_berkowitz(adjacency_matrix(g)); }

GapCertificate certify_gap(const Graph& g) { return certify_gap(g, char_poly(g)); }

GapCertificate certify_gap(const Graph& g, const IntPoly& charpoly) {
  GapCertificate cert;
  cert.graph6 = to_graph6(g);
  cert.n = g.order();
  cert.charpoly = charpoly;
  cert.roots_in_gap = count_roots_open(charpoly, BigRat(-1), BigRat(1), true);
  cert.mult_plus1 = multiplicity_at_integer(charpoly, 1);
  cert.mult_minus1 = multiplicity_at_integer(charpoly, -1);
  cert.verdict = cert.roots_in_gap == 0;
  return cert;
}

std::string certificate_json(const GapCertificate& cert) {
  nlohmann::ordered_json j;
  j["graph6"] = cert.graph6;
  j["n"] = cert.n;
  j["charpoly"] = to_coefficient_strings(cert.charpoly);
  j["gap"] = cert.verdict;
  j["mult_plus1"] = cert.mult_plus1;
  j["mult_minus1"] = cert.mult_minus1;
  return j.dump();
}

BigInt m_matrix_minor(const Graph& g, const std::vector<int>& subset) {
  if (subset.empty()) throw std::invalid_argument("empty vertex subset");
  for (int v : subset) {
    if (v < 0 || v >= g.order()) {
      throw std::out_of_range("vertex " + std::to_string(v) + " outside the graph");
    }
  }
  return determinant(m_matrix(g).principal(subset));
}

std::optional<ObstructionWitness> find_negative_witness(const Graph& g, int max_subset_size) {
  const int n = g.order();
  const IntMatrix m = m_matrix(g);
  for (int size = 1; size <= std::min(max_subset_size, n); ++size) {
    std::vector<int> subset(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) subset[i] = i;
    while (true) {
      IntMatrix minor = m.principal(subset);
      BigInt det = determinant(minor);
      if (det < 0) return ObstructionWitness{subset, std::move(minor), std::move(det)};
      int i = size - 1;
      while (i >= 0 && subset[i] == n - size + i) --i;
      if (i < 0) break;
      ++subset[i];
      for (int j = i + 1; j < size; ++j) subset[j] = subset[j - 1] + 1;
    }
  }
  return std::nullopt;
}

bool median_within_unit(const Graph& g) {
  const int n = g.order();
  if (n < 2) throw std::invalid_argument("median eigenvalues need at least two vertices");
  const IntPoly phi = char_poly(g);
  const BigRat bound(root_bound(phi));
  const int above = count_roots_open(phi, BigRat(1), bound, true);
  const int below = count_roots_open(phi, -bound, BigRat(-1), true);
  // lambda_H = lambda_h (1-based, decreasing) is <= 1 iff fewer than h
  // eigenvalues exceed 1; lambda_L = lambda_l is >= -1 iff at most n - l
  // eigenvalues lie below -1.
  const int h = n % 2 == 0 ? n / 2 : (n + 1) / 2;
  const int l = n % 2 == 0 ? n / 2 + 1 : (n + 1) / 2;
  return above <= h - 1 && below <= n - l;
}

bool verify_sameeigs_identity(int k) {
  if (k < 2) throw std::invalid_argument("k must be at least 2");
  const IntPoly gm = char_poly(guo_mohar(2 * k));
  const IntPoly ks = char_poly(kollar_sarnak(k));
  const IntPoly lhs = IntPoly{-3, 1} * poly_pow(IntPoly{1, 1}, 3) * gm;
  const IntPoly rhs = IntPoly{3, 1} * poly_pow(IntPoly{-1, 1}, 3) * ks * ks;
  return lhs == rhs;
}

IntPoly guo_mohar_tau_polynomial(int k) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  // In s = x^2: prod_j (s - 5 - 4 cos(2 pi j / k)) = E_k(s - 5) - 2^(k+1).
  const IntPoly shifted{-5, 1};
  IntPoly e_prev{2};
  IntPoly e_cur = shifted;
  for (int i = 2; i <= k; ++i) {
    IntPoly e_next = shifted * e_cur - e_prev * BigInt(4);
    e_prev = std::move(e_cur);
    e_cur = std::move(e_next);
  }
  BigInt two_pow;
  mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>(k) + 1);
  return e_cur - IntPoly::constant(two_pow);
}

IntPoly guo_mohar_charpoly_formula(int k) {
  if (k < 2) throw std::invalid_argument("k must be at least 2");
  const IntPoly x_squared{0, 0, 1};
  return poly_pow(IntPoly{-1, 0, 1}, k) * guo_mohar_tau_polynomial(k).compose(x_squared);
}

bool gm_spectrum_check(int k) {
  if (k < 2) throw std::invalid_argument("k must be at least 2");
  if (4 * k > kMaxVertices) throw std::invalid_argument("GM(k) exceeds 64 vertices");
  const IntPoly phi = char_poly(guo_mohar(k));
  if (phi != guo_mohar_charpoly_formula(k)) return false;
  try {
    exact_divide(phi, poly_pow(IntPoly{-1, 0, 1}, k));
  } catch (const NotDivisible&) {
    return false;
  }
  return true;
}

namespace {

// Maps (a, b) inside [1, 3] or [-3, -1] to the interval of squares.
std::pair<BigRat, BigRat> squared_interval(const BigRat& a, const BigRat& b) {
  if (!(a < b)) throw std::invalid_argument("empty interval");
  const BigRat one(1), three(3);
  if (a >= one && b <= three) return {a * a, b * b};
  if (a >= -three && b <= -one) return {b * b, a * a};
  throw std::invalid_argument("interval (" + to_string(a) + ", " + to_string(b) +
                              ") is not inside [1, 3] or [-3, -1]");
}

bool tau_hits(const BigRat& lo_sq, const BigRat& hi_sq, int k) {
  // Roots of the (x^2 - 1)^k factor sit at s = 1, never inside (lo^2, hi^2).
  return count_roots_open(guo_mohar_tau_polynomial(k), lo_sq, hi_sq, false) > 0;
}

}  // namespace

bool gm_has_eigenvalue_in(const BigRat& a, const BigRat& b, int k) {
  if (k < 2) throw std::invalid_argument("k must be at least 2");
  const auto [lo, hi] = squared_interval(a, b);
  return tau_hits(lo, hi, k);
}

std::optional<int> interval_hits_all_large_gm(const BigRat& a, const BigRat& b, int k_max) {
  const auto [lo, hi] = squared_interval(a, b);
  if (k_max < 2) return std::nullopt;
  int k0 = k_max + 1;
  for (int k = k_max; k >= 2; --k) {
    if (!tau_hits(lo, hi, k)) break;
    k0 = k;
  }
  if (k0 > k_max) return std::nullopt;
  return k0;
}

}  // namespace specgap
