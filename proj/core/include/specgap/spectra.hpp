#pragma once

#include <optional>
#include <string>
#include <vector>

#include "specgap/graph.hpp"
#include "specgap/poly.hpp"

namespace specgap {

/// Small dense integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, 0) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  int dim() const noexcept { return n_; }
  long& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  long operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  IntMatrix principal(const std::vector<int>& subset) const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  int n_ = 0;
  std::vector<long> a_;
};

IntMatrix adjacency_matrix(const Graph& g);
/// A^2 - I. Entry (u, v) counts 2-walks from u to v, less one on the diagonal.
IntMatrix m_matrix(const Graph& g);

/// Fraction-free Gaussian elimination (Bareiss).
BigInt determinant(const IntMatrix& m);

/// det(xI - M) by Berkowitz's division-free algorithm.
IntPoly char_poly_berkowitz(const IntMatrix& m);
/// det(xI - M) by Faddeev-LeVerrier with exact integer divisions.
IntPoly char_poly_faddeev_leverrier(const IntMatrix& m);

IntPoly char_poly(const Graph& g);

/// Exact record of the spectrum's relation to the open interval (-1, 1).
struct GapCertificate {
  std::string graph6;
  int n = 0;
  IntPoly charpoly;
  int roots_in_gap = 0;  ///< with multiplicity
  int mult_plus1 = 0;
  int mult_minus1 = 0;
  bool verdict = false;  ///< true iff roots_in_gap == 0
};

GapCertificate certify_gap(const Graph& g);
GapCertificate certify_gap(const Graph& g, const IntPoly& charpoly);
/// {"graph6", "n", "charpoly", "gap", "mult_plus1", "mult_minus1"} on one line.
std::string certificate_json(const GapCertificate& cert);

/// Principal minor of A^2 - I on `subset`. Throws std::out_of_range for
/// vertices outside the graph and std::invalid_argument for an empty subset.
BigInt m_matrix_minor(const Graph& g, const std::vector<int>& subset);

struct ObstructionWitness {
  std::vector<int> subset;
  IntMatrix minor;
  BigInt determinant;
};

/// Smallest-first search for a principal minor of A^2 - I that is negative.
std::optional<ObstructionWitness> find_negative_witness(const Graph& g, int max_subset_size = 4);

/// Decides lambda_H <= 1 and lambda_L >= -1 for the median eigenvalues
/// lambda_H = lambda_{n/2}, lambda_L = lambda_{n/2+1} (both lambda_{(n+1)/2}
/// for odd n), eigenvalues sorted in decreasing order.
bool median_within_unit(const Graph& g);

/// (x-3)(x+1)^3 phi(GM(2k)) == (x+3)(x-1)^3 phi(KS(k))^2, exactly.
bool verify_sameeigs_identity(int k);

/// (x^2-1)^k * prod_{j<k} (x^2 - 5 - 4 cos(2 pi j / k)), with the cosine
/// product expressed through the integer recurrence E_0 = 2, E_1 = s,
/// E_k = s E_{k-1} - 4 E_{k-2} evaluated at s = x^2 - 5, minus 2^(k+1).
IntPoly guo_mohar_charpoly_formula(int k);
/// prod_{j<k} (s - 5 - 4 cos(2 pi j / k)) as a polynomial in s = x^2.
IntPoly guo_mohar_tau_polynomial(int k);

/// Checks char_poly(GM(k)) against the closed form and that (x^2-1)^k
/// divides it. Needs 2 <= k <= 16 (the graph must fit in 64 vertices).
bool gm_spectrum_check(int k);

/// Smallest k0 >= 2 such that GM(k) has an eigenvalue in (a, b) for every
/// k in [k0, k_max]; nullopt when GM(k_max) itself misses the interval.
/// The interval must lie inside [1, 3] or [-3, -1].
std::optional<int> interval_hits_all_large_gm(const BigRat& a, const BigRat& b, int k_max);
/// Whether GM(k) has an eigenvalue strictly inside (a, b), same interval rules.
bool gm_has_eigenvalue_in(const BigRat& a, const BigRat& b, int k);

}  // namespace specgap
