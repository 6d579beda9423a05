#pragma once

// Exact closed forms: Eulerian numbers and polynomials, transfer matrices for
// paths and cycles, family counting formulas, octahedral trace machinery.

#include <optional>
#include <vector>

#include "wgcount/algebra.hpp"
#include "wgcount/graph.hpp"

namespace wg {

/// Dense square matrix of big integers.
class IntMatrix {
 public:
  explicit IntMatrix(std::size_t dim) : dim_(dim), cells_(dim * dim) {}
  static IntMatrix identity(std::size_t dim);

  std::size_t dim() const { return dim_; }
  BigInt& at(std::size_t i, std::size_t j) { return cells_[i * dim_ + j]; }
  const BigInt& at(std::size_t i, std::size_t j) const { return cells_[i * dim_ + j]; }

  BigInt trace() const;
  BigInt entry_sum() const;
  IntMatrix power(unsigned k) const;
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t dim_;
  std::vector<BigInt> cells_;
};

/// B(n): (n+1)x(n+1), entry (i,j) = 1 iff i + j <= n.
IntMatrix transfer_matrix(long n);
/// B(n,m): entry (i,j) = 0 iff max(i+j, max(i,j)+m) > n.
IntMatrix octa_matrix(long n, long m);
/// I - x*M as a polynomial matrix.
PolyMatrix i_minus_x(const IntMatrix& m);

// ---------------------------------------------------------------- Eulerian

/// A(t,k) by the descent recurrence, memoized; 0 outside 1 <= k <= t.
BigInt eulerian_number(long t, long k);
/// Alternating-sum form sum_i (-1)^i C(t+1,i) (k-i)^t, the independent check.
BigInt eulerian_number_explicit(long t, long k);
/// A_t(x), or the shifted Abar_t(x) = A_t(x)/x. A_0 = Abar_0 = 1.
Polynomial eulerian_poly(long t, bool shifted);

// ---------------------------------------------------------------- paths and cycles

/// WL_k(n) = J^t B(n)^(k-1) J.
BigInt path_count(long k, long n);
/// WC_k(n) = tr B(n)^k for k >= 2; WC_1(n) = n + 1.
BigInt cycle_count(long k, long n);

/// det(I - x B(n)) for n >= 0; Q_{-1} = Q_{-2} = 1.
Polynomial q_poly(long n);
/// sum_{k=0}^{n+1} C(floor((n+k+1)/2), k) (-1)^floor((k+1)/2) x^k
Polynomial q_poly_binomial_sum(long n);
/// (Q_{n-2} - (1+x) Q_n) / x^2 by exact division.
Polynomial p_poly(long n);

/// sum_k s(M^k) x^k = (sum_i f_i(x)) / det(I - xM), f_i = det with row i replaced by ones.
PolyFraction entry_sum_gf(const IntMatrix& m);
/// F(n,x) = sum_{k>=0} WL_{k+1}(n) x^k, denominator normalized to Q_n.
PolyFraction path_gf(long n);
/// CF(n,x) = floor((n+1)/2) x - x Q_n'(x)/Q_n(x) = sum_{k>=1} WC_k(n) x^k.
PolyFraction cycle_gf(long n);

// ---------------------------------------------------------------- families

/// WK_t(n) = t sum_{r=1}^{floor((n+1)/2)} r^(t-1) + floor((n+2)/2)^t
BigInt complete_count(long t, long n);
/// Parity-split polynomial forms of WK_t for t = 0..5.
BigInt complete_count_parity_form(long t, long n);
/// WS_t(n) = sum_{i=0}^n (n+1-i)^t
BigInt star_count(long t, long n);
BigInt discrete_count(long t, long n);
/// WK_{p,q}(n) = sum_k ((k+1)^p - k^p)(n+1-k)^q
BigInt biclique_count(long p, long q, long n);

/// complete:t | star:t | discrete:t | biclique:p,q closed counts.
BigInt family_count(const FamilySpec& spec, long n);
/// Any family with a closed or transfer-matrix form (also null, path,
/// cycle, octahedron); nullopt for families without one.
std::optional<BigInt> closed_form_count(const FamilySpec& spec, long n);
bool has_closed_form(const FamilySpec& spec);

// ---------------------------------------------------------------- octahedron

/// sum_{m=0}^n (2m+1) tr B(n,m)^4
BigInt octa_count(long n);
/// Even/odd closed forms of WOH, by the parity of n.
BigInt octa_count_parity_form(long n);
/// The single (-1)^n closed form over 160.
BigInt octa_count_unified(long n);
/// p(r,m) closed form. Equals the matrix trace only for m <= r, which covers
/// every use in the octahedral sum.
BigInt p_trace(long r, long m);
/// trace((D(r-1) - S(r-1,m))^4) computed from the matrices.
BigInt p_trace_matrix(long r, long m);

}  // namespace wg
