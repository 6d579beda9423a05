#pragma once

// Exact arithmetic substrate: big integers and rationals, dense univariate
// polynomials, polynomial matrices and rational functions in one variable.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace wg {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// Raised when an exact division leaves a remainder. Callers treat this as a
/// failed structural check rather than a crash.
class ExactDivisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

BigRational make_rational(const BigInt& num, const BigInt& den);
BigRational parse_rational(const std::string& text);
std::string to_string(const BigInt& v);
std::string to_string(const BigRational& v);

/// Generalized binomial n(n-1)...(n-k+1)/k!, valid for negative n.
BigInt binomial(long n, long k);
BigInt factorial(long n);
BigInt power(const BigInt& base, unsigned long exponent);

/// Dense polynomial in x with rational coefficients, ascending order.
/// No trailing zeros are stored; the zero polynomial has no coefficients and
/// degree() == kZeroDegree (stands in for minus infinity).
class Polynomial {
 public:
  static constexpr int kZeroDegree = -1;

  Polynomial() = default;
  Polynomial(std::initializer_list<long> coeffs);
  explicit Polynomial(std::vector<BigRational> coeffs);
  static Polynomial constant(const BigRational& c);
  static Polynomial monomial(const BigRational& c, std::size_t power);
  static Polynomial from_integers(const std::vector<BigInt>& coeffs);
  /// (1 - x)^a (1 + x)^b
  static Polynomial one_minus_x_pow(unsigned a, unsigned b = 0);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  std::size_t size() const { return coeffs_.size(); }
  const std::vector<BigRational>& coefficients() const { return coeffs_; }
  /// Coefficient of x^i; zero past the degree.
  BigRational coeff(std::size_t i) const;
  bool is_integral() const;
  std::vector<BigInt> integer_coefficients() const;

  BigRational eval(const BigRational& x) const;
  Polynomial derivative() const;
  /// p(-x)
  Polynomial reflect() const;
  /// First `terms` coefficients, zero padded.
  std::vector<BigRational> truncated(std::size_t terms) const;
  bool is_palindromic() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const BigRational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator*(Polynomial a, const BigRational& c) { return a *= c; }
  friend Polynomial operator-(const Polynomial& a);
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  /// Canonical text: ascending powers, explicit `*`, unit coefficients
  /// elided, e.g. `1 + 8*x + 8*x^2 + x^3`.
  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<BigRational> coeffs_;
};

struct DivMod {
  Polynomial quotient;
  Polynomial remainder;
};

DivMod divmod(const Polynomial& a, const Polynomial& b);
/// a / b, throwing ExactDivisionError on a nonzero remainder.
Polynomial exact_div(const Polynomial& a, const Polynomial& b);

/// Square matrix of polynomials.
class PolyMatrix {
 public:
  explicit PolyMatrix(std::size_t dim);
  static PolyMatrix identity(std::size_t dim);

  std::size_t dim() const { return dim_; }
  Polynomial& at(std::size_t i, std::size_t j) { return cells_[i * dim_ + j]; }
  const Polynomial& at(std::size_t i, std::size_t j) const { return cells_[i * dim_ + j]; }

 private:
  std::size_t dim_;
  std::vector<Polynomial> cells_;
};

/// Fraction-free (Bareiss) determinant with row pivoting.
Polynomial poly_det(PolyMatrix m);

/// Numerator/denominator pair with den(0) != 0, read as a power series.
class PolyFraction {
 public:
  PolyFraction(Polynomial num, Polynomial den);

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }
  std::vector<BigRational> series(std::size_t terms) const;
  /// Equality as rational functions (cross multiplication).
  bool same_function(const PolyFraction& other) const;

 private:
  Polynomial num_;
  Polynomial den_;
};

/// Power-series quotient a/b to `terms` coefficients; b(0) must be nonzero.
std::vector<BigRational> series_divide(const Polynomial& a, const Polynomial& b,
                                       std::size_t terms);

}  // namespace wg
