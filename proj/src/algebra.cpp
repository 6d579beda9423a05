#include "wgcount/algebra.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace wg {

BigRational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("zero denominator");
  BigRational r(num, den);
  r.canonicalize();
  return r;
}

BigRational parse_rational(const std::string& text) {
  BigRational r;
  if (r.set_str(text, 10) != 0) throw std::invalid_argument("not a rational: " + text);
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
  r.canonicalize();
  return r;
}

std::string to_string(const BigInt& v) { return v.get_str(); }
std::string to_string(const BigRational& v) { return v.get_str(); }

BigInt binomial(long n, long k) {
  if (k < 0) throw std::domain_error("binomial: negative lower argument");
  if (n >= 0) {
    if (n < k) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
  }
  // C(n,k) = (-1)^k C(k-n-1, k) for n < 0
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(k - n - 1), static_cast<unsigned long>(k));
  return (k % 2 == 0) ? r : BigInt(-r);
}

BigInt factorial(long n) {
  if (n < 0) throw std::domain_error("factorial of a negative number");
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

BigInt power(const BigInt& base, unsigned long exponent) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

// ---------------------------------------------------------------- Polynomial

Polynomial::Polynomial(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

Polynomial::Polynomial(std::vector<BigRational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::constant(const BigRational& c) { return Polynomial(std::vector<BigRational>{c}); }

Polynomial Polynomial::monomial(const BigRational& c, std::size_t power) {
  std::vector<BigRational> v(power + 1);
  v[power] = c;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::from_integers(const std::vector<BigInt>& coeffs) {
  std::vector<BigRational> v;
  v.reserve(coeffs.size());
  for (const auto& c : coeffs) v.emplace_back(c);
  return Polynomial(std::move(v));
}

Polynomial Polynomial::one_minus_x_pow(unsigned a, unsigned b) {
  Polynomial r{1};
  const Polynomial minus{1, -1};
  const Polynomial plus{1, 1};
  for (unsigned i = 0; i < a; ++i) r *= minus;
  for (unsigned i = 0; i < b; ++i) r *= plus;
  return r;
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigRational Polynomial::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigRational(0); }

bool Polynomial::is_integral() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const BigRational& c) { return c.get_den() == 1; });
}

std::vector<BigInt> Polynomial::integer_coefficients() const {
  if (!is_integral()) throw std::domain_error("polynomial has non-integer coefficients");
  std::vector<BigInt> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.get_num());
  return out;
}

BigRational Polynomial::eval(const BigRational& x) const {
  BigRational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<BigRational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
  return Polynomial(std::move(d));
}

Polynomial Polynomial::reflect() const {
  auto c = coeffs_;
  for (std::size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
  return Polynomial(std::move(c));
}

std::vector<BigRational> Polynomial::truncated(std::size_t terms) const {
  std::vector<BigRational> out(terms);
  for (std::size_t i = 0; i < terms && i < coeffs_.size(); ++i) out[i] = coeffs_[i];
  return out;
}

bool Polynomial::is_palindromic() const {
  return std::equal(coeffs_.begin(), coeffs_.end(), coeffs_.rbegin());
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<BigRational> r(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) r[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(r);
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const BigRational& c) {
  for (auto& v : coeffs_) v *= c;
  trim();
  return *this;
}

Polynomial operator-(const Polynomial& a) {
  Polynomial r = a;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

std::string Polynomial::to_string(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const BigRational& c = coeffs_[i];
    if (c == 0) continue;
    BigRational mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << '*';
    os << var;
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

DivMod divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {Polynomial{}, a};
  std::vector<BigRational> rem = a.coefficients();
  const auto& bc = b.coefficients();
  const std::size_t db = bc.size() - 1;
  std::vector<BigRational> q(rem.size() - db);
  for (std::size_t k = q.size(); k-- > 0;) {
    BigRational f = rem[k + db] / bc[db];
    q[k] = f;
    if (f == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= f * bc[j];
  }
  rem.resize(db);
  return {Polynomial(std::move(q)), Polynomial(std::move(rem))};
}

Polynomial exact_div(const Polynomial& a, const Polynomial& b) {
  DivMod dm = divmod(a, b);
  if (!dm.remainder.is_zero()) {
    throw ExactDivisionError("exact division failed: (" + a.to_string() + ") / (" + b.to_string() +
                             ") leaves remainder " + dm.remainder.to_string());
  }
  return std::move(dm.quotient);
}

// ---------------------------------------------------------------- PolyMatrix

PolyMatrix::PolyMatrix(std::size_t dim) : dim_(dim), cells_(dim * dim) {
  if (dim == 0) throw std::invalid_argument("PolyMatrix dimension must be positive");
}

PolyMatrix PolyMatrix::identity(std::size_t dim) {
  PolyMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = Polynomial{1};
  return m;
}

Polynomial poly_det(PolyMatrix m) {
  const std::size_t n = m.dim();
  bool negate = false;
  Polynomial prev{1};
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m.at(k, k).is_zero()) {
      std::size_t p = k + 1;
      while (p < n && m.at(p, k).is_zero()) ++p;
      if (p == n) return {};
      for (std::size_t j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(p, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Polynomial t = m.at(k, k) * m.at(i, j) - m.at(i, k) * m.at(k, j);
        m.at(i, j) = exact_div(t, prev);
      }
    }
    prev = m.at(k, k);
  }
  Polynomial d = m.at(n - 1, n - 1);
  return negate ? -d : d;
}

// ---------------------------------------------------------------- PolyFraction

PolyFraction::PolyFraction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.coeff(0) == 0) throw std::domain_error("PolyFraction denominator must not vanish at 0");
}

std::vector<BigRational> PolyFraction::series(std::size_t terms) const {
  return series_divide(num_, den_, terms);
}

bool PolyFraction::same_function(const PolyFraction& other) const {
  return num_ * other.den_ == other.num_ * den_;
}

std::vector<BigRational> series_divide(const Polynomial& a, const Polynomial& b, std::size_t terms) {
  const BigRational b0 = b.coeff(0);
  if (b0 == 0) throw std::domain_error("series_divide: denominator vanishes at 0");
  const auto& bc = b.coefficients();
  std::vector<BigRational> out(terms);
  for (std::size_t k = 0; k < terms; ++k) {
    BigRational acc = a.coeff(k);
    for (std::size_t j = 1; j < bc.size() && j <= k; ++j) acc -= bc[j] * out[k - j];
    out[k] = acc / b0;
  }
  return out;
}

}  // namespace wg
