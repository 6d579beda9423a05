#include "wgcount/closed_forms.hpp"

#include <mutex>
#include <stdexcept>

namespace wg {

// ---------------------------------------------------------------- IntMatrix

IntMatrix IntMatrix::identity(std::size_t dim) {
  IntMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = 1;
  return m;
}

BigInt IntMatrix::trace() const {
  BigInt t = 0;
  for (std::size_t i = 0; i < dim_; ++i) t += at(i, i);
  return t;
}

BigInt IntMatrix::entry_sum() const {
  BigInt s = 0;
  for (const auto& c : cells_) s += c;
  return s;
}

IntMatrix IntMatrix::power(unsigned k) const {
  IntMatrix r = identity(dim_);
  for (unsigned i = 0; i < k; ++i) r = r * *this;
  return r;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t n = a.dim_;
  IntMatrix r(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const BigInt& aik = a.at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < n; ++j) r.at(i, j) += aik * b.at(k, j);
    }
  return r;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix r = a;
  for (std::size_t i = 0; i < r.cells_.size(); ++i) r.cells_[i] -= b.cells_[i];
  return r;
}

namespace {

std::size_t checked_dim(long n) {
  if (n < 0) throw std::domain_error("matrix bound must be nonnegative");
  return static_cast<std::size_t>(n) + 1;
}

BigInt pow_long(long base, unsigned long e) { return power(BigInt(base), e); }

BigInt exact_quotient(const BigInt& num, long den) {
  if (num % den != 0) throw ExactDivisionError("closed form is not integral: " + num.get_str() + "/" + std::to_string(den));
  return num / den;
}

}  // namespace

IntMatrix transfer_matrix(long n) {
  const std::size_t d = checked_dim(n);
  IntMatrix b(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) b.at(i, j) = (static_cast<long>(i + j) <= n) ? 1 : 0;
  return b;
}

IntMatrix octa_matrix(long n, long m) {
  const std::size_t d = checked_dim(n);
  if (m < 0) throw std::domain_error("octa_matrix: m must be nonnegative");
  IntMatrix b(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      long s = static_cast<long>(i + j);
      long t = static_cast<long>(std::max(i, j)) + m;
      b.at(i, j) = std::max(s, t) > n ? 0 : 1;
    }
  return b;
}

PolyMatrix i_minus_x(const IntMatrix& m) {
  PolyMatrix r(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) {
      BigRational c = -BigRational(m.at(i, j));
      r.at(i, j) = Polynomial(std::vector<BigRational>{BigRational(i == j ? 1 : 0), c});
    }
  return r;
}

// ---------------------------------------------------------------- Eulerian

namespace {

class EulerianTable {
 public:
  BigInt get(long t, long k) {
    std::lock_guard lock(mutex_);
    while (static_cast<long>(rows_.size()) <= t) extend();
    return rows_[static_cast<std::size_t>(t)][static_cast<std::size_t>(k)];
  }

 private:
  // Row t holds A(t,0..t+1), zero at both ends.
  void extend() {
    const long t = static_cast<long>(rows_.size());
    std::vector<BigInt> row(static_cast<std::size_t>(t) + 2, 0);
    if (t == 1) {
      row[1] = 1;
    } else if (t > 1) {
      const auto& prev = rows_.back();
      for (long k = 1; k <= t; ++k) {
        BigInt a = (k <= t - 1) ? prev[k] : BigInt(0);
        row[k] = k * a + (t - k + 1) * prev[k - 1];
      }
    }
    rows_.push_back(std::move(row));
  }

  std::mutex mutex_;
  std::vector<std::vector<BigInt>> rows_;
};

EulerianTable& eulerian_table() {
  static EulerianTable table;
  return table;
}

}  // namespace

BigInt eulerian_number(long t, long k) {
  if (t < 1) throw std::domain_error("eulerian_number needs t >= 1");
  if (k < 1 || k > t) return 0;
  return eulerian_table().get(t, k);
}

BigInt eulerian_number_explicit(long t, long k) {
  if (t < 1) throw std::domain_error("eulerian_number_explicit needs t >= 1");
  if (k < 1 || k > t) return 0;
  BigInt sum = 0;
  for (long i = 0; i <= k; ++i) {
    BigInt term = binomial(t + 1, i) * pow_long(k - i, static_cast<unsigned long>(t));
    if (i % 2 == 0) sum += term; else sum -= term;
  }
  return sum;
}

Polynomial eulerian_poly(long t, bool shifted) {
  if (t < 0) throw std::domain_error("eulerian_poly needs t >= 0");
  if (t == 0) return Polynomial{1};
  std::vector<BigInt> c(static_cast<std::size_t>(t) + 1, 0);
  for (long k = 1; k <= t; ++k) c[static_cast<std::size_t>(k)] = eulerian_number(t, k);
  if (shifted) c.erase(c.begin());
  return Polynomial::from_integers(c);
}

// ---------------------------------------------------------------- paths and cycles

BigInt path_count(long k, long n) {
  if (k < 1) throw std::domain_error("path_count needs k >= 1");
  const std::size_t d = checked_dim(n);
  std::vector<BigInt> v(d, 1);
  for (long step = 1; step < k; ++step) {
    // (B v)_i = sum_{j <= n - i} v_j
    std::vector<BigInt> prefix(d);
    BigInt acc = 0;
    for (std::size_t j = 0; j < d; ++j) prefix[j] = (acc += v[j]);
    for (std::size_t i = 0; i < d; ++i) v[i] = prefix[d - 1 - i];
  }
  BigInt s = 0;
  for (const auto& x : v) s += x;
  return s;
}

BigInt cycle_count(long k, long n) {
  if (k < 1) throw std::domain_error("cycle_count needs k >= 1");
  if (k == 1) {
    checked_dim(n);
    return BigInt(n + 1);
  }
  return transfer_matrix(n).power(static_cast<unsigned>(k)).trace();
}

Polynomial q_poly(long n) {
  if (n < -2) throw std::domain_error("q_poly needs n >= -2");
  if (n < 0) return Polynomial{1};
  return poly_det(i_minus_x(transfer_matrix(n)));
}

Polynomial q_poly_binomial_sum(long n) {
  if (n < 0) throw std::domain_error("q_poly_binomial_sum needs n >= 0");
  std::vector<BigInt> c;
  for (long k = 0; k <= n + 1; ++k) {
    BigInt b = binomial((n + k + 1) / 2, k);
    c.push_back(((k + 1) / 2) % 2 == 0 ? b : BigInt(-b));
  }
  return Polynomial::from_integers(c);
}

Polynomial p_poly(long n) {
  Polynomial t = q_poly(n - 2) - Polynomial{1, 1} * q_poly(n);
  return exact_div(t, Polynomial::monomial(1, 2));
}

PolyFraction entry_sum_gf(const IntMatrix& m) {
  const PolyMatrix base = i_minus_x(m);
  Polynomial num;
  for (std::size_t i = 0; i < m.dim(); ++i) {
    PolyMatrix r = base;
    for (std::size_t j = 0; j < m.dim(); ++j) r.at(i, j) = Polynomial{1};
    num += poly_det(std::move(r));
  }
  return PolyFraction(std::move(num), poly_det(base));
}

PolyFraction path_gf(long n) {
  PolyFraction f = entry_sum_gf(transfer_matrix(n));
  // det(I - xB) has constant term 1, so it is Q_n itself.
  return f;
}

PolyFraction cycle_gf(long n) {
  const Polynomial q = q_poly(n);
  const Polynomial x = Polynomial::monomial(1, 1);
  Polynomial num = x * q * BigRational((n + 1) / 2) - x * q.derivative();
  return PolyFraction(std::move(num), q);
}

// ---------------------------------------------------------------- families

BigInt complete_count(long t, long n) {
  if (t < 0 || n < 0) throw std::domain_error("complete_count needs t, n >= 0");
  BigInt s = 0;
  if (t > 0)
    for (long r = 1; r <= (n + 1) / 2; ++r) s += pow_long(r, static_cast<unsigned long>(t - 1));
  return t * s + pow_long((n + 2) / 2, static_cast<unsigned long>(t));
}

BigInt complete_count_parity_form(long t, long n) {
  const BigInt x = n;
  const long sign = (n % 2 == 0) ? 1 : -1;
  switch (t) {
    case 0: return 1;
    case 1: return x + 1;
    case 2: return exact_quotient(x * x + 3 * x + 2, 2);
    case 3: return exact_quotient(4 * x * x * x + 18 * x * x + 28 * x + 15 + sign, 16);
    case 4: {
      BigInt x2 = x * x;
      return exact_quotient(2 * x2 * x2 + 12 * x2 * x + 28 * x2 + 30 * x + 13 + sign * (2 * x + 3), 16);
    }
    case 5: {
      BigInt x2 = x * x;
      BigInt x4 = x2 * x2;
      return exact_quotient(12 * x4 * x + 90 * x4 + 280 * x2 * x + 450 * x2 + 374 * x + 129 +
                                sign * (30 * x2 + 90 * x + 63),
                            192);
    }
    default: throw std::domain_error("parity form known only for t <= 5");
  }
}

BigInt star_count(long t, long n) {
  if (t < 0 || n < 0) throw std::domain_error("star_count needs t, n >= 0");
  BigInt s = 0;
  for (long i = 0; i <= n; ++i) s += pow_long(n + 1 - i, static_cast<unsigned long>(t));
  return s;
}

BigInt discrete_count(long t, long n) {
  if (t < 0 || n < 0) throw std::domain_error("discrete_count needs t, n >= 0");
  return pow_long(n + 1, static_cast<unsigned long>(t));
}

BigInt biclique_count(long p, long q, long n) {
  if (p < 0 || q < 0 || n < 0) throw std::domain_error("biclique_count needs p, q, n >= 0");
  // An empty side leaves a discrete graph; the max-based sum degenerates there.
  if (p == 0) return discrete_count(q, n);
  if (q == 0) return discrete_count(p, n);
  BigInt s = 0;
  for (long k = 0; k <= n; ++k) {
    BigInt a = pow_long(k + 1, static_cast<unsigned long>(p)) - pow_long(k, static_cast<unsigned long>(p));
    s += a * pow_long(n + 1 - k, static_cast<unsigned long>(q));
  }
  return s;
}

BigInt family_count(const FamilySpec& spec, long n) {
  const auto& p = spec.params;
  if (spec.name == "complete" && p.size() == 1) return complete_count(p[0], n);
  if (spec.name == "star" && p.size() == 1) return star_count(p[0], n);
  if (spec.name == "discrete" && p.size() == 1) return discrete_count(p[0], n);
  if (spec.name == "biclique" && p.size() == 2) return biclique_count(p[0], p[1], n);
  throw std::invalid_argument("family_count: no closed count for '" + spec.to_string() + "'");
}

bool has_closed_form(const FamilySpec& spec) {
  static const char* names[] = {"null", "path", "cycle", "complete", "star", "discrete", "biclique", "octahedron"};
  for (const char* name : names)
    if (spec.name == name) return true;
  return false;
}

std::optional<BigInt> closed_form_count(const FamilySpec& spec, long n) {
  if (n < 0) throw std::domain_error("weight bound must be nonnegative");
  if (!has_closed_form(spec)) return std::nullopt;
  family(spec);  // validates the parameters
  if (spec.name == "null") return BigInt(1);
  if (spec.name == "path") return path_count(spec.params[0], n);
  if (spec.name == "cycle") return cycle_count(spec.params[0], n);
  if (spec.name == "octahedron") return octa_count(n);
  return family_count(spec, n);
}

// ---------------------------------------------------------------- octahedron

BigInt octa_count(long n) {
  checked_dim(n);
  BigInt s = 0;
  for (long m = 0; m <= n; ++m) s += (2 * m + 1) * octa_matrix(n, m).power(4).trace();
  return s;
}

BigInt octa_count_parity_form(long n) {
  if (n < 0) throw std::domain_error("weight bound must be nonnegative");
  const BigInt k = n / 2;
  if (n % 2 == 0) {
    return exact_quotient((k + 1) * (2 * k * k + 2 * k + 1) * (12 * k * k * k + 30 * k * k + 27 * k + 10), 10);
  }
  return exact_quotient((k + 1) * (2 * k * k + 6 * k + 5) * (12 * k * k * k + 42 * k * k + 51 * k + 20), 10);
}

BigInt octa_count_unified(long n) {
  if (n < 0) throw std::domain_error("weight bound must be nonnegative");
  const BigInt x = n;
  const BigInt x2 = x * x;
  const BigInt x3 = x2 * x;
  const long sign = (n % 2 == 0) ? 1 : -1;
  BigInt v = 6 * x3 * x3 + 54 * x3 * x2 + 210 * x2 * x2 + 450 * x3 + 559 * x2 + 381 * x + 115 +
             sign * (10 * x3 + 45 * x2 + 75 * x + 45);
  return exact_quotient(v, 160);
}

BigInt p_trace(long r, long m) {
  if (r < 1 || m < 0) throw std::domain_error("p_trace needs r >= 1, m >= 0");
  const BigInt R = r;
  return R * R * R * R - 4 * binomial(m + 1, 2) * R * R + 4 * (binomial(m + 1, 3) + binomial(m + 2, 3)) * R -
         4 * binomial(m + 2, 4) - binomial(m + 1, 2);
}

BigInt p_trace_matrix(long r, long m) {
  if (r < 1 || m < 0) throw std::domain_error("p_trace_matrix needs r >= 1, m >= 0");
  const long n = r - 1;
  const std::size_t d = static_cast<std::size_t>(r);
  IntMatrix diff(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) diff.at(i, j) = (static_cast<long>(i + j) > 2 * n - m) ? 0 : 1;
  return diff.power(4).trace();
}

}  // namespace wg
