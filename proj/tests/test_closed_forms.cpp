#include <random>
#include <thread>

#include "doctest.h"
#include "oracles.hpp"
#include "wgcount/closed_forms.hpp"
#include "wgcount/counting.hpp"
#include "wgcount/genfun.hpp"

using namespace wg;

namespace {

Polynomial A(long t) { return eulerian_poly(t, false); }

BigRational series_coeff(const PolyFraction& f, std::size_t k) { return f.series(k + 1)[k]; }

}  // namespace

TEST_CASE("Eulerian numbers") {
  CHECK(eulerian_number(3, 2) == 4);
  CHECK(eulerian_number(4, 2) == 11);
  for (long t = 1; t <= 6; ++t) CHECK(eulerian_number(t, 1) == 1);
  CHECK(eulerian_number(4, 0) == 0);
  CHECK(eulerian_number(4, 5) == 0);
  CHECK_THROWS(eulerian_number(0, 1));
  CHECK(eulerian_poly(3, true) == Polynomial{1, 4, 1});
  CHECK(eulerian_poly(1, false) == Polynomial{0, 1});
  CHECK(eulerian_poly(4, true) == Polynomial{1, 11, 11, 1});
  CHECK(eulerian_poly(0, false) == Polynomial{1});
  CHECK(eulerian_poly(0, true) == Polynomial{1});
}

TEST_CASE("Eulerian facts for t <= 10") {
  for (long t = 1; t <= 10; ++t) {
    BigInt row = 0;
    for (long k = 1; k <= t; ++k) {
      // recurrence
      if (t >= 2)
        CHECK(eulerian_number(t, k) == k * eulerian_number(t - 1, k) + (t - k + 1) * eulerian_number(t - 1, k - 1));
      // symmetry
      CHECK(eulerian_number(t, k) == eulerian_number(t, t + 1 - k));
      // explicit alternating sum
      CHECK(eulerian_number(t, k) == eulerian_number_explicit(t, k));
      row += eulerian_number(t, k);
    }
    CHECK(row == factorial(t));
    // Worpitzky: (n+1)^t = sum_k A(t,k) C(n+k, t)
    for (long n = 0; n <= 10; ++n) {
      BigInt sum = 0;
      for (long k = 1; k <= t; ++k) sum += eulerian_number(t, k) * binomial(n + k, t);
      CHECK(sum == power(BigInt(n + 1), static_cast<unsigned long>(t)));
    }
    const Polynomial x{0, 1};
    const Polynomial one_minus_x{1, -1};
    // A_t = t x A_{t-1} + x(1-x) A'_{t-1}
    CHECK(A(t) == x * A(t - 1) * BigRational(t) + x * one_minus_x * A(t - 1).derivative());
    // A_t / (x(1-x)^{t+1}) = d/dx [A_{t-1}/(1-x)^t], cross-multiplied
    CHECK(A(t) == x * (A(t - 1).derivative() * one_minus_x + A(t - 1) * BigRational(t)));
    // A_t = x sum_{k<t} C(t,k) (1-x)^{t-1-k} A_k
    Polynomial expansion;
    for (long k = 0; k < t; ++k)
      expansion += Polynomial::one_minus_x_pow(static_cast<unsigned>(t - 1 - k)) * A(k) * BigRational(binomial(t, k));
    CHECK(A(t) == x * expansion);
    CHECK(exact_div(A(t), x) == eulerian_poly(t, true));
    // y^t/t! coefficient of (1 - x e^{y(1-x)}) sum_k A_k y^k/k! = 1 - x
    Polynomial egf = A(t);
    for (long k = 0; k <= t; ++k)
      egf -= x * Polynomial::one_minus_x_pow(static_cast<unsigned>(t - k)) * A(k) * BigRational(binomial(t, k));
    CHECK(egf.is_zero());
  }
}

TEST_CASE("Eulerian memo is safe under concurrent extension") {
  std::vector<std::thread> pool;
  std::vector<BigInt> out(8);
  for (int i = 0; i < 8; ++i)
    pool.emplace_back([i, &out] { out[static_cast<std::size_t>(i)] = eulerian_number(30 + i % 3, 7); });
  for (auto& th : pool) th.join();
  for (int i = 0; i < 8; ++i) CHECK(out[static_cast<std::size_t>(i)] == eulerian_number_explicit(30 + i % 3, 7));
}

TEST_CASE("transfer matrices") {
  for (long n = 0; n <= 6; ++n) {
    const IntMatrix b = transfer_matrix(n);
    CHECK(b.dim() == static_cast<std::size_t>(n + 1));
    for (std::size_t i = 0; i <= static_cast<std::size_t>(n); ++i) {
      CHECK(b.at(0, i) == 1);
      for (std::size_t j = 0; j <= static_cast<std::size_t>(n); ++j) {
        CHECK(b.at(i, j) == b.at(j, i));
        CHECK(b.at(i, j) == (static_cast<long>(i + j) <= n ? 1 : 0));
      }
    }
    CHECK(octa_matrix(n, 0) == b);
  }
}

TEST_CASE("path and cycle counts") {
  CHECK(path_count(3, 4) == 55);
  CHECK(cycle_count(4, 1) == 7);
  for (long k = 1; k <= 6; ++k)
    for (long n = 0; n <= 8; ++n) {
      CHECK(path_count(k, n) == count_elim(family("path:" + std::to_string(k)), n));
      CHECK(cycle_count(k, n) == count_elim(family("cycle:" + std::to_string(k)), n));
    }
  for (long k = 1; k <= 5; ++k)
    for (long n = 0; n <= 8; ++n) CHECK(path_count(k, n) == testing::naive_count(family("path:" + std::to_string(k)), n));
  // WL_{k+1}(n) is the (0,0) entry of B(n)^{k+2}.
  for (long k = 0; k <= 5; ++k)
    for (long n = 0; n <= 6; ++n)
      CHECK(path_count(k + 1, n) == transfer_matrix(n).power(static_cast<unsigned>(k + 2)).at(0, 0));
  // Odd/even forms of WC_3.
  for (long n = 0; n <= 12; ++n) {
    const BigInt sign = n % 2 == 0 ? 1 : -1;
    CHECK(16 * cycle_count(3, n) == 4 * n * n * n + 18 * n * n + 28 * n + 15 + sign);
    if (n % 2 == 0)
      CHECK(8 * cycle_count(3, n) == (n + 2) * (2 * n * n + 5 * n + 4));
    else
      CHECK(8 * cycle_count(3, n) == (n + 1) * (2 * n * n + 7 * n + 7));
    CHECK(complete_count(3, n) == cycle_count(3, n));
  }
}

TEST_CASE("Q polynomials") {
  CHECK(q_poly(0) == Polynomial{1, -1});
  CHECK(q_poly(1) == Polynomial{1, -1, -1});
  CHECK(q_poly(2) == Polynomial{1, -2, -1, 1});
  CHECK(q_poly(-1) == Polynomial{1});
  CHECK(q_poly(-2) == Polynomial{1});
  for (long n = 0; n <= 12; ++n) {
    CHECK(q_poly(n) == q_poly_binomial_sum(n));
    CHECK(q_poly(n).degree() == n + 1);
  }
  const Polynomial x2m2{-2, 0, 1};
  for (long n = 2; n <= 20; ++n) {
    const Polynomial q4 = n >= 4 ? q_poly(n - 4) : Polynomial{1};
    CHECK((q_poly(n) + x2m2 * q_poly(n - 2) + q4).is_zero());
  }
}

TEST_CASE("path generating functions") {
  CHECK(path_gf(0).same_function(PolyFraction(Polynomial{1}, Polynomial{1, -1})));
  CHECK(path_gf(1).same_function(PolyFraction(Polynomial{2, 1}, Polynomial{1, -1, -1})));
  CHECK(series_coeff(path_gf(1), 4) == 13);
  CHECK(path_count(5, 1) == 13);
  for (long n = 0; n <= 10; ++n) {
    const PolyFraction f = path_gf(n);
    CHECK(f.denominator() == q_poly(n));
    CHECK(f.numerator() == p_poly(n));
    CHECK(f.numerator().degree() == n);
    const auto s = f.series(8);
    for (long k = 0; k < 8; ++k) CHECK(s[static_cast<std::size_t>(k)] == BigRational(path_count(k + 1, n)));
  }
  // F(n,x) = (1 + F(n-1,-x)) / (1 - x(1 + F(n-1,-x)))
  for (long n = 1; n <= 10; ++n) {
    const PolyFraction prev = path_gf(n - 1);
    const Polynomial num = prev.numerator().reflect();
    const Polynomial den = prev.denominator().reflect();
    const Polynomial top = den + num;
    const Polynomial bottom = den - Polynomial{0, 1} * top;
    CHECK(path_gf(n).same_function(PolyFraction(top, bottom)));
  }
}

TEST_CASE("entry-sum generating function on random matrices") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> entry(-2, 3);
  for (int trial = 0; trial < 20; ++trial) {
    IntMatrix m(3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) m.at(i, j) = entry(rng);
    const auto s = entry_sum_gf(m).series(7);
    for (unsigned k = 0; k < 7; ++k) CHECK(s[k] == BigRational(m.power(k).entry_sum()));
    // sum_l tr(M^l) x^l = -x det'(I - xM) / det(I - xM)
    const Polynomial d = poly_det(i_minus_x(m));
    const auto tr = PolyFraction(-(Polynomial{0, 1} * d.derivative()), d).series(7);
    for (unsigned k = 1; k < 7; ++k) CHECK(tr[k] == BigRational(m.power(k).trace()));
  }
}

TEST_CASE("cycle generating functions") {
  for (long n = 0; n <= 5; ++n) CHECK(series_coeff(cycle_gf(n), 1) == n + 1);
  CHECK(series_coeff(cycle_gf(2), 3) == 11);
  CHECK(series_coeff(cycle_gf(4), 2) == 15);
  for (long n = 0; n <= 6; ++n) {
    const auto s = cycle_gf(n).series(9);
    CHECK(s[0] == 0);
    for (long k = 1; k <= 8; ++k) CHECK(s[static_cast<std::size_t>(k)] == BigRational(cycle_count(k, n)));
    // The floor((n+1)/2) x term is exactly WC_1 - tr B(n).
    CHECK(BigInt((n + 1) / 2) == cycle_count(1, n) - transfer_matrix(n).trace());
  }
}

TEST_CASE("family counts") {
  CHECK(family_count(parse_family_spec("complete:4"), 1) == 5);
  CHECK(family_count(parse_family_spec("star:2"), 2) == 14);
  for (long t = 0; t <= 4; ++t)
    for (long n = 0; n <= 8; ++n) {
      const std::string ts = std::to_string(t);
      CHECK(complete_count(t, n) == count_brute(family("complete:" + ts), n));
      CHECK(star_count(t, n) == count_brute(family("star:" + ts), n));
      CHECK(discrete_count(t, n) == count_brute(family("discrete:" + ts), n));
    }
  for (long p = 0; p <= 3; ++p)
    for (long q = 0; q <= 3; ++q)
      for (long n = 0; n <= 8; ++n)
        CHECK(biclique_count(p, q, n) ==
              count_brute(family("biclique:" + std::to_string(p) + "," + std::to_string(q)), n));
  for (long t = 0; t <= 5; ++t)
    for (long n = 0; n <= 20; ++n) CHECK(complete_count_parity_form(t, n) == complete_count(t, n));
  for (long n = 0; n <= 6; ++n) CHECK(complete_count(5, n) == count_elim(family("complete:5"), n));
  CHECK_FALSE(has_closed_form(parse_family_spec("grid:2,2")));
  CHECK_FALSE(closed_form_count(parse_family_spec("hypercube:2"), 3).has_value());
  CHECK(*closed_form_count(parse_family_spec("cycle:5"), 3) == cycle_count(5, 3));
  CHECK(*closed_form_count(parse_family_spec("null"), 3) == 1);
}

TEST_CASE("octahedron") {
  CHECK(octa_count(0) == 1);
  CHECK(octa_count(1) == 10);
  for (long n = 0; n <= 6; ++n) CHECK(octa_count(n) == testing::naive_count(family("octahedron"), n));
  for (long n = 0; n <= 30; ++n) {
    CHECK(octa_count_parity_form(n) == octa_count(n));
    CHECK(octa_count_unified(n) == octa_count(n));
  }
  for (long n = 7; n <= 12; ++n) CHECK(octa_count(n) == count_elim(family("octahedron"), n));
}

TEST_CASE("octahedral trace polynomial") {
  for (long r = 1; r <= 5; ++r) CHECK(p_trace(r, 0) == power(BigInt(r), 4));
  for (long r = 1; r <= 8; ++r)
    for (long m = 0; m <= std::min(r, 6L); ++m) CHECK(p_trace(r, m) == p_trace_matrix(r, m));
  // Past m = r the cut corner of S folds back onto itself.
  CHECK(p_trace_matrix(1, 6) == 0);
  CHECK(p_trace(1, 6) != 0);
  for (long k = 1; k <= 4; ++k)
    for (long m = 0; m <= k - 1; ++m)
      CHECK(octa_matrix(2 * k, m).power(4).trace() == p_trace(2 * k + 1 - m, 2 * (k - m)));
}
