#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "wgcount/algebra.hpp"
#include "wgcount/closed_forms.hpp"

using namespace wg;

namespace {

Polynomial random_poly(std::mt19937& rng, int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<long> coef(-5, 5);
  std::vector<BigRational> c(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto& v : c) v = coef(rng);
  return Polynomial(std::move(c));
}

}  // namespace

TEST_CASE("polynomial arithmetic") {
  CHECK(Polynomial{1, 1} * Polynomial{1, 1} == Polynomial{1, 2, 1});
  CHECK(exact_div(Polynomial{1, 0, -1}, Polynomial{1, -1}) == Polynomial{1, 1});
  CHECK(exact_div(Polynomial{0, 1, 4, 1}, Polynomial{0, 1}) == Polynomial{1, 4, 1});
  CHECK(Polynomial{1, 2} - Polynomial{1, 2} == Polynomial{});
  CHECK(Polynomial{}.degree() == Polynomial::kZeroDegree);
  CHECK(Polynomial{3, 0, 0}.degree() == 0);
}

TEST_CASE("exact division reports a remainder") {
  CHECK_THROWS_AS(exact_div(Polynomial{1, 1}, Polynomial{1, -1}), ExactDivisionError);
  CHECK_THROWS_AS(divmod(Polynomial{1}, Polynomial{}), std::domain_error);
}

TEST_CASE("canonical polynomial text") {
  CHECK(Polynomial{1, 8, 8, 1}.to_string() == "1 + 8*x + 8*x^2 + x^3");
  CHECK(Polynomial{1, -1, -1}.to_string() == "1 - x - x^2");
  CHECK(Polynomial{0, -2, 0, 1}.to_string() == "-2*x + x^3");
  CHECK(Polynomial{}.to_string() == "0");
  CHECK(Polynomial{-1}.to_string() == "-1");
  CHECK(Polynomial(std::vector<BigRational>{make_rational(1, 2), make_rational(-3, 4)}).to_string() == "1/2 - 3/4*x");
}

TEST_CASE("binomial coefficients") {
  CHECK(binomial(6, 2) == 15);
  CHECK(binomial(4, 0) == 1);
  CHECK(binomial(-3, 2) == 6);
  CHECK(binomial(2, 5) == 0);
  CHECK(binomial(-1, 3) == -1);
  CHECK_THROWS_AS(binomial(3, -1), std::domain_error);
  // Falling-factorial definition for a range of negative arguments.
  for (long n = -6; n <= 6; ++n)
    for (long k = 0; k <= 5; ++k) {
      BigRational falling = 1;
      for (long i = 0; i < k; ++i) falling *= BigRational(n - i);
      falling /= BigRational(factorial(k));
      CHECK(BigRational(binomial(n, k)) == falling);
    }
}

TEST_CASE("determinants of I - xB") {
  CHECK(poly_det(i_minus_x(transfer_matrix(1))) == Polynomial{1, -1, -1});
  CHECK(poly_det(i_minus_x(transfer_matrix(0))) == Polynomial{1, -1});
  for (std::size_t d = 1; d <= 5; ++d) CHECK(poly_det(PolyMatrix::identity(d)) == Polynomial{1});
  // A zero leading pivot forces a row swap.
  PolyMatrix swap(2);
  swap.at(0, 1) = Polynomial{1};
  swap.at(1, 0) = Polynomial{0, 1};
  CHECK(poly_det(swap) == Polynomial{0, -1});
}

TEST_CASE("Bareiss determinant agrees with cofactor expansion") {
  std::mt19937 rng(7);
  for (std::size_t dim : {3u, 4u}) {
    for (int trial = 0; trial < 40; ++trial) {
      PolyMatrix m(dim);
      for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) m.at(i, j) = random_poly(rng, 2);
      CHECK(poly_det(m) == testing::cofactor_det(m));
    }
  }
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const Polynomial a = random_poly(rng, 4);
    const Polynomial b = random_poly(rng, 4);
    const Polynomial c = random_poly(rng, 4);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    if (!b.is_zero()) CHECK(exact_div(a * b, b) == a);
    const BigRational x = make_rational(trial - 50, 7);
    CHECK((a * b).eval(x) == a.eval(x) * b.eval(x));
  }
}

TEST_CASE("rationals stay reduced") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<long> d(-1000, 1000);
  for (int i = 0; i < 200; ++i) {
    long num = d(rng);
    long den = d(rng);
    if (den == 0) continue;
    BigRational r = make_rational(num, den) + make_rational(d(rng), 17);
    BigInt g;
    mpz_gcd(g.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    CHECK(g == 1);
    CHECK(r.get_den() > 0);
  }
  CHECK(parse_rational("6/-4") == make_rational(-3, 2));
  CHECK_THROWS(parse_rational("1/0"));
}

TEST_CASE("power-series quotient") {
  // (2 + x)/(1 - x - x^2) = 2, 3, 5, 8, 13, ...
  PolyFraction f(Polynomial{2, 1}, Polynomial{1, -1, -1});
  auto s = f.series(6);
  CHECK(s[0] == 2);
  CHECK(s[4] == 13);
  CHECK(s[5] == 21);
  CHECK(f.same_function(PolyFraction(Polynomial{4, 2}, Polynomial{2, -2, -2})));
  CHECK_THROWS_AS(PolyFraction(Polynomial{1}, Polynomial{0, 1}), std::domain_error);
}
