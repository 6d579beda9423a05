#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "wgcount/algebra.hpp"
#include "wgcount/counting.hpp"
#include "wgcount/graph.hpp"

namespace wg {

/// A guard coefficient did not vanish: too few terms, or the denominator
/// hypothesis is wrong.
class ReconstructionError : public std::runtime_error {
 public:
  ReconstructionError(const std::string& what, std::size_t index) : std::runtime_error(what), first_bad_index(index) {}
  std::size_t first_bad_index;
};

/// A structural theorem failed on concrete data (pole order, interpolation
/// mismatch). Carries a human-readable witness in what().
class TheoremViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// numerator / ((1-x)^exp_one (1+x)^exp_minus), lowest terms w.r.t. both factors.
struct RationalGF {
  Polynomial numerator;
  int exp_one = 0;
  int exp_minus = 0;

  /// Cancels (1-x) first, then (1+x), while they divide the numerator.
  static RationalGF canonical(Polynomial numerator, int exp_one, int exp_minus);

  Polynomial denominator() const;
  std::vector<BigRational> expand(std::size_t terms) const;
  std::vector<BigInt> expand_integers(std::size_t terms) const;
  /// `(num)/((1 - x)^a*(1 + x)^b)`
  std::string to_string() const;
  /// `(num)/((1 - x)^(a-b)*(1 - x^2)^b)`; falls back to to_string() when a < b.
  std::string to_squared_string() const;

  friend bool operator==(const RationalGF&, const RationalGF&) = default;
};

/// Numerator of (sum series_n x^n) * denominator truncated to max_num_degree;
/// coefficients in (max_num_degree, series.size()) must vanish.
Polynomial reconstruct(const std::vector<BigRational>& series, const Polynomial& denominator, int max_num_degree);
Polynomial reconstruct(const std::vector<BigInt>& series, const Polynomial& denominator, int max_num_degree);

/// Terms needed by rho(): 2m + 4.
std::size_t rho_series_length(int m);

/// Reconstruct over (1-x^2)^(m+1), canonicalize, and require exp_one == m+1.
RationalGF gf_from_series(const std::vector<BigInt>& series, int m);

struct RhoOptions {
  CountMethod method = CountMethod::kAuto;
  CountLimits limits;
};

/// Count series by method; kClosed requires a family label with a closed form.
std::vector<BigInt> graph_series(const Graph& g, std::size_t terms, const RhoOptions& options = {});
RationalGF rho(const Graph& g, const RhoOptions& options = {});

/// Closed-form rho for star, biclique and discrete; the remaining families
/// with closed counts go through reconstruction from their closed series.
RationalGF family_gf(const FamilySpec& spec);

/// coeffs[r][i] is the coefficient of n^i when n = r (mod period).
struct QuasiPolynomial {
  int period = 1;
  int degree = 0;
  std::vector<std::vector<BigRational>> coeffs;

  BigRational eval(long n) const;
  BigRational leading(int residue) const;
  std::string to_string(const std::string& var = "n") const;
  friend bool operator==(const QuasiPolynomial&, const QuasiPolynomial&) = default;
};

QuasiPolynomial quasi_from_gf(const RationalGF& gf);
BigRational eval_quasi(const QuasiPolynomial& qp, long n);
/// base(n) + (-1)^n alternating(n), the way parity-split formulas are printed.
QuasiPolynomial quasi_from_parts(const std::vector<BigRational>& base, const std::vector<BigRational>& alternating);

/// Coefficients of the numerator over (1-x)^(m+1), padded to m+1 entries.
struct HVector {
  std::vector<BigInt> h;
  friend bool operator==(const HVector&, const HVector&) = default;
};

HVector h_vector(const RationalGF& gf, const Graph& g);

enum class CheckStatus { kPass, kFail, kInfo, kSkip };
std::string to_string(CheckStatus status);

struct CheckResult {
  std::string check;
  CheckStatus status;
  nlohmann::ordered_json witness;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  std::optional<RationalGF> gf;
  std::optional<QuasiPolynomial> quasi;

  bool all_passed() const;
  const CheckResult* find(const std::string& name) const;
  nlohmann::ordered_json to_json() const;
};

/// Runs pole order, bipartite structure, reciprocity, h-vector and
/// leading-coefficient checks. Failures become report entries.
VerifyReport verify_graph(const Graph& g, const RhoOptions& options = {});

}  // namespace wg
