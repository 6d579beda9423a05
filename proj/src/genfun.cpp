#include "wgcount/genfun.hpp"

#include <algorithm>
#include <sstream>

#include "wgcount/closed_forms.hpp"

namespace wg {

namespace {

std::string wrap_numerator(const Polynomial& p) {
  const auto& c = p.coefficients();
  const auto nonzero = std::count_if(c.begin(), c.end(), [](const BigRational& v) { return v != 0; });
  return nonzero > 1 ? "(" + p.to_string() + ")" : p.to_string();
}

std::string factor(const std::string& base, int exponent) {
  if (exponent <= 0) return {};
  return exponent == 1 ? base : base + "^" + std::to_string(exponent);
}

std::string render(const Polynomial& num, std::initializer_list<std::string> factors) {
  std::string den;
  for (const auto& f : factors) {
    if (f.empty()) continue;
    if (!den.empty()) den += "*";
    den += f;
  }
  std::string out = wrap_numerator(num);
  return den.empty() ? out : out + "/(" + den + ")";
}

std::vector<BigRational> to_rational(const std::vector<BigInt>& v) {
  return {v.begin(), v.end()};
}

/// Newton divided differences over exact rationals, returned in monomial form.
Polynomial interpolate(const std::vector<BigRational>& nodes, const std::vector<BigRational>& values) {
  const std::size_t count = nodes.size();
  std::vector<BigRational> c = values;
  for (std::size_t j = 1; j < count; ++j)
    for (std::size_t i = count - 1; i >= j; --i) c[i] = (c[i] - c[i - 1]) / (nodes[i] - nodes[i - j]);
  Polynomial p = Polynomial::constant(c.back());
  for (std::size_t i = count - 1; i-- > 0;) {
    p *= Polynomial(std::vector<BigRational>{-nodes[i], BigRational(1)});
    p += Polynomial::constant(c[i]);
  }
  return p;
}

}  // namespace

// ---------------------------------------------------------------- RationalGF

RationalGF RationalGF::canonical(Polynomial numerator, int exp_one, int exp_minus) {
  if (numerator.is_zero()) return RationalGF{};
  const Polynomial one_minus{1, -1};
  const Polynomial one_plus{1, 1};
  while (exp_one > 0 && numerator.eval(1) == 0) {
    numerator = exact_div(numerator, one_minus);
    --exp_one;
  }
  while (exp_minus > 0 && numerator.eval(-1) == 0) {
    numerator = exact_div(numerator, one_plus);
    --exp_minus;
  }
  return RationalGF{std::move(numerator), exp_one, exp_minus};
}

Polynomial RationalGF::denominator() const {
  return Polynomial::one_minus_x_pow(static_cast<unsigned>(exp_one), static_cast<unsigned>(exp_minus));
}

std::vector<BigRational> RationalGF::expand(std::size_t terms) const {
  return series_divide(numerator, denominator(), terms);
}

std::vector<BigInt> RationalGF::expand_integers(std::size_t terms) const {
  std::vector<BigInt> out;
  out.reserve(terms);
  for (const auto& v : expand(terms)) {
    if (v.get_den() != 1) throw TheoremViolation("generating function has a non-integral coefficient " + v.get_str());
    out.push_back(v.get_num());
  }
  return out;
}

std::string RationalGF::to_string() const {
  return render(numerator, {factor("(1 - x)", exp_one), factor("(1 + x)", exp_minus)});
}

std::string RationalGF::to_squared_string() const {
  if (exp_one < exp_minus) return to_string();
  return render(numerator, {factor("(1 - x)", exp_one - exp_minus), factor("(1 - x^2)", exp_minus)});
}

Polynomial reconstruct(const std::vector<BigRational>& series, const Polynomial& denominator, int max_num_degree) {
  if (max_num_degree < 0) throw std::invalid_argument("reconstruct: negative numerator degree bound");
  const std::size_t bound = static_cast<std::size_t>(max_num_degree);
  if (series.size() < bound + 3) {
    throw std::invalid_argument("reconstruct: need at least " + std::to_string(bound + 3) + " terms, got " +
                                std::to_string(series.size()));
  }
  const auto& den = denominator.coefficients();
  std::vector<BigRational> product(series.size());
  for (std::size_t k = 0; k < series.size(); ++k)
    for (std::size_t j = 0; j < den.size() && j <= k; ++j) product[k] += den[j] * series[k - j];
  for (std::size_t k = bound + 1; k < series.size(); ++k) {
    if (product[k] != 0) {
      throw ReconstructionError("reconstruct: guard coefficient " + std::to_string(k) + " is " + product[k].get_str() +
                                    "; insufficient terms or wrong denominator hypothesis",
                                k);
    }
  }
  product.resize(bound + 1);
  return Polynomial(std::move(product));
}

Polynomial reconstruct(const std::vector<BigInt>& series, const Polynomial& denominator, int max_num_degree) {
  return reconstruct(to_rational(series), denominator, max_num_degree);
}

std::size_t rho_series_length(int m) { return static_cast<std::size_t>(2 * m + 4); }

RationalGF gf_from_series(const std::vector<BigInt>& series, int m) {
  const unsigned e = static_cast<unsigned>(m + 1);
  Polynomial num = reconstruct(series, Polynomial::one_minus_x_pow(e, e), 2 * m + 1);
  RationalGF gf = RationalGF::canonical(std::move(num), m + 1, m + 1);
  if (gf.exp_one != m + 1) {
    throw TheoremViolation("pole at x=1 has order " + std::to_string(gf.exp_one) + ", expected m+1 = " +
                           std::to_string(m + 1) + " for " + gf.to_string());
  }
  return gf;
}

std::vector<BigInt> graph_series(const Graph& g, std::size_t terms, const RhoOptions& options) {
  if (options.method != CountMethod::kClosed) return series(g, terms, options.method, options.limits);
  if (!g.label() || !has_closed_form(*g.label())) {
    throw std::invalid_argument("no closed form available for this graph; use --method auto|brute|elim");
  }
  std::vector<BigInt> out;
  out.reserve(terms);
  for (std::size_t n = 0; n < terms; ++n) out.push_back(*closed_form_count(*g.label(), static_cast<long>(n)));
  return out;
}

RationalGF rho(const Graph& g, const RhoOptions& options) {
  const int m = g.vertex_count();
  return gf_from_series(graph_series(g, rho_series_length(m), options), m);
}

RationalGF family_gf(const FamilySpec& spec) {
  const Graph g = family(spec);
  const auto& p = spec.params;
  if (spec.name == "star") return RationalGF::canonical(eulerian_poly(p[0], true), static_cast<int>(p[0]) + 2, 0);
  if (spec.name == "discrete") return RationalGF::canonical(eulerian_poly(p[0], true), static_cast<int>(p[0]) + 1, 0);
  if (spec.name == "biclique") {
    return RationalGF::canonical(eulerian_poly(p[0], true) * eulerian_poly(p[1], true),
                                 static_cast<int>(p[0] + p[1]) + 1, 0);
  }
  if (!has_closed_form(spec)) throw std::invalid_argument("family_gf: no closed form for '" + spec.to_string() + "'");
  RhoOptions closed;
  closed.method = CountMethod::kClosed;
  return rho(g, closed);
}

// ---------------------------------------------------------------- QuasiPolynomial

BigRational QuasiPolynomial::eval(long n) const {
  const long r = ((n % period) + period) % period;
  const auto& c = coeffs[static_cast<std::size_t>(r)];
  const BigRational x(n);
  BigRational acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

BigRational QuasiPolynomial::leading(int residue) const {
  const auto& c = coeffs[static_cast<std::size_t>(residue)];
  return static_cast<std::size_t>(degree) < c.size() ? c[static_cast<std::size_t>(degree)] : BigRational(0);
}

std::string QuasiPolynomial::to_string(const std::string& var) const {
  if (period == 1) return Polynomial(coeffs[0]).to_string(var);
  std::ostringstream os;
  for (int r = 0; r < period; ++r) {
    if (r) os << "; ";
    os << var << " = " << r << " mod " << period << ": " << Polynomial(coeffs[static_cast<std::size_t>(r)]).to_string(var);
  }
  return os.str();
}

QuasiPolynomial quasi_from_gf(const RationalGF& gf) {
  if (gf.exp_one < 1) throw std::invalid_argument("quasi_from_gf: expects a pole at x = 1");
  if (gf.numerator.degree() >= gf.exp_one + gf.exp_minus) {
    throw std::invalid_argument("quasi_from_gf: improper rational function");
  }
  QuasiPolynomial qp;
  qp.period = gf.exp_minus > 0 ? 2 : 1;
  qp.degree = gf.exp_one - 1;
  const std::size_t points = static_cast<std::size_t>(qp.degree) + 1;
  constexpr std::size_t kExtra = 3;
  const std::size_t period = static_cast<std::size_t>(qp.period);
  const auto values = gf.expand(period * (points + kExtra));
  for (std::size_t r = 0; r < period; ++r) {
    std::vector<BigRational> nodes;
    std::vector<BigRational> ys;
    for (std::size_t j = 0; j < points; ++j) {
      nodes.emplace_back(static_cast<long>(r + period * j));
      ys.push_back(values[r + period * j]);
    }
    const Polynomial p = interpolate(nodes, ys);
    for (std::size_t j = points; j < points + kExtra; ++j) {
      const std::size_t n = r + period * j;
      if (p.eval(BigRational(static_cast<long>(n))) != values[n]) {
        throw TheoremViolation("quasi-polynomial fit fails at n = " + std::to_string(n));
      }
    }
    qp.coeffs.push_back(p.truncated(points));
  }
  bool attained = false;
  for (int r = 0; r < qp.period; ++r) attained = attained || qp.leading(r) != 0;
  if (!attained) throw TheoremViolation("quasi-polynomial does not attain degree " + std::to_string(qp.degree));
  return qp;
}

BigRational eval_quasi(const QuasiPolynomial& qp, long n) { return qp.eval(n); }

QuasiPolynomial quasi_from_parts(const std::vector<BigRational>& base, const std::vector<BigRational>& alternating) {
  const std::size_t len = std::max(base.size(), alternating.size());
  std::vector<BigRational> even(len), odd(len);
  for (std::size_t i = 0; i < len; ++i) {
    BigRational b = i < base.size() ? base[i] : BigRational(0);
    BigRational a = i < alternating.size() ? alternating[i] : BigRational(0);
    even[i] = b + a;
    odd[i] = b - a;
  }
  const int deg = std::max(Polynomial(even).degree(), Polynomial(odd).degree());
  QuasiPolynomial qp;
  qp.degree = std::max(deg, 0);
  even.resize(static_cast<std::size_t>(qp.degree) + 1);
  odd.resize(static_cast<std::size_t>(qp.degree) + 1);
  if (even == odd) {
    qp.period = 1;
    qp.coeffs = {even};
  } else {
    qp.period = 2;
    qp.coeffs = {even, odd};
  }
  return qp;
}

// ---------------------------------------------------------------- h-vector

HVector h_vector(const RationalGF& gf, const Graph& g) {
  const int m = g.vertex_count();
  if (gf.exp_minus != 0 || !is_bipartite(g).bipartite) {
    throw std::invalid_argument("h_vector is defined for bipartite graphs only");
  }
  if (gf.exp_one != m + 1) throw std::invalid_argument("h_vector expects the denominator (1-x)^(m+1)");
  if (gf.numerator.degree() > m) throw TheoremViolation("numerator degree exceeds m");
  HVector hv;
  auto coeffs = gf.numerator.integer_coefficients();
  coeffs.resize(static_cast<std::size_t>(m) + 1, 0);
  hv.h = std::move(coeffs);
  if (hv.h[0] != 1) throw TheoremViolation("h_0 = " + hv.h[0].get_str() + ", expected 1");
  return hv;
}

// ---------------------------------------------------------------- verification

std::string to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::kPass: return "pass";
    case CheckStatus::kFail: return "fail";
    case CheckStatus::kInfo: return "info";
    case CheckStatus::kSkip: return "skip";
  }
  return "fail";
}

bool VerifyReport::all_passed() const {
  return std::none_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.status == CheckStatus::kFail; });
}

const CheckResult* VerifyReport::find(const std::string& name) const {
  auto it = std::find_if(checks.begin(), checks.end(), [&](const CheckResult& c) { return c.check == name; });
  return it == checks.end() ? nullptr : &*it;
}

nlohmann::ordered_json VerifyReport::to_json() const {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    arr.push_back({{"check", c.check}, {"status", wg::to_string(c.status)}, {"witness", c.witness}});
  }
  return arr;
}

VerifyReport verify_graph(const Graph& g, const RhoOptions& options) {
  using Json = nlohmann::ordered_json;
  VerifyReport report;
  const int m = g.vertex_count();
  auto add = [&](std::string name, bool ok, Json witness) {
    report.checks.push_back({std::move(name), ok ? CheckStatus::kPass : CheckStatus::kFail, std::move(witness)});
  };
  auto add_status = [&](std::string name, CheckStatus s, Json witness) {
    report.checks.push_back({std::move(name), s, std::move(witness)});
  };
  const Json graph_doc = Json::parse(to_json_text(g));

  std::vector<BigInt> counts;
  try {
    counts = graph_series(g, rho_series_length(m), options);
    report.gf = gf_from_series(counts, m);
  } catch (const std::exception& ex) {
    add("rho", false, {{"graph", graph_doc}, {"error", ex.what()}});
    return report;
  }
  const RationalGF& gf = *report.gf;
  add("pole_order", gf.exp_one == m + 1, {{"exp_one", gf.exp_one}, {"expected", m + 1}});

  const auto expanded = gf.expand_integers(counts.size());
  {
    std::size_t bad = counts.size();
    for (std::size_t n = 0; n < counts.size(); ++n)
      if (expanded[n] != counts[n]) {
        bad = n;
        break;
      }
    Json w = {{"terms", counts.size()}};
    if (bad < counts.size()) w.update({{"n", bad}, {"expected", counts[bad].get_str()}, {"actual", expanded[bad].get_str()}});
    add("series_round_trip", bad == counts.size(), w);
  }
  add("constant_term", gf.numerator.coeff(0) == 1, {{"numerator", gf.numerator.to_string()}});

  const BipartiteResult bip = is_bipartite(g);
  const Json bip_witness = bip.bipartite ? Json{{"coloring", bip.coloring}} : Json{{"odd_cycle", bip.odd_cycle}};
  if (bip.bipartite) {
    add("bipartite_denominator", gf.exp_minus == 0, {{"exp_minus", gf.exp_minus}, {"bipartite", true}});
    add("numerator_degree", gf.numerator.degree() <= m, {{"degree", gf.numerator.degree()}, {"m", m}});
    add("numerator_palindromic", gf.numerator.is_palindromic(), {{"numerator", gf.numerator.to_string()}});
  } else {
    add_status("bipartite_denominator", CheckStatus::kSkip, {{"bipartite", false}, {"odd_cycle", bip.odd_cycle}});
    add_status("numerator_palindromic", CheckStatus::kInfo,
               {{"numerator", gf.numerator.to_string()}, {"palindromic", gf.numerator.is_palindromic()}});
  }
  add_status("period_matches_bipartiteness",
             CheckStatus::kInfo,
             {{"bipartite", bip.bipartite}, {"exp_minus", gf.exp_minus}, {"agrees", bip.bipartite == (gf.exp_minus == 0)},
              {"witness", bip_witness}});

  QuasiPolynomial qp;
  try {
    qp = quasi_from_gf(gf);
    report.quasi = qp;
  } catch (const std::exception& ex) {
    add("quasi_polynomial", false, {{"error", ex.what()}});
    return report;
  }

  {
    bool ok = true;
    Json w = Json::array();
    for (long n = 1; n <= 5; ++n) {
      const CountMethod method = options.method == CountMethod::kClosed ? CountMethod::kAuto : options.method;
      const BigInt interior = count(g, n, Region::kInterior, method, options.limits);
      BigRational reflected = qp.eval(-n);
      if (m % 2 != 0) reflected = -reflected;
      const bool match = reflected == BigRational(interior);
      ok = ok && match;
      w.push_back({{"n", n}, {"interior", interior.get_str()}, {"signed_eval_at_minus_n", reflected.get_str()}});
    }
    add("reciprocity", ok, w);
  }

  {
    const BigRational expected = BigRational(gf.numerator.eval(1)) /
                                 BigRational(factorial(m) * power(BigInt(2), static_cast<unsigned long>(gf.exp_minus)));
    bool ok = true;
    Json lead = Json::array();
    for (int r = 0; r < qp.period; ++r) {
      ok = ok && qp.leading(r) == expected;
      lead.push_back(qp.leading(r).get_str());
    }
    add("leading_coefficient", ok, {{"expected", expected.get_str()}, {"actual", lead}});
  }

  if (bip.bipartite && gf.exp_minus == 0 && gf.numerator.degree() <= m) {
    std::vector<BigInt> h = gf.numerator.integer_coefficients();
    h.resize(static_cast<std::size_t>(m) + 1, 0);
    Json hj = Json::array();
    for (const auto& v : h) hj.push_back(v.get_str());
    add("h0", h[0] == 1, {{"h", hj}});
    add("h_nonnegative", std::all_of(h.begin(), h.end(), [](const BigInt& v) { return v >= 0; }), {{"h", hj}});
    BigRational hm = qp.eval(-1);
    if (m % 2 != 0) hm = -hm;
    add("h_top_reciprocity", BigRational(h.back()) == hm, {{"h_m", h.back().get_str()}, {"signed_eval_at_minus_1", hm.get_str()}});

    int top = -1;
    for (int i = 0; i <= m; ++i)
      if (h[static_cast<std::size_t>(i)] != 0) top = i;
    int zeros = 0;
    while (zeros < m && qp.eval(-(zeros + 1)) == 0) ++zeros;
    const int min_j = m - zeros;
    add("trailing_zero_rule", top == min_j, {{"max_nonzero_h_index", top}, {"min_j", min_j}, {"vanishing_run", zeros}});
  } else {
    for (const char* name : {"h0", "h_nonnegative", "h_top_reciprocity", "trailing_zero_rule"}) {
      add_status(name, CheckStatus::kSkip, {{"reason", "not bipartite"}});
    }
  }
  return report;
}

}  // namespace wg
