#include "wgcount/tables.hpp"

#include <algorithm>
#include <exception>
#include <string_view>
#include <utility>

#include "wgcount/closed_forms.hpp"

namespace wg {

namespace detail {
const std::vector<std::pair<std::string_view, std::string_view>>& embedded_tables();
}

namespace {

Polynomial integer_poly(const nlohmann::json& arr) {
  std::vector<BigInt> c;
  for (const auto& v : arr) c.emplace_back(v.get<long>());
  return Polynomial::from_integers(c);
}

std::vector<BigRational> rationals(const nlohmann::json& arr) {
  std::vector<BigRational> out;
  for (const auto& v : arr) out.push_back(v.is_string() ? parse_rational(v.get<std::string>()) : BigRational(v.get<long>()));
  return out;
}

Graph entry_graph(const nlohmann::json& entry) {
  const auto& g = entry.at("graph");
  return parse_graph(g.is_string() ? g.get<std::string>() : g.dump());
}

}  // namespace

std::vector<std::string> table_names() {
  std::vector<std::string> names;
  for (const auto& [name, _] : detail::embedded_tables()) names.emplace_back(name);
  return names;
}

nlohmann::json table_document(const std::string& name) {
  for (const auto& [n, text] : detail::embedded_tables())
    if (n == name) return nlohmann::json::parse(text);
  throw std::invalid_argument("unknown table '" + name + "'");
}

RationalGF expected_gf(const nlohmann::json& entry) {
  Polynomial num{1};
  if (entry.contains("numerator")) num = integer_poly(entry["numerator"]);
  if (entry.contains("numerator_factors"))
    for (const auto& f : entry["numerator_factors"]) num *= integer_poly(f);
  const auto& den = entry.at("den");
  const int a = den.value("one_minus_x", 0);
  const int b = den.value("one_plus_x", 0);
  const int k = den.value("one_minus_x2", 0);
  return RationalGF::canonical(std::move(num), a + k, b + k);
}

std::optional<QuasiPolynomial> expected_quasi(const nlohmann::json& entry) {
  if (!entry.contains("quasi")) return std::nullopt;
  const auto& q = entry["quasi"];
  if (q.contains("factors")) {
    Polynomial p = Polynomial::constant(parse_rational(q.at("scale").get<std::string>()));
    for (const auto& f : q["factors"]) p *= integer_poly(f);
    return quasi_from_parts(p.coefficients(), {});
  }
  return quasi_from_parts(rationals(q.at("base")), q.contains("alt") ? rationals(q["alt"]) : std::vector<BigRational>{});
}

bool TableReport::all_passed() const {
  return std::all_of(rows.begin(), rows.end(), [](const TableRow& r) { return r.passed; });
}

CountMethod entry_method(const Graph& g, CountMethod requested) {
  if (requested != CountMethod::kClosed) return requested;
  return g.label() && has_closed_form(*g.label()) ? CountMethod::kClosed : CountMethod::kAuto;
}

TableReport run_table(const std::string& name, const RhoOptions& options) {
  const nlohmann::json doc = table_document(name);
  const auto& entries = doc.at("entries");
  TableReport report;
  report.name = name;
  report.rows.resize(entries.size());
  const long count = static_cast<long>(entries.size());

  // Rows are filled by index, so output order follows the data file.
#pragma omp parallel for schedule(dynamic, 1)
  for (long i = 0; i < count; ++i) {
    const auto& entry = entries[static_cast<std::size_t>(i)];
    TableRow& row = report.rows[static_cast<std::size_t>(i)];
    row.id = entry.at("id").get<std::string>();
    row.section = entry.value("section", "");
    try {
      const Graph g = entry_graph(entry);
      RhoOptions opts = options;
      opts.method = entry_method(g, options.method);
      const RationalGF expected = expected_gf(entry);
      const RationalGF actual = rho(g, opts);
      row.expected = expected.to_string();
      row.actual = actual.to_string();
      if (!(actual == expected)) row.failures.push_back("generating function differs");
      if (entry.contains("text") && actual.to_string() != entry["text"].get<std::string>()) {
        row.failures.push_back("canonical text differs: expected " + entry["text"].get<std::string>());
      }
      if (entry.contains("squared_text") && actual.to_squared_string() != entry["squared_text"].get<std::string>()) {
        row.failures.push_back("squared-form text differs: got " + actual.to_squared_string());
      }
      if (auto q = expected_quasi(entry)) {
        const QuasiPolynomial got = quasi_from_gf(actual);
        if (!(got == *q)) row.failures.push_back("quasi-polynomial differs: got " + got.to_string());
      }
      if (entry.contains("h")) {
        const HVector h = h_vector(actual, g);
        std::vector<BigInt> want;
        for (const auto& v : entry["h"]) want.emplace_back(v.get<long>());
        if (h.h != want) row.failures.push_back("h-vector differs");
      }
    } catch (const std::exception& ex) {
      row.failures.push_back(ex.what());
    }
    row.passed = row.failures.empty();
  }
  return report;
}

}  // namespace wg
