#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "wgcount/genfun.hpp"

namespace wg {

/// Names of the embedded expected-value tables, in display order.
std::vector<std::string> table_names();
/// Raw embedded document for one table.
nlohmann::json table_document(const std::string& name);

/// Expected generating function of a table entry, from its transcribed
/// numerator and (1-x)^a (1+x)^b (1-x^2)^k denominator.
RationalGF expected_gf(const nlohmann::json& entry);
/// Expected quasi-polynomial of a table entry, if it carries one.
std::optional<QuasiPolynomial> expected_quasi(const nlohmann::json& entry);

struct TableRow {
  std::string id;
  std::string section;
  bool passed = false;
  std::string expected;
  std::string actual;
  std::vector<std::string> failures;
};

struct TableReport {
  std::string name;
  std::vector<TableRow> rows;
  bool all_passed() const;
};

/// Method used for one entry: a graph with a closed form keeps kClosed,
/// everything else falls back to kAuto under kClosed.
CountMethod entry_method(const Graph& g, CountMethod requested);

TableReport run_table(const std::string& name, const RhoOptions& options);

}  // namespace wg
