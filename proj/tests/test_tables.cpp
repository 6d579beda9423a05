#include "doctest.h"
#include "wgcount/closed_forms.hpp"
#include "wgcount/tables.hpp"

using namespace wg;

namespace {

RhoOptions with(CountMethod m) {
  RhoOptions r;
  r.method = m;
  return r;
}

}  // namespace

TEST_CASE("embedded tables are present") {
  const auto names = table_names();
  CHECK(names == std::vector<std::string>{"paths-cycles", "complete", "hypercubes", "bicliques", "examples"});
  for (const auto& name : names) {
    const auto doc = table_document(name);
    CHECK(doc["table"] == name);
    for (const auto& e : doc["entries"]) {
      CHECK(e.contains("id"));
      CHECK(e.contains("section"));
      CHECK(e.contains("graph"));
    }
  }
  CHECK_THROWS(table_document("cubes"));
}

TEST_CASE("expected generating functions decode") {
  const nlohmann::json u3 = {{"numerator", {1, 1, 1}}, {"den", {{"one_minus_x", 3}, {"one_minus_x2", 1}}}};
  CHECK(expected_gf(u3) == RationalGF::canonical(Polynomial{1, 1, 1}, 4, 1));
  const nlohmann::json factored = {{"numerator_factors", {{1, 4, 1}, {1, 11, 11, 1}}}, {"den", {{"one_minus_x", 8}}}};
  CHECK(expected_gf(factored).numerator == Polynomial{1, 4, 1} * Polynomial{1, 11, 11, 1});
  const nlohmann::json parts = {{"quasi", {{"base", {"1", "1/2"}}, {"alt", {"1/2"}}}}};
  const auto qp = expected_quasi(parts);
  REQUIRE(qp.has_value());
  CHECK(qp->eval(0) == make_rational(3, 2));
  CHECK(qp->eval(1) == 1);
  CHECK_FALSE(expected_quasi(nlohmann::json::object()).has_value());
}

TEST_CASE("paths-cycles table") {
  const auto rep = run_table("paths-cycles", with(CountMethod::kClosed));
  CHECK(rep.rows.size() == 10);
  for (const auto& row : rep.rows) CHECK_MESSAGE(row.passed, row.id << " " << row.actual);
}

TEST_CASE("every table passes with closed forms") {
  for (const auto& name : table_names()) {
    const auto rep = run_table(name, with(CountMethod::kClosed));
    for (const auto& row : rep.rows) CHECK_MESSAGE(row.passed, name << ": " << row.id << " " << row.actual);
  }
}

TEST_CASE("table results do not depend on the counting engine") {
  for (const char* name : {"paths-cycles", "bicliques", "examples"}) {
    const auto closed = run_table(name, with(CountMethod::kClosed));
    for (CountMethod m : {CountMethod::kAuto, CountMethod::kElim}) {
      const auto other = run_table(name, with(m));
      REQUIRE(other.rows.size() == closed.rows.size());
      for (std::size_t i = 0; i < other.rows.size(); ++i) {
        CHECK(other.rows[i].passed);
        CHECK(other.rows[i].actual == closed.rows[i].actual);
      }
    }
  }
}

TEST_CASE("entry method fallback") {
  CHECK(entry_method(family("grid:2,2"), CountMethod::kClosed) == CountMethod::kAuto);
  CHECK(entry_method(family("cycle:3"), CountMethod::kClosed) == CountMethod::kClosed);
  CHECK(entry_method(family("cycle:3"), CountMethod::kBrute) == CountMethod::kBrute);
}
