#include "wgcount/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "wgcount/closed_forms.hpp"
#include "wgcount/genfun.hpp"
#include "wgcount/tables.hpp"

namespace wg::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kGrammar =
    "usage: wgcount <verb> [--graph <dsl-or-path>] [--n <int>] [--terms <int>]\n"
    "               [--method auto|brute|elim|closed] [--format text|json]\n"
    "               [--max-states <int>] [--table <name>]\n"
    "verbs: count series genfun quasipoly verify table\n"
    "graph: family DSL (null, path:k, cycle:k, complete:t, star:t, discrete:t,\n"
    "       biclique:p,q, hypercube:d, octahedron, grid:p,q), an inline document\n"
    "       {\"m\":..,\"edges\":[[i,j],..]}, or a path to a file holding either\n";

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string verb;
  std::string graph;
  long n = -1;
  long terms = 10;
  std::string method = "auto";
  std::string format = "text";
  double max_states = 1e7;
  double max_table = 2e9;
  std::string table;
  bool interior = false;
  bool squared_form = false;
};

Graph load_graph(const std::string& source) {
  if (source.empty()) throw UsageError("--graph is required for this verb");
  std::error_code ec;
  if (source.front() != '{' && std::filesystem::is_regular_file(source, ec)) {
    std::ifstream in(source);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_graph(buf.str());
  }
  return parse_graph(source);
}

Json graph_json(const Graph& g) {
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  return Json{{"m", g.vertex_count()}, {"edges", edges}};
}

Json strings(const std::vector<BigInt>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(x.get_str());
  return a;
}

Json gf_json(const RationalGF& gf) {
  Json coeffs = Json::array();
  for (const auto& c : gf.numerator.coefficients()) coeffs.push_back(c.get_str());
  return Json{{"numerator", gf.numerator.to_string()},
              {"numerator_coefficients", coeffs},
              {"exp_one", gf.exp_one},
              {"exp_minus", gf.exp_minus},
              {"text", gf.to_string()},
              {"squared_text", gf.to_squared_string()}};
}

Json quasi_json(const QuasiPolynomial& qp) {
  Json rows = Json::array();
  for (const auto& r : qp.coeffs) {
    Json row = Json::array();
    for (const auto& c : r) row.push_back(c.get_str());
    rows.push_back(row);
  }
  return Json{{"period", qp.period}, {"degree", qp.degree}, {"coefficients", rows}, {"text", qp.to_string()}};
}

RhoOptions rho_options(const Options& o) {
  RhoOptions r;
  r.method = parse_count_method(o.method);
  r.limits.brute_ceiling = o.max_states;
  r.limits.elim_ceiling = o.max_table;
  return r;
}

void require_closed(const Graph& g, const RhoOptions& r) {
  if (r.method == CountMethod::kClosed && !(g.label() && has_closed_form(*g.label()))) {
    throw UsageError("--method closed: no closed form for this graph");
  }
}

int emit(const Options& o, std::ostream& out, const Json& doc, const std::string& text) {
  if (o.format == "json") {
    out << doc.dump(2) << '\n';
  } else {
    out << text;
  }
  return kExitOk;
}

int do_count(const Options& o, std::ostream& out) {
  const Graph g = load_graph(o.graph);
  if (o.n < 0) throw UsageError("--n <int> (nonnegative) is required for count");
  const RhoOptions r = rho_options(o);
  require_closed(g, r);
  BigInt value;
  if (o.interior) {
    if (o.n < 1) throw UsageError("interior counts need --n >= 1");
    const CountMethod m = r.method == CountMethod::kClosed ? CountMethod::kAuto : r.method;
    value = count(g, o.n, Region::kInterior, m, r.limits);
  } else if (r.method == CountMethod::kClosed) {
    value = *closed_form_count(*g.label(), o.n);
  } else {
    value = count(g, o.n, r.method, r.limits);
  }
  Json doc{{"command", "count"},
           {"graph", graph_json(g)},
           {"result",
            {{"n", o.n}, {"region", o.interior ? "interior" : "closure"}, {"method", o.method}, {"value", value.get_str()}}},
           {"checks", Json::array()}};
  return emit(o, out, doc, value.get_str() + "\n");
}

int do_series(const Options& o, std::ostream& out) {
  const Graph g = load_graph(o.graph);
  if (o.terms < 1) throw UsageError("--terms must be at least 1");
  const RhoOptions r = rho_options(o);
  require_closed(g, r);
  const auto values = graph_series(g, static_cast<std::size_t>(o.terms), r);
  std::string text;
  for (std::size_t i = 0; i < values.size(); ++i) text += (i ? ", " : "") + values[i].get_str();
  Json doc{{"command", "series"},
           {"graph", graph_json(g)},
           {"result", {{"terms", o.terms}, {"method", o.method}, {"values", strings(values)}}},
           {"checks", Json::array()}};
  return emit(o, out, doc, text + "\n");
}

int do_genfun(const Options& o, std::ostream& out) {
  const Graph g = load_graph(o.graph);
  const RhoOptions r = rho_options(o);
  require_closed(g, r);
  const RationalGF gf = rho(g, r);
  Json doc{{"command", "genfun"}, {"graph", graph_json(g)}, {"result", gf_json(gf)}, {"checks", Json::array()}};
  return emit(o, out, doc, (o.squared_form ? gf.to_squared_string() : gf.to_string()) + "\n");
}

int do_quasipoly(const Options& o, std::ostream& out) {
  const Graph g = load_graph(o.graph);
  const RhoOptions r = rho_options(o);
  require_closed(g, r);
  const QuasiPolynomial qp = quasi_from_gf(rho(g, r));
  Json doc{{"command", "quasipoly"}, {"graph", graph_json(g)}, {"result", quasi_json(qp)}, {"checks", Json::array()}};
  return emit(o, out, doc, qp.to_string() + "\n");
}

int do_verify(const Options& o, std::ostream& out) {
  const Graph g = load_graph(o.graph);
  const RhoOptions r = rho_options(o);
  require_closed(g, r);
  const VerifyReport report = verify_graph(g, r);
  Json result = Json::object();
  if (report.gf) result["genfun"] = gf_json(*report.gf);
  if (report.quasi) result["quasipoly"] = quasi_json(*report.quasi);
  result["all_passed"] = report.all_passed();
  Json doc{{"command", "verify"}, {"graph", graph_json(g)}, {"result", result}, {"checks", report.to_json()}};
  std::ostringstream text;
  if (report.gf) text << "genfun: " << report.gf->to_string() << '\n';
  for (const auto& c : report.checks) {
    std::string status = to_string(c.status);
    for (auto& ch : status) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    text << status << "  " << c.check << "  " << c.witness.dump() << '\n';
  }
  text << (report.all_passed() ? "all checks passed" : "verification FAILED") << '\n';
  emit(o, out, doc, text.str());
  return report.all_passed() ? kExitOk : kExitVerificationFailed;
}

int do_table(const Options& o, std::ostream& out) {
  if (!o.graph.empty()) throw UsageError("table takes no --graph");
  if (o.table.empty()) throw UsageError("--table <name> is required; one of: paths-cycles complete hypercubes bicliques examples all");
  std::vector<std::string> names = o.table == "all" ? table_names() : std::vector<std::string>{o.table};
  // Without an explicit --method, tables use closed forms where they exist.
  Options resolved = o;
  if (resolved.method == "default") resolved.method = "closed";
  const RhoOptions r = rho_options(resolved);
  Json tables = Json::array();
  Json checks = Json::array();
  std::ostringstream text;
  bool ok = true;
  for (const auto& name : names) {
    const TableReport rep = run_table(name, r);
    ok = ok && rep.all_passed();
    Json rows = Json::array();
    text << "table " << name << '\n';
    for (const auto& row : rep.rows) {
      rows.push_back({{"id", row.id},
                      {"section", row.section},
                      {"status", row.passed ? "PASS" : "FAIL"},
                      {"expected", row.expected},
                      {"actual", row.actual},
                      {"failures", row.failures}});
      checks.push_back({{"check", name + ": " + row.id}, {"status", row.passed ? "pass" : "fail"}, {"witness", row.actual}});
      text << (row.passed ? "PASS  " : "FAIL  ") << row.id << "  " << row.actual << '\n';
      for (const auto& f : row.failures) text << "      " << f << '\n';
    }
    tables.push_back({{"table", name}, {"rows", rows}});
  }
  text << (ok ? "all entries match" : "table mismatch") << '\n';
  Json doc{{"command", "table"}, {"graph", nullptr}, {"result", {{"tables", tables}}}, {"checks", checks}};
  emit(o, out, doc, text.str());
  return ok ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact counting of bounded vertex weightings on graphs", "wgcount"};
  app.require_subcommand(1, 1);
  Options o;
  o.method = "default";
  const std::vector<std::pair<std::string, std::string>> verbs = {
      {"count", "number of weightings WG(n)"},
      {"series", "WG(0), ..., WG(terms-1)"},
      {"genfun", "rational generating function sum WG(n) x^n"},
      {"quasipoly", "Ehrhart quasi-polynomial of WG"},
      {"verify", "check pole order, reciprocity, h-vector and symmetry properties"},
      {"table", "recompute a reference table and diff it"}};
  for (const auto& [name, help] : verbs) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--graph", o.graph, "family DSL, inline document, or file path");
    sub->add_option("--n", o.n, "weight bound");
    sub->add_option("--terms", o.terms, "number of series terms");
    sub->add_option("--method", o.method, "auto|brute|elim|closed")
        ->check(CLI::IsMember({"auto", "brute", "elim", "closed"}));
    sub->add_option("--format", o.format, "text|json")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--max-states", o.max_states, "brute-force ceiling on (n+1)^m");
    sub->add_option("--max-table", o.max_table, "elimination ceiling on (n+1)^(width+1)");
    sub->add_option("--table", o.table, "paths-cycles|complete|hypercubes|bicliques|examples|all");
    sub->add_flag("--interior", o.interior, "count interior lattice points instead");
    sub->add_flag("--squared", o.squared_form, "render the denominator as (1-x)^a(1-x^2)^k");
    sub->callback([&o, name = name] { o.verb = name; });
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help() << kGrammar;
    return kExitOk;
  } catch (const CLI::ParseError& ex) {
    err << "error: " << ex.what() << '\n' << kGrammar;
    return kExitUsage;
  }

  try {
    if (o.verb != "table" && o.method == "default") o.method = "auto";
    if (o.verb == "count") return do_count(o, out);
    if (o.verb == "series") return do_series(o, out);
    if (o.verb == "genfun") return do_genfun(o, out);
    if (o.verb == "quasipoly") return do_quasipoly(o, out);
    if (o.verb == "verify") return do_verify(o, out);
    if (o.verb == "table") return do_table(o, out);
  } catch (const UsageError& ex) {
    err << "error: " << ex.what() << '\n' << kGrammar;
    return kExitUsage;
  } catch (const GraphError& ex) {
    err << "error: " << ex.what() << '\n' << kGrammar;
    return kExitUsage;
  } catch (const CostGuardError& ex) {
    err << "error: " << ex.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& ex) {
    err << "error: " << ex.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& ex) {
    err << "verification error: " << ex.what() << '\n';
    return kExitVerificationFailed;
  }
  err << kGrammar;
  return kExitUsage;
}

}  // namespace wg::cli
