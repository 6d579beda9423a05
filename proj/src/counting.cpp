#include "wgcount/counting.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <set>

#include <omp.h>

namespace wg {

namespace {

using u128 = unsigned __int128;

BigInt to_big(std::uint64_t v) {
  BigInt r;
  mpz_import(r.get_mpz_t(), 1, -1, sizeof v, 0, 0, &v);
  return r;
}

BigInt to_big(u128 v) {
  const std::uint64_t words[2] = {static_cast<std::uint64_t>(v), static_cast<std::uint64_t>(v >> 64)};
  BigInt r;
  mpz_import(r.get_mpz_t(), 2, -1, sizeof(std::uint64_t), 0, 0, words);
  return r;
}

const BigInt& to_big(const BigInt& v) { return v; }

double log2_states(long base, std::size_t exponent) {
  return static_cast<double>(exponent) * std::log2(static_cast<double>(std::max(base, 1L)));
}

std::string ceiling_message(const char* engine, double log2_cost, double ceiling) {
  return std::string(engine) + " engine refused: estimated 2^" + std::to_string(log2_cost) +
         " states exceed the ceiling " + std::to_string(static_cast<long double>(ceiling)) +
         " (raise --max-states or pick another --method)";
}

struct Factor {
  std::vector<int> scope;  // sorted
  std::size_t table_id;
};

template <class Acc>
BigInt eliminate_component(const Graph& g, long upper, long edge_sum, const std::vector<int>& order,
                           const CountLimits& limits) {
  const long radix = upper + 1;
  const int m = g.vertex_count();
  std::vector<std::set<int>> edge_nbr(static_cast<std::size_t>(m));
  for (const Edge& e : g.edges()) {
    edge_nbr[e.u].insert(e.v);
    edge_nbr[e.v].insert(e.u);
  }
  std::vector<std::vector<Acc>> tables;
  std::vector<Factor> factors;

  for (int v : order) {
    std::vector<std::size_t> involved;
    std::set<int> scope_set(edge_nbr[v].begin(), edge_nbr[v].end());
    for (std::size_t f = 0; f < factors.size(); ++f) {
      const auto& sc = factors[f].scope;
      if (std::binary_search(sc.begin(), sc.end(), v)) {
        involved.push_back(f);
        scope_set.insert(sc.begin(), sc.end());
      }
    }
    scope_set.erase(v);
    const std::vector<int> scope(scope_set.begin(), scope_set.end());
    const std::size_t k = scope.size();
    const double cost = log2_states(radix, k + 1);
    if (cost > std::log2(limits.elim_ceiling)) throw CostGuardError(ceiling_message("elimination", cost, limits.elim_ceiling));

    std::size_t size = 1;
    for (std::size_t i = 0; i < k; ++i) size *= static_cast<std::size_t>(radix);

    // Per involved factor: stride of each new-scope position and of v.
    const std::size_t nf = involved.size();
    std::vector<std::vector<std::size_t>> strides(nf, std::vector<std::size_t>(k, 0));
    std::vector<std::size_t> vstride(nf, 0);
    std::vector<const Acc*> data(nf);
    for (std::size_t f = 0; f < nf; ++f) {
      const Factor& fac = factors[involved[f]];
      data[f] = tables[fac.table_id].data();
      std::size_t stride = 1;
      for (int var : fac.scope) {
        if (var == v) {
          vstride[f] = stride;
        } else {
          auto pos = std::lower_bound(scope.begin(), scope.end(), var) - scope.begin();
          strides[f][static_cast<std::size_t>(pos)] = stride;
        }
        stride *= static_cast<std::size_t>(radix);
      }
    }
    std::vector<std::size_t> edge_pos;
    for (int w : edge_nbr[v]) edge_pos.push_back(static_cast<std::size_t>(std::lower_bound(scope.begin(), scope.end(), w) - scope.begin()));

    std::vector<Acc> table(size);
    std::vector<long> digit(k, 0);
    std::vector<std::size_t> base(nf, 0);
    for (std::size_t idx = 0; idx < size; ++idx) {
      long bound = upper;
      for (std::size_t p : edge_pos) bound = std::min(bound, edge_sum - digit[p]);
      Acc sum = 0;
      if (bound >= 0) {
        if (nf == 0) {
          sum = static_cast<Acc>(static_cast<unsigned long>(bound + 1));
        } else {
          for (long a = 0; a <= bound; ++a) {
            const std::size_t off = static_cast<std::size_t>(a);
            Acc prod = data[0][base[0] + off * vstride[0]];
            for (std::size_t f = 1; f < nf && prod != 0; ++f) prod *= data[f][base[f] + off * vstride[f]];
            sum += prod;
          }
        }
      }
      table[idx] = std::move(sum);
      for (std::size_t p = 0; p < k; ++p) {
        for (std::size_t f = 0; f < nf; ++f) base[f] += strides[f][p];
        if (++digit[p] < radix) break;
        digit[p] = 0;
        for (std::size_t f = 0; f < nf; ++f) base[f] -= strides[f][p] * static_cast<std::size_t>(radix);
      }
    }

    std::vector<Factor> kept;
    for (std::size_t f = 0; f < factors.size(); ++f) {
      if (std::find(involved.begin(), involved.end(), f) == involved.end()) {
        kept.push_back(factors[f]);
      } else {
        tables[factors[f].table_id] = {};
      }
    }
    tables.push_back(std::move(table));
    kept.push_back(Factor{scope, tables.size() - 1});
    factors = std::move(kept);
    for (int w : edge_nbr[v]) edge_nbr[w].erase(v);
    edge_nbr[v].clear();
  }

  BigInt result = 1;
  for (const Factor& f : factors) result *= to_big(tables[f.table_id][0]);
  return result;
}

BigInt eliminate(const Graph& g, long upper, long edge_sum, const std::vector<int>& order, const CountLimits& limits) {
  const double bits = log2_states(upper + 1, static_cast<std::size_t>(g.vertex_count()));
  if (bits < 63.0) return eliminate_component<std::uint64_t>(g, upper, edge_sum, order, limits);
  if (bits < 127.0) return eliminate_component<u128>(g, upper, edge_sum, order, limits);
  return eliminate_component<BigInt>(g, upper, edge_sum, order, limits);
}

class BruteCounter {
 public:
  BruteCounter(const Graph& g, long upper, long edge_sum)
      : g_(g), upper_(upper), edge_sum_(edge_sum), value_(static_cast<std::size_t>(g.vertex_count()), 0) {}

  std::uint64_t run() { return g_.vertex_count() == 0 ? 1 : visit(0); }

 private:
  std::uint64_t visit(int v) {
    long bound = upper_;
    for (int w : g_.neighbors(v))
      if (w < v) bound = std::min(bound, edge_sum_ - value_[w]);
    if (bound < 0) return 0;
    if (v + 1 == g_.vertex_count()) return static_cast<std::uint64_t>(bound + 1);
    std::uint64_t total = 0;
    for (long a = 0; a <= bound; ++a) {
      value_[v] = a;
      total += visit(v + 1);
    }
    return total;
  }

  const Graph& g_;
  long upper_;
  long edge_sum_;
  std::vector<long> value_;
};

}  // namespace

CountMethod parse_count_method(const std::string& name) {
  if (name == "auto") return CountMethod::kAuto;
  if (name == "brute") return CountMethod::kBrute;
  if (name == "elim") return CountMethod::kElim;
  if (name == "closed") return CountMethod::kClosed;
  throw std::invalid_argument("unknown counting method '" + name + "'");
}

std::string to_string(CountMethod method) {
  switch (method) {
    case CountMethod::kAuto: return "auto";
    case CountMethod::kBrute: return "brute";
    case CountMethod::kElim: return "elim";
    case CountMethod::kClosed: return "closed";
  }
  return "auto";
}

namespace detail {

BigInt brute_box(const Graph& g, long upper, long edge_sum, const CountLimits& limits) {
  if (upper < 0) return g.vertex_count() == 0 ? 1 : 0;
  const double cost = log2_states(upper + 1, static_cast<std::size_t>(g.vertex_count()));
  if (cost > std::log2(limits.brute_ceiling) || cost > 62.0) {
    throw CostGuardError(ceiling_message("brute-force", cost, limits.brute_ceiling));
  }
  return to_big(BruteCounter(g, upper, edge_sum).run());
}

BigInt elim_box(const Graph& g, long upper, long edge_sum, const EliminationPlan& plan, const CountLimits& limits) {
  check_plan(g, plan);
  if (upper < 0) return g.vertex_count() == 0 ? 1 : 0;
  BigInt total = 1;
  for (const Component& c : components(g)) {
    std::vector<int> local(static_cast<std::size_t>(g.vertex_count()), -1);
    for (std::size_t i = 0; i < c.to_original.size(); ++i) local[c.to_original[i]] = static_cast<int>(i);
    std::vector<int> order;
    for (int v : plan.order)
      if (local[v] >= 0) order.push_back(local[v]);
    total *= eliminate(c.graph, upper, edge_sum, order, limits);
    if (total == 0) break;
  }
  return total;
}

}  // namespace detail

BigInt count_brute(const Graph& g, long n, const CountLimits& limits) {
  if (n < 0) throw std::domain_error("weight bound must be nonnegative");
  return detail::brute_box(g, n, n, limits);
}

BigInt count_elim(const Graph& g, long n, const EliminationPlan& plan, const CountLimits& limits) {
  if (n < 0) throw std::domain_error("weight bound must be nonnegative");
  return detail::elim_box(g, n, n, plan, limits);
}

BigInt count_elim(const Graph& g, long n, const CountLimits& limits) {
  return count_elim(g, n, elimination_order(g), limits);
}

namespace {

bool brute_fits(const Graph& g, long upper, const CountLimits& limits) {
  return log2_states(upper + 1, static_cast<std::size_t>(g.vertex_count())) <= std::log2(limits.brute_ceiling);
}

BigInt count_box(const Graph& g, long upper, long edge_sum, CountMethod method, const CountLimits& limits) {
  switch (method) {
    case CountMethod::kBrute: return detail::brute_box(g, upper, edge_sum, limits);
    case CountMethod::kElim: return detail::elim_box(g, upper, edge_sum, elimination_order(g), limits);
    case CountMethod::kAuto:
      if (brute_fits(g, upper, limits)) return detail::brute_box(g, upper, edge_sum, limits);
      return detail::elim_box(g, upper, edge_sum, elimination_order(g), limits);
    case CountMethod::kClosed: break;
  }
  throw std::invalid_argument("closed-form counting is dispatched through the closed-forms module");
}

}  // namespace

BigInt count_auto(const Graph& g, long n, const CountLimits& limits) {
  return count(g, n, CountMethod::kAuto, limits);
}

BigInt count(const Graph& g, long n, CountMethod method, const CountLimits& limits) {
  return count(g, n, Region::kClosure, method, limits);
}

BigInt count(const Graph& g, long n, Region region, CountMethod method, const CountLimits& limits) {
  if (region == Region::kClosure) {
    if (n < 0) throw std::domain_error("weight bound must be nonnegative");
    return count_box(g, n, n, method, limits);
  }
  if (n < 1) throw std::domain_error("interior count needs n >= 1");
  if (g.vertex_count() == 0) return 1;
  // a_i = b_i + 1 turns the open dilate into a box count.
  return count_box(g, n - 2, n - 3, method, limits);
}

BigInt count_interior(const Graph& g, long n, const CountLimits& limits) {
  return count(g, n, Region::kInterior, CountMethod::kAuto, limits);
}

std::vector<BigInt> series_serial(const Graph& g, std::size_t terms, CountMethod method, const CountLimits& limits) {
  std::vector<BigInt> out;
  out.reserve(terms);
  for (std::size_t n = 0; n < terms; ++n) out.push_back(count(g, static_cast<long>(n), method, limits));
  return out;
}

std::vector<BigInt> series(const Graph& g, std::size_t terms, CountMethod method, const CountLimits& limits) {
  std::vector<BigInt> out(terms);
  std::exception_ptr failure;
  const long count_terms = static_cast<long>(terms);
  // Larger n first: the expensive evaluations start early.
#pragma omp parallel for schedule(dynamic, 1)
  for (long i = 0; i < count_terms; ++i) {
    const long n = count_terms - 1 - i;
    try {
      out[static_cast<std::size_t>(n)] = count(g, n, method, limits);
    } catch (...) {
#pragma omp critical(wg_series_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

}  // namespace wg
