#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "wgcount/algebra.hpp"
#include "wgcount/graph.hpp"

namespace wg {

/// A counting engine refused the query because it would exceed a ceiling.
class CostGuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class CountMethod { kAuto, kBrute, kElim, kClosed };

CountMethod parse_count_method(const std::string& name);
std::string to_string(CountMethod method);

struct CountLimits {
  /// Brute force refuses when (n+1)^m exceeds this; auto dispatch uses it as
  /// the brute/elimination threshold.
  double brute_ceiling = 1e7;
  /// Elimination refuses when (n+1)^(width+1) exceeds this.
  double elim_ceiling = 2e9;
};

enum class Region { kClosure, kInterior };

/// WG(n) by exhaustive depth-first assignment.
BigInt count_brute(const Graph& g, long n, const CountLimits& limits = {});

/// WG(n) by sum-product elimination along `plan`, per connected component.
BigInt count_elim(const Graph& g, long n, const EliminationPlan& plan, const CountLimits& limits = {});
BigInt count_elim(const Graph& g, long n, const CountLimits& limits = {});

/// Lattice points of the open dilate: 1 <= a_i <= n-1 and a_i + a_j <= n-1 on edges.
BigInt count_interior(const Graph& g, long n, const CountLimits& limits = {});

BigInt count_auto(const Graph& g, long n, const CountLimits& limits = {});

/// Dispatch on brute / elim / auto. kClosed is not handled here.
BigInt count(const Graph& g, long n, CountMethod method, const CountLimits& limits = {});
BigInt count(const Graph& g, long n, Region region, CountMethod method, const CountLimits& limits = {});

/// [WG(0), ..., WG(terms-1)], evaluated in parallel over n.
std::vector<BigInt> series(const Graph& g, std::size_t terms, CountMethod method = CountMethod::kAuto,
                           const CountLimits& limits = {});
/// Single-threaded reference for series().
std::vector<BigInt> series_serial(const Graph& g, std::size_t terms, CountMethod method = CountMethod::kAuto,
                                  const CountLimits& limits = {});

namespace detail {
/// Points of {0..upper}^m with a_i + a_j <= edge_sum on every edge.
BigInt brute_box(const Graph& g, long upper, long edge_sum, const CountLimits& limits);
BigInt elim_box(const Graph& g, long upper, long edge_sum, const EliminationPlan& plan, const CountLimits& limits);
}  // namespace detail

}  // namespace wg
