#pragma once

#include "chromsym/bigint.hpp"
#include "chromsym/graph.hpp"
#include "chromsym/partition.hpp"
#include "chromsym/symfunc.hpp"
#include "chromsym/tabloid.hpp"

#include <optional>
#include <string_view>
#include <utility>

namespace chromsym {

/// A graph together with whatever structure the coefficient routes can use.
struct Instance {
  Graph graph;
  std::optional<Poset> poset;              // set when graph == inc(poset)
  std::optional<Partition> multipartite;  // set when graph == K_lambda

  static Instance from_multipartite(const Partition& lambda);
  static Instance from_poset(Poset poset);
  static Instance from_graph(Graph graph);

  int size() const noexcept { return graph.size(); }
  /// The poset when present, otherwise the vertex-index total order.
  Poset order() const;
};

enum class Route { Auto, WW, Tabloid, Tail, Closed, Oracle };

std::string_view to_string(Route route) noexcept;
/// Throws ParseError on an unknown name.
Route parse_route(std::string_view name);

struct CoeffReport {
  Partition lambda;
  BigInt value;
  Route route = Route::Auto;
  std::optional<SignedCount> tabloid_counts;
};

/// Signed sum over SRH tabloids of shape lambda, weighted by semi-ordered
/// stable partition counts of the sorted content. Zero when |lambda| != |V|.
BigInt coeff_ww(const Graph& graph, const Partition& lambda);
BigInt coeff_ww(const Instance& instance, const Partition& lambda);

/// Signed count of SRH G-tabloids. Throws OrderIncompatible; zero when |lambda| != |V|.
BigInt coeff_tabloids(const Graph& graph, const Poset& order, const Partition& lambda);

/// Signed count of SRH G-tabloids of inc(poset) whose tail sequence is
/// non-increasing. Zero when |lambda| != |P|.
BigInt coeff_tail(const Poset& poset, const Partition& lambda);

/// [s_(2^C,1^D)] X_{K_(2^beta)} = beta!/(beta-C)! * N_sp(K_(2^(beta-C))).
/// Throws BadShape unless beta >= 1, C, D >= 0, 2C + D = 2 beta.
BigInt coeff_closed_2beta(int beta, int c, int d);

/// [s_lambda] X_{K_(3,2^beta)} from the closed forms; zero for shapes with a
/// part above 3 or two parts equal to 3. Throws BadShape if |lambda| != 2 beta + 3.
BigInt coeff_closed_32beta(int beta, const Partition& lambda);

enum class ClosedFamily { TwoPower, ThreeTwoPower };

/// Recognizes (2^beta) and (3,2^beta), beta >= 1.
std::optional<std::pair<ClosedFamily, int>> closed_family(const Partition& lambda);

/// The route Auto resolves to for this instance.
Route default_route(const Instance& instance);

/// One coefficient through the requested route. Closed requires a matching
/// multipartite instance and Tail a poset; both throw BadShape otherwise.
CoeffReport coefficient(const Instance& instance, const Partition& lambda, Route route = Route::Auto);

/// Full Schur expansion over all partitions of |V|.
SymFunc expand_schur(const Instance& instance, Route route = Route::Auto);

inline constexpr int kDefaultScanCap = 12;

struct ScanResult {
  bool all_nonnegative = true;
  std::optional<std::pair<Partition, BigInt>> first_negative;
  Route route = Route::Auto;
};

/// Scans partitions of |V| in reverse-lexicographic order for a negative
/// Schur coefficient. Throws CapExceeded above `cap` vertices.
ScanResult positivity_scan(const Instance& instance, int cap = kDefaultScanCap, Route route = Route::Auto);

}  // namespace chromsym
