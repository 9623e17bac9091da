#include "chromsym/schur.hpp"

#include "chromsym/error.hpp"
#include "chromsym/oracle.hpp"
#include "chromsym/sequences.hpp"

#include <map>

namespace chromsym {

Instance Instance::from_multipartite(const Partition& lambda) {
  auto k = chromsym::multipartite(lambda);
  return {std::move(k.graph), std::move(k.poset), lambda};
}

Instance Instance::from_poset(Poset poset) {
  Graph g = incomparability_graph(poset);
  return {std::move(g), std::move(poset), std::nullopt};
}

Instance Instance::from_graph(Graph graph) { return {std::move(graph), std::nullopt, std::nullopt}; }

Poset Instance::order() const { return poset ? *poset : Poset::total_order(graph.size()); }

std::string_view to_string(Route route) noexcept {
  switch (route) {
    case Route::Auto: return "auto";
    case Route::WW: return "ww";
    case Route::Tabloid: return "tabloid";
    case Route::Tail: return "tail";
    case Route::Closed: return "closed";
    case Route::Oracle: return "oracle";
  }
  return "auto";
}

Route parse_route(std::string_view name) {
  for (Route r : {Route::Auto, Route::WW, Route::Tabloid, Route::Tail, Route::Closed, Route::Oracle}) {
    if (to_string(r) == name) return r;
  }
  throw Error(ErrorCode::ParseError, "unknown route '" + std::string(name) + "'");
}

namespace {

// Signed SRH tabloid counts of `shape` grouped by sorted content.
std::map<Partition, int> signed_contents(const Partition& shape) {
  std::map<Partition, int> out;
  for (const auto& t : enumerate_srh_tabloids(shape)) out[sort_to_partition(t.content())] += t.sign();
  return out;
}

template <typename SemiOrdered>
BigInt ww_sum(const Partition& lambda, SemiOrdered&& semi_ordered) {
  BigInt total = 0;
  for (const auto& [type, sign_sum] : signed_contents(lambda)) {
    if (sign_sum != 0) total += sign_sum * semi_ordered(type);
  }
  return total;
}

}  // namespace

BigInt coeff_ww(const Graph& graph, const Partition& lambda) {
  if (lambda.n() != graph.size()) return 0;
  return ww_sum(lambda, [&](const Partition& mu) { return semi_ordered_count(graph, mu); });
}

BigInt coeff_ww(const Instance& instance, const Partition& lambda) {
  if (!instance.multipartite) return coeff_ww(instance.graph, lambda);
  if (lambda.n() != instance.size()) return 0;
  const MultipartiteSpec spec = multipartite(*instance.multipartite).spec;
  return ww_sum(lambda, [&](const Partition& mu) { return semi_ordered_count(spec, mu); });
}

BigInt coeff_tabloids(const Graph& graph, const Poset& order, const Partition& lambda) {
  if (order.size() != graph.size() || !order_compatible(graph, order)) {
    throw Error(ErrorCode::OrderIncompatible, "a non-adjacent pair is incomparable");
  }
  if (lambda.n() != graph.size()) return 0;
  return count_srh_g_tabloids(graph, order, lambda).value();
}

BigInt coeff_tail(const Poset& poset, const Partition& lambda) {
  if (lambda.n() != poset.size()) return 0;
  return count_srh_g_tabloids(incomparability_graph(poset), poset, lambda, TailFilter::NonIncreasing).value();
}

namespace {

Partition twos(int count, int ones = 0) {
  std::vector<int> parts(static_cast<std::size_t>(count), 2);
  parts.insert(parts.end(), static_cast<std::size_t>(ones), 1);
  return Partition(std::move(parts));
}

Partition three_twos(int count) {
  std::vector<int> parts{3};
  parts.insert(parts.end(), static_cast<std::size_t>(count), 2);
  return Partition(std::move(parts));
}

}  // namespace

BigInt coeff_closed_2beta(int beta, int c, int d) {
  if (beta < 1 || c < 0 || d < 0 || 2 * c + d != 2 * beta || c > beta) {
    throw Error(ErrorCode::BadShape, "need beta >= 1 and 2C + D = 2 beta; got beta=" + std::to_string(beta) +
                                         " C=" + std::to_string(c) + " D=" + std::to_string(d));
  }
  return falling_factorial(beta, c) * nsp_chain_union(twos(beta - c));
}

BigInt coeff_closed_32beta(int beta, const Partition& lambda) {
  if (beta < 1 || lambda.n() != 2 * beta + 3) {
    throw Error(ErrorCode::BadShape, lambda.to_string() + " is not a shape for K_(3,2^" + std::to_string(beta) + ")");
  }
  const int threes = lambda.multiplicity(3);
  const int c = lambda.multiplicity(2);
  const int d = lambda.multiplicity(1);
  if (lambda.largest() > 3 || threes > 1) return 0;
  if (threes == 1) return coeff_closed_2beta(beta, c, d);
  if (c == 0) return nsp_chain_union(three_twos(beta));

  // (2^C, 1^D) with C, D >= 1.
  const int free_pairs = beta - c + 1;  // >= 0 since 2C + D = 2 beta + 3 and D >= 1
  const BigInt with_three = beta < c ? BigInt(0) : nsp_chain_union(three_twos(beta - c));
  BigInt inner = free_pairs * with_three - nsp_chain_union(twos(free_pairs)) +
                 (c + 2) * nsp_chain_union(twos(free_pairs, 1));
  return falling_factorial(beta, c - 1) * inner;
}

std::optional<std::pair<ClosedFamily, int>> closed_family(const Partition& lambda) {
  if (lambda.empty()) return std::nullopt;
  const int twos_count = lambda.multiplicity(2);
  if (twos_count == lambda.length()) return std::make_pair(ClosedFamily::TwoPower, twos_count);
  if (lambda.largest() == 3 && lambda.multiplicity(3) == 1 && twos_count == lambda.length() - 1 && twos_count >= 1) {
    return std::make_pair(ClosedFamily::ThreeTwoPower, twos_count);
  }
  return std::nullopt;
}

Route default_route(const Instance& instance) {
  if (instance.multipartite && closed_family(*instance.multipartite)) return Route::Closed;
  if (instance.poset) return Route::Tail;
  return Route::Tabloid;
}

namespace {

BigInt closed_value(const Instance& instance, const Partition& lambda) {
  auto family = instance.multipartite ? closed_family(*instance.multipartite) : std::nullopt;
  if (!family) throw Error(ErrorCode::BadShape, "closed forms cover K_(2^beta) and K_(3,2^beta) only");
  if (lambda.n() != instance.size()) return 0;
  const int beta = family->second;
  if (family->first == ClosedFamily::ThreeTwoPower) return coeff_closed_32beta(beta, lambda);
  if (lambda.largest() > 2) return 0;
  return coeff_closed_2beta(beta, lambda.multiplicity(2), lambda.multiplicity(1));
}

}  // namespace

CoeffReport coefficient(const Instance& instance, const Partition& lambda, Route route) {
  if (route == Route::Auto) route = default_route(instance);
  CoeffReport report{lambda, 0, route, std::nullopt};
  switch (route) {
    case Route::WW:
      report.value = coeff_ww(instance, lambda);
      break;
    case Route::Tabloid: {
      const Poset order = instance.order();
      if (!order_compatible(instance.graph, order)) {
        throw Error(ErrorCode::OrderIncompatible, "a non-adjacent pair is incomparable");
      }
      if (lambda.n() == instance.size()) {
        report.tabloid_counts = count_srh_g_tabloids(instance.graph, order, lambda);
        report.value = report.tabloid_counts->value();
      }
      break;
    }
    case Route::Tail:
      if (!instance.poset) throw Error(ErrorCode::BadShape, "the tail route needs an incomparability graph");
      if (lambda.n() == instance.size()) {
        report.tabloid_counts =
            count_srh_g_tabloids(instance.graph, *instance.poset, lambda, TailFilter::NonIncreasing);
        report.value = report.tabloid_counts->value();
      }
      break;
    case Route::Closed:
      report.value = closed_value(instance, lambda);
      break;
    case Route::Oracle:
      if (lambda.n() == instance.size()) {
        report.value = monomial_to_schur(x_in_monomial(instance.graph)).coeff(lambda);
      }
      break;
    case Route::Auto:
      break;
  }
  return report;
}

SymFunc expand_schur(const Instance& instance, Route route) {
  if (route == Route::Auto) route = default_route(instance);
  if (route == Route::Oracle) return monomial_to_schur(x_in_monomial(instance.graph));
  SymFunc out(Basis::Schur, instance.size());
  for (const auto& lambda : partitions_of(instance.size())) {
    out.set(lambda, coefficient(instance, lambda, route).value);
  }
  return out;
}

ScanResult positivity_scan(const Instance& instance, int cap, Route route) {
  if (instance.size() > cap) {
    throw Error(ErrorCode::CapExceeded,
                "positivity scan on " + std::to_string(instance.size()) + " > " + std::to_string(cap) + " vertices");
  }
  if (route == Route::Auto) route = default_route(instance);
  ScanResult result;
  result.route = route;
  if (route == Route::Oracle) {
    const SymFunc f = expand_schur(instance, Route::Oracle);
    for (const auto& [lambda, c] : f.terms()) {
      if (c < 0) {
        result.all_nonnegative = false;
        result.first_negative = std::make_pair(lambda, c);
        break;
      }
    }
    return result;
  }
  for (const auto& lambda : partitions_of(instance.size())) {
    BigInt c = coefficient(instance, lambda, route).value;
    if (c < 0) {
      result.all_nonnegative = false;
      result.first_negative = std::make_pair(lambda, c);
      break;
    }
  }
  return result;
}

}  // namespace chromsym
