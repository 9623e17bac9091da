#pragma once

#include "chromsym/bigint.hpp"
#include "chromsym/partition.hpp"

#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace chromsym {

/// Bitmask over vertices 0..63.
using VertexSet = std::uint64_t;

inline constexpr int kMaxVertices = 64;

inline constexpr VertexSet bit(int v) { return VertexSet{1} << v; }
inline constexpr VertexSet all_vertices(int n) { return n >= 64 ? ~VertexSet{0} : bit(n) - 1; }
inline int popcount(VertexSet s) { return std::popcount(s); }
inline int lowest(VertexSet s) { return std::countr_zero(s); }
std::vector<int> members(VertexSet s);

/// A finite partial order on 0..size-1, stored as up-sets.
class Poset {
 public:
  Poset() = default;

  /// Reflexive-transitive closure of the cover pairs (low, high).
  /// Throws CycleDetected when the closure is not antisymmetric.
  static Poset from_covers(int size, const std::vector<std::pair<int, int>>& covers,
                           std::vector<std::string> labels = {});
  static Poset antichain(int size);
  /// 0 < 1 < ... < size-1.
  static Poset total_order(int size);
  /// Disjoint chains of the given lengths, numbered chain by chain, minimum first.
  static Poset chain_union(const Partition& lengths);

  int size() const noexcept { return size_; }
  bool leq(int a, int b) const noexcept { return (up_[static_cast<std::size_t>(a)] >> b) & 1U; }
  bool less(int a, int b) const noexcept { return a != b && leq(a, b); }
  bool comparable(int a, int b) const noexcept { return leq(a, b) || leq(b, a); }
  /// Elements >= a.
  VertexSet up(int a) const noexcept { return up_[static_cast<std::size_t>(a)]; }
  VertexSet down(int a) const noexcept { return down_[static_cast<std::size_t>(a)]; }

  const std::string& label(int a) const { return labels_[static_cast<std::size_t>(a)]; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  /// Index of a label, or -1.
  int index_of(const std::string& label) const;

  const std::vector<std::pair<int, int>>& covers() const noexcept { return covers_; }

 private:
  int size_ = 0;
  std::vector<VertexSet> up_;
  std::vector<VertexSet> down_;
  std::vector<std::string> labels_;
  std::vector<std::pair<int, int>> covers_;
};

/// Simple undirected graph without loops.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int size);
  static Graph from_edges(int size, const std::vector<std::pair<int, int>>& edges);

  int size() const noexcept { return size_; }
  bool adjacent(int u, int v) const noexcept { return (adj_[static_cast<std::size_t>(u)] >> v) & 1U; }
  VertexSet neighbors(int v) const noexcept { return adj_[static_cast<std::size_t>(v)]; }
  void add_edge(int u, int v);
  /// Edges (u,v) with u < v, sorted.
  std::vector<std::pair<int, int>> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int size_ = 0;
  std::vector<VertexSet> adj_;
};

Graph incomparability_graph(const Poset& poset);

/// Checks that every non-adjacent pair of distinct vertices is comparable.
bool order_compatible(const Graph& graph, const Poset& order);

struct MultipartiteSpec {
  Partition lambda;
  std::vector<int> side_of;
  std::vector<int> rank_in_side;  // 0 is the chain minimum
};

struct Multipartite {
  Graph graph;
  Poset poset;
  MultipartiteSpec spec;
};

/// K_lambda as the incomparability graph of disjoint chains of lengths lambda_i.
/// Side i occupies consecutive vertex numbers. Throws EmptyPartition.
Multipartite multipartite(const Partition& lambda);

bool is_stable(const Graph& graph, VertexSet set);

/// Every stable set of exactly `size` vertices, in increasing bitmask-lexicographic order.
std::vector<VertexSet> stable_sets(const Graph& graph, int size);

struct StablePartition {
  std::vector<VertexSet> blocks;  // largest first
  Partition type;
};

/// Calls `visit` for every unordered stable partition of type mu.
void for_each_stable_partition(const Graph& graph, const Partition& mu,
                               const std::function<void(const StablePartition&)>& visit);

/// Number of unordered stable partitions of type mu (0 when sizes differ).
BigInt stable_partition_count(const Graph& graph, const Partition& mu);
/// Same count for K_lambda, by distributing the parts of mu over the sides.
BigInt stable_partition_count(const MultipartiteSpec& spec, const Partition& mu);

/// Stable partitions with equal-size blocks ordered: count * prod_s m_s(mu)!.
BigInt semi_ordered_count(const Graph& graph, const Partition& mu);
BigInt semi_ordered_count(const MultipartiteSpec& spec, const Partition& mu);

bool has_stable_partition(const Graph& graph, const Partition& mu);
bool has_stable_partition(const MultipartiteSpec& spec, const Partition& mu);

/// The first mu, in reverse-lexicographic order, with present >= mu and no
/// stable partition of type mu. `max_length` restricts the search to short mu.
/// Assumes a stable partition of type `present` exists.
std::optional<Partition> niceness_violation(const Graph& graph, const Partition& present,
                                            std::optional<int> max_length = std::nullopt);
std::optional<Partition> niceness_violation(const MultipartiteSpec& spec, const Partition& present,
                                            std::optional<int> max_length = std::nullopt);

}  // namespace chromsym
