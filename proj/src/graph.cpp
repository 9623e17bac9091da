#include "chromsym/graph.hpp"

#include "chromsym/error.hpp"

#include <algorithm>
#include <map>

namespace chromsym {

std::vector<int> members(VertexSet s) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(popcount(s)));
  while (s) {
    out.push_back(lowest(s));
    s &= s - 1;
  }
  return out;
}

namespace {

void check_size(int size) {
  if (size < 0) throw Error(ErrorCode::InvalidGraph, "negative size");
  if (size > kMaxVertices) {
    throw Error(ErrorCode::TooManyVertices, std::to_string(size) + " > " + std::to_string(kMaxVertices));
  }
}

std::vector<std::string> default_labels(int size) {
  std::vector<std::string> labels;
  for (int i = 0; i < size; ++i) labels.push_back(std::to_string(i));
  return labels;
}

}  // namespace

Poset Poset::from_covers(int size, const std::vector<std::pair<int, int>>& covers,
                         std::vector<std::string> labels) {
  check_size(size);
  Poset p;
  p.size_ = size;
  p.up_.assign(static_cast<std::size_t>(size), 0);
  for (int i = 0; i < size; ++i) p.up_[static_cast<std::size_t>(i)] = bit(i);
  for (auto [low, high] : covers) {
    if (low < 0 || low >= size || high < 0 || high >= size) {
      throw Error(ErrorCode::InvalidGraph, "cover (" + std::to_string(low) + "," + std::to_string(high) +
                                               ") out of range");
    }
    if (low == high) throw Error(ErrorCode::CycleDetected, "self cover on " + std::to_string(low));
    p.up_[static_cast<std::size_t>(low)] |= bit(high);
  }
  // Warshall closure on bitsets.
  for (int k = 0; k < size; ++k) {
    for (int i = 0; i < size; ++i) {
      if (p.leq(i, k)) p.up_[static_cast<std::size_t>(i)] |= p.up_[static_cast<std::size_t>(k)];
    }
  }
  p.down_.assign(static_cast<std::size_t>(size), 0);
  for (int i = 0; i < size; ++i) {
    for (int j = 0; j < size; ++j) {
      if (p.leq(j, i)) p.down_[static_cast<std::size_t>(i)] |= bit(j);
      if (i != j && p.leq(i, j) && p.leq(j, i)) {
        throw Error(ErrorCode::CycleDetected,
                    "elements " + std::to_string(i) + " and " + std::to_string(j) + " lie on a cycle");
      }
    }
  }
  if (labels.empty()) labels = default_labels(size);
  if (static_cast<int>(labels.size()) != size) {
    throw Error(ErrorCode::InvalidGraph, "label count does not match size");
  }
  p.labels_ = std::move(labels);
  p.covers_ = covers;
  return p;
}

Poset Poset::antichain(int size) { return from_covers(size, {}); }

Poset Poset::total_order(int size) {
  std::vector<std::pair<int, int>> covers;
  for (int i = 0; i + 1 < size; ++i) covers.emplace_back(i, i + 1);
  return from_covers(size, covers);
}

Poset Poset::chain_union(const Partition& lengths) {
  std::vector<std::pair<int, int>> covers;
  int base = 0;
  for (int len : lengths.parts()) {
    for (int r = 0; r + 1 < len; ++r) covers.emplace_back(base + r, base + r + 1);
    base += len;
  }
  return from_covers(lengths.n(), covers);
}

int Poset::index_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  return it == labels_.end() ? -1 : static_cast<int>(it - labels_.begin());
}

Graph::Graph(int size) : size_(size) {
  check_size(size);
  adj_.assign(static_cast<std::size_t>(size), 0);
}

Graph Graph::from_edges(int size, const std::vector<std::pair<int, int>>& edges) {
  Graph g(size);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= size_ || v >= size_) {
    throw Error(ErrorCode::InvalidGraph,
                "edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
  }
  if (u == v) throw Error(ErrorCode::InvalidGraph, "self-loop on " + std::to_string(u));
  adj_[static_cast<std::size_t>(u)] |= bit(v);
  adj_[static_cast<std::size_t>(v)] |= bit(u);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < size_; ++u) {
    for (int v : members(adj_[static_cast<std::size_t>(u)] & ~all_vertices(u + 1))) out.emplace_back(u, v);
  }
  return out;
}

Graph incomparability_graph(const Poset& poset) {
  Graph g(poset.size());
  for (int u = 0; u < poset.size(); ++u) {
    for (int v = u + 1; v < poset.size(); ++v) {
      if (!poset.comparable(u, v)) g.add_edge(u, v);
    }
  }
  return g;
}

bool order_compatible(const Graph& graph, const Poset& order) {
  if (graph.size() != order.size()) return false;
  for (int u = 0; u < graph.size(); ++u) {
    for (int v = u + 1; v < graph.size(); ++v) {
      if (!graph.adjacent(u, v) && !order.comparable(u, v)) return false;
    }
  }
  return true;
}

Multipartite multipartite(const Partition& lambda) {
  if (lambda.empty()) throw Error(ErrorCode::EmptyPartition, "K_lambda needs at least one side");
  check_size(lambda.n());
  MultipartiteSpec spec{lambda, {}, {}};
  for (int side = 0; side < lambda.length(); ++side) {
    for (int r = 0; r < lambda.part(side + 1); ++r) {
      spec.side_of.push_back(side);
      spec.rank_in_side.push_back(r);
    }
  }
  Poset poset = Poset::chain_union(lambda);
  Graph graph = incomparability_graph(poset);
  return {std::move(graph), std::move(poset), std::move(spec)};
}

bool is_stable(const Graph& graph, VertexSet set) {
  for (VertexSet rest = set; rest; rest &= rest - 1) {
    if (graph.neighbors(lowest(rest)) & set) return false;
  }
  return true;
}

namespace {

template <typename Visit>
bool grow_stable(const Graph& graph, VertexSet chosen, VertexSet allowed, int need, Visit& visit) {
  if (need == 0) return visit(chosen);
  if (popcount(allowed) < need) return true;
  for (VertexSet rest = allowed; rest; rest &= rest - 1) {
    const int v = lowest(rest);
    const VertexSet above = rest & ~bit(v);
    if (!grow_stable(graph, chosen | bit(v), above & ~graph.neighbors(v), need - 1, visit)) return false;
  }
  return true;
}

// Backtracking over unordered stable partitions. The block holding the lowest
// unassigned vertex is chosen next, which fixes one canonical order per partition.
class StablePartitionSearch {
 public:
  StablePartitionSearch(const Graph& graph, const Partition& mu) : graph_(graph) {
    for (auto [value, count] : mu.runs()) {
      sizes_.push_back(value);
      remaining_.push_back(count);
    }
  }

  template <typename OnComplete>
  bool run(OnComplete& on_complete) {
    return step(all_vertices(graph_.size()), on_complete);
  }

  const std::vector<VertexSet>& blocks() const { return blocks_; }

 private:
  template <typename OnComplete>
  bool step(VertexSet unassigned, OnComplete& on_complete) {
    if (!unassigned) return on_complete();
    const int v = lowest(unassigned);
    const VertexSet candidates = unassigned & ~bit(v) & ~graph_.neighbors(v);
    for (std::size_t k = 0; k < sizes_.size(); ++k) {
      if (remaining_[k] == 0) continue;
      --remaining_[k];
      auto place = [&](VertexSet block) {
        blocks_.push_back(block);
        const bool go_on = step(unassigned & ~block, on_complete);
        blocks_.pop_back();
        return go_on;
      };
      const bool go_on = grow_stable(graph_, bit(v), candidates, sizes_[k] - 1, place);
      ++remaining_[k];
      if (!go_on) return false;
    }
    return true;
  }

  const Graph& graph_;
  std::vector<int> sizes_;
  std::vector<int> remaining_;
  std::vector<VertexSet> blocks_;
};

BigInt multiplicity_factorials(const Partition& mu) {
  BigInt out = 1;
  for (auto [value, count] : mu.runs()) out *= factorial(count);
  return out;
}

}  // namespace

std::vector<VertexSet> stable_sets(const Graph& graph, int size) {
  std::vector<VertexSet> out;
  if (size < 0) return out;
  auto collect = [&](VertexSet s) {
    out.push_back(s);
    return true;
  };
  grow_stable(graph, 0, all_vertices(graph.size()), size, collect);
  return out;
}

void for_each_stable_partition(const Graph& graph, const Partition& mu,
                               const std::function<void(const StablePartition&)>& visit) {
  if (mu.n() != graph.size()) return;
  StablePartitionSearch search(graph, mu);
  auto done = [&]() {
    StablePartition sp{search.blocks(), mu};
    std::stable_sort(sp.blocks.begin(), sp.blocks.end(),
                     [](VertexSet a, VertexSet b) { return popcount(a) > popcount(b); });
    visit(sp);
    return true;
  };
  search.run(done);
}

BigInt stable_partition_count(const Graph& graph, const Partition& mu) {
  if (mu.n() != graph.size()) return 0;
  BigInt count = 0;
  StablePartitionSearch search(graph, mu);
  auto done = [&]() {
    ++count;
    return true;
  };
  search.run(done);
  return count;
}

bool has_stable_partition(const Graph& graph, const Partition& mu) {
  if (mu.n() != graph.size()) return false;
  bool found = false;
  StablePartitionSearch search(graph, mu);
  auto done = [&]() {
    found = true;
    return false;
  };
  search.run(done);
  return found;
}

namespace {

// Distributes the parts of mu over the sides of K_lambda. A side of size L
// receiving k_j blocks of size v_j splits in L! / (prod (v_j!)^k_j k_j!) ways.
class MultipartiteCounter {
 public:
  MultipartiteCounter(const Partition& lambda, const Partition& mu) : sides_(lambda.parts()) {
    for (auto [value, count] : mu.runs()) {
      values_.push_back(value);
      start_.push_back(count);
    }
  }

  BigInt count() { return solve(0, start_); }

 private:
  BigInt solve(std::size_t side, const std::vector<int>& remaining) {
    if (side == sides_.size()) {
      return std::all_of(remaining.begin(), remaining.end(), [](int r) { return r == 0; }) ? 1 : 0;
    }
    auto key = std::make_pair(side, remaining);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    BigInt total = 0;
    std::vector<int> take(values_.size(), 0);
    distribute(side, remaining, take, 0, sides_[side], total);
    memo_.emplace(std::move(key), total);
    return total;
  }

  void distribute(std::size_t side, const std::vector<int>& remaining, std::vector<int>& take,
                  std::size_t j, int left, BigInt& total) {
    if (left == 0) {
      const int size = sides_[side];
      BigInt denom = 1;
      std::vector<int> next = remaining;
      for (std::size_t t = 0; t < values_.size(); ++t) {
        if (!take[t]) continue;
        BigInt block = factorial(values_[t]);
        for (int c = 0; c < take[t]; ++c) denom *= block;
        denom *= factorial(take[t]);
        next[t] -= take[t];
      }
      BigInt rest = solve(side + 1, next);
      if (rest != 0) total += factorial(size) / denom * rest;
      return;
    }
    if (j == values_.size()) return;
    const int max_take = std::min(remaining[j], left / values_[j]);
    for (int k = max_take; k >= 0; --k) {
      take[j] = k;
      distribute(side, remaining, take, j + 1, left - k * values_[j], total);
    }
    take[j] = 0;
  }

  std::vector<int> sides_;
  std::vector<int> values_;
  std::vector<int> start_;
  std::map<std::pair<std::size_t, std::vector<int>>, BigInt> memo_;
};

}  // namespace

BigInt stable_partition_count(const MultipartiteSpec& spec, const Partition& mu) {
  if (mu.n() != spec.lambda.n()) return 0;
  return MultipartiteCounter(spec.lambda, mu).count();
}

BigInt semi_ordered_count(const Graph& graph, const Partition& mu) {
  return stable_partition_count(graph, mu) * multiplicity_factorials(mu);
}

BigInt semi_ordered_count(const MultipartiteSpec& spec, const Partition& mu) {
  return stable_partition_count(spec, mu) * multiplicity_factorials(mu);
}

bool has_stable_partition(const MultipartiteSpec& spec, const Partition& mu) {
  return stable_partition_count(spec, mu) != 0;
}

namespace {

template <typename HasPartition>
std::optional<Partition> first_violation(const Partition& present, std::optional<int> max_length,
                                         HasPartition&& has) {
  for (const auto& mu : partitions_of(present.n(), std::nullopt, max_length)) {
    if (!dominates(present, mu)) continue;
    if (!has(mu)) return mu;
  }
  return std::nullopt;
}

}  // namespace

std::optional<Partition> niceness_violation(const Graph& graph, const Partition& present,
                                            std::optional<int> max_length) {
  return first_violation(present, max_length, [&](const Partition& mu) { return has_stable_partition(graph, mu); });
}

std::optional<Partition> niceness_violation(const MultipartiteSpec& spec, const Partition& present,
                                            std::optional<int> max_length) {
  return first_violation(present, max_length, [&](const Partition& mu) { return has_stable_partition(spec, mu); });
}

}  // namespace chromsym
