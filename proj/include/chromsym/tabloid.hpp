#pragma once

#include "chromsym/bigint.hpp"
#include "chromsym/graph.hpp"
#include "chromsym/partition.hpp"

#include <functional>
#include <string>
#include <vector>

namespace chromsym {

/// Connected strip of boundary cells, listed from its southwest end to its
/// northeast end. Consecutive cells differ by a north step (row - 1) or an
/// east step (column + 1).
struct RimHook {
  std::vector<Cell> cells;

  int length() const noexcept { return static_cast<int>(cells.size()); }
  int north_steps() const noexcept;
  /// "NEE"-style step word, read southwest to northeast.
  std::string steps() const;

  friend bool operator==(const RimHook&, const RimHook&) = default;
};

/// A tiling of a diagram by special rim hooks. `hooks` are in removal order,
/// bottom hook first, so `content` reads hook lengths bottom to top.
struct SRHTabloid {
  Partition shape;
  std::vector<RimHook> hooks;

  int sign() const noexcept;
  Composition content() const;
  int north_steps() const noexcept;

  friend bool operator==(const SRHTabloid&, const SRHTabloid&) = default;
};

/// Every special rim hook tabloid of the shape, each exactly once. Built by
/// repeatedly peeling the hook through the bottom-left cell.
std::vector<SRHTabloid> enumerate_srh_tabloids(const Partition& shape);

/// Sum of sgn(T) over tabloids of `shape` whose sorted content is `content_type`.
/// These are the inverse Kostka numbers.
BigInt signed_tabloid_count(const Partition& shape, const Partition& content_type);

/// An SRH tabloid whose cells are filled with the vertices of a graph.
struct SRHGTabloid {
  SRHTabloid tabloid;
  /// grid[r-1][c-1] is the vertex in cell (r, c).
  std::vector<std::vector<int>> grid;

  int vertex_at(Cell cell) const {
    return grid[static_cast<std::size_t>(cell.row - 1)][static_cast<std::size_t>(cell.col - 1)];
  }
  int sign() const noexcept { return tabloid.sign(); }

  friend bool operator==(const SRHGTabloid&, const SRHGTabloid&) = default;
};

/// Tail sequence: vertices of the length-1 rows, bottom row first.
struct TailSequence {
  std::vector<int> vertices;
  friend bool operator==(const TailSequence&, const TailSequence&) = default;
  friend auto operator<=>(const TailSequence&, const TailSequence&) = default;
};

struct HeadTail {
  std::vector<Cell> head;  // row-major cells of rows longer than 1
  TailSequence tail;
};

HeadTail tail_head_split(const SRHGTabloid& tabloid);

struct SignedCount {
  BigInt positive = 0;
  BigInt negative = 0;
  BigInt value() const { return positive - negative; }
};

enum class TailFilter { All, NonIncreasing };

/// Visits every SRH G-tabloid of `shape` under `order`. With
/// TailFilter::NonIncreasing only tabloids whose tail sequence is
/// non-increasing in `order` are produced. Throws OrderIncompatible if some
/// non-adjacent pair is incomparable, SizeMismatch if |shape| != |V(G)|.
void for_each_srh_g_tabloid(const Graph& graph, const Poset& order, const Partition& shape,
                            const std::function<void(const SRHGTabloid&)>& visit,
                            TailFilter filter = TailFilter::All);

std::vector<SRHGTabloid> enumerate_srh_g_tabloids(const Graph& graph, const Poset& order,
                                                  const Partition& shape,
                                                  TailFilter filter = TailFilter::All);

/// Positive and negative G-tabloid counts without materializing fillings.
SignedCount count_srh_g_tabloids(const Graph& graph, const Poset& order, const Partition& shape,
                                 TailFilter filter = TailFilter::All);

/// Independent re-check of every G-tabloid condition: exact tiling, each hook
/// a special rim hook removable in order, bijective filling, stable and
/// strictly increasing hooks.
bool is_valid_srh_g_tabloid(const SRHGTabloid& tabloid, const Graph& graph, const Poset& order);

/// Toggles the north step between the first ascent v_j <= v_{j+1} of the tail
/// sequence. Throws NoAscent when the tail sequence is non-increasing.
SRHGTabloid psi_involution(const SRHGTabloid& tabloid, const Poset& order);

std::string render_ascii(const SRHTabloid& tabloid);
std::string render_ascii(const SRHGTabloid& tabloid, const std::vector<std::string>& labels);

}  // namespace chromsym
