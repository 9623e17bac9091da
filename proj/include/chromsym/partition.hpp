#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iterator>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace chromsym {

/// A weakly decreasing sequence of positive integers. The empty sequence is
/// the unique partition of 0.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// (value^count) built up from runs, e.g. from_runs({{3,1},{2,4}}) = (3,2,2,2,2).
  static Partition from_runs(std::initializer_list<std::pair<int, int>> runs);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int n() const noexcept { return n_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  bool empty() const noexcept { return parts_.empty(); }

  /// 1-indexed part, zero beyond the length.
  int part(int i) const noexcept {
    return (i >= 1 && i <= length()) ? parts_[static_cast<std::size_t>(i - 1)] : 0;
  }
  int largest() const noexcept { return parts_.empty() ? 0 : parts_.front(); }
  int smallest() const noexcept { return parts_.empty() ? 0 : parts_.back(); }

  /// m_i: number of parts equal to `value`.
  int multiplicity(int value) const noexcept;

  /// Distinct part values, largest first, paired with their multiplicities.
  std::vector<std::pair<int, int>> runs() const;

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

/// Orders partitions reverse-lexicographically: (3) before (2,1) before (1,1,1).
struct ReverseLex {
  bool operator()(const Partition& a, const Partition& b) const { return a > b; }
};

/// A sequence of positive integers.
class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<int> parts);
  Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const noexcept { return parts_; }
  int n() const noexcept { return n_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }

  std::string to_string() const;

  friend bool operator==(const Composition&, const Composition&) = default;

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

struct Cell {
  int row = 0;  // 1-indexed, top to bottom
  int col = 0;  // 1-indexed, left to right
  friend bool operator==(const Cell&, const Cell&) = default;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// The cells of a partition's diagram.
class Diagram {
 public:
  explicit Diagram(Partition shape) : shape_(std::move(shape)) {}

  const Partition& shape() const noexcept { return shape_; }
  bool contains(Cell cell) const noexcept {
    return cell.row >= 1 && cell.row <= shape_.length() && cell.col >= 1 &&
           cell.col <= shape_.part(cell.row);
  }
  /// Row-major, top row first.
  std::vector<Cell> cells() const;

 private:
  Partition shape_;
};

/// Lambda(kappa): the parts of a composition sorted into weakly decreasing order.
Partition sort_to_partition(const Composition& kappa);

/// Dominance order: every prefix sum of `lambda` is at least that of `mu`.
/// Throws UnequalWeight when the partitions have different sizes.
bool dominates(const Partition& lambda, const Partition& mu);

/// lambda_1 <= lambda_k + 1. Throws EmptyPartition on the empty partition.
bool is_balanced(const Partition& lambda);

/// Forward iterator over the partitions of n in reverse-lexicographic order,
/// optionally bounded in largest part and length.
class PartitionIterator {
 public:
  using value_type = Partition;
  using difference_type = std::ptrdiff_t;
  using iterator_category = std::forward_iterator_tag;
  using reference = const Partition&;
  using pointer = const Partition*;

  PartitionIterator() = default;  // end sentinel
  PartitionIterator(int n, int max_part, int max_length);

  reference operator*() const { return current_; }
  pointer operator->() const { return &current_; }
  PartitionIterator& operator++();
  PartitionIterator operator++(int) {
    auto copy = *this;
    ++*this;
    return copy;
  }

  friend bool operator==(const PartitionIterator& a, const PartitionIterator& b) {
    return a.done_ == b.done_ && (a.done_ || a.current_ == b.current_);
  }

 private:
  bool advance(std::vector<int>& parts) const;

  Partition current_;
  int max_part_ = 0;
  int max_length_ = 0;
  bool done_ = true;
};

class PartitionRange {
 public:
  PartitionRange(int n, int max_part, int max_length)
      : n_(n), max_part_(max_part), max_length_(max_length) {}
  PartitionIterator begin() const { return {n_, max_part_, max_length_}; }
  PartitionIterator end() const { return {}; }

 private:
  int n_, max_part_, max_length_;
};

PartitionRange partitions_of(int n, std::optional<int> max_part = std::nullopt,
                             std::optional<int> max_length = std::nullopt);

/// Eager form of partitions_of.
std::vector<Partition> all_partitions(int n, std::optional<int> max_part = std::nullopt,
                                      std::optional<int> max_length = std::nullopt);

/// Parses "3,2,2" (whitespace tolerated, empty string = empty partition).
/// Parts are sorted; throws InvalidPartition on non-positive entries.
Partition parse_partition(const std::string& text);

}  // namespace chromsym
