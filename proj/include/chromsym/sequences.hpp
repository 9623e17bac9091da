#pragma once

#include "chromsym/bigint.hpp"
#include "chromsym/graph.hpp"
#include "chromsym/partition.hpp"

#include <vector>

namespace chromsym {

/// Ordered sequence of distinct poset elements.
struct VertexSequence {
  std::vector<int> vertices;
};

/// No consecutive pair satisfies v_i <= v_{i+1}.
bool is_nonincreasing(const VertexSequence& seq, const Poset& poset);

inline constexpr int kDefaultBruteforceCap = 9;

/// Spanning non-increasing sequences by exhaustive extension of valid
/// prefixes. The empty poset has exactly one. Throws CapExceeded above `cap`.
BigInt nsp_bruteforce(const Poset& poset, int cap = kDefaultBruteforceCap);

/// Spanning non-increasing sequences of the incomparability graph of disjoint
/// chains with the given lengths.
BigInt nsp_chain_union(const Partition& lengths);

}  // namespace chromsym
