#include "chromsym/sequences.hpp"

#include "chromsym/error.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace chromsym {

bool is_nonincreasing(const VertexSequence& seq, const Poset& poset) {
  const auto& v = seq.vertices;
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    if (poset.leq(v[i], v[i + 1])) return false;
  }
  return true;
}

namespace {

std::uint64_t extend(const Poset& poset, int last, VertexSet unused) {
  if (!unused) return 1;
  std::uint64_t total = 0;
  for (VertexSet rest = unused; rest; rest &= rest - 1) {
    const int v = lowest(rest);
    if (last >= 0 && poset.leq(last, v)) continue;
    total += extend(poset, v, unused & ~bit(v));
  }
  return total;
}

// Words with counts[i] copies of letter i and no two equal letters adjacent.
// Letters with equal remaining counts are interchangeable, so the state is the
// sorted multiset of counts plus the remaining count of the last letter used.
class SeparatedWords {
 public:
  BigInt count(std::vector<int> counts) {
    std::sort(counts.begin(), counts.end(), std::greater<>());
    return solve(counts, -1);
  }

 private:
  BigInt solve(const std::vector<int>& counts, int last) {
    if (counts.empty()) return 1;
    auto key = std::make_pair(counts, last);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    BigInt total = 0;
    for (std::size_t i = 0; i < counts.size();) {
      const int value = counts[i];
      std::size_t j = i;
      while (j < counts.size() && counts[j] == value) ++j;
      int choices = static_cast<int>(j - i) - (value == last ? 1 : 0);
      if (choices > 0) {
        std::vector<int> next = counts;
        next[j - 1] = value - 1;  // stays sorted: the last copy of `value` drops by one
        int next_last = value - 1;
        if (next_last == 0) {
          next.pop_back();
          next_last = -1;
        }
        total += choices * solve(next, next_last);
      }
      i = j;
    }
    memo_.emplace(std::move(key), total);
    return total;
  }

  std::map<std::pair<std::vector<int>, int>, BigInt> memo_;
};

// Ordered splits of a c-element chain into k labelled non-empty blocks: k! S(c,k).
BigInt surjections(int c, int k) {
  std::vector<std::vector<BigInt>> stirling(static_cast<std::size_t>(c + 1),
                                            std::vector<BigInt>(static_cast<std::size_t>(k + 1), 0));
  stirling[0][0] = 1;
  for (int i = 1; i <= c; ++i) {
    for (int j = 1; j <= std::min(i, k); ++j) {
      stirling[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          j * stirling[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)] +
          stirling[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
    }
  }
  return factorial(k) * stirling[static_cast<std::size_t>(c)][static_cast<std::size_t>(k)];
}

}  // namespace

BigInt nsp_bruteforce(const Poset& poset, int cap) {
  if (poset.size() > cap) {
    throw Error(ErrorCode::CapExceeded,
                "brute-force N_sp on " + std::to_string(poset.size()) + " > " + std::to_string(cap) + " elements");
  }
  return extend(poset, -1, all_vertices(poset.size()));
}

// A spanning sequence splits each chain into maximal runs of consecutive
// slots. Within a run the chain elements must descend, so a chain of size c
// cut into runs b_1..b_k contributes c!/(b_1!...b_k!) fillings; summing over
// the run sizes gives k! S(c,k). Runs of different chains interleave as words
// with no two runs of the same chain adjacent.
BigInt nsp_chain_union(const Partition& lengths) {
  if (lengths.empty()) return 1;
  const auto& parts = lengths.parts();
  std::vector<std::vector<BigInt>> weight(parts.size());
  for (std::size_t i = 0; i < parts.size(); ++i) {
    weight[i].push_back(0);
    for (int k = 1; k <= parts[i]; ++k) weight[i].push_back(surjections(parts[i], k));
  }
  SeparatedWords words;
  BigInt total = 0;
  std::vector<int> runs(parts.size(), 1);
  while (true) {
    BigInt term = words.count(runs);
    if (term != 0) {
      for (std::size_t i = 0; i < parts.size(); ++i) term *= weight[i][static_cast<std::size_t>(runs[i])];
      total += term;
    }
    std::size_t i = 0;
    while (i < parts.size() && runs[i] == parts[i]) runs[i++] = 1;
    if (i == parts.size()) break;
    ++runs[i];
  }
  return total;
}

}  // namespace chromsym
