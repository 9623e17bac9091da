#include "chromsym/error.hpp"
#include "chromsym/sequences.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace chromsym;

namespace {

Poset hasse_example() {
  enum { a, b, c, d, e, f };
  return Poset::from_covers(6, {{a, b}, {b, f}, {a, c}, {c, e}, {d, c}, {b, e}}, {"a", "b", "c", "d", "e", "f"});
}

Partition twos(int count, int ones = 0) {
  std::vector<int> parts(static_cast<std::size_t>(count), 2);
  parts.insert(parts.end(), static_cast<std::size_t>(ones), 1);
  return Partition(std::move(parts));
}

}  // namespace

TEST_CASE("non-increasing sequences in the example poset") {
  enum { a, b, c, d, e, f };
  const Poset p = hasse_example();
  CHECK(is_nonincreasing({{c, f, d, a}}, p));
  CHECK(is_nonincreasing({{f, e, b, c, a, d}}, p));
  CHECK_FALSE(is_nonincreasing({{e, b, f, d}}, p));
  CHECK_FALSE(is_nonincreasing({{e, a, c, d}}, p));
  CHECK_FALSE(is_nonincreasing({{d, e, b, f}}, p));
  CHECK(is_nonincreasing({{}}, p));
  CHECK(nsp_bruteforce(p) == testing::permutations_without_ascent(p));
}

TEST_CASE("anchor values") {
  CHECK(nsp_chain_union(Partition{}) == 1);
  CHECK(nsp_bruteforce(Poset::antichain(0)) == 1);
  CHECK(nsp_chain_union(Partition{2, 2}) == testing::permutations_without_ascent(Poset::chain_union(Partition{2, 2})));
  CHECK(nsp_chain_union(Partition{2, 2}) == 14);
  CHECK(nsp_chain_union(Partition{3, 2}) == 46);
  CHECK(nsp_chain_union(Partition{2, 1}) == 4);
  CHECK(nsp_chain_union(Partition{1, 1, 1}) == 6);
  CHECK(nsp_chain_union(Partition{3}) == 1);  // only the decreasing order
}

TEST_CASE("chain-union formula matches brute force") {
  for (int n = 0; n <= 9; ++n) {
    for (const auto& lambda : partitions_of(n)) {
      const Poset p = Poset::chain_union(lambda);
      const BigInt brute = nsp_bruteforce(p);
      CHECK(nsp_chain_union(lambda) == brute);
      if (n <= 7) CHECK(brute == testing::permutations_without_ascent(p));
    }
  }
}

TEST_CASE("adding an isolated chain element never lowers N_sp") {
  for (int m = 0; m <= 4; ++m) CHECK(nsp_chain_union(twos(m, 1)) >= nsp_chain_union(twos(m)));
  CHECK(nsp_chain_union(twos(20)) > 0);  // large inputs stay exact
}

TEST_CASE("brute force respects its cap") {
  try {
    nsp_bruteforce(Poset::antichain(10));
    FAIL("expected CapExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::CapExceeded);
  }
  CHECK(nsp_bruteforce(Poset::antichain(10), 10) == factorial(10));
}
