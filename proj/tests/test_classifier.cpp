#include "chromsym/classifier.hpp"
#include "chromsym/error.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace chromsym;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::ParseError;
}

// Test-side stable partition existence for K_lambda: place blocks of mu,
// largest first, into sides with enough room.
bool fits(std::vector<int> room, const std::vector<int>& blocks, std::size_t i = 0) {
  if (i == blocks.size()) return true;
  for (std::size_t s = 0; s < room.size(); ++s) {
    if (room[s] < blocks[i]) continue;
    if (s > 0 && room[s] == room[s - 1]) continue;  // symmetric to an earlier side
    room[s] -= blocks[i];
    if (fits(room, blocks, i + 1)) return true;
    room[s] += blocks[i];
  }
  return false;
}

}  // namespace

TEST_CASE("verdicts and reasons") {
  CHECK(classify(Partition{3, 2, 2, 2}).verdict == Verdict::SchurPositive);
  CHECK(classify(Partition{3, 2, 2, 2}).reason == Reason::ThreeTwoPower);
  CHECK(classify(Partition{2, 2, 1}).reason == Reason::AllPartsLe2);
  const auto r33 = classify(Partition{3, 3});
  CHECK(r33.verdict == Verdict::NotSchurPositive);
  CHECK(r33.reason == Reason::SquareCase);
  CHECK(r33.witness == Partition{2, 2, 2});
  CHECK(code_of([] { classify(Partition{4}); }) == ErrorCode::LengthOne);
}

TEST_CASE("witness constructions") {
  CHECK(witness_for(Partition{6, 6, 5, 5, 5}) == Partition{5, 5, 5, 5, 5, 2});
  CHECK(witness_for(Partition{5, 4, 4, 4}) == Partition{5, 4, 3, 3, 2});
  CHECK(witness_for(Partition{5, 5, 5, 4, 3, 3}) == Partition{5, 5, 4, 4, 4, 3});
  CHECK(witness_for(Partition{7, 7, 7, 6, 6}) == Partition{7, 6, 6, 6, 6, 2});
  CHECK(witness_for(Partition{3, 1}) == Partition{2, 2});
  CHECK(witness_for(Partition{5, 4}) == Partition{3, 3, 3});
  CHECK(code_of([] { witness_for(Partition{3, 2, 2}); }) == ErrorCode::IsPositive);
  CHECK(code_of([] { witness_for(Partition{4, 3}); }) == ErrorCode::NoWitness);
}

TEST_CASE("bipartite and tripartite lists") {
  for (int a = 1; a <= 6; ++a) {
    for (int b = 1; b <= a; ++b) {
      const Partition lambda{a, b};
      const bool listed = lambda == Partition{1, 1} || lambda == Partition{2, 1} || lambda == Partition{2, 2} ||
                          lambda == Partition{3, 2};
      CHECK((classify(lambda).verdict == Verdict::SchurPositive) == listed);
    }
  }
  const std::vector<Partition> tripartite{{1, 1, 1}, {2, 1, 1}, {2, 2, 1}, {2, 2, 2}, {3, 2, 2}};
  for (int a = 1; a <= 5; ++a) {
    for (int b = 1; b <= a; ++b) {
      for (int c = 1; c <= b; ++c) {
        const Partition lambda{a, b, c};
        const bool listed = std::find(tripartite.begin(), tripartite.end(), lambda) != tripartite.end();
        CHECK((classify(lambda).verdict == Verdict::SchurPositive) == listed);
      }
    }
  }
}

TEST_CASE("witnesses are dominated types without stable partitions") {
  for (int n = 2; n <= 16; ++n) {
    for (const auto& lambda : partitions_of(n)) {
      if (lambda.length() < 2 || classify(lambda, 0).verdict == Verdict::SchurPositive) continue;
      if (lambda == Partition{4, 3}) continue;  // nice: every dominated type fits
      const Partition mu = witness_for(lambda);
      CHECK(dominates(lambda, mu));
      CHECK_FALSE(fits(lambda.parts(), mu.parts()));
    }
  }
}

TEST_CASE("K_(4,3) is nice but not Schur-positive") {
  for (const auto& mu : partitions_of(7)) {
    if (dominates(Partition{4, 3}, mu)) CHECK(fits({4, 3}, mu.parts()));
  }
  const auto report = classify(Partition{4, 3});
  CHECK_FALSE(report.witness.has_value());
  REQUIRE(report.negative_coefficient.has_value());
  CHECK(report.negative_coefficient->second < 0);
  CHECK(verify_classification(Partition{4, 3}, VerifyMode::Witness).verified);
}

TEST_CASE("full scans agree with the classification") {
  for (int n = 2; n <= 7; ++n) {
    for (const auto& lambda : partitions_of(n)) {
      if (lambda.length() < 2) continue;
      const auto report = verify_classification(lambda, VerifyMode::FullScan);
      CHECK_MESSAGE(report.verified, lambda.to_string());
    }
  }
}

TEST_CASE("witness-mode verification") {
  CHECK(verify_classification(Partition{7, 7, 7, 6, 6}, VerifyMode::Witness).verified);
  CHECK(verify_classification(Partition{3, 2, 2, 2, 2, 2, 2}, VerifyMode::Witness).verified);
  CHECK(verify_classification(Partition{2, 2, 2, 2, 2, 2, 2, 1}, VerifyMode::Witness).verified);
  CHECK(verify_classification(Partition{2, 2, 1}, VerifyMode::Witness).verified);
  CHECK(code_of([] { verify_classification(Partition{7, 7}, VerifyMode::FullScan); }) == ErrorCode::CapExceeded);
}
