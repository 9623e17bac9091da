#include "chromsym/classifier.hpp"

#include "chromsym/error.hpp"
#include "chromsym/graph.hpp"

#include <algorithm>

namespace chromsym {

std::string_view to_string(Verdict verdict) noexcept {
  return verdict == Verdict::SchurPositive ? "SchurPositive" : "NotSchurPositive";
}

std::string_view to_string(Reason reason) noexcept {
  switch (reason) {
    case Reason::AllPartsLe2: return "AllPartsLe2";
    case Reason::ThreeTwoPower: return "ThreeTwoPower";
    case Reason::Unbalanced: return "Unbalanced";
    case Reason::SquareCase: return "SquareCase";
    case Reason::TailCase: return "TailCase";
    case Reason::BipartiteSmall: return "BipartiteSmall";
  }
  return "Unknown";
}

namespace {

void require_length(const Partition& lambda) {
  if (lambda.length() < 2) {
    throw Error(ErrorCode::LengthOne, "K_" + lambda.to_string() + " has fewer than two sides");
  }
}

Reason reason_for(const Partition& lambda) {
  if (lambda.largest() <= 2) return Reason::AllPartsLe2;
  const int m = lambda.largest();
  const int alpha = lambda.multiplicity(m);
  if (m == 3 && alpha == 1 && lambda.multiplicity(2) == lambda.length() - 1) return Reason::ThreeTwoPower;
  if (!is_balanced(lambda)) return Reason::Unbalanced;
  if (alpha >= 2) return Reason::SquareCase;
  if (lambda.length() >= 3) return Reason::TailCase;
  return Reason::BipartiteSmall;
}

bool positive(Reason reason) { return reason == Reason::AllPartsLe2 || reason == Reason::ThreeTwoPower; }

// Move one cell from the last copy of the largest part to the first copy of the smallest.
Partition unbalanced_witness(const Partition& lambda) {
  std::vector<int> parts = lambda.parts();
  const int k = lambda.length();
  int j = 1;
  while (j + 1 < k && parts[static_cast<std::size_t>(j)] == parts[0]) ++j;
  int i = 2;
  while (parts[static_cast<std::size_t>(i - 1)] != parts.back()) ++i;
  --parts[static_cast<std::size_t>(j - 1)];
  ++parts[static_cast<std::size_t>(i - 1)];
  return Partition(std::move(parts));
}

}  // namespace

Partition witness_for(const Partition& lambda) {
  require_length(lambda);
  const Reason reason = reason_for(lambda);
  const int m = lambda.largest();
  std::vector<int> parts;
  switch (reason) {
    case Reason::AllPartsLe2:
    case Reason::ThreeTwoPower:
      throw Error(ErrorCode::IsPositive, "K_" + lambda.to_string() + " is Schur-positive");
    case Reason::Unbalanced:
      return unbalanced_witness(lambda);
    case Reason::SquareCase: {
      // (m^alpha, (m-1)^beta) >= (m^(alpha-2), (m-1)^(beta+2), 2)
      const int alpha = lambda.multiplicity(m);
      const int beta = lambda.multiplicity(m - 1);
      parts.assign(static_cast<std::size_t>(alpha - 2), m);
      parts.insert(parts.end(), static_cast<std::size_t>(beta + 2), m - 1);
      parts.push_back(2);
      break;
    }
    case Reason::TailCase: {
      // (m, (m-1)^beta) >= (m, (m-1)^(beta-2), (m-2)^2, 2)
      const int beta = lambda.multiplicity(m - 1);
      parts.push_back(m);
      parts.insert(parts.end(), static_cast<std::size_t>(beta - 2), m - 1);
      parts.insert(parts.end(), 2, m - 2);
      parts.push_back(2);
      break;
    }
    case Reason::BipartiteSmall:
      // (m, m-1) >= (m-2, m-2, 3); no sub-multiset of {m-2, m-2, 3} sums to m-1 once m >= 5.
      if (m == 4) {
        throw Error(ErrorCode::NoWitness, "K_(4,3) has a stable partition of every dominated type");
      }
      parts = {m - 2, m - 2, 3};
      break;
  }
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

ClassificationReport classify(const Partition& lambda, int cap) {
  require_length(lambda);
  ClassificationReport report;
  report.lambda = lambda;
  report.reason = reason_for(lambda);
  report.verdict = positive(report.reason) ? Verdict::SchurPositive : Verdict::NotSchurPositive;
  if (report.verdict == Verdict::NotSchurPositive) {
    try {
      report.witness = witness_for(lambda);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NoWitness) throw;
      if (lambda.n() <= cap) {
        auto scan = positivity_scan(Instance::from_multipartite(lambda), cap);
        report.negative_coefficient = scan.first_negative;
      }
    }
  }
  return report;
}

namespace {

bool closed_table_nonnegative(const Partition& lambda, std::string& detail) {
  auto family = closed_family(lambda);
  if (!family) return false;
  const int beta = family->second;
  for (const auto& mu : partitions_of(lambda.n())) {
    BigInt c = family->first == ClosedFamily::ThreeTwoPower
                   ? coeff_closed_32beta(beta, mu)
                   : (mu.largest() > 2 ? BigInt(0) : coeff_closed_2beta(beta, mu.multiplicity(2), mu.multiplicity(1)));
    if (c < 0) {
      detail = "closed form gives " + to_decimal(c) + " at " + mu.to_string();
      return false;
    }
  }
  detail = "closed-form coefficient table is non-negative";
  return true;
}

}  // namespace

ClassificationReport verify_classification(const Partition& lambda, VerifyMode mode, int cap) {
  ClassificationReport report = classify(lambda, cap);
  const Instance instance = Instance::from_multipartite(lambda);

  if (mode == VerifyMode::FullScan) {
    auto scan = positivity_scan(instance, cap);
    if (scan.first_negative) report.negative_coefficient = scan.first_negative;
    const bool scan_positive = scan.all_nonnegative;
    report.verified = scan_positive == (report.verdict == Verdict::SchurPositive);
    report.detail = scan_positive ? "all Schur coefficients are non-negative"
                                  : "negative coefficient " + to_decimal(scan.first_negative->second) + " at " +
                                        scan.first_negative->first.to_string();
    return report;
  }

  if (report.verdict == Verdict::NotSchurPositive) {
    if (report.witness) {
      const MultipartiteSpec spec = multipartite(lambda).spec;
      const bool dominated = dominates(lambda, *report.witness);
      const bool missing = !has_stable_partition(spec, *report.witness);
      report.verified = dominated && missing;
      report.detail = "witness " + report.witness->to_string() + (dominated ? " is" : " is not") + " dominated and " +
                      (missing ? "has no" : "has a") + " stable partition";
    } else if (report.negative_coefficient) {
      report.verified = report.negative_coefficient->second < 0;
      report.detail = "negative coefficient " + to_decimal(report.negative_coefficient->second) + " at " +
                      report.negative_coefficient->first.to_string();
    } else {
      report.detail = "no certificate within the vertex cap";
    }
    return report;
  }

  if (closed_family(lambda)) {
    report.verified = closed_table_nonnegative(lambda, report.detail);
  } else if (report.reason == Reason::AllPartsLe2) {
    // A claw needs three pairwise non-adjacent vertices, i.e. a side of size 3.
    report.verified = lambda.largest() <= 2;
    report.detail = "claw-free incomparability graph";
  } else if (lambda.n() <= cap) {
    auto scan = positivity_scan(instance, cap);
    report.verified = scan.all_nonnegative;
    report.detail = scan.all_nonnegative ? "all Schur coefficients are non-negative" : "negative coefficient found";
  } else {
    report.detail = "no certificate within the vertex cap";
  }
  return report;
}

}  // namespace chromsym
