#pragma once

#include "chromsym/bigint.hpp"
#include "chromsym/partition.hpp"
#include "chromsym/schur.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>

namespace chromsym {

enum class Verdict { SchurPositive, NotSchurPositive };

/// Which branch of the classification decided the verdict.
enum class Reason {
  AllPartsLe2,     // every part is 1 or 2
  ThreeTwoPower,   // (3, 2^beta)
  Unbalanced,      // largest part exceeds smallest part + 1
  SquareCase,      // (m^alpha, (m-1)^beta), alpha >= 2, m >= 3
  TailCase,        // (m, (m-1)^beta), beta >= 2, m >= 4
  BipartiteSmall,  // (m, m-1), m >= 4
};

std::string_view to_string(Verdict verdict) noexcept;
std::string_view to_string(Reason reason) noexcept;

enum class VerifyMode { Witness, FullScan };

struct ClassificationReport {
  Partition lambda;
  Verdict verdict = Verdict::SchurPositive;
  Reason reason = Reason::AllPartsLe2;
  /// Dominated type with no stable partition in K_lambda.
  std::optional<Partition> witness;
  /// Explicit negative Schur coefficient, when one was computed.
  std::optional<std::pair<Partition, BigInt>> negative_coefficient;
  bool verified = false;
  std::string detail;
};

/// Decides Schur-positivity of K_lambda. Throws LengthOne when l(lambda) < 2.
ClassificationReport classify(const Partition& lambda, int cap = kDefaultScanCap);

/// A mu dominated by lambda for which K_lambda has no stable partition,
/// following the construction for lambda's case. Throws IsPositive for the
/// positive family, NoWitness for (4,3) (K_(4,3) is nice), LengthOne.
Partition witness_for(const Partition& lambda);

/// Re-checks the verdict: Witness mode checks the certificate, FullScan runs
/// a positivity scan of K_lambda (throws CapExceeded above `cap`).
ClassificationReport verify_classification(const Partition& lambda, VerifyMode mode, int cap = kDefaultScanCap);

}  // namespace chromsym
