#pragma once

#include "chromsym/bigint.hpp"
#include "chromsym/partition.hpp"

#include <map>
#include <string_view>

namespace chromsym {

enum class Basis { Monomial, Schur };

std::string_view to_string(Basis basis) noexcept;

/// Homogeneous symmetric function with exact integer coefficients in one
/// basis. Keys are kept in reverse-lexicographic order; zeros are never stored.
class SymFunc {
 public:
  using Terms = std::map<Partition, BigInt, ReverseLex>;

  SymFunc(Basis basis, int degree) : basis_(basis), degree_(degree) {}

  Basis basis() const noexcept { return basis_; }
  int degree() const noexcept { return degree_; }
  const Terms& terms() const noexcept { return terms_; }

  /// Zero for absent keys.
  BigInt coeff(const Partition& lambda) const;
  /// Throws UnequalWeight when |lambda| differs from the degree.
  void set(const Partition& lambda, const BigInt& value);
  void add(const Partition& lambda, const BigInt& value);

  friend bool operator==(const SymFunc&, const SymFunc&) = default;

 private:
  Basis basis_;
  int degree_;
  Terms terms_;
};

}  // namespace chromsym
