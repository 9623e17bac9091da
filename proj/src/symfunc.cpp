#include "chromsym/symfunc.hpp"

#include "chromsym/error.hpp"

namespace chromsym {

std::string_view to_string(Basis basis) noexcept {
  return basis == Basis::Monomial ? "monomial" : "schur";
}

BigInt SymFunc::coeff(const Partition& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void SymFunc::set(const Partition& lambda, const BigInt& value) {
  if (lambda.n() != degree_) {
    throw Error(ErrorCode::UnequalWeight, lambda.to_string() + " in degree " + std::to_string(degree_));
  }
  if (value == 0) {
    terms_.erase(lambda);
  } else {
    terms_[lambda] = value;
  }
}

void SymFunc::add(const Partition& lambda, const BigInt& value) { set(lambda, coeff(lambda) + value); }

}  // namespace chromsym
