#include "chromsym/bigint.hpp"

#include "chromsym/error.hpp"

#include <cctype>

namespace chromsym {

BigInt factorial(int n) {
  BigInt result = 1;
  for (int i = 2; i <= n; ++i) result *= i;
  return result;
}

BigInt falling_factorial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt result = 1;
  for (int i = 0; i < k; ++i) result *= (n - i);
  return result;
}

BigInt parse_decimal(const std::string& text) {
  std::size_t start = (!text.empty() && text[0] == '-') ? 1 : 0;
  if (start == text.size()) throw Error(ErrorCode::ParseError, "empty integer '" + text + "'");
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw Error(ErrorCode::ParseError, "not a decimal integer '" + text + "'");
    }
  }
  return BigInt(text);
}

}  // namespace chromsym
