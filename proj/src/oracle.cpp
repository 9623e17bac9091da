#include "chromsym/oracle.hpp"

#include "chromsym/error.hpp"

#include <algorithm>

namespace chromsym {

namespace {

void check_cap(int n, int cap, const char* what) {
  if (n > cap) {
    throw Error(ErrorCode::CapExceeded,
                std::string(what) + " on size " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
  }
}

// Adds content values one at a time as horizontal strips inside lambda.
BigInt count_strips(const std::vector<int>& lambda, const std::vector<int>& mu, std::size_t index,
                    std::vector<int>& shape) {
  if (index == mu.size()) return 1;
  BigInt total = 0;
  const std::vector<int> before = shape;
  auto place = [&](auto&& self, std::size_t row, int left) -> void {
    if (row == lambda.size()) {
      if (left == 0) total += count_strips(lambda, mu, index + 1, shape);
      return;
    }
    const int cap_row = row == 0 ? lambda[row] : std::min(lambda[row], before[row - 1]);
    const int room = std::max(0, cap_row - before[row]);
    for (int add = std::min(room, left); add >= 0; --add) {
      shape[row] = before[row] + add;
      self(self, row + 1, left - add);
    }
    shape[row] = before[row];
  };
  place(place, 0, mu[index]);
  return total;
}

}  // namespace

SymFunc x_in_monomial(const Graph& graph, int cap) {
  check_cap(graph.size(), cap, "monomial expansion");
  SymFunc out(Basis::Monomial, graph.size());
  for (const auto& mu : partitions_of(graph.size())) out.set(mu, semi_ordered_count(graph, mu));
  return out;
}

BigInt kostka(const Partition& lambda, const Partition& mu) {
  if (lambda.n() != mu.n()) {
    throw Error(ErrorCode::UnequalWeight, lambda.to_string() + " vs " + mu.to_string());
  }
  std::vector<int> shape(lambda.parts().size(), 0);
  return count_strips(lambda.parts(), mu.parts(), 0, shape);
}

KostkaMatrix kostka_matrix(int n) {
  KostkaMatrix k;
  k.partitions = all_partitions(n);
  for (const auto& lambda : k.partitions) {
    std::vector<BigInt> row;
    for (const auto& mu : k.partitions) row.push_back(dominates(lambda, mu) ? kostka(lambda, mu) : BigInt(0));
    k.entries.push_back(std::move(row));
  }
  return k;
}

SymFunc monomial_to_schur(const SymFunc& f, int cap) {
  if (f.basis() != Basis::Monomial) throw Error(ErrorCode::ParseError, "expected a monomial-basis function");
  check_cap(f.degree(), cap, "monomial to Schur conversion");
  const KostkaMatrix k = kostka_matrix(f.degree());
  const std::size_t size = k.partitions.size();
  std::vector<BigInt> c(size, 0);
  // [m_mu] f = sum_lambda c_lambda K[lambda][mu], with K[lambda][mu] = 0 unless
  // lambda comes no later than mu in reverse-lexicographic order.
  for (std::size_t j = 0; j < size; ++j) {
    BigInt value = f.coeff(k.partitions[j]);
    for (std::size_t i = 0; i < j; ++i) value -= c[i] * k.entries[i][j];
    c[j] = value;  // K[j][j] = 1
  }
  SymFunc out(Basis::Schur, f.degree());
  for (std::size_t j = 0; j < size; ++j) out.set(k.partitions[j], c[j]);
  return out;
}

SymFunc schur_to_monomial(const SymFunc& f, int cap) {
  if (f.basis() != Basis::Schur) throw Error(ErrorCode::ParseError, "expected a Schur-basis function");
  check_cap(f.degree(), cap, "Schur to monomial conversion");
  SymFunc out(Basis::Monomial, f.degree());
  for (const auto& [lambda, c] : f.terms()) {
    for (const auto& mu : partitions_of(f.degree())) {
      if (dominates(lambda, mu)) out.add(mu, c * kostka(lambda, mu));
    }
  }
  return out;
}

BigInt coloring_count(const Graph& graph, int q, int cap) {
  check_cap(graph.size(), cap, "coloring count");
  if (graph.size() == 0) return 1;
  if (q <= 0) return 0;
  std::vector<int> color(static_cast<std::size_t>(graph.size()), -1);
  std::uint64_t total = 0;
  auto assign = [&](auto&& self, int v) -> void {
    if (v == graph.size()) {
      ++total;
      return;
    }
    for (int c = 0; c < q; ++c) {
      bool ok = true;
      for (int u : members(graph.neighbors(v) & all_vertices(v))) {
        if (color[static_cast<std::size_t>(u)] == c) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      color[static_cast<std::size_t>(v)] = c;
      self(self, v + 1);
    }
    color[static_cast<std::size_t>(v)] = -1;
  };
  assign(assign, 0);
  return total;
}

BigInt schur_at_ones(const Partition& lambda, int q) {
  BigInt num = 1, den = 1;
  for (int r = 1; r <= lambda.length(); ++r) {
    for (int c = 1; c <= lambda.part(r); ++c) {
      const int content = c - r;
      if (q + content <= 0) return 0;
      int leg = 0;
      while (lambda.part(r + leg + 1) >= c) ++leg;
      const int hook = (lambda.part(r) - c) + leg + 1;
      num *= (q + content);
      den *= hook;
    }
  }
  return num / den;
}

BigInt monomial_at_ones(const Partition& mu, int q) {
  if (mu.length() > q) return 0;
  BigInt value = factorial(q) / factorial(q - mu.length());
  for (auto [part, count] : mu.runs()) value /= factorial(count);
  return value;
}

BigInt evaluate_at_ones(const SymFunc& f, int q) {
  BigInt total = 0;
  for (const auto& [lambda, c] : f.terms()) {
    total += c * (f.basis() == Basis::Schur ? schur_at_ones(lambda, q) : monomial_at_ones(lambda, q));
  }
  return total;
}

}  // namespace chromsym
