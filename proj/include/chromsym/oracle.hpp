#pragma once

#include "chromsym/bigint.hpp"
#include "chromsym/graph.hpp"
#include "chromsym/partition.hpp"
#include "chromsym/symfunc.hpp"

#include <vector>

namespace chromsym {

inline constexpr int kDefaultOracleCap = 12;

/// X_G in the monomial basis: [m_mu] X_G = (#stable partitions of type mu) * prod_i m_i(mu)!.
SymFunc x_in_monomial(const Graph& graph, int cap = kDefaultOracleCap);

/// Number of semistandard tableaux of shape lambda and content mu.
/// Throws UnequalWeight.
BigInt kostka(const Partition& lambda, const Partition& mu);

/// Kostka numbers for all partitions of n, rows and columns in reverse-lexicographic order.
struct KostkaMatrix {
  std::vector<Partition> partitions;
  std::vector<std::vector<BigInt>> entries;  // entries[row=lambda][col=mu]
};

KostkaMatrix kostka_matrix(int n);

/// Solves f = sum c_lambda s_lambda by forward substitution against the
/// unitriangular Kostka matrix. Throws CapExceeded above `cap`.
SymFunc monomial_to_schur(const SymFunc& f, int cap = kDefaultOracleCap);
SymFunc schur_to_monomial(const SymFunc& f, int cap = kDefaultOracleCap);

/// Proper colorings with colors 1..q by direct enumeration.
BigInt coloring_count(const Graph& graph, int q, int cap = kDefaultOracleCap);

/// s_lambda(1^q) by the hook-content formula.
BigInt schur_at_ones(const Partition& lambda, int q);
/// m_mu(1^q): distinct arrangements of mu's parts into q slots.
BigInt monomial_at_ones(const Partition& mu, int q);
/// f(1^q) for either basis.
BigInt evaluate_at_ones(const SymFunc& f, int q);

}  // namespace chromsym
