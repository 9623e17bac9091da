// Acceptance suite. Run with no arguments for every criterion, or with
// criterion numbers to run a subset. One PASS/FAIL line per criterion.

#include "chromsym/classifier.hpp"
#include "chromsym/error.hpp"
#include "chromsym/oracle.hpp"
#include "chromsym/schur.hpp"
#include "chromsym/sequences.hpp"
#include "chromsym/tabloid.hpp"
#include "oracles.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>

using namespace chromsym;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream note;

  void require(bool condition, const std::string& what) {
    if (!condition && pass) {
      pass = false;
      note.str("");
      note << what;
    }
  }
};

struct Criterion {
  int id;
  std::string title;
  double budget_seconds;
  std::function<void(Outcome&)> body;
};

Partition repeated(int value, int count, std::vector<int> prefix = {}) {
  prefix.insert(prefix.end(), static_cast<std::size_t>(count), value);
  return Partition(std::move(prefix));
}

// Oracle expansion, with its monomial coefficients first checked against
// direct colorings of prescribed content.
SymFunc oracle_expansion(const Graph& g, Outcome& o) {
  const SymFunc m = x_in_monomial(g);
  for (const auto& mu : partitions_of(g.size())) {
    o.require(m.coeff(mu) == testing::colorings_with_content(g, mu), "monomial coefficient mismatch at " + mu.to_string());
  }
  return monomial_to_schur(m);
}

void srh_census(Outcome& o) {
  const auto all = enumerate_srh_tabloids(Partition{4, 2, 2});
  int negative = 0;
  for (const auto& t : all) negative += t.sign() < 0;
  o.require(all.size() == 6, std::to_string(all.size()) + " tabloids");
  o.require(negative == 3, std::to_string(negative) + " negative");
  if (o.pass) o.note << "6 tabloids, 3 positive and 3 negative";
}

void route_equivalence(Outcome& o) {
  int graphs = 0, values = 0;
  for (int n = 1; n <= 7; ++n) {
    for (const auto& lambda : partitions_of(n)) {
      const Instance k = Instance::from_multipartite(lambda);
      const SymFunc oracle = monomial_to_schur(x_in_monomial(k.graph));
      ++graphs;
      for (const auto& mu : partitions_of(n)) {
        const BigInt expected = oracle.coeff(mu);
        const std::string at = "K_" + lambda.to_string() + " at " + mu.to_string();
        o.require(coeff_ww(k, mu) == expected, "ww differs for " + at);
        o.require(coeff_tabloids(k.graph, *k.poset, mu) == expected, "tabloids differ for " + at);
        o.require(coeff_tail(*k.poset, mu) == expected, "tail differs for " + at);
        ++values;
      }
    }
  }
  if (o.pass) o.note << graphs << " graphs, " << values << " coefficients, four routes equal";
}

void exact_expansions(Outcome& o) {
  const std::vector<std::pair<Partition, std::map<Partition, int>>> cases{
      {{2, 2}, {{{2, 2}, 2}, {{2, 1, 1}, 2}, {{1, 1, 1, 1}, 14}}},
      {{3, 2}, {{{3, 2}, 1}, {{3, 1, 1}, 1}, {{2, 2, 1}, 3}, {{2, 1, 1, 1}, 12}, {{1, 1, 1, 1, 1}, 46}}},
  };
  for (const auto& [lambda, expected] : cases) {
    const Instance k = Instance::from_multipartite(lambda);
    const SymFunc oracle = oracle_expansion(k.graph, o);
    SymFunc stated(Basis::Schur, lambda.n());
    for (const auto& [mu, c] : expected) stated.set(mu, c);
    o.require(oracle == stated, "oracle disagrees with the stated expansion of K_" + lambda.to_string());
    for (Route r : {Route::Auto, Route::WW, Route::Tabloid, Route::Tail}) {
      o.require(expand_schur(k, r) == oracle,
                "route " + std::string(to_string(r)) + " disagrees on K_" + lambda.to_string());
    }
  }
  if (o.pass) o.note << "K_(2,2) and K_(3,2) match oracle and every route";
}

void closed_forms(Outcome& o) {
  int shapes = 0;
  bool zero_branch = false;
  for (int beta = 1; beta <= 3; ++beta) {
    const Instance k = Instance::from_multipartite(repeated(2, beta));
    for (const auto& mu : partitions_of(2 * beta)) {
      const BigInt enumerated = coeff_tabloids(k.graph, *k.poset, mu);
      o.require(coefficient(k, mu, Route::Closed).value == enumerated,
                "2beta closed form at beta=" + std::to_string(beta) + " " + mu.to_string());
      if (mu.largest() <= 2) {
        o.require(coeff_closed_2beta(beta, mu.multiplicity(2), mu.multiplicity(1)) == enumerated,
                  "coeff_closed_2beta at " + mu.to_string());
      }
      ++shapes;
    }
  }
  for (int beta = 1; beta <= 2; ++beta) {
    const Instance k = Instance::from_multipartite(repeated(2, beta, {3}));
    for (const auto& mu : partitions_of(2 * beta + 3)) {
      const BigInt enumerated = coeff_tabloids(k.graph, *k.poset, mu);
      o.require(coeff_closed_32beta(beta, mu) == enumerated,
                "32beta closed form at beta=" + std::to_string(beta) + " " + mu.to_string());
      if (mu.largest() == 2 && mu.multiplicity(1) >= 1 && beta < mu.multiplicity(2)) zero_branch = true;
      ++shapes;
    }
  }
  o.require(zero_branch, "no shape exercised beta < C");
  if (o.pass) o.note << shapes << " shapes agree, beta < C branch included";
}

void boundary_family(Outcome& o) {
  for (int beta = 1; beta <= 2; ++beta) {
    const Partition lambda = repeated(2, beta, {3});
    const ScanResult scan = positivity_scan(Instance::from_multipartite(lambda), kDefaultScanCap, Route::Tail);
    o.require(scan.all_nonnegative, "negative coefficient for K_" + lambda.to_string());
  }
  int checked = 0;
  for (int beta = 1; beta <= 6; ++beta) {
    for (const auto& mu : partitions_of(2 * beta + 3)) {
      const BigInt c = coeff_closed_32beta(beta, mu);
      o.require(c >= 0, "closed form negative at beta=" + std::to_string(beta) + " " + mu.to_string());
      ++checked;
    }
  }
  if (o.pass) o.note << "scans clean for beta 1..2, " << checked << " closed-form values non-negative";
}

void negative_certificates(Outcome& o) {
  const Instance claw = Instance::from_multipartite(Partition{3, 1});
  const BigInt oracle_value = oracle_expansion(claw.graph, o).coeff(Partition{2, 2});
  o.require(oracle_value == -1, "oracle gives " + to_decimal(oracle_value) + " at (2,2)");
  const ScanResult scan = positivity_scan(claw);
  o.require(scan.first_negative && scan.first_negative->first == Partition{2, 2} &&
                scan.first_negative->second == oracle_value,
            "engine scan of K_(3,1) did not report (2,2)");

  const Instance k33 = Instance::from_multipartite(Partition{3, 3});
  const ScanResult scan33 = positivity_scan(k33);
  o.require(!scan33.all_nonnegative, "no negative coefficient found for K_(3,3)");
  if (scan33.first_negative) {
    const SymFunc oracle33 = oracle_expansion(k33.graph, o);
    o.require(oracle33.coeff(scan33.first_negative->first) == scan33.first_negative->second,
              "K_(3,3) negative coefficient not confirmed by the oracle");
  }
  o.require(classify(Partition{3, 1}).verdict == Verdict::NotSchurPositive, "K_(3,1) classified positive");
  o.require(classify(Partition{3, 3}).verdict == Verdict::NotSchurPositive, "K_(3,3) classified positive");
  if (o.pass) {
    o.note << "K_(3,1): -1 at (2,2); K_(3,3): " << to_decimal(scan33.first_negative->second) << " at "
           << scan33.first_negative->first.to_string();
  }
}

void witness_validity(Outcome& o) {
  const std::vector<std::pair<Partition, Partition>> known{
      {{5, 5, 5, 4, 3, 3}, {5, 5, 4, 4, 4, 3}},
      {{6, 6, 5, 5, 5}, {5, 5, 5, 5, 5, 2}},
      {{5, 4, 4, 4}, {5, 4, 3, 3, 2}},
  };
  for (const auto& [lambda, mu] : known) {
    o.require(witness_for(lambda) == mu, "witness for " + lambda.to_string());
  }
  int checked = 0;
  std::vector<std::string> missing;
  for (int n = 2; n <= 25; ++n) {
    for (const auto& lambda : partitions_of(n)) {
      if (lambda.length() < 2 || classify(lambda, 0).verdict == Verdict::SchurPositive) continue;
      ++checked;
      try {
        const Partition mu = witness_for(lambda);
        o.require(dominates(lambda, mu), lambda.to_string() + " does not dominate " + mu.to_string());
        o.require(!has_stable_partition(multipartite(lambda).spec, mu),
                  "K_" + lambda.to_string() + " has a stable partition of type " + mu.to_string());
      } catch (const Error& e) {
        if (e.code() != ErrorCode::NoWitness) throw;
        missing.push_back(lambda.to_string());
      }
    }
  }
  if (!missing.empty()) {
    std::string list;
    for (const auto& s : missing) list += (list.empty() ? "" : " ") + s;
    o.require(false, "no dominance witness exists for " + list + " (every dominated type has a stable partition)");
  }
  if (o.pass) o.note << checked << " non-positive shapes, all witnesses valid";
}

void involution(Outcome& o) {
  long long with_ascent = 0;
  int instances = 0;
  for (int n = 1; n <= 6; ++n) {
    for (const auto& chains : partitions_of(n)) {
      const Poset p = Poset::chain_union(chains);
      const Graph g = incomparability_graph(p);
      for (const auto& shape : partitions_of(n)) {
        ++instances;
        std::map<std::vector<int>, int> by_tail;
        BigInt full = 0, reduced = 0;
        for (const auto& t : enumerate_srh_g_tabloids(g, p, shape)) {
          full += t.sign();
          const TailSequence tail = tail_head_split(t).tail;
          if (is_nonincreasing(VertexSequence{tail.vertices}, p)) {
            reduced += t.sign();
            continue;
          }
          ++with_ascent;
          const SRHGTabloid image = psi_involution(t, p);
          const std::string where = "chains " + chains.to_string() + " shape " + shape.to_string();
          o.require(is_valid_srh_g_tabloid(image, g, p), "psi leaves the tabloid set for " + where);
          o.require(image.sign() == -t.sign(), "psi keeps the sign for " + where);
          o.require(tail_head_split(image).tail == tail, "psi changes the tail sequence for " + where);
          o.require(psi_involution(image, p) == t, "psi is not an involution for " + where);
          by_tail[tail.vertices] += t.sign();
        }
        for (const auto& [tail, total] : by_tail) o.require(total == 0, "nonzero signed sum over a tail class");
        o.require(full == reduced, "full and tail-filtered sums differ");
        o.require(count_srh_g_tabloids(g, p, shape, TailFilter::NonIncreasing).value() == reduced,
                  "filtered counter disagrees with enumeration");
      }
    }
  }
  if (o.pass) o.note << instances << " poset/shape pairs, " << with_ascent << " tabloids with an ascent";
}

void nsp_consistency(Outcome& o) {
  int compared = 0;
  for (int n = 0; n <= 9; ++n) {
    for (const auto& lambda : partitions_of(n)) {
      o.require(nsp_chain_union(lambda) == nsp_bruteforce(Poset::chain_union(lambda)),
                "formula differs from brute force at " + lambda.to_string());
      ++compared;
    }
  }
  for (const auto& [lambda, value] : std::vector<std::pair<Partition, int>>{{{}, 1}, {{2, 2}, 14}, {{3, 2}, 46}}) {
    const Poset p = Poset::chain_union(lambda);
    o.require(nsp_bruteforce(p) == value && testing::permutations_without_ascent(p) == value,
              "brute force does not reproduce " + std::to_string(value));
    o.require(nsp_chain_union(lambda) == value, "anchor " + lambda.to_string());
  }
  for (int m = 0; m <= 4; ++m) {
    const Partition with_one = repeated(1, 1, std::vector<int>(static_cast<std::size_t>(m), 2));
    o.require(nsp_chain_union(with_one) >= nsp_chain_union(repeated(2, m)),
              "monotonicity fails at m=" + std::to_string(m));
  }
  if (o.pass) o.note << compared << " chain unions agree, anchors 1/14/46 reproduced";
}

void specialization(Outcome& o) {
  std::vector<Instance> instances;
  for (int n = 1; n <= 6; ++n) {
    for (const auto& lambda : partitions_of(n)) instances.push_back(Instance::from_multipartite(lambda));
  }
  // Every labeled graph on at most 5 vertices, plus a sample on 6.
  for (int n = 1; n <= 5; ++n) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    for (unsigned mask = 0; mask < (1U << pairs.size()); ++mask) {
      std::vector<std::pair<int, int>> edges;
      for (std::size_t i = 0; i < pairs.size(); ++i)
        if ((mask >> i) & 1U) edges.push_back(pairs[i]);
      instances.push_back(Instance::from_graph(Graph::from_edges(n, edges)));
    }
  }
  std::mt19937 rng(20240607);
  std::bernoulli_distribution coin(0.5);
  for (int sample = 0; sample < 300; ++sample) {
    Graph g(6);
    for (int u = 0; u < 6; ++u)
      for (int v = u + 1; v < 6; ++v)
        if (coin(rng)) g.add_edge(u, v);
    instances.push_back(Instance::from_graph(std::move(g)));
  }
  for (const auto& instance : instances) {
    const SymFunc s = expand_schur(instance);
    for (int q = 0; q <= 4; ++q) {
      o.require(evaluate_at_ones(s, q) == coloring_count(instance.graph, q),
                "specialization differs at q=" + std::to_string(q) + " on " + std::to_string(instance.size()) +
                    " vertices");
    }
  }
  if (o.pass) o.note << instances.size() << " graphs, q = 0..4";
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria{
      {1, "SRH tabloid census of (4,2,2)", 1.0, srh_census},
      {2, "route equivalence on K_lambda, |lambda| <= 7", 120.0, route_equivalence},
      {3, "exact expansions of K_(2,2) and K_(3,2)", 10.0, exact_expansions},
      {4, "closed forms against enumeration", 300.0, closed_forms},
      {5, "Schur-positivity of K_(3,2^beta)", 120.0, boundary_family},
      {6, "negative certificates for K_(3,1) and K_(3,3)", 30.0, negative_certificates},
      {7, "dominance witnesses, |lambda| <= 25", 60.0, witness_validity},
      {8, "tail involution on chain-union posets, n <= 6", 120.0, involution},
      {9, "N_sp formula, anchors and monotonicity", 60.0, nsp_consistency},
      {10, "specialization at q ones equals coloring count", 60.0, specialization},
  };

  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) selected.push_back(std::stoi(argv[i]));

  int failures = 0;
  for (const auto& c : criteria) {
    if (!selected.empty() && std::find(selected.begin(), selected.end(), c.id) == selected.end()) continue;
    Outcome outcome;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(outcome);
    } catch (const std::exception& e) {
      outcome.require(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream budget;
    budget << "over the " << c.budget_seconds << " s budget";
    outcome.require(seconds <= c.budget_seconds, budget.str());
    failures += !outcome.pass;
    std::cout << (outcome.pass ? "PASS" : "FAIL") << "  criterion " << std::setw(2) << c.id << "  " << c.title
              << "  [" << std::fixed << std::setprecision(2) << seconds << " s]  " << outcome.note.str() << '\n';
  }
  return failures == 0 ? 0 : 1;
}
