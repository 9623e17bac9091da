#include "chromsym/json_io.hpp"

#include "chromsym/error.hpp"

namespace chromsym {

namespace {

template <typename F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string(what) + ": " + e.what());
  }
}

}  // namespace

Json to_json(const Partition& lambda) { return Json(lambda.parts()); }

Partition partition_from_json(const Json& j) {
  return guarded("partition", [&] {
    if (!j.is_array()) throw Error(ErrorCode::ParseError, "partition must be an array");
    return Partition(j.get<std::vector<int>>());
  });
}

Json to_json(const Graph& graph) {
  Json edges = Json::array();
  for (auto [u, v] : graph.edges()) edges.push_back({u, v});
  return {{"n", graph.size()}, {"edges", edges}};
}

Json to_json(const Poset& poset) {
  Json covers = Json::array();
  for (auto [lo, hi] : poset.covers()) covers.push_back({lo, hi});
  return {{"n", poset.size()}, {"covers", covers}, {"labels", poset.labels()}};
}

Json to_json(const Instance& instance) {
  if (instance.multipartite) return {{"multipartite", to_json(*instance.multipartite)}};
  if (instance.poset) return to_json(*instance.poset);
  return to_json(instance.graph);
}

Instance instance_from_json(const Json& j) {
  return guarded("graph spec", [&] {
    if (!j.is_object()) throw Error(ErrorCode::ParseError, "graph spec must be an object");
    if (j.contains("multipartite")) return Instance::from_multipartite(partition_from_json(j.at("multipartite")));
    const int n = j.at("n").get<int>();
    if (j.contains("covers")) {
      auto covers = j.at("covers").get<std::vector<std::pair<int, int>>>();
      std::vector<std::string> labels;
      if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
      return Instance::from_poset(Poset::from_covers(n, covers, labels));
    }
    if (j.contains("edges")) {
      return Instance::from_graph(Graph::from_edges(n, j.at("edges").get<std::vector<std::pair<int, int>>>()));
    }
    throw Error(ErrorCode::ParseError, "expected one of 'multipartite', 'covers', 'edges'");
  });
}

Json to_json(const SymFunc& f, const Json& graph) {
  Json coeffs = Json::array();
  for (const auto& [lambda, c] : f.terms()) {
    coeffs.push_back({{"partition", to_json(lambda)}, {"value", to_decimal(c)}});
  }
  return {{"graph", graph}, {"basis", std::string(to_string(f.basis()))}, {"n", f.degree()}, {"coeffs", coeffs}};
}

SymFunc symfunc_from_json(const Json& j) {
  return guarded("expansion", [&] {
    const auto basis_name = j.at("basis").get<std::string>();
    Basis basis;
    if (basis_name == "schur") {
      basis = Basis::Schur;
    } else if (basis_name == "monomial") {
      basis = Basis::Monomial;
    } else {
      throw Error(ErrorCode::ParseError, "unknown basis '" + basis_name + "'");
    }
    SymFunc f(basis, j.at("n").get<int>());
    for (const auto& term : j.at("coeffs")) {
      f.set(partition_from_json(term.at("partition")), parse_decimal(term.at("value").get<std::string>()));
    }
    return f;
  });
}

std::string to_csv(const SymFunc& f) {
  std::string out = "partition;value\n";
  for (const auto& [lambda, c] : f.terms()) {
    std::string key;
    for (std::size_t i = 0; i < lambda.parts().size(); ++i) {
      if (i) key += ',';
      key += std::to_string(lambda.parts()[i]);
    }
    out += key + ";" + to_decimal(c) + "\n";
  }
  return out;
}

Json to_json(const SRHTabloid& tabloid) {
  Json hooks = Json::array();
  for (const auto& h : tabloid.hooks) {
    Json cells = Json::array();
    for (const auto& cell : h.cells) cells.push_back({cell.row, cell.col});
    hooks.push_back(cells);
  }
  return {{"shape", to_json(tabloid.shape)},
          {"hooks", hooks},
          {"sign", tabloid.sign()},
          {"content", tabloid.content().parts()}};
}

Json to_json(const SRHGTabloid& tabloid, const std::vector<std::string>& labels) {
  Json j = to_json(tabloid.tabloid);
  Json filling = Json::array();
  for (std::size_t r = 0; r < tabloid.grid.size(); ++r) {
    for (std::size_t c = 0; c < tabloid.grid[r].size(); ++c) {
      const int v = tabloid.grid[r][c];
      const std::string label =
          static_cast<std::size_t>(v) < labels.size() ? labels[static_cast<std::size_t>(v)] : std::to_string(v);
      filling.push_back({static_cast<int>(r + 1), static_cast<int>(c + 1), label});
    }
  }
  j["filling"] = filling;
  return j;
}

Json to_json(const CoeffReport& report) {
  Json j = {{"lambda", to_json(report.lambda)},
            {"value", to_decimal(report.value)},
            {"route", std::string(to_string(report.route))}};
  if (report.tabloid_counts) {
    j["tabloid_counts"] = {{"positive", to_decimal(report.tabloid_counts->positive)},
                           {"negative", to_decimal(report.tabloid_counts->negative)}};
  }
  return j;
}

Json to_json(const ClassificationReport& report) {
  Json j = {{"lambda", to_json(report.lambda)},
            {"verdict", std::string(to_string(report.verdict))},
            {"reason", std::string(to_string(report.reason))},
            {"verified", report.verified},
            {"witness", report.witness ? to_json(*report.witness) : Json(nullptr)}};
  if (report.negative_coefficient) {
    j["negative_coefficient"] = {{"partition", to_json(report.negative_coefficient->first)},
                                 {"value", to_decimal(report.negative_coefficient->second)}};
  }
  if (!report.detail.empty()) j["detail"] = report.detail;
  return j;
}

}  // namespace chromsym
