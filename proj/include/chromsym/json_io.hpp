#pragma once

#include "chromsym/classifier.hpp"
#include "chromsym/graph.hpp"
#include "chromsym/partition.hpp"
#include "chromsym/schur.hpp"
#include "chromsym/symfunc.hpp"
#include "chromsym/tabloid.hpp"

#include <json.hpp>

#include <string>

namespace chromsym {

using Json = nlohmann::json;

Json to_json(const Partition& lambda);
Partition partition_from_json(const Json& j);

Json to_json(const Graph& graph);
Json to_json(const Poset& poset);
/// {"multipartite": [...]} when known, else the poset form, else the graph form.
Json to_json(const Instance& instance);
/// Accepts the multipartite shorthand, poset JSON ("covers") or graph JSON ("edges").
Instance instance_from_json(const Json& j);

/// {"graph": ..., "basis": ..., "n": ..., "coeffs": [{"partition": [...], "value": "..."}]}
Json to_json(const SymFunc& f, const Json& graph);
SymFunc symfunc_from_json(const Json& j);

/// "partition;value" lines under a header, partitions comma-separated.
std::string to_csv(const SymFunc& f);

Json to_json(const SRHTabloid& tabloid);
Json to_json(const SRHGTabloid& tabloid, const std::vector<std::string>& labels);

Json to_json(const CoeffReport& report);
Json to_json(const ClassificationReport& report);

}  // namespace chromsym
