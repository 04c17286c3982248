#ifndef IDPRISM_JSON_REPORT_HPP
#define IDPRISM_JSON_REPORT_HPP

// JSON views of verification reports and solver results. Prism vertices are
// labelled "v3" / "vbar7"; other graphs use 1-based integers.

#include "idprism/graph.hpp"
#include "idprism/idcode.hpp"
#include "idprism/solver.hpp"

#include "json.hpp"

#include <optional>

namespace idprism {

inline auto vertex_json(int v, const std::optional<PrismIndexing> & prism) -> nlohmann::json {
  if (prism)
    return prism->label(v);
  return v + 1;
}

inline auto vertices_json(const std::vector<int> & vs, const std::optional<PrismIndexing> & prism) -> nlohmann::json {
  auto arr = nlohmann::json::array();
  for (int v : vs)
    arr.push_back(vertex_json(v, prism));
  return arr;
}

inline auto report_json(const VerificationReport & r, const std::optional<PrismIndexing> & prism) -> nlohmann::json {
  nlohmann::json j;
  j["valid"] = r.valid;
  if (r.failure)
    j["failure"] = {{"kind", to_string(r.failure->kind)}, {"vertices", vertices_json(r.failure->vertices, prism)}};
  else
    j["failure"] = nullptr;
  return j;
}

inline auto result_json(const SolverResult & r, const std::optional<PrismIndexing> & prism) -> nlohmann::json {
  nlohmann::json j;
  j["status"] = to_string(r.status);
  if (r.status == SolverStatus::optimal) {
    j["size"] = r.size;
    j["code"] = vertices_json(r.code.to_indices(), prism);
  } else {
    j["size"] = nullptr;
    j["code"] = nlohmann::json::array();
  }
  if (r.witness)
    j["witness"] = vertices_json({r.witness->first, r.witness->second}, prism);
  j["nodes"] = r.nodes;
  j["ms"] = r.elapsed_ms;
  return j;
}

} // namespace idprism

#endif
