#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "condtorus/errors.hpp"
#include "condtorus/oracle.hpp"
#include "condtorus/torus_graph.hpp"
#include "condtorus/verification.hpp"

// Text formats. Every coordinate written or read here is in the user's axis
// order; JSON is compact with keys in a fixed order.

namespace condtorus::io {

using Json = nlohmann::ordered_json;

/// Malformed or mismatched cut file.
class FormatError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

inline std::vector<int> user_coords(const TorusGraph& g, std::size_t v) {
  const Vertex p = g.vertex(v);
  return g.spec().to_user<int>(p.coords);
}

inline std::string label(const TorusGraph& g, std::size_t v) {
  std::string s;
  for (int c : user_coords(g, v)) s += (s.empty() ? "" : ",") + std::to_string(c);
  return s;
}

inline Json ks_json(const TorusSpec& spec) {
  Json ks = Json::array();
  for (int k : spec.user_ks()) ks.push_back(k);
  return ks;
}

/// {"ks":[...],"vertices":N,"edges":M}
inline std::string graph_descriptor(const TorusGraph& g) {
  Json j;
  j["ks"] = ks_json(g.spec());
  j["vertices"] = g.vertex_count();
  j["edges"] = g.edge_count();
  return j.dump();
}

/// DOT for the torus, or for the subgraph induced by `subset` when given.
inline std::string to_dot(const TorusGraph& g, const std::optional<VertexSet>& subset = std::nullopt) {
  std::ostringstream os;
  os << "graph torus {\n";
  auto keep = [&](std::size_t v) { return !subset || subset->contains(v); };
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (keep(v)) os << "  \"" << label(g, v) << "\";\n";
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    auto [u, w] = g.endpoints(e);
    if (keep(u) && keep(w)) os << "  \"" << label(g, u) << "\" -- \"" << label(g, w) << "\";\n";
  }
  os << "}\n";
  return os.str();
}

inline Json vertex_members(const TorusGraph& g, const VertexSet& s) {
  std::vector<std::vector<int>> rows;
  for (auto v : s.members()) rows.push_back(user_coords(g, v));
  std::sort(rows.begin(), rows.end());
  Json out = Json::array();
  for (auto& r : rows) out.push_back(r);
  return out;
}

inline Json edge_members(const TorusGraph& g, const EdgeSet& s) {
  std::vector<std::pair<std::vector<int>, std::vector<int>>> rows;
  for (auto e : s.members()) {
    auto [u, w] = g.endpoints(e);
    auto a = user_coords(g, u);
    auto b = user_coords(g, w);
    if (b < a) std::swap(a, b);
    rows.emplace_back(std::move(a), std::move(b));
  }
  std::sort(rows.begin(), rows.end());
  Json out = Json::array();
  for (auto& [a, b] : rows) out.push_back(Json::array({a, b}));
  return out;
}

inline std::string vertex_cut_json(const TorusGraph& g, int h, const VertexSet& cut) {
  Json j;
  j["ks"] = ks_json(g.spec());
  j["h"] = h;
  j["kind"] = "vertex";
  j["members"] = vertex_members(g, cut);
  return j.dump();
}

inline std::string edge_cut_json(const TorusGraph& g, int h, const EdgeSet& cut) {
  Json j;
  j["ks"] = ks_json(g.spec());
  j["h"] = h;
  j["kind"] = "edge";
  j["members"] = edge_members(g, cut);
  return j.dump();
}

struct ParsedCut {
  std::vector<int> ks;
  int h = 0;
  bool is_vertex = true;
  VertexSet vertices;
  EdgeSet edges;
};

namespace detail {

inline std::size_t parse_vertex(const TorusGraph& g, const Json& j) {
  if (!j.is_array() || j.size() != g.rank()) {
    throw FormatError("cut member must be an array of " + std::to_string(g.rank()) + " coordinates");
  }
  std::vector<int> user;
  for (const auto& c : j) {
    if (!c.is_number_integer()) throw FormatError("coordinate must be an integer");
    user.push_back(c.get<int>());
  }
  Vertex v{g.spec().from_user<int>(user)};
  try {
    return g.index_of(v);
  } catch (const ValidationError& e) {
    throw FormatError(std::string("bad cut member: ") + e.what());
  }
}

}  // namespace detail

/// Parses a cut file against torus g; any schema violation or spec mismatch throws FormatError.
inline ParsedCut parse_cut(const TorusGraph& g, const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(std::string("cut file is not valid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("ks") || !j.contains("h") || !j.contains("kind") || !j.contains("members")) {
    throw FormatError("cut file needs keys ks, h, kind, members");
  }
  ParsedCut out;
  try {
    out.ks = j["ks"].get<std::vector<int>>();
    out.h = j["h"].get<int>();
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("cut file header: ") + e.what());
  }
  const auto user = g.spec().user_ks();
  if (!std::equal(out.ks.begin(), out.ks.end(), user.begin(), user.end())) {
    throw FormatError("cut file ks does not match the requested torus");
  }
  const auto& kind = j["kind"];
  if (!kind.is_string() || (kind != "vertex" && kind != "edge")) {
    throw FormatError("cut kind must be \"vertex\" or \"edge\"");
  }
  out.is_vertex = kind == "vertex";
  out.vertices = g.empty_vertices();
  out.edges = g.empty_edges();
  if (!j["members"].is_array()) throw FormatError("members must be an array");
  for (const auto& m : j["members"]) {
    if (out.is_vertex) {
      out.vertices.insert(detail::parse_vertex(g, m));
    } else {
      if (!m.is_array() || m.size() != 2) throw FormatError("edge member must be a pair of vertices");
      const auto u = detail::parse_vertex(g, m[0]);
      const auto w = detail::parse_vertex(g, m[1]);
      const auto e = g.edge_id(u, w);
      if (!e) throw FormatError("edge member joins non-adjacent vertices");
      out.edges.insert(*e);
    }
  }
  return out;
}

/// {"valid":bool,"reason":str|null,"cut_size":n,"components":[{"size":n,"min_degree":d},...]}
inline std::string certificate_json(const CutCertificate& cert) {
  Json j;
  j["valid"] = cert.valid;
  j["reason"] = cert.reason ? Json(std::string(to_string(*cert.reason))) : Json(nullptr);
  j["cut_size"] = cert.cut_size;
  Json comps = Json::array();
  for (std::size_t i = 0; i < cert.components.size(); ++i) {
    Json c;
    c["size"] = cert.components[i].size();
    c["min_degree"] = cert.per_component_min_degree[i];
    comps.push_back(std::move(c));
  }
  j["components"] = std::move(comps);
  return j.dump();
}

/// {"kind":...,"h":H,"value":n|null,"witness":[...],"explored":n,"complete":bool}
inline std::string oracle_json(const TorusGraph& g, const OracleResult& res) {
  Json j;
  j["kind"] = std::string(to_string(res.kind));
  j["h"] = res.h;
  j["value"] = res.value ? Json(*res.value) : Json(nullptr);
  j["witness"] = res.kind == OracleKind::Lambda ? edge_members(g, res.edge_witness)
                                                : vertex_members(g, res.vertex_witness);
  j["explored"] = res.explored;
  j["complete"] = res.complete;
  return j.dump();
}

}  // namespace condtorus::io
