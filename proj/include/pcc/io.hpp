// Copyright 2026 The pcc Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "pcc/errors.hpp"
#include "pcc/partition.hpp"
#include "pcc/sbm.hpp"

namespace pcc {

// Graph file format (text):
//   line 1:        "n m"
//   lines 2..m+1:  "i j" with 0-based i < j, sorted lexicographically
//   optional:      "x: l0 l1 ... l(n-1)" with labels +1/-1
// The JSON mirror carries {n, edges, hidden, seed, params}.

namespace detail {

inline std::int32_t parse_label(const std::string& tok) {
  if (tok == "1" || tok == "+1") return 1;
  if (tok == "-1") return -1;
  throw ParseError("bad partition label '" + tok + "'");
}

inline void validate_edges(std::int64_t n, std::vector<Edge>& edges) {
  for (const Edge& e : edges) {
    if (e.first < 0 || e.second < 0 || e.first >= n || e.second >= n) {
      throw ParseError("edge endpoint out of range");
    }
    if (e.first >= e.second) {
      throw ParseError("edges must satisfy i < j");
    }
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    throw ParseError("duplicate edge");
  }
}

}  // namespace detail

inline void save_instance_text(const Instance& inst, std::ostream& os) {
  os << inst.n << ' ' << inst.edges.size() << '\n';
  for (const Edge& e : inst.edges) {
    os << e.first << ' ' << e.second << '\n';
  }
  if (inst.hidden) {
    os << "x:";
    for (std::int32_t v : inst.hidden->labels()) os << ' ' << v;
    os << '\n';
  }
}

inline Instance load_instance_text(std::istream& is) {
  Instance inst;
  std::int64_t m = -1;
  if (!(is >> inst.n >> m) || inst.n < 1 || m < 0) {
    throw ParseError("bad header line; expected 'n m'");
  }
  inst.edges.reserve(static_cast<std::size_t>(m));
  for (std::int64_t k = 0; k < m; ++k) {
    Edge e;
    if (!(is >> e.first >> e.second)) {
      throw ParseError("truncated edge list");
    }
    inst.edges.push_back(e);
  }
  detail::validate_edges(inst.n, inst.edges);
  std::string tok;
  if (is >> tok) {
    if (tok != "x:") throw ParseError("unexpected trailing token '" + tok + "'");
    std::vector<std::int32_t> labels;
    labels.reserve(static_cast<std::size_t>(inst.n));
    for (std::int64_t i = 0; i < inst.n; ++i) {
      if (!(is >> tok)) throw ParseError("truncated partition line");
      labels.push_back(detail::parse_label(tok));
    }
    inst.hidden = Partition(std::move(labels));
  }
  return inst;
}

inline nlohmann::json instance_to_json(const Instance& inst) {
  nlohmann::json j;
  j["n"] = inst.n;
  j["edges"] = nlohmann::json::array();
  for (const Edge& e : inst.edges) {
    j["edges"].push_back({e.first, e.second});
  }
  j["hidden"] = inst.hidden ? nlohmann::json(inst.hidden->labels())
                            : nlohmann::json(nullptr);
  j["seed"] = inst.seed;
  if (inst.params) {
    nlohmann::json p;
    p["n"] = inst.params->n;
    p["p"] = inst.params->p;
    p["q"] = inst.params->q;
    p["alpha"] = inst.params->alpha ? nlohmann::json(*inst.params->alpha)
                                    : nlohmann::json(nullptr);
    p["beta"] = inst.params->beta ? nlohmann::json(*inst.params->beta)
                                  : nlohmann::json(nullptr);
    j["params"] = p;
  } else {
    j["params"] = nullptr;
  }
  return j;
}

inline Instance instance_from_json(const nlohmann::json& j) {
  Instance inst;
  try {
    inst.n = j.at("n").get<std::int64_t>();
    for (const auto& e : j.at("edges")) {
      inst.edges.emplace_back(e.at(0).get<Vertex>(), e.at(1).get<Vertex>());
    }
    if (j.contains("hidden") && !j["hidden"].is_null()) {
      inst.hidden = Partition(j["hidden"].get<std::vector<std::int32_t>>());
    }
    if (j.contains("seed")) inst.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("params") && !j["params"].is_null()) {
      const auto& p = j["params"];
      SbmParams params;
      params.n = p.at("n").get<std::int64_t>();
      params.p = p.at("p").get<double>();
      params.q = p.at("q").get<double>();
      if (p.contains("alpha") && !p["alpha"].is_null()) {
        params.alpha = p["alpha"].get<double>();
      }
      if (p.contains("beta") && !p["beta"].is_null()) {
        params.beta = p["beta"].get<double>();
      }
      inst.params = params;
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad instance JSON: ") + e.what());
  }
  detail::validate_edges(inst.n, inst.edges);
  return inst;
}

/// Writes text or JSON depending on the extension (".json" selects JSON).
inline void save_instance(const Instance& inst,
                          const std::filesystem::path& path) {
  std::ofstream os(path);
  if (!os) throw Error("cannot open '" + path.string() + "' for writing");
  if (path.extension() == ".json") {
    os << instance_to_json(inst).dump(2) << '\n';
  } else {
    save_instance_text(inst, os);
  }
  if (!os) throw Error("write failed for '" + path.string() + "'");
}

inline Instance load_instance(const std::filesystem::path& path) {
  std::ifstream is(path);
  if (!is) throw Error("cannot open '" + path.string() + "'");
  if (path.extension() == ".json") {
    nlohmann::json j;
    try {
      is >> j;
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("bad JSON: ") + e.what());
    }
    return instance_from_json(j);
  }
  return load_instance_text(is);
}

/// Partition file: one line of +/-1 labels separated by spaces.
inline Partition load_partition(const std::filesystem::path& path) {
  std::ifstream is(path);
  if (!is) throw Error("cannot open '" + path.string() + "'");
  std::vector<std::int32_t> labels;
  std::string tok;
  while (is >> tok) labels.push_back(detail::parse_label(tok));
  if (labels.empty()) throw ParseError("empty partition file");
  return Partition(std::move(labels));
}

inline void save_partition(const Partition& x,
                           const std::filesystem::path& path) {
  std::ofstream os(path);
  if (!os) throw Error("cannot open '" + path.string() + "' for writing");
  for (std::int64_t i = 0; i < x.size(); ++i) {
    os << (i ? " " : "") << x[i];
  }
  os << '\n';
}

}  // namespace pcc
