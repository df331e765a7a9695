// Copyright 2026 The matchpow Authors.
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

#include "matchpow/io.hpp"

#include <fstream>
#include <map>

#include "matchpow/errors.hpp"

namespace matchpow {

namespace {

std::vector<Exponent> exponents_of(const Monomial& m) {
  return {m.exponents().begin(), m.exponents().end()};
}

Vertex lookup(const std::map<std::string, Vertex>& index,
              const std::string& name) {
  auto it = index.find(name);
  if (it == index.end()) {
    throw InvalidArgument("unknown vertex name '" + name + "'");
  }
  return it->second;
}

std::map<std::string, Vertex> name_index(const WeightedOrientedGraph& graph) {
  std::map<std::string, Vertex> index;
  for (Vertex v = 0; v < graph.slots(); ++v) index[graph.name(v)] = v;
  return index;
}

OrderedJson node_to_json(const CertificateNode& node,
                         const WeightedOrientedGraph& graph) {
  OrderedJson doc;
  doc["kind"] = to_string(node.kind);
  doc["verdict"] = node.verdict;
  doc["matching_number"] = node.matching_number;
  const bool has_config = !node.leaves.empty();
  if (has_config) {
    OrderedJson leaves = OrderedJson::array();
    for (Vertex a : node.leaves) leaves.push_back(graph.name(a));
    doc["leaves"] = leaves;
    doc["b"] = graph.name(node.b);
    if (node.kind != NodeKind::kIsolatedEdge) doc["c"] = graph.name(node.c);
  }
  doc["delta"] = node.delta ? OrderedJson(*node.delta) : OrderedJson(nullptr);
  if (node.kind == NodeKind::kRefuted) {
    doc["label"] = node.label;
    doc["locus"] = node.locus;
  }
  OrderedJson children = OrderedJson::array();
  for (const CertificateNode& child : node.children) {
    children.push_back(node_to_json(child, graph));
  }
  doc["children"] = children;
  return doc;
}

CertificateNode node_from_json(const Json& doc,
                               const std::map<std::string, Vertex>& index) {
  CertificateNode node;
  const auto kind = node_kind_from_string(doc.at("kind").get<std::string>());
  if (!kind) throw ContractViolation("certificate: unknown node kind");
  node.kind = *kind;
  node.verdict = doc.at("verdict").get<bool>();
  node.matching_number = doc.at("matching_number").get<std::size_t>();
  if (doc.contains("leaves")) {
    for (const auto& name : doc["leaves"]) {
      node.leaves.push_back(lookup(index, name.get<std::string>()));
    }
    node.b = lookup(index, doc.at("b").get<std::string>());
    if (doc.contains("c")) node.c = lookup(index, doc["c"].get<std::string>());
  }
  if (doc.contains("delta") && !doc["delta"].is_null()) {
    node.delta = doc["delta"].get<Exponent>();
  }
  node.label = doc.value("label", "");
  node.locus = doc.value("locus", "");
  for (const auto& child : doc.value("children", Json::array())) {
    node.children.push_back(node_from_json(child, index));
  }
  return node;
}

}  // namespace

OrderedJson ideal_to_json(const MonomialIdeal& ideal) {
  OrderedJson doc;
  doc["n"] = ideal.ambient();
  OrderedJson gens = OrderedJson::array();
  for (const Monomial& g : ideal.generators()) gens.push_back(exponents_of(g));
  doc["generators"] = gens;
  return doc;
}

MonomialIdeal ideal_from_json(const Json& doc) {
  try {
    const auto n = doc.at("n").get<std::size_t>();
    std::vector<Monomial> gens;
    for (const auto& row : doc.at("generators")) {
      std::vector<long long> raw = row.get<std::vector<long long>>();
      std::vector<Exponent> exps;
      for (long long e : raw) {
        if (e < 0) throw InvalidArgument("exponents must be non-negative");
        exps.push_back(static_cast<Exponent>(e));
      }
      gens.emplace_back(std::move(exps));
    }
    return minimalize(std::move(gens), n);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("malformed ideal document: ") + e.what());
  }
}

OrderedJson graph_to_json(const WeightedOrientedGraph& graph) {
  OrderedJson doc;
  OrderedJson vertices = OrderedJson::array();
  OrderedJson weights = OrderedJson::object();
  std::vector<std::string> names;
  for (Vertex v : graph.vertices()) {
    vertices.push_back(graph.name(v));
    if (graph.weight(v) != 1) weights[graph.name(v)] = graph.weight(v);
  }
  OrderedJson edges = OrderedJson::array();
  for (const Arc& a : graph.arcs()) {
    edges.push_back({graph.name(a.tail), graph.name(a.head)});
  }
  doc["vertices"] = vertices;
  doc["edges"] = edges;
  doc["weights"] = weights;
  return doc;
}

WeightedOrientedGraph graph_from_json(const Json& doc) {
  try {
    if (!doc.at("vertices").is_array()) {
      throw InvalidArgument("vertices must be an array of names");
    }
    std::vector<std::string> names;
    for (const auto& v : doc.at("vertices")) {
      names.push_back(v.is_string() ? v.get<std::string>() : v.dump());
    }
    std::map<std::string, Vertex> index;
    for (Vertex v = 0; v < names.size(); ++v) {
      if (!index.emplace(names[v], v).second) {
        throw InvalidArgument("duplicate vertex name '" + names[v] + "'");
      }
    }
    WeightedOrientedGraph graph(names.size());
    graph.set_names(names);
    auto as_name = [](const Json& x) {
      return x.is_string() ? x.get<std::string>() : x.dump();
    };
    for (const auto& e : doc.value("edges", Json::array())) {
      if (!e.is_array() || e.size() != 2) {
        throw InvalidArgument("edges must be [tail, head] pairs");
      }
      graph.add_arc(lookup(index, as_name(e[0])), lookup(index, as_name(e[1])));
    }
    const Json weights = doc.value("weights", Json::object());
    for (const auto& [name, w] : weights.items()) {
      const long long value = w.get<long long>();
      if (value < 1) throw InvalidArgument("weights must be >= 1");
      graph.set_weight(lookup(index, name), static_cast<Exponent>(value));
    }
    return graph;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("malformed graph document: ") + e.what());
  }
}

OrderedJson certificate_to_json(const ClassificationCertificate& cert,
                                const WeightedOrientedGraph& graph) {
  OrderedJson doc;
  doc["verdict"] = cert.verdict;
  doc["trace"] = node_to_json(cert.root, graph);
  return doc;
}

ClassificationCertificate certificate_from_json(
    const Json& doc, const WeightedOrientedGraph& graph) {
  try {
    ClassificationCertificate cert;
    cert.verdict = doc.at("verdict").get<bool>();
    cert.root = node_from_json(doc.at("trace"), name_index(graph));
    return cert;
  } catch (const nlohmann::json::exception& e) {
    throw ContractViolation(std::string("malformed certificate: ") + e.what());
  } catch (const InvalidArgument& e) {
    throw ContractViolation(std::string("malformed certificate: ") + e.what());
  }
}

OrderedJson exchange_failure_to_json(const ExchangeFailure& failure) {
  OrderedJson doc;
  doc["u"] = exponents_of(failure.u);
  doc["v"] = exponents_of(failure.v);
  doc["i"] = failure.i + 1;
  return doc;
}

OrderedJson betti_to_json(const BettiTable& table) {
  OrderedJson doc;
  doc["n"] = table.ambient();
  doc["field"] = to_string(table.field());
  OrderedJson entries = OrderedJson::array();
  for (const BettiEntry& e : table.entries()) {
    OrderedJson row;
    row["i"] = e.i;
    row["multidegree"] = exponents_of(e.degree);
    row["rank"] = e.rank;
    entries.push_back(row);
  }
  doc["entries"] = entries;
  OrderedJson graded = OrderedJson::array();
  for (const auto& [key, rank] : table.graded()) {
    OrderedJson row;
    row["i"] = key.first;
    row["j"] = key.second;
    row["rank"] = rank;
    graded.push_back(row);
  }
  doc["graded"] = graded;
  doc["regularity"] = table.regularity();
  return doc;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const OrderedJson& doc) {
  std::ofstream out(path);
  if (!out) throw InvalidArgument("cannot write " + path);
  out << doc.dump(2) << '\n';
}

}  // namespace matchpow
