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

// JSON documents exchanged by the command line tool.
//
//   ideal:        {"n": 4, "generators": [[1,0,0,2], [0,1,0,2]]}
//   graph:        {"vertices": ["a","b"], "edges": [["a","b"]],
//                  "weights": {"b": 2}}
//   certificate:  {"verdict": true, "trace": <node>} where a node is
//                 {"kind": "strong-edge", "verdict": ..., "matching_number":
//                  ..., "leaves": [names], "b": name, "c": name,
//                  "delta": int|null, "label": str, "locus": str,
//                  "children": [nodes]}

#ifndef MATCHPOW_IO_HPP
#define MATCHPOW_IO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "matchpow/classifier.hpp"
#include "matchpow/graph.hpp"
#include "matchpow/monomial.hpp"
#include "matchpow/polymatroid.hpp"
#include "matchpow/resolution.hpp"

namespace matchpow {

using Json = nlohmann::json;
using OrderedJson = nlohmann::ordered_json;

/// Canonical ideal document; generators sorted lexicographically.
OrderedJson ideal_to_json(const MonomialIdeal& ideal);
/// Parses and minimalizes. Throws InvalidArgument on malformed input.
MonomialIdeal ideal_from_json(const Json& doc);

OrderedJson graph_to_json(const WeightedOrientedGraph& graph);
/// Parses a graph document. Sources are not normalized here.
WeightedOrientedGraph graph_from_json(const Json& doc);

OrderedJson certificate_to_json(const ClassificationCertificate& cert,
                                const WeightedOrientedGraph& graph);
ClassificationCertificate certificate_from_json(
    const Json& doc, const WeightedOrientedGraph& graph);

OrderedJson exchange_failure_to_json(const ExchangeFailure& failure);

/// Multigraded entries plus the totalized beta_{i,j} view.
OrderedJson betti_to_json(const BettiTable& table);

Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const OrderedJson& doc);

}  // namespace matchpow

#endif  // MATCHPOW_IO_HPP
