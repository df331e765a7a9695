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

#ifndef MATCHPOW_GRAPH_HPP
#define MATCHPOW_GRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "matchpow/monomial.hpp"

namespace matchpow {

/// Vertices are 0-based slots; vertex v corresponds to variable x_{v+1}.
using Vertex = std::size_t;
using VertexMask = std::uint64_t;

/// Graphs hold at most this many vertex slots (vertex sets are 64-bit masks).
inline constexpr std::size_t kMaxVertices = 64;

inline VertexMask bit(Vertex v) { return VertexMask{1} << v; }

/// An unordered edge, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  bool touches(Vertex w) const { return u == w || v == w; }
  VertexMask mask() const { return bit(u) | bit(v); }

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// A directed edge tail -> head.
struct Arc {
  Vertex tail = 0;
  Vertex head = 0;
  friend bool operator==(const Arc&, const Arc&) = default;
};

/// A set of pairwise vertex-disjoint edges, sorted.
struct Matching {
  std::vector<Edge> edges;

  std::size_t size() const { return edges.size(); }
  VertexMask vertices() const;
  bool covers(Vertex v) const { return (vertices() & bit(v)) != 0; }
  friend bool operator==(const Matching&, const Matching&) = default;
};

/// A simple graph on a subset of the slots 0..n-1. Deleting vertices keeps
/// the slot count, so vertex identities (and variables) survive.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  /// All n slots present, no edges.
  explicit SimpleGraph(std::size_t n);
  SimpleGraph(std::size_t n, const std::vector<Edge>& edges);

  std::size_t slots() const { return n_; }
  VertexMask vertex_mask() const { return present_; }
  bool has_vertex(Vertex v) const { return v < n_ && (present_ & bit(v)); }
  std::vector<Vertex> vertices() const;

  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }
  bool has_edge(Vertex a, Vertex b) const;
  VertexMask neighbors(Vertex v) const { return adj_[v]; }
  std::size_t degree(Vertex v) const;
  bool is_leaf(Vertex v) const { return degree(v) == 1; }

  /// Same vertex set, edge `e` removed.
  SimpleGraph without_edge(const Edge& e) const;
  /// Keeps only vertices in `keep` (and edges inside it).
  SimpleGraph restricted_to(VertexMask keep) const;

 private:
  void add_edge(const Edge& e);

  std::size_t n_ = 0;
  VertexMask present_ = 0;
  std::vector<Edge> edges_;  // sorted
  std::vector<VertexMask> adj_;
};

/// A vertex-weighted oriented graph D = (V, E, w). Each underlying edge
/// carries exactly one orientation; weights are >= 1.
class WeightedOrientedGraph {
 public:
  WeightedOrientedGraph() = default;
  /// `n` present vertices named "1".."n", weights 1, no edges.
  explicit WeightedOrientedGraph(std::size_t n);
  WeightedOrientedGraph(std::size_t n, const std::vector<Arc>& arcs,
                        const std::vector<Exponent>& weights = {});

  std::size_t slots() const { return n_; }
  VertexMask vertex_mask() const { return present_; }
  bool has_vertex(Vertex v) const { return v < n_ && (present_ & bit(v)); }
  std::vector<Vertex> vertices() const;

  /// Arcs sorted by their underlying edge.
  const std::vector<Arc>& arcs() const { return arcs_; }
  std::optional<Arc> arc_between(Vertex a, Vertex b) const;
  bool is_source(Vertex v) const;
  bool is_unweighted() const;

  Exponent weight(Vertex v) const { return weights_.at(v); }
  const std::vector<Exponent>& weights() const { return weights_; }
  void set_weight(Vertex v, Exponent w);

  const std::vector<std::string>& names() const { return names_; }
  void set_names(std::vector<std::string> names);
  const std::string& name(Vertex v) const { return names_.at(v); }

  /// Adds tail -> head; throws if the underlying edge already exists.
  void add_arc(Vertex tail, Vertex head);

  SimpleGraph underlying() const;

  friend bool operator==(const WeightedOrientedGraph&,
                         const WeightedOrientedGraph&) = default;

 private:
  friend WeightedOrientedGraph induced_subgraph(const WeightedOrientedGraph&,
                                                VertexMask);

  std::size_t n_ = 0;
  VertexMask present_ = 0;
  std::vector<Arc> arcs_;
  std::vector<Exponent> weights_;
  std::vector<std::string> names_;
};

/// Resets the weight of every source (vertex without incoming arcs) to 1.
/// Vertices whose weight changed are appended to `adjusted` when given.
WeightedOrientedGraph normalize_sources(const WeightedOrientedGraph& graph,
                                        std::vector<Vertex>* adjusted = nullptr);

/// D restricted to the vertex set `keep`. Throws if `keep` is not a subset
/// of the present vertices.
WeightedOrientedGraph induced_subgraph(const WeightedOrientedGraph& graph,
                                       VertexMask keep);
/// D \ W: removes the vertices in `removed`.
WeightedOrientedGraph remove_vertices(const WeightedOrientedGraph& graph,
                                      VertexMask removed);
SimpleGraph remove_vertices(const SimpleGraph& graph, VertexMask removed);

bool is_forest(const SimpleGraph& graph);
bool is_forest(const WeightedOrientedGraph& graph);

/// All k-matchings, each once, in lexicographic order of edge indices.
std::vector<Matching> enumerate_matchings(const SimpleGraph& graph,
                                          std::size_t k);

/// Exact matching number; takes the leaf-pruning path on forests.
std::size_t matching_number(const SimpleGraph& graph);
/// Branch-and-bound over vertex choices; exact on any graph.
std::size_t matching_number_exact(const SimpleGraph& graph);
/// Greedy leaf matching; exact on forests only (InvalidArgument otherwise).
std::size_t matching_number_forest(const SimpleGraph& graph);

/// A maximum matching found by the same search as matching_number_exact.
Matching maximum_matching(const SimpleGraph& graph);

/// True iff `e` lies in every maximum matching. Throws if e is not an edge.
bool is_strong_edge(const SimpleGraph& graph, const Edge& e);

/// Outcome of the deterministic search for a distant configuration
/// (a_1, ..., a_t | b, c). For kIsolatedEdge, `leaves` = {a} and b is the
/// other endpoint (a < b); c is unused.
struct DistantConfiguration {
  enum class Kind { kNoEdges, kIsolatedEdge, kConfiguration };

  Kind kind = Kind::kNoEdges;
  std::vector<Vertex> leaves;
  Vertex b = 0;
  Vertex c = 0;

  friend bool operator==(const DistantConfiguration&,
                         const DistantConfiguration&) = default;
};

/// Lowest isolated edge if any; otherwise the configuration centred at the
/// lowest vertex with a leaf neighbour and at most one non-leaf neighbour.
/// Throws InvalidArgument when edges exist but no such vertex does (only
/// possible off forests).
DistantConfiguration find_distant_configuration(const SimpleGraph& graph);

/// Every configuration (a_1..a_t | b, c) where a_1..a_t are all the leaf
/// neighbours of b other than c and every neighbour of b except c is a
/// leaf. When all neighbours of b are leaves, each of them serves as c once.
std::vector<DistantConfiguration> all_distant_configurations(
    const SimpleGraph& graph);

}  // namespace matchpow

#endif  // MATCHPOW_GRAPH_HPP
