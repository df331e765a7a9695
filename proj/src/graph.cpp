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

#include "matchpow/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "matchpow/errors.hpp"

namespace matchpow {

namespace {

VertexMask full_mask(std::size_t n) {
  return n == kMaxVertices ? ~VertexMask{0} : (bit(n) - 1);
}

void check_slots(std::size_t n) {
  if (n > kMaxVertices) {
    throw ResourceError("graphs are limited to " +
                        std::to_string(kMaxVertices) + " vertices");
  }
}

std::vector<Vertex> mask_vertices(VertexMask m) {
  std::vector<Vertex> out;
  while (m) {
    out.push_back(static_cast<Vertex>(std::countr_zero(m)));
    m &= m - 1;
  }
  return out;
}

Vertex lowest(VertexMask m) { return static_cast<Vertex>(std::countr_zero(m)); }

}  // namespace

VertexMask Matching::vertices() const {
  VertexMask m = 0;
  for (const Edge& e : edges) m |= e.mask();
  return m;
}

// ---------------------------------------------------------------------------
// SimpleGraph

SimpleGraph::SimpleGraph(std::size_t n) : n_(n), adj_(n, 0) {
  check_slots(n);
  present_ = full_mask(n);
}

SimpleGraph::SimpleGraph(std::size_t n, const std::vector<Edge>& edges)
    : SimpleGraph(n) {
  for (const Edge& e : edges) add_edge(e);
  std::sort(edges_.begin(), edges_.end());
}

void SimpleGraph::add_edge(const Edge& e) {
  if (e.u == e.v || !has_vertex(e.u) || !has_vertex(e.v)) {
    throw InvalidArgument("edge endpoints must be two distinct vertices");
  }
  if (adj_[e.u] & bit(e.v)) throw InvalidArgument("duplicate edge");
  adj_[e.u] |= bit(e.v);
  adj_[e.v] |= bit(e.u);
  edges_.push_back(e);
}

std::vector<Vertex> SimpleGraph::vertices() const {
  return mask_vertices(present_);
}

bool SimpleGraph::has_edge(Vertex a, Vertex b) const {
  return a < n_ && b < n_ && (adj_[a] & bit(b));
}

std::size_t SimpleGraph::degree(Vertex v) const {
  return static_cast<std::size_t>(std::popcount(adj_[v]));
}

SimpleGraph SimpleGraph::without_edge(const Edge& e) const {
  SimpleGraph g = *this;
  auto it = std::find(g.edges_.begin(), g.edges_.end(), e);
  if (it == g.edges_.end()) throw InvalidArgument("not an edge of the graph");
  g.edges_.erase(it);
  g.adj_[e.u] &= ~bit(e.v);
  g.adj_[e.v] &= ~bit(e.u);
  return g;
}

SimpleGraph SimpleGraph::restricted_to(VertexMask keep) const {
  if ((keep & ~present_) != 0) {
    throw InvalidArgument("vertex set is not contained in the graph");
  }
  SimpleGraph g;
  g.n_ = n_;
  g.present_ = keep;
  g.adj_.assign(n_, 0);
  for (const Edge& e : edges_) {
    if ((keep & e.mask()) == e.mask()) {
      g.edges_.push_back(e);
      g.adj_[e.u] |= bit(e.v);
      g.adj_[e.v] |= bit(e.u);
    }
  }
  return g;
}

SimpleGraph remove_vertices(const SimpleGraph& graph, VertexMask removed) {
  return graph.restricted_to(graph.vertex_mask() & ~removed);
}

// ---------------------------------------------------------------------------
// WeightedOrientedGraph

WeightedOrientedGraph::WeightedOrientedGraph(std::size_t n)
    : n_(n), weights_(n, 1) {
  check_slots(n);
  present_ = full_mask(n);
  names_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) names_.push_back(std::to_string(i + 1));
}

WeightedOrientedGraph::WeightedOrientedGraph(
    std::size_t n, const std::vector<Arc>& arcs,
    const std::vector<Exponent>& weights)
    : WeightedOrientedGraph(n) {
  for (const Arc& a : arcs) add_arc(a.tail, a.head);
  if (!weights.empty()) {
    if (weights.size() != n) {
      throw InvalidArgument("weight vector length must equal vertex count");
    }
    for (Vertex v = 0; v < n; ++v) set_weight(v, weights[v]);
  }
}

std::vector<Vertex> WeightedOrientedGraph::vertices() const {
  return mask_vertices(present_);
}

void WeightedOrientedGraph::add_arc(Vertex tail, Vertex head) {
  if (tail == head || !has_vertex(tail) || !has_vertex(head)) {
    throw InvalidArgument("arc endpoints must be two distinct vertices");
  }
  if (arc_between(tail, head)) {
    throw InvalidArgument("at most one orientation per underlying edge");
  }
  const Arc arc{tail, head};
  auto pos = std::lower_bound(
      arcs_.begin(), arcs_.end(), arc, [](const Arc& x, const Arc& y) {
        return Edge(x.tail, x.head) < Edge(y.tail, y.head);
      });
  arcs_.insert(pos, arc);
}

std::optional<Arc> WeightedOrientedGraph::arc_between(Vertex a,
                                                       Vertex b) const {
  const Edge target(a, b);
  auto pos = std::lower_bound(
      arcs_.begin(), arcs_.end(), target,
      [](const Arc& x, const Edge& e) { return Edge(x.tail, x.head) < e; });
  if (pos != arcs_.end() && Edge(pos->tail, pos->head) == target) return *pos;
  return std::nullopt;
}

bool WeightedOrientedGraph::is_source(Vertex v) const {
  return std::none_of(arcs_.begin(), arcs_.end(),
                      [v](const Arc& a) { return a.head == v; });
}

bool WeightedOrientedGraph::is_unweighted() const {
  for (const Arc& a : arcs_) {
    if (weights_[a.head] != 1) return false;
  }
  return true;
}

void WeightedOrientedGraph::set_weight(Vertex v, Exponent w) {
  if (w < 1) throw InvalidArgument("weights must be >= 1");
  weights_.at(v) = w;
}

void WeightedOrientedGraph::set_names(std::vector<std::string> names) {
  if (names.size() != n_) {
    throw InvalidArgument("name list length must equal vertex count");
  }
  names_ = std::move(names);
}

SimpleGraph WeightedOrientedGraph::underlying() const {
  std::vector<Edge> edges;
  edges.reserve(arcs_.size());
  for (const Arc& a : arcs_) edges.emplace_back(a.tail, a.head);
  return SimpleGraph(n_, edges).restricted_to(present_);
}

WeightedOrientedGraph normalize_sources(const WeightedOrientedGraph& graph,
                                        std::vector<Vertex>* adjusted) {
  WeightedOrientedGraph out = graph;
  VertexMask heads = 0;
  for (const Arc& a : graph.arcs()) heads |= bit(a.head);
  for (Vertex v = 0; v < graph.slots(); ++v) {
    if ((heads & bit(v)) == 0 && graph.weight(v) != 1) {
      out.set_weight(v, 1);
      if (adjusted) adjusted->push_back(v);
    }
  }
  return out;
}

WeightedOrientedGraph induced_subgraph(const WeightedOrientedGraph& graph,
                                       VertexMask keep) {
  if ((keep & ~graph.present_) != 0) {
    throw InvalidArgument("vertex set is not contained in the graph");
  }
  WeightedOrientedGraph out = graph;
  out.present_ = keep;
  std::erase_if(out.arcs_, [keep](const Arc& a) {
    return (keep & bit(a.tail)) == 0 || (keep & bit(a.head)) == 0;
  });
  return out;
}

WeightedOrientedGraph remove_vertices(const WeightedOrientedGraph& graph,
                                      VertexMask removed) {
  return induced_subgraph(graph, graph.vertex_mask() & ~removed);
}

// ---------------------------------------------------------------------------
// Structure

bool is_forest(const SimpleGraph& graph) {
  std::vector<Vertex> parent(graph.slots());
  std::iota(parent.begin(), parent.end(), Vertex{0});
  auto find = [&](Vertex v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const Edge& e : graph.edges()) {
    const Vertex ru = find(e.u), rv = find(e.v);
    if (ru == rv) return false;
    parent[ru] = rv;
  }
  return true;
}

bool is_forest(const WeightedOrientedGraph& graph) {
  return is_forest(graph.underlying());
}

namespace {

void extend_matchings(const std::vector<Edge>& edges, std::size_t first,
                      std::size_t k, VertexMask used, Matching& current,
                      std::vector<Matching>& out) {
  if (current.size() == k) {
    out.push_back(current);
    return;
  }
  const std::size_t missing = k - current.size();
  for (std::size_t i = first; i + missing <= edges.size(); ++i) {
    if (used & edges[i].mask()) continue;
    current.edges.push_back(edges[i]);
    extend_matchings(edges, i + 1, k, used | edges[i].mask(), current, out);
    current.edges.pop_back();
  }
}

class MatchingSearch {
 public:
  explicit MatchingSearch(const SimpleGraph& g) : g_(g) {}

  Matching run() {
    search(g_.vertex_mask());
    return best_;
  }

 private:
  void search(VertexMask avail) {
    // Vertices without available neighbours can never be matched.
    VertexMask live = 0;
    for (VertexMask m = avail; m; m &= m - 1) {
      const Vertex v = lowest(m);
      if (g_.neighbors(v) & avail) live |= bit(v);
    }
    if (live == 0) {
      if (!found_ || current_.size() > best_.size()) {
        best_ = current_;
        found_ = true;
      }
      return;
    }
    const std::size_t bound =
        current_.size() + static_cast<std::size_t>(std::popcount(live)) / 2;
    if (found_ && bound <= best_.size()) return;
    const Vertex v = lowest(live);
    for (VertexMask nb = g_.neighbors(v) & live; nb; nb &= nb - 1) {
      const Vertex u = lowest(nb);
      current_.edges.emplace_back(v, u);
      search(live & ~bit(v) & ~bit(u));
      current_.edges.pop_back();
    }
    search(live & ~bit(v));
  }

  const SimpleGraph& g_;
  Matching current_;
  Matching best_;
  bool found_ = false;
};

}  // namespace

std::vector<Matching> enumerate_matchings(const SimpleGraph& graph,
                                          std::size_t k) {
  std::vector<Matching> out;
  Matching current;
  extend_matchings(graph.edges(), 0, k, 0, current, out);
  return out;
}

Matching maximum_matching(const SimpleGraph& graph) {
  Matching m = MatchingSearch(graph).run();
  std::sort(m.edges.begin(), m.edges.end());
  return m;
}

std::size_t matching_number_exact(const SimpleGraph& graph) {
  return maximum_matching(graph).size();
}

std::size_t matching_number_forest(const SimpleGraph& graph) {
  if (!is_forest(graph)) {
    throw InvalidArgument("leaf pruning requires a forest");
  }
  std::vector<VertexMask> adj(graph.slots());
  VertexMask alive = 0;
  for (Vertex v : graph.vertices()) {
    adj[v] = graph.neighbors(v);
    if (adj[v]) alive |= bit(v);
  }
  auto remove = [&](Vertex v) {
    for (VertexMask nb = adj[v]; nb; nb &= nb - 1) {
      const Vertex u = lowest(nb);
      adj[u] &= ~bit(v);
      if (adj[u] == 0) alive &= ~bit(u);
    }
    adj[v] = 0;
    alive &= ~bit(v);
  };
  std::size_t count = 0;
  while (alive) {
    // Every nonempty forest has a leaf; matching it to its neighbour is
    // always part of some maximum matching.
    Vertex leaf = kMaxVertices;
    for (VertexMask m = alive; m; m &= m - 1) {
      const Vertex v = lowest(m);
      if (std::popcount(adj[v]) == 1) {
        leaf = v;
        break;
      }
    }
    const Vertex partner = lowest(adj[leaf]);
    remove(leaf);
    remove(partner);
    ++count;
  }
  return count;
}

std::size_t matching_number(const SimpleGraph& graph) {
  if (graph.edge_count() == 0) return 0;
  if (is_forest(graph)) return matching_number_forest(graph);
  return matching_number_exact(graph);
}

bool is_strong_edge(const SimpleGraph& graph, const Edge& e) {
  if (!graph.has_edge(e.u, e.v)) {
    throw InvalidArgument("is_strong_edge: not an edge of the graph");
  }
  return matching_number(graph.without_edge(e)) + 1 == matching_number(graph);
}

DistantConfiguration find_distant_configuration(const SimpleGraph& graph) {
  DistantConfiguration config;
  if (graph.edge_count() == 0) return config;
  for (const Edge& e : graph.edges()) {
    if (graph.is_leaf(e.u) && graph.is_leaf(e.v)) {
      config.kind = DistantConfiguration::Kind::kIsolatedEdge;
      config.leaves = {e.u};
      config.b = e.v;
      return config;
    }
  }
  for (Vertex b : graph.vertices()) {
    std::vector<Vertex> leaf_nbrs;
    std::vector<Vertex> other_nbrs;
    for (VertexMask nb = graph.neighbors(b); nb; nb &= nb - 1) {
      const Vertex u = lowest(nb);
      (graph.is_leaf(u) ? leaf_nbrs : other_nbrs).push_back(u);
    }
    if (leaf_nbrs.empty() || other_nbrs.size() > 1) continue;
    config.kind = DistantConfiguration::Kind::kConfiguration;
    config.b = b;
    if (other_nbrs.empty()) {
      config.c = leaf_nbrs.back();
      leaf_nbrs.pop_back();
    } else {
      config.c = other_nbrs.front();
    }
    config.leaves = std::move(leaf_nbrs);
    return config;
  }
  throw InvalidArgument("graph has edges but no distant leaf (not a forest)");
}

std::vector<DistantConfiguration> all_distant_configurations(
    const SimpleGraph& graph) {
  std::vector<DistantConfiguration> out;
  for (Vertex b : graph.vertices()) {
    std::vector<Vertex> leaf_nbrs;
    std::vector<Vertex> other_nbrs;
    for (VertexMask nb = graph.neighbors(b); nb; nb &= nb - 1) {
      const Vertex u = lowest(nb);
      (graph.is_leaf(u) ? leaf_nbrs : other_nbrs).push_back(u);
    }
    if (leaf_nbrs.empty() || other_nbrs.size() > 1) continue;
    // A leaf b means an isolated edge, which is not a configuration.
    if (leaf_nbrs.size() + other_nbrs.size() < 2) continue;
    if (!other_nbrs.empty()) {
      out.push_back({DistantConfiguration::Kind::kConfiguration, leaf_nbrs, b,
                     other_nbrs.front()});
      continue;
    }
    for (Vertex c : leaf_nbrs) {
      std::vector<Vertex> leaves;
      for (Vertex a : leaf_nbrs) {
        if (a != c) leaves.push_back(a);
      }
      out.push_back({DistantConfiguration::Kind::kConfiguration,
                     std::move(leaves), b, c});
    }
  }
  return out;
}

}  // namespace matchpow
