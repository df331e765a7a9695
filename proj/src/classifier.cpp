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

#include "matchpow/classifier.hpp"

#include <algorithm>
#include <array>
#include <utility>

#include "matchpow/errors.hpp"
#include "matchpow/matching_power.hpp"
#include "matchpow/polymatroid.hpp"

namespace matchpow {

namespace {

constexpr std::array<std::pair<NodeKind, const char*>, 7> kKindNames{{
    {NodeKind::kIsolatedEdge, "isolated-edge"},
    {NodeKind::kStrongEdge, "strong-edge"},
    {NodeKind::kSingleBranch, "single-branch"},
    {NodeKind::kDoubleBranch, "double-branch"},
    {NodeKind::kBaseUnweighted, "base-unweighted"},
    {NodeKind::kBaseMatchingOne, "base-matching-one"},
    {NodeKind::kRefuted, "refuted"},
}};

/// D \ W, re-normalized: vertices that become sources get weight 1.
WeightedOrientedGraph delete_vertices(const WeightedOrientedGraph& graph,
                                      VertexMask removed) {
  return normalize_sources(remove_vertices(graph, removed));
}

std::string vertex_label(const WeightedOrientedGraph& graph, Vertex v) {
  return graph.name(v);
}

/// What the per-level conditions say about a configuration. Shared by the
/// classifier and the certificate checker.
struct LevelFacts {
  bool leaves_unit_weight = true;
  std::string heavy_leaf;
  std::vector<Exponent> deltas;   // b-exponent of each x_{a_i,b}
  bool common_delta = true;
  bool single_branch = false;     // nu(G \ {b,c}) < nu - 1
  bool delta_is_wb = true;
  bool bc_monomial_ok = true;     // x_{b,c} = x_c x_b^{w(b)}
  bool c_unit_weight = true;
};

LevelFacts level_facts(const WeightedOrientedGraph& graph,
                       const SimpleGraph& g, std::size_t nu,
                       const DistantConfiguration& config) {
  LevelFacts f;
  const Vertex b = config.b, c = config.c;
  for (Vertex a : config.leaves) {
    if (graph.weight(a) != 1 && f.leaves_unit_weight) {
      f.leaves_unit_weight = false;
      f.heavy_leaf = vertex_label(graph, a);
    }
    f.deltas.push_back(edge_monomial(graph, Edge(a, b))[b]);
  }
  f.common_delta = std::adjacent_find(f.deltas.begin(), f.deltas.end(),
                                      std::not_equal_to<>()) == f.deltas.end();
  f.single_branch =
      matching_number(remove_vertices(g, bit(b) | bit(c))) + 1 < nu;
  f.delta_is_wb = std::all_of(f.deltas.begin(), f.deltas.end(), [&](Exponent d) {
    return d == graph.weight(b);
  });
  const Monomial expected_bc =
      Monomial::variable(graph.slots(), c).with(b, graph.weight(b));
  f.bc_monomial_ok = edge_monomial(graph, Edge(b, c)) == expected_bc;
  f.c_unit_weight = graph.weight(c) == 1;
  return f;
}

CertificateNode refuted(const DistantConfiguration& config, std::size_t nu,
                        const char* label, std::string locus) {
  CertificateNode node;
  node.kind = NodeKind::kRefuted;
  node.matching_number = nu;
  node.leaves = config.leaves;
  node.b = config.b;
  node.c = config.c;
  node.label = label;
  node.locus = std::move(locus);
  return node;
}

std::string delta_locus(const WeightedOrientedGraph& graph,
                        const LevelFacts& f, Vertex b, Vertex c) {
  if (!f.delta_is_wb) {
    return "x_{a_i," + vertex_label(graph, b) + "} has " +
           vertex_label(graph, b) + "-degree below w(" +
           vertex_label(graph, b) + ")";
  }
  if (!f.bc_monomial_ok) {
    return "x_{" + vertex_label(graph, b) + "," + vertex_label(graph, c) +
           "} differs from x_c x_b^w(b)";
  }
  return "w(" + vertex_label(graph, c) + ") > 1";
}

class Classifier {
 public:
  CertificateNode run(const WeightedOrientedGraph& graph) {
    const SimpleGraph g = graph.underlying();
    if (g.edge_count() == 0) {
      return refuted(DistantConfiguration{}, 0, refutation::kNoEdges,
                     "graph has no edges");
    }
    const std::size_t nu = matching_number(g);
    CertificateNode node;
    node.matching_number = nu;
    if (graph.is_unweighted()) {
      node.kind = NodeKind::kBaseUnweighted;
      node.verdict = true;
      return node;
    }
    if (nu == 1) {
      node.kind = NodeKind::kBaseMatchingOne;
      node.verdict = is_polymatroidal(edge_ideal(graph)).polymatroidal;
      return node;
    }
    const DistantConfiguration config = find_distant_configuration(g);
    node.leaves = config.leaves;
    node.b = config.b;
    node.c = config.c;

    if (config.kind == DistantConfiguration::Kind::kIsolatedEdge) {
      node.kind = NodeKind::kIsolatedEdge;
      return with_children(std::move(node), graph,
                           {bit(config.leaves[0]) | bit(config.b)}, nu);
    }
    const Vertex a1 = config.leaves.front();
    if (config.leaves.size() == 1 && is_strong_edge(g, Edge(a1, config.b))) {
      node.kind = NodeKind::kStrongEdge;
      return with_children(std::move(node), graph, {bit(a1) | bit(config.b)},
                           nu);
    }

    const LevelFacts f = level_facts(graph, g, nu, config);
    if (!f.leaves_unit_weight) {
      return refuted(config, nu, refutation::kAlpha,
                     "leaf " + f.heavy_leaf + " has weight > 1");
    }
    if (f.single_branch) {
      if (!f.common_delta) {
        return refuted(config, nu, refutation::kGamma,
                       "x_{a_i,b} have different " +
                           vertex_label(graph, config.b) + "-degrees");
      }
      node.kind = NodeKind::kSingleBranch;
      node.delta = f.deltas.front();
      return with_children(std::move(node), graph, {bit(config.b)}, nu);
    }
    if (!f.delta_is_wb || !f.bc_monomial_ok || !f.c_unit_weight) {
      return refuted(config, nu, refutation::kDelta,
                     delta_locus(graph, f, config.b, config.c));
    }
    node.kind = NodeKind::kDoubleBranch;
    node.delta = graph.weight(config.b);
    return with_children(std::move(node), graph,
                         {bit(config.b), bit(config.b) | bit(config.c)}, nu);
  }

 private:
  CertificateNode with_children(CertificateNode node,
                                const WeightedOrientedGraph& graph,
                                const std::vector<VertexMask>& removals,
                                std::size_t nu) {
    node.verdict = true;
    for (VertexMask removed : removals) {
      CertificateNode child = run(delete_vertices(graph, removed));
      if (child.matching_number + 1 != nu) {
        throw ContractViolation(
            "classifier: sub-forest matching number is not nu - 1");
      }
      node.verdict = node.verdict && child.verdict;
      node.children.push_back(std::move(child));
      // Later branches are irrelevant once one fails.
      if (!node.verdict) break;
    }
    return node;
  }
};

// ---------------------------------------------------------------------------
// Certificate replay

MonomialIdeal last_power(const WeightedOrientedGraph& graph, std::size_t k) {
  return matching_power(edge_ideal(graph), k);
}

class Verifier {
 public:
  bool check(const WeightedOrientedGraph& graph, const CertificateNode& node) {
    const SimpleGraph g = graph.underlying();
    const std::size_t nu = matching_number(g);
    if (node.kind == NodeKind::kRefuted &&
        node.label == refutation::kNoEdges) {
      return g.edge_count() == 0 && !node.verdict && node.children.empty();
    }
    if (g.edge_count() == 0 || node.matching_number != nu) return false;

    switch (node.kind) {
      case NodeKind::kBaseUnweighted:
        return node.verdict && graph.is_unweighted() && node.children.empty();
      case NodeKind::kBaseMatchingOne:
        return nu == 1 && !graph.is_unweighted() && node.children.empty() &&
               node.verdict ==
                   is_polymatroidal(edge_ideal(graph)).polymatroidal;
      default:
        break;
    }
    if (nu < 2 || graph.is_unweighted()) return false;

    const DistantConfiguration config = find_distant_configuration(g);
    if (node.leaves != config.leaves || node.b != config.b ||
        (config.kind == DistantConfiguration::Kind::kConfiguration &&
         node.c != config.c)) {
      return false;
    }
    const Vertex b = config.b;
    const Vertex a1 = config.leaves.front();

    if (config.kind == DistantConfiguration::Kind::kIsolatedEdge ||
        node.kind == NodeKind::kStrongEdge) {
      const bool expected_kind =
          config.kind == DistantConfiguration::Kind::kIsolatedEdge
              ? node.kind == NodeKind::kIsolatedEdge
              : (node.kind == NodeKind::kStrongEdge &&
                 config.leaves.size() == 1 && is_strong_edge(g, Edge(a1, b)));
      if (!expected_kind || node.children.size() != 1) return false;
      const auto child_graph = delete_vertices(graph, bit(a1) | bit(b));
      if (!children_consistent(node, {child_graph})) return false;
      if (!node.verdict) return true;
      const MonomialIdeal rhs =
          scale(last_power(child_graph, nu - 1), edge_monomial(graph, Edge(a1, b)));
      return ideal_equals(last_power(graph, nu), rhs);
    }

    // A configuration whose leaf edge is not strong.
    if (config.leaves.size() == 1 && is_strong_edge(g, Edge(a1, b))) {
      return false;
    }
    const LevelFacts f = level_facts(graph, g, nu, config);
    const Vertex c = config.c;
    const std::size_t n = graph.slots();
    switch (node.kind) {
      case NodeKind::kRefuted:
        if (node.verdict || !node.children.empty()) return false;
        if (node.label == refutation::kAlpha) return !f.leaves_unit_weight;
        if (!f.leaves_unit_weight) return false;
        if (node.label == refutation::kGamma) {
          return f.single_branch && !f.common_delta;
        }
        if (node.label == refutation::kDelta) {
          return !f.single_branch &&
                 (!f.delta_is_wb || !f.bc_monomial_ok || !f.c_unit_weight);
        }
        return false;

      case NodeKind::kSingleBranch: {
        if (!f.leaves_unit_weight || !f.single_branch || !f.common_delta ||
            node.delta != f.deltas.front() || node.children.size() != 1) {
          return false;
        }
        const auto without_b = delete_vertices(graph, bit(b));
        if (!children_consistent(node, {without_b})) return false;
        if (!node.verdict) return true;
        std::vector<Monomial> leaf_vars;
        for (Vertex a : config.leaves) {
          leaf_vars.push_back(Monomial::variable(n, a));
        }
        const MonomialIdeal rhs = scale(
            ideal_product(minimalize(leaf_vars, n),
                          last_power(without_b, nu - 1)),
            Monomial::variable(n, b, *node.delta));
        return ideal_equals(last_power(graph, nu), rhs);
      }

      case NodeKind::kDoubleBranch: {
        if (!f.leaves_unit_weight || f.single_branch || !f.delta_is_wb ||
            !f.bc_monomial_ok || !f.c_unit_weight ||
            node.delta != graph.weight(b) || node.children.empty() ||
            node.children.size() > 2) {
          return false;
        }
        const auto without_b = delete_vertices(graph, bit(b));
        const auto without_bc = delete_vertices(graph, bit(b) | bit(c));
        if (!children_consistent(node, {without_b, without_bc})) return false;
        if (!node.verdict) return true;
        std::vector<Monomial> leaf_vars;
        for (Vertex a : config.leaves) {
          leaf_vars.push_back(Monomial::variable(n, a));
        }
        const MonomialIdeal inner = ideal_sum(
            ideal_product(minimalize(leaf_vars, n),
                          last_power(without_b, nu - 1)),
            scale(last_power(without_bc, nu - 1), Monomial::variable(n, c)));
        const MonomialIdeal rhs =
            scale(inner, Monomial::variable(n, b, graph.weight(b)));
        return ideal_equals(last_power(graph, nu), rhs);
      }

      default:
        return false;
    }
  }

 private:
  // Children are replayed in order; evaluation stops after the first false
  // child, so a negative node may carry fewer children than branches.
  bool children_consistent(const CertificateNode& node,
                           const std::vector<WeightedOrientedGraph>& graphs) {
    if (node.children.size() > graphs.size()) return false;
    bool all = true;
    for (std::size_t k = 0; k < node.children.size(); ++k) {
      if (!all) return false;
      if (!check(graphs[k], node.children[k])) return false;
      all = all && node.children[k].verdict;
    }
    if (node.children.size() < graphs.size() && all) return false;
    return node.verdict == all;
  }
};

}  // namespace

std::string to_string(NodeKind kind) {
  for (const auto& [k, name] : kKindNames) {
    if (k == kind) return name;
  }
  return "unknown";
}

std::optional<NodeKind> node_kind_from_string(const std::string& s) {
  for (const auto& [k, name] : kKindNames) {
    if (s == name) return k;
  }
  return std::nullopt;
}

bool strong_edge_criterion_lemma31(const SimpleGraph& graph,
                                   const DistantConfiguration& config) {
  if (config.kind != DistantConfiguration::Kind::kConfiguration) {
    throw InvalidArgument("strong edge criterion needs a distant configuration");
  }
  const std::size_t nu = matching_number(graph);
  if (nu < 2) throw InvalidArgument("strong edge criterion needs nu >= 2");
  if (config.leaves.size() != 1) return false;
  const SimpleGraph rest = remove_vertices(graph, bit(config.b));
  for (const Matching& m : enumerate_matchings(rest, nu - 1)) {
    if (!m.covers(config.c)) return false;
  }
  return true;
}

ClassificationCertificate classify_last_power(
    const WeightedOrientedGraph& graph) {
  if (!is_forest(graph)) {
    throw InvalidArgument("classify: the underlying graph is not a forest");
  }
  if (!(normalize_sources(graph) == graph)) {
    throw InvalidArgument("classify: sources must have weight 1");
  }
  ClassificationCertificate cert;
  cert.root = Classifier().run(graph);
  cert.verdict = cert.root.verdict;
  return cert;
}

bool verify_certificate(const WeightedOrientedGraph& graph,
                        const ClassificationCertificate& certificate) {
  if (certificate.verdict != certificate.root.verdict) return false;
  if (!is_forest(graph)) {
    throw ContractViolation("verify: the underlying graph is not a forest");
  }
  return Verifier().check(normalize_sources(graph), certificate.root);
}

}  // namespace matchpow
