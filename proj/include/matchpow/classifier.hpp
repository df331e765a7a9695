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

#ifndef MATCHPOW_CLASSIFIER_HPP
#define MATCHPOW_CLASSIFIER_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "matchpow/graph.hpp"
#include "matchpow/monomial.hpp"

namespace matchpow {

// Recursive decision procedure for "the last matching power I(D)^[nu] of a
// weighted oriented forest is polymatroidal". Each level peels one distant
// configuration (a_1, ..., a_t | b, c) and recurses on D \ {a, b}, D \ {b}
// and D \ {b, c}, whose matching numbers are nu - 1.

enum class NodeKind {
  kIsolatedEdge,       // I(D)^[nu] = x_{a,b} I(D \ {a,b})^[nu-1]
  kStrongEdge,         // same factorization through a strong edge {a,b}
  kSingleBranch,       // I(D)^[nu] = x_b^delta (x_a1..x_at) I(D\b)^[nu-1]
  kDoubleBranch,       // adds x_b^w(b) x_c I(D \ {b,c})^[nu-1]
  kBaseUnweighted,     // I(D) = I(G): always polymatroidal
  kBaseMatchingOne,    // nu = 1: exchange property checked on I(D) directly
  kRefuted,            // a necessary condition fails at this level
};

std::string to_string(NodeKind kind);
std::optional<NodeKind> node_kind_from_string(const std::string& s);

/// Names of the conditions a kRefuted node can report.
namespace refutation {
inline constexpr const char* kNoEdges = "no-edges";
/// Some leaf a_i of the configuration has weight > 1.
inline constexpr const char* kAlpha = "alpha";
/// Sub-case i: the monomials x_{a_i,b} do not share one b-exponent.
inline constexpr const char* kGamma = "gamma";
/// Sub-case ii: b-exponent != w(b), x_{b,c} != x_c x_b^{w(b)}, or w(c) > 1.
inline constexpr const char* kDelta = "delta";
}  // namespace refutation

struct CertificateNode {
  NodeKind kind = NodeKind::kRefuted;
  bool verdict = false;
  std::size_t matching_number = 0;
  /// Configuration at this level; for kIsolatedEdge leaves = {a}.
  std::vector<Vertex> leaves;
  Vertex b = 0;
  Vertex c = 0;
  /// Common b-exponent of the x_{a_i,b} (kSingleBranch / kDoubleBranch).
  std::optional<Exponent> delta;
  /// kRefuted only.
  std::string label;
  std::string locus;
  std::vector<CertificateNode> children;

  friend bool operator==(const CertificateNode&,
                         const CertificateNode&) = default;
};

struct ClassificationCertificate {
  bool verdict = false;
  CertificateNode root;

  friend bool operator==(const ClassificationCertificate&,
                         const ClassificationCertificate&) = default;
};

/// For a distant configuration (a_1..a_t | b, c) of a forest with nu >= 2:
/// true iff t = 1 and every (nu - 1)-matching of G \ b covers c.
bool strong_edge_criterion_lemma31(const SimpleGraph& graph,
                                   const DistantConfiguration& config);

/// Decides whether I(D)^[nu(D)] is polymatroidal. D must be normalized
/// (sources have weight 1) with a forest as underlying graph.
ClassificationCertificate classify_last_power(const WeightedOrientedGraph& graph);

/// Replays a certificate: recomputes every configuration and condition, and
/// for each positive node checks the claimed factorization of I(D)^[nu] by
/// computing both sides. Throws ContractViolation on malformed input.
bool verify_certificate(const WeightedOrientedGraph& graph,
                        const ClassificationCertificate& certificate);

}  // namespace matchpow

#endif  // MATCHPOW_CLASSIFIER_HPP
