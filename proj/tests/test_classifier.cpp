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


#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "matchpow/classifier.hpp"
#include "matchpow/errors.hpp"
#include "matchpow/fixtures.hpp"
#include "matchpow/harness.hpp"
#include "matchpow/io.hpp"
#include "matchpow/matching_power.hpp"
#include "matchpow/polymatroid.hpp"
#include "oracles.hpp"

using namespace matchpow;
using oracle::ideal;
using oracle::mono;

namespace {

DistantConfiguration config(std::vector<Vertex> leaves, Vertex b, Vertex c) {
  DistantConfiguration conf;
  conf.kind = DistantConfiguration::Kind::kConfiguration;
  conf.leaves = std::move(leaves);
  conf.b = b;
  conf.c = c;
  return conf;
}

// The verdict computed straight from the definition.
bool oracle_verdict(const WeightedOrientedGraph& D) {
  const std::size_t nu = oracle::matching_number(D.underlying());
  const auto P = matching_power(edge_ideal(D), nu);
  return oracle::exchange_property(P);
}

std::size_t depth(const CertificateNode& node) {
  std::size_t d = 0;
  for (const auto& child : node.children) d = std::max(d, depth(child));
  return d + 1;
}

bool contains_kind(const CertificateNode& node, NodeKind kind) {
  if (node.kind == kind) return true;
  for (const auto& child : node.children) {
    if (contains_kind(child, kind)) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("strong_edge_criterion_lemma31") {
  const auto p4 = fixtures::path(4).underlying();
  CHECK(strong_edge_criterion_lemma31(p4, config({0}, 1, 2)));
  const auto ds = fixtures::double_star(false).underlying();
  CHECK_FALSE(strong_edge_criterion_lemma31(ds, config({0, 1}, 2, 3)));
  const SimpleGraph broom(5, {{0, 1}, {1, 2}, {2, 3}, {2, 4}});
  CHECK_FALSE(strong_edge_criterion_lemma31(broom, config({3, 4}, 2, 1)));
  // A star has nu = 1.
  CHECK_THROWS_AS(strong_edge_criterion_lemma31(
                      fixtures::in_star(4, 1).underlying(), config({0, 1}, 3, 2)),
                  InvalidArgument);
}

TEST_CASE("strong edge criterion agrees with the definition") {
  std::size_t checked = 0;
  enumerate_forests(6, 1, [&](const WeightedOrientedGraph& D) {
    const auto G = D.underlying();
    if (matching_number(G) < 2) return;
    for (const auto& conf : all_distant_configurations(G)) {
      if (conf.leaves.size() != 1) continue;
      ++checked;
      CHECK(strong_edge_criterion_lemma31(G, conf) ==
            oracle::strong(G, Edge(conf.leaves[0], conf.b)));
    }
  });
  CHECK(checked > 1000);
}

TEST_CASE("seven-vertex example") {
  const auto D = fixtures::seven_vertex_example();
  const auto cert = classify_last_power(D);
  CHECK(cert.verdict);
  CHECK(cert.root.matching_number == 3);
  CHECK(depth(cert.root) <= 4);
  CHECK(contains_kind(cert.root, NodeKind::kBaseUnweighted));
  CHECK(verify_certificate(D, cert));
  // (a^2 b^2 c d e)(f, g)
  const auto expected =
      ideal(7, {"x1^2*x2^2*x3*x4*x5*x6", "x1^2*x2^2*x3*x4*x5*x7"});
  CHECK(ideal_equals(matching_power(edge_ideal(D), 3), expected));
  CHECK(oracle_verdict(D));
}

TEST_CASE("double star") {
  const auto good = fixtures::double_star(false);
  const auto cert = classify_last_power(good);
  CHECK(cert.verdict);
  CHECK(cert.root.kind == NodeKind::kSingleBranch);
  CHECK(cert.root.b == 2);
  CHECK(cert.root.c == 3);
  REQUIRE(cert.root.delta.has_value());
  CHECK(*cert.root.delta == 2);
  CHECK(verify_certificate(good, cert));
  // I(D)^[2] = b^2 (a1, a2) I(D \ b)^[1], both sides built here.
  const auto lhs = matching_power(edge_ideal(good), 2);
  const auto rest = edge_ideal(remove_vertices(good, bit(2)));
  const auto rhs = scale(ideal_product(ideal(6, {"x1", "x2"}), rest),
                         mono(6, "x3^2"));
  CHECK(ideal_equals(lhs, rhs));
  CHECK(oracle_verdict(good));

  const auto bad = fixtures::double_star(true);
  const auto refuted = classify_last_power(bad);
  CHECK_FALSE(refuted.verdict);
  CHECK(refuted.root.kind == NodeKind::kRefuted);
  CHECK(refuted.root.label == refutation::kGamma);
  CHECK(verify_certificate(bad, refuted));
  CHECK_FALSE(is_equigenerated(matching_power(edge_ideal(bad), 2)));
  CHECK_FALSE(oracle_verdict(bad));
}

TEST_CASE("tampered certificates fail") {
  const auto D = fixtures::double_star(false);
  auto cert = classify_last_power(D);
  cert.root.delta = 1;
  CHECK_FALSE(verify_certificate(D, cert));

  auto flipped = classify_last_power(fixtures::double_star(true));
  flipped.verdict = true;
  flipped.root.verdict = true;
  CHECK_FALSE(verify_certificate(fixtures::double_star(true), flipped));

  auto seven = classify_last_power(fixtures::seven_vertex_example());
  seven.verdict = false;
  CHECK_FALSE(verify_certificate(fixtures::seven_vertex_example(), seven));
}

TEST_CASE("small families") {
  for (Exponent w = 1; w <= 3; ++w) {
    const auto star = fixtures::in_star(4, w);
    const auto cert = classify_last_power(star);
    CHECK(cert.verdict);
    CHECK(verify_certificate(star, cert));
    CHECK(ideal_equals(edge_ideal(star),
                       scale(ideal(4, {"x1", "x2", "x3"}),
                             Monomial::variable(4, 3, w))));
    for (std::size_t leaves = 1; leaves <= 3; ++leaves) {
      const std::vector<WeightedOrientedGraph> family = {
          fixtures::two_stars_disjoint(leaves, w),
          fixtures::two_stars_joined(leaves, w, false),
          fixtures::two_stars_joined(leaves, w, true),
          fixtures::two_stars_shared_leaf(leaves + 1, w)};
      for (const auto& D : family) {
        CHECK(matching_number(D.underlying()) == 2);
        const auto c = classify_last_power(D);
        CHECK(c.verdict);
        CHECK(verify_certificate(D, c));
        CHECK(oracle_verdict(D));
      }
    }
  }
}

TEST_CASE("edgeless graphs are refuted") {
  const WeightedOrientedGraph empty(3);
  const auto cert = classify_last_power(empty);
  CHECK_FALSE(cert.verdict);
  CHECK(cert.root.label == refutation::kNoEdges);
  CHECK(verify_certificate(empty, cert));
}

TEST_CASE("invalid input") {
  WeightedOrientedGraph cycle(3, {{0, 1}, {1, 2}, {2, 0}});
  CHECK_THROWS_AS(classify_last_power(cycle), InvalidArgument);
  WeightedOrientedGraph heavy_source(2, {{0, 1}}, {3, 1});
  CHECK_THROWS_AS(classify_last_power(heavy_source), InvalidArgument);
  CHECK_THROWS_AS(verify_certificate(cycle, ClassificationCertificate{}),
                  ContractViolation);
}

TEST_CASE("certificates survive a JSON round trip") {
  for (const auto& D : {fixtures::seven_vertex_example(),
                        fixtures::double_star(false),
                        fixtures::double_star(true), fixtures::path(6)}) {
    const auto cert = classify_last_power(D);
    const Json doc = Json::parse(certificate_to_json(cert, D).dump());
    const auto back = certificate_from_json(doc, D);
    CHECK(back == cert);
    CHECK(verify_certificate(D, back));
  }
}

TEST_CASE("classifier agrees with the definition on small forests") {
  std::size_t count = 0, accepted = 0;
  enumerate_forests(5, 2, [&](const WeightedOrientedGraph& D) {
    if (D.arcs().empty()) return;
    const auto cert = classify_last_power(D);
    CHECK(cert.verdict == oracle_verdict(D));
    CHECK(verify_certificate(D, cert));
    CHECK(depth(cert.root) <= matching_number(D.underlying()) + 1);
    ++count;
    accepted += cert.verdict;
  });
  CHECK(count > 10000);
  CHECK(accepted > 0);
  CHECK(accepted < count);
}

TEST_CASE("classifier agrees with the definition on larger random forests") {
  for (std::uint64_t i = 0; i < 300; ++i) {
    const auto D = random_weighted_oriented_forest(9, 3, trial_seed(11, i));
    if (D.arcs().empty()) continue;
    const auto cert = classify_last_power(D);
    const auto P =
        matching_power(edge_ideal(D), matching_number(D.underlying()));
    CHECK(cert.verdict == is_polymatroidal(P).polymatroidal);
    CHECK(verify_certificate(D, cert));
  }
}
