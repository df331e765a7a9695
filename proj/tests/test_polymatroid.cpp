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

#include "matchpow/errors.hpp"
#include "matchpow/fixtures.hpp"
#include "matchpow/harness.hpp"
#include "matchpow/matching_power.hpp"
#include "matchpow/polymatroid.hpp"
#include "matchpow/resolution.hpp"
#include "oracles.hpp"

using namespace matchpow;
using oracle::ideal;
using oracle::mono;

TEST_CASE("is_polymatroidal") {
  CHECK(is_polymatroidal(ideal(4, {"x1*x4^2", "x2*x4^2", "x3*x4^2"})));
  const auto r = is_polymatroidal(ideal(4, {"x1*x2", "x3*x4"}));
  CHECK_FALSE(r.polymatroidal);
  CHECK(r.equigenerated);
  REQUIRE(r.failure.has_value());
  CHECK(r.failure->u == mono(4, "x1*x2"));
  CHECK(r.failure->v == mono(4, "x3*x4"));
  CHECK(r.failure->i == 0);
  CHECK(is_valid_exchange_failure(ideal(4, {"x1*x2", "x3*x4"}), *r.failure));
  CHECK(is_polymatroidal(ideal(4, {"x1*x2*x3*x4"})));
  CHECK(is_polymatroidal(MonomialIdeal::zero(3)));
  CHECK(is_polymatroidal(MonomialIdeal::unit(3)));
  const auto mixed = is_polymatroidal(ideal(3, {"x1*x3^2", "x2*x3"}));
  CHECK_FALSE(mixed.polymatroidal);
  CHECK_FALSE(mixed.equigenerated);
  CHECK_FALSE(mixed.failure.has_value());
}

TEST_CASE("is_matroidal") {
  CHECK(is_matroidal(matching_power(edge_ideal(fixtures::path(5)), 2)));
  CHECK_FALSE(is_matroidal(ideal(4, {"x1*x4^2", "x2*x4^2"})));
  CHECK(is_matroidal(matching_power(edge_ideal(fixtures::path(4)), 2)));
}

TEST_CASE("exchange_witness_last_power") {
  const SimpleGraph p5 = fixtures::path(5).underlying();
  CHECK(exchange_witness_last_power(p5, mono(5, "x1*x2*x3*x4"),
                                    mono(5, "x2*x3*x4*x5"), 0) == 4);
  const SimpleGraph p7 = fixtures::path(7).underlying();
  const Monomial u = mono(7, "x1*x2*x3*x4*x5*x6");
  const Vertex j =
      exchange_witness_last_power(p7, u, mono(7, "x2*x3*x4*x5*x6*x7"), 0);
  CHECK(j == 6);
  const auto last = matching_power(edge_ideal(fixtures::path(7)), 3);
  CHECK(last.is_minimal_generator(u.with(0, 0).with(6, 1)));
  // deg_i(u) > deg_i(v) is required.
  CHECK_THROWS_AS(exchange_witness_last_power(p5, mono(5, "x1*x2*x3*x4"),
                                              mono(5, "x2*x3*x4*x5"), 1),
                  InvalidArgument);
}

TEST_CASE("exchange witness is sound on every small graph") {
  std::size_t checked = 0;
  enumerate_simple_graphs(6, [&](const WeightedOrientedGraph& d) {
    const SimpleGraph g = d.underlying();
    const std::size_t nu = matching_number(g);
    if (nu == 0) return;
    const MonomialIdeal last = matching_power(edge_ideal(d), nu);
    for (const auto& u : last.generators()) {
      for (const auto& v : last.generators()) {
        for (Vertex i = 0; i < 6; ++i) {
          if (u[i] <= v[i]) continue;
          const Vertex j = exchange_witness_last_power(g, u, v, i);
          ++checked;
          if (!(u[j] < v[j]) ||
              !last.is_minimal_generator(u.with(i, u[i] - 1).with(j, u[j] + 1))) {
            FAIL("witness fails for graph with ", g.edge_count(), " edges");
          }
        }
      }
    }
  });
  CHECK(checked > 10000);
}

TEST_CASE("exchange check agrees with the definition") {
  Rng rng(31);
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t n = rng.uniform(2, 4);
    std::vector<Monomial> ms;
    const std::size_t count = rng.uniform(1, 6);
    const std::size_t d = rng.uniform(1, 3);
    for (std::size_t m = 0; m < count; ++m) {
      std::vector<Exponent> e(n, 0);
      for (std::size_t k = 0; k < d; ++k) ++e[rng.below(n)];
      ms.emplace_back(e);
    }
    const auto I = minimalize(ms, n);
    const auto r = is_polymatroidal(I);
    CHECK(r.polymatroidal == oracle::exchange_property(I));
    if (r.failure) CHECK(is_valid_exchange_failure(I, *r.failure));
  }
}

TEST_CASE("last matching power of a quadratic monomial ideal") {
  Rng rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = rng.uniform(2, 7);
    std::vector<Monomial> ms;
    const std::size_t count = rng.uniform(1, 8);
    for (std::size_t m = 0; m < count; ++m) {
      std::vector<Exponent> e(n, 0);
      ++e[rng.below(n)];
      ++e[rng.below(n)];
      ms.emplace_back(e);
    }
    const auto I = minimalize(ms, n);
    CHECK(is_polymatroidal(matching_power(I, monomial_grade(I))));
  }
}

TEST_CASE("polymatroidal implies linear implies linearly related") {
  Rng rng(43);
  std::size_t polymatroidal = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const auto D = random_forest(rng.uniform(2, 7), 3, rng);
    const std::size_t nu = matching_number(D.underlying());
    const auto I = edge_ideal(D);
    for (std::size_t k = 1; k <= nu; ++k) {
      const auto P = matching_power(I, k);
      if (P.size() > kDefaultGeneratorCap) continue;
      const bool poly = is_polymatroidal(P).polymatroidal;
      const bool lin = has_linear_resolution(P, Field::kRationals);
      const bool rel = is_linearly_related(P, Field::kRationals);
      polymatroidal += poly;
      if (poly) CHECK(lin);
      if (lin) CHECK(rel);
    }
  }
  CHECK(polymatroidal > 50);
}

TEST_CASE("products of polymatroidal ideals are polymatroidal") {
  Rng rng(47);
  std::vector<MonomialIdeal> pool;
  for (int trial = 0; trial < 200 && pool.size() < 30; ++trial) {
    const auto D = random_forest(rng.uniform(2, 5), 2, rng);
    // Embed into 6 variables so the ideals share an ambient ring.
    std::vector<Exponent> w(6, 1);
    for (Vertex v = 0; v < D.slots(); ++v) w[v] = D.weight(v);
    const WeightedOrientedGraph E(6, D.arcs(), w);
    const auto P = matching_power(edge_ideal(E), matching_number(E.underlying()));
    if (is_polymatroidal(P).polymatroidal && !P.is_unit()) pool.push_back(P);
  }
  REQUIRE(pool.size() >= 10);
  for (std::size_t x = 0; x < pool.size(); ++x) {
    for (std::size_t y = x; y < pool.size(); ++y) {
      CHECK(is_polymatroidal(ideal_product(pool[x], pool[y])));
    }
  }
}

TEST_CASE("high_exponents_constant") {
  CHECK(high_exponents_constant(ideal(4, {"x1*x4^2", "x2*x4^2"})));
  CHECK_FALSE(high_exponents_constant(ideal(4, {"x1*x4^2", "x2*x4*x3"})));
  CHECK(high_exponents_constant(ideal(3, {"x1*x2", "x2*x3"})));
}
