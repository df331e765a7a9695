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

#include "matchpow/polymatroid.hpp"

#include <algorithm>
#include <vector>

#include "matchpow/errors.hpp"
#include "matchpow/matching_power.hpp"

namespace matchpow {

namespace {

bool has_exchange(const MonomialIdeal& ideal, const Monomial& u,
                  const Monomial& v, std::size_t i) {
  const std::size_t n = ideal.ambient();
  for (std::size_t j = 0; j < n; ++j) {
    if (u[j] >= v[j]) continue;
    Monomial w = u.with(i, u[i] - 1).with(j, u[j] + 1);
    if (ideal.is_minimal_generator(w)) return true;
  }
  return false;
}

}  // namespace

PolymatroidResult is_polymatroidal(const MonomialIdeal& ideal) {
  PolymatroidResult result;
  if (ideal.is_zero() || ideal.is_unit()) {
    result.polymatroidal = result.equigenerated = true;
    return result;
  }
  if (!is_equigenerated(ideal)) return result;
  result.equigenerated = true;
  const auto& gens = ideal.generators();
  // Reverse lexicographic storage order puts x_1-heavy generators first.
  for (auto u = gens.rbegin(); u != gens.rend(); ++u) {
    for (auto v = gens.rbegin(); v != gens.rend(); ++v) {
      if (u == v) continue;
      for (std::size_t i = 0; i < ideal.ambient(); ++i) {
        if ((*u)[i] <= (*v)[i]) continue;
        if (!has_exchange(ideal, *u, *v, i)) {
          result.failure = ExchangeFailure{*u, *v, i};
          return result;
        }
      }
    }
  }
  result.polymatroidal = true;
  return result;
}

bool is_matroidal(const MonomialIdeal& ideal) {
  const auto& gens = ideal.generators();
  const bool squarefree = std::all_of(
      gens.begin(), gens.end(), [](const Monomial& g) { return g.is_squarefree(); });
  return squarefree && is_polymatroidal(ideal).polymatroidal;
}

bool is_valid_exchange_failure(const MonomialIdeal& ideal,
                               const ExchangeFailure& failure) {
  const auto& [u, v, i] = failure;
  if (!ideal.is_minimal_generator(u) || !ideal.is_minimal_generator(v)) {
    return false;
  }
  if (i >= ideal.ambient() || u[i] <= v[i]) return false;
  return !has_exchange(ideal, u, v, i);
}

Vertex exchange_witness_last_power(const SimpleGraph& graph, const Monomial& u,
                                   const Monomial& v, Vertex i) {
  const std::size_t n = graph.slots();
  if (u.ambient() != n || v.ambient() != n || i >= n) {
    throw InvalidArgument("exchange witness: ambient size mismatch");
  }
  if (u[i] <= v[i]) {
    throw InvalidArgument("exchange witness: need deg_i(u) > deg_i(v)");
  }
  WeightedOrientedGraph unweighted(n);
  for (const Edge& e : graph.edges()) unweighted.add_arc(e.u, e.v);
  const std::size_t k = matching_number(graph);

  Matching mu, mv;
  try {
    mu = decompose_generator(unweighted, u, k);
    mv = decompose_generator(unweighted, v, k);
  } catch (const ContractViolation&) {
    throw InvalidArgument(
        "exchange witness: u and v must be generators of the last matching "
        "power");
  }
  constexpr Vertex kNone = kMaxVertices;
  std::vector<Vertex> mate_u(n, kNone), mate_v(n, kNone);
  for (const Edge& e : mu.edges) {
    mate_u[e.u] = e.v;
    mate_u[e.v] = e.u;
  }
  for (const Edge& e : mv.edges) {
    mate_v[e.u] = e.v;
    mate_v[e.v] = e.u;
  }

  Vertex h = mate_u[i];
  for (std::size_t step = 0; step < k; ++step) {
    // h is covered by M_v, otherwise M_v plus e_p would exceed nu(G).
    const Vertex next = mate_v[h];
    if (next == kNone) {
      throw ContractViolation("exchange witness: matching is not maximum");
    }
    if (mate_u[next] == kNone) return next;
    h = mate_u[next];
  }
  throw ContractViolation("exchange witness: walk did not terminate");
}

bool high_exponents_constant(const MonomialIdeal& ideal) {
  const auto& gens = ideal.generators();
  for (std::size_t x = 0; x < ideal.ambient(); ++x) {
    Exponent high = 0;
    for (const Monomial& u : gens) {
      if (u[x] > 1) high = u[x];
    }
    if (high == 0) continue;
    for (const Monomial& u : gens) {
      if (u[x] != high) return false;
    }
  }
  return true;
}

}  // namespace matchpow
