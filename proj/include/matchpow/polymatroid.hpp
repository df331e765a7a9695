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

#ifndef MATCHPOW_POLYMATROID_HPP
#define MATCHPOW_POLYMATROID_HPP

#include <cstddef>
#include <optional>

#include "matchpow/graph.hpp"
#include "matchpow/monomial.hpp"

namespace matchpow {

/// A pair of generators u, v and a variable i with deg_i(u) > deg_i(v) such
/// that no j with deg_j(u) < deg_j(v) has x_j * u / x_i in G(I).
struct ExchangeFailure {
  Monomial u;
  Monomial v;
  std::size_t i = 0;
};

struct PolymatroidResult {
  bool polymatroidal = false;
  bool equigenerated = false;
  /// Present when the ideal is equigenerated but the exchange property fails.
  std::optional<ExchangeFailure> failure;

  explicit operator bool() const { return polymatroidal; }
};

/// Decides polymatroidality by checking the exchange property over all
/// ordered generator pairs. The zero and unit ideals count as polymatroidal.
PolymatroidResult is_polymatroidal(const MonomialIdeal& ideal);

/// Polymatroidal with squarefree generators.
bool is_matroidal(const MonomialIdeal& ideal);

/// True iff `failure` really refutes the exchange property for `ideal`.
bool is_valid_exchange_failure(const MonomialIdeal& ideal,
                               const ExchangeFailure& failure);

/// For u, v in G(I(G)^[nu(G)]) and deg_i(u) > deg_i(v), walks the
/// alternating path e_1 = {i, h}, f_1 = {h, i_1}, e_2 = {i_1, j_1}, ...
/// between the matchings of u and v until it reaches a vertex i_p outside
/// the matching of u, and returns i_p. Then deg_j(u) < deg_j(v) and
/// x_j * u / x_i is again a generator.
Vertex exchange_witness_last_power(const SimpleGraph& graph, const Monomial& u,
                                   const Monomial& v, Vertex i);

/// True when every variable that appears with exponent r > 1 in some
/// generator appears with exponent exactly r in every generator.
bool high_exponents_constant(const MonomialIdeal& ideal);

}  // namespace matchpow

#endif  // MATCHPOW_POLYMATROID_HPP
