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

#ifndef MATCHPOW_MATCHING_POWER_HPP
#define MATCHPOW_MATCHING_POWER_HPP

#include <cstddef>

#include "matchpow/graph.hpp"
#include "matchpow/monomial.hpp"

namespace matchpow {

/// x_a * x_b^{w(b)} for the arc (a, b) underlying `e`.
/// Throws InvalidArgument if e is not an edge of the graph.
Monomial edge_monomial(const WeightedOrientedGraph& graph, const Edge& e);

/// I(D) = (x_i x_j^{w_j} : (i, j) in E(D)). Zero ideal for edgeless graphs.
MonomialIdeal edge_ideal(const WeightedOrientedGraph& graph);

/// The k-th matching power I^[k]: generated by products of k minimal
/// generators with pairwise disjoint supports. I^[0] is the unit ideal and
/// I^[k] = 0 for k > nu(I).
MonomialIdeal matching_power(const MonomialIdeal& ideal, std::size_t k);

/// I(D)^[k] built from enumerate_matchings instead of generator subsets.
MonomialIdeal matching_power_from_matchings(const WeightedOrientedGraph& graph,
                                            std::size_t k);

/// nu(I): the largest number of generators with pairwise disjoint supports.
/// Throws InvalidArgument on the zero ideal.
std::size_t monomial_grade(const MonomialIdeal& ideal);

/// A k-matching whose edge monomials multiply to u, first in edge order.
/// Throws ContractViolation if none exists.
Matching decompose_generator(const WeightedOrientedGraph& graph,
                             const Monomial& u, std::size_t k);

}  // namespace matchpow

#endif  // MATCHPOW_MATCHING_POWER_HPP
