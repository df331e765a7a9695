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

// Named weighted oriented forests used by tests, the acceptance suite and
// the CLI.

#ifndef MATCHPOW_FIXTURES_HPP
#define MATCHPOW_FIXTURES_HPP

#include <cstddef>

#include "matchpow/graph.hpp"

namespace matchpow::fixtures {

/// Path 1-2-...-n, arcs i -> i+1, unit weights.
WeightedOrientedGraph path(std::size_t n);

/// Star on 1..m with arcs i -> m for i < m and w(m) = center_weight.
WeightedOrientedGraph in_star(std::size_t m, Exponent center_weight);

/// Vertices a..g, arcs (c,a),(d,a),(d,b),(e,b),(f,d),(g,d), weights
/// w(a) = wa, w(b) = wb, all others 1. Matching number 3.
WeightedOrientedGraph seven_vertex_example(Exponent wa = 2, Exponent wb = 2);

/// Double star: centres b - c, leaves a1, a2 on b and e1, e2 on c, with
/// arcs (a1,b),(a2,b),(b,c),(c,e1),(c,e2) and w(b) = 2. When
/// `mismatch` is set the second leaf arc is reversed to (b,a2).
WeightedOrientedGraph double_star(bool mismatch);

/// Two disjoint in-stars with `leaves` leaves each and centre weight w.
WeightedOrientedGraph two_stars_disjoint(std::size_t leaves, Exponent w);
/// Two in-stars whose centres are joined by an edge oriented from the first
/// centre to the second, or the other way when `reversed`.
WeightedOrientedGraph two_stars_joined(std::size_t leaves, Exponent w,
                                       bool reversed);
/// Two in-stars sharing one leaf that points into both centres.
WeightedOrientedGraph two_stars_shared_leaf(std::size_t leaves, Exponent w);

}  // namespace matchpow::fixtures

#endif  // MATCHPOW_FIXTURES_HPP
