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

#include "matchpow/fixtures.hpp"

#include <string>
#include <vector>

namespace matchpow::fixtures {

WeightedOrientedGraph path(std::size_t n) {
  WeightedOrientedGraph g(n);
  for (Vertex v = 0; v + 1 < n; ++v) g.add_arc(v, v + 1);
  return g;
}

WeightedOrientedGraph in_star(std::size_t m, Exponent center_weight) {
  WeightedOrientedGraph g(m);
  for (Vertex v = 0; v + 1 < m; ++v) g.add_arc(v, m - 1);
  g.set_weight(m - 1, center_weight);
  return g;
}

WeightedOrientedGraph seven_vertex_example(Exponent wa, Exponent wb) {
  enum : Vertex { a, b, c, d, e, f, g };
  WeightedOrientedGraph graph(7, {{c, a}, {d, a}, {d, b}, {e, b}, {f, d}, {g, d}});
  graph.set_names({"a", "b", "c", "d", "e", "f", "g"});
  graph.set_weight(a, wa);
  graph.set_weight(b, wb);
  return graph;
}

WeightedOrientedGraph double_star(bool mismatch) {
  enum : Vertex { a1, a2, b, c, e1, e2 };
  WeightedOrientedGraph graph(6);
  graph.set_names({"a1", "a2", "b", "c", "e1", "e2"});
  graph.add_arc(a1, b);
  if (mismatch) {
    graph.add_arc(b, a2);
  } else {
    graph.add_arc(a2, b);
  }
  graph.add_arc(b, c);
  graph.add_arc(c, e1);
  graph.add_arc(c, e2);
  graph.set_weight(b, 2);
  return graph;
}

namespace {

// Leaves of the first star are 0..leaves-1 and its centre is `leaves`; the
// second star follows.
WeightedOrientedGraph two_stars(std::size_t leaves, Exponent w) {
  const std::size_t n = 2 * (leaves + 1);
  WeightedOrientedGraph g(n);
  for (std::size_t s = 0; s < 2; ++s) {
    const Vertex base = s * (leaves + 1);
    for (Vertex v = 0; v < leaves; ++v) g.add_arc(base + v, base + leaves);
    g.set_weight(base + leaves, w);
  }
  return g;
}

}  // namespace

WeightedOrientedGraph two_stars_disjoint(std::size_t leaves, Exponent w) {
  return two_stars(leaves, w);
}

WeightedOrientedGraph two_stars_joined(std::size_t leaves, Exponent w,
                                       bool reversed) {
  WeightedOrientedGraph g = two_stars(leaves, w);
  const Vertex first = leaves, second = 2 * leaves + 1;
  if (reversed) {
    g.add_arc(second, first);
  } else {
    g.add_arc(first, second);
  }
  return g;
}

WeightedOrientedGraph two_stars_shared_leaf(std::size_t leaves, Exponent w) {
  // First star: leaves 0..leaves-1, centre `leaves`; second star reuses
  // leaf 0 and adds leaves-1 own leaves.
  const std::size_t n = 2 * leaves + 1;
  WeightedOrientedGraph g(n);
  const Vertex first = leaves, second = n - 1;
  for (Vertex v = 0; v < leaves; ++v) g.add_arc(v, first);
  g.add_arc(0, second);
  for (Vertex v = leaves + 1; v < second; ++v) g.add_arc(v, second);
  g.set_weight(first, w);
  g.set_weight(second, w);
  return g;
}

}  // namespace matchpow::fixtures
