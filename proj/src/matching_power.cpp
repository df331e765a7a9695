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

#include "matchpow/matching_power.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "matchpow/errors.hpp"

namespace matchpow {

namespace {

/// Fixed-width bitset sized at runtime; used both for variable supports and
/// for sets of generator indices.
class Bits {
 public:
  Bits() = default;
  explicit Bits(std::size_t size) : words_((size + 63) / 64, 0) {}

  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool intersects(const Bits& other) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      if (words_[w] & other.words_[w]) return true;
    }
    return false;
  }
  Bits operator&(const Bits& other) const {
    Bits r = *this;
    for (std::size_t w = 0; w < words_.size(); ++w) r.words_[w] &= other.words_[w];
    return r;
  }
  std::size_t count() const {
    std::size_t c = 0;
    for (std::uint64_t w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      for (std::uint64_t x = words_[w]; x; x &= x - 1) {
        f(w * 64 + static_cast<std::size_t>(std::countr_zero(x)));
      }
    }
  }

 private:
  std::vector<std::uint64_t> words_;
};

/// Generators of an ideal together with the "disjoint support" relation,
/// restricted to later indices so each clique is visited once.
struct DisjointnessGraph {
  explicit DisjointnessGraph(const MonomialIdeal& ideal)
      : gens(ideal.generators()) {
    const std::size_t m = gens.size();
    std::vector<Bits> supports;
    supports.reserve(m);
    for (const Monomial& g : gens) {
      Bits s(ideal.ambient());
      for (std::size_t v : support(g)) s.set(v);
      supports.push_back(std::move(s));
    }
    later.assign(m, Bits(m));
    all = Bits(m);
    for (std::size_t i = 0; i < m; ++i) {
      all.set(i);
      for (std::size_t j = i + 1; j < m; ++j) {
        if (!supports[i].intersects(supports[j])) later[i].set(j);
      }
    }
  }

  const std::vector<Monomial>& gens;
  std::vector<Bits> later;
  Bits all;
};

void collect_products(const DisjointnessGraph& dg, const Bits& candidates,
                      std::size_t remaining, const Monomial& product,
                      std::vector<Monomial>& out) {
  if (remaining == 0) {
    out.push_back(product);
    return;
  }
  if (candidates.count() < remaining) return;
  candidates.for_each([&](std::size_t i) {
    collect_products(dg, candidates & dg.later[i], remaining - 1,
                     product * dg.gens[i], out);
  });
}

std::size_t max_clique(const DisjointnessGraph& dg, const Bits& candidates,
                       std::size_t size, std::size_t best) {
  best = std::max(best, size);
  if (size + candidates.count() <= best) return best;
  candidates.for_each([&](std::size_t i) {
    best = std::max(best, max_clique(dg, candidates & dg.later[i], size + 1,
                                     best));
  });
  return best;
}

bool decompose(const WeightedOrientedGraph& graph, const std::vector<Edge>& edges,
               const std::vector<Monomial>& monos, std::size_t first,
               std::size_t k, VertexMask used, const Monomial& remainder,
               Matching& current) {
  if (current.size() == k) return remainder.is_unit();
  for (std::size_t i = first; i < edges.size(); ++i) {
    if (used & edges[i].mask()) continue;
    if (!monos[i].divides(remainder)) continue;
    current.edges.push_back(edges[i]);
    if (decompose(graph, edges, monos, i + 1, k, used | edges[i].mask(),
                  remainder.quotient(monos[i]), current)) {
      return true;
    }
    current.edges.pop_back();
  }
  return false;
}

}  // namespace

Monomial edge_monomial(const WeightedOrientedGraph& graph, const Edge& e) {
  const auto arc = graph.arc_between(e.u, e.v);
  if (!arc || !graph.has_vertex(e.u) || !graph.has_vertex(e.v)) {
    throw InvalidArgument("edge_monomial: not an edge of the graph");
  }
  Monomial m = Monomial::variable(graph.slots(), arc->tail);
  return m.with(arc->head, graph.weight(arc->head));
}

MonomialIdeal edge_ideal(const WeightedOrientedGraph& graph) {
  std::vector<Monomial> gens;
  gens.reserve(graph.arcs().size());
  for (const Arc& a : graph.arcs()) {
    gens.push_back(edge_monomial(graph, Edge(a.tail, a.head)));
  }
  return minimalize(std::move(gens), graph.slots());
}

MonomialIdeal matching_power(const MonomialIdeal& ideal, std::size_t k) {
  if (k == 0) return MonomialIdeal::unit(ideal.ambient());
  if (ideal.is_zero()) return ideal;
  const DisjointnessGraph dg(ideal);
  std::vector<Monomial> products;
  collect_products(dg, dg.all, k, Monomial(ideal.ambient()), products);
  return minimalize(std::move(products), ideal.ambient());
}

MonomialIdeal matching_power_from_matchings(const WeightedOrientedGraph& graph,
                                            std::size_t k) {
  std::vector<Monomial> products;
  for (const Matching& m : enumerate_matchings(graph.underlying(), k)) {
    Monomial p(graph.slots());
    for (const Edge& e : m.edges) p = p * edge_monomial(graph, e);
    products.push_back(std::move(p));
  }
  return minimalize(std::move(products), graph.slots());
}

std::size_t monomial_grade(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) {
    throw InvalidArgument("monomial grade of the zero ideal is undefined");
  }
  const DisjointnessGraph dg(ideal);
  return max_clique(dg, dg.all, 0, 0);
}

Matching decompose_generator(const WeightedOrientedGraph& graph,
                             const Monomial& u, std::size_t k) {
  const SimpleGraph g = graph.underlying();
  std::vector<Monomial> monos;
  monos.reserve(g.edge_count());
  for (const Edge& e : g.edges()) monos.push_back(edge_monomial(graph, e));
  Matching current;
  if (!decompose(graph, g.edges(), monos, 0, k, 0, u, current)) {
    throw ContractViolation("decompose_generator: " + to_string(u) +
                            " is not a product of a " + std::to_string(k) +
                            "-matching");
  }
  return current;
}

}  // namespace matchpow
