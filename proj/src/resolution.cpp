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

#include "matchpow/resolution.hpp"

#include <algorithm>
#include <set>

#include "matchpow/errors.hpp"

namespace matchpow {

namespace {

bool entry_less(const BettiEntry& x, const BettiEntry& y) {
  return x.i != y.i ? x.i < y.i : x.degree < y.degree;
}

void require_nonzero(const MonomialIdeal& ideal, const char* what) {
  if (ideal.is_zero()) {
    throw InvalidArgument(std::string(what) + ": the zero ideal is not allowed");
  }
}

}  // namespace

std::vector<Monomial> lcm_lattice(const MonomialIdeal& ideal) {
  require_nonzero(ideal, "lcm_lattice");
  std::set<Monomial> lattice;
  for (const Monomial& g : ideal.generators()) {
    std::vector<Monomial> joins{g};
    for (const Monomial& x : lattice) joins.push_back(x.lcm(g));
    lattice.insert(joins.begin(), joins.end());
  }
  return {lattice.begin(), lattice.end()};
}

SimplicialComplex koszul_complex(const MonomialIdeal& ideal,
                                 const Monomial& a) {
  std::vector<std::size_t> ground = support(a);
  if (ground.size() > kMaxKoszulSupport) {
    throw ResourceError("Koszul complex: support of size " +
                        std::to_string(ground.size()) + " exceeds " +
                        std::to_string(kMaxKoszulSupport));
  }
  using Face = SimplicialComplex::Face;
  const Face all = (Face{1} << ground.size()) - 1;
  // x^a / x_F lies in I iff some generator g | x^a avoids the positions
  // where g and a agree, so the facets are complements of those positions.
  std::vector<Face> tight;
  for (const Monomial& g : ideal.generators()) {
    if (!g.divides(a)) continue;
    Face t = 0;
    for (std::size_t k = 0; k < ground.size(); ++k) {
      if (g[ground[k]] == a[ground[k]]) t |= Face{1} << k;
    }
    tight.push_back(t);
  }
  std::sort(tight.begin(), tight.end());
  tight.erase(std::unique(tight.begin(), tight.end()), tight.end());
  std::vector<Face> facets;
  for (Face t : tight) {
    const bool minimal = std::none_of(tight.begin(), tight.end(), [t](Face s) {
      return s != t && (s & t) == s;
    });
    if (minimal) facets.push_back(all & ~t);
  }
  return SimplicialComplex::from_facets(std::move(ground), facets);
}

BettiTable::BettiTable(std::size_t n, Field field,
                       std::vector<BettiEntry> entries)
    : n_(n), field_(field), entries_(std::move(entries)) {
  std::erase_if(entries_, [](const BettiEntry& e) { return e.rank == 0; });
  std::sort(entries_.begin(), entries_.end(), entry_less);
}

std::size_t BettiTable::at(std::size_t i, const Monomial& a) const {
  const BettiEntry key{i, a, 0};
  auto it = std::lower_bound(entries_.begin(), entries_.end(), key, entry_less);
  if (it != entries_.end() && it->i == i && it->degree == a) return it->rank;
  return 0;
}

std::map<std::pair<std::size_t, std::size_t>, std::size_t> BettiTable::graded()
    const {
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> out;
  for (const BettiEntry& e : entries_) out[{e.i, e.degree.degree()}] += e.rank;
  return out;
}

std::size_t BettiTable::projective_dimension() const {
  std::size_t pd = 0;
  for (const BettiEntry& e : entries_) pd = std::max(pd, e.i);
  return pd;
}

std::size_t BettiTable::regularity() const {
  std::size_t reg = 0;
  for (const BettiEntry& e : entries_) {
    reg = std::max(reg, e.degree.degree() - e.i);
  }
  return reg;
}

std::optional<std::size_t> BettiTable::generation_degree() const {
  std::optional<std::size_t> d;
  for (const BettiEntry& e : entries_) {
    if (e.i != 0) continue;
    if (d && *d != e.degree.degree()) return std::nullopt;
    d = e.degree.degree();
  }
  return d;
}

BettiTable betti_numbers(const MonomialIdeal& ideal, Field field,
                         std::size_t generator_cap) {
  require_nonzero(ideal, "betti_numbers");
  if (ideal.size() > generator_cap) {
    throw ResourceError("betti_numbers: " + std::to_string(ideal.size()) +
                        " generators exceed the cap of " +
                        std::to_string(generator_cap) +
                        " (raise it with --max-generators)");
  }
  std::vector<BettiEntry> entries;
  for (const Monomial& a : lcm_lattice(ideal)) {
    const auto ranks = reduced_homology_ranks(koszul_complex(ideal, a), field);
    // ranks[l] is H~_{l-1}, which contributes to beta_l.
    for (std::size_t l = 0; l < ranks.size(); ++l) {
      if (ranks[l] > 0) entries.push_back({l, a, ranks[l]});
    }
  }
  return BettiTable(ideal.ambient(), field, std::move(entries));
}

bool has_linear_resolution(const BettiTable& table) {
  const auto d = table.generation_degree();
  if (!d) return false;
  return std::all_of(table.entries().begin(), table.entries().end(),
                     [&](const BettiEntry& e) {
                       return e.degree.degree() == e.i + *d;
                     });
}

bool is_linearly_related(const BettiTable& table) {
  const auto d = table.generation_degree();
  if (!d) return false;
  return std::all_of(table.entries().begin(), table.entries().end(),
                     [&](const BettiEntry& e) {
                       return e.i != 1 || e.degree.degree() == *d + 1;
                     });
}

bool has_linear_resolution(const MonomialIdeal& ideal, Field field) {
  require_nonzero(ideal, "has_linear_resolution");
  if (!is_equigenerated(ideal)) return false;
  return has_linear_resolution(betti_numbers(ideal, field));
}

bool is_linearly_related(const MonomialIdeal& ideal, Field field) {
  require_nonzero(ideal, "is_linearly_related");
  if (!is_equigenerated(ideal)) return false;
  return is_linearly_related(betti_numbers(ideal, field));
}

bool is_linearly_related_lcm(const MonomialIdeal& ideal) {
  require_nonzero(ideal, "is_linearly_related_lcm");
  const auto d = is_equigenerated(ideal);
  if (!d) return false;
  const auto& gens = ideal.generators();
  for (const Monomial& a : lcm_lattice(ideal)) {
    if (a.degree() <= *d + 1) continue;
    std::vector<std::size_t> below;
    for (std::size_t g = 0; g < gens.size(); ++g) {
      if (gens[g].divides(a)) below.push_back(g);
    }
    // Flood fill from the first generator.
    std::vector<bool> reached(below.size(), false);
    std::vector<std::size_t> stack{0};
    reached[0] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
      const std::size_t x = stack.back();
      stack.pop_back();
      for (std::size_t y = 0; y < below.size(); ++y) {
        if (reached[y] || gens[below[x]].lcm(gens[below[y]]) == a) continue;
        reached[y] = true;
        ++count;
        stack.push_back(y);
      }
    }
    if (count != below.size()) return false;
  }
  return true;
}

std::size_t regularity(const MonomialIdeal& ideal, Field field) {
  return betti_numbers(ideal, field).regularity();
}

}  // namespace matchpow
