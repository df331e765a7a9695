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


// Brute-force reference implementations used by the unit tests and the
// acceptance suite. They follow the definitions directly and share no code
// with the library algorithms they check.

#ifndef MATCHPOW_TESTS_ORACLES_HPP
#define MATCHPOW_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "matchpow/graph.hpp"
#include "matchpow/monomial.hpp"

namespace oracle {

using matchpow::Edge;
using matchpow::Exponent;
using matchpow::Monomial;
using matchpow::MonomialIdeal;
using matchpow::SimpleGraph;
using matchpow::Vertex;

/// Parses "x1*x3^2" (1-based) or "1" into a monomial in n variables.
inline Monomial mono(std::size_t n, const std::string& text) {
  std::vector<Exponent> e(n, 0);
  if (text == "1") return Monomial(e);
  std::stringstream ss(text);
  std::string factor;
  while (std::getline(ss, factor, '*')) {
    const auto caret = factor.find('^');
    const std::size_t i = std::stoul(factor.substr(1, caret - 1)) - 1;
    e.at(i) += caret == std::string::npos
                   ? 1
                   : static_cast<Exponent>(std::stoul(factor.substr(caret + 1)));
  }
  return Monomial(e);
}

/// Ideal generated by the listed monomials (minimalized by the library).
inline MonomialIdeal ideal(std::size_t n,
                           const std::vector<std::string>& gens) {
  std::vector<Monomial> ms;
  for (const auto& g : gens) ms.push_back(mono(n, g));
  return matchpow::minimalize(ms, n);
}

/// Set of generators as a plain set, for order-free comparison.
inline std::set<Monomial> gens(const MonomialIdeal& I) {
  return {I.generators().begin(), I.generators().end()};
}

/// Every monomial in n variables with total degree <= d.
inline std::vector<Monomial> monomials_up_to(std::size_t n, std::size_t d) {
  std::vector<Monomial> out;
  std::vector<Exponent> e(n, 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i,
                                                         std::size_t left) {
    if (i == n) {
      out.emplace_back(e);
      return;
    }
    for (std::size_t k = 0; k <= left; ++k) {
      e[i] = static_cast<Exponent>(k);
      rec(i + 1, left - k);
    }
    e[i] = 0;
  };
  rec(0, d);
  return out;
}

/// Membership straight from the definition: some listed generator divides m.
inline bool member(const std::vector<Monomial>& generators, const Monomial& m) {
  for (const auto& g : generators) {
    bool divides = true;
    for (std::size_t i = 0; i < m.ambient(); ++i) {
      if (g[i] > m[i]) divides = false;
    }
    if (divides) return true;
  }
  return false;
}

/// All k-subsets of the edge list that are pairwise disjoint, by subset scan.
inline std::vector<std::vector<Edge>> matchings(const SimpleGraph& g,
                                                std::size_t k) {
  const auto edges = g.edges();
  std::vector<std::vector<Edge>> out;
  const std::size_t m = edges.size();
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << m); ++s) {
    if (static_cast<std::size_t>(std::popcount(s)) != k) continue;
    std::vector<Edge> chosen;
    matchpow::VertexMask used = 0;
    bool ok = true;
    for (std::size_t i = 0; i < m && ok; ++i) {
      if (!((s >> i) & 1)) continue;
      if (used & edges[i].mask()) ok = false;
      used |= edges[i].mask();
      chosen.push_back(edges[i]);
    }
    if (ok) out.push_back(chosen);
  }
  return out;
}

inline std::size_t matching_number(const SimpleGraph& g) {
  std::size_t k = 0;
  while (!matchings(g, k + 1).empty()) ++k;
  return k;
}

/// Strong edge by definition: in every maximum matching.
inline bool strong(const SimpleGraph& g, const Edge& e) {
  for (const auto& m : matchings(g, oracle::matching_number(g))) {
    if (std::find(m.begin(), m.end(), e) == m.end()) return false;
  }
  return true;
}

/// Matching power from k-subsets of generators with pairwise coprime
/// supports, then keep the divisibility-minimal products.
inline std::set<Monomial> matching_power(const MonomialIdeal& I,
                                         std::size_t k) {
  const auto& g = I.generators();
  const std::size_t n = I.ambient();
  std::vector<Monomial> products;
  std::vector<std::size_t> pick;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (pick.size() == k) {
      std::vector<Exponent> e(n, 0);
      for (std::size_t i : pick) {
        for (std::size_t x = 0; x < n; ++x) {
          if (g[i][x] && e[x]) return;
          e[x] += g[i][x];
        }
      }
      products.emplace_back(e);
      return;
    }
    for (std::size_t i = from; i < g.size(); ++i) {
      pick.push_back(i);
      rec(i + 1);
      pick.pop_back();
    }
  };
  rec(0);
  std::set<Monomial> minimal;
  for (const auto& p : products) {
    bool dominated = false;
    for (const auto& q : products) {
      if (q != p && member({q}, p)) dominated = true;
    }
    if (!dominated) minimal.insert(p);
  }
  return minimal;
}

/// The exchange property checked from the definition over every ordered
/// pair and every i, j.
inline bool exchange_property(const MonomialIdeal& I) {
  const auto& g = I.generators();
  if (g.empty()) return true;
  const std::size_t d = g.front().degree();
  for (const auto& u : g) {
    if (u.degree() != d) return false;
  }
  const std::set<Monomial> G(g.begin(), g.end());
  for (const auto& u : g) {
    for (const auto& v : g) {
      for (std::size_t i = 0; i < I.ambient(); ++i) {
        if (u[i] <= v[i]) continue;
        bool found = false;
        for (std::size_t j = 0; j < I.ambient() && !found; ++j) {
          if (u[j] >= v[j]) continue;
          std::vector<Exponent> e(u.exponents().begin(), u.exponents().end());
          --e[i];
          ++e[j];
          found = G.count(Monomial(e)) > 0;
        }
        if (!found) return false;
      }
    }
  }
  return true;
}

/// Alternating sum sum_i (-1)^i beta_{i,a}(I) for every multidegree a, from
/// the Taylor complex: sum over nonempty generator subsets S of
/// (-1)^{|S|+1} at lcm(S).
inline std::map<Monomial, long long> taylor_alternating_sums(
    const MonomialIdeal& I) {
  const auto& g = I.generators();
  std::map<Monomial, long long> out;
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << g.size()); ++s) {
    Monomial l(I.ambient());
    for (std::size_t i = 0; i < g.size(); ++i) {
      if ((s >> i) & 1) l = l.lcm(g[i]);
    }
    out[l] += (std::popcount(s) % 2 == 1) ? 1 : -1;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

}  // namespace oracle

#endif  // MATCHPOW_TESTS_ORACLES_HPP
