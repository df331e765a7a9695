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

#ifndef MATCHPOW_HARNESS_HPP
#define MATCHPOW_HARNESS_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "matchpow/graph.hpp"
#include "matchpow/io.hpp"
#include "matchpow/resolution.hpp"
#include "matchpow/rng.hpp"

namespace matchpow {

// ---------------------------------------------------------------------------
// Instance generation

/// A forest on n vertices: vertex 1 attaches to vertex 0, every later vertex
/// either starts a new component (probability 1/(v+1)) or attaches to a
/// uniformly chosen earlier vertex. Each edge gets a random orientation,
/// each vertex a weight in [1, w_max]; sources are then normalized.
WeightedOrientedGraph random_forest(std::size_t n, Exponent w_max, Rng& rng);

/// random_forest with n drawn uniformly from [2, n_max]. Deterministic per
/// seed.
WeightedOrientedGraph random_weighted_oriented_forest(std::size_t n_max,
                                                      Exponent w_max,
                                                      std::uint64_t seed);

/// Erdos-Renyi G(n, p) as an unweighted oriented graph (arcs low -> high).
WeightedOrientedGraph random_simple_graph(std::size_t n, double p, Rng& rng);

using GraphVisitor = std::function<void(const WeightedOrientedGraph&)>;

/// Largest n accepted by the exhaustive enumerators.
inline constexpr std::size_t kMaxEnumerationVertices = 7;

/// Every labeled forest on vertex set {1..n_max} (so every forest on at most
/// n_max vertices, padded with isolated vertices), in every orientation and
/// with every weight assignment in [1, w_max] on non-sources. Sources keep
/// weight 1. `shard`/`shards` split the work by edge subset.
void enumerate_forests(std::size_t n_max, Exponent w_max,
                       const GraphVisitor& visit, std::size_t shard = 0,
                       std::size_t shards = 1);

/// Every edge subset of the complete graph on n vertices.
void enumerate_simple_graphs(std::size_t n, const GraphVisitor& visit,
                             std::size_t shard = 0, std::size_t shards = 1);

struct ConstructorStats {
  std::size_t attempts = 0;
  std::size_t rejected = 0;
};

/// Builds weighted oriented forests with matching number `target_nu` whose
/// last matching power is polymatroidal, by starting from stars and
/// repeatedly adding an isolated edge, a pendant path through a strong edge,
/// or a new distant configuration grafted onto an existing or new vertex.
/// Every emitted instance is accepted by classify_last_power; distinct
/// instances only, at most `budget` of them.
std::vector<WeightedOrientedGraph> construct_linear_forests(
    std::size_t target_nu, std::size_t budget, std::uint64_t seed = 0,
    Exponent w_max = 2, ConstructorStats* stats = nullptr);

/// Isomorphism of weighted oriented graphs (orientation and weights
/// preserved). Brute force; intended for at most ~9 vertices.
bool are_isomorphic(const WeightedOrientedGraph& x,
                    const WeightedOrientedGraph& y);

// ---------------------------------------------------------------------------
// Cross-validation

struct OracleOptions {
  Field field = Field::kRationals;
  /// Also compute the GF(2) table and compare.
  bool dual_field = false;
  std::size_t betti_generator_cap = kDefaultGeneratorCap;
  /// Exchange oracle skipped above this many ordered generator pairs.
  std::size_t exchange_pair_cap = 4000;
};

struct TrialReport {
  std::size_t index = 0;
  std::uint64_t seed = 0;
  WeightedOrientedGraph graph;
  std::size_t matching_number = 0;
  std::size_t generators = 0;
  bool unweighted = false;

  std::optional<bool> linearly_related;   // (a)
  std::optional<bool> polymatroidal;      // (b)
  std::optional<bool> linear_resolution;  // (c)
  bool classifier = false;                // (d)

  bool betti_skipped = false;
  bool exchange_skipped = false;
  /// Set when dual_field ran; false marks a characteristic-dependence
  /// specimen.
  std::optional<bool> fields_agree;

  double power_ms = 0;
  double exchange_ms = 0;
  double betti_ms = 0;
  double classify_ms = 0;

  /// All computed verdicts equal.
  bool agreement = false;
};

/// Computes I(D)^[nu], the three oracle verdicts and the classifier verdict.
TrialReport cross_validate(const WeightedOrientedGraph& graph,
                           const OracleOptions& options = {});

OrderedJson report_to_json(const TrialReport& report);

struct CorpusSummary {
  std::size_t enumerated = 0;  // every labeled instance visited
  std::size_t considered = 0;  // nu >= 2 and I(D) != I(G)
  std::size_t agreements = 0;
  std::size_t accepted = 0;    // classifier verdict true
  std::size_t betti_skipped = 0;
  std::size_t exchange_skipped = 0;
  std::size_t field_mismatches = 0;
  std::vector<TrialReport> disagreements;  // enumeration order
};

/// Cross-validates every instance of enumerate_forests(n_max, w_max) with
/// matching number >= 2 and a weight above 1 on some non-source. `inspect`,
/// if set, sees every considered instance and its report; it runs on worker
/// threads and must be thread-safe.
CorpusSummary run_forest_corpus(
    std::size_t n_max, Exponent w_max, const OracleOptions& options,
    std::size_t workers,
    const std::function<void(const TrialReport&)>& inspect = {});

OrderedJson corpus_summary_to_json(const CorpusSummary& summary);

/// A random weighted oriented graph D, an induced subgraph D' and a k with
/// I(D')^[k] != 0, together with the monotonicity checks of beta_{i,a} and
/// regularity from D' to D.
struct InducedSubgraphTrial {
  std::uint64_t seed = 0;
  WeightedOrientedGraph graph;
  WeightedOrientedGraph sub;
  std::size_t k = 0;
  bool betti_monotone = false;
  bool regularity_monotone = false;
  std::size_t regularity_graph = 0;
  std::size_t regularity_sub = 0;
};

/// Draws graphs until I(D)^[k] is within the Betti cap. Half the draws are
/// forests, half general graphs; n in [3, 7], weights in [1, 3].
InducedSubgraphTrial run_induced_subgraph_trial(
    std::uint64_t seed, Field field = Field::kRationals,
    std::size_t generator_cap = kDefaultGeneratorCap);

OrderedJson induced_trial_to_json(const InducedSubgraphTrial& trial);

/// One Erdos-Renyi trial for the last-power polymatroid property: n in
/// [2, max_n], edge probability 0.2 for even indices and 0.4 for odd ones.
/// Graphs without edges are redrawn.
struct LastPowerTrial {
  std::uint64_t seed = 0;
  double p = 0;
  WeightedOrientedGraph graph;
  std::size_t matching_number = 0;
  std::size_t generators = 0;
  bool polymatroidal = false;
};

LastPowerTrial run_last_power_trial(std::uint64_t seed, std::size_t index,
                                    std::size_t max_n);

OrderedJson last_power_trial_to_json(const LastPowerTrial& trial);

// ---------------------------------------------------------------------------
// Parallel execution

/// Worker count from MATCHPOW_WORKERS, else hardware concurrency (>= 1).
std::size_t default_worker_count();

/// Runs task(0..count-1) on `workers` threads; results keep index order.
template <class Result>
std::vector<Result> parallel_map(std::size_t count, std::size_t workers,
                                 const std::function<Result(std::size_t)>& task);

/// Runs shard(0..shards-1) on `workers` threads.
void parallel_shards(std::size_t shards, std::size_t workers,
                     const std::function<void(std::size_t)>& shard);

}  // namespace matchpow

#include "matchpow/harness_inl.hpp"

#endif  // MATCHPOW_HARNESS_HPP
