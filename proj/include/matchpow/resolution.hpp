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

#ifndef MATCHPOW_RESOLUTION_HPP
#define MATCHPOW_RESOLUTION_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "matchpow/monomial.hpp"

namespace matchpow {

enum class Field { kGF2, kRationals };

std::string to_string(Field field);

/// Default bound on |G(I)| for Betti computations.
inline constexpr std::size_t kDefaultGeneratorCap = 14;
/// Koszul complexes are enumerated over subsets of supp(a); this bounds
/// |supp(a)|.
inline constexpr std::size_t kMaxKoszulSupport = 24;

/// A finite simplicial complex on a list of ground vertices. Faces are bit
/// masks over positions in `ground()` and the stored face list is closed
/// under taking subsets. The void complex has no faces at all; the
/// irrelevant complex has only the empty face.
class SimplicialComplex {
 public:
  using Face = std::uint64_t;

  SimplicialComplex() = default;
  /// `faces` must be downward closed; they are sorted by (size, mask).
  SimplicialComplex(std::vector<std::size_t> ground, std::vector<Face> faces);
  /// The downward closure of `facets`.
  static SimplicialComplex from_facets(std::vector<std::size_t> ground,
                                       const std::vector<Face>& facets);

  const std::vector<std::size_t>& ground() const { return ground_; }
  const std::vector<Face>& faces() const { return faces_; }
  bool is_void() const { return faces_.empty(); }
  bool is_irrelevant() const { return faces_.size() == 1 && faces_[0] == 0; }
  /// -2 for the void complex, -1 for the irrelevant complex.
  int dimension() const;
  /// Inclusion-maximal faces, as sorted lists of ground vertices.
  std::vector<std::vector<std::size_t>> facets() const;
  /// f_{-1}, f_0, ..., f_dim.
  std::vector<std::size_t> face_counts() const;

 private:
  std::vector<std::size_t> ground_;
  std::vector<Face> faces_;
};

/// dim H~_d(C; field) for d = -1 .. dim C, indexed by d + 1. Empty for the
/// void complex (all reduced homology vanishes).
std::vector<std::size_t> reduced_homology_ranks(const SimplicialComplex& complex,
                                                Field field);

/// sum_d (-1)^d f_d over d >= -1.
long long reduced_euler_characteristic(const SimplicialComplex& complex);

/// Rank of an integer matrix over GF(2) or Q (exact, fraction-free).
std::size_t matrix_rank(std::vector<std::vector<long long>> rows, Field field);

/// Closure of G(I) under lcm, sorted. Throws on the zero ideal.
std::vector<Monomial> lcm_lattice(const MonomialIdeal& ideal);

/// Upper Koszul complex: { F subset supp(a) : x^a / x_F in I }, with ground
/// set supp(a) in increasing order.
SimplicialComplex koszul_complex(const MonomialIdeal& ideal, const Monomial& a);

struct BettiEntry {
  std::size_t i = 0;
  Monomial degree;
  std::size_t rank = 0;
  friend bool operator==(const BettiEntry&, const BettiEntry&) = default;
};

/// Multigraded Betti numbers of an ideal I (beta_0 counts generators).
class BettiTable {
 public:
  BettiTable() = default;
  BettiTable(std::size_t n, Field field, std::vector<BettiEntry> entries);

  std::size_t ambient() const { return n_; }
  Field field() const { return field_; }
  /// Nonzero entries sorted by (i, degree).
  const std::vector<BettiEntry>& entries() const { return entries_; }
  std::size_t at(std::size_t i, const Monomial& a) const;
  /// beta_{i,j}: totals over multidegrees of total degree j.
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> graded() const;
  std::size_t projective_dimension() const;
  /// max(|a| - i) over nonzero entries.
  std::size_t regularity() const;
  /// Common degree of the beta_0 entries, if there is one.
  std::optional<std::size_t> generation_degree() const;

  friend bool operator==(const BettiTable& a, const BettiTable& b) {
    return a.n_ == b.n_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t n_ = 0;
  Field field_ = Field::kGF2;
  std::vector<BettiEntry> entries_;
};

/// beta_{i,a}(I) = dim H~_{i-1}(K^a(I)) over the lcm lattice. Throws
/// InvalidArgument on the zero ideal and ResourceError above `generator_cap`.
BettiTable betti_numbers(const MonomialIdeal& ideal, Field field = Field::kGF2,
                         std::size_t generator_cap = kDefaultGeneratorCap);

/// Equigenerated in degree d and every beta_{i,a} != 0 has |a| = i + d.
bool has_linear_resolution(const BettiTable& table);
/// Equigenerated in degree d and every beta_{1,a} != 0 has |a| = d + 1.
bool is_linearly_related(const BettiTable& table);

bool has_linear_resolution(const MonomialIdeal& ideal,
                           Field field = Field::kGF2);
bool is_linearly_related(const MonomialIdeal& ideal, Field field = Field::kGF2);
std::size_t regularity(const MonomialIdeal& ideal, Field field = Field::kGF2);

/// Linear relatedness from the lcm lattice alone: beta_{1,a}(I) + 1 is the
/// number of classes of generators dividing x^a under "lcm(u, v) != x^a",
/// so no homology is computed and no generator cap applies. Independent of
/// the field.
bool is_linearly_related_lcm(const MonomialIdeal& ideal);

}  // namespace matchpow

#endif  // MATCHPOW_RESOLUTION_HPP
