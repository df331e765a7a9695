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

// Simplicial complexes and their reduced homology over GF(2) and Q.

#include <gmpxx.h>

#include <algorithm>
#include <bit>
#include <optional>

#include "matchpow/errors.hpp"
#include "matchpow/resolution.hpp"

namespace matchpow {

namespace {

using Face = SimplicialComplex::Face;

bool face_order(Face a, Face b) {
  const int pa = std::popcount(a), pb = std::popcount(b);
  return pa != pb ? pa < pb : a < b;
}

std::size_t rank_gf2(const std::vector<std::vector<long long>>& rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  const std::size_t words = (cols + 63) / 64;
  std::vector<std::vector<std::uint64_t>> m(rows.size(),
                                            std::vector<std::uint64_t>(words));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (rows[r][c] & 1) m[r][c / 64] |= std::uint64_t{1} << (c % 64);
    }
  }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    const std::uint64_t mask = std::uint64_t{1} << (c % 64);
    std::size_t p = rank;
    while (p < m.size() && !(m[p][c / 64] & mask)) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t r = rank + 1; r < m.size(); ++r) {
      if (m[r][c / 64] & mask) {
        for (std::size_t w = c / 64; w < words; ++w) m[r][w] ^= m[rank][w];
      }
    }
    ++rank;
  }
  return rank;
}

// Fraction-free (Bareiss) elimination. Every intermediate entry is a minor of
// the input, so all divisions are exact.
template <class T, class Ops>
std::optional<std::size_t> rank_bareiss(std::vector<std::vector<T>> m,
                                        Ops ops) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m.front().size();
  T prev = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[rank]);
    const T pivot = m[rank][c];
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const T lead = m[r][c];
      for (std::size_t k = c + 1; k < cols; ++k) {
        if (!ops.update(m[r][k], pivot, lead, m[rank][k], prev)) {
          return std::nullopt;
        }
      }
      m[r][c] = 0;
    }
    prev = pivot;
    ++rank;
  }
  return rank;
}

struct CheckedInt64Ops {
  // x <- (x * pivot - lead * y) / prev, failing on overflow.
  bool update(long long& x, long long pivot, long long lead, long long y,
              long long prev) const {
    long long a, b, d;
    if (__builtin_mul_overflow(x, pivot, &a)) return false;
    if (__builtin_mul_overflow(lead, y, &b)) return false;
    if (__builtin_sub_overflow(a, b, &d)) return false;
    x = d / prev;
    return true;
  }
};

struct BigIntOps {
  bool update(mpz_class& x, const mpz_class& pivot, const mpz_class& lead,
              const mpz_class& y, const mpz_class& prev) const {
    x = x * pivot - lead * y;
    mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), prev.get_mpz_t());
    return true;
  }
};

std::size_t rank_rationals(const std::vector<std::vector<long long>>& rows) {
  if (auto r = rank_bareiss(rows, CheckedInt64Ops{})) return *r;
  std::vector<std::vector<mpz_class>> big;
  big.reserve(rows.size());
  for (const auto& row : rows) {
    std::vector<mpz_class> converted;
    converted.reserve(row.size());
    for (long long x : row) converted.emplace_back(static_cast<long>(x));
    big.push_back(std::move(converted));
  }
  return *rank_bareiss(std::move(big), BigIntOps{});
}

}  // namespace

std::string to_string(Field field) {
  return field == Field::kGF2 ? "gf2" : "q";
}

SimplicialComplex::SimplicialComplex(std::vector<std::size_t> ground,
                                     std::vector<Face> faces)
    : ground_(std::move(ground)), faces_(std::move(faces)) {
  if (ground_.size() > 63) {
    throw ResourceError("simplicial complexes are limited to 63 vertices");
  }
  std::sort(faces_.begin(), faces_.end(), face_order);
  faces_.erase(std::unique(faces_.begin(), faces_.end()), faces_.end());
}

SimplicialComplex SimplicialComplex::from_facets(
    std::vector<std::size_t> ground, const std::vector<Face>& facets) {
  std::vector<Face> faces;
  for (Face f : facets) {
    // All submasks of f, including f and 0.
    for (Face s = f;; s = (s - 1) & f) {
      faces.push_back(s);
      if (s == 0) break;
    }
  }
  return SimplicialComplex(std::move(ground), std::move(faces));
}

int SimplicialComplex::dimension() const {
  if (faces_.empty()) return -2;
  return std::popcount(faces_.back()) - 1;
}

std::vector<std::vector<std::size_t>> SimplicialComplex::facets() const {
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t a = 0; a < faces_.size(); ++a) {
    bool maximal = true;
    for (std::size_t b = a + 1; b < faces_.size() && maximal; ++b) {
      if ((faces_[a] & faces_[b]) == faces_[a] && faces_[a] != faces_[b]) {
        maximal = false;
      }
    }
    if (!maximal) continue;
    std::vector<std::size_t> facet;
    for (std::size_t k = 0; k < ground_.size(); ++k) {
      if (faces_[a] & (Face{1} << k)) facet.push_back(ground_[k]);
    }
    out.push_back(std::move(facet));
  }
  return out;
}

std::vector<std::size_t> SimplicialComplex::face_counts() const {
  std::vector<std::size_t> counts(
      static_cast<std::size_t>(dimension() + 2), 0);
  for (Face f : faces_) ++counts[static_cast<std::size_t>(std::popcount(f))];
  return counts;
}

long long reduced_euler_characteristic(const SimplicialComplex& complex) {
  long long chi = 0;
  for (Face f : complex.faces()) {
    chi += (std::popcount(f) % 2 == 1) ? 1 : -1;  // dim = popcount - 1
  }
  return chi;
}

std::size_t matrix_rank(std::vector<std::vector<long long>> rows,
                        Field field) {
  return field == Field::kGF2 ? rank_gf2(rows) : rank_rationals(rows);
}

std::vector<std::size_t> reduced_homology_ranks(const SimplicialComplex& complex,
                                                Field field) {
  if (complex.is_void()) return {};
  const auto counts = complex.face_counts();
  const std::size_t levels = counts.size();  // dimensions -1 .. dim
  // faces() is sorted by size, so level l occupies a contiguous block.
  std::vector<std::size_t> offset(levels + 1, 0);
  for (std::size_t l = 0; l < levels; ++l) offset[l + 1] = offset[l] + counts[l];
  const auto& faces = complex.faces();

  auto index_in_level = [&](std::size_t level, Face f) {
    auto first = faces.begin() + static_cast<long>(offset[level]);
    auto last = faces.begin() + static_cast<long>(offset[level + 1]);
    return static_cast<std::size_t>(std::lower_bound(first, last, f) - first);
  };

  // boundary_rank[l] = rank of the boundary map from level l to level l - 1.
  std::vector<std::size_t> boundary_rank(levels + 1, 0);
  for (std::size_t l = 1; l < levels; ++l) {
    std::vector<std::vector<long long>> m(counts[l - 1],
                                          std::vector<long long>(counts[l], 0));
    for (std::size_t col = 0; col < counts[l]; ++col) {
      const Face f = faces[offset[l] + col];
      int sign = 1;
      for (Face rest = f; rest; rest &= rest - 1) {
        const Face v = rest & -rest;
        m[index_in_level(l - 1, f & ~v)][col] = sign;
        sign = -sign;
      }
    }
    boundary_rank[l] = matrix_rank(std::move(m), field);
  }
  std::vector<std::size_t> ranks(levels);
  for (std::size_t l = 0; l < levels; ++l) {
    ranks[l] = counts[l] - boundary_rank[l] - boundary_rank[l + 1];
  }
  return ranks;
}

}  // namespace matchpow
