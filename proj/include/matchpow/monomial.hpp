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

#ifndef MATCHPOW_MONOMIAL_HPP
#define MATCHPOW_MONOMIAL_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace matchpow {

using Exponent = std::uint32_t;

/// A monomial x^a in a polynomial ring with a fixed number of variables,
/// stored as its exponent vector. The all-zeros vector is the monomial 1.
class Monomial {
 public:
  Monomial() = default;
  /// The unit monomial in `n` variables.
  explicit Monomial(std::size_t n) : exps_(n, 0) {}
  explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {}
  Monomial(std::initializer_list<Exponent> exps) : exps_(exps) {}

  /// x_i^power in `n` variables (0-based index).
  static Monomial variable(std::size_t n, std::size_t i, Exponent power = 1);

  std::size_t ambient() const { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  std::span<const Exponent> exponents() const { return exps_; }

  std::size_t degree() const;
  bool is_unit() const;
  bool is_squarefree() const;

  /// True iff this monomial divides `other`.
  bool divides(const Monomial& other) const;

  Monomial operator*(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  Monomial gcd(const Monomial& other) const;
  /// this / other; throws InvalidArgument unless `other` divides this.
  Monomial quotient(const Monomial& other) const;
  /// this / gcd(this, other), the generator of (this) : other.
  Monomial colon(const Monomial& other) const;

  /// Copy with the exponent of variable i replaced.
  Monomial with(std::size_t i, Exponent e) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  /// Lexicographic on exponent vectors.
  friend auto operator<=>(const Monomial& a, const Monomial& b) {
    return a.exps_ <=> b.exps_;
  }

 private:
  std::vector<Exponent> exps_;
};

/// Indices (0-based) of variables with positive exponent.
std::vector<std::size_t> support(const Monomial& m);

/// Renders e.g. "x1*x3^2" with 1-based variable names, or "1".
std::string to_string(const Monomial& m);
std::string to_string(const Monomial& m, std::span<const std::string> names);
std::ostream& operator<<(std::ostream& os, const Monomial& m);

/// A monomial ideal given by its minimal generating set G(I), kept sorted
/// lexicographically so equality is structural. The zero ideal has no
/// generators; the unit ideal is generated by 1.
class MonomialIdeal {
 public:
  /// The zero ideal in `n` variables.
  explicit MonomialIdeal(std::size_t n = 0) : n_(n) {}

  static MonomialIdeal zero(std::size_t n) { return MonomialIdeal(n); }
  static MonomialIdeal unit(std::size_t n);
  static MonomialIdeal principal(const Monomial& m);

  std::size_t ambient() const { return n_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_.front().is_unit(); }

  /// Membership: some generator divides m.
  bool contains(const Monomial& m) const;
  /// True iff m is one of the minimal generators.
  bool is_minimal_generator(const Monomial& m) const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  friend MonomialIdeal minimalize(std::vector<Monomial> candidates,
                                  std::size_t n);

  std::size_t n_ = 0;
  std::vector<Monomial> gens_;
};

/// The ideal generated by `candidates`, reduced to its divisibility-minimal
/// elements. Throws AmbientMismatch if a candidate has length != n.
MonomialIdeal minimalize(std::vector<Monomial> candidates, std::size_t n);

MonomialIdeal ideal_product(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b);
bool ideal_equals(const MonomialIdeal& a, const MonomialIdeal& b);
/// m * I.
MonomialIdeal scale(const MonomialIdeal& ideal, const Monomial& m);
MonomialIdeal colon_by_monomial(const MonomialIdeal& ideal, const Monomial& m);

/// The common degree of all generators, or nullopt if they differ.
/// Throws InvalidArgument on the zero ideal.
std::optional<std::size_t> is_equigenerated(const MonomialIdeal& ideal);

std::ostream& operator<<(std::ostream& os, const MonomialIdeal& ideal);

}  // namespace matchpow

#endif  // MATCHPOW_MONOMIAL_HPP
