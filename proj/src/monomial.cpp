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

#include "matchpow/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "matchpow/errors.hpp"

namespace matchpow {

namespace {

void require_same_ambient(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    std::ostringstream os;
    os << what << ": ambient variable counts differ (" << a << " vs " << b
       << ")";
    throw AmbientMismatch(os.str());
  }
}

}  // namespace

Monomial Monomial::variable(std::size_t n, std::size_t i, Exponent power) {
  if (i >= n) throw InvalidArgument("variable index out of range");
  Monomial m(n);
  m.exps_[i] = power;
  return m;
}

std::size_t Monomial::degree() const {
  return std::accumulate(exps_.begin(), exps_.end(), std::size_t{0});
}

bool Monomial::is_unit() const {
  return std::all_of(exps_.begin(), exps_.end(),
                     [](Exponent e) { return e == 0; });
}

bool Monomial::is_squarefree() const {
  return std::all_of(exps_.begin(), exps_.end(),
                     [](Exponent e) { return e <= 1; });
}

bool Monomial::divides(const Monomial& other) const {
  require_same_ambient(ambient(), other.ambient(), "divides");
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  require_same_ambient(ambient(), other.ambient(), "product");
  Monomial r = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += other.exps_[i];
  return r;
}

Monomial Monomial::lcm(const Monomial& other) const {
  require_same_ambient(ambient(), other.ambient(), "lcm");
  Monomial r = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    r.exps_[i] = std::max(exps_[i], other.exps_[i]);
  }
  return r;
}

Monomial Monomial::gcd(const Monomial& other) const {
  require_same_ambient(ambient(), other.ambient(), "gcd");
  Monomial r = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    r.exps_[i] = std::min(exps_[i], other.exps_[i]);
  }
  return r;
}

Monomial Monomial::quotient(const Monomial& other) const {
  if (!other.divides(*this)) {
    throw InvalidArgument("quotient: divisor does not divide the monomial");
  }
  Monomial r = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] -= other.exps_[i];
  return r;
}

Monomial Monomial::colon(const Monomial& other) const {
  require_same_ambient(ambient(), other.ambient(), "colon");
  Monomial r = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    r.exps_[i] -= std::min(exps_[i], other.exps_[i]);
  }
  return r;
}

Monomial Monomial::with(std::size_t i, Exponent e) const {
  Monomial r = *this;
  r.exps_.at(i) = e;
  return r;
}

std::vector<std::size_t> support(const Monomial& m) {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < m.ambient(); ++i) {
    if (m[i] > 0) s.push_back(i);
  }
  return s;
}

std::string to_string(const Monomial& m, std::span<const std::string> names) {
  std::string out;
  for (std::size_t i = 0; i < m.ambient(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += i < names.size() ? names[i] : "x" + std::to_string(i + 1);
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

std::string to_string(const Monomial& m) { return to_string(m, {}); }

std::ostream& operator<<(std::ostream& os, const Monomial& m) {
  return os << to_string(m);
}

MonomialIdeal MonomialIdeal::unit(std::size_t n) {
  MonomialIdeal ideal(n);
  ideal.gens_.emplace_back(n);
  return ideal;
}

MonomialIdeal MonomialIdeal::principal(const Monomial& m) {
  MonomialIdeal ideal(m.ambient());
  ideal.gens_.push_back(m);
  return ideal;
}

bool MonomialIdeal::contains(const Monomial& m) const {
  require_same_ambient(n_, m.ambient(), "contains");
  return std::any_of(gens_.begin(), gens_.end(),
                     [&](const Monomial& g) { return g.divides(m); });
}

bool MonomialIdeal::is_minimal_generator(const Monomial& m) const {
  return std::binary_search(gens_.begin(), gens_.end(), m);
}

MonomialIdeal minimalize(std::vector<Monomial> candidates, std::size_t n) {
  for (const Monomial& m : candidates) {
    require_same_ambient(m.ambient(), n, "minimalize");
  }
  // Low degree first: a divisor always precedes its proper multiples.
  std::sort(candidates.begin(), candidates.end(),
            [](const Monomial& a, const Monomial& b) {
              const auto da = a.degree(), db = b.degree();
              return da != db ? da < db : a < b;
            });
  candidates.erase(std::unique(candidates.begin(), candidates.end()),
                   candidates.end());
  MonomialIdeal ideal(n);
  for (Monomial& m : candidates) {
    const bool redundant =
        std::any_of(ideal.gens_.begin(), ideal.gens_.end(),
                    [&](const Monomial& g) { return g.divides(m); });
    if (!redundant) ideal.gens_.push_back(std::move(m));
  }
  std::sort(ideal.gens_.begin(), ideal.gens_.end());
  return ideal;
}

MonomialIdeal ideal_product(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ambient(a.ambient(), b.ambient(), "ideal_product");
  std::vector<Monomial> products;
  products.reserve(a.size() * b.size());
  for (const Monomial& u : a.generators()) {
    for (const Monomial& v : b.generators()) products.push_back(u * v);
  }
  return minimalize(std::move(products), a.ambient());
}

MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ambient(a.ambient(), b.ambient(), "ideal_sum");
  std::vector<Monomial> all = a.generators();
  all.insert(all.end(), b.generators().begin(), b.generators().end());
  return minimalize(std::move(all), a.ambient());
}

bool ideal_equals(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ambient(a.ambient(), b.ambient(), "ideal_equals");
  return a == b;
}

MonomialIdeal scale(const MonomialIdeal& ideal, const Monomial& m) {
  return ideal_product(ideal, MonomialIdeal::principal(m));
}

MonomialIdeal colon_by_monomial(const MonomialIdeal& ideal,
                                const Monomial& m) {
  require_same_ambient(ideal.ambient(), m.ambient(), "colon_by_monomial");
  std::vector<Monomial> quotients;
  quotients.reserve(ideal.size());
  for (const Monomial& u : ideal.generators()) quotients.push_back(u.colon(m));
  return minimalize(std::move(quotients), ideal.ambient());
}

std::optional<std::size_t> is_equigenerated(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) {
    throw InvalidArgument("the zero ideal has no generation degree");
  }
  const std::size_t d = ideal.generators().front().degree();
  for (const Monomial& g : ideal.generators()) {
    if (g.degree() != d) return std::nullopt;
  }
  return d;
}

std::ostream& operator<<(std::ostream& os, const MonomialIdeal& ideal) {
  os << '(';
  bool first = true;
  for (const Monomial& g : ideal.generators()) {
    if (!first) os << ", ";
    os << g;
    first = false;
  }
  return os << ')';
}

}  // namespace matchpow
