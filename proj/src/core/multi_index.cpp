/*
 *   Copyright 2026 The cartanh Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "cartanh/multi_index.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>
#include <vector>

#include "cartanh/scalar.hpp"

namespace cartanh {

MultiIndex::MultiIndex(int rank) {
  if (rank < 1 || rank > kMaxRank) {
    throw std::invalid_argument("rank must be in [1, " + std::to_string(kMaxRank) + "]");
  }
  rank_ = static_cast<std::uint8_t>(rank);
}

MultiIndex::MultiIndex(int rank, std::initializer_list<int> components) : MultiIndex(rank) {
  if (static_cast<int>(components.size()) != 2 * rank) {
    throw std::invalid_argument("multi-index needs exactly 2n components");
  }
  int i = 0;
  for (int v : components) set_flat(i++, v);
}

MultiIndex MultiIndex::unit(int rank, int signed_pos) {
  MultiIndex a(rank);
  a.set(signed_pos, 1);
  return a;
}

MultiIndex MultiIndex::constant(int rank, int value) {
  MultiIndex a(rank);
  for (int i = 0; i < a.size(); ++i) a.set_flat(i, value);
  return a;
}

std::size_t MultiIndex::flat_of(int signed_pos) const {
  if (signed_pos == 0 || signed_pos > rank_ || signed_pos < -rank_) {
    throw std::out_of_range("signed position " + std::to_string(signed_pos) +
                            " outside rank " + std::to_string(rank_));
  }
  return static_cast<std::size_t>(signed_pos < 0 ? -signed_pos - 1 : rank_ + signed_pos - 1);
}

void MultiIndex::set(int signed_pos, int value) {
  c_[flat_of(signed_pos)] = static_cast<std::int16_t>(value);
}

void MultiIndex::set_flat(int flat, int value) {
  if (flat < 0 || flat >= size()) throw std::out_of_range("flat position out of range");
  c_[static_cast<std::size_t>(flat)] = static_cast<std::int16_t>(value);
}

int MultiIndex::degree() const {
  int d = 0;
  for (int i = 0; i < size(); ++i) d += c_[i];
  return d;
}

bool MultiIndex::is_zero() const {
  return std::all_of(c_.begin(), c_.begin() + size(), [](auto v) { return v == 0; });
}

bool MultiIndex::is_nonnegative() const {
  return std::all_of(c_.begin(), c_.begin() + size(), [](auto v) { return v >= 0; });
}

int MultiIndex::max_component() const {
  return size() == 0 ? 0 : *std::max_element(c_.begin(), c_.begin() + size());
}

int MultiIndex::min_component() const {
  return size() == 0 ? 0 : *std::min_element(c_.begin(), c_.begin() + size());
}

MultiIndex& MultiIndex::operator+=(const MultiIndex& o) {
  if (o.rank_ != rank_) throw std::invalid_argument("multi-index rank mismatch");
  for (int i = 0; i < size(); ++i) c_[i] = static_cast<std::int16_t>(c_[i] + o.c_[i]);
  return *this;
}

MultiIndex& MultiIndex::operator-=(const MultiIndex& o) {
  if (o.rank_ != rank_) throw std::invalid_argument("multi-index rank mismatch");
  for (int i = 0; i < size(); ++i) c_[i] = static_cast<std::int16_t>(c_[i] - o.c_[i]);
  return *this;
}

MultiIndex operator*(int s, MultiIndex a) {
  for (int i = 0; i < a.size(); ++i) a.c_[i] = static_cast<std::int16_t>(s * a.c_[i]);
  return a;
}

std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b) {
  if (auto c = a.rank_ <=> b.rank_; c != 0) return c;
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  for (int i = 0; i < a.size(); ++i) {
    if (auto c = a.c_[i] <=> b.c_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::size_t MultiIndex::hash() const {
  std::size_t h = rank_;
  for (int i = 0; i < size(); ++i) hash_combine(h, static_cast<std::size_t>(c_[i] + 0x8000));
  return h;
}

std::string MultiIndex::to_string() const {
  std::string s;
  for (int i = 0; i < size(); ++i) {
    if (i == rank_) {
      s += ';';
    } else if (i > 0) {
      s += ',';
    }
    s += std::to_string(c_[i]);
  }
  return s;
}

MultiIndex MultiIndex::parse(std::string_view text) {
  auto semi = text.find(';');
  if (semi == std::string_view::npos || text.find(';', semi + 1) != std::string_view::npos) {
    throw std::invalid_argument("multi-index needs exactly one ';'");
  }
  auto read_list = [](std::string_view part) {
    std::vector<int> out;
    std::size_t pos = 0;
    while (true) {
      while (pos < part.size() && part[pos] == ' ') ++pos;
      const char* first = part.data() + pos;
      const char* last = part.data() + part.size();
      int v = 0;
      auto [ptr, ec] = std::from_chars(first, last, v);
      if (ec != std::errc{}) throw std::invalid_argument("bad multi-index component");
      out.push_back(v);
      pos = static_cast<std::size_t>(ptr - part.data());
      while (pos < part.size() && part[pos] == ' ') ++pos;
      if (pos == part.size()) break;
      if (part[pos] != ',') throw std::invalid_argument("bad multi-index separator");
      ++pos;
    }
    return out;
  };
  auto neg = read_list(text.substr(0, semi));
  auto pos = read_list(text.substr(semi + 1));
  if (neg.size() != pos.size()) throw std::invalid_argument("unbalanced multi-index");
  MultiIndex a(static_cast<int>(neg.size()));
  for (std::size_t i = 0; i < neg.size(); ++i) {
    a.set_flat(static_cast<int>(i), neg[i]);
    a.set_flat(static_cast<int>(i + neg.size()), pos[i]);
  }
  return a;
}

mpz_class multi_binomial(const MultiIndex& a, const MultiIndex& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("multi_binomial: rank mismatch");
  if (!a.is_nonnegative() || !b.is_nonnegative()) {
    throw std::invalid_argument("multi_binomial: negative component");
  }
  mpz_class r = 1;
  for (int i = 0; i < a.size(); ++i) r *= binomial(a[i] + b[i], a[i]);
  return r;
}

mpz_class multi_factorial(const MultiIndex& a) {
  mpz_class r = 1;
  for (int i = 0; i < a.size(); ++i) {
    if (a[i] < 0) throw std::invalid_argument("factorial of negative component");
    r *= factorial(static_cast<unsigned>(a[i]));
  }
  return r;
}

}  // namespace cartanh
