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

#ifndef CARTANH_MULTI_INDEX_HPP
#define CARTANH_MULTI_INDEX_HPP

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace cartanh {

/// Exponent vector in Z^{2n}, stored as (a_{-1},...,a_{-n}, a_1,...,a_n).
///
/// Components are addressed either by flat position [0, 2n) or by signed
/// position i in {+-1,...,+-n} through at()/set().
class MultiIndex {
 public:
  static constexpr int kMaxRank = 4;

  MultiIndex() = default;
  explicit MultiIndex(int rank);
  /// Components in flat order; the list must have exactly 2 * rank entries.
  MultiIndex(int rank, std::initializer_list<int> components);

  static MultiIndex unit(int rank, int signed_pos);
  /// Every component equal to value (the top index tau for value = p - 1).
  static MultiIndex constant(int rank, int value);

  int rank() const { return rank_; }
  int size() const { return 2 * rank_; }

  int operator[](int flat) const { return c_[static_cast<std::size_t>(flat)]; }
  int at(int signed_pos) const { return c_[flat_of(signed_pos)]; }
  void set(int signed_pos, int value);
  void set_flat(int flat, int value);

  int degree() const;
  bool is_zero() const;
  bool is_nonnegative() const;
  int max_component() const;
  int min_component() const;

  MultiIndex& operator+=(const MultiIndex& o);
  MultiIndex& operator-=(const MultiIndex& o);
  friend MultiIndex operator+(MultiIndex a, const MultiIndex& b) { return a += b; }
  friend MultiIndex operator-(MultiIndex a, const MultiIndex& b) { return a -= b; }
  friend MultiIndex operator*(int s, MultiIndex a);

  /// Graded lexicographic: total degree first, then components in flat order.
  friend std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b);
  friend bool operator==(const MultiIndex& a, const MultiIndex& b) {
    return a.rank_ == b.rank_ && a.c_ == b.c_;
  }

  std::size_t hash() const;

  /// "a_-1,...,a_-n;a_1,...,a_n"
  std::string to_string() const;
  /// Inverse of to_string(); the rank is inferred from the component count.
  static MultiIndex parse(std::string_view text);

 private:
  std::size_t flat_of(int signed_pos) const;

  std::array<std::int16_t, 2 * kMaxRank> c_{};
  std::uint8_t rank_ = 0;
};

struct MultiIndexHash {
  std::size_t operator()(const MultiIndex& a) const { return a.hash(); }
};

/// prod_j C(a_j + b_j, a_j) over all 2n positions. Both arguments must be
/// nonnegative and of equal rank.
mpz_class multi_binomial(const MultiIndex& a, const MultiIndex& b);

/// a! = prod_j a_j!
mpz_class multi_factorial(const MultiIndex& a);

inline void hash_combine(std::size_t& seed, std::size_t v) {
  seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

}  // namespace cartanh

#endif  // CARTANH_MULTI_INDEX_HPP
