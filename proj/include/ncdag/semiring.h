// Copyright 2026 The ncdag Authors
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

#ifndef NCDAG_SEMIRING_H_
#define NCDAG_SEMIRING_H_

#include <concepts>
#include <optional>

#include <boost/multiprecision/cpp_int.hpp>

namespace ncdag {

using Natural = boost::multiprecision::cpp_int;

// A semiring is a stateless policy type. Selective semirings (whose plus
// picks one of its arguments) additionally expose `better`, the strict
// preference used to record backpointers.
template <typename S>
concept Semiring = requires(const typename S::value_type& a,
                            typename S::value_type& acc) {
  { S::zero() } -> std::convertible_to<typename S::value_type>;
  { S::one() } -> std::convertible_to<typename S::value_type>;
  { S::plus(a, a) } -> std::convertible_to<typename S::value_type>;
  { S::times(a, a) } -> std::convertible_to<typename S::value_type>;
  { S::is_zero(a) } -> std::same_as<bool>;
  { S::kSelective } -> std::convertible_to<bool>;
  S::add_product(acc, a, a);
};

template <typename S>
concept SelectiveSemiring = Semiring<S> && S::kSelective &&
    requires(const typename S::value_type& a) {
  { S::better(a, a) } -> std::same_as<bool>;
};

// (naturals, +, *, 0, 1) with unbounded precision.
struct CountingSemiring {
  using value_type = Natural;
  static constexpr bool kSelective = false;

  static value_type zero() { return 0; }
  static value_type one() { return 1; }
  static value_type plus(const value_type& a, const value_type& b) {
    return a + b;
  }
  static value_type times(const value_type& a, const value_type& b) {
    return a * b;
  }
  static bool is_zero(const value_type& a) { return a.is_zero(); }
  // acc += a * b without a temporary for the product.
  static void add_product(value_type& acc, const value_type& a,
                          const value_type& b) {
    boost::multiprecision::add(acc, acc, value_type(a * b));
  }
};

// Viterbi semiring over scores: (R + unreachable, max, +). The empty
// optional is "unreachable", strictly below every finite score and
// absorbing under times.
struct MaxPlusSemiring {
  using value_type = std::optional<double>;
  static constexpr bool kSelective = true;

  static value_type zero() { return std::nullopt; }
  static value_type one() { return 0.0; }
  static bool better(const value_type& a, const value_type& b) {
    return a && (!b || *a > *b);
  }
  static value_type plus(const value_type& a, const value_type& b) {
    return better(b, a) ? b : a;
  }
  static value_type times(const value_type& a, const value_type& b) {
    if (!a || !b) return std::nullopt;
    return *a + *b;
  }
  static bool is_zero(const value_type& a) { return !a.has_value(); }
  static void add_product(value_type& acc, const value_type& a,
                          const value_type& b) {
    acc = plus(acc, times(a, b));
  }
};

// Max-plus over (score, arc count) pairs: a higher score wins, and among
// equal scores the value built from fewer arcs wins. Used for decoding so
// that arcs scoring exactly 0 are left out.
struct SparseMaxPlusSemiring {
  struct Weight {
    double score = 0.0;
    int arcs = 0;

    friend bool operator==(const Weight&, const Weight&) = default;
  };
  using value_type = std::optional<Weight>;
  static constexpr bool kSelective = true;

  static value_type zero() { return std::nullopt; }
  static value_type one() { return Weight{}; }
  static value_type arc(double score) { return Weight{score, 1}; }
  static bool better(const value_type& a, const value_type& b) {
    if (!a) return false;
    if (!b) return true;
    if (a->score != b->score) return a->score > b->score;
    return a->arcs < b->arcs;
  }
  static value_type plus(const value_type& a, const value_type& b) {
    return better(b, a) ? b : a;
  }
  static value_type times(const value_type& a, const value_type& b) {
    if (!a || !b) return std::nullopt;
    return Weight{a->score + b->score, a->arcs + b->arcs};
  }
  static bool is_zero(const value_type& a) { return !a.has_value(); }
  static void add_product(value_type& acc, const value_type& a,
                          const value_type& b) {
    acc = plus(acc, times(a, b));
  }
};

// ({false, true}, or, and): derivability.
struct BooleanSemiring {
  using value_type = bool;
  static constexpr bool kSelective = true;

  static value_type zero() { return false; }
  static value_type one() { return true; }
  static bool better(value_type a, value_type b) { return a && !b; }
  static value_type plus(value_type a, value_type b) { return a || b; }
  static value_type times(value_type a, value_type b) { return a && b; }
  static bool is_zero(value_type a) { return !a; }
  static void add_product(value_type& acc, value_type a, value_type b) {
    acc = acc || (a && b);
  }
};

static_assert(Semiring<CountingSemiring>);
static_assert(SelectiveSemiring<MaxPlusSemiring>);
static_assert(SelectiveSemiring<SparseMaxPlusSemiring>);
static_assert(SelectiveSemiring<BooleanSemiring>);

}  // namespace ncdag

#endif  // NCDAG_SEMIRING_H_
