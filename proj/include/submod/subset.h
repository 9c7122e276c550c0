// Copyright 2026 The Submod Authors.
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

#ifndef SUBMOD_SUBSET_H_
#define SUBMOD_SUBSET_H_

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace submod {

// Largest ground set representable by a 64-bit mask with a spare bit.
inline constexpr int kMaxGroundSetSize = 63;

// Default limit on p for operations that enumerate all 2^p subsets.
inline constexpr int kDefaultExhaustiveCap = 20;

// Default additive tolerance for inequality and equality checks.
inline constexpr double kDefaultTol = 1e-9;

// A subset of V = {0, ..., p-1}; bit k set iff element k is a member.
class Subset {
 public:
  constexpr Subset() = default;
  constexpr explicit Subset(std::uint64_t bits) : bits_(bits) {}

  static constexpr Subset Empty() { return Subset(); }
  static constexpr Subset Full(int p) {
    return Subset(p >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << p) - 1);
  }
  static constexpr Subset Singleton(int k) {
    return Subset(std::uint64_t{1} << k);
  }
  static Subset FromElements(const std::vector<int>& elements);

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int k) const { return (bits_ >> k) & 1; }
  constexpr bool IsSubsetOf(Subset other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  // Lowest element; undefined on the empty set.
  constexpr int First() const { return std::countr_zero(bits_); }

  constexpr Subset With(int k) const {
    return Subset(bits_ | (std::uint64_t{1} << k));
  }
  constexpr Subset Without(int k) const {
    return Subset(bits_ & ~(std::uint64_t{1} << k));
  }
  constexpr Subset Complement(int p) const {
    return Subset(~bits_ & Full(p).bits_);
  }

  // Fits in the low p bit positions.
  constexpr bool WithinGroundSet(int p) const {
    return IsSubsetOf(Full(p));
  }

  std::vector<int> Elements() const;
  std::string ToString() const;

  friend constexpr Subset operator|(Subset a, Subset b) {
    return Subset(a.bits_ | b.bits_);
  }
  friend constexpr Subset operator&(Subset a, Subset b) {
    return Subset(a.bits_ & b.bits_);
  }
  // Set difference.
  friend constexpr Subset operator-(Subset a, Subset b) {
    return Subset(a.bits_ & ~b.bits_);
  }
  friend constexpr bool operator==(Subset a, Subset b) = default;
  friend constexpr auto operator<=>(Subset a, Subset b) = default;

 private:
  std::uint64_t bits_ = 0;
};

// Calls fn(Subset) for every subset of `s`, in increasing mask order.
template <typename Fn>
void ForEachSubsetOf(Subset s, Fn&& fn) {
  const std::uint64_t m = s.bits();
  std::uint64_t sub = 0;
  while (true) {
    fn(Subset(sub));
    if (sub == m) break;
    sub = (sub - m) & m;
  }
}

// Calls fn(int) for each element of `s` in increasing order.
template <typename Fn>
void ForEachElement(Subset s, Fn&& fn) {
  std::uint64_t m = s.bits();
  while (m != 0) {
    fn(std::countr_zero(m));
    m &= m - 1;
  }
}

// Compact re-indexing between a subset of a parent ground set and a local
// ground set {0, ..., |subset|-1}, in increasing element order.
class IndexMap {
 public:
  IndexMap() = default;
  explicit IndexMap(Subset parent_elements);

  int local_size() const { return static_cast<int>(to_parent_.size()); }
  Subset parent_elements() const { return parent_elements_; }
  int ToParent(int local) const { return to_parent_[local]; }
  const std::vector<int>& to_parent() const { return to_parent_; }

  Subset LiftToParent(Subset local) const;
  // Drops parent elements outside the mapped subset.
  Subset ProjectToLocal(Subset parent) const;

 private:
  Subset parent_elements_;
  std::vector<int> to_parent_;
};

}  // namespace submod

#endif  // SUBMOD_SUBSET_H_
