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

#include "submod/polyhedra.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "submod/errors.h"

namespace submod {
namespace {

void RequireDimension(const SetFunction& f, std::size_t n) {
  if (static_cast<int>(n) != f.size()) {
    Fail(ErrorCode::kInvalidArgument,
         "vector length " + std::to_string(n) + " does not match p = " +
             std::to_string(f.size()));
  }
}

// s(mask) for every mask, built by peeling the lowest set bit.
std::vector<double> ModularTable(std::span<const double> s) {
  const std::uint64_t n = std::uint64_t{1} << s.size();
  std::vector<double> out(n, 0.0);
  for (std::uint64_t m = 1; m < n; ++m) {
    out[m] = out[m & (m - 1)] + s[std::countr_zero(m)];
  }
  return out;
}

// Largest family size checked pairwise for lattice closure; larger
// families are checked on an evenly strided sample of this size.
constexpr std::size_t kClosureSample = 4096;

void CheckLatticeClosure(const std::vector<Subset>& sets,
                         const std::vector<bool>& member) {
  std::vector<Subset> sample;
  if (sets.size() <= kClosureSample) {
    sample = sets;
  } else {
    const std::size_t stride = sets.size() / kClosureSample;
    for (std::size_t i = 0; i < sets.size(); i += stride) {
      sample.push_back(sets[i]);
    }
  }
  for (std::size_t i = 0; i < sample.size(); ++i) {
    for (std::size_t j = i + 1; j < sample.size(); ++j) {
      const Subset u = sample[i] | sample[j];
      const Subset v = sample[i] & sample[j];
      if (!member[u.bits()] || !member[v.bits()]) {
        Fail(ErrorCode::kNumericalInconsistency,
             "tight sets " + sample[i].ToString() + " and " +
                 sample[j].ToString() +
                 " are not closed under union/intersection; adjust tol");
      }
    }
  }
}

}  // namespace

bool InP(const SetFunction& f, std::span<const double> s, double tol,
         int max_exhaustive) {
  RequireDimension(f, s.size());
  const std::vector<double> table = ToExplicit(f, max_exhaustive);
  const std::vector<double> modular = ModularTable(s);
  for (std::uint64_t m = 1; m < table.size(); ++m) {
    if (modular[m] > table[m] + tol) return false;
  }
  return true;
}

bool InB(const SetFunction& f, std::span<const double> s, double tol,
         int max_exhaustive) {
  if (!InP(f, s, tol, max_exhaustive)) return false;
  return std::abs(ModularValue(s, f.ground()) - f(f.ground())) <= tol;
}

bool InPPlus(const SetFunction& f, std::span<const double> s, double tol,
             int max_exhaustive) {
  for (double x : s) {
    if (x < -tol) return false;
  }
  return InP(f, s, tol, max_exhaustive);
}

bool TightFamily::Contains(Subset a) const {
  return std::binary_search(sets.begin(), sets.end(), a);
}

TightFamily TightSets(const SetFunction& f, std::span<const double> s,
                      double tol, int max_exhaustive) {
  RequireDimension(f, s.size());
  const std::vector<double> table = ToExplicit(f, max_exhaustive);
  const std::vector<double> modular = ModularTable(s);
  TightFamily family;
  std::vector<bool> member(table.size(), false);
  for (std::uint64_t m = 0; m < table.size(); ++m) {
    if (std::abs(modular[m] - table[m]) <= tol) {
      family.sets.push_back(Subset(m));
      member[m] = true;
    }
  }
  CheckLatticeClosure(family.sets, member);
  return family;
}

std::vector<Subset> DepAll(const SetFunction& f, std::span<const double> s,
                           double tol, int max_exhaustive) {
  const TightFamily family = TightSets(f, s, tol, max_exhaustive);
  const int p = f.size();
  if (!family.Contains(f.ground())) {
    Fail(ErrorCode::kInvalidArgument,
         "dependence sets need s in B(F), but V is not tight");
  }
  std::vector<Subset> dep(p, f.ground());
  for (Subset a : family.sets) {
    ForEachElement(a, [&](int k) { dep[k] = dep[k] & a; });
  }
  return dep;
}

Subset Dep(const SetFunction& f, std::span<const double> s, int k, double tol,
           int max_exhaustive) {
  if (k < 0 || k >= f.size()) {
    Fail(ErrorCode::kInvalidArgument, "element out of range");
  }
  return DepAll(f, s, tol, max_exhaustive)[k];
}

std::vector<std::pair<int, int>> ExchangeablePairs(const SetFunction& f,
                                                   std::span<const double> s,
                                                   double tol,
                                                   int max_exhaustive) {
  const std::vector<Subset> dep = DepAll(f, s, tol, max_exhaustive);
  std::vector<std::pair<int, int>> pairs;
  for (int k = 0; k < f.size(); ++k) {
    ForEachElement(dep[k], [&](int q) {
      if (q != k) pairs.emplace_back(k, q);
    });
  }
  return pairs;
}

std::vector<std::pair<double, Subset>> DecreasingLevels(
    std::span<const double> w) {
  std::map<double, Subset, std::greater<>> levels;
  for (int k = 0; k < static_cast<int>(w.size()); ++k) {
    levels[w[k]] = levels[w[k]].With(k);
  }
  return {levels.begin(), levels.end()};
}

bool IsBaseMaximizer(const SetFunction& f, std::span<const double> s,
                     std::span<const double> w, double tol,
                     int max_exhaustive) {
  RequireDimension(f, s.size());
  RequireDimension(f, w.size());
  RequireExhaustive(f.size(), max_exhaustive, "is_base_maximizer");
  Subset prefix;
  for (const auto& [value, block] : DecreasingLevels(w)) {
    prefix = prefix | block;
    if (std::abs(ModularValue(s, prefix) - f(prefix)) > tol) return false;
  }
  return true;
}

bool IsBaseMaximizerByExchange(const SetFunction& f,
                               std::span<const double> s,
                               std::span<const double> w, double tol,
                               int max_exhaustive) {
  RequireDimension(f, w.size());
  for (const auto& [k, q] : ExchangeablePairs(f, s, tol, max_exhaustive)) {
    if (w[k] > w[q]) return false;
  }
  return true;
}

bool IsPPlusMaximizer(const SetFunction& f, std::span<const double> s,
                      std::span<const double> w, double tol,
                      int max_exhaustive) {
  RequireDimension(f, s.size());
  RequireDimension(f, w.size());
  RequireExhaustive(f.size(), max_exhaustive, "is_p_plus_maximizer");
  Subset prefix;
  for (const auto& [value, block] : DecreasingLevels(w)) {
    prefix = prefix | block;
    if (value < 0.0) {
      bool zero = true;
      ForEachElement(block, [&](int k) { zero = zero && std::abs(s[k]) <= tol; });
      if (!zero) return false;
    } else if (value > 0.0) {
      if (std::abs(ModularValue(s, prefix) - f(prefix)) > tol) return false;
    }
  }
  return true;
}

std::optional<Subset> SeparableWitness(const SetFunction& f, Subset a,
                                       double tol, int max_exhaustive) {
  if (a.empty() || !a.WithinGroundSet(f.size())) {
    Fail(ErrorCode::kInvalidArgument,
         "separability needs a nonempty subset of the ground set");
  }
  RequireExhaustive(a.size(), max_exhaustive, "separable_witness");
  const double whole = f(a);
  std::optional<Subset> witness;
  ForEachSubsetOf(a, [&](Subset b) {
    if (witness || b.empty() || b == a) return;
    if (std::abs(whole - f(b) - f(a - b)) <= tol) witness = b;
  });
  return witness;
}

bool FaceCheck(const SetFunction& f, const OrderedPartition& partition,
               double tol, int max_exhaustive) {
  Subset covered;
  for (Subset block : partition.blocks) {
    if (block.empty() || !(block & covered).empty()) {
      Fail(ErrorCode::kInvalidArgument,
           "ordered partition blocks must be nonempty and disjoint");
    }
    covered = covered | block;
  }
  if (covered != f.ground()) {
    Fail(ErrorCode::kInvalidArgument, "ordered partition must cover V");
  }
  Subset prefix;
  for (Subset block : partition.blocks) {
    const Subset base = prefix;
    const double at_base = f(base);
    const SetFunction contracted(
        f.size(), [&f, base, at_base](Subset b) { return f(base | b) - at_base; });
    if (SeparableWitness(contracted, block, tol, max_exhaustive)) return false;
    prefix = prefix | block;
  }
  return true;
}

}  // namespace submod
