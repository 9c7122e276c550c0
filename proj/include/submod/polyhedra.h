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

#ifndef SUBMOD_POLYHEDRA_H_
#define SUBMOD_POLYHEDRA_H_

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "submod/set_function.h"
#include "submod/subset.h"

namespace submod {

// Membership in the submodular polyhedron P(F) = {s : s(A) <= F(A) for all
// A}, the base polyhedron B(F) = P(F) with s(V) = F(V), and the positive
// polyhedron P+(F) = P(F) with s >= 0. All checks are exhaustive over 2^p
// constraints and share one additive tolerance.
bool InP(const SetFunction& f, std::span<const double> s,
         double tol = kDefaultTol, int max_exhaustive = kDefaultExhaustiveCap);
bool InB(const SetFunction& f, std::span<const double> s,
         double tol = kDefaultTol, int max_exhaustive = kDefaultExhaustiveCap);
bool InPPlus(const SetFunction& f, std::span<const double> s,
             double tol = kDefaultTol,
             int max_exhaustive = kDefaultExhaustiveCap);

// Sets A with |s(A) - F(A)| <= tol, in increasing mask order. For s in P(F)
// these form a lattice; the family is checked for closure under union and
// intersection, and a failure raises kNumericalInconsistency (the tolerance
// does not match the accuracy of s).
struct TightFamily {
  std::vector<Subset> sets;

  bool Contains(Subset a) const;
};

TightFamily TightSets(const SetFunction& f, std::span<const double> s,
                      double tol = kDefaultTol,
                      int max_exhaustive = kDefaultExhaustiveCap);

// Smallest tight set containing k, for s in B(F).
Subset Dep(const SetFunction& f, std::span<const double> s, int k,
           double tol = kDefaultTol,
           int max_exhaustive = kDefaultExhaustiveCap);

// Dep(s, k) for every k, sharing one tight-set enumeration.
std::vector<Subset> DepAll(const SetFunction& f, std::span<const double> s,
                           double tol = kDefaultTol,
                           int max_exhaustive = kDefaultExhaustiveCap);

// Exchangeable pairs (k, q) with q in Dep(s, k), q != k.
std::vector<std::pair<int, int>> ExchangeablePairs(
    const SetFunction& f, std::span<const double> s, double tol = kDefaultTol,
    int max_exhaustive = kDefaultExhaustiveCap);

// Ordered partition A_1, ..., A_m of V (or of a stable subset).
struct OrderedPartition {
  std::vector<Subset> blocks;
};

// Level sets of w by decreasing distinct value: blocks[i] = {w == v_i}.
std::vector<std::pair<double, Subset>> DecreasingLevels(
    std::span<const double> w);

// s in B(F) maximizes w^T s over B(F) iff every upper level set {w >= v_i}
// is tight for s.
bool IsBaseMaximizer(const SetFunction& f, std::span<const double> s,
                     std::span<const double> w, double tol = kDefaultTol,
                     int max_exhaustive = kDefaultExhaustiveCap);

// Exchange form of the same condition: w_k <= w_q for all q in Dep(s, k).
bool IsBaseMaximizerByExchange(const SetFunction& f,
                               std::span<const double> s,
                               std::span<const double> w,
                               double tol = kDefaultTol,
                               int max_exhaustive = kDefaultExhaustiveCap);

// s in P+(F) maximizes w^T s over P+(F) (F non-decreasing) iff s vanishes
// on the blocks where w < 0 and the upper level sets {w >= v_i} with v_i > 0
// are tight. Blocks where w == 0 impose nothing.
bool IsPPlusMaximizer(const SetFunction& f, std::span<const double> s,
                      std::span<const double> w, double tol = kDefaultTol,
                      int max_exhaustive = kDefaultExhaustiveCap);

// Returns B with empty != B != A, B subset of A and F(A) = F(B) + F(A \ B)
// within tol (smallest such mask), or nullopt when A is inseparable.
std::optional<Subset> SeparableWitness(
    const SetFunction& f, Subset a, double tol = kDefaultTol,
    int max_exhaustive = kDefaultExhaustiveCap);

// True iff each block A_j is inseparable for
//   G_j(B) = F(A_1 u ... u A_{j-1} u B) - F(A_1 u ... u A_{j-1}).
bool FaceCheck(const SetFunction& f, const OrderedPartition& partition,
               double tol = kDefaultTol,
               int max_exhaustive = kDefaultExhaustiveCap);

}  // namespace submod

#endif  // SUBMOD_POLYHEDRA_H_
