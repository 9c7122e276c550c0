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

#ifndef SUBMOD_LOVASZ_H_
#define SUBMOD_LOVASZ_H_

#include <span>
#include <vector>

#include "submod/set_function.h"
#include "submod/subset.h"

namespace submod {

// Indices sorted by decreasing weight; ties keep ascending index order.
std::vector<int> DescendingOrder(std::span<const double> w);

// Lovasz extension f(w) evaluated along DescendingOrder(w):
//   f(w) = sum_k w_{j_k} [F({j_1..j_k}) - F({j_1..j_{k-1}})].
// Uses p oracle calls. The value does not depend on how ties are ordered.
double LovaszExtension(const SetFunction& f, std::span<const double> w);

// Same sum along an explicit order; `order` must be a permutation of V.
double LovaszAlongOrder(const SetFunction& f, std::span<const double> w,
                        std::span<const int> order);

// Greedy vertex of B(F) for the order: s_{j_k} = F(prefix_k) - F(prefix_{k-1}).
Vector GreedyBaseForOrder(const SetFunction& f, std::span<const int> order);

// Maximizer of w^T s over B(F) for any sign pattern of w; w^T s = f(w).
// F must be submodular (not verified).
Vector GreedyBase(const SetFunction& f, std::span<const double> w);

// Maximizer of w^T s over P(F) intersected with the nonnegative orthant for
// non-decreasing submodular F: greedy over the strictly positive entries of
// w only, zero elsewhere. The optimal value is f(w_+).
Vector TruncatedGreedy(const SetFunction& f, std::span<const double> w);

// max_{s in P(F)} w^T s: f(w) when w >= 0, +infinity otherwise.
double SupportP(const SetFunction& f, std::span<const double> w);

struct ConjugateResult {
  double value = 0.0;
  Subset argmax;  // Smallest bitmask among exact ties.
};

// max_A s(A) - F(A) by exhaustive enumeration.
ConjugateResult Conjugate(const SetFunction& f, std::span<const double> s,
                          int max_exhaustive = kDefaultExhaustiveCap);

}  // namespace submod

#endif  // SUBMOD_LOVASZ_H_
