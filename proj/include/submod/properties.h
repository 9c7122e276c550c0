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

#ifndef SUBMOD_PROPERTIES_H_
#define SUBMOD_PROPERTIES_H_

#include <optional>
#include <string>

#include "submod/set_function.h"
#include "submod/subset.h"

namespace submod {

// Witness of a violated inequality lhs >= rhs (or lhs == rhs for symmetry).
// Element indices j and k are -1 when the check is over set pairs (a, b).
struct Witness {
  Subset a;
  Subset b;
  int j = -1;
  int k = -1;
  double lhs = 0.0;
  double rhs = 0.0;
};

struct PropertyReport {
  bool holds = true;
  std::optional<Witness> witness;  // Present iff !holds.

  explicit operator bool() const { return holds; }
};

std::string Describe(const Witness& w);

// F(A+k) - F(A) >= F(A+j+k) - F(A+j) - tol for all A and j < k outside A.
PropertyReport IsSubmodular(const SetFunction& f, double tol = kDefaultTol,
                            int max_exhaustive = kDefaultExhaustiveCap);

// F(A+k) >= F(A) - tol for every one-element addition.
PropertyReport IsMonotone(const SetFunction& f, double tol = kDefaultTol,
                          int max_exhaustive = kDefaultExhaustiveCap);

// |F(V \ A) - F(A)| <= tol for all A.
PropertyReport IsSymmetric(const SetFunction& f, double tol = kDefaultTol,
                           int max_exhaustive = kDefaultExhaustiveCap);

// F(A) + F(B) >= F(A \ B) + F(B \ A) - tol over all 4^p pairs, so the cap
// applies to 2p rather than p.
PropertyReport IsPosimodular(const SetFunction& f, double tol = kDefaultTol,
                             int max_exhaustive = kDefaultExhaustiveCap);

}  // namespace submod

#endif  // SUBMOD_PROPERTIES_H_
