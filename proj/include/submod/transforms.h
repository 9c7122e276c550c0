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

#ifndef SUBMOD_TRANSFORMS_H_
#define SUBMOD_TRANSFORMS_H_

#include <span>
#include <vector>

#include "submod/set_function.h"
#include "submod/subset.h"

namespace submod {

// A derived set-function on a compact ground set together with the map from
// its local indices back to the parent ground set.
struct Reindexed {
  SetFunction function;
  IndexMap map;
};

// F_A(B) = F(B) for B subset of A, on the local ground set {0..|A|-1}.
Reindexed Restrict(const SetFunction& f, Subset a);

// F^A(B) = F(A u B) - F(A) for B subset of V \ A, re-indexed.
Reindexed Contract(const SetFunction& f, Subset a);

// For G on a joint ground set and W a subset of it, the function on the
// remaining elements V:
//   F(A) = min_{B subset W} G(A u B) - min_{B subset W} G(B).
// Each query enumerates 2^|W| sets; results are memoized.
Reindexed PartialMin(const SetFunction& g, Subset w,
                     int max_exhaustive = kDefaultExhaustiveCap);

// G(A) = min_{B subset A} F(B) + z(A \ B). Each query enumerates 2^|A| sets.
SetFunction ConvolveModular(const SetFunction& f, Vector z,
                            int max_exhaustive = kDefaultExhaustiveCap);

// G(A) = min_{B superset A} F(B) - min_B F(B). Non-decreasing and
// submodular for submodular F; each query enumerates 2^{p-|A|} sets.
SetFunction Monotonize(const SetFunction& f,
                       int max_exhaustive = kDefaultExhaustiveCap);

SetFunction Add(const SetFunction& f, const SetFunction& g);
SetFunction Sum(const std::vector<SetFunction>& terms);
// Fails with kNegativeScale for lambda < 0.
SetFunction Scale(const SetFunction& f, double lambda);
// A -> F(A) + s(A).
SetFunction AddModular(const SetFunction& f, Vector s);

// Mobius weights D(G) = sum_{A subset G} (-1)^{|G|-|A|} [F(V) - F(V \ A)],
// indexed by bitmask (entry 0 is zero). They satisfy the cover identity
//   F(A) = sum_G D(G) - sum_{G subset V \ A} D(G).
std::vector<double> Mobius(const SetFunction& f,
                           int max_exhaustive = kDefaultExhaustiveCap);

// Explicit function from Mobius weights via the cover identity.
SetFunction MobiusReconstruct(const std::vector<double>& weights);

}  // namespace submod

#endif  // SUBMOD_TRANSFORMS_H_
