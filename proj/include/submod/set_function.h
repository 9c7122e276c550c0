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

#ifndef SUBMOD_SET_FUNCTION_H_
#define SUBMOD_SET_FUNCTION_H_

#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "submod/subset.h"

namespace submod {

// A point s in R^p, read as the modular function s(A) = sum_{k in A} s_k.
using Vector = std::vector<double>;

double ModularValue(std::span<const double> s, Subset a);

// Evaluation oracle for a set-function F: 2^V -> R with F(empty) = 0.
//
// Instances are immutable handles; copies share the oracle. Evaluation is
// safe to call concurrently, including when memoization is enabled (the
// cache is internally synchronized).
class SetFunction {
 public:
  using Oracle = std::function<double(Subset)>;

  // Fails with kInvalidArgument if p is outside [1, 63] or if
  // oracle(empty) != 0. Use ShiftToZero() to normalize explicitly.
  SetFunction(int p, Oracle oracle, std::string name = "");

  int size() const { return p_; }
  Subset ground() const { return Subset::Full(p_); }
  const std::string& name() const { return name_; }

  // The caller guarantees a.WithinGroundSet(size()).
  double operator()(Subset a) const;
  double Evaluate(Subset a) const { return (*this)(a); }

  // Returns a handle that caches values keyed by the raw bitmask.
  SetFunction Memoized() const;
  bool memoized() const { return cache_ != nullptr; }

 private:
  struct Cache;

  int p_ = 0;
  std::shared_ptr<const Oracle> oracle_;
  std::shared_ptr<Cache> cache_;
  std::string name_;
};

// G(A) = F(A) - F(empty) for an oracle that is not zero at the empty set.
SetFunction ShiftToZero(int p, const SetFunction::Oracle& oracle,
                        std::string name = "");

// Builds a function from a table indexed by bitmask (size 2^p, table[0]=0).
SetFunction FromTable(std::vector<double> table, std::string name = "explicit");

// Modular function A -> s(A).
SetFunction Modular(Vector s);

// Fails with kCapExceeded when p exceeds the exhaustive cap.
void RequireExhaustive(int p, int max_exhaustive, const char* operation);

// table[mask] = F(mask) for all 2^p masks.
std::vector<double> ToExplicit(const SetFunction& f,
                               int max_exhaustive = kDefaultExhaustiveCap);

}  // namespace submod

#endif  // SUBMOD_SET_FUNCTION_H_
