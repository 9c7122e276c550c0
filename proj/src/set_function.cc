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

#include "submod/set_function.h"

#include <cstdint>
#include <mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "submod/errors.h"

namespace submod {

struct SetFunction::Cache {
  std::mutex mu;
  std::unordered_map<std::uint64_t, double> values;
};

double ModularValue(std::span<const double> s, Subset a) {
  double total = 0.0;
  ForEachElement(a, [&](int k) { total += s[k]; });
  return total;
}

SetFunction::SetFunction(int p, Oracle oracle, std::string name)
    : p_(p),
      oracle_(std::make_shared<const Oracle>(std::move(oracle))),
      name_(std::move(name)) {
  if (p < 1 || p > kMaxGroundSetSize) {
    Fail(ErrorCode::kInvalidArgument,
         "ground set size must be in [1, 63], got " + std::to_string(p));
  }
  const double at_empty = (*oracle_)(Subset::Empty());
  if (at_empty != 0.0) {
    Fail(ErrorCode::kInvalidArgument,
         "set-function must vanish at the empty set, got F(empty) = " +
             std::to_string(at_empty));
  }
}

double SetFunction::operator()(Subset a) const {
  if (cache_ == nullptr) return (*oracle_)(a);
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto it = cache_->values.find(a.bits());
    if (it != cache_->values.end()) return it->second;
  }
  // Evaluated outside the lock; a racing duplicate computes the same value.
  const double value = (*oracle_)(a);
  std::lock_guard<std::mutex> lock(cache_->mu);
  cache_->values.emplace(a.bits(), value);
  return value;
}

SetFunction SetFunction::Memoized() const {
  SetFunction out = *this;
  out.cache_ = std::make_shared<Cache>();
  return out;
}

SetFunction ShiftToZero(int p, const SetFunction::Oracle& oracle,
                        std::string name) {
  const double offset = oracle(Subset::Empty());
  return SetFunction(
      p, [oracle, offset](Subset a) { return oracle(a) - offset; },
      std::move(name));
}

SetFunction FromTable(std::vector<double> table, std::string name) {
  const std::size_t n = table.size();
  if (n < 2 || (n & (n - 1)) != 0) {
    Fail(ErrorCode::kInvalidArgument,
         "explicit table length must be a power of two >= 2, got " +
             std::to_string(n));
  }
  const int p = std::countr_zero(n);
  auto shared = std::make_shared<const std::vector<double>>(std::move(table));
  return SetFunction(
      p, [shared](Subset a) { return (*shared)[a.bits()]; }, std::move(name));
}

SetFunction Modular(Vector s) {
  const int p = static_cast<int>(s.size());
  auto shared = std::make_shared<const Vector>(std::move(s));
  return SetFunction(
      p, [shared](Subset a) { return ModularValue(*shared, a); }, "modular");
}

void RequireExhaustive(int p, int max_exhaustive, const char* operation) {
  if (p > max_exhaustive) {
    Fail(ErrorCode::kCapExceeded,
         std::string(operation) + " enumerates 2^" + std::to_string(p) +
             " subsets, above the exhaustive cap " +
             std::to_string(max_exhaustive));
  }
}

std::vector<double> ToExplicit(const SetFunction& f, int max_exhaustive) {
  const int p = f.size();
  RequireExhaustive(p, max_exhaustive, "to_explicit");
  const std::uint64_t n = std::uint64_t{1} << p;
  std::vector<double> table(n);
  table[0] = 0.0;
  for (std::uint64_t m = 1; m < n; ++m) table[m] = f(Subset(m));
  return table;
}

}  // namespace submod
