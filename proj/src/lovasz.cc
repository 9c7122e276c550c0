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

#include "submod/lovasz.h"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
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

}  // namespace

std::vector<int> DescendingOrder(std::span<const double> w) {
  std::vector<int> order(w.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return w[a] > w[b]; });
  return order;
}

double LovaszAlongOrder(const SetFunction& f, std::span<const double> w,
                        std::span<const int> order) {
  RequireDimension(f, w.size());
  // Summation by parts: sum_k (w_{j_k} - w_{j_{k+1}}) F(prefix_k) plus the
  // last weight times F(V). Exact at indicator vectors.
  double value = 0.0;
  Subset prefix;
  const std::size_t p = order.size();
  for (std::size_t k = 0; k < p; ++k) {
    prefix = prefix.With(order[k]);
    const double next = k + 1 < p ? w[order[k + 1]] : 0.0;
    const double step = w[order[k]] - next;
    if (step != 0.0) value += step * f(prefix);
  }
  return value;
}

double LovaszExtension(const SetFunction& f, std::span<const double> w) {
  const std::vector<int> order = DescendingOrder(w);
  return LovaszAlongOrder(f, w, order);
}

Vector GreedyBaseForOrder(const SetFunction& f, std::span<const int> order) {
  RequireDimension(f, order.size());
  Vector s(order.size(), 0.0);
  double previous = 0.0;
  Subset prefix;
  for (int j : order) {
    prefix = prefix.With(j);
    const double current = f(prefix);
    s[j] = current - previous;
    previous = current;
  }
  return s;
}

Vector GreedyBase(const SetFunction& f, std::span<const double> w) {
  RequireDimension(f, w.size());
  return GreedyBaseForOrder(f, DescendingOrder(w));
}

Vector TruncatedGreedy(const SetFunction& f, std::span<const double> w) {
  RequireDimension(f, w.size());
  Vector s(w.size(), 0.0);
  double previous = 0.0;
  Subset prefix;
  for (int j : DescendingOrder(w)) {
    if (!(w[j] > 0.0)) break;
    prefix = prefix.With(j);
    const double current = f(prefix);
    s[j] = current - previous;
    previous = current;
  }
  return s;
}

double SupportP(const SetFunction& f, std::span<const double> w) {
  RequireDimension(f, w.size());
  for (double x : w) {
    if (x < 0.0) return std::numeric_limits<double>::infinity();
  }
  return LovaszExtension(f, w);
}

ConjugateResult Conjugate(const SetFunction& f, std::span<const double> s,
                          int max_exhaustive) {
  RequireDimension(f, s.size());
  const std::vector<double> table = ToExplicit(f, max_exhaustive);
  // Modular values by dynamic programming over the lowest set bit.
  std::vector<double> modular(table.size(), 0.0);
  ConjugateResult best{0.0, Subset()};
  for (std::uint64_t m = 1; m < table.size(); ++m) {
    modular[m] = modular[m & (m - 1)] + s[std::countr_zero(m)];
    const double value = modular[m] - table[m];
    if (value > best.value) best = {value, Subset(m)};
  }
  return best;
}

}  // namespace submod
