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

#include "submod/transforms.h"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "submod/errors.h"

namespace submod {
namespace {

void RequireWithin(const SetFunction& f, Subset a, const char* what) {
  if (!a.WithinGroundSet(f.size())) {
    Fail(ErrorCode::kInvalidArgument,
         std::string(what) + " uses elements outside the ground set");
  }
}

void RequireLength(const SetFunction& f, std::size_t n, const char* what) {
  if (static_cast<int>(n) != f.size()) {
    Fail(ErrorCode::kInvalidArgument,
         std::string(what) + " length does not match the ground set");
  }
}

}  // namespace

Reindexed Restrict(const SetFunction& f, Subset a) {
  RequireWithin(f, a, "restriction set");
  if (a.empty()) {
    Fail(ErrorCode::kInvalidArgument, "restriction to the empty set");
  }
  IndexMap map(a);
  SetFunction restricted(
      map.local_size(),
      [f, map](Subset b) { return f(map.LiftToParent(b)); },
      "restrict(" + f.name() + ")");
  return {std::move(restricted), std::move(map)};
}

Reindexed Contract(const SetFunction& f, Subset a) {
  RequireWithin(f, a, "contraction set");
  const Subset rest = a.Complement(f.size());
  if (rest.empty()) {
    Fail(ErrorCode::kInvalidArgument, "contraction on the whole ground set");
  }
  IndexMap map(rest);
  const double at_a = f(a);
  SetFunction contracted(
      map.local_size(),
      [f, map, a, at_a](Subset b) { return f(a | map.LiftToParent(b)) - at_a; },
      "contract(" + f.name() + ")");
  return {std::move(contracted), std::move(map)};
}

Reindexed PartialMin(const SetFunction& g, Subset w, int max_exhaustive) {
  RequireWithin(g, w, "partial minimization set");
  RequireExhaustive(w.size(), max_exhaustive, "partial_min");
  const Subset kept = w.Complement(g.size());
  if (kept.empty()) {
    Fail(ErrorCode::kInvalidArgument, "partial minimization over everything");
  }
  IndexMap map(kept);
  auto min_over_w = [g, w](Subset base) {
    double best = std::numeric_limits<double>::infinity();
    ForEachSubsetOf(w, [&](Subset b) { best = std::min(best, g(base | b)); });
    return best;
  };
  const double offset = min_over_w(Subset());
  SetFunction reduced(
      map.local_size(),
      [map, min_over_w, offset](Subset a) {
        return min_over_w(map.LiftToParent(a)) - offset;
      },
      "partial_min(" + g.name() + ")");
  return {reduced.Memoized(), std::move(map)};
}

SetFunction ConvolveModular(const SetFunction& f, Vector z,
                            int max_exhaustive) {
  RequireLength(f, z.size(), "convolution vector");
  auto shared = std::make_shared<const Vector>(std::move(z));
  return SetFunction(
             f.size(),
             [f, shared, max_exhaustive](Subset a) {
               RequireExhaustive(a.size(), max_exhaustive, "convolve_modular");
               double best = std::numeric_limits<double>::infinity();
               ForEachSubsetOf(a, [&](Subset b) {
                 best = std::min(best, f(b) + ModularValue(*shared, a - b));
               });
               return best;
             },
             "convolve_modular(" + f.name() + ")")
      .Memoized();
}

SetFunction Monotonize(const SetFunction& f, int max_exhaustive) {
  RequireExhaustive(f.size(), max_exhaustive, "monotonize");
  const int p = f.size();
  double global = 0.0;
  ForEachSubsetOf(f.ground(), [&](Subset b) { global = std::min(global, f(b)); });
  return SetFunction(
             p,
             [f, p, global](Subset a) {
               double best = std::numeric_limits<double>::infinity();
               ForEachSubsetOf(a.Complement(p), [&](Subset extra) {
                 best = std::min(best, f(a | extra));
               });
               return best - global;
             },
             "monotonize(" + f.name() + ")")
      .Memoized();
}

SetFunction Add(const SetFunction& f, const SetFunction& g) {
  return Sum({f, g});
}

SetFunction Sum(const std::vector<SetFunction>& terms) {
  if (terms.empty()) Fail(ErrorCode::kInvalidArgument, "empty sum");
  const int p = terms.front().size();
  for (const SetFunction& t : terms) {
    if (t.size() != p) {
      Fail(ErrorCode::kInvalidArgument, "sum of functions on different ground sets");
    }
  }
  return SetFunction(
      p,
      [terms](Subset a) {
        double total = 0.0;
        for (const SetFunction& t : terms) total += t(a);
        return total;
      },
      "sum");
}

SetFunction Scale(const SetFunction& f, double lambda) {
  if (!(lambda >= 0.0)) {
    Fail(ErrorCode::kNegativeScale,
         "scale factor must be >= 0, got " + std::to_string(lambda));
  }
  return SetFunction(
      f.size(), [f, lambda](Subset a) { return lambda * f(a); },
      "scale(" + f.name() + ")");
}

SetFunction AddModular(const SetFunction& f, Vector s) {
  RequireLength(f, s.size(), "modular term");
  auto shared = std::make_shared<const Vector>(std::move(s));
  return SetFunction(
      f.size(),
      [f, shared](Subset a) { return f(a) + ModularValue(*shared, a); },
      "add_modular(" + f.name() + ")");
}

std::vector<double> Mobius(const SetFunction& f, int max_exhaustive) {
  const std::vector<double> table = ToExplicit(f, max_exhaustive);
  const int p = f.size();
  const std::uint64_t full = table.size() - 1;
  // Zeta values H(B) = sum_{G subset B} D(G) = F(V) - F(V \ B).
  std::vector<double> d(table.size());
  for (std::uint64_t b = 0; b <= full; ++b) {
    d[b] = table[full] - table[full & ~b];
  }
  for (int i = 0; i < p; ++i) {
    const std::uint64_t bit = std::uint64_t{1} << i;
    for (std::uint64_t m = 0; m <= full; ++m) {
      if (m & bit) d[m] -= d[m ^ bit];
    }
  }
  return d;
}

SetFunction MobiusReconstruct(const std::vector<double>& weights) {
  const std::size_t n = weights.size();
  if (n < 2 || (n & (n - 1)) != 0) {
    Fail(ErrorCode::kInvalidArgument, "Mobius table length must be 2^p");
  }
  const int p = std::countr_zero(n);
  std::vector<double> zeta = weights;
  zeta[0] = 0.0;
  for (int i = 0; i < p; ++i) {
    const std::uint64_t bit = std::uint64_t{1} << i;
    for (std::uint64_t m = 0; m < n; ++m) {
      if (m & bit) zeta[m] += zeta[m ^ bit];
    }
  }
  const std::uint64_t full = n - 1;
  std::vector<double> table(n);
  for (std::uint64_t a = 0; a < n; ++a) table[a] = zeta[full] - zeta[full & ~a];
  return FromTable(std::move(table), "mobius_reconstruct");
}

}  // namespace submod
