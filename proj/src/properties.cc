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

#include "submod/properties.h"

#include <cmath>
#include <cstdint>
#include <sstream>
#include <vector>

namespace submod {

std::string Describe(const Witness& w) {
  std::ostringstream os;
  os << "A=" << w.a.ToString();
  if (w.j >= 0) os << " j=" << w.j << " k=" << w.k;
  else os << " B=" << w.b.ToString();
  os << " lhs=" << w.lhs << " rhs=" << w.rhs;
  return os.str();
}

namespace {

PropertyReport Violation(Witness w) {
  PropertyReport r;
  r.holds = false;
  r.witness = w;
  return r;
}

}  // namespace

PropertyReport IsSubmodular(const SetFunction& f, double tol,
                            int max_exhaustive) {
  const int p = f.size();
  const std::vector<double> t = ToExplicit(f, max_exhaustive);
  const std::uint64_t n = t.size();
  for (std::uint64_t a = 0; a < n; ++a) {
    for (int j = 0; j < p; ++j) {
      const std::uint64_t bj = std::uint64_t{1} << j;
      if (a & bj) continue;
      for (int k = j + 1; k < p; ++k) {
        const std::uint64_t bk = std::uint64_t{1} << k;
        if (a & bk) continue;
        const double lhs = t[a | bk] - t[a];
        const double rhs = t[a | bj | bk] - t[a | bj];
        if (lhs < rhs - tol) {
          return Violation({Subset(a), Subset(), j, k, lhs, rhs});
        }
      }
    }
  }
  return {};
}

PropertyReport IsMonotone(const SetFunction& f, double tol,
                          int max_exhaustive) {
  const int p = f.size();
  const std::vector<double> t = ToExplicit(f, max_exhaustive);
  for (std::uint64_t a = 0; a < t.size(); ++a) {
    for (int k = 0; k < p; ++k) {
      const std::uint64_t bk = std::uint64_t{1} << k;
      if (a & bk) continue;
      if (t[a | bk] < t[a] - tol) {
        return Violation({Subset(a), Subset(), -1, k, t[a | bk], t[a]});
      }
    }
  }
  return {};
}

PropertyReport IsSymmetric(const SetFunction& f, double tol,
                           int max_exhaustive) {
  const std::vector<double> t = ToExplicit(f, max_exhaustive);
  const std::uint64_t full = t.size() - 1;
  for (std::uint64_t a = 0; a < t.size(); ++a) {
    const std::uint64_t c = full & ~a;
    if (std::abs(t[a] - t[c]) > tol) {
      return Violation({Subset(a), Subset(c), -1, -1, t[a], t[c]});
    }
  }
  return {};
}

PropertyReport IsPosimodular(const SetFunction& f, double tol,
                             int max_exhaustive) {
  RequireExhaustive(2 * f.size(), max_exhaustive, "is_posimodular");
  const std::vector<double> t = ToExplicit(f, max_exhaustive);
  const std::uint64_t n = t.size();
  for (std::uint64_t a = 0; a < n; ++a) {
    for (std::uint64_t b = 0; b < n; ++b) {
      const double lhs = t[a] + t[b];
      const double rhs = t[a & ~b] + t[b & ~a];
      if (lhs < rhs - tol) {
        return Violation({Subset(a), Subset(b), -1, -1, lhs, rhs});
      }
    }
  }
  return {};
}

}  // namespace submod
