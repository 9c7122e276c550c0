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

#include "test_util.h"

#include <algorithm>
#include <cmath>
#include <limits>

namespace submod::testing {

SetFunction FOr() { return FromTable({0, 1, 1, 1}, "F_or"); }

Digraph SymmetricDigraph2() { return Digraph{2, {{0, 1, 1.0}, {1, 0, 1.0}}}; }

SetFunction SymmetricCut2() { return CutFunction(SymmetricDigraph2()); }

SetFunction Cardinality(int p) {
  return SetFunction(
      p, [](Subset a) { return static_cast<double>(a.size()); }, "card");
}

Digraph Path3() {
  return Digraph{3, {{0, 1, 1.0}, {1, 0, 1.0}, {1, 2, 1.0}, {2, 1, 1.0}}};
}

BruteMin BruteMinimize(const SetFunction& f, double tol) {
  const int p = f.size();
  std::vector<double> values(std::size_t{1} << p);
  double best = std::numeric_limits<double>::infinity();
  for (std::uint64_t m = 0; m < values.size(); ++m) {
    values[m] = f(Subset(m));
    best = std::min(best, values[m]);
  }
  BruteMin out;
  out.value = best;
  out.intersection = Subset::Full(p);
  for (std::uint64_t m = 0; m < values.size(); ++m) {
    if (values[m] <= best + tol) {
      out.minimizers.push_back(Subset(m));
      out.intersection = out.intersection & Subset(m);
      out.union_ = out.union_ | Subset(m);
    }
  }
  return out;
}

bool DefinitionOneSubmodular(const SetFunction& f, double tol) {
  const std::uint64_t n = std::uint64_t{1} << f.size();
  std::vector<double> v(n);
  for (std::uint64_t m = 0; m < n; ++m) v[m] = f(Subset(m));
  for (std::uint64_t a = 0; a < n; ++a) {
    for (std::uint64_t b = 0; b < n; ++b) {
      if (v[a] + v[b] < v[a | b] + v[a & b] - tol) return false;
    }
  }
  return true;
}

double BruteLineSearch(const SetFunction& f, std::span<const double> s0,
                       std::span<const double> t) {
  double best = std::numeric_limits<double>::infinity();
  const std::uint64_t n = std::uint64_t{1} << f.size();
  for (std::uint64_t m = 1; m < n; ++m) {
    const Subset a(m);
    const double mass = ModularValue(t, a);
    if (mass <= 0.0) continue;
    best = std::min(best, (f(a) - ModularValue(s0, a)) / mass);
  }
  return std::max(best, 0.0);
}

Eigen::VectorXd Nnls(const Eigen::MatrixXd& a, const Eigen::VectorXd& b) {
  const Eigen::Index n = a.cols();
  Eigen::VectorXd x = Eigen::VectorXd::Zero(n);
  std::vector<bool> passive(n, false);
  const double tol = 1e-12 * std::max<double>(1.0, a.cwiseAbs().maxCoeff());
  for (int outer = 0; outer < 3 * n + 10; ++outer) {
    const Eigen::VectorXd grad = a.transpose() * (b - a * x);
    Eigen::Index best = -1;
    double best_value = tol;
    for (Eigen::Index j = 0; j < n; ++j) {
      if (!passive[j] && grad(j) > best_value) {
        best_value = grad(j);
        best = j;
      }
    }
    if (best < 0) break;
    passive[best] = true;
    while (true) {
      std::vector<Eigen::Index> idx;
      for (Eigen::Index j = 0; j < n; ++j) {
        if (passive[j]) idx.push_back(j);
      }
      if (idx.empty()) break;
      const Eigen::MatrixXd sub = a(Eigen::all, idx);
      const Eigen::VectorXd z_sub = sub.colPivHouseholderQr().solve(b);
      Eigen::VectorXd z = Eigen::VectorXd::Zero(n);
      for (std::size_t i = 0; i < idx.size(); ++i) z(idx[i]) = z_sub(i);
      bool feasible = true;
      for (Eigen::Index j : idx) feasible = feasible && z(j) > 0.0;
      if (feasible) {
        x = z;
        break;
      }
      double alpha = 1.0;
      for (Eigen::Index j : idx) {
        if (z(j) <= 0.0) alpha = std::min(alpha, x(j) / (x(j) - z(j)));
      }
      x += alpha * (z - x);
      for (Eigen::Index j : idx) {
        if (x(j) <= tol) {
          x(j) = 0.0;
          passive[j] = false;
        }
      }
    }
  }
  return x;
}

SetFunction RandomInstance(std::uint64_t seed, int p_lo, int p_hi) {
  RandomSource pick(seed * 7919 + 17);
  const int p = pick.Integer(p_lo, p_hi);
  const auto family = static_cast<RandomFamily>(seed % 3);
  RandomOptions options;
  options.modular_shift = (seed / 3) % 2 == 1;
  return RandomSubmodular(seed, p, family, options);
}

double MaxAbsDiff(std::span<const double> a, std::span<const double> b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    worst = std::max(worst, std::abs(a[i] - b[i]));
  }
  return a.size() == b.size() ? worst : std::numeric_limits<double>::infinity();
}

}  // namespace submod::testing
