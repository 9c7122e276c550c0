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

#include "submod/sfm.h"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "submod/errors.h"
#include "submod/lovasz.h"

namespace submod {
namespace {

constexpr double kDropThreshold = 1e-12;
constexpr double kJitter = 1e-12;

class WeightedSpace {
 public:
  WeightedSpace(std::span<const double> metric, std::span<const double> center)
      : metric_(metric), center_(center) {}

  // <a - c, b - c>_d
  double CenteredDot(const Vector& a, const Vector& b) const {
    double total = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) {
      total += metric_[j] * (a[j] - center_[j]) * (b[j] - center_[j]);
    }
    return total;
  }

  double Norm2(const Vector& a) const {
    double total = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) total += metric_[j] * a[j] * a[j];
    return total;
  }

  // Direction for the greedy oracle: maximizing -d.(x - c) over B(F)
  // minimizes the linearization <x - c, s>_d.
  Vector DescentWeights(const Vector& x) const {
    Vector w(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) {
      w[j] = -metric_[j] * (x[j] - center_[j]);
    }
    return w;
  }

 private:
  std::span<const double> metric_;
  std::span<const double> center_;
};

// Affine minimizer of ||sum_i alpha_i (s_i - c)||_d over sum_i alpha_i = 1.
// Uses (G + rho 11^T) alpha ~ 1, which is positive definite whenever the
// points are affinely independent.
Vector AffineMinimizer(const WeightedSpace& space, Corral& corral) {
  const int m = static_cast<int>(corral.bases.size());
  corral.gram.assign(m, std::vector<double>(m, 0.0));
  Eigen::MatrixXd g(m, m);
  double scale = 0.0;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j <= i; ++j) {
      const double v = space.CenteredDot(corral.bases[i], corral.bases[j]);
      corral.gram[i][j] = corral.gram[j][i] = v;
      g(i, j) = g(j, i) = v;
    }
    scale = std::max(scale, g(i, i));
  }
  if (scale <= 0.0) scale = 1.0;
  Eigen::MatrixXd system = g.array() + scale;
  system.diagonal().array() += kJitter * scale;
  const Eigen::VectorXd ones = Eigen::VectorXd::Ones(m);
  const Eigen::VectorXd v = system.ldlt().solve(ones);
  const double total = v.sum();
  Vector alpha(m);
  for (int i = 0; i < m; ++i) alpha[i] = v(i) / total;
  return alpha;
}

Vector Combine(const Corral& corral) {
  Vector x(corral.bases.front().size(), 0.0);
  for (std::size_t i = 0; i < corral.bases.size(); ++i) {
    for (std::size_t j = 0; j < x.size(); ++j) {
      x[j] += corral.coeffs[i] * corral.bases[i][j];
    }
  }
  return x;
}

void DropSmall(Corral& corral) {
  std::size_t kept = 0;
  for (std::size_t i = 0; i < corral.bases.size(); ++i) {
    if (corral.coeffs[i] > kDropThreshold) {
      if (kept != i) corral.bases[kept] = std::move(corral.bases[i]);
      corral.coeffs[kept] = corral.coeffs[i];
      ++kept;
    }
  }
  corral.bases.resize(kept);
  corral.coeffs.resize(kept);
  const double total =
      std::accumulate(corral.coeffs.begin(), corral.coeffs.end(), 0.0);
  for (double& c : corral.coeffs) c /= total;
}

bool SameVertex(const Vector& a, const Vector& b) {
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (std::abs(a[j] - b[j]) > 1e-12 * (1.0 + std::abs(a[j]))) return false;
  }
  return true;
}

void RequireLength(const SetFunction& f, std::size_t n, const char* what) {
  if (static_cast<int>(n) != f.size()) {
    Fail(ErrorCode::kInvalidArgument,
         std::string(what) + " length does not match the ground set");
  }
}

}  // namespace

MinNormResult MinNormPoint(const SetFunction& f, std::span<const double> metric,
                           std::span<const double> center,
                           const MinNormOptions& options) {
  const int p = f.size();
  RequireLength(f, metric.size(), "metric");
  RequireLength(f, center.size(), "center");
  for (double d : metric) {
    if (!(d > 0.0)) Fail(ErrorCode::kInvalidArgument, "metric must be > 0");
  }
  if (!(options.eps > 0.0)) {
    Fail(ErrorCode::kInvalidArgument, "eps must be > 0");
  }
  const WeightedSpace space(metric, center);
  const int max_cycles =
      options.max_major_cycles > 0 ? options.max_major_cycles : 100 * p;

  MinNormResult result;
  Corral& corral = result.corral;
  {
    // Start at the vertex that is best aligned with the center.
    Vector w(p);
    for (int j = 0; j < p; ++j) w[j] = metric[j] * center[j];
    corral.bases.push_back(GreedyBase(f, w));
    corral.coeffs = {1.0};
  }
  Vector x = corral.bases.front();
  auto distance2 = [&](const Vector& y) { return space.CenteredDot(y, y); };
  double current = distance2(x);
  result.history.push_back(current);

  for (int cycle = 1; cycle <= max_cycles; ++cycle) {
    result.major_cycles = cycle;
    const Vector q = GreedyBase(f, space.DescentWeights(x));
    Vector xc(p);
    for (int j = 0; j < p; ++j) xc[j] = x[j] - center[j];
    Vector diff(p);
    for (int j = 0; j < p; ++j) diff[j] = x[j] - q[j];
    double gap = 0.0;
    for (int j = 0; j < p; ++j) gap += metric[j] * xc[j] * diff[j];
    result.gap = gap;
    if (gap <= options.eps * (1.0 + space.Norm2(x))) {
      result.converged = true;
      break;
    }
    bool repeated = false;
    for (const Vector& b : corral.bases) repeated = repeated || SameVertex(b, q);
    if (repeated) break;  // No progress is possible in floating point.

    const Corral saved = corral;
    corral.bases.push_back(q);
    corral.coeffs.push_back(0.0);
    // Minor cycles: move toward the affine minimizer until it lies in the
    // relative interior of the convex hull of the corral.
    for (int minor = 0; minor <= p + 1; ++minor) {
      const Vector alpha = AffineMinimizer(space, corral);
      const double smallest = *std::min_element(alpha.begin(), alpha.end());
      if (smallest > kDropThreshold) {
        corral.coeffs = alpha;
        break;
      }
      double theta = 1.0;
      for (std::size_t i = 0; i < alpha.size(); ++i) {
        if (alpha[i] <= kDropThreshold && corral.coeffs[i] - alpha[i] > 0.0) {
          theta = std::min(theta, corral.coeffs[i] / (corral.coeffs[i] - alpha[i]));
        }
      }
      for (std::size_t i = 0; i < alpha.size(); ++i) {
        corral.coeffs[i] = (1.0 - theta) * corral.coeffs[i] + theta * alpha[i];
      }
      DropSmall(corral);
      if (corral.bases.size() == 1) break;
    }
    const Vector next = Combine(corral);
    const double next_distance = distance2(next);
    if (!(next_distance < current)) {
      // Stalled; keep the previous iterate and its corral.
      corral = saved;
      break;
    }
    x = next;
    current = next_distance;
    result.history.push_back(current);
  }
  if (!result.converged) {
    // Report the gap of the returned iterate.
    const Vector q = GreedyBase(f, space.DescentWeights(x));
    double gap = 0.0;
    for (int j = 0; j < p; ++j) {
      gap += metric[j] * (x[j] - center[j]) * (x[j] - q[j]);
    }
    result.gap = gap;
    result.converged = gap <= options.eps * (1.0 + space.Norm2(x));
  }
  result.x = x;
  return result;
}

MinNormResult MinNormPoint(const SetFunction& f,
                           const MinNormOptions& options) {
  const Vector ones(f.size(), 1.0);
  const Vector zeros(f.size(), 0.0);
  return MinNormPoint(f, ones, zeros, options);
}

double CertificateGap(const SetFunction& f, Subset a,
                      std::span<const double> s) {
  RequireLength(f, s.size(), "certificate");
  double negative_part = 0.0;
  for (double v : s) negative_part += std::min(v, 0.0);
  return f(a) - negative_part;
}

namespace {

bool WithinTie(double value, double best, double tie_tol) {
  return value <= best + tie_tol * std::max(1.0, std::abs(best));
}

SfmResult MinimizeByMinNorm(const SetFunction& f, const SfmOptions& options) {
  MinNormOptions mn;
  mn.eps = options.eps;
  const MinNormResult run = MinNormPoint(f, mn);
  if (!run.converged) {
    Fail(ErrorCode::kNoConvergence,
         "minimum-norm point did not converge after " +
             std::to_string(run.major_cycles) + " major cycles (gap " +
             std::to_string(run.gap) + ")");
  }
  const int p = f.size();
  std::vector<int> order(p);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return run.x[a] < run.x[b]; });
  std::vector<Subset> chain(p + 1);
  std::vector<double> values(p + 1, 0.0);
  for (int i = 0; i < p; ++i) {
    chain[i + 1] = chain[i].With(order[i]);
    values[i + 1] = f(chain[i + 1]);
  }
  const double best = *std::min_element(values.begin(), values.end());
  int first = -1;
  int last = -1;
  for (int i = 0; i <= p; ++i) {
    if (WithinTie(values[i], best, options.tie_tol)) {
      if (first < 0) first = i;
      last = i;
    }
  }
  SfmResult result;
  result.min_value = values[first];
  result.minimal_minimizer = chain[first];
  result.maximal_minimizer = chain[last];
  result.certificate = run.x;
  result.gap = CertificateGap(f, result.minimal_minimizer, run.x);
  return result;
}

SfmResult MinimizeByBruteForce(const SetFunction& f,
                               const SfmOptions& options) {
  const std::vector<double> table = ToExplicit(f, options.max_exhaustive);
  const double best = *std::min_element(table.begin(), table.end());
  std::uint64_t intersection = table.size() - 1;
  std::uint64_t union_bits = 0;
  for (std::uint64_t m = 0; m < table.size(); ++m) {
    if (WithinTie(table[m], best, options.tie_tol)) {
      intersection &= m;
      union_bits |= m;
    }
  }
  SfmResult result;
  result.minimal_minimizer = Subset(intersection);
  result.maximal_minimizer = Subset(union_bits);
  result.min_value = table[intersection];
  MinNormOptions mn;
  mn.eps = options.eps;
  result.certificate = MinNormPoint(f, mn).x;
  result.gap = CertificateGap(f, result.minimal_minimizer, result.certificate);
  return result;
}

}  // namespace

SfmResult Minimize(const SetFunction& f, const SfmOptions& options) {
  switch (options.backend) {
    case SfmBackend::kMinNorm:
      return MinimizeByMinNorm(f, options);
    case SfmBackend::kBrute:
      return MinimizeByBruteForce(f, options);
  }
  Fail(ErrorCode::kInvalidArgument, "unknown backend");
}

std::vector<LevelBlock> RecoverLevelValues(const SetFunction& f,
                                           std::span<const double> x,
                                           double group_tol,
                                           double agree_tol) {
  RequireLength(f, x.size(), "x");
  const int p = f.size();
  std::vector<int> order(p);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return x[a] < x[b]; });
  std::vector<LevelBlock> blocks;
  for (int i = 0; i < p; ++i) {
    const int k = order[i];
    if (blocks.empty() || x[k] - x[order[i - 1]] > group_tol) {
      blocks.push_back({Subset(), 0.0});
    }
    blocks.back().block = blocks.back().block.With(k);
  }
  Subset prefix;
  double previous = 0.0;
  for (LevelBlock& level : blocks) {
    prefix = prefix | level.block;
    const double current = f(prefix);
    level.value = (current - previous) / level.block.size();
    previous = current;
    ForEachElement(level.block, [&](int k) {
      if (std::abs(x[k] - level.value) > agree_tol) {
        Fail(ErrorCode::kNumericalInconsistency,
             "recovered level value " + std::to_string(level.value) +
                 " disagrees with x[" + std::to_string(k) +
                 "] = " + std::to_string(x[k]));
      }
    });
  }
  return blocks;
}

}  // namespace submod
