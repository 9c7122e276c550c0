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

#ifndef SUBMOD_SFM_H_
#define SUBMOD_SFM_H_

#include <span>
#include <vector>

#include "submod/set_function.h"
#include "submod/subset.h"

namespace submod {

// Active set of the minimum-norm-point iteration: greedy vertices of B(F)
// and convex weights, with x = sum_i coeffs[i] * bases[i].
struct Corral {
  std::vector<Vector> bases;
  Vector coeffs;
  // gram[i][j] = <bases[i] - c, bases[j] - c>_d for the last solve.
  std::vector<std::vector<double>> gram;
};

struct MinNormOptions {
  // Stop once the Wolfe gap <x-c, x-q>_d is at most eps * (1 + ||x||_d^2),
  // where q is the greedy minimizer of the linearization at x.
  double eps = 1e-9;
  // Zero means 100 * p.
  int max_major_cycles = 0;
};

struct MinNormResult {
  Vector x;
  Corral corral;
  double gap = 0.0;
  int major_cycles = 0;
  bool converged = false;
  // ||x - c||_d^2 after each accepted major cycle; strictly decreasing.
  std::vector<double> history;
};

// Minimizes sum_j d_j (s_j - c_j)^2 over s in B(F) with Wolfe's
// minimum-norm-point algorithm; linear minimization over B(F) is done by the
// greedy algorithm. F must be submodular and d > 0. Never throws on
// non-convergence: the best iterate is returned with converged == false.
MinNormResult MinNormPoint(const SetFunction& f, std::span<const double> metric,
                           std::span<const double> center,
                           const MinNormOptions& options = {});

// Euclidean case d = 1, c = 0.
MinNormResult MinNormPoint(const SetFunction& f,
                           const MinNormOptions& options = {});

enum class SfmBackend { kMinNorm, kBrute };

struct SfmOptions {
  SfmBackend backend = SfmBackend::kMinNorm;
  double eps = 1e-9;
  int max_exhaustive = kDefaultExhaustiveCap;
  // Values within tie_tol * max(1, |min|) of the minimum count as minimal.
  double tie_tol = 1e-9;
};

struct SfmResult {
  double min_value = 0.0;
  Subset minimal_minimizer;
  Subset maximal_minimizer;
  Vector certificate;  // A point of B(F).
  double gap = 0.0;    // F(minimal_minimizer) - certificate_-(V).
};

// Minimizes a submodular F over 2^V.
//
// kMinNorm: the Euclidean minimum-norm base x is computed, and the sets along
// the chain {x <= x_(1)} c {x <= x_(2)} c ... are evaluated exactly. The
// smallest and largest chain sets attaining the minimum are returned; for the
// exact minimum-norm point these are {x < 0} and {x <= 0}, which are the
// minimal and maximal minimizers. Raises kNoConvergence if the iteration
// budget runs out.
//
// kBrute: exhaustive scan; the minimal and maximal minimizers are the
// intersection and union of all minimizers (minimizers of a submodular
// function form a lattice). The certificate still comes from the
// minimum-norm point so the gap is meaningful.
SfmResult Minimize(const SetFunction& f, const SfmOptions& options = {});

// F(A) - sum_k min(s_k, 0). Nonnegative for s in B(F); zero iff A is a
// minimizer and s is dual optimal.
double CertificateGap(const SetFunction& f, Subset a,
                      std::span<const double> s);

struct LevelBlock {
  Subset block;
  double value = 0.0;
};

// Groups the coordinates of a minimum-norm base x into blocks of equal value
// (consecutive sorted values closer than group_tol share a block), then
// recomputes each value from the set-function alone:
//   c_j = [F(A_1 u ... u A_j) - F(A_1 u ... u A_{j-1})] / |A_j|,
// with blocks in increasing order of value. Raises kNumericalInconsistency
// if some recomputed value differs from x by more than agree_tol.
std::vector<LevelBlock> RecoverLevelValues(const SetFunction& f,
                                           std::span<const double> x,
                                           double group_tol = 1e-7,
                                           double agree_tol = 1e-6);

}  // namespace submod

#endif  // SUBMOD_SFM_H_
