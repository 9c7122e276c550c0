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

#ifndef SUBMOD_PROX_H_
#define SUBMOD_PROX_H_

#include <compare>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "submod/set_function.h"
#include "submod/sfm.h"
#include "submod/subset.h"

namespace submod {

using ScalarFn = std::function<double(double)>;

// One strictly convex, continuously differentiable psi_j with a surjective
// derivative. `value` may be empty when objective values are not needed;
// an empty `inverse_derivative` is computed by scalar root finding.
struct ScalarConvex {
  ScalarFn value;
  ScalarFn derivative;
  ScalarFn inverse_derivative;
};

// psi_j(w) = (a_j / 2) (w - z_j)^2 with a_j > 0.
struct QuadraticSpec {
  Vector weights;
  Vector centers;
};

// The separable family {psi_j}. Quadratic families keep their parameters so
// solvers can take closed-form paths.
class SeparableConvex {
 public:
  // Validates monotonicity, inverse consistency (1e-9) and surjectivity of
  // each derivative on a test grid; fails with kInvalidArgument otherwise.
  explicit SeparableConvex(std::vector<ScalarConvex> coordinates);
  explicit SeparableConvex(QuadraticSpec spec);

  int size() const { return static_cast<int>(coordinates_->size()); }
  bool has_values() const;
  const std::optional<QuadraticSpec>& quadratic() const { return quadratic_; }

  double Value(int j, double w) const;
  double Derivative(int j, double w) const;
  // (psi_j')^{-1}(y), which is also the derivative of the conjugate.
  double InverseDerivative(int j, double y) const;
  // psi_j^*(y) = y x - psi_j(x) with x = (psi_j')^{-1}(y).
  double ConjugateValue(int j, double y) const;

  // The sub-family for the given parent indices, in order.
  SeparableConvex Select(std::span<const int> indices) const;

 private:
  SeparableConvex() = default;

  std::shared_ptr<const std::vector<ScalarConvex>> coordinates_;
  std::optional<QuadraticSpec> quadratic_;
};

// Primal-dual pair for min_w f(w) + sum_j psi_j(w_j) and its dual
// max_{s in B(F)} -sum_j psi_j^*(-s_j), linked by s_k = -psi_k'(u_k).
struct ProxResult {
  Vector u;
  Vector s;
  double primal_value = 0.0;
  double dual_value = 0.0;
  double gap = 0.0;
};

// Fills primal/dual values and the gap from u and s (NaN without values).
void ComputeObjectives(const SetFunction& f, const SeparableConvex& psi,
                       ProxResult& result);

struct ProxOptions {
  SfmBackend backend = SfmBackend::kMinNorm;
  double eps = 1e-9;
  int max_exhaustive = kDefaultExhaustiveCap;
  // Zero means p.
  int depth_limit = 0;
  int max_iterations = 200;
};

// Dual by the minimum-norm point: min sum_j (s_j - a_j z_j)^2 / (2 a_j) over
// B(F), i.e. metric 1/a and center a.z; then u = z - s / a.
ProxResult ProxMinNorm(const SetFunction& f, const QuadraticSpec& spec,
                       double eps = 1e-9);

// Divide-and-conquer dual solver. At each level t equalizes the dual
// derivatives subject to t(V) = F(V); the largest minimizer A of F - t then
// splits the problem into the restriction F_A and the contraction F^A.
ProxResult ProxDecomposition(const SetFunction& f, const SeparableConvex& psi,
                             const ProxOptions& options = {});

// Peels level sets of u from the top: the largest value is the smallest
// alpha with -psi'(alpha) in P(F), located by secant steps on
// g(alpha) = min_A F(A) + psi'(alpha)(A); the maximal minimizer at that
// alpha takes the value, and the rest is solved on the contraction.
ProxResult ProxHomotopy(const SetFunction& f, const SeparableConvex& psi,
                        const ProxOptions& options = {});

enum class ProxSolver { kMinNorm, kDecomposition, kHomotopy };

// Dispatch; kMinNorm requires a quadratic family.
ProxResult Prox(const SetFunction& f, const SeparableConvex& psi,
                ProxSolver solver, const ProxOptions& options = {});

struct ThresholdSets {
  Subset minimal;  // {u > alpha + tau}
  Subset maximal;  // {u >= alpha - tau}
};

// Minimal and maximal minimizers of A -> F(A) + sum_{j in A} psi_j'(alpha)
// read off the prox solution u.
ThresholdSets ProxThresholdSets(std::span<const double> u, double alpha,
                                double tau = 1e-9);

struct LineSearchOptions {
  SfmBackend backend = SfmBackend::kMinNorm;
  double tol = 1e-10;
  int max_iterations = 200;
};

// Largest lambda >= 0 with s0 + lambda t in P(F), for s0 in P(F). Fails with
// kUnbounded when no t_k > 0.
double LineSearchP(const SetFunction& f, std::span<const double> s0,
                   std::span<const double> t,
                   const LineSearchOptions& options = {});

struct PolyhedronProxResult {
  Vector w;  // Primal solution.
  Vector s;  // Dual solution.
  Vector v;  // Primal solution of the base-polyhedron problem.
  Vector t;  // Dual solution of the base-polyhedron problem.
};

// min_{w >= 0} f(w) + sum psi(w), dual over P(F): w = v_+ and
// s_k = min(t_k, -psi_k'(0)).
PolyhedronProxResult ProxOverP(const SetFunction& f, const SeparableConvex& psi,
                               ProxSolver solver,
                               const ProxOptions& options = {});

// min_w f(w_+) + sum psi(w), dual over P+(F), for non-decreasing F:
// s_k = clip(-psi_k'(0), [0, t_k]) and s_k + psi_k'(w_k) = 0. Fails with
// kMonotonicityRequired if some F(V) - F(V \ {k}) < 0 (which, for submodular
// F, is equivalent to F not being non-decreasing).
PolyhedronProxResult ProxOverPPlus(const SetFunction& f,
                                   const SeparableConvex& psi,
                                   ProxSolver solver,
                                   const ProxOptions& options = {});

// Derivatives of the dual objective g_k(s) = psi_k^*(-s):
// g_k'(s) = -(psi_k')^{-1}(-s).
std::vector<ScalarFn> DualDerivatives(const SeparableConvex& psi);

// s in B(F) minimizes sum_k g_k(s_k) over B(F) iff g_k'(s_k) >= g_q'(s_q)
// for every exchangeable pair (k, q). The level-set form (every
// {g'(s) <= alpha} tight) is evaluated too; disagreement between the two
// raises kNumericalInconsistency.
bool CheckSeparableOptimality(const SetFunction& f, std::span<const double> s,
                              const std::vector<ScalarFn>& derivatives,
                              double tol = 1e-8, double tight_tol = 1e-9);

// Compares the increasingly sorted vectors T(g'(s1)) and T(g'(s2))
// lexicographically; entries closer than tol count as equal.
std::weak_ordering LexCompare(std::span<const double> s1,
                              std::span<const double> s2,
                              const std::vector<ScalarFn>& derivatives,
                              double tol = 0.0);

}  // namespace submod

#endif  // SUBMOD_PROX_H_
