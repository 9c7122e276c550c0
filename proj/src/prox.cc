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

#include "submod/prox.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <utility>

#include "submod/errors.h"
#include "submod/lovasz.h"
#include "submod/polyhedra.h"
#include "submod/scalar_root.h"
#include "submod/transforms.h"

namespace submod {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void RequireSize(const SetFunction& f, const SeparableConvex& psi) {
  if (psi.size() != f.size()) {
    Fail(ErrorCode::kInvalidArgument,
         "separable family has " + std::to_string(psi.size()) +
             " coordinates, ground set has " + std::to_string(f.size()));
  }
}

void RequireLength(std::size_t n, int p, const char* what) {
  if (static_cast<int>(n) != p) {
    Fail(ErrorCode::kInvalidArgument,
         std::string(what) + " length does not match the ground set");
  }
}

void ValidateCoordinate(const ScalarConvex& c, int j) {
  const std::string where = "coordinate " + std::to_string(j) + ": ";
  static constexpr double kGrid[] = {-10.0, -3.0, -1.0, -0.25, 0.0,
                                     0.25,  1.0,  3.0,  10.0};
  double previous = -std::numeric_limits<double>::infinity();
  for (double x : kGrid) {
    const double y = c.derivative(x);
    if (!(y > previous)) {
      Fail(ErrorCode::kInvalidArgument,
           where + "derivative is not strictly increasing");
    }
    previous = y;
    const double back = c.inverse_derivative(y);
    if (!(std::abs(back - x) <= 1e-9 * std::max(1.0, std::abs(x)))) {
      Fail(ErrorCode::kInvalidArgument,
           where + "inverse derivative is inconsistent at x = " +
               std::to_string(x));
    }
  }
  for (double y : {-1e6, 1e6}) {
    const double x = c.inverse_derivative(y);
    if (!std::isfinite(x) ||
        !(std::abs(c.derivative(x) - y) <= 1e-6 * std::abs(y))) {
      Fail(ErrorCode::kInvalidArgument,
           where + "derivative is not surjective");
    }
  }
}

// alpha with sum_{j in a} psi_j'(alpha) = target.
double SolveLevel(const SeparableConvex& psi, Subset a, double target,
                  double hint) {
  if (const auto& q = psi.quadratic()) {
    double weight = 0.0;
    double moment = 0.0;
    ForEachElement(a, [&](int j) {
      weight += q->weights[j];
      moment += q->weights[j] * q->centers[j];
    });
    return (moment + target) / weight;
  }
  auto h = [&psi, a](double alpha) {
    double total = 0.0;
    ForEachElement(a, [&](int j) { total += psi.Derivative(j, alpha); });
    return total;
  };
  return SolveIncreasing(h, target, hint);
}

SfmOptions ToSfmOptions(const ProxOptions& options) {
  SfmOptions sfm;
  sfm.backend = options.backend;
  sfm.eps = options.eps;
  sfm.max_exhaustive = options.max_exhaustive;
  return sfm;
}

Vector DecompositionDual(const SetFunction& f, const SeparableConvex& psi,
                         const ProxOptions& options, int depth, int limit) {
  if (depth > limit) {
    Fail(ErrorCode::kRecursionOverflow,
         "decomposition exceeded depth " + std::to_string(limit));
  }
  const int p = f.size();
  const Subset all = f.ground();
  const double at_v = f(all);
  if (p == 1) return {at_v};

  const double alpha = SolveLevel(psi, all, -at_v, 0.0);
  Vector t(p);
  for (int j = 0; j < p; ++j) t[j] = -psi.Derivative(j, alpha);

  Vector minus_t(p);
  std::transform(t.begin(), t.end(), minus_t.begin(), std::negate<>());
  const SfmResult split = Minimize(AddModular(f, minus_t), ToSfmOptions(options));
  const Subset a = split.maximal_minimizer;
  if (a == all || a.empty()) return t;

  Vector s(p);
  const IndexMap inner(a);
  const IndexMap outer(a.Complement(p));
  const Reindexed restricted = Restrict(f, a);
  const Vector s_inner =
      DecompositionDual(restricted.function, psi.Select(inner.to_parent()),
                        options, depth + 1, limit);
  const Reindexed contracted = Contract(f, a);
  const Vector s_outer =
      DecompositionDual(contracted.function, psi.Select(outer.to_parent()),
                        options, depth + 1, limit);
  for (int i = 0; i < inner.local_size(); ++i) s[inner.ToParent(i)] = s_inner[i];
  for (int i = 0; i < outer.local_size(); ++i) s[outer.ToParent(i)] = s_outer[i];
  return s;
}

Vector HomotopyPrimal(const SetFunction& f, const SeparableConvex& psi,
                      const ProxOptions& options, int depth, int limit) {
  if (depth > limit) {
    Fail(ErrorCode::kRecursionOverflow,
         "homotopy exceeded depth " + std::to_string(limit));
  }
  const int p = f.size();
  const Subset all = f.ground();
  const SfmOptions sfm = ToSfmOptions(options);

  double scale = std::abs(f(all));
  double alpha = std::numeric_limits<double>::infinity();
  Subset last;
  for (int k = 0; k < p; ++k) {
    const double single = f(Subset::Singleton(k));
    scale = std::max(scale, std::abs(single));
    const double candidate = psi.InverseDerivative(k, -single);
    if (candidate < alpha) {
      alpha = candidate;
      last = Subset::Singleton(k);
    }
  }
  const double tol = 1e-12 * std::max(1.0, scale);

  auto shifted = [&](double level) {
    Vector slope(p);
    for (int j = 0; j < p; ++j) slope[j] = psi.Derivative(j, level);
    return AddModular(f, std::move(slope));
  };

  SfmResult current = Minimize(shifted(alpha), sfm);
  int iterations = 0;
  while (current.min_value < -tol) {
    if (++iterations > options.max_iterations) {
      Fail(ErrorCode::kNoConvergence,
           "homotopy secant iteration exceeded " +
               std::to_string(options.max_iterations) + " steps");
    }
    const Subset a = current.maximal_minimizer;
    const double next = SolveLevel(psi, a, -f(a), alpha);
    if (!(next > alpha)) break;
    alpha = next;
    last = a;
    current = Minimize(shifted(alpha), sfm);
  }

  const Subset top = current.maximal_minimizer | last;
  Vector u(p, alpha);
  if (top == all) return u;

  const IndexMap outer(top.Complement(p));
  const Reindexed contracted = Contract(f, top);
  const Vector rest =
      HomotopyPrimal(contracted.function, psi.Select(outer.to_parent()),
                     options, depth + 1, limit);
  for (int i = 0; i < outer.local_size(); ++i) u[outer.ToParent(i)] = rest[i];
  return u;
}

int DepthLimit(const ProxOptions& options, int p) {
  return options.depth_limit > 0 ? options.depth_limit : p;
}

}  // namespace

SeparableConvex::SeparableConvex(std::vector<ScalarConvex> coordinates) {
  if (coordinates.empty()) {
    Fail(ErrorCode::kInvalidArgument, "separable family is empty");
  }
  for (std::size_t j = 0; j < coordinates.size(); ++j) {
    ScalarConvex& c = coordinates[j];
    if (!c.derivative) {
      Fail(ErrorCode::kInvalidArgument,
           "coordinate " + std::to_string(j) + " has no derivative");
    }
    if (!c.inverse_derivative) {
      c.inverse_derivative = [d = c.derivative](double y) {
        return SolveIncreasing(d, y, 0.0);
      };
    }
    try {
      ValidateCoordinate(c, static_cast<int>(j));
    } catch (const Error& e) {
      if (e.code() == ErrorCode::kInvalidArgument) throw;
      Fail(ErrorCode::kInvalidArgument, e.what());
    }
  }
  coordinates_ = std::make_shared<const std::vector<ScalarConvex>>(
      std::move(coordinates));
}

SeparableConvex::SeparableConvex(QuadraticSpec spec) {
  if (spec.weights.empty() || spec.weights.size() != spec.centers.size()) {
    Fail(ErrorCode::kInvalidArgument,
         "quadratic weights and centers must be nonempty and equally long");
  }
  std::vector<ScalarConvex> coordinates;
  coordinates.reserve(spec.weights.size());
  for (std::size_t j = 0; j < spec.weights.size(); ++j) {
    const double a = spec.weights[j];
    const double z = spec.centers[j];
    if (!(a > 0.0) || !std::isfinite(a) || !std::isfinite(z)) {
      Fail(ErrorCode::kInvalidArgument,
           "quadratic weight " + std::to_string(j) + " must be positive");
    }
    coordinates.push_back(
        {[a, z](double w) { return 0.5 * a * (w - z) * (w - z); },
         [a, z](double w) { return a * (w - z); },
         [a, z](double y) { return z + y / a; }});
  }
  coordinates_ = std::make_shared<const std::vector<ScalarConvex>>(
      std::move(coordinates));
  quadratic_ = std::move(spec);
}

bool SeparableConvex::has_values() const {
  return std::all_of(coordinates_->begin(), coordinates_->end(),
                     [](const ScalarConvex& c) { return bool(c.value); });
}

double SeparableConvex::Value(int j, double w) const {
  const ScalarConvex& c = (*coordinates_)[j];
  return c.value ? c.value(w) : kNaN;
}

double SeparableConvex::Derivative(int j, double w) const {
  return (*coordinates_)[j].derivative(w);
}

double SeparableConvex::InverseDerivative(int j, double y) const {
  return (*coordinates_)[j].inverse_derivative(y);
}

double SeparableConvex::ConjugateValue(int j, double y) const {
  const double x = InverseDerivative(j, y);
  return y * x - Value(j, x);
}

SeparableConvex SeparableConvex::Select(std::span<const int> indices) const {
  SeparableConvex out;
  auto coordinates = std::make_shared<std::vector<ScalarConvex>>();
  coordinates->reserve(indices.size());
  for (int j : indices) coordinates->push_back((*coordinates_)[j]);
  out.coordinates_ = std::move(coordinates);
  if (quadratic_) {
    QuadraticSpec q;
    for (int j : indices) {
      q.weights.push_back(quadratic_->weights[j]);
      q.centers.push_back(quadratic_->centers[j]);
    }
    out.quadratic_ = std::move(q);
  }
  return out;
}

void ComputeObjectives(const SetFunction& f, const SeparableConvex& psi,
                       ProxResult& result) {
  if (!psi.has_values()) {
    result.primal_value = result.dual_value = result.gap = kNaN;
    return;
  }
  double primal = LovaszExtension(f, result.u);
  double dual = 0.0;
  for (int j = 0; j < psi.size(); ++j) {
    primal += psi.Value(j, result.u[j]);
    dual -= psi.ConjugateValue(j, -result.s[j]);
  }
  result.primal_value = primal;
  result.dual_value = dual;
  result.gap = primal - dual;
}

ProxResult ProxMinNorm(const SetFunction& f, const QuadraticSpec& spec,
                       double eps) {
  const SeparableConvex psi(spec);
  RequireSize(f, psi);
  const int p = f.size();
  Vector metric(p);
  Vector center(p);
  for (int j = 0; j < p; ++j) {
    metric[j] = 1.0 / spec.weights[j];
    center[j] = spec.weights[j] * spec.centers[j];
  }
  MinNormOptions options;
  options.eps = eps;
  const MinNormResult mnp = MinNormPoint(f, metric, center, options);
  if (!mnp.converged) {
    Fail(ErrorCode::kNoConvergence,
         "minimum-norm point did not converge in " +
             std::to_string(mnp.major_cycles) + " major cycles");
  }
  ProxResult result;
  result.s = mnp.x;
  result.u.resize(p);
  for (int j = 0; j < p; ++j) {
    result.u[j] = spec.centers[j] - result.s[j] / spec.weights[j];
  }
  ComputeObjectives(f, psi, result);
  return result;
}

ProxResult ProxDecomposition(const SetFunction& f, const SeparableConvex& psi,
                             const ProxOptions& options) {
  RequireSize(f, psi);
  const int p = f.size();
  ProxResult result;
  result.s = DecompositionDual(f, psi, options, 0, DepthLimit(options, p));
  result.u.resize(p);
  for (int j = 0; j < p; ++j) {
    result.u[j] = psi.InverseDerivative(j, -result.s[j]);
  }
  ComputeObjectives(f, psi, result);
  return result;
}

ProxResult ProxHomotopy(const SetFunction& f, const SeparableConvex& psi,
                        const ProxOptions& options) {
  RequireSize(f, psi);
  const int p = f.size();
  ProxResult result;
  result.u = HomotopyPrimal(f, psi, options, 0, DepthLimit(options, p));
  result.s.resize(p);
  for (int j = 0; j < p; ++j) result.s[j] = -psi.Derivative(j, result.u[j]);
  ComputeObjectives(f, psi, result);
  return result;
}

ProxResult Prox(const SetFunction& f, const SeparableConvex& psi,
                ProxSolver solver, const ProxOptions& options) {
  switch (solver) {
    case ProxSolver::kMinNorm:
      if (!psi.quadratic()) {
        Fail(ErrorCode::kInvalidArgument,
             "the minimum-norm prox solver needs a quadratic family");
      }
      return ProxMinNorm(f, *psi.quadratic(), options.eps);
    case ProxSolver::kDecomposition:
      return ProxDecomposition(f, psi, options);
    case ProxSolver::kHomotopy:
      return ProxHomotopy(f, psi, options);
  }
  Fail(ErrorCode::kInvalidArgument, "unknown prox solver");
}

ThresholdSets ProxThresholdSets(std::span<const double> u, double alpha,
                                double tau) {
  ThresholdSets sets;
  for (std::size_t k = 0; k < u.size(); ++k) {
    const int j = static_cast<int>(k);
    if (u[k] > alpha + tau) sets.minimal = sets.minimal.With(j);
    if (u[k] >= alpha - tau) sets.maximal = sets.maximal.With(j);
  }
  return sets;
}

double LineSearchP(const SetFunction& f, std::span<const double> s0,
                   std::span<const double> t,
                   const LineSearchOptions& options) {
  const int p = f.size();
  RequireLength(s0.size(), p, "base point");
  RequireLength(t.size(), p, "direction");
  Vector minus_s0(s0.begin(), s0.end());
  for (double& v : minus_s0) v = -v;
  const SetFunction g = AddModular(f, minus_s0);

  double ratio = std::numeric_limits<double>::infinity();
  for (int k = 0; k < p; ++k) {
    if (t[k] > 0.0) ratio = std::min(ratio, g(Subset::Singleton(k)) / t[k]);
  }
  if (!std::isfinite(ratio)) {
    Fail(ErrorCode::kUnbounded, "direction has no positive coordinate");
  }
  if (ratio <= 0.0) return 0.0;

  SfmOptions sfm;
  sfm.backend = options.backend;
  auto slack = [&](double lambda) {
    Vector step(t.begin(), t.end());
    for (double& v : step) v *= -lambda;
    return Minimize(AddModular(g, std::move(step)), sfm);
  };
  double scale = 1.0;
  for (int k = 0; k < p; ++k) scale = std::max(scale, std::abs(g(Subset::Singleton(k))));
  const double tol = options.tol * scale;

  double lambda = (1.0 + 1e-6) * ratio;
  SfmResult current = slack(lambda);
  int iterations = 0;
  while (current.min_value < -tol) {
    if (++iterations > options.max_iterations) {
      Fail(ErrorCode::kNoConvergence,
           "line search exceeded " + std::to_string(options.max_iterations) +
               " steps");
    }
    const Subset a = current.maximal_minimizer;
    const double direction = ModularValue(t, a);
    if (!(direction > 0.0)) {
      Fail(ErrorCode::kNumericalInconsistency,
           "binding set has non-positive direction mass");
    }
    const double next = g(a) / direction;
    if (!(next < lambda)) break;
    lambda = std::max(next, 0.0);
    current = slack(lambda);
  }
  return lambda;
}

PolyhedronProxResult ProxOverP(const SetFunction& f, const SeparableConvex& psi,
                               ProxSolver solver, const ProxOptions& options) {
  const ProxResult base = Prox(f, psi, solver, options);
  const int p = f.size();
  PolyhedronProxResult out{Vector(p), Vector(p), base.u, base.s};
  for (int k = 0; k < p; ++k) {
    out.w[k] = std::max(base.u[k], 0.0);
    out.s[k] = std::min(base.s[k], -psi.Derivative(k, 0.0));
  }
  return out;
}

PolyhedronProxResult ProxOverPPlus(const SetFunction& f,
                                   const SeparableConvex& psi,
                                   ProxSolver solver,
                                   const ProxOptions& options) {
  const int p = f.size();
  const Subset all = f.ground();
  const double at_v = f(all);
  for (int k = 0; k < p; ++k) {
    const double gain = at_v - f(all.Without(k));
    if (gain < -kDefaultTol * std::max(1.0, std::abs(at_v))) {
      Fail(ErrorCode::kMonotonicityRequired,
           "F(V) - F(V \\ {" + std::to_string(k) + "}) = " +
               std::to_string(gain) + " < 0");
    }
  }
  const ProxResult base = Prox(f, psi, solver, options);
  PolyhedronProxResult out{Vector(p), Vector(p), base.u, base.s};
  for (int k = 0; k < p; ++k) {
    const double free = -psi.Derivative(k, 0.0);
    out.s[k] = std::max(0.0, std::min(free, base.s[k]));
    out.w[k] = psi.InverseDerivative(k, -out.s[k]);
  }
  return out;
}

std::vector<ScalarFn> DualDerivatives(const SeparableConvex& psi) {
  std::vector<ScalarFn> out;
  out.reserve(psi.size());
  for (int k = 0; k < psi.size(); ++k) {
    out.push_back([psi, k](double s) { return -psi.InverseDerivative(k, -s); });
  }
  return out;
}

bool CheckSeparableOptimality(const SetFunction& f, std::span<const double> s,
                              const std::vector<ScalarFn>& derivatives,
                              double tol, double tight_tol) {
  const int p = f.size();
  RequireLength(s.size(), p, "base vector");
  RequireLength(derivatives.size(), p, "derivative list");
  Vector slope(p);
  for (int k = 0; k < p; ++k) slope[k] = derivatives[k](s[k]);

  bool by_exchange = true;
  for (const auto& [k, q] : ExchangeablePairs(f, s, tight_tol)) {
    if (slope[k] < slope[q] - tol) {
      by_exchange = false;
      break;
    }
  }

  std::vector<int> order(p);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return slope[a] < slope[b]; });
  bool by_levels = true;
  Subset prefix;
  double prefix_value = 0.0;
  double prefix_mass = 0.0;
  for (int i = 0; i < p && by_levels; ++i) {
    prefix = prefix.With(order[i]);
    prefix_mass += s[order[i]];
    const bool boundary = i + 1 == p || slope[order[i + 1]] > slope[order[i]] + tol;
    if (!boundary) continue;
    prefix_value = f(prefix);
    if (std::abs(prefix_mass - prefix_value) > tight_tol) {
      by_levels = false;
    }
  }

  if (by_exchange != by_levels) {
    Fail(ErrorCode::kNumericalInconsistency,
         std::string("exchange and level-set optimality disagree (exchange: ") +
             (by_exchange ? "optimal" : "not optimal") + ")");
  }
  return by_exchange;
}

std::weak_ordering LexCompare(std::span<const double> s1,
                              std::span<const double> s2,
                              const std::vector<ScalarFn>& derivatives,
                              double tol) {
  const std::size_t p = derivatives.size();
  if (s1.size() != p || s2.size() != p) {
    Fail(ErrorCode::kInvalidArgument, "lex_compare length mismatch");
  }
  Vector t1(p);
  Vector t2(p);
  for (std::size_t k = 0; k < p; ++k) {
    t1[k] = derivatives[k](s1[k]);
    t2[k] = derivatives[k](s2[k]);
  }
  std::sort(t1.begin(), t1.end());
  std::sort(t2.begin(), t2.end());
  for (std::size_t i = 0; i < p; ++i) {
    if (std::abs(t1[i] - t2[i]) <= tol) continue;
    return t1[i] < t2[i] ? std::weak_ordering::less
                         : std::weak_ordering::greater;
  }
  return std::weak_ordering::equivalent;
}

}  // namespace submod
