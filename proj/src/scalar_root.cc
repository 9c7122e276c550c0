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

#include "submod/scalar_root.h"

#include <cmath>
#include <cstdint>
#include <string>

#include <boost/math/policies/policy.hpp>
#include <boost/math/tools/toms748_solve.hpp>

#include "submod/errors.h"

namespace submod {

double SolveIncreasing(const std::function<double(double)>& h, double target,
                       double hint, const ScalarRootOptions& options) {
  auto residual = [&](double x) { return h(x) - target; };
  double lo = hint;
  double hi = hint;
  double r_lo = residual(lo);
  if (r_lo == 0.0) return lo;
  double r_hi = r_lo;
  double step = options.initial_step * std::max(1.0, std::abs(hint));
  int iterations = 0;
  if (r_lo < 0.0) {
    while (r_hi < 0.0) {
      lo = hi;
      r_lo = r_hi;
      hi += step;
      step *= options.growth;
      r_hi = residual(hi);
      if (++iterations > options.max_iterations || !std::isfinite(hi)) {
        Fail(ErrorCode::kNoConvergence, "no upper bracket for scalar root");
      }
    }
  } else {
    while (r_lo > 0.0) {
      hi = lo;
      r_hi = r_lo;
      lo -= step;
      step *= options.growth;
      r_lo = residual(lo);
      if (++iterations > options.max_iterations || !std::isfinite(lo)) {
        Fail(ErrorCode::kNoConvergence, "no lower bracket for scalar root");
      }
    }
  }
  if (r_lo == 0.0) return lo;
  if (r_hi == 0.0) return hi;

  const double rel = options.relative_tol;
  auto tolerance = [rel](double a, double b) {
    return std::abs(b - a) <= rel * std::max(1.0, std::min(std::abs(a), std::abs(b)));
  };
  std::uintmax_t max_iter = options.max_iterations;
  using Policy = boost::math::policies::policy<
      boost::math::policies::evaluation_error<
          boost::math::policies::ignore_error>>;
  const auto [a, b] = boost::math::tools::toms748_solve(
      residual, lo, hi, r_lo, r_hi, tolerance, max_iter, Policy());
  if (max_iter >= static_cast<std::uintmax_t>(options.max_iterations) &&
      !tolerance(a, b)) {
    Fail(ErrorCode::kNoConvergence,
         "scalar root finder exceeded " +
             std::to_string(options.max_iterations) + " iterations");
  }
  // Prefer the endpoint with the smaller residual.
  return std::abs(residual(a)) <= std::abs(residual(b)) ? a : b;
}

}  // namespace submod
