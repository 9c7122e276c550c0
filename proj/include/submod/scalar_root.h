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

#ifndef SUBMOD_SCALAR_ROOT_H_
#define SUBMOD_SCALAR_ROOT_H_

#include <functional>

namespace submod {

struct ScalarRootOptions {
  double initial_step = 1.0;
  double growth = 2.0;
  int max_iterations = 200;
  // Relative bracket width at termination.
  double relative_tol = 1e-12;
};

// Solves h(x) = target for a continuous non-decreasing h, starting the
// bracket search at `hint`. The bracket grows geometrically, then is
// refined by TOMS 748. Raises kNoConvergence if no bracket is found or the
// iteration budget is exhausted.
double SolveIncreasing(const std::function<double(double)>& h, double target,
                       double hint = 0.0, const ScalarRootOptions& options = {});

}  // namespace submod

#endif  // SUBMOD_SCALAR_ROOT_H_
