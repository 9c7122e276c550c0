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

#ifndef SUBMOD_RANDOM_SUBMODULAR_H_
#define SUBMOD_RANDOM_SUBMODULAR_H_

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>

#include "submod/set_function.h"
#include "submod/zoo.h"

namespace submod {

enum class RandomFamily { kCut, kCover, kLogDet };

// "cut", "cover" or "logdet"; nullopt otherwise.
std::optional<RandomFamily> ParseRandomFamily(std::string_view name);
std::string_view RandomFamilyName(RandomFamily family);

// Deterministic generator of the test families. Cut and cover weights are
// multiples of 1/4 so that sums of them are exact in floating point.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [lo, hi).
  double Uniform(double lo, double hi);
  // Uniform integer in [lo, hi].
  int Integer(int lo, int hi);
  // k / 4 for k uniform in [lo * 4, hi * 4].
  double Dyadic(double lo, double hi);
  bool Bernoulli(double probability);
  Vector UniformVector(int p, double lo, double hi);

  Digraph RandomDigraph(int p, double density = 0.5, double max_weight = 2.0);
  CoverSystem RandomCover(int p, int groups = 0, double max_weight = 2.0);
  // R R^T + delta I with R having standard normal entries.
  Eigen::MatrixXd RandomSpd(int p, double delta = 0.5);

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

struct RandomOptions {
  // Adds a random modular term with entries in [-2, 2] (dyadic for cut and
  // cover).
  bool modular_shift = false;
};

// A random submodular function of the given family on p elements. The
// result is deterministic in (seed, p, family, options).
SetFunction RandomSubmodular(std::uint64_t seed, int p, RandomFamily family,
                             const RandomOptions& options = {});

}  // namespace submod

#endif  // SUBMOD_RANDOM_SUBMODULAR_H_
