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

#include "submod/random_submodular.h"

#include <cmath>
#include <numbers>
#include <utility>

#include "submod/errors.h"
#include "submod/transforms.h"

namespace submod {

std::optional<RandomFamily> ParseRandomFamily(std::string_view name) {
  if (name == "cut") return RandomFamily::kCut;
  if (name == "cover") return RandomFamily::kCover;
  if (name == "logdet") return RandomFamily::kLogDet;
  return std::nullopt;
}

std::string_view RandomFamilyName(RandomFamily family) {
  switch (family) {
    case RandomFamily::kCut:
      return "cut";
    case RandomFamily::kCover:
      return "cover";
    case RandomFamily::kLogDet:
      return "logdet";
  }
  return "unknown";
}

// Distributions are written out by hand so that streams do not depend on the
// standard library implementation.
double RandomSource::Uniform(double lo, double hi) {
  const double unit = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * unit;
}

int RandomSource::Integer(int lo, int hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(engine_() % span);
}

double RandomSource::Dyadic(double lo, double hi) {
  return Integer(static_cast<int>(std::lround(lo * 4)),
                 static_cast<int>(std::lround(hi * 4))) /
         4.0;
}

bool RandomSource::Bernoulli(double probability) {
  return Uniform(0.0, 1.0) < probability;
}

Vector RandomSource::UniformVector(int p, double lo, double hi) {
  Vector v(p);
  for (double& x : v) x = Uniform(lo, hi);
  return v;
}

Digraph RandomSource::RandomDigraph(int p, double density, double max_weight) {
  Digraph g{p, {}};
  for (int k = 0; k < p; ++k) {
    for (int j = 0; j < p; ++j) {
      if (k == j || !Bernoulli(density)) continue;
      g.arcs.push_back({k, j, Dyadic(0.25, max_weight)});
    }
  }
  return g;
}

CoverSystem RandomSource::RandomCover(int p, int groups, double max_weight) {
  if (groups <= 0) groups = p + Integer(0, p);
  CoverSystem c{p, {}};
  for (int i = 0; i < groups; ++i) {
    Subset members;
    while (members.empty()) {
      for (int k = 0; k < p; ++k) {
        if (Bernoulli(0.35)) members = members.With(k);
      }
    }
    c.groups.push_back({members, Dyadic(0.25, max_weight)});
  }
  return c;
}

Eigen::MatrixXd RandomSource::RandomSpd(int p, double delta) {
  Eigen::MatrixXd r(p, p);
  for (int i = 0; i < p; ++i) {
    for (int j = 0; j < p; ++j) {
      // Box-Muller.
      const double u1 = Uniform(0x1.0p-53, 1.0);
      const double u2 = Uniform(0.0, 1.0);
      r(i, j) = std::sqrt(-2.0 * std::log(u1)) *
                std::cos(2.0 * std::numbers::pi * u2);
    }
  }
  Eigen::MatrixXd q = r * r.transpose() / p;
  q += delta * Eigen::MatrixXd::Identity(p, p);
  // Exact symmetry.
  return 0.5 * (q + q.transpose());
}

SetFunction RandomSubmodular(std::uint64_t seed, int p, RandomFamily family,
                             const RandomOptions& options) {
  if (p < 1 || p > kMaxGroundSetSize) {
    Fail(ErrorCode::kInvalidArgument, "ground set size out of range");
  }
  RandomSource rng(seed);
  SetFunction f = [&]() {
    switch (family) {
      case RandomFamily::kCut:
        return CutFunction(rng.RandomDigraph(p));
      case RandomFamily::kCover:
        return CoverFunction(rng.RandomCover(p));
      case RandomFamily::kLogDet:
        return LogDetFunction(rng.RandomSpd(p));
    }
    Fail(ErrorCode::kInvalidArgument, "unknown family");
  }();
  if (!options.modular_shift) return f;
  Vector shift(p);
  for (double& v : shift) {
    v = family == RandomFamily::kLogDet ? rng.Uniform(-2.0, 2.0)
                                        : rng.Dyadic(-2.0, 2.0);
  }
  return AddModular(f, std::move(shift));
}

}  // namespace submod
