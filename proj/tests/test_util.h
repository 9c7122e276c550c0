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

#ifndef SUBMOD_TESTS_TEST_UTIL_H_
#define SUBMOD_TESTS_TEST_UTIL_H_

#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "submod/random_submodular.h"
#include "submod/set_function.h"
#include "submod/subset.h"
#include "submod/zoo.h"

namespace submod::testing {

// Small fixtures used across the suites.
SetFunction FOr();                      // [0, 1, 1, 1]
SetFunction SymmetricCut2();            // d(0,1) = d(1,0) = 1
SetFunction Cardinality(int p);
Digraph SymmetricDigraph2();
// Undirected path 0 - 1 - 2 with unit weights, as a symmetric digraph.
Digraph Path3();

inline Subset S(std::initializer_list<int> elements) {
  return Subset::FromElements(std::vector<int>(elements));
}

// Exhaustive minimization, independent of the library minimizers.
struct BruteMin {
  double value = 0.0;
  std::vector<Subset> minimizers;
  Subset intersection;
  Subset union_;
};
BruteMin BruteMinimize(const SetFunction& f, double tol = 1e-9);

// F(A) + F(B) >= F(A u B) + F(A n B) - tol over all pairs.
bool DefinitionOneSubmodular(const SetFunction& f, double tol = 1e-9);

// Largest lambda >= 0 with s0 + lambda t in P(F), by enumerating the ratios
// (F(A) - s0(A)) / t(A) over sets with t(A) > 0.
double BruteLineSearch(const SetFunction& f, std::span<const double> s0,
                       std::span<const double> t);

// Nonnegative least squares min ||A x - b|| s.t. x >= 0 (Lawson-Hanson).
Eigen::VectorXd Nnls(const Eigen::MatrixXd& a, const Eigen::VectorXd& b);

// A random function drawn from the three generator families with p in
// [p_lo, p_hi]; the family cycles with the seed and half get a modular shift.
SetFunction RandomInstance(std::uint64_t seed, int p_lo, int p_hi);

double MaxAbsDiff(std::span<const double> a, std::span<const double> b);

}  // namespace submod::testing

#endif  // SUBMOD_TESTS_TEST_UTIL_H_
