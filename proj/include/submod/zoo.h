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

#ifndef SUBMOD_ZOO_H_
#define SUBMOD_ZOO_H_

#include <span>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "submod/set_function.h"
#include "submod/sfm.h"
#include "submod/subset.h"

namespace submod {

struct Arc {
  int tail = 0;
  int head = 0;
  double weight = 0.0;
};

// Weighted directed graph on the ground set {0..n-1}. Self-loops are ignored.
struct Digraph {
  int n = 0;
  std::vector<Arc> arcs;
};

// F(A) = sum of d(k, j) over arcs with k in A and j outside A.
SetFunction CutFunction(const Digraph& g);
// f(w) = sum d(k, j) (w_k - w_j)_+.
double CutLovasz(const Digraph& g, std::span<const double> w);

// Minimizes A -> F(A) - z(A) for the cut function of g by a single max-flow
// on g plus a source (arcs of capacity (z_k)_+) and a sink (arcs of capacity
// (z_k)_-). The certificate is built from the flow and has zero gap.
SfmResult CutMinimize(const Digraph& g, std::span<const double> z);

struct CoverGroup {
  Subset members;
  double weight = 0.0;
};

struct CoverSystem {
  int p = 0;
  std::vector<CoverGroup> groups;
};

// F(A) = sum of D(G) over groups G meeting A.
SetFunction CoverFunction(const CoverSystem& c);
// f(w) = sum_G D(G) max_{k in G} w_k, which holds for every w.
double CoverLovasz(const CoverSystem& c, std::span<const double> w);

// Nodes 0..n-1; the ground set is `sinks` (element j is node sinks[j]).
struct FlowNetwork {
  int n = 0;
  std::vector<int> sources;
  std::vector<int> sinks;
  std::vector<Arc> arcs;  // Capacities.
};

// F(A) = value of a max-flow from all sources to the sinks in A.
SetFunction FlowFunction(const FlowNetwork& net);

// F(A) = g(|A|) from the table g(0..p). Fails with kNotZeroAtZero or
// kNotConcave (increments must be non-increasing).
SetFunction ConcaveCardinality(std::vector<double> table);
double ConcaveCardinalityLovasz(std::span<const double> table,
                                std::span<const double> w);

enum class ConcaveKind { kSqrt, kLog1p, kMinCap };

struct ConcaveScalar {
  ConcaveKind kind = ConcaveKind::kSqrt;
  double cap = 1.0;  // kMinCap only.

  double operator()(double x) const;
};

// F(A) = g(s(A)) for s >= 0.
SetFunction WeightedConcave(Vector s, ConcaveScalar g);
double WeightedConcaveLovasz(std::span<const double> s, ConcaveScalar g,
                             std::span<const double> w);

// F(A) = log det Q_AA for symmetric positive definite Q. Fails with
// kNotPositiveDefinite, or kInvalidArgument if Q is not symmetric.
SetFunction LogDetFunction(const Eigen::MatrixXd& q);

// Rank of an edge set in the cycle matroid of a graph on n_vertices.
SetFunction GraphicMatroidRank(int n_vertices,
                               std::vector<std::pair<int, int>> edges);

// Rank of a set of columns; a pivot counts as zero when its magnitude is at
// most tol times the largest column norm.
SetFunction LinearMatroidRank(const Eigen::MatrixXd& matrix, double tol = 1e-9);

}  // namespace submod

#endif  // SUBMOD_ZOO_H_
