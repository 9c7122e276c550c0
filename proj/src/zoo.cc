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

#include "submod/zoo.h"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numeric>
#include <string>
#include <utility>

#include "submod/errors.h"
#include "submod/lovasz.h"
#include "submod/max_flow.h"

namespace submod {
namespace {

void ValidateArcs(const std::vector<Arc>& arcs, int n, const char* what) {
  for (const Arc& a : arcs) {
    if (a.tail < 0 || a.head < 0 || a.tail >= n || a.head >= n) {
      Fail(ErrorCode::kInvalidArgument,
           std::string(what) + " endpoint out of range");
    }
    if (!(a.weight >= 0.0) || !std::isfinite(a.weight)) {
      Fail(ErrorCode::kInvalidArgument,
           std::string(what) + " weights must be finite and nonnegative");
    }
  }
}

void RequireLength(std::size_t n, int p, const char* what) {
  if (static_cast<int>(n) != p) {
    Fail(ErrorCode::kInvalidArgument,
         std::string(what) + " length does not match the ground set");
  }
}

double CutValue(const std::vector<Arc>& arcs, Subset a) {
  double total = 0.0;
  for (const Arc& arc : arcs) {
    if (a.contains(arc.tail) && !a.contains(arc.head)) total += arc.weight;
  }
  return total;
}

int Find(std::vector<int>& parent, int v) {
  while (parent[v] != v) {
    parent[v] = parent[parent[v]];
    v = parent[v];
  }
  return v;
}

}  // namespace

SetFunction CutFunction(const Digraph& g) {
  ValidateArcs(g.arcs, g.n, "cut arc");
  auto arcs = std::make_shared<std::vector<Arc>>();
  for (const Arc& a : g.arcs) {
    if (a.tail != a.head) arcs->push_back(a);
  }
  return SetFunction(
      g.n, [arcs](Subset a) { return CutValue(*arcs, a); }, "cut");
}

double CutLovasz(const Digraph& g, std::span<const double> w) {
  RequireLength(w.size(), g.n, "weight vector");
  double total = 0.0;
  for (const Arc& a : g.arcs) {
    total += a.weight * std::max(w[a.tail] - w[a.head], 0.0);
  }
  return total;
}

SfmResult CutMinimize(const Digraph& g, std::span<const double> z) {
  ValidateArcs(g.arcs, g.n, "cut arc");
  RequireLength(z.size(), g.n, "modular term");
  const int p = g.n;
  const int source = p;
  const int sink = p + 1;
  MaxFlow flow(p + 2);
  for (const Arc& a : g.arcs) {
    if (a.tail != a.head && a.weight > 0.0) flow.AddArc(a.tail, a.head, a.weight);
  }
  std::vector<int> to_source(p, -1);
  std::vector<int> to_sink(p, -1);
  for (int k = 0; k < p; ++k) {
    if (z[k] > 0.0) to_source[k] = flow.AddArc(source, k, z[k]);
    if (z[k] < 0.0) to_sink[k] = flow.AddArc(k, sink, -z[k]);
  }
  flow.Solve(source, sink);

  const std::vector<bool> from_source = flow.ReachableFromSource();
  const std::vector<bool> to_t = flow.ReachesSink();
  SfmResult result;
  for (int k = 0; k < p; ++k) {
    if (from_source[k]) result.minimal_minimizer = result.minimal_minimizer.With(k);
    if (!to_t[k]) result.maximal_minimizer = result.maximal_minimizer.With(k);
  }
  result.min_value = CutValue(g.arcs, result.minimal_minimizer) -
                     ModularValue(z, result.minimal_minimizer);
  result.certificate.resize(p);
  for (int k = 0; k < p; ++k) {
    const double in = to_source[k] >= 0 ? flow.Flow(to_source[k]) : 0.0;
    const double out = to_sink[k] >= 0 ? flow.Flow(to_sink[k]) : 0.0;
    result.certificate[k] = in - out - z[k];
  }
  double negative = 0.0;
  for (double c : result.certificate) negative += std::min(c, 0.0);
  result.gap = result.min_value - negative;
  return result;
}

SetFunction CoverFunction(const CoverSystem& c) {
  for (const CoverGroup& group : c.groups) {
    if (!group.members.WithinGroundSet(c.p)) {
      Fail(ErrorCode::kInvalidArgument, "cover group outside the ground set");
    }
    if (!(group.weight >= 0.0) || !std::isfinite(group.weight)) {
      Fail(ErrorCode::kInvalidArgument, "cover weights must be nonnegative");
    }
  }
  auto groups = std::make_shared<const std::vector<CoverGroup>>(c.groups);
  return SetFunction(
      c.p,
      [groups](Subset a) {
        double total = 0.0;
        for (const CoverGroup& group : *groups) {
          if (!(group.members & a).empty()) total += group.weight;
        }
        return total;
      },
      "cover");
}

double CoverLovasz(const CoverSystem& c, std::span<const double> w) {
  RequireLength(w.size(), c.p, "weight vector");
  double total = 0.0;
  for (const CoverGroup& group : c.groups) {
    if (group.members.empty()) continue;
    double best = -std::numeric_limits<double>::infinity();
    ForEachElement(group.members, [&](int k) { best = std::max(best, w[k]); });
    total += group.weight * best;
  }
  return total;
}

SetFunction FlowFunction(const FlowNetwork& net) {
  ValidateArcs(net.arcs, net.n, "flow arc");
  const int p = static_cast<int>(net.sinks.size());
  std::vector<bool> used(net.n, false);
  for (int v : net.sources) {
    if (v < 0 || v >= net.n) Fail(ErrorCode::kInvalidArgument, "source out of range");
    used[v] = true;
  }
  for (int v : net.sinks) {
    if (v < 0 || v >= net.n || used[v]) {
      Fail(ErrorCode::kInvalidArgument,
           "sinks must be distinct nodes outside the sources");
    }
    used[v] = true;
  }
  double big = 1.0;
  for (const Arc& a : net.arcs) big += a.weight;
  auto shared = std::make_shared<const FlowNetwork>(net);
  return SetFunction(
      p,
      [shared, big](Subset a) {
        const FlowNetwork& g = *shared;
        if (a.empty() || g.sources.empty()) return 0.0;
        const int source = g.n;
        const int sink = g.n + 1;
        MaxFlow flow(g.n + 2);
        for (const Arc& arc : g.arcs) {
          if (arc.tail != arc.head) flow.AddArc(arc.tail, arc.head, arc.weight);
        }
        for (int v : g.sources) flow.AddArc(source, v, big);
        ForEachElement(a, [&](int j) { flow.AddArc(g.sinks[j], sink, big); });
        return flow.Solve(source, sink);
      },
      "flow");
}

SetFunction ConcaveCardinality(std::vector<double> table) {
  if (table.size() < 2) {
    Fail(ErrorCode::kInvalidArgument, "concave table needs g(0..p) with p >= 1");
  }
  if (table[0] != 0.0) {
    Fail(ErrorCode::kNotZeroAtZero,
         "g(0) = " + std::to_string(table[0]) + ", expected 0");
  }
  for (std::size_t k = 1; k + 1 < table.size(); ++k) {
    const double left = table[k] - table[k - 1];
    const double right = table[k + 1] - table[k];
    if (right > left + 1e-12 * std::max(1.0, std::abs(left))) {
      Fail(ErrorCode::kNotConcave,
           "increments increase at k = " + std::to_string(k));
    }
  }
  const int p = static_cast<int>(table.size()) - 1;
  auto shared = std::make_shared<const std::vector<double>>(std::move(table));
  return SetFunction(
      p, [shared](Subset a) { return (*shared)[a.size()]; }, "card_concave");
}

double ConcaveCardinalityLovasz(std::span<const double> table,
                                std::span<const double> w) {
  RequireLength(table.size(), static_cast<int>(w.size()) + 1, "concave table");
  const std::vector<int> order = DescendingOrder(w);
  double total = 0.0;
  for (std::size_t k = 0; k < order.size(); ++k) {
    total += w[order[k]] * (table[k + 1] - table[k]);
  }
  return total;
}

double ConcaveScalar::operator()(double x) const {
  switch (kind) {
    case ConcaveKind::kSqrt:
      return std::sqrt(x);
    case ConcaveKind::kLog1p:
      return std::log1p(x);
    case ConcaveKind::kMinCap:
      return std::min(x, cap);
  }
  return 0.0;
}

SetFunction WeightedConcave(Vector s, ConcaveScalar g) {
  for (double v : s) {
    if (!(v >= 0.0) || !std::isfinite(v)) {
      Fail(ErrorCode::kInvalidArgument, "weighted concave needs s >= 0");
    }
  }
  if (g.kind == ConcaveKind::kMinCap && !(g.cap >= 0.0)) {
    Fail(ErrorCode::kNotZeroAtZero, "min-cap needs a nonnegative cap");
  }
  const int p = static_cast<int>(s.size());
  auto shared = std::make_shared<const Vector>(std::move(s));
  return SetFunction(
      p, [shared, g](Subset a) { return g(ModularValue(*shared, a)); },
      "weighted_concave");
}

double WeightedConcaveLovasz(std::span<const double> s, ConcaveScalar g,
                             std::span<const double> w) {
  RequireLength(w.size(), static_cast<int>(s.size()), "weight vector");
  const std::vector<int> order = DescendingOrder(w);
  double mass = 0.0;
  double previous = 0.0;
  double total = 0.0;
  for (int j : order) {
    mass += s[j];
    const double value = g(mass);
    total += w[j] * (value - previous);
    previous = value;
  }
  return total;
}

SetFunction LogDetFunction(const Eigen::MatrixXd& q) {
  if (q.rows() != q.cols() || q.rows() == 0) {
    Fail(ErrorCode::kInvalidArgument, "log-det matrix must be square");
  }
  if (!((q - q.transpose()).cwiseAbs().maxCoeff() <= 1e-12)) {
    Fail(ErrorCode::kInvalidArgument, "log-det matrix must be symmetric");
  }
  if (Eigen::LLT<Eigen::MatrixXd>(q).info() != Eigen::Success) {
    Fail(ErrorCode::kNotPositiveDefinite, "log-det matrix is not positive definite");
  }
  auto shared = std::make_shared<const Eigen::MatrixXd>(q);
  return SetFunction(
      static_cast<int>(q.rows()),
      [shared](Subset a) {
        if (a.empty()) return 0.0;
        const std::vector<int> idx = a.Elements();
        const Eigen::MatrixXd sub = (*shared)(idx, idx);
        const Eigen::LLT<Eigen::MatrixXd> llt(sub);
        if (llt.info() != Eigen::Success) {
          Fail(ErrorCode::kNotPositiveDefinite,
               "principal submatrix is not positive definite");
        }
        return 2.0 * llt.matrixL().toDenseMatrix().diagonal().array().log().sum();
      },
      "logdet");
}

SetFunction GraphicMatroidRank(int n_vertices,
                               std::vector<std::pair<int, int>> edges) {
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n_vertices || v >= n_vertices) {
      Fail(ErrorCode::kInvalidArgument, "edge endpoint out of range");
    }
  }
  const int p = static_cast<int>(edges.size());
  auto shared = std::make_shared<const std::vector<std::pair<int, int>>>(
      std::move(edges));
  return SetFunction(
      p,
      [shared, n_vertices](Subset a) {
        std::vector<int> parent(n_vertices);
        std::iota(parent.begin(), parent.end(), 0);
        int rank = 0;
        ForEachElement(a, [&](int e) {
          const int ru = Find(parent, (*shared)[e].first);
          const int rv = Find(parent, (*shared)[e].second);
          if (ru != rv) {
            parent[ru] = rv;
            ++rank;
          }
        });
        return static_cast<double>(rank);
      },
      "graphic_matroid");
}

SetFunction LinearMatroidRank(const Eigen::MatrixXd& matrix, double tol) {
  if (matrix.cols() == 0) {
    Fail(ErrorCode::kInvalidArgument, "matrix has no columns");
  }
  const double threshold = tol * matrix.colwise().norm().maxCoeff();
  auto shared = std::make_shared<const Eigen::MatrixXd>(matrix);
  return SetFunction(
      static_cast<int>(matrix.cols()),
      [shared, threshold](Subset a) {
        if (a.empty()) return 0.0;
        const std::vector<int> idx = a.Elements();
        Eigen::MatrixXd m = (*shared)(Eigen::all, idx);
        const Eigen::Index rows = m.rows();
        const Eigen::Index cols = m.cols();
        Eigen::Index rank = 0;
        // Gaussian elimination with full pivoting on the trailing block.
        while (rank < rows && rank < cols) {
          Eigen::Index r = 0;
          Eigen::Index c = 0;
          const double pivot = m.bottomRightCorner(rows - rank, cols - rank)
                                   .cwiseAbs()
                                   .maxCoeff(&r, &c);
          if (!(pivot > threshold)) break;
          m.row(rank).swap(m.row(rank + r));
          m.col(rank).swap(m.col(rank + c));
          for (Eigen::Index i = rank + 1; i < rows; ++i) {
            const double factor = m(i, rank) / m(rank, rank);
            m.row(i).tail(cols - rank) -= factor * m.row(rank).tail(cols - rank);
          }
          ++rank;
        }
        return static_cast<double>(rank);
      },
      "linear_matroid");
}

}  // namespace submod
