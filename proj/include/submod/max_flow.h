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

#ifndef SUBMOD_MAX_FLOW_H_
#define SUBMOD_MAX_FLOW_H_

#include <vector>

namespace submod {

// Shortest-augmenting-path (Edmonds-Karp) max-flow on a small dense-ish
// network. Residual capacities at or below kResidualEps count as saturated.
class MaxFlow {
 public:
  static constexpr double kResidualEps = 1e-12;

  explicit MaxFlow(int nodes);

  int nodes() const { return static_cast<int>(adjacency_.size()); }
  // Returns the arc index; its flow can be read back with Flow().
  int AddArc(int tail, int head, double capacity);

  // Runs from scratch on the current capacities.
  double Solve(int source, int sink);

  double Flow(int arc) const;
  // Nodes reachable from the source in the final residual network.
  std::vector<bool> ReachableFromSource() const;
  // Nodes that can still reach the sink in the final residual network.
  std::vector<bool> ReachesSink() const;

 private:
  struct Edge {
    int head;
    int reverse;
    double capacity;
    double residual;
  };

  std::vector<std::vector<Edge>> adjacency_;
  // (tail, position in adjacency_[tail]) for each AddArc call.
  std::vector<std::pair<int, int>> arcs_;
  int source_ = -1;
  int sink_ = -1;
};

}  // namespace submod

#endif  // SUBMOD_MAX_FLOW_H_
