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

#include "submod/max_flow.h"

#include <algorithm>
#include <deque>
#include <limits>
#include <utility>

#include "submod/errors.h"

namespace submod {

MaxFlow::MaxFlow(int nodes) : adjacency_(nodes) {}

int MaxFlow::AddArc(int tail, int head, double capacity) {
  if (tail < 0 || head < 0 || tail >= nodes() || head >= nodes()) {
    Fail(ErrorCode::kInvalidArgument, "arc endpoint out of range");
  }
  if (!(capacity >= 0.0)) {
    Fail(ErrorCode::kInvalidArgument, "arc capacity must be nonnegative");
  }
  const int forward = static_cast<int>(adjacency_[tail].size());
  const int backward =
      static_cast<int>(adjacency_[head].size()) + (tail == head ? 1 : 0);
  adjacency_[tail].push_back({head, backward, capacity, capacity});
  adjacency_[head].push_back({tail, forward, 0.0, 0.0});
  arcs_.emplace_back(tail, forward);
  return static_cast<int>(arcs_.size()) - 1;
}

double MaxFlow::Solve(int source, int sink) {
  source_ = source;
  sink_ = sink;
  for (auto& edges : adjacency_) {
    for (Edge& e : edges) e.residual = e.capacity;
  }
  if (source == sink) return 0.0;
  const int n = nodes();
  double total = 0.0;
  std::vector<std::pair<int, int>> parent(n);
  while (true) {
    std::fill(parent.begin(), parent.end(), std::make_pair(-1, -1));
    parent[source] = {source, -1};
    std::deque<int> queue{source};
    while (!queue.empty() && parent[sink].first < 0) {
      const int v = queue.front();
      queue.pop_front();
      for (int i = 0; i < static_cast<int>(adjacency_[v].size()); ++i) {
        const Edge& e = adjacency_[v][i];
        if (e.residual > kResidualEps && parent[e.head].first < 0) {
          parent[e.head] = {v, i};
          queue.push_back(e.head);
        }
      }
    }
    if (parent[sink].first < 0) break;
    double push = std::numeric_limits<double>::infinity();
    for (int v = sink; v != source; v = parent[v].first) {
      const auto [u, i] = parent[v];
      push = std::min(push, adjacency_[u][i].residual);
    }
    for (int v = sink; v != source; v = parent[v].first) {
      const auto [u, i] = parent[v];
      Edge& e = adjacency_[u][i];
      e.residual -= push;
      adjacency_[v][e.reverse].residual += push;
    }
    total += push;
  }
  return total;
}

double MaxFlow::Flow(int arc) const {
  const auto [tail, index] = arcs_[arc];
  const Edge& e = adjacency_[tail][index];
  return e.capacity - e.residual;
}

std::vector<bool> MaxFlow::ReachableFromSource() const {
  std::vector<bool> seen(nodes(), false);
  if (source_ < 0) return seen;
  std::deque<int> queue{source_};
  seen[source_] = true;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (const Edge& e : adjacency_[v]) {
      if (e.residual > kResidualEps && !seen[e.head]) {
        seen[e.head] = true;
        queue.push_back(e.head);
      }
    }
  }
  return seen;
}

std::vector<bool> MaxFlow::ReachesSink() const {
  std::vector<bool> seen(nodes(), false);
  if (sink_ < 0) return seen;
  std::deque<int> queue{sink_};
  seen[sink_] = true;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    // u reaches v when the residual of u -> v is positive; that edge is the
    // reverse of one stored at v.
    for (const Edge& back : adjacency_[v]) {
      const Edge& e = adjacency_[back.head][back.reverse];
      if (e.residual > kResidualEps && !seen[back.head]) {
        seen[back.head] = true;
        queue.push_back(back.head);
      }
    }
  }
  return seen;
}

}  // namespace submod
