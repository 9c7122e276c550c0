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

#include "submod/subset.h"

#include <string>
#include <vector>

#include "submod/errors.h"

namespace submod {

Subset Subset::FromElements(const std::vector<int>& elements) {
  Subset s;
  for (int k : elements) {
    if (k < 0 || k >= kMaxGroundSetSize) {
      Fail(ErrorCode::kInvalidArgument,
           "element index out of range: " + std::to_string(k));
    }
    s = s.With(k);
  }
  return s;
}

std::vector<int> Subset::Elements() const {
  std::vector<int> out;
  out.reserve(size());
  ForEachElement(*this, [&](int k) { out.push_back(k); });
  return out;
}

std::string Subset::ToString() const {
  std::string out = "{";
  bool first = true;
  ForEachElement(*this, [&](int k) {
    if (!first) out += ",";
    out += std::to_string(k);
    first = false;
  });
  return out + "}";
}

IndexMap::IndexMap(Subset parent_elements)
    : parent_elements_(parent_elements),
      to_parent_(parent_elements.Elements()) {}

Subset IndexMap::LiftToParent(Subset local) const {
  Subset out;
  ForEachElement(local, [&](int k) { out = out.With(to_parent_[k]); });
  return out;
}

Subset IndexMap::ProjectToLocal(Subset parent) const {
  Subset out;
  for (int i = 0; i < local_size(); ++i) {
    if (parent.contains(to_parent_[i])) out = out.With(i);
  }
  return out;
}

}  // namespace submod
