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

#include "function_spec.h"

#include <fstream>
#include <sstream>
#include <utility>
#include <vector>

#include "submod/transforms.h"
#include "submod/zoo.h"

namespace submod::cli {
namespace {

using nlohmann::json;

const json& Field(const json& spec, const char* key) {
  if (!spec.contains(key)) {
    throw SpecError(std::string("spec field '") + key + "' is missing");
  }
  return spec.at(key);
}

Subset ParseSet(const json& elements, int p) {
  std::vector<int> members = elements.get<std::vector<int>>();
  for (int k : members) {
    if (k < 0 || k >= p) throw SpecError("set element out of range");
  }
  return Subset::FromElements(members);
}

std::vector<Arc> ParseArcs(const json& arcs) {
  std::vector<Arc> out;
  for (const json& a : arcs) {
    if (!a.is_array() || a.size() != 3) throw SpecError("arcs are [tail, head, weight]");
    out.push_back({a[0].get<int>(), a[1].get<int>(), a[2].get<double>()});
  }
  return out;
}

Eigen::MatrixXd ParseMatrix(const json& rows) {
  const auto values = rows.get<std::vector<std::vector<double>>>();
  if (values.empty()) throw SpecError("matrix is empty");
  Eigen::MatrixXd m(values.size(), values[0].size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i].size() != values[0].size()) throw SpecError("ragged matrix");
    for (std::size_t j = 0; j < values[i].size(); ++j) m(i, j) = values[i][j];
  }
  return m;
}

ConcaveKind ParseConcaveKind(const std::string& name) {
  if (name == "sqrt") return ConcaveKind::kSqrt;
  if (name == "log1p") return ConcaveKind::kLog1p;
  if (name == "min_cap") return ConcaveKind::kMinCap;
  throw SpecError("unknown concave function '" + name + "'");
}

SetFunction ParseTransform(const json& spec, int cap) {
  const std::string op = Field(spec, "op").get<std::string>();
  if (op == "sum") {
    std::vector<SetFunction> terms;
    for (const json& t : Field(spec, "terms")) terms.push_back(ParseFunctionSpec(t, cap));
    return Sum(terms);
  }
  const SetFunction inner = ParseFunctionSpec(Field(spec, "inner"), cap);
  if (op == "restrict") return Restrict(inner, ParseSet(Field(spec, "set"), inner.size())).function;
  if (op == "contract") return Contract(inner, ParseSet(Field(spec, "set"), inner.size())).function;
  if (op == "partial_min") {
    return PartialMin(inner, ParseSet(Field(spec, "set"), inner.size()), cap).function;
  }
  if (op == "monotonize") return Monotonize(inner, cap);
  if (op == "scale") return Scale(inner, Field(spec, "lambda").get<double>());
  if (op == "convolve_modular" || op == "add_modular") {
    const Vector v = Field(spec, op == "add_modular" ? "s" : "z").get<Vector>();
    if (static_cast<int>(v.size()) != inner.size()) throw SpecError("vector length != p");
    return op == "add_modular" ? AddModular(inner, v) : ConvolveModular(inner, v, cap);
  }
  throw SpecError("unknown transform op '" + op + "'");
}

}  // namespace

SetFunction ParseFunctionSpec(const json& spec, int max_exhaustive) {
  if (!spec.is_object()) throw SpecError("spec must be an object");
  const std::string kind = Field(spec, "kind").get<std::string>();
  if (kind == "explicit") {
    std::vector<double> values = Field(spec, "values").get<std::vector<double>>();
    const std::size_t n = values.size();
    if (n < 2 || (n & (n - 1)) != 0) throw SpecError("explicit values need 2^p entries");
    return FromTable(std::move(values));
  }
  if (kind == "cut") {
    Digraph g{Field(spec, "n").get<int>(), ParseArcs(Field(spec, "arcs"))};
    if (spec.value("symmetric", false)) {
      const std::size_t m = g.arcs.size();
      for (std::size_t i = 0; i < m; ++i) {
        g.arcs.push_back({g.arcs[i].head, g.arcs[i].tail, g.arcs[i].weight});
      }
    }
    return CutFunction(g);
  }
  if (kind == "cover") {
    CoverSystem c{Field(spec, "p").get<int>(), {}};
    for (const json& group : Field(spec, "groups")) {
      c.groups.push_back({ParseSet(Field(group, "members"), c.p),
                          Field(group, "weight").get<double>()});
    }
    return CoverFunction(c);
  }
  if (kind == "card_concave") {
    return ConcaveCardinality(Field(spec, "table").get<std::vector<double>>());
  }
  if (kind == "weighted_concave") {
    const ConcaveScalar g{ParseConcaveKind(spec.value("g", std::string("sqrt"))),
                          spec.value("cap", 1.0)};
    return WeightedConcave(Field(spec, "weights").get<Vector>(), g);
  }
  if (kind == "logdet") return LogDetFunction(ParseMatrix(Field(spec, "matrix")));
  if (kind == "flow") {
    FlowNetwork net{Field(spec, "n").get<int>(), Field(spec, "sources").get<std::vector<int>>(),
                    Field(spec, "sinks").get<std::vector<int>>(),
                    ParseArcs(Field(spec, "arcs"))};
    return FlowFunction(net);
  }
  if (kind == "graphic_matroid") {
    return GraphicMatroidRank(Field(spec, "vertices").get<int>(),
                              Field(spec, "edges").get<std::vector<std::pair<int, int>>>());
  }
  if (kind == "linear_matroid") {
    return LinearMatroidRank(ParseMatrix(Field(spec, "matrix")), spec.value("tol", 1e-9));
  }
  if (kind == "transform") return ParseTransform(spec, max_exhaustive);
  throw SpecError("unknown spec kind '" + kind + "'");
}

json ExplicitSpec(const SetFunction& f, int max_exhaustive) {
  return json{{"kind", "explicit"}, {"values", ToExplicit(f, max_exhaustive)}};
}

json ReadSpecFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecError("cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return json::parse(buffer.str());
  } catch (const json::parse_error& e) {
    throw SpecError("'" + path + "': " + e.what());
  }
}

}  // namespace submod::cli
