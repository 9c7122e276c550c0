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

#include "cli.h"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "function_spec.h"
#include "json.hpp"
#include "submod/errors.h"
#include "submod/lovasz.h"
#include "submod/polyhedra.h"
#include "submod/properties.h"
#include "submod/prox.h"
#include "submod/random_submodular.h"
#include "submod/sfm.h"

namespace submod::cli {
namespace {

using nlohmann::json;

class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string spec;
  std::string algo;
  double tol = kDefaultTol;
  double eps = 1e-9;
  double tau = 1e-7;
  int max_exhaustive = kDefaultExhaustiveCap;
  bool verify = false;
  bool truncated = false;
  std::string w;
  std::string s;
  std::string s0;
  std::string direction;
  std::string weights;
  std::string centers;
  std::string alpha;
  std::string family = "cut";
  int p = 6;
  std::uint64_t seed = 0;
  bool shift = false;
};

Vector ParseVector(const std::string& text, const std::string& flag) {
  Vector out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    double value = 0.0;
    try {
      value = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || item.find_first_not_of(" \t", used) != std::string::npos) {
      throw SpecError("--" + flag + ": cannot parse '" + item + "'");
    }
    out.push_back(value);
  }
  if (out.empty()) throw SpecError("--" + flag + " is empty");
  return out;
}

Vector VectorFlag(const std::string& text, const std::string& flag, int p) {
  if (text.empty()) throw SpecError("--" + flag + " is required");
  Vector v = ParseVector(text, flag);
  if (static_cast<int>(v.size()) != p) {
    throw SpecError("--" + flag + " has " + std::to_string(v.size()) +
                    " entries, expected p = " + std::to_string(p));
  }
  return v;
}

json SetJson(Subset a) { return a.Elements(); }

json WitnessJson(const Witness& w) {
  json out{{"a", SetJson(w.a)}, {"b", SetJson(w.b)}, {"lhs", w.lhs},
           {"rhs", w.rhs}, {"text", Describe(w)}};
  if (w.j >= 0) out["j"] = w.j;
  if (w.k >= 0) out["k"] = w.k;
  return out;
}

void VerifySubmodular(const SetFunction& f, const Options& o) {
  const PropertyReport r = IsSubmodular(f, o.tol, o.max_exhaustive);
  if (!r) throw PreconditionError("not submodular: " + Describe(*r.witness));
}

SfmBackend ParseSfmBackend(const std::string& algo) {
  if (algo.empty() || algo == "minnorm") return SfmBackend::kMinNorm;
  if (algo == "brute") return SfmBackend::kBrute;
  throw SpecError("--algo must be minnorm or brute");
}

ProxSolver ParseProxSolver(const std::string& algo) {
  if (algo.empty() || algo == "minnorm") return ProxSolver::kMinNorm;
  if (algo == "decomposition") return ProxSolver::kDecomposition;
  if (algo == "homotopy") return ProxSolver::kHomotopy;
  throw SpecError("--algo must be minnorm, decomposition or homotopy");
}

json SfmJson(const SfmResult& r) {
  return {{"min_value", r.min_value},
          {"minimal_minimizer", SetJson(r.minimal_minimizer)},
          {"maximal_minimizer", SetJson(r.maximal_minimizer)},
          {"certificate", r.certificate},
          {"gap", r.gap}};
}

json CmdCheck(const SetFunction& f, const Options& o) {
  json out{{"p", f.size()}};
  auto record = [&](const char* name, const PropertyReport& r) {
    out[name] = r.holds;
    if (r.witness) out[std::string(name) + "_witness"] = WitnessJson(*r.witness);
  };
  record("submodular", IsSubmodular(f, o.tol, o.max_exhaustive));
  record("monotone", IsMonotone(f, o.tol, o.max_exhaustive));
  record("symmetric", IsSymmetric(f, o.tol, o.max_exhaustive));
  if (2 * f.size() <= o.max_exhaustive) {
    record("posimodular", IsPosimodular(f, o.tol, o.max_exhaustive));
  } else {
    out["skipped"] = json::array({"posimodular"});
  }
  return out;
}

json CmdMinimize(const SetFunction& f, const Options& o) {
  if (o.verify) VerifySubmodular(f, o);
  SfmOptions so;
  so.backend = ParseSfmBackend(o.algo);
  so.eps = o.eps;
  so.max_exhaustive = o.max_exhaustive;
  so.tie_tol = o.tol;
  return SfmJson(Minimize(f, so));
}

json CmdEval(const SetFunction& f, const Options& o) {
  return {{"value", LovaszExtension(f, VectorFlag(o.w, "w", f.size()))}};
}

json CmdGreedy(const SetFunction& f, const Options& o) {
  const Vector w = VectorFlag(o.w, "w", f.size());
  if (o.verify) {
    VerifySubmodular(f, o);
    if (o.truncated) {
      const PropertyReport r = IsMonotone(f, o.tol, o.max_exhaustive);
      if (!r) throw PreconditionError("truncated greedy needs a non-decreasing F: " +
                                      Describe(*r.witness));
    }
  }
  const Vector s = o.truncated ? TruncatedGreedy(f, w) : GreedyBase(f, w);
  double value = 0.0;
  for (int k = 0; k < f.size(); ++k) value += w[k] * s[k];
  return {{"base", s}, {"value", value}, {"truncated", o.truncated}};
}

json CmdConjugate(const SetFunction& f, const Options& o) {
  const ConjugateResult r = Conjugate(f, VectorFlag(o.s, "s", f.size()), o.max_exhaustive);
  return {{"value", r.value}, {"argmax", SetJson(r.argmax)}};
}

json CmdProx(const SetFunction& f, const Options& o) {
  if (o.verify) VerifySubmodular(f, o);
  const int p = f.size();
  QuadraticSpec spec{o.weights.empty() ? Vector(p, 1.0) : VectorFlag(o.weights, "weights", p),
                     VectorFlag(o.centers, "centers", p)};
  const SeparableConvex psi(spec);
  ProxOptions po;
  po.eps = o.eps;
  po.max_exhaustive = o.max_exhaustive;
  const ProxResult r = Prox(f, psi, ParseProxSolver(o.algo), po);
  json thresholds = json::array();
  if (!o.alpha.empty()) {
    for (double alpha : ParseVector(o.alpha, "alpha")) {
      const ThresholdSets t = ProxThresholdSets(r.u, alpha, o.tau);
      thresholds.push_back({{"alpha", alpha},
                            {"minimal", SetJson(t.minimal)},
                            {"maximal", SetJson(t.maximal)}});
    }
  }
  return {{"u", r.u},
          {"s", r.s},
          {"primal_value", r.primal_value},
          {"dual_value", r.dual_value},
          {"gap", r.gap},
          {"thresholds", thresholds}};
}

json CmdLineSearch(const SetFunction& f, const Options& o) {
  const int p = f.size();
  const Vector t = VectorFlag(o.direction, "direction", p);
  const Vector s0 = o.s0.empty() ? Vector(p, 0.0) : VectorFlag(o.s0, "s0", p);
  if (!InP(f, s0, o.tol, o.max_exhaustive)) throw PreconditionError("--s0 is not in P(F)");
  LineSearchOptions lo;
  lo.tol = std::min(o.tol, 1e-10);
  return {{"lambda", LineSearchP(f, s0, t, lo)}};
}

json CmdExplicit(const SetFunction& f, const Options& o) {
  return {{"spec", ExplicitSpec(f, o.max_exhaustive)}};
}

json CmdDemo(const Options& o) {
  const auto family = ParseRandomFamily(o.family);
  if (!family) throw SpecError("--family must be cut, cover or logdet");
  if (o.p < 1 || o.p > o.max_exhaustive) throw SpecError("--p out of range");
  const SetFunction f = RandomSubmodular(o.seed, o.p, *family, {o.shift});
  json out = SfmJson(Minimize(f));
  out["spec"] = ExplicitSpec(f, o.max_exhaustive);
  return out;
}

int ExitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kCapExceeded:
    case ErrorCode::kNumericalInconsistency:
    case ErrorCode::kNoConvergence:
    case ErrorCode::kUnbounded:
    case ErrorCode::kRecursionOverflow:
      return kExitNumerical;
    case ErrorCode::kMonotonicityRequired:
      return kExitPrecondition;
    default:
      return kExitInput;
  }
}

int Report(std::ostream& err, int code, std::string_view kind, std::string_view message) {
  err << json{{"error", kind}, {"exit_code", code}, {"message", message}}.dump() << '\n';
  return code;
}

}  // namespace

std::uint64_t Fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Submodular function toolkit", "submod"};
  app.require_subcommand(1);
  Options o;

  using Handler = std::function<json(const SetFunction&, const Options&)>;
  std::vector<std::pair<CLI::App*, Handler>> spec_commands;
  auto add_spec_command = [&](const char* name, const char* about, Handler handler) {
    CLI::App* sub = app.add_subcommand(name, about);
    sub->add_option("spec", o.spec, "function spec (JSON file)")->required();
    sub->add_option("--max-exhaustive", o.max_exhaustive, "exhaustive enumeration cap");
    sub->add_option("--tol", o.tol, "tolerance");
    spec_commands.emplace_back(sub, std::move(handler));
    return sub;
  };

  add_spec_command("check", "submodular/monotone/symmetric/posimodular checks", CmdCheck);
  CLI::App* minimize = add_spec_command("minimize", "submodular function minimization",
                                        CmdMinimize);
  minimize->add_option("--algo", o.algo, "minnorm|brute");
  minimize->add_option("--eps", o.eps, "min-norm-point accuracy");
  minimize->add_flag("--verify", o.verify, "check submodularity first");
  add_spec_command("eval", "Lovasz extension f(w)", CmdEval)
      ->add_option("--w", o.w, "comma-separated w");
  CLI::App* greedy = add_spec_command("greedy", "greedy base of B(F)", CmdGreedy);
  greedy->add_option("--w", o.w, "comma-separated w");
  greedy->add_flag("--truncated", o.truncated, "truncated greedy over P+(F)");
  greedy->add_flag("--verify", o.verify, "check preconditions first");
  add_spec_command("conjugate", "Fenchel conjugate max_A s(A) - F(A)", CmdConjugate)
      ->add_option("--s", o.s, "comma-separated s");
  CLI::App* prox = add_spec_command("prox", "quadratic proximal problem", CmdProx);
  prox->add_option("--weights", o.weights, "comma-separated a (default 1)");
  prox->add_option("--centers", o.centers, "comma-separated z");
  prox->add_option("--algo", o.algo, "minnorm|decomposition|homotopy");
  prox->add_option("--alpha", o.alpha, "comma-separated thresholds");
  prox->add_option("--tau", o.tau, "threshold slack");
  prox->add_option("--eps", o.eps, "solver accuracy");
  prox->add_flag("--verify", o.verify, "check submodularity first");
  CLI::App* line = add_spec_command("linesearch", "largest lambda with s0 + lambda t in P(F)",
                                    CmdLineSearch);
  line->add_option("--direction", o.direction, "comma-separated t");
  line->add_option("--s0", o.s0, "comma-separated start (default 0)");
  add_spec_command("explicit", "dump the spec as an explicit table", CmdExplicit);
  CLI::App* demo = app.add_subcommand("demo", "random instance and its minimizers");
  demo->add_option("--family", o.family, "cut|cover|logdet");
  demo->add_option("--p", o.p, "ground set size");
  demo->add_option("--seed", o.seed, "generator seed");
  demo->add_flag("--shift", o.shift, "add a random modular term");
  demo->add_option("--max-exhaustive", o.max_exhaustive, "exhaustive enumeration cap");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    return Report(err, kExitInput, "UsageError", e.what());
  }

  const auto start = std::chrono::steady_clock::now();
  CLI::App* chosen = app.get_subcommands().front();
  json spec;
  json results;
  json echo = json::object();
  for (const CLI::Option* opt : chosen->get_options()) {
    if (opt->count() == 0 || opt->get_name() == "--help") continue;
    std::string name = opt->get_name();
    if (name.rfind("--", 0) == 0) name = name.substr(2);
    echo[name] = opt->as<std::string>();
  }
  try {
    if (chosen == demo) {
      results = CmdDemo(o);
    } else {
      spec = ReadSpecFile(o.spec);
      const SetFunction f = ParseFunctionSpec(spec, o.max_exhaustive);
      for (const auto& [sub, handler] : spec_commands) {
        if (sub == chosen) results = handler(f, o);
      }
    }
  } catch (const SpecError& e) {
    return Report(err, kExitInput, "InputError", e.what());
  } catch (const json::exception& e) {
    return Report(err, kExitInput, "InputError", e.what());
  } catch (const PreconditionError& e) {
    return Report(err, kExitPrecondition, "PreconditionViolation", e.what());
  } catch (const Error& e) {
    return Report(err, ExitCodeFor(e.code()), ErrorCodeName(e.code()), e.what());
  }
  const double ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - start)
                        .count();

  char digest[32];
  std::snprintf(digest, sizeof(digest), "fnv1a64:%016llx",
                static_cast<unsigned long long>(Fnv1a64(spec.dump() + "\n" + echo.dump())));
  const json report{{"command", chosen->get_name()},
                    {"args", echo},
                    {"inputs_digest", digest},
                    {"results", results},
                    {"timing_ms", ms},
                    {"version", kToolVersion}};
  out << report.dump() << '\n';
  return kExitOk;
}

}  // namespace submod::cli
