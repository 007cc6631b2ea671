// Copyright 2026 The digitop Authors
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

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "digitop/cycle_maps.h"
#include "digitop/error.h"
#include "digitop/grid_image.h"
#include "digitop/homotopy.h"
#include "digitop/io.h"
#include "digitop/limiting.h"
#include "digitop/map_search.h"
#include "digitop/map_table.h"
#include "digitop/metrics.h"
#include "json.hpp"

namespace digitop::cli {
namespace {

using Json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

constexpr const char* kSchemaVersion = "1";

struct Options {
  std::string image_path;
  std::string set_path;
  std::string y0_path;
  std::string y1_path;
  std::string map_path;
  int m = 0;
  int n = 0;
  int s = 1;
  int v = 0;
  std::optional<int> m_opt;
  int size_cap = -1;
  bool json = false;
  bool timing = false;
  std::int64_t budget_nodes = SearchLimits{}.max_nodes;
  std::int64_t budget_maps = SearchLimits{}.max_maps;
  int max_vertices = SearchLimits{}.max_vertices;
  int max_points = BuildLimits{}.max_points;
  int threads = 1;

  SearchLimits limits() const {
    SearchLimits l;
    l.max_nodes = budget_nodes;
    l.max_maps = budget_maps;
    l.max_vertices = max_vertices;
    l.threads = threads;
    return l;
  }
};

// Input failure tied to a file.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <typename F>
auto WithFile(const std::string& path, F&& parse) {
  try {
    return parse(ReadTextFile(path));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kBudgetExceeded) throw;
    throw InputError(path + ": " + e.what());
  }
}

LoadedImage LoadImage(const Options& opt) {
  BuildLimits limits;
  limits.max_points = opt.max_points;
  return WithFile(opt.image_path, [&](const std::string& text) {
    return ParseImageSpec(text, limits);
  });
}

SubsetMask LoadSubset(const std::string& path, const DigitalImage& image) {
  return WithFile(path, [&](const std::string& text) {
    return ParseSubset(text, image);
  });
}

Json SubsetJson(const DigitalImage& image, const SubsetMask& a) {
  Json indices = Json::array();
  Json labels = Json::array();
  for (int x : a.Indices()) {
    indices.push_back(x);
    labels.push_back(image.Label(x));
  }
  return Json{{"indices", indices}, {"points", labels}};
}

Json MapJson(const MapTable& f) {
  Json table = Json::array();
  Json pairs = Json::array();
  for (int x = 0; x < f.size(); ++x) {
    table.push_back(f(x));
    pairs.push_back(
        Json::array({f.domain().Label(x), f.codomain().Label(f(x))}));
  }
  Json out{{"table", table}, {"pairs", pairs}};
  if (f.IsSelfMap() && f.domain().connected()) {
    out["displacement"] = Displacement(f);
  }
  return out;
}

std::string MapText(const MapTable& f) {
  std::ostringstream text;
  bool first = true;
  for (int x = 0; x < f.size(); ++x) {
    if (f(x) == x && f.IsSelfMap()) continue;
    text << (first ? "" : " ") << f.domain().Label(x) << "->"
         << f.codomain().Label(f(x));
    first = false;
  }
  if (first) text << "identity";
  return text.str();
}

// A finished report: JSON body plus the human-readable rendering.
struct Report {
  Json body;
  std::vector<std::string> lines;
  int exit_code = kExitHolds;
};

void Emit(const Options& opt, Report& report, std::ostream& out,
          Clock::time_point start) {
  const double elapsed_ms =
      std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  if (opt.json) {
    if (opt.timing) report.body["elapsed_ms"] = elapsed_ms;
    out << report.body.dump(2) << "\n";
    return;
  }
  for (const std::string& line : report.lines) out << line << "\n";
  std::ostringstream t;
  t.precision(3);
  t << std::fixed << elapsed_ms;
  out << "elapsed: " << t.str() << " ms\n";
}

int VerdictExit(Verdict verdict) {
  switch (verdict) {
    case Verdict::kHolds:
      return kExitHolds;
    case Verdict::kFails:
      return kExitFails;
    case Verdict::kUnknown:
      return kExitUnknown;
  }
  return kExitUnknown;
}

Json StartBody(const std::string& command) {
  return Json{{"schema", kSchemaVersion}, {"command", command}};
}

Report LimitingReport(const std::string& command, const LoadedImage& loaded,
                      const SubsetMask& a, int m, int n,
                      const Options& opt) {
  const DigitalImage& image = loaded.image;
  const LimitingVerdict verdict = IsLimiting({image, a, m, n}, opt.limits());
  Report report;
  report.body = StartBody(command);
  report.body["query"] = Json{{"image", opt.image_path},
                              {"vertices", image.size()},
                              {"adjacency", image.adjacency().ToString()},
                              {"set", SubsetJson(image, a)},
                              {"m", m},
                              {"n", n}};
  report.body["verdict"] = std::string(VerdictName(verdict.verdict));
  if (verdict.verdict == Verdict::kUnknown) {
    report.body["holds"] = nullptr;
  } else {
    report.body["holds"] = verdict.holds();
  }
  report.body["witness"] =
      verdict.witness ? MapJson(*verdict.witness) : Json(nullptr);
  report.body["nodes"] = verdict.nodes_explored;
  report.exit_code = VerdictExit(verdict.verdict);

  report.lines.push_back(command + ": (A," + std::to_string(m) + "," +
                         std::to_string(n) + ") on " +
                         std::to_string(image.size()) + " points, |A| = " +
                         std::to_string(a.count()));
  switch (verdict.verdict) {
    case Verdict::kHolds:
      report.lines.push_back("result: HOLDS (search exhausted)");
      break;
    case Verdict::kFails:
      report.lines.push_back("result: FAILS");
      report.lines.push_back("witness: " + MapText(*verdict.witness));
      report.lines.push_back("witness table: " +
                             MapJson(*verdict.witness)["table"].dump());
      report.lines.push_back("witness displacement: " +
                             std::to_string(Displacement(*verdict.witness)));
      break;
    case Verdict::kUnknown:
      report.lines.push_back("result: UNKNOWN (node budget of " +
                             std::to_string(opt.budget_nodes) +
                             " exhausted; raise --budget-nodes)");
      break;
  }
  report.lines.push_back("nodes explored: " +
                         std::to_string(verdict.nodes_explored));
  return report;
}

Report VerifyLimiting(const Options& opt) {
  const LoadedImage loaded = LoadImage(opt);
  const SubsetMask a = LoadSubset(opt.set_path, loaded.image);
  return LimitingReport("verify-limiting", loaded, a, opt.m, opt.n, opt);
}

Report VerifyFreezing(const Options& opt) {
  const LoadedImage loaded = LoadImage(opt);
  const SubsetMask a = LoadSubset(opt.set_path, loaded.image);
  return LimitingReport("verify-freezing", loaded, a, 0, 0, opt);
}

Report VerifyCold(const Options& opt) {
  const LoadedImage loaded = LoadImage(opt);
  const SubsetMask a = LoadSubset(opt.set_path, loaded.image);
  return LimitingReport("verify-cold", loaded, a, 0, opt.s, opt);
}

Report FindMinimal(const Options& opt) {
  const LoadedImage loaded = LoadImage(opt);
  const DigitalImage& image = loaded.image;
  const int cap = opt.size_cap < 0 ? image.size() : opt.size_cap;
  const MinimalSetSearch found =
      FindMinimalLimitingSets(image, opt.m, opt.n, cap, opt.limits());
  Report report;
  report.body = StartBody("find-minimal");
  report.body["query"] = Json{{"image", opt.image_path},
                              {"vertices", image.size()},
                              {"m", opt.m},
                              {"n", opt.n},
                              {"size_cap", cap}};
  Json sets = Json::array();
  report.lines.push_back("minimal (" + std::to_string(opt.m) + "," +
                         std::to_string(opt.n) + ")-limiting sets of size <= " +
                         std::to_string(cap) + ":");
  for (const SubsetMask& a : found.sets) {
    sets.push_back(SubsetJson(image, a));
    std::string line = " ";
    for (int x : a.Indices()) line += " " + image.Label(x);
    if (a.empty()) line += " {}";
    report.lines.push_back(line);
  }
  report.body["sets"] = sets;
  report.body["complete"] = found.complete;
  report.body["nodes"] = found.nodes_explored;
  report.lines.push_back(found.complete
                             ? "search complete"
                             : "search INCOMPLETE (budget); list is partial");
  report.lines.push_back("nodes explored: " +
                         std::to_string(found.nodes_explored));
  report.exit_code = found.complete ? kExitHolds : kExitUnknown;
  return report;
}

Report Profile(const Options& opt) {
  const LoadedImage loaded = LoadImage(opt);
  const SubsetMask a = LoadSubset(opt.set_path, loaded.image);
  const int n = LimitingProfile(loaded.image, a, opt.m, opt.limits());
  Report report;
  report.body = StartBody("profile");
  report.body["query"] = Json{{"image", opt.image_path},
                              {"set", SubsetJson(loaded.image, a)},
                              {"m", opt.m}};
  report.body["least_n"] = n;
  report.lines.push_back("least n with (A," + std::to_string(opt.m) +
                         ",n) limited: " + std::to_string(n));
  return report;
}

Report ClassifyCycleMaps(const Options& opt) {
  CycleImage cycle;
  std::string source;
  if (!opt.image_path.empty()) {
    const LoadedImage loaded = LoadImage(opt);
    if (!loaded.cycle) {
      throw InputError(opt.image_path + ": field 'constructor': expected a "
                       "cycle spec");
    }
    cycle = {loaded.image, *loaded.cycle};
    source = opt.image_path;
  } else {
    if (opt.v < 4) {
      throw InputError("--v: cycle length must be at least 4");
    }
    cycle = BuildCycle(opt.v);
    source = "C_" + std::to_string(opt.v);
  }
  std::map<std::string, std::int64_t> counts{
      {"NonSurjective", 0}, {"Rotation", 0}, {"FlipRotation", 0}};
  std::map<int, std::int64_t> rotations;
  std::map<int, std::int64_t> flips;
  std::int64_t total = 0;
  std::int64_t unclassified = 0;
  EnumerateContinuousSelfMaps(
      cycle.image, opt.limits(), [&](std::span<const int> table) {
        ++total;
        try {
          const CycleMapClass c = ClassifyCycleMap(
              cycle, MapTable(cycle.image,
                              std::vector<int>(table.begin(), table.end())));
          switch (c.kind) {
            case CycleMapClass::Kind::kNonSurjective:
              ++counts["NonSurjective"];
              break;
            case CycleMapClass::Kind::kRotation:
              ++counts["Rotation"];
              ++rotations[c.d];
              break;
            case CycleMapClass::Kind::kFlipRotation:
              ++counts["FlipRotation"];
              ++flips[c.d];
              break;
          }
        } catch (const Error& e) {
          if (e.code() != ErrorCode::kUnclassifiable) throw;
          ++unclassified;
        }
        return true;
      });
  Report report;
  report.body = StartBody("classify-cycle-maps");
  report.body["query"] = Json{{"cycle", source},
                              {"v", cycle.indexing.length()}};
  report.body["total"] = total;
  report.body["counts"] = Json{{"NonSurjective", counts["NonSurjective"]},
                               {"Rotation", counts["Rotation"]},
                               {"FlipRotation", counts["FlipRotation"]}};
  report.body["unclassified"] = unclassified;
  report.lines.push_back("continuous self-maps of " + source + ": " +
                         std::to_string(total));
  report.lines.push_back("  nonsurjective:    " +
                         std::to_string(counts["NonSurjective"]));
  report.lines.push_back("  rotations:        " +
                         std::to_string(counts["Rotation"]));
  report.lines.push_back("  flip o rotations: " +
                         std::to_string(counts["FlipRotation"]));
  report.lines.push_back("  unclassified:     " +
                         std::to_string(unclassified));
  report.exit_code = unclassified == 0 ? kExitHolds : kExitFails;
  return report;
}

Report Rigidity(const Options& opt) {
  const LoadedImage loaded = LoadImage(opt);
  const DigitalImage& image = loaded.image;
  const SearchLimits limits = opt.limits();
  const bool rigid = IsRigid(image, limits);
  const bool only_id = OnlyIdentityIsOneMap(image, limits);
  std::optional<MapTable> witness;
  if (!rigid) {
    MapConstraints constraints;
    for (int x = 0; x < image.size(); ++x) {
      constraints.allowed.push_back(NStar(image, x, 1));
    }
    ForEachContinuousMap(image, image, constraints, limits,
                         [&](std::span<const int> t) {
                           for (int x = 0; x < image.size(); ++x) {
                             if (t[x] != x) {
                               witness.emplace(image, std::vector<int>(
                                                          t.begin(), t.end()));
                               return false;
                             }
                           }
                           return true;
                         });
  }
  Report report;
  report.body = StartBody("rigidity");
  report.body["query"] = Json{{"image", opt.image_path},
                              {"vertices", image.size()}};
  report.body["rigid"] = rigid;
  report.body["only_identity_is_1map"] = only_id;
  report.body["witness"] = witness ? MapJson(*witness) : Json(nullptr);
  report.lines.push_back(std::string("rigid: ") + (rigid ? "yes" : "no"));
  report.lines.push_back(std::string("only continuous 1-map is id: ") +
                         (only_id ? "yes" : "no"));
  if (witness) {
    report.lines.push_back("1-map homotopic to id: " + MapText(*witness));
  }
  report.exit_code = rigid ? kExitHolds : kExitFails;
  return report;
}

Report Metrics(const Options& opt) {
  const LoadedImage loaded = LoadImage(opt);
  const DigitalImage& image = loaded.image;
  const SubsetMask y0 = LoadSubset(opt.y0_path, image);
  const SubsetMask y1 = LoadSubset(opt.y1_path, image);
  const int hausdorff = Hausdorff(image, y0, y1);
  const int delta = MetricOfContinuity(image, y0, y1, opt.limits());
  Report report;
  report.body = StartBody("metrics");
  report.body["query"] = Json{{"image", opt.image_path},
                              {"y0", SubsetJson(image, y0)},
                              {"y1", SubsetJson(image, y1)}};
  report.body["hausdorff"] = hausdorff;
  report.body["delta"] = delta;
  report.lines.push_back("hausdorff: " + std::to_string(hausdorff));
  report.lines.push_back("metric of continuity: " + std::to_string(delta));
  return report;
}

Report CheckMap(const Options& opt) {
  const LoadedImage loaded = LoadImage(opt);
  const DigitalImage& image = loaded.image;
  const MapTable f = WithFile(opt.map_path, [&](const std::string& text) {
    return ParseMap(text, image);
  });
  const bool continuous = IsContinuous(f);
  Report report;
  report.body = StartBody("check-map");
  report.body["query"] = Json{{"image", opt.image_path},
                              {"map", opt.map_path}};
  report.body["continuous"] = continuous;
  report.body["retraction"] = IsRetraction(f);
  report.body["fixed_points"] = SubsetJson(image, FixedPoints(f));
  report.lines.push_back(std::string("continuous: ") +
                         (continuous ? "yes" : "no"));
  report.lines.push_back(std::string("retraction: ") +
                         (IsRetraction(f) ? "yes" : "no"));
  if (image.connected()) {
    const int displacement = Displacement(f);
    report.body["displacement"] = displacement;
    report.lines.push_back("displacement: " + std::to_string(displacement));
    if (continuous && opt.m_opt) {
      if (displacement > *opt.m_opt) {
        report.body["diameter_bound"] = nullptr;
        report.lines.push_back("not an " + std::to_string(*opt.m_opt) +
                               "-map; diameter bound not applicable");
      } else {
        const DiameterComparison c = CompareDiameters(image, f, *opt.m_opt);
        report.body["diameter_bound"] =
            Json{{"diam_x", c.image_diameter},
                 {"diam_fx_ambient", c.ambient_diameter},
                 {"diam_fx_induced", c.induced_diameter},
                 {"holds", c.holds()}};
        report.lines.push_back(
            "diam(f(X)) ambient/induced: " +
            std::to_string(c.ambient_diameter) + "/" +
            std::to_string(c.induced_diameter) + " vs diam(X) - 2m = " +
            std::to_string(c.image_diameter - 2 * *opt.m_opt));
      }
    }
  }
  report.exit_code = continuous ? kExitHolds : kExitFails;
  return report;
}

void AddSearchOptions(CLI::App* sub, Options& opt) {
  sub->add_flag("--json", opt.json, "Emit a JSON report");
  sub->add_flag("--timing", opt.timing,
                "Include elapsed_ms in JSON reports");
  sub->add_option("--budget-nodes", opt.budget_nodes,
                  "Search-tree node budget")
      ->check(CLI::PositiveNumber);
  sub->add_option("--budget-maps", opt.budget_maps,
                  "Map budget for homotopy searches")
      ->check(CLI::PositiveNumber);
  sub->add_option("--max-vertices", opt.max_vertices,
                  "Largest image accepted for map enumeration")
      ->check(CLI::PositiveNumber);
  sub->add_option("--max-points", opt.max_points,
                  "Largest image accepted for construction")
      ->check(CLI::PositiveNumber);
  sub->add_option("--threads", opt.threads,
                  "Workers over top-level search branches")
      ->check(CLI::PositiveNumber);
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"digitop: limiting, freezing and cold sets of digital images"};
  app.require_subcommand(1);
  Options opt;
  std::function<Report(const Options&)> handler;

  auto add = [&](const std::string& name, const std::string& help,
                 std::function<Report(const Options&)> h) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->callback([&handler, h] { handler = h; });
    AddSearchOptions(sub, opt);
    return sub;
  };

  auto* limiting = add("verify-limiting", "Decide (A,m,n)-limitedness",
                       VerifyLimiting);
  limiting->add_option("--image", opt.image_path, "Image spec")->required();
  limiting->add_option("--set", opt.set_path, "Subset file")->required();
  limiting->add_option("--m", opt.m, "Bound on A")->required()
      ->check(CLI::NonNegativeNumber);
  limiting->add_option("--n", opt.n, "Bound on X")->required()
      ->check(CLI::NonNegativeNumber);

  auto* freezing = add("verify-freezing", "Decide whether A is freezing",
                       VerifyFreezing);
  freezing->add_option("--image", opt.image_path, "Image spec")->required();
  freezing->add_option("--set", opt.set_path, "Subset file")->required();

  auto* cold = add("verify-cold", "Decide whether A is s-cold", VerifyCold);
  cold->add_option("--image", opt.image_path, "Image spec")->required();
  cold->add_option("--set", opt.set_path, "Subset file")->required();
  cold->add_option("--s", opt.s, "Coldness bound (default 1)")
      ->check(CLI::NonNegativeNumber);

  auto* minimal = add("find-minimal", "List minimal (m,n)-limiting sets",
                      FindMinimal);
  minimal->add_option("--image", opt.image_path, "Image spec")->required();
  minimal->add_option("--m", opt.m, "Bound on A")->required()
      ->check(CLI::NonNegativeNumber);
  minimal->add_option("--n", opt.n, "Bound on X")->required()
      ->check(CLI::NonNegativeNumber);
  minimal->add_option("--size-cap", opt.size_cap,
                      "Largest set size to try (default |X|)")
      ->check(CLI::NonNegativeNumber);

  auto* profile = add("profile", "Least n with (A,m,n) limited", Profile);
  profile->add_option("--image", opt.image_path, "Image spec")->required();
  profile->add_option("--set", opt.set_path, "Subset file")->required();
  profile->add_option("--m", opt.m, "Bound on A")->required()
      ->check(CLI::NonNegativeNumber);

  auto* classify = add("classify-cycle-maps",
                       "Classify every continuous self-map of a cycle",
                       ClassifyCycleMaps);
  classify->add_option("--v", opt.v, "Cycle length");
  classify->add_option("--image", opt.image_path, "Cycle image spec");

  auto* rigidity = add("rigidity", "Decide rigidity", Rigidity);
  rigidity->add_option("--image", opt.image_path, "Image spec")->required();

  auto* metrics = add("metrics", "Hausdorff and continuity metrics", Metrics);
  metrics->add_option("--image", opt.image_path, "Ambient image spec")
      ->required();
  metrics->add_option("--y0", opt.y0_path, "First subset file")->required();
  metrics->add_option("--y1", opt.y1_path, "Second subset file")->required();

  auto* check = add("check-map", "Check continuity and displacement of a map",
                    CheckMap);
  check->add_option("--image", opt.image_path, "Image spec")->required();
  check->add_option("--map", opt.map_path, "Map file")->required();
  check->add_option("--m", opt.m_opt, "Also check the diameter bound")
      ->check(CLI::NonNegativeNumber);

  auto* dot = add("export-dot", "Write the adjacency graph as DOT",
                  [](const Options&) { return Report{}; });
  dot->add_option("--image", opt.image_path, "Image spec")->required();

  std::vector<const char*> argv{"digitop"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitInputError;
  }

  const auto start = Clock::now();
  try {
    if (dot->parsed()) {
      out << ExportDot(LoadImage(opt).image);
      return kExitHolds;
    }
    Report report = handler(opt);
    Emit(opt, report, out, start);
    return report.exit_code;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kBudgetExceeded) {
      if (opt.json) {
        Json body = StartBody(app.get_subcommands().front()->get_name());
        body["verdict"] = "unknown";
        body["error"] = e.what();
        out << body.dump(2) << "\n";
      }
      err << "unknown: " << e.what() << "\n";
      return kExitUnknown;
    }
    err << "error: " << ErrorCodeName(e.code()) << ": " << e.what() << "\n";
    return kExitInputError;
  }
}

}  // namespace digitop::cli
