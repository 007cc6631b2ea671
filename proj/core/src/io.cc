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

#include "digitop/io.h"

#include <fstream>
#include <regex>
#include <sstream>
#include <string>
#include <unordered_map>

#include "digitop/error.h"
#include "json.hpp"

namespace digitop {
namespace {

using nlohmann::json;

[[noreturn]] void Fail(const std::string& field, const std::string& what) {
  throw Error(ErrorCode::kInvalidArgument, "field '" + field + "': " + what);
}

json Parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string("malformed JSON: ") + e.what());
  }
}

const json& Require(const json& object, const std::string& key,
                    const std::string& path) {
  if (!object.is_object() || !object.contains(key)) {
    Fail(path + key, "missing");
  }
  return object.at(key);
}

int AsInt(const json& value, const std::string& field) {
  if (!value.is_number_integer()) Fail(field, "expected an integer");
  const auto v = value.get<long long>();
  if (v < -kMaxCoordinate || v > kMaxCoordinate) Fail(field, "out of range");
  return static_cast<int>(v);
}

int ParseAdjacency(const json& value, const std::string& field) {
  if (value.is_string()) {
    const std::string s = value.get<std::string>();
    if (s.size() >= 2 && s[0] == 'c') {
      try {
        std::size_t used = 0;
        const int u = std::stoi(s.substr(1), &used);
        if (used == s.size() - 1) return u;
      } catch (const std::exception&) {
      }
    }
  }
  Fail(field, "expected an adjacency name such as \"c1\"");
}

Point ParsePoint(const json& value, const std::string& field) {
  if (!value.is_array()) Fail(field, "expected a coordinate array");
  Point p;
  for (std::size_t i = 0; i < value.size(); ++i) {
    p.coords.push_back(AsInt(value[i], field + "[" + std::to_string(i) + "]"));
  }
  return p;
}

LoadedImage ParseSpec(const json& spec, const std::string& path,
                      const BuildLimits& limits) {
  if (!spec.is_object()) Fail(path.empty() ? "<root>" : path, "expected an object");
  std::string constructor = "points";
  if (spec.contains("constructor")) {
    if (!spec["constructor"].is_string()) {
      Fail(path + "constructor", "expected a string");
    }
    constructor = spec["constructor"].get<std::string>();
  }

  if (constructor == "box") {
    const json& intervals = Require(spec, "intervals", path);
    if (!intervals.is_array() || intervals.empty()) {
      Fail(path + "intervals", "expected a nonempty array of [lo,hi] pairs");
    }
    std::vector<Interval> parsed;
    for (std::size_t i = 0; i < intervals.size(); ++i) {
      const std::string field = path + "intervals[" + std::to_string(i) + "]";
      const json& iv = intervals[i];
      if (!iv.is_array() || iv.size() != 2) Fail(field, "expected [lo,hi]");
      parsed.push_back({AsInt(iv[0], field), AsInt(iv[1], field)});
    }
    const int u = spec.contains("adjacency")
                      ? ParseAdjacency(spec["adjacency"], path + "adjacency")
                      : 1;
    if (u > static_cast<int>(parsed.size())) {
      Fail(path + "adjacency", "exceeds the number of intervals");
    }
    return {BuildBox(parsed, u, limits), std::nullopt};
  }
  if (constructor == "cycle") {
    const int v = AsInt(Require(spec, "v", path), path + "v");
    std::string realization = "abstract";
    if (spec.contains("realization")) {
      if (!spec["realization"].is_string()) {
        Fail(path + "realization", "expected \"abstract\" or \"grid\"");
      }
      realization = spec["realization"].get<std::string>();
    }
    CycleImage cycle;
    if (realization == "abstract") {
      cycle = BuildCycle(v);
    } else if (realization == "grid") {
      cycle = BuildGridCycle(v);
    } else {
      Fail(path + "realization", "expected \"abstract\" or \"grid\"");
    }
    return {cycle.image, cycle.indexing};
  }
  if (constructor == "explicit") {
    const int n = AsInt(Require(spec, "n", path), path + "n");
    std::vector<std::pair<int, int>> edges;
    if (spec.contains("edges")) {
      const json& list = spec["edges"];
      if (!list.is_array()) Fail(path + "edges", "expected an array");
      for (std::size_t i = 0; i < list.size(); ++i) {
        const std::string field = path + "edges[" + std::to_string(i) + "]";
        if (!list[i].is_array() || list[i].size() != 2) {
          Fail(field, "expected [x,y]");
        }
        edges.emplace_back(AsInt(list[i][0], field), AsInt(list[i][1], field));
      }
    }
    return {BuildExplicit(n, edges), std::nullopt};
  }
  if (constructor == "product") {
    const int u = AsInt(Require(spec, "u", path), path + "u");
    const json& factors = Require(spec, "factors", path);
    if (!factors.is_array()) Fail(path + "factors", "expected an array");
    std::vector<DigitalImage> images;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      images.push_back(
          ParseSpec(factors[i],
                    path + "factors[" + std::to_string(i) + "].", limits)
              .image);
    }
    return {BuildProduct(images, u, limits), std::nullopt};
  }
  if (constructor == "points") {
    const int dim = AsInt(Require(spec, "dim", path), path + "dim");
    const int u = ParseAdjacency(Require(spec, "adjacency", path),
                                 path + "adjacency");
    if (u > dim) Fail(path + "adjacency", "exceeds dim");
    const json& list = Require(spec, "points", path);
    if (!list.is_array()) Fail(path + "points", "expected an array");
    std::vector<Point> points;
    for (std::size_t i = 0; i < list.size(); ++i) {
      points.push_back(
          ParsePoint(list[i], path + "points[" + std::to_string(i) + "]"));
    }
    return {BuildFromPoints(dim, u, std::move(points), limits), std::nullopt};
  }
  Fail(path + "constructor", "unknown constructor \"" + constructor + "\"");
}

int ResolveVertex(const json& value, const DigitalImage& image,
                  const std::string& field) {
  if (value.is_number_integer()) {
    const int x = AsInt(value, field);
    if (x < 0 || x >= image.size()) Fail(field, "vertex index out of range");
    return x;
  }
  if (!image.embedded()) {
    Fail(field, "explicit images take vertex indices, not points");
  }
  const Point p = ParsePoint(value, field);
  const auto x = image.IndexOf(p);
  if (!x) Fail(field, "point " + p.ToString() + " is not in the image");
  return *x;
}

}  // namespace

LoadedImage ParseImageSpec(std::string_view json_text,
                           const BuildLimits& limits) {
  return ParseSpec(Parse(json_text), "", limits);
}

SubsetMask ParseSubset(std::string_view json_text, const DigitalImage& image) {
  const json spec = Parse(json_text);
  if (!spec.is_object()) Fail("<root>", "expected an object");
  SubsetMask mask(image.size());
  if (spec.contains("named")) {
    const std::string name =
        spec["named"].is_string() ? spec["named"].get<std::string>() : "";
    if (name == "corners") return Corners(image);
    if (name == "boundary") return Boundary(image);
    if (name == "leaves") return Leaves(image);
    if (name == "all") return SubsetMask::All(image.size());
    if (name == "none") return mask;
    Fail("named", "expected corners, boundary, leaves, all, or none");
  }
  const char* key = spec.contains("points")    ? "points"
                    : spec.contains("indices") ? "indices"
                                               : nullptr;
  if (key == nullptr) Fail("points", "missing (or give \"indices\")");
  const json& list = spec[key];
  if (!list.is_array()) Fail(key, "expected an array");
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string field = std::string(key) + "[" + std::to_string(i) + "]";
    if (std::string(key) == "indices" && !list[i].is_number_integer()) {
      Fail(field, "expected a vertex index");
    }
    if (std::string(key) == "points" && !list[i].is_array()) {
      Fail(field, "expected a coordinate array");
    }
    mask.set(ResolveVertex(list[i], image, field));
  }
  return mask;
}

MapTable ParseMap(std::string_view json_text, const DigitalImage& image) {
  const json spec = Parse(json_text);
  const json& table = Require(spec, "table", "");
  if (!table.is_array()) Fail("table", "expected an array");
  std::vector<int> values(image.size(), -1);
  const bool index_array = table.empty() || table[0].is_number_integer();
  if (index_array) {
    if (static_cast<int>(table.size()) != image.size()) {
      Fail("table", "expected " + std::to_string(image.size()) + " entries");
    }
    for (std::size_t i = 0; i < table.size(); ++i) {
      values[i] =
          ResolveVertex(table[i], image, "table[" + std::to_string(i) + "]");
    }
  } else {
    for (std::size_t i = 0; i < table.size(); ++i) {
      const std::string field = "table[" + std::to_string(i) + "]";
      if (!table[i].is_array() || table[i].size() != 2) {
        Fail(field, "expected [input, output]");
      }
      const int x = ResolveVertex(table[i][0], image, field + "[0]");
      if (values[x] >= 0) Fail(field, "input listed twice");
      values[x] = ResolveVertex(table[i][1], image, field + "[1]");
    }
    for (int x = 0; x < image.size(); ++x) {
      if (values[x] < 0) Fail("table", "no entry for " + image.Label(x));
    }
  }
  return MapTable(image, std::move(values));
}

std::string ReadTextFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kInvalidArgument, "cannot read file " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string ExportDot(const DigitalImage& image) {
  std::ostringstream out;
  out << "graph digital_image {\n";
  for (int x = 0; x < image.size(); ++x) {
    out << "  \"" << image.Label(x) << "\";\n";
  }
  for (const auto& [x, y] : image.Edges()) {
    out << "  \"" << image.Label(x) << "\" -- \"" << image.Label(y)
        << "\";\n";
  }
  out << "}\n";
  return out.str();
}

DotGraph ParseDot(std::string_view dot_text) {
  static const std::regex kVertex(R"re(^\s*"([^"]*)"\s*;\s*$)re");
  static const std::regex kEdge(
      R"re(^\s*"([^"]*)"\s*--\s*"([^"]*)"\s*;\s*$)re");
  DotGraph graph;
  std::unordered_map<std::string, int> index;
  auto lookup = [&](const std::string& label) {
    auto [it, inserted] =
        index.emplace(label, static_cast<int>(graph.vertices.size()));
    if (inserted) graph.vertices.push_back(label);
    return it->second;
  };
  std::istringstream in{std::string(dot_text)};
  std::string line;
  std::smatch match;
  while (std::getline(in, line)) {
    if (std::regex_match(line, match, kEdge)) {
      graph.edges.emplace_back(lookup(match[1]), lookup(match[2]));
    } else if (std::regex_match(line, match, kVertex)) {
      lookup(match[1]);
    }
  }
  return graph;
}

}  // namespace digitop
