// Copyright 2026 The degcorr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
#include "degcorr/edge_list_io.h"

#include <charconv>
#include <fstream>
#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "degcorr/errors.h"

namespace degcorr {
namespace {

NodeId ParseNodeId(std::string_view field, const std::string& source, std::size_t line) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw ParseError(source, line, "malformed node id '" + std::string(field) + "'");
  }
  if (value < 0) {
    throw ParseError(source, line, "negative node id " + std::to_string(value));
  }
  if (value >= std::numeric_limits<NodeId>::max()) {
    throw ParseError(source, line, "node id " + std::to_string(value) + " too large");
  }
  return static_cast<NodeId>(value);
}

// "# nodes N" as written by WriteEdgeList.
std::optional<std::size_t> DeclaredNodeCount(std::string_view comment) {
  constexpr std::string_view kPrefix = "# nodes ";
  if (comment.substr(0, kPrefix.size()) != kPrefix) return std::nullopt;
  comment.remove_prefix(kPrefix.size());
  while (!comment.empty() && (comment.back() == '\r' || comment.back() == ' ')) {
    comment.remove_suffix(1);
  }
  std::size_t n = 0;
  auto [ptr, ec] = std::from_chars(comment.data(), comment.data() + comment.size(), n);
  if (ec != std::errc() || ptr != comment.data() + comment.size()) return std::nullopt;
  return n;
}

}  // namespace

DirectedMultigraph ReadEdgeList(std::istream& in, const std::string& source_name,
                                std::optional<std::size_t> node_count) {
  std::vector<Edge> edges;
  std::optional<std::size_t> declared;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view text(line);
    if (const auto hash = text.find('#'); hash != std::string_view::npos) {
      if (auto n = DeclaredNodeCount(text.substr(hash))) declared = n;
      text = text.substr(0, hash);
    }
    std::vector<std::string_view> fields;
    std::size_t i = 0;
    while (i < text.size()) {
      while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '\r')) ++i;
      const std::size_t start = i;
      while (i < text.size() && text[i] != ' ' && text[i] != '\t' && text[i] != '\r') ++i;
      if (i > start) fields.push_back(text.substr(start, i - start));
    }
    if (fields.empty()) continue;
    if (fields.size() != 2) {
      throw ParseError(source_name, line_no, "expected 'src<TAB>dst', got " +
                                                 std::to_string(fields.size()) + " field(s)");
    }
    edges.push_back({ParseNodeId(fields[0], source_name, line_no),
                     ParseNodeId(fields[1], source_name, line_no)});
  }
  if (in.bad()) throw std::runtime_error(source_name + ": read error");
  try {
    return DirectedMultigraph::FromEdges(std::move(edges), node_count ? node_count : declared);
  } catch (const std::invalid_argument& e) {
    throw ParseError(source_name, 0, e.what());
  }
}

DirectedMultigraph ReadEdgeListFile(const std::string& path,
                                    std::optional<std::size_t> node_count) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
  return ReadEdgeList(in, path, node_count);
}

void WriteEdgeList(std::ostream& out, const DirectedMultigraph& g) {
  out << "# nodes " << g.node_count() << "\n";
  for (const Edge& e : g.edges()) out << e.source << '\t' << e.target << '\n';
}

}  // namespace degcorr
