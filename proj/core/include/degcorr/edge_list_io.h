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
#ifndef DEGCORR_EDGE_LIST_IO_H_
#define DEGCORR_EDGE_LIST_IO_H_

#include <iosfwd>
#include <optional>
#include <string>

#include "degcorr/digraph.h"

namespace degcorr {

// One edge occurrence per line as "src<TAB>dst" (any run of tabs/spaces is
// accepted). Blank lines and '#' comments are ignored; repeated lines are
// multi-edges. Throws ParseError naming the source and line on malformed or
// negative ids. Without an explicit node_count, a "# nodes N" comment sets
// the node count, else it is max id + 1.
DirectedMultigraph ReadEdgeList(std::istream& in, const std::string& source_name,
                                std::optional<std::size_t> node_count = {});

// Opens and reads `path`. Throws std::runtime_error if it cannot be opened.
DirectedMultigraph ReadEdgeListFile(const std::string& path,
                                    std::optional<std::size_t> node_count = {});

// Writes every occurrence in stored order, preceded by a "# nodes" comment.
void WriteEdgeList(std::ostream& out, const DirectedMultigraph& g);

}  // namespace degcorr

#endif  // DEGCORR_EDGE_LIST_IO_H_
