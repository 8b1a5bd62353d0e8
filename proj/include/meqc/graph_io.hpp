#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "meqc/graph.hpp"

namespace meqc {

// Contents of an instance file:
//
//   c free-form comment
//   p edge <n> <m>
//   e <u> <v>
//   s <v>          (optional; boundary vertices)
//   g <v> <1|2>    (optional; per-vertex palette budgets)
//
// Vertices are 0-indexed.  Comments of the form "c apex <id>..." and
// "c t <threshold>" are recognised and surfaced so that generated files can
// carry their own metadata.
struct InstanceData {
    Graph graph;
    std::set<int> s_set;
    std::map<int, int> budgets;
    std::vector<int> apex_hints;
    std::optional<int> threshold;
};

InstanceData parse_instance_text(const std::string& text);
InstanceData load_instance_file(const std::string& path);

std::string write_instance_text(const Graph& g, const std::set<int>& s_set,
                                const std::map<int, int>& budgets,
                                const std::vector<std::string>& header_comments);

void save_instance_file(const std::string& path, const std::string& text);

} // namespace meqc
