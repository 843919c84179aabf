#pragma once

#include <string_view>

namespace trispec::data {

// Contents of data/graphs.json and data/groups.json, compiled in at build time.
std::string_view graphs_json();
std::string_view groups_json();

}  // namespace trispec::data
