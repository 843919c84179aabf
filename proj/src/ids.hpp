#pragma once

#include <string>
#include <vector>

namespace trispec {

// "Dstar(7)" -> {"Dstar", {"7"}}; "E8" -> {"E8", {}}.
struct SubjectId {
    std::string head;
    std::vector<std::string> args;
};

SubjectId parse_subject(const std::string& id);
int int_arg(const SubjectId& s, std::size_t i);

}  // namespace trispec
