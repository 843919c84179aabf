#include "ids.hpp"

#include <charconv>
#include <stdexcept>

namespace trispec {

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return {};
    auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

}  // namespace

SubjectId parse_subject(const std::string& raw) {
    std::string id = trim(raw);
    SubjectId s;
    auto open = id.find('(');
    if (open == std::string::npos) {
        if (id.empty()) throw std::invalid_argument("empty subject id");
        s.head = id;
        return s;
    }
    if (id.back() != ')') throw std::invalid_argument("malformed subject id: " + raw);
    s.head = trim(id.substr(0, open));
    std::string inner = id.substr(open + 1, id.size() - open - 2);
    std::size_t pos = 0;
    while (pos <= inner.size()) {
        auto comma = inner.find(',', pos);
        if (comma == std::string::npos) comma = inner.size();
        std::string arg = trim(inner.substr(pos, comma - pos));
        if (arg.empty()) throw std::invalid_argument("empty argument in subject id: " + raw);
        s.args.push_back(arg);
        pos = comma + 1;
    }
    return s;
}

int int_arg(const SubjectId& s, std::size_t i) {
    if (i >= s.args.size()) throw std::invalid_argument("missing argument for " + s.head);
    const std::string& a = s.args[i];
    int v = 0;
    auto [p, ec] = std::from_chars(a.data(), a.data() + a.size(), v);
    if (ec != std::errc() || p != a.data() + a.size()) throw std::invalid_argument("not an integer: " + a);
    return v;
}

}  // namespace trispec
