#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace golden {

using json = nlohmann::json;

inline std::string path(const std::string& name) { return std::string(TORICSMITH_SOURCE_DIR) + "/tests/golden/" + name; }
inline std::string fixture_path(const std::string& name) {
    return std::string(TORICSMITH_SOURCE_DIR) + "/fixtures/" + name + ".json";
}

inline std::string read(const std::string& file) {
    std::ifstream in(file, std::ios::binary);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline json load(const std::string& name) { return json::parse(read(path(name))); }

}  // namespace golden
