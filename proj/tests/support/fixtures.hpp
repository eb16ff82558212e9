#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "sqfpd/io.hpp"

namespace sqfpd::testing {

inline std::string fixture_path(const std::string& name) { return std::string(SQFPD_SOURCE_DIR) + "/fixtures/" + name; }

inline std::string read_fixture(const std::string& name)
{
    std::ifstream in(fixture_path(name));
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

inline json fixture_json(const std::string& name) { return json::parse(read_fixture(name)); }

} // namespace sqfpd::testing
