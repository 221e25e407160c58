// Fixture loading shared by the unit tests and the acceptance run.
#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "tkh/jsonio.h"

inline std::string fixture_path(const std::string& name) {
    return std::string(TKH_FIXTURE_DIR) + "/" + name;
}

inline std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

inline tkh::Diagram fixture_diagram(const std::string& name) {
    return tkh::parse_diagram(slurp(fixture_path(name)));
}

inline tkh::Decorated fixture_decorated(const std::string& name) {
    return tkh::parse_decorated(slurp(fixture_path(name)));
}
