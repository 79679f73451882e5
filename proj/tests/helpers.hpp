#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "gridknot/grid.hpp"

namespace testutil {

inline std::string read_text(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline gridknot::GridDiagram load_corpus(const std::string& name) {
    return gridknot::parse_grid(read_text(std::string(GRIDKNOT_CORPUS_DIR) + "/" + name + ".grid"));
}

inline std::string data_path(const std::string& file) {
    return std::string(GRIDKNOT_TEST_DATA_DIR) + "/" + file;
}

// Small fixtures used across the suite.
inline gridknot::GridDiagram unknot2() { return gridknot::make_grid({2, 1}, {1, 2}, "u2"); }
inline gridknot::GridDiagram unknot3() { return gridknot::make_grid({2, 3, 1}, {1, 2, 3}, "u3"); }
inline gridknot::GridDiagram trefoil5() {
    return gridknot::make_grid({4, 5, 1, 2, 3}, {1, 2, 3, 4, 5}, "t5");
}

}  // namespace testutil
