#pragma once

#include <cstdio>
#include <string>
#include <vector>

namespace rdw::csv {

// Shortest stable representation at 10 significant digits. All CSV numbers go
// through this so outputs are byte-stable across runs.
inline std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

std::vector<std::string> split(const std::string& line, char sep = ',');

// Whole-file helpers; throw IoError on failure.
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace rdw::csv
