#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dunklkit/errors.hpp"

namespace dunklkit {

struct Check {
    std::string id;
    bool passed = false;
    double observed = 0.0;
    double bound = 0.0;
    std::string detail;
};

// fixed "%.12g" rendering so emitted artifacts are byte-stable
std::string format_double(double v);

// versioned verify report; stable key order and formatting
std::string checks_to_json(const std::string& suite, const std::vector<Check>& checks,
                           unsigned long long seed);

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
    std::vector<std::pair<std::string, std::string>> metadata;
};

std::string table_to_csv(const Table& t);
std::string table_to_json(const std::string& name, const Table& t);

// flatten a report emitted by this tool ("checks" or "rows") into CSV
std::string json_report_to_csv(const std::string& json_text);

void write_text_file(const std::string& path, const std::string& text);
std::string read_text_file(const std::string& path);

}  // namespace dunklkit
