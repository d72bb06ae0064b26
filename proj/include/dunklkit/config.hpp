#pragma once

#include <map>
#include <string>
#include <vector>

#include "dunklkit/errors.hpp"

namespace dunklkit {

// Minimal TOML-style configuration: [section] headers, key = value lines,
// values are strings, numbers, booleans, or flat arrays of numbers/strings.
// Keys are addressed as "section.key" ("" section for top-level keys).
struct ConfigValue {
    enum class Type { Str, Num, Bool, NumList, StrList };
    Type type = Type::Str;
    std::string str;
    double num = 0.0;
    bool boolean = false;
    std::vector<double> nums;
    std::vector<std::string> strs;
};

class Config {
public:
    static Config parse_file(const std::string& path);
    static Config parse_string(const std::string& text, const std::string& origin = "<string>");

    bool has(const std::string& key) const { return values_.count(key) > 0; }

    std::string get_str(const std::string& key, const std::string& fallback) const;
    double get_num(const std::string& key, double fallback) const;
    bool get_bool(const std::string& key, bool fallback) const;
    std::vector<double> get_nums(const std::string& key,
                                 const std::vector<double>& fallback = {}) const;
    std::vector<std::string> get_strs(const std::string& key) const;

    std::string require_str(const std::string& key) const;
    double require_num(const std::string& key) const;
    std::vector<double> require_nums(const std::string& key) const;

    const std::map<std::string, ConfigValue>& entries() const { return values_; }

private:
    const ConfigValue* find(const std::string& key) const;
    const ConfigValue& require(const std::string& key, ConfigValue::Type t) const;
    std::map<std::string, ConfigValue> values_;
    std::string origin_;
};

}  // namespace dunklkit
