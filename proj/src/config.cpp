#include "dunklkit/config.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace dunklkit {

namespace {

[[noreturn]] void fail(const std::string& origin, int line, int col, const std::string& what) {
    throw ConfigError(origin + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " +
                      what);
}

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

bool parse_number(const std::string& tok, double& out) {
    if (tok.empty()) return false;
    size_t pos = 0;
    try {
        out = std::stod(tok, &pos);
    } catch (...) {
        return false;
    }
    return pos == tok.size();
}

ConfigValue parse_value(const std::string& raw, const std::string& origin, int line, int col) {
    ConfigValue v;
    std::string tok = trim(raw);
    if (tok.empty()) fail(origin, line, col, "missing value");
    if (tok.front() == '"') {
        if (tok.size() < 2 || tok.back() != '"')
            fail(origin, line, col, "unterminated string");
        v.type = ConfigValue::Type::Str;
        v.str = tok.substr(1, tok.size() - 2);
        return v;
    }
    if (tok.front() == '[') {
        if (tok.back() != ']') fail(origin, line, col, "unterminated array");
        std::string inner = tok.substr(1, tok.size() - 2);
        std::vector<std::string> items;
        std::string cur;
        for (char c : inner) {
            if (c == ',') {
                items.push_back(trim(cur));
                cur.clear();
            } else {
                cur.push_back(c);
            }
        }
        if (!trim(cur).empty()) items.push_back(trim(cur));
        bool strings = !items.empty() && items[0].size() > 0 && items[0][0] == '"';
        if (strings) {
            v.type = ConfigValue::Type::StrList;
            for (const auto& it : items) {
                if (it.size() < 2 || it.front() != '"' || it.back() != '"')
                    fail(origin, line, col, "bad string array element '" + it + "'");
                v.strs.push_back(it.substr(1, it.size() - 2));
            }
        } else {
            v.type = ConfigValue::Type::NumList;
            for (const auto& it : items) {
                double d;
                if (!parse_number(it, d))
                    fail(origin, line, col, "bad numeric array element '" + it + "'");
                v.nums.push_back(d);
            }
        }
        return v;
    }
    if (tok == "true" || tok == "false") {
        v.type = ConfigValue::Type::Bool;
        v.boolean = tok == "true";
        return v;
    }
    double d;
    if (parse_number(tok, d)) {
        v.type = ConfigValue::Type::Num;
        v.num = d;
        return v;
    }
    fail(origin, line, col, "unrecognized value '" + tok + "'");
}

}  // namespace

Config Config::parse_string(const std::string& text, const std::string& origin) {
    Config cfg;
    cfg.origin_ = origin;
    std::istringstream in(text);
    std::string raw;
    std::string section;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        // strip comments outside strings
        std::string line;
        bool in_str = false;
        for (char c : raw) {
            if (c == '"') in_str = !in_str;
            if (c == '#' && !in_str) break;
            line.push_back(c);
        }
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') fail(origin, line_no, 1, "unterminated section header");
            section = trim(line.substr(1, line.size() - 2));
            if (section.empty()) fail(origin, line_no, 1, "empty section name");
            continue;
        }
        size_t eq = line.find('=');
        if (eq == std::string::npos) fail(origin, line_no, 1, "expected key = value");
        std::string key = trim(line.substr(0, eq));
        if (key.empty()) fail(origin, line_no, 1, "empty key");
        std::string full = section.empty() ? key : section + "." + key;
        if (cfg.values_.count(full))
            fail(origin, line_no, 1, "duplicate key '" + full + "'");
        cfg.values_[full] = parse_value(line.substr(eq + 1), origin, line_no, (int)eq + 2);
    }
    return cfg;
}

Config Config::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_string(ss.str(), path);
}

const ConfigValue* Config::find(const std::string& key) const {
    auto it = values_.find(key);
    return it == values_.end() ? nullptr : &it->second;
}

const ConfigValue& Config::require(const std::string& key, ConfigValue::Type t) const {
    const ConfigValue* v = find(key);
    if (!v) throw ConfigError(origin_ + ": missing required key '" + key + "'");
    if (v->type != t) {
        // allow a single number where a list is wanted
        if (!(t == ConfigValue::Type::NumList && v->type == ConfigValue::Type::Num))
            throw ConfigError(origin_ + ": key '" + key + "' has the wrong type");
    }
    return *v;
}

std::string Config::get_str(const std::string& key, const std::string& fallback) const {
    const ConfigValue* v = find(key);
    if (!v) return fallback;
    if (v->type != ConfigValue::Type::Str)
        throw ConfigError(origin_ + ": key '" + key + "' is not a string");
    return v->str;
}

double Config::get_num(const std::string& key, double fallback) const {
    const ConfigValue* v = find(key);
    if (!v) return fallback;
    if (v->type != ConfigValue::Type::Num)
        throw ConfigError(origin_ + ": key '" + key + "' is not a number");
    return v->num;
}

bool Config::get_bool(const std::string& key, bool fallback) const {
    const ConfigValue* v = find(key);
    if (!v) return fallback;
    if (v->type != ConfigValue::Type::Bool)
        throw ConfigError(origin_ + ": key '" + key + "' is not a boolean");
    return v->boolean;
}

std::vector<double> Config::get_nums(const std::string& key,
                                     const std::vector<double>& fallback) const {
    const ConfigValue* v = find(key);
    if (!v) return fallback;
    if (v->type == ConfigValue::Type::Num) return {v->num};
    if (v->type != ConfigValue::Type::NumList)
        throw ConfigError(origin_ + ": key '" + key + "' is not a numeric array");
    return v->nums;
}

std::vector<std::string> Config::get_strs(const std::string& key) const {
    const ConfigValue* v = find(key);
    if (!v) return {};
    if (v->type != ConfigValue::Type::StrList)
        throw ConfigError(origin_ + ": key '" + key + "' is not a string array");
    return v->strs;
}

std::string Config::require_str(const std::string& key) const {
    return require(key, ConfigValue::Type::Str).str;
}

double Config::require_num(const std::string& key) const {
    return require(key, ConfigValue::Type::Num).num;
}

std::vector<double> Config::require_nums(const std::string& key) const {
    const ConfigValue& v = require(key, ConfigValue::Type::NumList);
    if (v.type == ConfigValue::Type::Num) return {v.num};
    return v.nums;
}

}  // namespace dunklkit
