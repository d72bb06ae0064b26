#include "dunklkit/report.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace dunklkit {

using ordered_json = nlohmann::ordered_json;

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string checks_to_json(const std::string& suite, const std::vector<Check>& checks,
                           unsigned long long seed) {
    ordered_json j;
    j["schema_version"] = "1";
    j["kind"] = "verify";
    j["suite"] = suite;
    j["seed"] = seed;
    j["area_constant_convention"] =
        "S^2 carries the inverse sphere-surface normalization of the weighted mean";
    bool all = true;
    ordered_json arr = ordered_json::array();
    for (const auto& c : checks) {
        ordered_json e;
        e["id"] = c.id;
        e["passed"] = c.passed;
        e["observed"] = format_double(c.observed);
        e["bound"] = format_double(c.bound);
        e["detail"] = c.detail;
        arr.push_back(e);
        all = all && c.passed;
    }
    j["checks"] = arr;
    j["passed"] = all;
    return j.dump(2) + "\n";
}

namespace {

std::string csv_escape(const std::string& s) {
    bool needs = s.find_first_of(",\"\n") != std::string::npos;
    if (!needs) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out.push_back(c);
    }
    out += "\"";
    return out;
}

}  // namespace

std::string table_to_csv(const Table& t) {
    std::ostringstream out;
    for (const auto& [k, v] : t.metadata) out << "# " << k << " = " << v << "\n";
    for (size_t i = 0; i < t.columns.size(); ++i)
        out << (i ? "," : "") << csv_escape(t.columns[i]);
    out << "\n";
    for (const auto& row : t.rows) {
        for (size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_escape(row[i]);
        out << "\n";
    }
    return out.str();
}

std::string table_to_json(const std::string& name, const Table& t) {
    ordered_json j;
    j["schema_version"] = "1";
    j["kind"] = name;
    for (const auto& [k, v] : t.metadata) j[k] = v;
    j["columns"] = t.columns;
    ordered_json rows = ordered_json::array();
    for (const auto& row : t.rows) {
        ordered_json r;
        for (size_t i = 0; i < t.columns.size() && i < row.size(); ++i)
            r[t.columns[i]] = row[i];
        rows.push_back(r);
    }
    j["rows"] = rows;
    return j.dump(2) + "\n";
}

std::string json_report_to_csv(const std::string& json_text) {
    ordered_json j;
    try {
        j = ordered_json::parse(json_text);
    } catch (const std::exception& e) {
        throw ConfigError(std::string("input is not valid JSON: ") + e.what());
    }
    Table t;
    if (j.contains("checks")) {
        t.columns = {"id", "passed", "observed", "bound", "detail"};
        for (const auto& c : j["checks"]) {
            t.rows.push_back({c.value("id", ""), c.value("passed", false) ? "true" : "false",
                              c.value("observed", ""), c.value("bound", ""),
                              c.value("detail", "")});
        }
        return table_to_csv(t);
    }
    if (j.contains("rows") && j.contains("columns")) {
        for (const auto& c : j["columns"]) t.columns.push_back(c.get<std::string>());
        for (const auto& r : j["rows"]) {
            std::vector<std::string> row;
            for (const auto& c : t.columns) {
                const auto& v = r.contains(c) ? r[c] : ordered_json();
                if (v.is_string()) row.push_back(v.get<std::string>());
                else if (v.is_boolean()) row.push_back(v.get<bool>() ? "true" : "false");
                else if (v.is_number()) row.push_back(format_double(v.get<double>()));
                else row.push_back("");
            }
            t.rows.push_back(std::move(row));
        }
        return table_to_csv(t);
    }
    throw ConfigError("JSON report has neither 'checks' nor 'columns'+'rows'");
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out << text;
    if (!out) throw IoError("write failed for '" + path + "'");
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "' for reading");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace dunklkit
