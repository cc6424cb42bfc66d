#include "pint/table.hpp"

#include <cstdio>
#include <sstream>

namespace pint {

namespace {

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    out.push_back(cur);
    return out;
}

std::string join(const std::vector<std::string>& fields, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out += sep;
        out += fields[i];
    }
    return out;
}

} // namespace

std::string to_csv(const Table& t) {
    std::string out = join(t.columns, ",") + "\n";
    for (const auto& row : t.rows) out += join(row, ",") + "\n";
    return out;
}

Table from_csv(const std::string& text) {
    Table t;
    std::istringstream in(text);
    std::string line;
    bool header = true;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        auto fields = split_fields(line);
        if (header) {
            t.columns = std::move(fields);
            header = false;
        } else {
            t.rows.push_back(std::move(fields));
        }
    }
    return t;
}

std::string to_markdown(const Table& t) {
    std::string out = "| " + join(t.columns, " | ") + " |\n|";
    for (std::size_t i = 0; i < t.columns.size(); ++i) out += "---|";
    out += "\n";
    for (const auto& row : t.rows) out += "| " + join(row, " | ") + " |\n";
    return out;
}

std::string format_sig(double v, int sig) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", sig, v);
    return buf;
}

} // namespace pint
