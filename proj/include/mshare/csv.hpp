#pragma once

#include "mshare/common.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace mshare::csv {

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    int column(const std::string& name) const {
        for (std::size_t i = 0; i < header.size(); ++i) {
            if (header[i] == name) {
                return static_cast<int>(i);
            }
        }
        return -1;
    }
};

// Splits one CSV line. Supports double-quoted fields with "" escapes; no
// embedded newlines (none of our formats need them).
inline std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> out;
    std::string field;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    field.push_back('"');
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                field.push_back(c);
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            out.push_back(field);
            field.clear();
        } else if (c != '\r') {
            field.push_back(c);
        }
    }
    out.push_back(field);
    return out;
}

inline std::string escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') {
            out += "\"\"";
        } else {
            out.push_back(c);
        }
    }
    out.push_back('"');
    return out;
}

inline Table read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error("csv: cannot open " + path);
    }
    Table t;
    std::string line;
    if (!std::getline(in, line)) {
        throw Error("csv: empty file " + path);
    }
    t.header = split_line(line);
    while (std::getline(in, line)) {
        if (line.empty() || (line.size() == 1 && line[0] == '\r')) {
            continue;
        }
        t.rows.push_back(split_line(line));
    }
    return t;
}

inline void write_file(const std::string& path, const Table& t) {
    std::ofstream out(path);
    if (!out) {
        throw Error("csv: cannot write " + path);
    }
    for (std::size_t i = 0; i < t.header.size(); ++i) {
        out << (i ? "," : "") << escape(t.header[i]);
    }
    out << "\n";
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            out << (i ? "," : "") << escape(row[i]);
        }
        out << "\n";
    }
}

} // namespace mshare::csv
