#include "lcdunkl/csv.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace lcd {

std::string format_double(double v) {
    char buf[40];
    const auto r = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
    return std::string(buf, r.ptr);
}

std::vector<double> CsvTable::column(const std::string& name) const {
    for (std::size_t c = 0; c < header.size(); ++c)
        if (header[c] == name) {
            std::vector<double> out;
            out.reserve(rows.size());
            for (const auto& r : rows) out.push_back(r[c]);
            return out;
        }
    throw std::runtime_error("csv: no column '" + name + "'");
}

void write_csv(std::ostream& os, const CsvTable& t) {
    for (std::size_t c = 0; c < t.header.size(); ++c) os << (c ? "," : "") << t.header[c];
    os << '\n';
    for (const auto& r : t.rows) {
        for (std::size_t c = 0; c < r.size(); ++c) os << (c ? "," : "") << format_double(r[c]);
        os << '\n';
    }
}

void write_csv(const std::string& path, const CsvTable& t) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot write " + path);
    write_csv(os, t);
}

namespace {

std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> out;
    std::string cell;
    std::istringstream ss(line);
    while (std::getline(ss, cell, ',')) {
        const auto b = cell.find_first_not_of(" \t\r");
        const auto e = cell.find_last_not_of(" \t\r");
        out.push_back(b == std::string::npos ? "" : cell.substr(b, e - b + 1));
    }
    return out;
}

}  // namespace

CsvTable read_csv(std::istream& is, const std::string& source) {
    CsvTable t;
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        auto cells = split(line);
        if (t.header.empty()) {
            t.header = std::move(cells);
            continue;
        }
        if (cells.size() != t.header.size())
            throw std::runtime_error(source + ":" + std::to_string(lineno) + ": expected " +
                                     std::to_string(t.header.size()) + " columns");
        std::vector<double> row;
        for (const auto& c : cells) {
            double v = 0;
            const auto r = std::from_chars(c.data(), c.data() + c.size(), v);
            if (r.ec != std::errc() || r.ptr != c.data() + c.size())
                throw std::runtime_error(source + ":" + std::to_string(lineno) + ": not a number: '" + c + "'");
            row.push_back(v);
        }
        t.rows.push_back(std::move(row));
    }
    if (t.header.empty()) throw std::runtime_error(source + ": empty csv");
    return t;
}

CsvTable read_csv(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("cannot read " + path);
    return read_csv(is, path);
}

}  // namespace lcd
