#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lcd {

// Shortest form is not used: every value is written with 17 significant
// digits so that parsing returns the same double.
std::string format_double(double v);

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;

    std::vector<double> column(const std::string& name) const;
};

void write_csv(std::ostream& os, const CsvTable& t);
void write_csv(const std::string& path, const CsvTable& t);
// Header row required; throws std::runtime_error with "<source>:<line>: ..." on bad rows.
CsvTable read_csv(std::istream& is, const std::string& source);
CsvTable read_csv(const std::string& path);

}  // namespace lcd
