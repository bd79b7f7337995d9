#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace qcc {

// One CLI run's machine-readable output. CSV and JSON emissions carry the
// same cells; both round-trip through the parsers below.
struct Cell {
    std::variant<std::string, int64_t, double> value;

    Cell() : value(std::string()) {}
    Cell(std::string s) : value(std::move(s)) {}
    Cell(const char* s) : value(std::string(s)) {}
    Cell(int64_t v) : value(v) {}
    Cell(uint32_t v) : value(static_cast<int64_t>(v)) {}
    Cell(double v) : value(v) {}

    std::string text() const; // canonical textual form (%.17g for doubles)
};

struct OutputRecord {
    std::string schema_version = "1";
    std::string command;
    std::vector<std::pair<std::string, std::string>> parameters;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
    std::vector<std::pair<std::string, std::string>> provenance;
};

std::string format_double(double v); // %.17g

std::string to_csv(const OutputRecord& rec);
std::string to_json(const OutputRecord& rec);

OutputRecord parse_csv(const std::string& text);
OutputRecord parse_json(const std::string& text);

} // namespace qcc
