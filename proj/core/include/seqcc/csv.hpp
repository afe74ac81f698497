#pragma once

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace seqcc::csv {

/// Malformed CSV input (missing header, ragged rows, non-numeric cells, ...).
struct CsvError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Column-major numeric table. One column per series, header row mandatory.
struct Table {
    std::vector<std::string> names;
    std::vector<std::vector<double>> columns;

    std::size_t rows() const { return columns.empty() ? 0 : columns[0].size(); }
    /// Index of a named column; throws CsvError if absent.
    std::size_t column_index(std::string_view name) const;
};

Table parse_table(std::string_view text);
Table read_table(const std::filesystem::path& path);

/// Render with integral cells printed as integers, everything else with 17
/// significant digits, so a written table is byte-stable.
std::string format_table(const Table& table);
void write_table(const std::filesystem::path& path, const Table& table);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

std::uint64_t fnv1a64(std::string_view bytes);
/// "fnv1a64:<16 hex digits>" of the raw file bytes.
std::string file_digest(const std::filesystem::path& path);

} // namespace seqcc::csv
