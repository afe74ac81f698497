#include "seqcc/csv.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace seqcc::csv {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

std::vector<std::string_view> split_line(std::string_view line) {
    std::vector<std::string_view> cells;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            cells.push_back(trim(line.substr(start)));
            break;
        }
        cells.push_back(trim(line.substr(start, comma - start)));
        start = comma + 1;
    }
    return cells;
}

double parse_cell(std::string_view cell, std::size_t row, std::size_t col) {
    double value = 0.0;
    const auto [ptr, ec] =
        std::from_chars(cell.data(), cell.data() + cell.size(), value);
    if (ec != std::errc() || ptr != cell.data() + cell.size()) {
        throw CsvError("non-numeric cell '" + std::string(cell) + "' at row " +
                       std::to_string(row) + ", column " + std::to_string(col));
    }
    return value;
}

} // namespace

std::size_t Table::column_index(std::string_view name) const {
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (names[i] == name) return i;
    }
    throw CsvError("no such column: " + std::string(name));
}

Table parse_table(std::string_view text) {
    Table table;
    std::size_t pos = 0;
    std::size_t row = 0;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        std::string_view line = eol == std::string_view::npos
                                    ? text.substr(pos)
                                    : text.substr(pos, eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        if (trim(line).empty()) continue;

        const auto cells = split_line(line);
        if (row == 0) {
            for (const auto cell : cells) {
                if (cell.empty()) {
                    throw CsvError("empty column name in header");
                }
                for (const auto& existing : table.names) {
                    if (existing == cell) {
                        throw CsvError("duplicate column name: " + std::string(cell));
                    }
                }
                table.names.emplace_back(cell);
            }
            table.columns.resize(table.names.size());
        } else {
            if (cells.size() != table.names.size()) {
                throw CsvError("row " + std::to_string(row) + " has " +
                               std::to_string(cells.size()) + " cells, expected " +
                               std::to_string(table.names.size()));
            }
            for (std::size_t c = 0; c < cells.size(); ++c) {
                table.columns[c].push_back(parse_cell(cells[c], row, c));
            }
        }
        ++row;
    }
    if (table.names.empty()) {
        throw CsvError("missing header row");
    }
    if (table.rows() == 0) {
        throw CsvError("no data rows");
    }
    return table;
}

Table read_table(const std::filesystem::path& path) {
    return parse_table(read_file(path));
}

std::string format_table(const Table& table) {
    std::string out;
    for (std::size_t i = 0; i < table.names.size(); ++i) {
        if (i != 0) out += ',';
        out += table.names[i];
    }
    out += '\n';
    const std::size_t rows = table.rows();
    char buf[48];
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < table.columns.size(); ++c) {
            if (c != 0) out += ',';
            const double v = table.columns[c][r];
            if (v == std::floor(v) && std::abs(v) < 9.007199254740992e15) {
                std::snprintf(buf, sizeof(buf), "%lld",
                              static_cast<long long>(v));
            } else {
                std::snprintf(buf, sizeof(buf), "%.17g", v);
            }
            out += buf;
        }
        out += '\n';
    }
    return out;
}

void write_table(const std::filesystem::path& path, const Table& table) {
    write_file(path, format_table(table));
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw CsvError("cannot open file: " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw CsvError("cannot write file: " + path.string());
    }
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
}

std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    for (const char ch : bytes) {
        hash ^= static_cast<unsigned char>(ch);
        hash *= 0x100000001b3ULL;
    }
    return hash;
}

std::string file_digest(const std::filesystem::path& path) {
    const std::uint64_t hash = fnv1a64(read_file(path));
    char buf[32];
    std::snprintf(buf, sizeof(buf), "fnv1a64:%016llx",
                  static_cast<unsigned long long>(hash));
    return buf;
}

} // namespace seqcc::csv
