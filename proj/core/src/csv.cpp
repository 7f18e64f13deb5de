#include "dipair/csv.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <stdexcept>

namespace dipair {

std::string format_double(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    return buffer;
}

CsvTable::CsvTable(std::vector<std::string> columns)
    : columns_(std::move(columns)) {
    if (columns_.empty()) {
        throw std::invalid_argument("csv table needs at least one column");
    }
}

void CsvTable::add_row(const std::vector<double>& row) {
    if (row.size() != columns_.size()) {
        throw std::invalid_argument("csv row width does not match header");
    }
    rows_.push_back(row);
}

std::string CsvTable::to_string() const {
    std::string out;
    for (std::size_t c = 0; c < columns_.size(); ++c) {
        if (c) out += ',';
        out += columns_[c];
    }
    out += '\n';
    for (const auto& row : rows_) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) out += ',';
            out += format_double(row[c]);
        }
        out += '\n';
    }
    return out;
}

void CsvTable::save(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write csv file: " + path);
    }
    out << to_string();
}

void write_sidecar(const std::string& data_path, const std::string& text) {
    const std::string path = data_path + ".meta.json";
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write sidecar file: " + path);
    }
    out << text;
    if (text.empty() || text.back() != '\n') {
        out << '\n';
    }
}

std::string output_directory() {
    const char* env = std::getenv("DIPAIR_OUT_DIR");
    if (env != nullptr && env[0] != '\0') {
        return env;
    }
    return ".";
}

std::string resolve_output_path(const std::string& name) {
    namespace fs = std::filesystem;
    fs::path target(name);
    if (!target.is_absolute() && name.rfind("./", 0) != 0 &&
        name.rfind("../", 0) != 0) {
        target = fs::path(output_directory()) / target;
    }
    if (target.has_parent_path()) {
        fs::create_directories(target.parent_path());
    }
    return target.string();
}

}  // namespace dipair
