#pragma once

#include <string>
#include <vector>

namespace dipair {

// Shortest round-trip decimal representation of a double (17 significant
// digits, '.' separator, no locale effects).
std::string format_double(double value);

// Tabular output with deterministic bytes: header row, one line per data
// row, LF line endings, values formatted by format_double.
class CsvTable {
  public:
    explicit CsvTable(std::vector<std::string> columns);

    void add_row(const std::vector<double>& row);
    const std::vector<std::string>& columns() const { return columns_; }
    std::size_t row_count() const { return rows_.size(); }

    std::string to_string() const;
    void save(const std::string& path) const;

  private:
    std::vector<std::string> columns_;
    std::vector<std::vector<double>> rows_;
};

// Writes `text` next to a data file as '<data_path>.meta.json'.  Callers
// keep metadata free of timestamps so repeated runs stay byte-identical.
void write_sidecar(const std::string& data_path, const std::string& text);

// Default output directory: $DIPAIR_OUT_DIR if set, else the current
// directory.  Created on demand by resolve_output_path.
std::string output_directory();

// Joins output_directory() and `name` unless `name` is already absolute or
// explicitly relative to the working directory; creates the directory.
std::string resolve_output_path(const std::string& name);

}  // namespace dipair
