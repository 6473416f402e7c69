#pragma once

#include <string>
#include <vector>

namespace panelcast {

/// In-memory CSV table. Header row is mandatory.
struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    /// Index of a header column; throws if absent.
    std::size_t column(const std::string& name) const;
    bool has_column(const std::string& name) const;
};

/// Reads a comma-separated file with a header row. Fields may be quoted with
/// double quotes; "" inside a quoted field is an escaped quote.
CsvTable read_csv(const std::string& path);
CsvTable parse_csv(const std::string& content);

/// Writes rows with '\n' line endings, quoting fields only when needed.
void write_csv(const std::string& path, const CsvTable& table);
std::string csv_to_string(const CsvTable& table);

} // namespace panelcast
