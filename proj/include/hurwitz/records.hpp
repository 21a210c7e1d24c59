#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace hurwitz {

/// Ordered key/value pairs; printed as "key: value" lines.
struct Record {
  std::vector<std::pair<std::string, std::string>> fields;

  Record& add(std::string key, std::string value) {
    fields.emplace_back(std::move(key), std::move(value));
    return *this;
  }
  const std::string* find(const std::string& key) const;
};

/// A header row plus data rows; printed as CSV or as one record per row.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

enum class OutputFormat { Csv, Records };

/// Quotes fields containing a comma, quote or newline.
std::string csv_field(const std::string& s);
void write_csv(std::ostream& os, const Table& t);
/// Records separated by a blank line.
void write_records(std::ostream& os, const std::vector<Record>& rs);
void write_table(std::ostream& os, const Table& t, OutputFormat f);

/// Inverse of write_records; throws std::invalid_argument on a line without ": ".
std::vector<Record> parse_records(const std::string& text);

}  // namespace hurwitz
