#include "hurwitz/records.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace hurwitz {

const std::string* Record::find(const std::string& key) const {
  for (const auto& [k, v] : fields)
    if (k == key) return &v;
  return nullptr;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

static void write_row(std::ostream& os, const std::vector<std::string>& row) {
  for (size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_field(row[i]);
  os << '\n';
}

void write_csv(std::ostream& os, const Table& t) {
  write_row(os, t.header);
  for (const auto& r : t.rows) write_row(os, r);
}

void write_records(std::ostream& os, const std::vector<Record>& rs) {
  for (size_t i = 0; i < rs.size(); ++i) {
    if (i) os << '\n';
    for (const auto& [k, v] : rs[i].fields) os << k << ": " << v << '\n';
  }
}

void write_table(std::ostream& os, const Table& t, OutputFormat f) {
  if (f == OutputFormat::Csv) return write_csv(os, t);
  std::vector<Record> rs;
  for (const auto& row : t.rows) {
    Record r;
    for (size_t i = 0; i < t.header.size() && i < row.size(); ++i) r.add(t.header[i], row[i]);
    rs.push_back(std::move(r));
  }
  write_records(os, rs);
}

std::vector<Record> parse_records(const std::string& text) {
  std::vector<Record> out;
  std::istringstream in(text);
  std::string line;
  Record cur;
  while (std::getline(in, line)) {
    if (line.empty()) {
      if (!cur.fields.empty()) out.push_back(std::move(cur));
      cur = Record{};
      continue;
    }
    auto pos = line.find(": ");
    if (pos == std::string::npos) throw std::invalid_argument("record line without ': ': " + line);
    cur.add(line.substr(0, pos), line.substr(pos + 2));
  }
  if (!cur.fields.empty()) out.push_back(std::move(cur));
  return out;
}

}  // namespace hurwitz
