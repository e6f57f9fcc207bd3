#include "alebench/csv.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace alebench {

std::string format_double(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

namespace {

std::string format_optional(const std::optional<double>& value) {
  return value ? format_double(*value) : std::string{};
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::string current;
  for (const char c : line) {
    if (c == ',') {
      fields.push_back(std::move(current));
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  fields.push_back(std::move(current));
  return fields;
}

double parse_double(const std::string& field, const std::string& path,
                    std::size_t line_no) {
  char* end = nullptr;
  const double value = std::strtod(field.c_str(), &end);
  if (end == field.c_str() || *end != '\0')
    throw std::runtime_error(path + ":" + std::to_string(line_no) +
                             ": malformed number '" + field + "'");
  return value;
}

}  // namespace

std::string to_csv_row(const RunRecord& record) {
  std::string row;
  row += to_string(record.kind);
  row += ',';
  row += to_string(record.algorithm);
  row += ',';
  row += record.grid_param;
  row += ',';
  row += format_double(record.grid_value);
  row += ',';
  row += std::to_string(record.seed);
  row += ',';
  row += format_double(record.snr_db);
  row += ',';
  row += format_optional(record.mse);
  row += ',';
  row += format_optional(record.ber);
  row += ',';
  row += record.evaluations ? std::to_string(*record.evaluations) : std::string{};
  row += ',';
  row += format_optional(record.wall_time_ms);
  return row;
}

void write_csv(std::span<const RunRecord> records, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("write_csv: cannot open '" + path + "'");
  out << kCsvHeader << '\n';
  for (const RunRecord& record : records) out << to_csv_row(record) << '\n';
  out.flush();
  if (!out) throw std::runtime_error("write_csv: write failed for '" + path + "'");
}

std::vector<RunRecord> read_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("read_csv: cannot open '" + path + "'");

  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader)
    throw std::runtime_error("read_csv: '" + path + "' has an unexpected header");

  std::vector<RunRecord> records;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const std::vector<std::string> fields = split_fields(line);
    if (fields.size() != 10)
      throw std::runtime_error(path + ":" + std::to_string(line_no) +
                               ": expected 10 fields, got " +
                               std::to_string(fields.size()));
    RunRecord rec;
    const auto kind = parse_kind(fields[0]);
    if (!kind)
      throw std::runtime_error(path + ":" + std::to_string(line_no) +
                               ": unknown experiment '" + fields[0] + "'");
    rec.kind = *kind;
    const auto algo = parse_algorithm(fields[1]);
    if (!algo)
      throw std::runtime_error(path + ":" + std::to_string(line_no) +
                               ": unknown algorithm '" + fields[1] + "'");
    rec.algorithm = *algo;
    rec.grid_param = fields[2];
    rec.grid_value = parse_double(fields[3], path, line_no);
    rec.seed = std::strtoull(fields[4].c_str(), nullptr, 10);
    rec.snr_db = parse_double(fields[5], path, line_no);
    if (!fields[6].empty()) rec.mse = parse_double(fields[6], path, line_no);
    if (!fields[7].empty()) rec.ber = parse_double(fields[7], path, line_no);
    if (!fields[8].empty())
      rec.evaluations = std::strtoull(fields[8].c_str(), nullptr, 10);
    if (!fields[9].empty()) rec.wall_time_ms = parse_double(fields[9], path, line_no);
    records.push_back(std::move(rec));
  }
  return records;
}

}  // namespace alebench
