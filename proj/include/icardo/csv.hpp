#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "icardo/error.hpp"

namespace icardo {

/// Comma-delimited, header row, one record per line. No quoting: clinical
/// exports here never contain embedded commas.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

inline std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  for (char c : line) {
    if (c == ',') {
      out.push_back(field);
      field.clear();
    } else if (c != '\r') {
      field.push_back(c);
    }
  }
  out.push_back(field);
  return out;
}

inline CsvTable read_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open file: " + path);
  CsvTable t;
  std::string line;
  if (!std::getline(in, line)) throw InputError("empty file: " + path);
  t.header = split_csv_line(line);
  while (std::getline(in, line)) {
    if (line.empty() || line == "\r") continue;
    auto fields = split_csv_line(line);
    if (fields.size() != t.header.size()) {
      throw InputError("row " + std::to_string(t.rows.size() + 2) + " has " +
                       std::to_string(fields.size()) + " fields, expected " +
                       std::to_string(t.header.size()) + " (" + path + ")");
    }
    t.rows.push_back(std::move(fields));
  }
  return t;
}

}  // namespace icardo
