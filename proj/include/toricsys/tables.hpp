#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "toricsys/json_io.hpp"

namespace toricsys {

// A golden data file could not be found or read.
class MissingGolden : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct TableDiff {
  std::string expected;
  std::string actual;
};

// passed == diffs.empty(); rows echoes what was recomputed.
struct TableReport {
  std::string table_id;
  bool passed = false;
  std::vector<TableDiff> diffs;
  Json rows = Json::array();
};

const std::vector<std::string>& table_ids();
std::string default_data_dir();

// Recomputes one table from first principles and diffs it against the golden
// file in data_dir. Unknown ids raise DomainError.
TableReport verify_table(const std::string& table_id, const std::string& data_dir = default_data_dir());

Json to_json(const TableReport& r);

}  // namespace toricsys
