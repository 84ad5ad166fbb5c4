#pragma once

#include <json.hpp>

#include <ostream>
#include <string>
#include <vector>

#include "gtheta/octonion.hpp"

namespace gtheta::cli {

enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailed = 1,
  kUsageError = 2,
  kCertificationFailed = 3,
};

// One dimension row as emitted by `gtheta verlinde`.
struct OutputRecord {
  std::string algebra;
  long level = 0;
  long genus = 0;
  std::string dimension;  // decimal digits
  std::string method;     // "verlinde" or "closed_form"
  double residual = 0;
  long precision_bits = 0;

  friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

nlohmann::json to_json(const OutputRecord& r);
// Throws UsageError on schema violations.
OutputRecord record_from_json(const nlohmann::json& j);

const std::string& csv_header();
std::string to_csv_row(const OutputRecord& r);

// Parses "lo..hi".
std::pair<long, long> parse_genus_range(const std::string& text);

// Entry point shared by the executable and the tests. `args` excludes the
// program name. `tables` lets tests inject a modified multiplication table.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const octonion::TableSource& tables = octonion::reference_tables());

}  // namespace gtheta::cli
