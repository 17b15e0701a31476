#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "surfsym/numtheory.hpp"

namespace surfsym::cli {

enum class ExitCode : int { Ok = 0, VerificationFailed = 1, InvalidInput = 2 };

/// One output row, shared by every subcommand and format.
struct OutputRecord {
  std::optional<Int> genus;
  std::string quantity;
  std::optional<Int> value;  // null: no action of this type exists
  std::vector<std::string> witnesses;
  std::string source;        // "formula", "oracle" or "construction"
  std::optional<bool> pass;  // set by verify, oracle and consistency
  std::string detail;

  friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

/// One JSON object per line.
std::string to_json_line(const OutputRecord& r);
OutputRecord from_json_line(const std::string& line);

/// RFC 4180 rows; witnesses joined by ';'.
std::string csv_header();
std::string to_csv_row(const OutputRecord& r);
/// Parses a whole CSV document (header included) back into records.
std::vector<OutputRecord> parse_csv(const std::string& text);

/// Runs the command line (args excludes the program name) and returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace surfsym::cli
