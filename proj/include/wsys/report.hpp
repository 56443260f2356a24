#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "wsys/types.hpp"

namespace wsys {

/// One check on one input.
struct Record {
  std::string check;
  std::string input;
  std::string mode;
  bool window = false;
  std::size_t vertices = 0;
  std::size_t trusted_vertices = 0;
  Verdict verdict;
  /// Extra facts in insertion order (counts, |h|, chain ranges, ...).
  std::vector<std::pair<std::string, std::string>> details;
  double wall_ms = 0.0;

  Record& detail(std::string key, std::string value);
  Record& detail(std::string key, long long value);
};

std::string_view witness_kind(const Witness& w);

struct Report {
  std::vector<Record> records;

  /// Stable, human-diffable text. Timing lines are omitted when !timing.
  void write_text(std::ostream& out, bool timing = true) const;
  /// One JSON document; `wall_ms` fields are omitted when !timing.
  void write_structured(std::ostream& out, bool timing = true) const;
};

}  // namespace wsys
