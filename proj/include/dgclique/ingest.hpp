#ifndef DGCLIQUE_INGEST_HPP
#define DGCLIQUE_INGEST_HPP

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "dgclique/core.hpp"

namespace dgclique {

enum class ColumnOrder { kUVT, kTUV };
enum class Separator { kAuto, kSpace, kComma, kTab };

struct IngestConfig {
  ColumnOrder column_order = ColumnOrder::kUVT;
  Separator separator = Separator::kAuto;
  // Subtract the smallest timestamp from every link.
  bool rebase = false;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line == 0 ? what
                                     : "line " + std::to_string(line) + ": " +
                                           what),
        line_(line) {}

  // 1-based; 0 when the error is not tied to a line.
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct ParseResult {
  TemporalNetwork network;
  std::size_t data_lines = 0;  // non-comment, non-blank lines
  std::size_t self_loops = 0;
  std::size_t duplicates = 0;
};

// Reads a link stream. Lines starting with '#' or '%' and blank lines are
// skipped; fields past the third are ignored.
ParseResult parse_link_stream(std::istream& in, const IngestConfig& cfg);

// Same, from a file. Files ending in ".gz" are decompressed.
ParseResult parse_link_stream(const std::filesystem::path& path,
                              const IngestConfig& cfg);

// Writes "u v t" lines using the vertex labels.
void write_link_stream(const TemporalNetwork& network, std::ostream& out);

struct DatasetStats {
  std::size_t node_count = 0;
  std::size_t link_count = 0;
  std::size_t static_edge_count = 0;
  Timestamp lifetime_duration = 0;

  friend bool operator==(const DatasetStats&, const DatasetStats&) = default;
};

DatasetStats compute_stats(const TemporalNetwork& network);

}  // namespace dgclique

#endif  // DGCLIQUE_INGEST_HPP
