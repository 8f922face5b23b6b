#include "dgclique/ingest.hpp"

#include <zlib.h>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <memory>
#include <ostream>
#include <sstream>
#include <string_view>
#include <vector>

namespace dgclique {

namespace {

bool is_blank(char c) { return c == ' ' || c == '\t' || c == '\r'; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_blank(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_blank(s.back())) s.remove_suffix(1);
  return s;
}

Separator detect_separator(std::string_view line) {
  if (line.find('\t') != std::string_view::npos) return Separator::kTab;
  if (line.find(',') != std::string_view::npos) return Separator::kComma;
  return Separator::kSpace;
}

std::vector<std::string_view> split(std::string_view line, Separator sep) {
  std::vector<std::string_view> fields;
  if (sep == Separator::kSpace) {
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && is_blank(line[i])) ++i;
      std::size_t j = i;
      while (j < line.size() && !is_blank(line[j])) ++j;
      if (j > i) fields.push_back(line.substr(i, j - i));
      i = j;
    }
    return fields;
  }
  const char delim = sep == Separator::kTab ? '\t' : ',';
  std::size_t start = 0;
  while (true) {
    auto pos = line.find(delim, start);
    fields.push_back(trim(line.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return fields;
}

Timestamp parse_timestamp(std::string_view field, std::size_t line_no) {
  Timestamp value = 0;
  const char* first = field.data();
  const char* last = field.data() + field.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last) {
    throw ParseError(line_no,
                     "timestamp is not an integer: '" + std::string(field) +
                         "'");
  }
  return value;
}

class GzipStreamBuf : public std::streambuf {
 public:
  explicit GzipStreamBuf(const std::filesystem::path& path)
      : file_(gzopen(path.c_str(), "rb")) {
    if (file_ == nullptr) {
      throw ParseError(0, "cannot open " + path.string());
    }
    gzbuffer(file_, 1 << 17);
  }
  ~GzipStreamBuf() override {
    if (file_ != nullptr) gzclose(file_);
  }
  GzipStreamBuf(const GzipStreamBuf&) = delete;
  GzipStreamBuf& operator=(const GzipStreamBuf&) = delete;

 protected:
  int_type underflow() override {
    if (gptr() < egptr()) return traits_type::to_int_type(*gptr());
    int n = gzread(file_, buffer_, sizeof(buffer_));
    if (n < 0) throw ParseError(0, "gzip decompression failed");
    if (n == 0) return traits_type::eof();
    setg(buffer_, buffer_, buffer_ + n);
    return traits_type::to_int_type(*gptr());
  }

 private:
  gzFile file_;
  char buffer_[1 << 16];
};

}  // namespace

ParseResult parse_link_stream(std::istream& in, const IngestConfig& cfg) {
  std::vector<TemporalNetwork::LabelledLink> raw;
  Separator sep = cfg.separator;
  ParseResult result;

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = trim(line);
    if (view.empty() || view.front() == '#' || view.front() == '%') continue;
    if (sep == Separator::kAuto) sep = detect_separator(view);

    auto fields = split(view, sep);
    if (fields.size() < 3) {
      throw ParseError(line_no, "expected at least 3 fields, found " +
                                    std::to_string(fields.size()));
    }
    std::string_view u, v, t;
    if (cfg.column_order == ColumnOrder::kUVT) {
      u = fields[0], v = fields[1], t = fields[2];
    } else {
      t = fields[0], u = fields[1], v = fields[2];
    }
    if (u.empty() || v.empty()) throw ParseError(line_no, "empty vertex id");
    raw.push_back({std::string(u), std::string(v), parse_timestamp(t, line_no)});
    ++result.data_lines;
  }
  if (in.bad()) throw ParseError(0, "read error");
  if (raw.empty()) throw ParseError(0, "input contains no links");

  if (cfg.rebase) {
    Timestamp lo = std::min_element(raw.begin(), raw.end(),
                                    [](const auto& a, const auto& b) {
                                      return a.t < b.t;
                                    })
                       ->t;
    for (auto& l : raw) l.t -= lo;
  }

  result.network = TemporalNetwork::from_labelled(raw);
  result.self_loops = result.network.dropped_self_loops();
  result.duplicates = result.network.dropped_duplicates();
  if (result.network.empty()) {
    throw ParseError(0, "input contains only self-loops");
  }
  return result;
}

ParseResult parse_link_stream(const std::filesystem::path& path,
                              const IngestConfig& cfg) {
  if (!std::filesystem::exists(path)) {
    throw ParseError(0, "no such file: " + path.string());
  }
  if (path.extension() == ".gz") {
    GzipStreamBuf buf(path);
    std::istream in(&buf);
    return parse_link_stream(in, cfg);
  }
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path.string());
  return parse_link_stream(in, cfg);
}

void write_link_stream(const TemporalNetwork& network, std::ostream& out) {
  for (const auto& l : network.links()) {
    out << network.label(l.u) << ' ' << network.label(l.v) << ' ' << l.t
        << '\n';
  }
}

DatasetStats compute_stats(const TemporalNetwork& network) {
  DatasetStats stats;
  stats.node_count = network.vertex_count();
  stats.link_count = network.links().size();
  stats.static_edge_count = EdgeOccurrenceIndex(network).size();
  if (auto life = network.lifetime()) {
    stats.lifetime_duration = life->duration();
  }
  return stats;
}

}  // namespace dgclique
