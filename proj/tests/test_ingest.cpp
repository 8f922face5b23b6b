#include <gtest/gtest.h>
#include <zlib.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "dgclique/ingest.hpp"
#include "test_util.hpp"

namespace dgclique {
namespace {

ParseResult parse(const std::string& text, IngestConfig cfg = {}) {
  std::istringstream in(text);
  return parse_link_stream(in, cfg);
}

TEST(ParseLinkStream, MirroredLinkIsDeduplicated) {
  auto r = parse("1 2 5\n2 1 5\n1 2 7\n");
  EdgeOccurrenceIndex idx(r.network);
  ASSERT_EQ(idx.size(), 1u);
  EXPECT_EQ(idx.entries()[0].times, (std::vector<Timestamp>{5, 7}));
  EXPECT_EQ(r.network.links().size(), 2u);
  EXPECT_EQ(r.duplicates, 1u);
  EXPECT_EQ(r.data_lines, 3u);
}

TEST(ParseLinkStream, TimeFirstColumnOrder) {
  IngestConfig cfg;
  cfg.column_order = ColumnOrder::kTUV;
  auto r = parse("5 1 2\n", cfg);
  ASSERT_EQ(r.network.links().size(), 1u);
  const auto& l = r.network.links()[0];
  EXPECT_EQ(r.network.label(l.u), "1");
  EXPECT_EQ(r.network.label(l.v), "2");
  EXPECT_EQ(l.t, 5);
}

TEST(ParseLinkStream, SelfLoopIsDroppedAndCounted) {
  const std::string fixture =
      "1 2 1\n"
      "1 3 2\n"
      "2 3 2\n"
      "3 3 4\n"
      "2 4 5\n"
      "1 4 6\n"
      "3 4 6\n"
      "1 2 8\n"
      "2 3 9\n"
      "1 3 10\n";
  auto r = parse(fixture);
  EXPECT_EQ(r.data_lines, 10u);
  EXPECT_EQ(r.network.links().size(), 9u);
  EXPECT_EQ(r.self_loops, 1u);
}

TEST(ParseLinkStream, CommentsBlankLinesAndExtraColumns) {
  auto r = parse(
      "# SNAP style\n"
      "% KONECT style\n"
      "\n"
      "1 2 5 -3 extra\n"
      "  2 3 6\r\n");
  EXPECT_EQ(r.network.links().size(), 2u);
  EXPECT_EQ(r.data_lines, 2u);
}

TEST(ParseLinkStream, SeparatorDetection) {
  auto comma = parse("1, 2, 5\n3,4,6\n");
  EXPECT_EQ(comma.network.links().size(), 2u);
  auto tab = parse("1\t2\t5\n3\t4\t6\n");
  EXPECT_EQ(tab.network.links().size(), 2u);

  // Tabs win over commas when both occur on the first line.
  auto mixed = parse("a,b\tc,d\t5\n");
  ASSERT_EQ(mixed.network.labels(),
            (std::vector<std::string>{"a,b", "c,d"}));
}

TEST(ParseLinkStream, ExplicitSeparator) {
  IngestConfig cfg;
  cfg.separator = Separator::kComma;
  EXPECT_THROW(parse("1 2 5\n", cfg), ParseError);
  cfg.separator = Separator::kSpace;
  EXPECT_EQ(parse("1   2\t5\n", cfg).network.links().size(), 1u);
}

TEST(ParseLinkStream, MalformedLineCarriesLineNumber) {
  try {
    parse("1 2 5\n# note\n1 2\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
  }
}

TEST(ParseLinkStream, NonIntegerTimestamp) {
  try {
    parse("1 2 5\n1 2 5.5\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
  EXPECT_THROW(parse("1 2 abc\n"), ParseError);
}

TEST(ParseLinkStream, EmptyInputIsAnError) {
  EXPECT_THROW(parse(""), ParseError);
  EXPECT_THROW(parse("# only a comment\n\n"), ParseError);
  EXPECT_THROW(parse("4 4 1\n"), ParseError);
}

TEST(ParseLinkStream, RebaseShiftsToZero) {
  IngestConfig cfg;
  cfg.rebase = true;
  auto r = parse("1 2 1000\n2 3 1010\n", cfg);
  EXPECT_EQ(r.network.lifetime(), (TimeInterval{0, 10}));
}

TEST(ParseLinkStream, NegativeTimestampsAreKept) {
  auto r = parse("1 2 -4\n");
  EXPECT_EQ(r.network.links()[0].t, -4);
}

TEST(ParseLinkStream, MissingFile) {
  EXPECT_THROW(parse_link_stream(std::filesystem::path("/nonexistent/x.txt"),
                                 IngestConfig{}),
               ParseError);
}

TEST(ParseLinkStream, ReadsGzipFiles) {
  auto path = std::filesystem::temp_directory_path() / "dgclique_ingest.gz";
  gzFile gz = gzopen(path.c_str(), "wb");
  ASSERT_NE(gz, nullptr);
  const std::string body = "1 2 5\n2 3 6\n";
  gzwrite(gz, body.data(), static_cast<unsigned>(body.size()));
  gzclose(gz);
  auto r = parse_link_stream(path, IngestConfig{});
  EXPECT_EQ(r.network.links().size(), 2u);
  std::filesystem::remove(path);
}

TEST(ParseLinkStream, WriteThenParseRoundTrips) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> vertex(1, 12);
  std::uniform_int_distribution<Timestamp> time(-5, 60);
  for (int trial = 0; trial < 50; ++trial) {
    std::ostringstream text;
    for (int i = 0; i < 40; ++i) {
      text << vertex(rng) << ' ' << vertex(rng) << ' ' << time(rng) << '\n';
    }
    ParseResult original;
    try {
      original = parse(text.str());
    } catch (const ParseError&) {
      continue;  // all self-loops
    }
    std::ostringstream written;
    write_link_stream(original.network, written);
    auto again = parse(written.str());
    ASSERT_EQ(again.network, original.network);
  }
}

TEST(ComputeStats, SingleLink) {
  auto r = parse("1 2 5\n");
  auto s = compute_stats(r.network);
  EXPECT_EQ(s, (DatasetStats{2, 1, 1, 0}));
}

TEST(ComputeStats, CountsAndInvariants) {
  auto r = parse("1 2 5\n2 1 5\n1 2 7\n2 3 9\n");
  auto s = compute_stats(r.network);
  EXPECT_EQ(s.node_count, 3u);
  EXPECT_EQ(s.link_count, 3u);
  EXPECT_EQ(s.static_edge_count, 2u);
  EXPECT_EQ(s.lifetime_duration, 4);
  EXPECT_LE(s.static_edge_count, s.link_count);
}

TEST(ComputeStats, InvariantUnderLinePermutation) {
  std::mt19937_64 rng(11);
  std::vector<std::string> lines;
  std::uniform_int_distribution<int> vertex(1, 8);
  std::uniform_int_distribution<Timestamp> time(0, 30);
  for (int i = 0; i < 60; ++i) {
    lines.push_back(std::to_string(vertex(rng)) + " " +
                    std::to_string(vertex(rng)) + " " +
                    std::to_string(time(rng)));
  }
  auto join = [&] {
    std::string s;
    for (const auto& l : lines) s += l + "\n";
    return s;
  };
  auto base = parse(join());
  auto stats = compute_stats(base.network);
  for (int k = 0; k < 10; ++k) {
    std::shuffle(lines.begin(), lines.end(), rng);
    auto shuffled = parse(join());
    ASSERT_EQ(compute_stats(shuffled.network), stats);
    ASSERT_EQ(shuffled.network, base.network);
  }
}

}  // namespace
}  // namespace dgclique
