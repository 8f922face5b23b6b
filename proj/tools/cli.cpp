#include "cli.hpp"

#include <chrono>
#include <climits>
#include <iostream>
#include <map>
#include <optional>

#include "CLI11.hpp"
#include "dgclique/enumerate.hpp"
#include "dgclique/ingest.hpp"
#include "dgclique/metrics.hpp"
#include "dgclique/output.hpp"
#include "json.hpp"

namespace dgclique::cli {

namespace {

struct CommonFlags {
  std::string input;
  ColumnOrder columns = ColumnOrder::kUVT;
  Separator separator = Separator::kAuto;
  bool rebase = false;
  bool clamp = false;
  unsigned threads = 1;
};

void add_common(CLI::App* cmd, CommonFlags& f, bool needs_input) {
  static const std::map<std::string, ColumnOrder> kColumns{
      {"uvt", ColumnOrder::kUVT}, {"tuv", ColumnOrder::kTUV}};
  static const std::map<std::string, Separator> kSeparators{
      {"auto", Separator::kAuto},
      {"space", Separator::kSpace},
      {"comma", Separator::kComma},
      {"tab", Separator::kTab}};
  if (needs_input) {
    cmd->add_option("--input", f.input, "Link stream file (.gz accepted)")
        ->required();
    cmd->add_option("--columns", f.columns, "Column order: uvt or tuv")
        ->transform(CLI::CheckedTransformer(kColumns, CLI::ignore_case));
    cmd->add_option("--separator", f.separator,
                    "Field separator: auto, space, comma or tab")
        ->transform(CLI::CheckedTransformer(kSeparators, CLI::ignore_case));
    cmd->add_flag("--rebase", f.rebase, "Shift timestamps to start at 0");
  }
  cmd->add_flag("--clamp", f.clamp, "Restrict intervals to the lifetime");
  cmd->add_option("--threads", f.threads, "Worker threads (1 = reference)")
      ->check(CLI::Range(1u, 1024u));
}

ParseResult load(const CommonFlags& f) {
  IngestConfig cfg;
  cfg.column_order = f.columns;
  cfg.separator = f.separator;
  cfg.rebase = f.rebase;
  return parse_link_stream(std::filesystem::path(f.input), cfg);
}

void emit(const std::string& path, std::ostream& stdout_stream,
          const std::function<void(std::ostream&)>& write) {
  if (path.empty() || path == "-") {
    write(stdout_stream);
  } else {
    write_file_atomically(path, write);
  }
}

void print_links(std::ostream& out, const TemporalNetwork& network) {
  for (const auto& l : network.labelled_links()) {
    out << "  " << l.u << ' ' << l.v << ' ' << l.t << '\n';
  }
}

void print_cliques(std::ostream& out, const CliqueSet& cliques,
                   const TemporalNetwork& network) {
  if (cliques.empty()) out << "  (none)\n";
  for (const auto& c : cliques) {
    out << "  " << format_clique(c, network, CliqueFormat::kJsonl) << '\n';
  }
}

}  // namespace

int run(const std::vector<std::string>& args, const Context& ctx) {
  CLI::App app{"Maximal (delta, gamma)-clique enumeration for link streams",
               "dgclique"};
  app.require_subcommand(1);

  CommonFlags common;
  Timestamp delta = 0;
  int gamma = 1;
  std::string output;

  auto* enumerate = app.add_subcommand("enumerate", "List maximal cliques");
  add_common(enumerate, common, true);
  enumerate->add_option("--delta", delta, "Window length")
      ->required()
      ->check(CLI::NonNegativeNumber);
  enumerate->add_option("--gamma", gamma, "Links required per window")
      ->required()
      ->check(CLI::Range(1, INT_MAX));
  enumerate->add_option("--output", output, "Output file (default stdout)");
  CliqueFormat format = CliqueFormat::kJsonl;
  enumerate
      ->add_option("--format", format, "Output format: jsonl or csv")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, CliqueFormat>{{"jsonl", CliqueFormat::kJsonl},
                                              {"csv", CliqueFormat::kCsv}},
          CLI::ignore_case));
  std::size_t product_limit = kDefaultProductLimit;
  enumerate->add_option("--product-limit", product_limit,
                        "Interval tuples allowed per vertex set");

  auto* sweep = app.add_subcommand("sweep", "Metrics over a delta/gamma grid");
  add_common(sweep, common, true);
  std::vector<Timestamp> deltas;
  std::vector<int> gammas;
  bool parallel_cells = false;
  sweep->add_option("--deltas", deltas, "Comma-separated delta values")
      ->required()
      ->delimiter(',')
      ->check(CLI::NonNegativeNumber);
  sweep->add_option("--gammas", gammas, "Comma-separated gamma values")
      ->required()
      ->delimiter(',')
      ->check(CLI::Range(1, INT_MAX));
  sweep->add_option("--output", output, "CSV file (default stdout)");
  sweep->add_option("--product-limit", product_limit,
                    "Interval tuples allowed per vertex set");
  sweep->add_flag("--parallel-cells", parallel_cells,
                  "Run cells concurrently; timing columns are left empty");

  auto* verify = app.add_subcommand(
      "verify", "Compare against brute force on random networks");
  add_common(verify, common, false);
  oracle::VerifyConfig vc;
  vc.densities = {0.1, 0.3, 0.6};
  verify->add_option("--delta", vc.delta, "Window length")
      ->required()
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--gamma", vc.gamma, "Links required per window")
      ->required()
      ->check(CLI::Range(1, INT_MAX));
  verify->add_option("--max-vertices", vc.budget.max_vertices)
      ->check(CLI::Range(std::size_t{2}, std::size_t{20}));
  verify->add_option("--max-lifetime", vc.budget.max_lifetime)
      ->check(CLI::Range(Timestamp{0}, Timestamp{400}));
  verify->add_option("--trials", vc.trials);
  verify->add_option("--seed", vc.seed);
  verify->add_option("--density", vc.densities,
                     "Link probability per pair and time unit; trials cycle "
                     "through the list")
      ->delimiter(',')
      ->check(CLI::Range(0.0, 1.0));

  auto* stats = app.add_subcommand("stats", "Dataset statistics as JSON");
  add_common(stats, common, true);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend() - 1);
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, ctx.out, ctx.err);
    return code == 0 ? kOk : kUsageOrInputError;
  }

  try {
    if (*enumerate) {
      auto parsed = load(common);
      EnumerationOptions eo;
      eo.threads = common.threads;
      eo.clamp_to_lifetime = common.clamp;
      eo.product_limit = product_limit;
      const auto started = std::chrono::steady_clock::now();
      auto cliques = enumerate_cliques(parsed.network, delta, gamma, eo);
      const double wall = std::chrono::duration<double>(
                              std::chrono::steady_clock::now() - started)
                              .count();
      emit(output, ctx.out, [&](std::ostream& os) {
        write_cliques(os, cliques, parsed.network, format);
      });
      auto s = summarize(cliques);
      ctx.err << "cliques=" << s.count
              << " max_cardinality=" << s.max_cardinality
              << " max_duration=" << s.max_duration << " wall_time_s=" << wall
              << '\n';
      return kOk;
    }

    if (*sweep) {
      auto parsed = load(common);
      SweepOptions so;
      so.threads = common.threads;
      so.clamp_to_lifetime = common.clamp;
      so.product_limit = product_limit;
      so.parallel_cells = parallel_cells;
      auto records = run_sweep(parsed.network, deltas, gammas, so);
      emit(output, ctx.out,
           [&](std::ostream& os) { write_sweep_csv(os, records); });
      return kOk;
    }

    if (*stats) {
      auto parsed = load(common);
      auto s = compute_stats(parsed.network);
      nlohmann::ordered_json j;
      j["nodes"] = s.node_count;
      j["links"] = s.link_count;
      j["static_edges"] = s.static_edge_count;
      j["lifetime"] = s.lifetime_duration;
      j["raw_lines"] = parsed.data_lines;
      j["self_loops"] = parsed.self_loops;
      j["duplicates"] = parsed.duplicates;
      ctx.out << j.dump() << '\n';
      if (parsed.self_loops > 0) {
        ctx.err << "warning: dropped " << parsed.self_loops << " self-loop(s)\n";
      }
      return kOk;
    }

    if (*verify) {
      vc.clamp_to_lifetime = common.clamp;
      if (vc.trials == 0) {
        ctx.out << "no trials run\n";
        return kOk;
      }
      oracle::Enumerator enumerator = ctx.verify_enumerator;
      if (!enumerator) {
        enumerator = [&](const TemporalNetwork& n, Timestamp d, int g) {
          EnumerationOptions eo;
          eo.threads = common.threads;
          eo.clamp_to_lifetime = common.clamp;
          return enumerate_cliques(n, d, g, eo);
        };
      }
      auto report = oracle::verify_against_oracle(vc, enumerator);
      if (!report.first_failure) {
        ctx.out << "all " << report.trials_run
                << " trials agree with the oracle (delta=" << vc.delta
                << " gamma=" << vc.gamma << ")\n";
        return kOk;
      }
      const auto& f = *report.first_failure;
      ctx.out << report.mismatches << " of " << report.trials_run
              << " trials disagree (delta=" << vc.delta
              << " gamma=" << vc.gamma << ")\n"
              << "minimal failing instance (from trial " << f.trial
              << "), links u v t:\n";
      print_links(ctx.out, f.network);
      ctx.out << "oracle:\n";
      print_cliques(ctx.out, f.expected, f.network);
      ctx.out << "enumerator:\n";
      print_cliques(ctx.out, f.actual, f.network);
      return kVerifyMismatch;
    }
  } catch (const CartesianLimitExceeded& e) {
    ctx.err << "error: " << e.what() << '\n';
    return kGuardTripped;
  } catch (const std::exception& e) {
    ctx.err << "error: " << e.what() << '\n';
    return kUsageOrInputError;
  }
  return kUsageOrInputError;
}

}  // namespace dgclique::cli
