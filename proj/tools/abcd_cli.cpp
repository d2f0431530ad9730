// command line front end: stats, run, oracle, verify, bench

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "abcd/ingest.hpp"
#include "abcd/phase2.hpp"
#include "abcd/report.hpp"
#include "abcd/verify.hpp"

namespace {

using namespace abcd;
using clock_t_ = std::chrono::steady_clock;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitVerify = 3;

double seconds_since(clock_t_::time_point t0) {
  return std::chrono::duration<double>(clock_t_::now() - t0).count();
}

RawEdgeList load_any(const std::string& path, const std::string& format) {
  if (format == "amazon") return load_amazon_ratings(path);
  return load_konect(path);  // konect and canonical share the reader
}

uint64_t resolve_seed(const CLI::Option* seed_opt, uint64_t seed_flag) {
  if (seed_opt->count() > 0) return seed_flag;
  if (const char* env = std::getenv("ABCD_SEED")) {
    return std::strtoull(env, nullptr, 10);
  }
  return 1;
}

std::string dataset_name(const std::string& path) {
  size_t slash = path.find_last_of("/\\");
  std::string base = slash == std::string::npos ? path : path.substr(slash + 1);
  size_t dot = base.find_last_of('.');
  if (dot != std::string::npos && dot > 0) base = base.substr(0, dot);
  for (char& c : base) {
    if (c == ' ' || c == '\t') c = '_';
  }
  return base.empty() ? "unnamed" : base;
}

void print_stats_human(std::ostream& out, const char* tag, const GraphStats& s) {
  out << "  " << tag << ": " << s.vertices << " vertices, " << s.edges << " edges, "
      << s.cycle_space_dimension << " cycles, density " << s.density << ", neg "
      << 100.0 * s.negative_fraction << "%, degree avg/median/max " << s.degree_avg << "/"
      << s.degree_median << "/" << s.degree_max << "\n";
}

void write_stats_record(std::ostream& out, const std::string& name, const std::string& format,
                        const GraphStats& raw, const GraphStats& lcc, int64_t rejected) {
  auto line = [&](const char* tag, const GraphStats& s) {
    out << tag << " vertices " << s.vertices << " edges " << s.edges << " cycles "
        << s.cycle_space_dimension << " density " << s.density << " neg_fraction "
        << s.negative_fraction << " deg_avg " << s.degree_avg << " deg_median " << s.degree_median
        << " deg_max " << s.degree_max << "\n";
  };
  out << "abcd-stats v1\n";
  out << "dataset " << name << "\n";
  out << "format " << format << "\n";
  line("raw", raw);
  line("lcc", lcc);
  out << "rejected_records " << rejected << "\n";
  out << "end abcd-stats\n";
}

int cmd_stats(const std::string& path, const std::string& format) {
  RawEdgeList raw = load_any(path, format);
  SignedGraph g = canonicalize(raw);
  GraphStats raw_stats = stats(g);
  auto [lcc, mapping] = largest_connected_component(g);
  (void)mapping;
  GraphStats lcc_stats = stats(lcc);

  std::string name = dataset_name(path);
  std::cout << name << " (" << format << ")\n";
  print_stats_human(std::cout, "raw", raw_stats);
  print_stats_human(std::cout, "lcc", lcc_stats);
  if (raw.rejected_records > 0) {
    std::cout << "  rejected records: " << raw.rejected_records << "\n";
  }
  std::cout << "\n";
  write_stats_record(std::cout, name, format, raw_stats, lcc_stats, raw.rejected_records);
  return kExitOk;
}

struct RunConfig {
  std::string path;
  std::string format = "konect";
  std::string criterion = "harary";
  std::string profile = "paper";
  std::string top_k = "auto";
  int64_t iterations = -1;  // -1 = profile default
  uint64_t seed = 1;
  std::string out;
  bool timings = false;
};

RunReport execute_run(const RunConfig& cfg) {
  const auto t_ingest = clock_t_::now();
  RawEdgeList raw = load_any(cfg.path, cfg.format);
  SignedGraph g = canonicalize(raw);
  const double ingest_s = seconds_since(t_ingest);

  RunReport rep;
  rep.dataset = dataset_name(cfg.path);
  rep.format = cfg.format;
  rep.criterion = cfg.criterion;
  rep.seed = cfg.seed;
  rep.raw = stats(g);

  auto [lcc, mapping] = largest_connected_component(g);
  (void)mapping;
  rep.lcc = stats(lcc);

  AbcdParams params;
  params.iterations = cfg.iterations > 0 ? cfg.iterations : (cfg.profile == "fast" ? 1000 : 5000);
  if (cfg.top_k == "auto") {
    params.top_k = cfg.profile == "fast" ? fast_top_k(lcc.n) : auto_top_k(lcc.n);
  } else {
    params.top_k = std::stoll(cfg.top_k);
    if (params.top_k < 1) throw std::invalid_argument("--top-k must be >= 1 or 'auto'");
  }
  params.criterion = criterion_from_string(cfg.criterion);
  params.seed = cfg.seed;

  AbcdResult res = run_abcd(g, params);

  rep.iterations = res.iterations;
  rep.top_k = res.top_k;
  rep.states_retained = res.states_retained;
  rep.frustration_min = res.frustration_min;
  rep.frustration_max = res.frustration_max;
  rep.winner_state = res.winner_state_index;
  rep.winner_size = res.winner.n;
  rep.per_state_sizes.assign(res.per_state_sizes.begin(), res.per_state_sizes.end());
  rep.winner_vertices = res.winner.labels;

  const auto t_verify = clock_t_::now();
  if (res.winner.n > 0) {
    ResultCheck check = verify_result(g, res.winner.labels);
    if (!check.balance.balanced || !check.connected) {
      std::ostringstream msg;
      msg << "verification failed:";
      if (!check.balance.balanced) {
        const Edge& e = g.edges[(size_t)check.balance.violating_edge];
        msg << " violating edge (" << g.labels[(size_t)e.u] << ", " << g.labels[(size_t)e.v]
            << ", " << (int)e.sign << ")";
      }
      if (!check.connected) msg << " winner is disconnected";
      throw std::runtime_error(msg.str());
    }
  }
  rep.has_timings = cfg.timings;
  rep.time_ingest_s = ingest_s;
  rep.time_phase1_s = res.phase1_seconds;
  rep.time_phase2_s = res.phase2_seconds;
  rep.time_verify_s = seconds_since(t_verify);
  rep.time_total_s = ingest_s + res.total_seconds + rep.time_verify_s;
  return rep;
}

int cmd_run(const RunConfig& cfg) {
  RunReport rep;
  try {
    rep = execute_run(cfg);
  } catch (const std::runtime_error& e) {
    if (std::string(e.what()).rfind("verification failed", 0) == 0) {
      std::cerr << "error: " << e.what() << "\n";
      return kExitVerify;
    }
    throw;
  }
  if (!cfg.out.empty()) {
    std::ofstream out(cfg.out);
    if (!out) throw std::runtime_error("cannot write file: " + cfg.out);
    write_report(out, rep);
  }
  std::cout << rep.dataset << ": winner " << rep.winner_size << " of " << rep.lcc.vertices
            << " lcc vertices (criterion " << rep.criterion << ", I=" << rep.iterations
            << ", K=" << rep.top_k << ", seed " << rep.seed << ")\n";
  std::cout << "  states retained " << rep.states_retained << ", frustration ["
            << rep.frustration_min << ", " << rep.frustration_max << "], winner state "
            << rep.winner_state << "\n";
  std::cout << "  time: ingest " << rep.time_ingest_s << "s, phase1 " << rep.time_phase1_s
            << "s, phase2 " << rep.time_phase2_s << "s, verify " << rep.time_verify_s << "s\n";
  if (cfg.out.empty()) {
    write_report(std::cout, rep);
  }
  return kExitOk;
}

struct GenerateConfig {
  int64_t n_core = 100;
  int64_t n_noise = 0;
  double p_core = 0.1;
  double p_noise = 0.01;
  double neg_noise = 0.5;
  uint64_t seed = 1;
  std::string out;
};

int cmd_generate(const GenerateConfig& cfg) {
  RawEdgeList raw = generate_planted(cfg.n_core, cfg.n_noise, cfg.p_core, cfg.p_noise,
                                     cfg.neg_noise, cfg.seed);
  SignedGraph g = canonicalize(raw);
  if (cfg.out.empty()) {
    write_canonical(g, std::cout);
  } else {
    write_canonical(g, cfg.out);
    std::cout << "wrote " << g.n << " vertices, " << g.edge_count() << " edges to " << cfg.out
              << "\n";
  }
  return kExitOk;
}

int cmd_oracle(const std::string& path, const std::string& format, bool connected) {
  RawEdgeList raw = load_any(path, format);
  SignedGraph g = canonicalize(raw);
  OracleResult res = oracle_max_balanced(g, connected);
  std::cout << "oracle_max_balanced " << res.size << "\n";
  std::cout << "vertices";
  for (int32_t v : res.vertices) {
    std::cout << " " << (g.labels.empty() ? std::to_string(v) : g.labels[(size_t)v]);
  }
  std::cout << "\n";
  return kExitOk;
}

int cmd_verify(const std::string& graph_path, const std::string& format,
               const std::string& report_path) {
  RawEdgeList raw = load_any(graph_path, format);
  SignedGraph g = canonicalize(raw);
  std::ifstream in(report_path);
  if (!in) throw std::runtime_error("cannot open report: " + report_path);
  RunReport rep = parse_report(in);

  if ((int64_t)rep.winner_vertices.size() != rep.winner_size) {
    std::cerr << "FAIL: winner_size " << rep.winner_size << " does not match vertex list length "
              << rep.winner_vertices.size() << "\n";
    return kExitVerify;
  }
  ResultCheck check;
  try {
    check = verify_result(g, rep.winner_vertices);
  } catch (const std::invalid_argument& e) {
    std::cerr << "FAIL: " << e.what() << "\n";
    return kExitVerify;
  }
  if (!check.balance.balanced) {
    const Edge& e = g.edges[(size_t)check.balance.violating_edge];
    std::cerr << "FAIL: violating edge (" << g.labels[(size_t)e.u] << ", "
              << g.labels[(size_t)e.v] << ", " << (int)e.sign << ")\n";
    return kExitVerify;
  }
  if (!check.connected) {
    std::cerr << "FAIL: winner is disconnected\n";
    return kExitVerify;
  }
  std::cout << "PASS: winner of " << rep.winner_size << " vertices is balanced and connected\n";
  return kExitOk;
}

struct BenchCell {
  std::string dataset;
  std::string path;
  std::string format;
  std::string criterion;
  int64_t iterations = 0;
  int64_t top_k = -1;  // -1 = auto
  int repeat = 0;
};

struct BenchRow {
  BenchCell cell;
  bool skipped = false;
  std::string skip_reason;
  RunReport report;
};

int cmd_bench(const std::string& manifest_path, const std::string& out_path,
              const std::string& profile, bool parallel) {
  std::ifstream in(manifest_path);
  if (!in) throw std::runtime_error("cannot open manifest: " + manifest_path);
  nlohmann::json m = nlohmann::json::parse(in);

  const uint64_t seed = m.value("seed", (uint64_t)1);
  const int repeats = m.value("repeats", 1);
  std::vector<std::string> criteria = m.value("criteria", std::vector<std::string>{"harary"});
  std::vector<int64_t> iterations = m.value("iterations", std::vector<int64_t>{1000});
  std::vector<nlohmann::json> top_ks =
      m.value("top_k", std::vector<nlohmann::json>{nlohmann::json("auto")});

  std::vector<BenchCell> cells;
  for (const auto& d : m.value("datasets", std::vector<nlohmann::json>{})) {
    for (const auto& crit : criteria) {
      for (int64_t it : iterations) {
        for (const auto& k : top_ks) {
          for (int r = 0; r < repeats; ++r) {
            BenchCell c;
            c.dataset = d.value("name", std::string("unnamed"));
            c.path = d.value("path", std::string());
            c.format = d.value("format", std::string("konect"));
            c.criterion = crit;
            c.iterations = it;
            c.top_k = k.is_string() ? -1 : (int64_t)k;
            c.repeat = r;
            cells.push_back(c);
          }
        }
      }
    }
  }

  std::vector<BenchRow> rows(cells.size());
  auto run_cell = [&](size_t i) {
    BenchRow& row = rows[i];
    row.cell = cells[i];
    RunConfig cfg;
    cfg.path = cells[i].path;
    cfg.format = cells[i].format;
    cfg.criterion = cells[i].criterion;
    cfg.profile = profile;
    cfg.iterations = cells[i].iterations;
    cfg.top_k = cells[i].top_k < 0 ? "auto" : std::to_string(cells[i].top_k);
    cfg.seed = seed + (uint64_t)cells[i].repeat;
    cfg.timings = !parallel;
    try {
      row.report = execute_run(cfg);
      row.report.dataset = cells[i].dataset;
    } catch (const std::exception& e) {
      row.skipped = true;
      row.skip_reason = e.what();
    }
  };

  if (parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (int64_t i = 0; i < (int64_t)cells.size(); ++i) run_cell((size_t)i);
  } else {
    for (size_t i = 0; i < cells.size(); ++i) run_cell(i);
  }

  std::cout << "dataset criterion I K rep winner lcc_vertices phase1_s phase2_s total_s\n";
  for (const BenchRow& row : rows) {
    if (row.skipped) {
      std::cout << row.cell.dataset << " " << row.cell.criterion << " " << row.cell.iterations
                << " " << (row.cell.top_k < 0 ? std::string("auto") : std::to_string(row.cell.top_k))
                << " " << row.cell.repeat << " skipped (" << row.skip_reason << ")\n";
      continue;
    }
    std::cout << row.cell.dataset << " " << row.cell.criterion << " " << row.report.iterations
              << " " << row.report.top_k << " " << row.cell.repeat << " "
              << row.report.winner_size << " " << row.report.lcc.vertices << " ";
    if (row.report.has_timings) {
      std::cout << row.report.time_phase1_s << " " << row.report.time_phase2_s << " "
                << row.report.time_total_s << "\n";
    } else {
      std::cout << "- - -\n";
    }
  }

  // winner size should never drop when only K grows
  std::map<std::string, std::vector<std::pair<int64_t, int64_t>>> groups;
  for (const BenchRow& row : rows) {
    if (row.skipped) continue;
    std::string key = row.cell.dataset + " " + row.cell.criterion + " I=" +
                      std::to_string(row.report.iterations) + " rep=" +
                      std::to_string(row.cell.repeat);
    groups[key].push_back({row.report.top_k, row.report.winner_size});
  }
  for (auto& [key, pts] : groups) {
    if (pts.size() < 2) continue;
    std::sort(pts.begin(), pts.end());
    bool ok = true;
    for (size_t i = 1; i < pts.size(); ++i) {
      if (pts[i].second < pts[i - 1].second) ok = false;
    }
    std::cout << "monotone-in-K " << key << " : " << (ok ? "OK" : "VIOLATION") << "\n";
  }

  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write file: " + out_path);
    for (const BenchRow& row : rows) {
      if (!row.skipped) write_report(out, row.report);
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"largest balanced sub-graph discovery in signed networks"};
  app.require_subcommand(1);

  int threads = 0;
  app.add_option("--threads", threads, "OpenMP worker count (0 = library default)");

  const std::vector<std::string> formats{"konect", "amazon", "canonical"};

  auto* stats_cmd = app.add_subcommand("stats", "dataset statistics (raw graph and LCC)");
  std::string stats_path, stats_format = "konect";
  stats_cmd->add_option("path", stats_path, "input file")->required();
  stats_cmd->add_option("--format", stats_format, "input format")
      ->check(CLI::IsMember(formats));

  auto* run_cmd_ = app.add_subcommand("run", "full discovery pipeline");
  RunConfig run_cfg;
  auto* run_seed_opt = run_cmd_->add_option("--seed", run_cfg.seed, "rng seed (or env ABCD_SEED)");
  run_cmd_->add_option("path", run_cfg.path, "input file")->required();
  run_cmd_->add_option("--format", run_cfg.format, "input format")->check(CLI::IsMember(formats));
  run_cmd_->add_option("--criterion", run_cfg.criterion, "purge criterion")
      ->check(CLI::IsMember({"degree", "harary", "status"}));
  run_cmd_->add_option("--iterations", run_cfg.iterations, "spanning tree samples")
      ->check(CLI::PositiveNumber);
  const CLI::Validator auto_or_positive(
      [](std::string& s) -> std::string {
        if (s == "auto") return {};
        try {
          if (std::stoll(s) >= 1) return {};
        } catch (...) {
        }
        return "must be 'auto' or a positive integer";
      },
      "auto|N", "TOPK");
  run_cmd_->add_option("--top-k", run_cfg.top_k, "states to keep ('auto' follows the profile)")
      ->check(auto_or_positive);
  run_cmd_->add_option("--profile", run_cfg.profile, "parameter profile")
      ->check(CLI::IsMember({"paper", "fast"}));
  run_cmd_->add_option("--out", run_cfg.out, "write the machine-readable report here");
  run_cmd_->add_flag("--timings", run_cfg.timings, "include wall-clock timings in the report");

  auto* gen_cmd = app.add_subcommand("generate", "planted balanced-core graph in canonical form");
  GenerateConfig gen_cfg;
  gen_cmd->add_option("--n-core", gen_cfg.n_core, "balanced core vertices");
  gen_cmd->add_option("--n-noise", gen_cfg.n_noise, "noise vertices");
  gen_cmd->add_option("--p-core", gen_cfg.p_core, "core pair density");
  gen_cmd->add_option("--p-noise", gen_cfg.p_noise, "noise pair density");
  gen_cmd->add_option("--neg-noise", gen_cfg.neg_noise, "negative fraction of noise edges");
  gen_cmd->add_option("--seed", gen_cfg.seed, "rng seed");
  gen_cmd->add_option("--out", gen_cfg.out, "output path (stdout when omitted)");

  auto* oracle_cmd = app.add_subcommand("oracle", "exhaustive optimum for tiny graphs (<= 16)");
  std::string oracle_path, oracle_format = "konect";
  bool oracle_connected = false;
  oracle_cmd->add_option("path", oracle_path, "input file")->required();
  oracle_cmd->add_option("--format", oracle_format, "input format")
      ->check(CLI::IsMember(formats));
  oracle_cmd->add_flag("--connected", oracle_connected, "require a connected sub-graph");

  auto* verify_cmd = app.add_subcommand("verify", "re-check a run report against its graph");
  std::string verify_graph, verify_format = "konect", verify_report;
  verify_cmd->add_option("graph", verify_graph, "graph file")->required();
  verify_cmd->add_option("report", verify_report, "report file")->required();
  verify_cmd->add_option("--format", verify_format, "graph format")
      ->check(CLI::IsMember(formats));

  auto* bench_cmd = app.add_subcommand("bench", "sweep datasets / criteria / I / K from a manifest");
  std::string bench_manifest, bench_out, bench_profile = "paper";
  bool bench_parallel = false;
  bench_cmd->add_option("--manifest", bench_manifest, "JSON manifest")->required();
  bench_cmd->add_option("--out", bench_out, "concatenated reports for all cells");
  bench_cmd->add_option("--profile", bench_profile, "parameter profile")
      ->check(CLI::IsMember({"paper", "fast"}));
  bench_cmd->add_flag("--parallel", bench_parallel,
                      "run cells concurrently (disables timing columns)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (threads > 0) omp_set_num_threads(threads);

  try {
    if (stats_cmd->parsed()) return cmd_stats(stats_path, stats_format);
    if (run_cmd_->parsed()) {
      run_cfg.seed = resolve_seed(run_seed_opt, run_cfg.seed);
      return cmd_run(run_cfg);
    }
    if (gen_cmd->parsed()) return cmd_generate(gen_cfg);
    if (oracle_cmd->parsed()) return cmd_oracle(oracle_path, oracle_format, oracle_connected);
    if (verify_cmd->parsed()) return cmd_verify(verify_graph, verify_format, verify_report);
    if (bench_cmd->parsed()) return cmd_bench(bench_manifest, bench_out, bench_profile,
                                              bench_parallel);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  }
  return kExitUsage;
}
