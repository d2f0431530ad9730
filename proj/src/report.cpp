#include "abcd/report.hpp"

#include <cinttypes>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace abcd {

namespace {

std::string fmt_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

void write_stats(std::ostream& out, const char* tag, const GraphStats& s) {
  out << tag << " vertices " << s.vertices << " edges " << s.edges << " cycles "
      << s.cycle_space_dimension << " density " << fmt_double(s.density) << " neg_fraction "
      << fmt_double(s.negative_fraction) << " deg_avg " << fmt_double(s.degree_avg)
      << " deg_median " << fmt_double(s.degree_median) << " deg_max " << s.degree_max << "\n";
}

class LineParser {
 public:
  explicit LineParser(std::istream& in) : in_(in) {}

  // next non-empty line split into tokens; throws at EOF
  std::vector<std::string>& next(const char* expect_key) {
    std::string line;
    while (std::getline(in_, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      tokens_.clear();
      std::istringstream ls(line);
      std::string tok;
      while (ls >> tok) tokens_.push_back(tok);
      if (tokens_.empty()) continue;
      if (expect_key && tokens_[0] != expect_key) {
        throw std::runtime_error("report parse: expected '" + std::string(expect_key) +
                                 "', got '" + tokens_[0] + "'");
      }
      return tokens_;
    }
    throw std::runtime_error("report parse: unexpected end of input");
  }

  // peeks the key of the next non-empty line without consuming it
  std::string peek_key() {
    std::streampos pos = in_.tellg();
    std::string line;
    while (std::getline(in_, line)) {
      std::istringstream ls(line);
      std::string tok;
      if (ls >> tok) {
        in_.clear();
        in_.seekg(pos);
        return tok;
      }
      pos = in_.tellg();
    }
    in_.clear();
    in_.seekg(pos);
    return "";
  }

 private:
  std::istream& in_;
  std::vector<std::string> tokens_;
};

int64_t to_i64(const std::string& s) { return std::stoll(s); }
uint64_t to_u64(const std::string& s) { return std::stoull(s); }
double to_f64(const std::string& s) { return std::stod(s); }

GraphStats parse_stats(const std::vector<std::string>& t) {
  if (t.size() != 17) throw std::runtime_error("report parse: malformed stats line");
  GraphStats s;
  s.vertices = to_i64(t[2]);
  s.edges = to_i64(t[4]);
  s.cycle_space_dimension = to_i64(t[6]);
  s.density = to_f64(t[8]);
  s.negative_fraction = to_f64(t[10]);
  s.degree_avg = to_f64(t[12]);
  s.degree_median = to_f64(t[14]);
  s.degree_max = to_i64(t[16]);
  return s;
}

}  // namespace

void write_report(std::ostream& out, const RunReport& r) {
  out << "abcd-report v1\n";
  out << "dataset " << r.dataset << "\n";
  out << "format " << r.format << "\n";
  out << "criterion " << r.criterion << "\n";
  out << "iterations " << r.iterations << "\n";
  out << "top_k " << r.top_k << "\n";
  out << "seed " << r.seed << "\n";
  write_stats(out, "raw", r.raw);
  write_stats(out, "lcc", r.lcc);
  out << "states_retained " << r.states_retained << "\n";
  out << "frustration_min " << r.frustration_min << "\n";
  out << "frustration_max " << r.frustration_max << "\n";
  out << "winner_state " << r.winner_state << "\n";
  out << "winner_size " << r.winner_size << "\n";
  out << "per_state_sizes";
  for (int64_t s : r.per_state_sizes) out << " " << s;
  out << "\n";
  out << "winner_vertices";
  for (const std::string& v : r.winner_vertices) out << " " << v;
  out << "\n";
  if (r.has_timings) {
    out << "timings ingest " << fmt_double(r.time_ingest_s) << " phase1 "
        << fmt_double(r.time_phase1_s) << " phase2 " << fmt_double(r.time_phase2_s) << " verify "
        << fmt_double(r.time_verify_s) << " total " << fmt_double(r.time_total_s) << "\n";
  }
  out << "end abcd-report\n";
}

RunReport parse_report(std::istream& in) {
  LineParser lp(in);
  RunReport r;
  {
    auto& t = lp.next("abcd-report");
    if (t.size() != 2 || t[1] != "v1") throw std::runtime_error("report parse: bad header");
  }
  auto one = [&](const char* key) -> std::string {
    auto& t = lp.next(key);
    if (t.size() != 2) throw std::runtime_error(std::string("report parse: malformed ") + key);
    return t[1];
  };
  r.dataset = one("dataset");
  r.format = one("format");
  r.criterion = one("criterion");
  r.iterations = to_i64(one("iterations"));
  r.top_k = to_i64(one("top_k"));
  r.seed = to_u64(one("seed"));
  r.raw = parse_stats(lp.next("raw"));
  r.lcc = parse_stats(lp.next("lcc"));
  r.states_retained = to_i64(one("states_retained"));
  r.frustration_min = to_i64(one("frustration_min"));
  r.frustration_max = to_i64(one("frustration_max"));
  r.winner_state = (int32_t)to_i64(one("winner_state"));
  r.winner_size = to_i64(one("winner_size"));
  {
    auto& t = lp.next("per_state_sizes");
    for (size_t i = 1; i < t.size(); ++i) r.per_state_sizes.push_back(to_i64(t[i]));
  }
  {
    auto& t = lp.next("winner_vertices");
    for (size_t i = 1; i < t.size(); ++i) r.winner_vertices.push_back(t[i]);
  }
  if (lp.peek_key() == "timings") {
    auto& t = lp.next("timings");
    if (t.size() != 11) throw std::runtime_error("report parse: malformed timings");
    r.has_timings = true;
    r.time_ingest_s = to_f64(t[2]);
    r.time_phase1_s = to_f64(t[4]);
    r.time_phase2_s = to_f64(t[6]);
    r.time_verify_s = to_f64(t[8]);
    r.time_total_s = to_f64(t[10]);
  }
  lp.next("end");
  return r;
}

bool operator==(const RunReport& a, const RunReport& b) {
  auto stats_eq = [](const GraphStats& x, const GraphStats& y) {
    return x.vertices == y.vertices && x.edges == y.edges &&
           x.cycle_space_dimension == y.cycle_space_dimension && x.density == y.density &&
           x.negative_fraction == y.negative_fraction && x.degree_avg == y.degree_avg &&
           x.degree_median == y.degree_median && x.degree_max == y.degree_max;
  };
  return a.dataset == b.dataset && a.format == b.format && a.criterion == b.criterion &&
         a.iterations == b.iterations && a.top_k == b.top_k && a.seed == b.seed &&
         stats_eq(a.raw, b.raw) && stats_eq(a.lcc, b.lcc) &&
         a.states_retained == b.states_retained && a.frustration_min == b.frustration_min &&
         a.frustration_max == b.frustration_max && a.winner_state == b.winner_state &&
         a.winner_size == b.winner_size && a.per_state_sizes == b.per_state_sizes &&
         a.winner_vertices == b.winner_vertices && a.has_timings == b.has_timings &&
         (!a.has_timings ||
          (a.time_ingest_s == b.time_ingest_s && a.time_phase1_s == b.time_phase1_s &&
           a.time_phase2_s == b.time_phase2_s && a.time_verify_s == b.time_verify_s &&
           a.time_total_s == b.time_total_s));
}

}  // namespace abcd
