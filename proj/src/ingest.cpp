#include "abcd/ingest.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "abcd/rng.hpp"

namespace abcd {

namespace {

std::vector<std::string> split_fields(const std::string& line, const char* delims) {
  std::vector<std::string> out;
  size_t i = 0;
  while (i < line.size()) {
    size_t j = line.find_first_of(delims, i);
    if (j == std::string::npos) j = line.size();
    if (j > i) out.emplace_back(line, i, j - i);
    i = j + 1;
  }
  return out;
}

bool parse_number(const std::string& s, double* out) {
  const char* begin = s.c_str();
  char* end = nullptr;
  double v = std::strtod(begin, &end);
  if (end == begin || *end != '\0' || !std::isfinite(v)) return false;
  *out = v;
  return true;
}

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  return in;
}

}  // namespace

RawEdgeList load_konect(std::istream& in, const std::string& name) {
  RawEdgeList raw;
  raw.source_format = "konect";
  std::string line;
  int64_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    size_t first = line.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    if (line.compare(first, 3, "%v ") == 0) {  // vertex declaration
      std::string label = line.substr(first + 3);
      size_t a = label.find_first_not_of(" \t");
      size_t b = label.find_last_not_of(" \t");
      if (a == std::string::npos) {
        throw std::runtime_error(name + ":" + std::to_string(line_no) +
                                 ": empty vertex declaration");
      }
      raw.declared_vertices.push_back(label.substr(a, b - a + 1));
      continue;
    }
    if (line[first] == '%' || line[first] == '#') continue;

    std::vector<std::string> f = split_fields(line, " \t,");
    if (f.size() < 2) {
      throw std::runtime_error(name + ":" + std::to_string(line_no) + ": expected 'u v [weight]'");
    }
    double w = 1.0;  // unsigned edges count as positive
    if (f.size() >= 3 && !parse_number(f[2], &w)) {
      throw std::runtime_error(name + ":" + std::to_string(line_no) + ": bad weight '" + f[2] +
                               "'");
    }
    raw.records.push_back({f[0], f[1], w});
  }
  return raw;
}

RawEdgeList load_konect(const std::string& path) {
  std::ifstream in = open_or_throw(path);
  return load_konect(in, path);
}

RawEdgeList load_amazon_ratings(std::istream& in, const std::string& name) {
  (void)name;
  RawEdgeList raw;
  raw.source_format = "amazon";
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '%' || line[0] == '#') continue;
    std::vector<std::string> f = split_fields(line, ",");
    double rating = 0.0;
    if (f.size() < 3 || !parse_number(f[2], &rating) || rating < 1.0 || rating > 5.0) {
      raw.rejected_records++;  // header rows land here too
      continue;
    }
    double w = rating >= 4.0 ? 1.0 : (rating >= 3.0 ? 1.0 : -1.0);
    raw.records.push_back({"u:" + f[0], "i:" + f[1], w});
  }
  return raw;
}

RawEdgeList load_amazon_ratings(const std::string& path) {
  std::ifstream in = open_or_throw(path);
  return load_amazon_ratings(in, path);
}

namespace {

// geometric gap sampling over a linearized pair range: visits each pair with
// probability p using O(p * count) rng draws
template <typename Fn>
void sample_pairs(Rng& rng, int64_t count, double p, Fn&& emit) {
  if (count <= 0 || p <= 0.0) return;
  if (p >= 1.0) {
    for (int64_t i = 0; i < count; ++i) emit(i);
    return;
  }
  const double denom = std::log1p(-p);
  int64_t i = -1;
  while (true) {
    double u = ((double)(rng.next() >> 11) + 0.5) * 0x1.0p-53;  // (0,1)
    i += 1 + (int64_t)(std::log(u) / denom);
    if (i >= count || i < 0) break;
    emit(i);
  }
}

}  // namespace

RawEdgeList generate_planted(int64_t n_core, int64_t n_noise, double p_core, double p_noise,
                             double neg_noise_fraction, uint64_t seed) {
  if (n_core < 1) throw std::invalid_argument("generate_planted: n_core must be >= 1");
  if (n_noise < 0) throw std::invalid_argument("generate_planted: n_noise must be >= 0");
  for (double p : {p_core, p_noise, neg_noise_fraction}) {
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("generate_planted: probability out of [0,1]");
  }

  const int64_t n = n_core + n_noise;
  RawEdgeList raw;
  raw.source_format = "planted";
  raw.declared_vertices.reserve((size_t)n);
  for (int64_t v = 0; v < n; ++v) raw.declared_vertices.push_back(std::to_string(v));

  Rng side_rng = Rng::stream(seed, 1, 0);
  std::vector<uint8_t> side((size_t)n_core);
  for (int64_t v = 0; v < n_core; ++v) side[(size_t)v] = side_rng.coin();

  // core pairs, linearized row-major over u < v < n_core; sampled indices come
  // back ascending, so the row cursor only moves forward
  Rng core_rng = Rng::stream(seed, 2, 0);
  const int64_t core_pairs = n_core * (n_core - 1) / 2;
  {
    int64_t cur_u = 0, row_start = 0, row_len = n_core - 1;
    sample_pairs(core_rng, core_pairs, p_core, [&](int64_t idx) {
      while (idx >= row_start + row_len) {
        row_start += row_len;
        --row_len;
        ++cur_u;
      }
      int64_t v = cur_u + 1 + (idx - row_start);
      double w = side[(size_t)cur_u] == side[(size_t)v] ? 1.0 : -1.0;
      raw.records.push_back({std::to_string(cur_u), std::to_string(v), w});
    });
  }

  // every pair with a noise endpoint: rows v in [n_core, n), columns u < v
  Rng noise_rng = Rng::stream(seed, 3, 0);
  Rng sign_rng = Rng::stream(seed, 4, 0);
  const int64_t noise_pairs = n * (n - 1) / 2 - core_pairs;
  {
    int64_t cur_v = n_core, row_start = 0;
    sample_pairs(noise_rng, noise_pairs, p_noise, [&](int64_t idx) {
      while (idx >= row_start + cur_v) {
        row_start += cur_v;
        ++cur_v;
      }
      int64_t u = idx - row_start;
      double neg_draw = ((double)(sign_rng.next() >> 11) + 0.5) * 0x1.0p-53;
      double w = neg_draw < neg_noise_fraction ? -1.0 : 1.0;
      raw.records.push_back({std::to_string(u), std::to_string(cur_v), w});
    });
  }

  return raw;
}

void write_canonical(const SignedGraph& g, std::ostream& out) {
  out << "% canonical signed edge list\n";
  for (int32_t v = 0; v < g.n; ++v) {
    out << "%v " << (g.labels.empty() ? std::to_string(v) : g.labels[(size_t)v]) << "\n";
  }
  for (const Edge& e : g.edges) {
    out << (g.labels.empty() ? std::to_string(e.u) : g.labels[(size_t)e.u]) << " "
        << (g.labels.empty() ? std::to_string(e.v) : g.labels[(size_t)e.v]) << " "
        << (int)e.sign << "\n";
  }
}

void write_canonical(const SignedGraph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  write_canonical(g, out);
}

}  // namespace abcd
