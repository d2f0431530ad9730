// Compares the OpenMP kernels against the serial reference implementations on
// generated graphs: same outputs, wall-clock side by side.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "CLI11.hpp"

#include "abcd/ingest.hpp"
#include "abcd/phase2.hpp"

using namespace abcd;

namespace {

double time_of(const std::function<void()>& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

bool same_states(const StateSet& a, const StateSet& b) {
  if (a.states.size() != b.states.size()) return false;
  for (size_t i = 0; i < a.states.size(); ++i) {
    if (a.states[i].candidates != b.states[i].candidates) return false;
    if (a.states[i].harary != b.states[i].harary) return false;
    if (a.states[i].arrival != b.states[i].arrival) return false;
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  int64_t n_core = 800, n_noise = 800, iterations = 300, top_k = 50;
  double p_core = 0.02, p_noise = 0.004, neg_noise = 0.5;
  uint64_t seed = 7;

  CLI::App app{"serial reference vs OpenMP kernel timing"};
  app.add_option("--n-core", n_core);
  app.add_option("--n-noise", n_noise);
  app.add_option("--p-core", p_core);
  app.add_option("--p-noise", p_noise);
  app.add_option("--iters", iterations);
  app.add_option("--k", top_k);
  app.add_option("--seed", seed);
  CLI11_PARSE(app, argc, argv);

  RawEdgeList raw = generate_planted(n_core, n_noise, p_core, p_noise, neg_noise, seed);
  SignedGraph g = canonicalize(raw);
  auto [lcc, mapping] = largest_connected_component(g);
  (void)mapping;
  std::printf("graph: %d vertices, %lld edges (lcc of planted %lld+%lld)\n", lcc.n,
              (long long)lcc.edge_count(), (long long)n_core, (long long)n_noise);
  std::printf("phase1: I=%lld K=%lld   phase2: criterion=harary\n\n", (long long)iterations,
              (long long)top_k);

  const int max_threads = omp_get_max_threads();

  StateSet serial_states;
  const double t_serial = time_of([&] {
    serial_states = collect_topk_states_serial(lcc, iterations, top_k, seed);
  });
  std::printf("%-28s %8.3fs\n", "phase1 serial reference", t_serial);

  StateSet par_states;
  for (int t = 1; t <= max_threads; t *= 2) {
    omp_set_num_threads(t);
    const double dt = time_of([&] { par_states = collect_topk_states(lcc, iterations, top_k, seed); });
    const bool ok = same_states(serial_states, par_states);
    std::printf("phase1 kernel, %2d thread%s    %8.3fs  speedup %5.2fx  %s\n", t,
                t == 1 ? " " : "s", dt, t_serial / dt, ok ? "match" : "MISMATCH");
    if (!ok) return 1;
  }

  omp_set_num_threads(max_threads);
  Phase2Aux aux = make_phase2_aux(lcc, serial_states);

  std::vector<int32_t> serial_sizes;
  const double t2_serial = time_of([&] {
    serial_sizes = purge_state_sizes_serial(lcc, serial_states, Criterion::harary, aux, seed);
  });
  std::printf("\n%-28s %8.3fs\n", "phase2 serial reference", t2_serial);

  std::vector<int32_t> par_sizes;
  for (int t = 1; t <= max_threads; t *= 2) {
    omp_set_num_threads(t);
    const double dt = time_of([&] {
      par_sizes = purge_state_sizes(lcc, serial_states, Criterion::harary, aux, seed);
    });
    const bool ok = par_sizes == serial_sizes;
    std::printf("phase2 kernel, %2d thread%s    %8.3fs  speedup %5.2fx  %s\n", t,
                t == 1 ? " " : "s", dt, t2_serial / dt, ok ? "match" : "MISMATCH");
    if (!ok) return 1;
  }

  int32_t best = 0;
  for (size_t i = 1; i < serial_sizes.size(); ++i) {
    if (serial_sizes[i] > serial_sizes[(size_t)best]) best = (int32_t)i;
  }
  std::printf("\nwinner: state %d, %d of %d vertices\n", best, serial_sizes[(size_t)best], lcc.n);
  return 0;
}
