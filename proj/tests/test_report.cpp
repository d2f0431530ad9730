#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "abcd/report.hpp"

using namespace abcd;

namespace {

RunReport sample_report(bool timings) {
  RunReport r;
  r.dataset = "toy";
  r.format = "konect";
  r.criterion = "harary";
  r.iterations = 5000;
  r.top_k = 4000;
  r.seed = 42;
  r.raw = {16, 58, 43, 0.483333, 0.5, 7.25, 7.5, 10};
  r.lcc = {16, 58, 43, 0.483333, 0.5, 7.25, 7.5, 10};
  r.states_retained = 12;
  r.frustration_min = 7;
  r.frustration_max = 9;
  r.winner_state = 3;
  r.winner_size = 13;
  r.per_state_sizes = {13, 12, 12, 13};
  r.winner_vertices = {"t1", "t2", "t3"};
  r.has_timings = timings;
  r.time_ingest_s = 0.01;
  r.time_phase1_s = 0.625;
  r.time_phase2_s = 0.125;
  r.time_verify_s = 0.0009765625;
  r.time_total_s = 0.76171875;
  return r;
}

}  // namespace

TEST_CASE("report round-trips through write and parse") {
  for (bool timings : {false, true}) {
    RunReport r = sample_report(timings);
    std::ostringstream out;
    write_report(out, r);
    std::istringstream in(out.str());
    RunReport back = parse_report(in);
    CHECK(back == r);
  }
}

TEST_CASE("reports without timings are byte-stable") {
  RunReport r = sample_report(false);
  std::ostringstream a, b;
  write_report(a, r);
  write_report(b, r);
  CHECK(a.str() == b.str());
  CHECK(a.str().find("timings") == std::string::npos);
}

TEST_CASE("field changes break equality") {
  RunReport a = sample_report(false);
  RunReport b = a;
  b.winner_size = 14;
  CHECK_FALSE(a == b);
  b = a;
  b.winner_vertices.push_back("t4");
  CHECK_FALSE(a == b);
}

TEST_CASE("parse rejects malformed input") {
  std::istringstream junk("abcd-report v2\n");
  CHECK_THROWS_AS(parse_report(junk), std::runtime_error);
  std::istringstream truncated("abcd-report v1\ndataset x\n");
  CHECK_THROWS_AS(parse_report(truncated), std::runtime_error);
}

TEST_CASE("multiple reports parse back to back from one stream") {
  RunReport r1 = sample_report(false);
  RunReport r2 = sample_report(true);
  r2.dataset = "other";
  std::ostringstream out;
  write_report(out, r1);
  write_report(out, r2);
  std::istringstream in(out.str());
  RunReport b1 = parse_report(in);
  RunReport b2 = parse_report(in);
  CHECK(b1 == r1);
  CHECK(b2 == r2);
}
