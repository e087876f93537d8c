#include "qmwords/suites.hpp"

#include "doctest.h"
#include "qmwords/error.hpp"

using namespace qmw;

namespace {

// Smaller corpus than the default keeps the unit run quick; the defaults run
// in the acceptance suite.
RunConfig quick() {
  RunConfig cfg;
  cfg.max_len = 3;
  cfg.seed = 42;
  cfg.yoneda_presentations = 24;
  cfg.witness_chains_per_pair = 4;
  cfg.directedness_balls = 6;
  return cfg;
}

}  // namespace

TEST_CASE("corpus construction") {
  RunConfig cfg;
  auto corpus = build_corpus(cfg);
  CHECK(corpus.size() == 34);  // 31 finite words plus three periodic ones
  CHECK(format_word(corpus.front()) == "eps");
  cfg.periodic = {"(a)^w", "a(a)^w"};  // alias collapses after canonicalization
  CHECK(build_corpus(cfg).size() == 32);
  cfg.max_len = 30;
  CHECK_THROWS_AS(build_corpus(cfg), Error);
}

TEST_CASE("six suites pass on a quick corpus") {
  for (const char* name : {"axioms", "t1", "remarks", "balls", "yoneda", "theorem"}) {
    SuiteReport r = run_suite(name, quick());
    INFO(r.text());
    CHECK(r.pass());
    CHECK(r.checked > 0);
  }
  CHECK_THROWS_AS(run_suite("bogus", quick()), Error);
}

TEST_CASE("axioms suite honors the metric filter") {
  RunConfig cfg = quick();
  cfg.metric_filter = "qb";
  SuiteReport r = suite_axioms(cfg);
  CHECK(r.pass());
  cfg.metric_filter = "nope";
  CHECK_THROWS_AS(suite_axioms(cfg), Error);
}

TEST_CASE("harness property runs pass") {
  SuiteReport wb = run_way_below_consistency(quick());
  INFO(wb.text());
  CHECK(wb.pass());

  SuiteReport dir = run_directedness(quick());
  INFO(dir.text());
  CHECK(dir.pass());

  SuiteReport oracle = run_oracle_sanity(quick());
  INFO(oracle.text());
  CHECK(oracle.pass());
}

TEST_CASE("reports are deterministic and json round-trips") {
  RunConfig cfg = quick();
  SuiteReport a = suite_yoneda(cfg);
  SuiteReport b = suite_yoneda(cfg);
  CHECK(a.json() == b.json());
  CHECK(a.text() == b.text());
  cfg.seed = 43;
  SuiteReport c = suite_yoneda(cfg);
  CHECK(c.pass());

  // The report text names the seed.
  CHECK(a.text().find("seed: 42") != std::string::npos);
}
