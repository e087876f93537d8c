#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qmwords/finite_poset.hpp"
#include "qmwords/formal_ball.hpp"
#include "qmwords/metric.hpp"

namespace qmw {

/// Configuration shared by the check suites; the seed fully determines any
/// sampled instances, so identical configs replay identical runs.
struct RunConfig {
  std::string alphabet = "ab";
  unsigned max_len = 4;
  std::vector<std::string> periodic = {"(a)^w", "(b)^w", "(ab)^w"};
  std::vector<std::string> radii = {"0", "1/8", "1/4", "1/2", "3/4", "1"};
  uint64_t seed = 1;
  std::string metric_filter;  // axioms suite only; empty = all four

  unsigned yoneda_presentations = 120;
  unsigned witness_chains_per_pair = 10;
  unsigned directedness_balls = 20;
};

struct SuiteReport {
  std::string suite;
  uint64_t seed = 0;
  size_t checked = 0;
  std::vector<std::string> violations;
  std::map<std::string, std::string> info;

  bool pass() const { return violations.empty(); }
  std::string text() const;
  std::string json() const;
};

Alphabet config_alphabet(const RunConfig& cfg);
std::vector<Ratio> config_radii(const RunConfig& cfg);

/// All finite words of length <= max_len in length-then-lexicographic order,
/// followed by the configured periodic words; duplicates dropped.
std::vector<Word> build_corpus(const RunConfig& cfg);

/// The six CLI check suites: axioms, t1, remarks, balls, yoneda, theorem.
SuiteReport run_suite(const std::string& name, const RunConfig& cfg);

SuiteReport suite_axioms(const RunConfig& cfg);
SuiteReport suite_t1(const RunConfig& cfg);
SuiteReport suite_remarks(const RunConfig& cfg);
SuiteReport suite_balls(const RunConfig& cfg);
SuiteReport suite_yoneda(const RunConfig& cfg);
SuiteReport suite_theorem(const RunConfig& cfg);

/// Property runs used by the self-test harness on top of the six suites.
SuiteReport run_way_below_consistency(const RunConfig& cfg);
SuiteReport run_directedness(const RunConfig& cfg);
SuiteReport run_oracle_sanity(const RunConfig& cfg);

}  // namespace qmw
