// Command-line front end for the qmwords library.  All domain work goes
// through the C API in qmwords.h; this file only parses arguments, shapes
// output and maps error codes onto exit codes (0 ok, 1 property or contract
// violation, 2 input error).

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "qmwords.h"

namespace {

constexpr const char* kDefaultLiteralAlphabet = "abcdefghijklmnopqrstuvwxyz0123456789";

int exit_code_for_error(int code) {
  switch (code) {
    case QMW_ERR_NOT_LEFT_K_CAUCHY:
    case QMW_ERR_NOT_ASCENDING:
    case QMW_ERR_PRECONDITION_VIOLATED:
    case QMW_ERR_ORDER_AXIOM:
      return 1;
    default:
      return 2;
  }
}

int report_last_error(const std::string& command, bool json) {
  if (json) {
    nlohmann::json j;
    j["command"] = command;
    j["error"] = qmw_last_error_name();
    j["message"] = qmw_last_error_message();
    if (qmw_last_error_position() >= 0) j["position"] = qmw_last_error_position();
    std::cout << j.dump() << "\n";
  } else {
    std::cerr << "error: " << qmw_last_error_name() << ": " << qmw_last_error_message() << "\n";
  }
  return exit_code_for_error(qmw_last_error());
}

struct StringDeleter {
  void operator()(char* s) const { qmw_free_string(s); }
};
using CStr = std::unique_ptr<char, StringDeleter>;

struct AlphabetDeleter {
  void operator()(qmw_alphabet* a) const { qmw_alphabet_free(a); }
};
using CAlphabet = std::unique_ptr<qmw_alphabet, AlphabetDeleter>;

struct WordDeleter {
  void operator()(qmw_word* w) const { qmw_word_free(w); }
};
using CWord = std::unique_ptr<qmw_word, WordDeleter>;

struct BallDeleter {
  void operator()(qmw_ball* b) const { qmw_ball_free(b); }
};
using CBall = std::unique_ptr<qmw_ball, BallDeleter>;

struct ChainDeleter {
  void operator()(qmw_chain* c) const { qmw_chain_free(c); }
};
using CChain = std::unique_ptr<qmw_chain, ChainDeleter>;

struct SequenceDeleter {
  void operator()(qmw_sequence* s) const { qmw_sequence_free(s); }
};
using CSequence = std::unique_ptr<qmw_sequence, SequenceDeleter>;

int cmd_dist(const std::string& metric, const std::string& alphabet, const std::string& xs,
             const std::string& ys, bool json) {
  CAlphabet alpha(qmw_alphabet_new(alphabet.c_str()));
  if (!alpha) return report_last_error("dist", json);
  CWord x(qmw_word_parse(alpha.get(), xs.c_str()));
  if (!x) return report_last_error("dist", json);
  CWord y(qmw_word_parse(alpha.get(), ys.c_str()));
  if (!y) return report_last_error("dist", json);
  CStr value(qmw_dist(metric.c_str(), x.get(), y.get()));
  if (!value) return report_last_error("dist", json);
  CStr pow2(qmw_ratio_pow2_form(value.get()));
  if (json) {
    nlohmann::json j;
    j["command"] = "dist";
    j["metric"] = metric;
    j["x"] = xs;
    j["y"] = ys;
    j["value"] = value.get();
    if (pow2) j["pow2"] = pow2.get();
    std::cout << j.dump() << "\n";
  } else {
    std::cout << value.get();
    if (pow2) std::cout << " (= " << pow2.get() << ")";
    std::cout << "\n";
  }
  return 0;
}

int cmd_ball_leq(const std::string& metric, const std::string& alphabet, const std::string& b1s,
                 const std::string& b2s, bool json) {
  CAlphabet alpha(qmw_alphabet_new(alphabet.c_str()));
  if (!alpha) return report_last_error("ball-leq", json);
  CBall b1(qmw_ball_parse(alpha.get(), b1s.c_str()));
  if (!b1) return report_last_error("ball-leq", json);
  CBall b2(qmw_ball_parse(alpha.get(), b2s.c_str()));
  if (!b2) return report_last_error("ball-leq", json);
  int verdict = qmw_ball_leq(metric.c_str(), b1.get(), b2.get());
  if (verdict < 0) return report_last_error("ball-leq", json);
  if (json) {
    nlohmann::json j;
    j["command"] = "ball-leq";
    j["metric"] = metric;
    j["b1"] = b1s;
    j["b2"] = b2s;
    j["verdict"] = verdict == 1;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << (verdict == 1 ? "true" : "false") << "\n";
  }
  return 0;
}

int cmd_chain_lub(const std::string& metric, const std::string& alphabet,
                  const std::string& chain_text, bool json) {
  CAlphabet alpha(qmw_alphabet_new(alphabet.c_str()));
  if (!alpha) return report_last_error("chain-lub", json);
  CChain chain(qmw_chain_parse(alpha.get(), chain_text.c_str()));
  if (!chain) return report_last_error("chain-lub", json);
  CBall lub(qmw_chain_lub(metric.c_str(), chain.get()));
  if (!lub) return report_last_error("chain-lub", json);
  CStr text(qmw_ball_format(lub.get()));
  if (json) {
    CStr center(qmw_ball_center(lub.get()));
    CStr radius(qmw_ball_radius(lub.get()));
    nlohmann::json j;
    j["command"] = "chain-lub";
    j["metric"] = metric;
    j["chain"] = chain_text;
    j["center"] = center.get();
    j["radius"] = radius.get();
    std::cout << j.dump() << "\n";
  } else {
    std::cout << text.get() << "\n";
  }
  return 0;
}

int cmd_yoneda_limit(const std::string& alphabet, const std::string& seq_text, bool json) {
  CAlphabet alpha(qmw_alphabet_new(alphabet.c_str()));
  if (!alpha) return report_last_error("yoneda-limit", json);
  CSequence seq(qmw_sequence_parse(alpha.get(), seq_text.c_str()));
  if (!seq) return report_last_error("yoneda-limit", json);
  CWord limit(qmw_yoneda_limit(seq.get()));
  if (!limit) return report_last_error("yoneda-limit", json);
  CStr text(qmw_word_format(limit.get()));
  if (json) {
    nlohmann::json j;
    j["command"] = "yoneda-limit";
    j["sequence"] = seq_text;
    j["limit"] = text.get();
    std::cout << j.dump() << "\n";
  } else {
    std::cout << text.get() << "\n";
  }
  return 0;
}

int cmd_approx_chain(const std::string& alphabet, const std::string& ball_text, bool json) {
  CAlphabet alpha(qmw_alphabet_new(alphabet.c_str()));
  if (!alpha) return report_last_error("approx-chain", json);
  CBall ball(qmw_ball_parse(alpha.get(), ball_text.c_str()));
  if (!ball) return report_last_error("approx-chain", json);
  CChain chain(qmw_approximation_chain(ball.get()));
  if (!chain) return report_last_error("approx-chain", json);
  CStr text(qmw_chain_format(chain.get()));
  if (json) {
    nlohmann::json j;
    j["command"] = "approx-chain";
    j["ball"] = ball_text;
    j["chain"] = text.get();
    std::cout << j.dump() << "\n";
  } else {
    std::cout << text.get() << "\n";
  }
  return 0;
}

int cmd_check(const std::string& suite, const qmw_check_config& cfg, bool json) {
  char* report = nullptr;
  int pass = 0;
  int rc = qmw_run_check(suite.c_str(), &cfg, json ? 1 : 0, &report, &pass);
  if (rc != QMW_OK) return report_last_error("check", json);
  CStr guard(report);
  std::cout << report;
  if (json) std::cout << "\n";
  return pass ? 0 : 1;
}

int cmd_oracle(const std::string& path, bool ball_grid, const std::string& metric,
               const std::string& alphabet, const std::string& words,
               const std::string& radii, bool json) {
  char* report = nullptr;
  int valid = 0;
  int rc;
  if (ball_grid) {
    rc = qmw_oracle_ball_grid(metric.c_str(), alphabet.c_str(), words.c_str(), radii.c_str(),
                              json ? 1 : 0, &report, &valid);
  } else {
    std::ifstream in(path);
    if (!in) {
      std::cerr << "error: cannot read poset file: " << path << "\n";
      return 2;
    }
    std::ostringstream text;
    text << in.rdbuf();
    rc = qmw_oracle_poset_text(text.str().c_str(), json ? 1 : 0, &report, &valid);
  }
  if (rc != QMW_OK) return report_last_error("oracle", json);
  CStr guard(report);
  std::cout << report;
  if (json) std::cout << "\n";
  return valid ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact quasi-metric structures on finite and eventually periodic words"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "emit one machine-readable JSON object");

  auto* dist = app.add_subcommand("dist", "evaluate a distance between two words");
  std::string dist_metric, dist_x, dist_y;
  std::string dist_alpha = kDefaultLiteralAlphabet;
  dist->add_option("metric", dist_metric, "baire|dw|d0|qb|sym-dw|sym-d0|sym-qb")->required();
  dist->add_option("x", dist_x, "word literal")->required();
  dist->add_option("y", dist_y, "word literal")->required();
  dist->add_option("--alphabet", dist_alpha, "alphabet symbols");

  auto* bleq = app.add_subcommand("ball-leq", "compare two formal balls");
  std::string bleq_metric, bleq_b1, bleq_b2;
  std::string bleq_alpha = kDefaultLiteralAlphabet;
  bleq->add_option("metric", bleq_metric)->required();
  bleq->add_option("b1", bleq_b1, "ball literal \"(word, p/q)\"")->required();
  bleq->add_option("b2", bleq_b2)->required();
  bleq->add_option("--alphabet", bleq_alpha, "alphabet symbols");

  auto* club = app.add_subcommand("chain-lub", "least upper bound of a presented chain");
  std::string club_metric, club_chain;
  std::string club_alpha = kDefaultLiteralAlphabet;
  club->add_option("metric", club_metric, "qb|baire")->required();
  club->add_option("chain", club_chain, "chain literal")->required();
  club->add_option("--alphabet", club_alpha, "alphabet symbols");

  auto* ylim = app.add_subcommand("yoneda-limit", "Yoneda-limit of a left K-Cauchy sequence");
  std::string ylim_seq;
  std::string ylim_alpha = kDefaultLiteralAlphabet;
  ylim->add_option("sequence", ylim_seq, "sequence literal")->required();
  ylim->add_option("--alphabet", ylim_alpha, "alphabet symbols");

  auto* approx = app.add_subcommand("approx-chain", "canonical chain of approximants of a ball");
  std::string approx_ball;
  std::string approx_alpha = kDefaultLiteralAlphabet;
  approx->add_option("ball", approx_ball, "ball literal")->required();
  approx->add_option("--alphabet", approx_alpha, "alphabet symbols");

  auto* check = app.add_subcommand("check", "run a property suite over a corpus");
  std::string check_suite;
  std::string check_alpha = "ab";
  int check_max_len = 4;
  std::string check_periodic = "(a)^w,(b)^w,(ab)^w";
  std::string check_radii = "0,1/8,1/4,1/2,3/4,1";
  uint64_t check_seed = 1;
  std::string check_metric;
  check->add_option("suite", check_suite, "axioms|t1|remarks|balls|yoneda|theorem")->required();
  check->add_option("--alphabet", check_alpha, "corpus alphabet");
  check->add_option("--max-len", check_max_len, "max finite word length in the corpus");
  check->add_option("--periodic", check_periodic, "comma-separated periodic corpus words");
  check->add_option("--radii", check_radii, "comma-separated radius grid");
  check->add_option("--seed", check_seed, "seed for sampled instances");
  check->add_option("--metric", check_metric, "restrict the axioms suite to one metric");

  auto* oracle = app.add_subcommand("oracle", "brute-force order checks on a finite poset");
  std::string oracle_file;
  bool oracle_grid = false;
  std::string oracle_metric = "qb";
  std::string oracle_alpha = "ab";
  std::string oracle_words = "eps,a,ab";
  std::string oracle_radii = "0,1/4,1/2,1";
  oracle->add_option("file", oracle_file, "poset text file (element/leq lines)");
  oracle->add_flag("--ball-grid", oracle_grid, "use a ball grid instead of a file");
  oracle->add_option("--metric", oracle_metric, "grid metric");
  oracle->add_option("--alphabet", oracle_alpha, "grid alphabet");
  oracle->add_option("--words", oracle_words, "comma-separated grid words");
  oracle->add_option("--radii", oracle_radii, "comma-separated grid radii");

  CLI11_PARSE(app, argc, argv);

  if (dist->parsed()) return cmd_dist(dist_metric, dist_alpha, dist_x, dist_y, json);
  if (bleq->parsed()) return cmd_ball_leq(bleq_metric, bleq_alpha, bleq_b1, bleq_b2, json);
  if (club->parsed()) return cmd_chain_lub(club_metric, club_alpha, club_chain, json);
  if (ylim->parsed()) return cmd_yoneda_limit(ylim_alpha, ylim_seq, json);
  if (approx->parsed()) return cmd_approx_chain(approx_alpha, approx_ball, json);
  if (check->parsed()) {
    qmw_check_config cfg{};
    cfg.alphabet = check_alpha.c_str();
    cfg.max_len = check_max_len;
    cfg.periodic = check_periodic.c_str();
    cfg.radii = check_radii.c_str();
    cfg.seed = check_seed;
    cfg.metric = check_metric.empty() ? nullptr : check_metric.c_str();
    return cmd_check(check_suite, cfg, json);
  }
  if (oracle->parsed()) {
    if (!oracle_grid && oracle_file.empty()) {
      std::cerr << "error: oracle needs a poset file or --ball-grid\n";
      return 2;
    }
    return cmd_oracle(oracle_file, oracle_grid, oracle_metric, oracle_alpha, oracle_words,
                      oracle_radii, json);
  }
  return 2;
}
