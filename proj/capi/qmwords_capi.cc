#include "qmwords.h"

#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

#include "json.hpp"
#include "qmwords/error.hpp"
#include "qmwords/finite_poset.hpp"
#include "qmwords/formal_ball.hpp"
#include "qmwords/metric.hpp"
#include "qmwords/suites.hpp"
#include "qmwords/word.hpp"

using namespace qmw;

struct qmw_alphabet {
  Alphabet v;
};
struct qmw_word {
  Word v;
};
struct qmw_ball {
  FormalBall v;
};
struct qmw_chain {
  ChainPresentation v;
};
struct qmw_sequence {
  SequencePresentation v;
};

namespace {

thread_local int g_error_code = QMW_OK;
thread_local std::string g_error_name;
thread_local std::string g_error_message;
thread_local long g_error_position = -1;

int map_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return QMW_ERR_PARSE;
    case ErrorCode::AlphabetMismatch: return QMW_ERR_ALPHABET_MISMATCH;
    case ErrorCode::IndexOutOfRange: return QMW_ERR_INDEX_OUT_OF_RANGE;
    case ErrorCode::NotLeftKCauchy: return QMW_ERR_NOT_LEFT_K_CAUCHY;
    case ErrorCode::MalformedPresentation: return QMW_ERR_MALFORMED_PRESENTATION;
    case ErrorCode::NotAscending: return QMW_ERR_NOT_ASCENDING;
    case ErrorCode::TooLarge: return QMW_ERR_TOO_LARGE;
    case ErrorCode::PreconditionViolated: return QMW_ERR_PRECONDITION_VIOLATED;
    case ErrorCode::NotReflexive:
    case ErrorCode::NotAntisymmetric:
    case ErrorCode::NotTransitive:
    case ErrorCode::OrderAxiomViolation: return QMW_ERR_ORDER_AXIOM;
    case ErrorCode::InvalidArgument: return QMW_ERR_INVALID_ARGUMENT;
  }
  return QMW_ERR_INTERNAL;
}

void clear_error() {
  g_error_code = QMW_OK;
  g_error_name.clear();
  g_error_message.clear();
  g_error_position = -1;
}

void set_error(const Error& e) {
  g_error_code = map_code(e.code());
  g_error_name = e.code_name();
  g_error_message = e.what();
  g_error_position = e.position();
}

void set_internal_error(const std::exception& e) {
  g_error_code = QMW_ERR_INTERNAL;
  g_error_name = "InternalError";
  g_error_message = e.what();
  g_error_position = -1;
}

// Runs the body, mapping exceptions onto the thread-local error state and
// `bad` as the returned failure value.
template <typename T, typename F>
T guard(T bad, F&& body) {
  clear_error();
  try {
    return body();
  } catch (const Error& e) {
    set_error(e);
  } catch (const std::exception& e) {
    set_internal_error(e);
  }
  return bad;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::vector<std::string> split_csv(const char* csv) {
  std::vector<std::string> out;
  if (!csv) return out;
  std::string s(csv);
  size_t start = 0;
  while (start <= s.size()) {
    size_t comma = s.find(',', start);
    std::string piece =
        comma == std::string::npos ? s.substr(start) : s.substr(start, comma - start);
    if (!piece.empty()) out.push_back(piece);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

RunConfig to_run_config(const qmw_check_config* cfg) {
  RunConfig rc;
  if (!cfg) return rc;
  if (cfg->alphabet) rc.alphabet = cfg->alphabet;
  if (cfg->max_len >= 0) rc.max_len = static_cast<unsigned>(cfg->max_len);
  if (cfg->periodic) rc.periodic = split_csv(cfg->periodic);
  if (cfg->radii) rc.radii = split_csv(cfg->radii);
  rc.seed = cfg->seed;
  if (cfg->metric) rc.metric_filter = cfg->metric;
  return rc;
}

// Oracle report over a validated poset.
std::string oracle_report(const FinitePoset& p, bool as_json, const std::string& source) {
  bool enumerable = p.size() <= FinitePoset::kEnumerationBound;
  bool dcpo = false, continuous = false, wb_eq_leq = false;
  std::vector<std::pair<std::string, std::string>> wb_pairs;
  if (enumerable) {
    dcpo = p.is_dcpo();
    continuous = p.is_continuous();
    wb_eq_leq = true;
    for (size_t x = 0; x < p.size(); ++x)
      for (size_t y = 0; y < p.size(); ++y) {
        bool wb = p.way_below(x, y);
        if (wb != p.leq(x, y)) wb_eq_leq = false;
        if (wb) wb_pairs.emplace_back(p.labels()[x], p.labels()[y]);
      }
  }
  if (as_json) {
    nlohmann::json j;
    j["command"] = "oracle";
    j["source"] = source;
    j["elements"] = p.size();
    j["valid"] = true;
    if (enumerable) {
      j["dcpo"] = dcpo;
      j["continuous"] = continuous;
      j["way-below-equals-leq"] = wb_eq_leq;
      nlohmann::json pairs = nlohmann::json::array();
      for (const auto& [a, b] : wb_pairs) pairs.push_back({a, b});
      j["way-below"] = pairs;
    } else {
      j["enumeration"] = "skipped (size > " + std::to_string(FinitePoset::kEnumerationBound) + ")";
    }
    return j.dump();
  }
  std::string out;
  out += "elements: " + std::to_string(p.size()) + "\n";
  out += "order axioms: ok\n";
  if (enumerable) {
    out += std::string("dcpo: ") + (dcpo ? "yes" : "no") + "\n";
    out += std::string("continuous: ") + (continuous ? "yes" : "no") + "\n";
    out += "way-below pairs: " + std::to_string(wb_pairs.size()) +
           " (equals leq: " + (wb_eq_leq ? "yes" : "no") + ")\n";
    for (const auto& [a, b] : wb_pairs) out += "  " + a + " << " + b + "\n";
  } else {
    out += "enumeration: skipped (size > " + std::to_string(FinitePoset::kEnumerationBound) +
           ")\n";
  }
  return out;
}

std::string oracle_failure_report(const Error& e, bool as_json, const std::string& source) {
  if (as_json) {
    nlohmann::json j;
    j["command"] = "oracle";
    j["source"] = source;
    j["valid"] = false;
    j["error"] = e.code_name();
    j["message"] = e.what();
    return j.dump();
  }
  return std::string("order axioms: FAIL\n") + e.code_name() + ": " + e.what() + "\n";
}

bool is_order_axiom_failure(const Error& e) {
  switch (e.code()) {
    case ErrorCode::NotReflexive:
    case ErrorCode::NotAntisymmetric:
    case ErrorCode::NotTransitive:
    case ErrorCode::OrderAxiomViolation: return true;
    default: return false;
  }
}

}  // namespace

extern "C" {

const char* qmw_version(void) { return "1.0.0"; }

int qmw_last_error(void) { return g_error_code; }
const char* qmw_last_error_name(void) { return g_error_name.c_str(); }
const char* qmw_last_error_message(void) { return g_error_message.c_str(); }
long qmw_last_error_position(void) { return g_error_position; }

void qmw_free_string(char* s) { std::free(s); }

qmw_alphabet* qmw_alphabet_new(const char* symbols) {
  return guard<qmw_alphabet*>(nullptr, [&] {
    if (!symbols) fail(ErrorCode::InvalidArgument, "symbols must not be NULL");
    return new qmw_alphabet{Alphabet(symbols)};
  });
}

void qmw_alphabet_free(qmw_alphabet* a) { delete a; }

qmw_word* qmw_word_parse(const qmw_alphabet* a, const char* text) {
  return guard<qmw_word*>(nullptr, [&] {
    if (!a || !text) fail(ErrorCode::InvalidArgument, "alphabet and text must not be NULL");
    return new qmw_word{parse_word(text, a->v)};
  });
}

void qmw_word_free(qmw_word* w) { delete w; }

char* qmw_word_format(const qmw_word* w) {
  return guard<char*>(nullptr, [&] {
    if (!w) fail(ErrorCode::InvalidArgument, "word must not be NULL");
    return dup_string(format_word(w->v));
  });
}

int qmw_word_is_infinite(const qmw_word* w) {
  return guard<int>(-1, [&] {
    if (!w) fail(ErrorCode::InvalidArgument, "word must not be NULL");
    return w->v.is_infinite() ? 1 : 0;
  });
}

long long qmw_word_length(const qmw_word* w) {
  return guard<long long>(-2, [&] {
    if (!w) fail(ErrorCode::InvalidArgument, "word must not be NULL");
    ExtNat len = w->v.length();
    return len.is_infinite() ? -1LL : static_cast<long long>(len.value());
  });
}

int qmw_word_symbol_at(const qmw_word* w, uint64_t i) {
  return guard<int>(-1, [&] {
    if (!w) fail(ErrorCode::InvalidArgument, "word must not be NULL");
    return static_cast<int>(static_cast<unsigned char>(w->v.symbol_at(i)));
  });
}

qmw_word* qmw_word_take(const qmw_word* w, uint64_t n) {
  return guard<qmw_word*>(nullptr, [&] {
    if (!w) fail(ErrorCode::InvalidArgument, "word must not be NULL");
    return new qmw_word{w->v.take(n)};
  });
}

qmw_word* qmw_word_canonicalize(const qmw_word* w) {
  return guard<qmw_word*>(nullptr, [&] {
    if (!w) fail(ErrorCode::InvalidArgument, "word must not be NULL");
    return new qmw_word{w->v.canonicalize()};
  });
}

int qmw_word_equals(const qmw_word* x, const qmw_word* y) {
  return guard<int>(-1, [&] {
    if (!x || !y) fail(ErrorCode::InvalidArgument, "words must not be NULL");
    return equals(x->v, y->v) ? 1 : 0;
  });
}

int qmw_word_is_prefix(const qmw_word* x, const qmw_word* y) {
  return guard<int>(-1, [&] {
    if (!x || !y) fail(ErrorCode::InvalidArgument, "words must not be NULL");
    return is_prefix(x->v, y->v) ? 1 : 0;
  });
}

qmw_word* qmw_word_lcp(const qmw_word* x, const qmw_word* y) {
  return guard<qmw_word*>(nullptr, [&] {
    if (!x || !y) fail(ErrorCode::InvalidArgument, "words must not be NULL");
    return new qmw_word{lcp(x->v, y->v)};
  });
}

char* qmw_dist(const char* metric, const qmw_word* x, const qmw_word* y) {
  return guard<char*>(nullptr, [&] {
    if (!metric || !x || !y)
      fail(ErrorCode::InvalidArgument, "metric and words must not be NULL");
    return dup_string(dist(Metric::from_name(metric), x->v, y->v).str());
  });
}

char* qmw_ratio_pow2_form(const char* ratio) {
  return guard<char*>(nullptr, [&]() -> char* {
    if (!ratio) fail(ErrorCode::InvalidArgument, "ratio must not be NULL");
    auto k = Ratio::parse(ratio).pow2_negative_exponent();
    if (!k) return nullptr;
    return dup_string("2^-" + std::to_string(*k));
  });
}

qmw_ball* qmw_ball_parse(const qmw_alphabet* a, const char* literal) {
  return guard<qmw_ball*>(nullptr, [&] {
    if (!a || !literal) fail(ErrorCode::InvalidArgument, "alphabet and literal must not be NULL");
    return new qmw_ball{parse_ball(literal, a->v)};
  });
}

void qmw_ball_free(qmw_ball* b) { delete b; }

char* qmw_ball_format(const qmw_ball* b) {
  return guard<char*>(nullptr, [&] {
    if (!b) fail(ErrorCode::InvalidArgument, "ball must not be NULL");
    return dup_string(format_ball(b->v));
  });
}

char* qmw_ball_center(const qmw_ball* b) {
  return guard<char*>(nullptr, [&] {
    if (!b) fail(ErrorCode::InvalidArgument, "ball must not be NULL");
    return dup_string(format_word(b->v.center));
  });
}

char* qmw_ball_radius(const qmw_ball* b) {
  return guard<char*>(nullptr, [&] {
    if (!b) fail(ErrorCode::InvalidArgument, "ball must not be NULL");
    return dup_string(b->v.radius.str());
  });
}

int qmw_ball_leq(const char* metric, const qmw_ball* b1, const qmw_ball* b2) {
  return guard<int>(-1, [&] {
    if (!metric || !b1 || !b2)
      fail(ErrorCode::InvalidArgument, "metric and balls must not be NULL");
    return ball_leq(Metric::from_name(metric), b1->v, b2->v) ? 1 : 0;
  });
}

qmw_chain* qmw_chain_parse(const qmw_alphabet* a, const char* literal) {
  return guard<qmw_chain*>(nullptr, [&] {
    if (!a || !literal) fail(ErrorCode::InvalidArgument, "alphabet and literal must not be NULL");
    return new qmw_chain{parse_chain(literal, a->v)};
  });
}

void qmw_chain_free(qmw_chain* c) { delete c; }

char* qmw_chain_format(const qmw_chain* c) {
  return guard<char*>(nullptr, [&] {
    if (!c) fail(ErrorCode::InvalidArgument, "chain must not be NULL");
    return dup_string(format_chain(c->v));
  });
}

qmw_ball* qmw_chain_element(const qmw_chain* c, uint64_t n) {
  return guard<qmw_ball*>(nullptr, [&] {
    if (!c) fail(ErrorCode::InvalidArgument, "chain must not be NULL");
    return new qmw_ball{chain_element(c->v, n)};
  });
}

qmw_ball* qmw_chain_lub(const char* metric, const qmw_chain* c) {
  return guard<qmw_ball*>(nullptr, [&] {
    if (!metric || !c) fail(ErrorCode::InvalidArgument, "metric and chain must not be NULL");
    return new qmw_ball{lub_chain(Metric::from_name(metric), c->v)};
  });
}

qmw_chain* qmw_approximation_chain(const qmw_ball* b) {
  return guard<qmw_chain*>(nullptr, [&] {
    if (!b) fail(ErrorCode::InvalidArgument, "ball must not be NULL");
    return new qmw_chain{approximation_chain(b->v)};
  });
}

qmw_sequence* qmw_sequence_parse(const qmw_alphabet* a, const char* literal) {
  return guard<qmw_sequence*>(nullptr, [&] {
    if (!a || !literal) fail(ErrorCode::InvalidArgument, "alphabet and literal must not be NULL");
    return new qmw_sequence{parse_sequence(literal, a->v)};
  });
}

void qmw_sequence_free(qmw_sequence* s) { delete s; }

char* qmw_sequence_format(const qmw_sequence* s) {
  return guard<char*>(nullptr, [&] {
    if (!s) fail(ErrorCode::InvalidArgument, "sequence must not be NULL");
    return dup_string(format_sequence(s->v));
  });
}

int qmw_is_left_k_cauchy(const qmw_sequence* s) {
  return guard<int>(-1, [&] {
    if (!s) fail(ErrorCode::InvalidArgument, "sequence must not be NULL");
    return is_left_k_cauchy_qb(s->v) ? 1 : 0;
  });
}

qmw_word* qmw_yoneda_limit(const qmw_sequence* s) {
  return guard<qmw_word*>(nullptr, [&] {
    if (!s) fail(ErrorCode::InvalidArgument, "sequence must not be NULL");
    return new qmw_word{yoneda_limit_qb(s->v)};
  });
}

int qmw_verify_yoneda_limit(const qmw_sequence* s, const qmw_word* candidate,
                            const qmw_word* const* probes, size_t n_probes) {
  return guard<int>(-1, [&] {
    if (!s || !candidate || (!probes && n_probes > 0))
      fail(ErrorCode::InvalidArgument, "sequence, candidate and probes must not be NULL");
    std::vector<Word> ws;
    ws.reserve(n_probes);
    for (size_t i = 0; i < n_probes; ++i) {
      if (!probes[i]) fail(ErrorCode::InvalidArgument, "probe must not be NULL");
      ws.push_back(probes[i]->v);
    }
    AxiomReport rep = verify_yoneda_limit(s->v, candidate->v, ws);
    return static_cast<int>(rep.violations.size());
  });
}

int qmw_way_below_refute(const char* metric, const qmw_ball* b1, const qmw_ball* b2,
                         char** detail_out) {
  return guard<int>(-1, [&] {
    if (!metric || !b1 || !b2)
      fail(ErrorCode::InvalidArgument, "metric and balls must not be NULL");
    WayBelowVerdict v = way_below_refute(Metric::from_name(metric), b1->v, b2->v);
    if (detail_out) *detail_out = dup_string(verdict_str(v));
    return is_refuted(v) ? QMW_WB_REFUTED : QMW_WB_UNKNOWN;
  });
}

int qmw_way_below_sufficient_qb(const qmw_ball* b1, const qmw_ball* b2, char** detail_out) {
  return guard<int>(-1, [&] {
    if (!b1 || !b2) fail(ErrorCode::InvalidArgument, "balls must not be NULL");
    WayBelowVerdict v = way_below_sufficient_qb(b1->v, b2->v);
    if (detail_out) *detail_out = dup_string(verdict_str(v));
    return is_certified(v) ? QMW_WB_CERTIFIED : QMW_WB_UNKNOWN;
  });
}

int qmw_way_below_witness_check(const qmw_ball* b1, const qmw_ball* b2, const qmw_chain* chain,
                                uint64_t* index_out) {
  return guard<int>(-1, [&] {
    if (!b1 || !b2 || !chain)
      fail(ErrorCode::InvalidArgument, "balls and chain must not be NULL");
    WitnessCheckResult r = way_below_witness_check(b1->v, b2->v, chain->v);
    if (const auto* w = std::get_if<WitnessFound>(&r)) {
      if (index_out) *index_out = w->index;
      return static_cast<int>(QMW_WITNESS_FOUND);
    }
    if (std::holds_alternative<NoWitness>(r)) return static_cast<int>(QMW_NO_WITNESS);
    return static_cast<int>(QMW_NOT_ABOVE_B2);
  });
}

int qmw_run_check(const char* suite, const qmw_check_config* cfg, int as_json, char** report_out,
                  int* pass_out) {
  return guard<int>(-1, [&] {
    if (!suite || !report_out) fail(ErrorCode::InvalidArgument, "suite and report_out required");
    SuiteReport rep = run_suite(suite, to_run_config(cfg));
    *report_out = dup_string(as_json ? rep.json() : rep.text());
    if (pass_out) *pass_out = rep.pass() ? 1 : 0;
    return QMW_OK;
  });
}

int qmw_oracle_poset_text(const char* text, int as_json, char** report_out, int* valid_out) {
  return guard<int>(-1, [&] {
    if (!text || !report_out) fail(ErrorCode::InvalidArgument, "text and report_out required");
    try {
      FinitePoset p = parse_poset(text);
      *report_out = dup_string(oracle_report(p, as_json != 0, "poset"));
      if (valid_out) *valid_out = 1;
    } catch (const Error& e) {
      if (!is_order_axiom_failure(e)) throw;
      *report_out = dup_string(oracle_failure_report(e, as_json != 0, "poset"));
      if (valid_out) *valid_out = 0;
    }
    return QMW_OK;
  });
}

int qmw_oracle_ball_grid(const char* metric, const char* alphabet, const char* words_csv,
                         const char* radii_csv, int as_json, char** report_out, int* valid_out) {
  return guard<int>(-1, [&] {
    if (!metric || !alphabet || !words_csv || !radii_csv || !report_out)
      fail(ErrorCode::InvalidArgument, "all ball-grid arguments are required");
    Alphabet alpha(alphabet);
    std::vector<Word> words;
    for (const auto& lit : split_csv(words_csv)) words.push_back(parse_word(lit, alpha));
    std::vector<Ratio> radii;
    for (const auto& lit : split_csv(radii_csv)) {
      Ratio r = Ratio::parse(lit);
      if (r.is_negative()) fail(ErrorCode::ParseError, "radius must be >= 0: " + lit);
      radii.push_back(std::move(r));
    }
    try {
      FinitePoset p = sample_ball_poset(Metric::from_name(metric), words, radii);
      *report_out = dup_string(oracle_report(p, as_json != 0, "ball-grid"));
      if (valid_out) *valid_out = 1;
    } catch (const Error& e) {
      if (!is_order_axiom_failure(e)) throw;
      *report_out = dup_string(oracle_failure_report(e, as_json != 0, "ball-grid"));
      if (valid_out) *valid_out = 0;
    }
    return QMW_OK;
  });
}

}  // extern "C"
