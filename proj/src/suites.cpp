#include "qmwords/suites.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "json.hpp"
#include "qmwords/error.hpp"

namespace qmw {

namespace {

constexpr size_t kCorpusBound = 128;

std::string csv(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& s : items) {
    if (!out.empty()) out += ",";
    out += s;
  }
  return out;
}

void put_config_info(SuiteReport& r, const RunConfig& cfg) {
  r.info["alphabet"] = cfg.alphabet;
  r.info["max-len"] = std::to_string(cfg.max_len);
  r.info["periodic"] = csv(cfg.periodic);
  r.info["radii"] = csv(cfg.radii);
}

std::vector<Metric> axiom_metrics(const RunConfig& cfg) {
  if (!cfg.metric_filter.empty()) return {Metric::from_name(cfg.metric_filter)};
  return {Metric::baire(), Metric::dw(), Metric::d0(), Metric::qb()};
}

// Runs `body` and converts a thrown contract error into a suite violation
// instead of aborting the whole suite.
template <typename F>
void guarded(SuiteReport& r, const std::string& what, F&& body) {
  try {
    body();
  } catch (const Error& e) {
    r.violations.push_back(what + ": " + std::string(e.code_name()) + ": " + e.what());
  }
}

std::vector<WordTriple> all_triples(const std::vector<Word>& corpus) {
  std::vector<WordTriple> out;
  out.reserve(corpus.size() * corpus.size() * corpus.size());
  for (const Word& x : corpus)
    for (const Word& y : corpus)
      for (const Word& z : corpus) out.push_back({x, y, z});
  return out;
}

std::vector<WordPair> all_pairs(const std::vector<Word>& corpus) {
  std::vector<WordPair> out;
  out.reserve(corpus.size() * corpus.size());
  for (const Word& x : corpus)
    for (const Word& y : corpus) out.push_back({x, y});
  return out;
}

std::vector<FormalBall> ball_grid(const std::vector<Word>& corpus,
                                  const std::vector<Ratio>& radii) {
  std::vector<FormalBall> out;
  out.reserve(corpus.size() * radii.size());
  for (const Word& w : corpus)
    for (const Ratio& r : radii) out.emplace_back(w, r);
  return out;
}

// Looks up a corpus word by its canonical literal; used for the fixed
// regression witnesses which only exist over suitable alphabets.
const Word* find_word(const std::vector<Word>& corpus, const std::string& literal) {
  for (const Word& w : corpus)
    if (format_word(w) == literal) return &w;
  return nullptr;
}

}  // namespace

Alphabet config_alphabet(const RunConfig& cfg) { return Alphabet(cfg.alphabet); }

std::vector<Ratio> config_radii(const RunConfig& cfg) {
  std::vector<Ratio> out;
  out.reserve(cfg.radii.size());
  for (const auto& r : cfg.radii) {
    Ratio v = Ratio::parse(r);
    if (v.is_negative()) fail(ErrorCode::InvalidArgument, "radius grid value must be >= 0");
    out.push_back(std::move(v));
  }
  if (out.empty()) fail(ErrorCode::InvalidArgument, "radius grid must be non-empty");
  return out;
}

std::vector<Word> build_corpus(const RunConfig& cfg) {
  Alphabet alpha = config_alphabet(cfg);
  std::vector<Word> corpus;
  std::set<std::string> seen;
  auto push = [&](Word w) {
    if (seen.insert(format_word(w)).second) corpus.push_back(std::move(w));
  };
  const std::string& syms = alpha.symbols();
  for (unsigned len = 0; len <= cfg.max_len; ++len) {
    std::vector<size_t> odo(len, 0);
    while (true) {
      std::string word;
      for (size_t i : odo) word.push_back(syms[i]);
      push(Word::finite(alpha, word));
      if (corpus.size() > kCorpusBound)
        fail(ErrorCode::TooLarge, "corpus exceeds " + std::to_string(kCorpusBound) + " words");
      size_t pos = len;
      while (pos > 0) {
        if (++odo[pos - 1] < syms.size()) break;
        odo[pos - 1] = 0;
        --pos;
      }
      if (pos == 0) break;
    }
  }
  for (const auto& lit : cfg.periodic) push(parse_word(lit, alpha));
  if (corpus.size() > kCorpusBound)
    fail(ErrorCode::TooLarge, "corpus exceeds " + std::to_string(kCorpusBound) + " words");
  return corpus;
}

std::string SuiteReport::text() const {
  std::ostringstream out;
  out << "suite: " << suite << "\n";
  out << "seed: " << seed << "\n";
  for (const auto& [k, v] : info) out << k << ": " << v << "\n";
  out << "checked: " << checked << "\n";
  out << "violations: " << violations.size() << "\n";
  for (const auto& v : violations) out << "  violation: " << v << "\n";
  out << (pass() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

std::string SuiteReport::json() const {
  nlohmann::json j;
  j["command"] = "check";
  j["suite"] = suite;
  j["seed"] = seed;
  j["checked"] = checked;
  j["info"] = info;
  j["violations"] = violations;
  j["pass"] = pass();
  return j.dump();
}

SuiteReport suite_axioms(const RunConfig& cfg) {
  SuiteReport r{"axioms", cfg.seed, 0, {}, {}};
  put_config_info(r, cfg);
  auto corpus = build_corpus(cfg);
  auto triples = all_triples(corpus);
  r.info["corpus-words"] = std::to_string(corpus.size());
  for (const Metric& m : axiom_metrics(cfg)) {
    guarded(r, m.name(), [&] {
      AxiomReport rep = check_quasi_metric_axioms(m, triples);
      r.checked += rep.checked;
      for (const auto& v : rep.violations) {
        std::string witness;
        for (const auto& w : v.witness) witness += " " + w;
        r.violations.push_back(m.name() + " " + v.axiom + witness + ": " + v.detail);
      }
    });
  }
  std::sort(r.violations.begin(), r.violations.end());
  return r;
}

SuiteReport suite_t1(const RunConfig& cfg) {
  SuiteReport r{"t1", cfg.seed, 0, {}, {}};
  put_config_info(r, cfg);
  auto corpus = build_corpus(cfg);
  auto pairs = all_pairs(corpus);

  guarded(r, "qb", [&] {
    AxiomReport rep = check_t1(Metric::qb(), pairs);
    r.checked += rep.checked;
    for (const auto& v : rep.violations)
      r.violations.push_back("qb violates (i') at " + v.witness[0] + ", " + v.witness[1] + ": " +
                             v.detail);
  });

  // d_w and d_0 are expected to fail (i'); the pair ("a","ab") is the fixed
  // recorded witness whenever the corpus contains it.
  const Word* wa = find_word(corpus, "a");
  const Word* wab = find_word(corpus, "ab");
  for (const Metric& m : {Metric::dw(), Metric::d0()}) {
    guarded(r, m.name(), [&] {
      AxiomReport rep = check_t1(m, pairs);
      r.checked += rep.checked;
      if (rep.violations.empty()) {
        r.violations.push_back(m.name() + " unexpectedly satisfies (i') over the corpus");
        return;
      }
      r.info[m.name() + "-i1-witnesses"] = std::to_string(rep.violations.size());
      if (wa && wab) {
        bool found = false;
        for (const auto& v : rep.violations)
          if (v.witness[0] == "a" && v.witness[1] == "ab") found = true;
        if (!found)
          r.violations.push_back(m.name() + " is missing the fixed (i') witness (a, ab)");
      }
    });
  }
  std::sort(r.violations.begin(), r.violations.end());
  return r;
}

SuiteReport suite_remarks(const RunConfig& cfg) {
  SuiteReport r{"remarks", cfg.seed, 0, {}, {}};
  put_config_info(r, cfg);
  Alphabet alpha = config_alphabet(cfg);
  auto corpus = build_corpus(cfg);
  Metric sym_d0 = Metric::sym_of(Metric::d0());
  Metric sym_dw = Metric::sym_of(Metric::dw());

  // (d_0)^s agrees with the Baire metric on every pair.
  for (const Word& x : corpus)
    for (const Word& y : corpus) {
      ++r.checked;
      Ratio lhs = dist(sym_d0, x, y);
      Ratio rhs = baire(x, y);
      if (!(lhs == rhs))
        r.violations.push_back("(d0)^s != baire at " + format_word(x) + ", " + format_word(y) +
                               ": " + lhs.str() + " vs " + rhs.str());
    }

  // Fixed witness that (d_w)^s is not the Baire metric.
  const Word* wa = find_word(corpus, "a");
  const Word* wab = find_word(corpus, "ab");
  if (wa && wab) {
    ++r.checked;
    Ratio lhs = dist(sym_dw, *wa, *wab);
    Ratio rhs = baire(*wa, *wab);
    r.info["sym-dw-witness"] = "(a, ab): " + lhs.str() + " vs baire " + rhs.str();
    if (!(lhs == Ratio(1, 4)) || !(rhs == Ratio(1, 2)))
      r.violations.push_back("fixed witness (a, ab) expected (dw)^s = 1/4 and baire = 1/2, got " +
                             lhs.str() + " and " + rhs.str());
  }

  // Discrimination: x < y < z strictly under the prefix order forces
  // q_b(y,z) < q_b(x,z).
  for (const Word& x : corpus)
    for (const Word& y : corpus) {
      if (!is_prefix(x, y) || equals(x, y)) continue;
      for (const Word& z : corpus) {
        if (!is_prefix(y, z) || equals(y, z)) continue;
        ++r.checked;
        if (!(qb(y, z) < qb(x, z)))
          r.violations.push_back("discrimination fails at " + format_word(x) + " < " +
                                 format_word(y) + " < " + format_word(z));
      }
    }

  // Prefix detection: for x != eps, x <= y iff q_b(x,y) < 1.
  for (const Word& x : corpus) {
    if (length(x) == ExtNat::nat(0)) continue;
    for (const Word& y : corpus) {
      ++r.checked;
      if (is_prefix(x, y) != (qb(x, y) < Ratio::one()))
        r.violations.push_back("prefix detection fails at " + format_word(x) + ", " +
                               format_word(y));
    }
  }

  // The eps caveat: q_b(eps, s^w) = 1 although eps is a prefix.
  guarded(r, "eps-edge", [&] {
    Word eps = Word::empty(alpha);
    Word inf = Word::eventually_periodic(alpha, "", alpha.symbols().substr(0, 1));
    ++r.checked;
    if (!(qb(eps, inf) == Ratio::one()) || !is_prefix(eps, inf))
      r.violations.push_back("eps edge case: expected q_b(eps, " + format_word(inf) +
                             ") = 1 with eps a prefix, got " + qb(eps, inf).str());
  });

  std::sort(r.violations.begin(), r.violations.end());
  return r;
}

SuiteReport suite_balls(const RunConfig& cfg) {
  SuiteReport r{"balls", cfg.seed, 0, {}, {}};
  put_config_info(r, cfg);
  Alphabet alpha = config_alphabet(cfg);
  auto corpus = build_corpus(cfg);
  auto radii = config_radii(cfg);

  // Partial-order axioms on the full grid, via the brute-force validator.
  guarded(r, "qb-grid-order", [&] {
    FinitePoset p = sample_ball_poset(Metric::qb(), corpus, radii);
    r.checked += p.size() * p.size();
    r.info["grid-elements"] = std::to_string(p.size());
  });

  // Monotone radii and Lemma-1 consistency over the grid.
  auto grid = ball_grid(corpus, radii);
  for (const auto& b1 : grid)
    for (const auto& b2 : grid) {
      ++r.checked;
      if (ball_leq(Metric::qb(), b1, b2) && b1.radius < b2.radius)
        r.violations.push_back("radius grows along <=_qb at " + b1.str() + " <= " + b2.str());
      WayBelowVerdict cert = way_below_sufficient_qb(b1, b2);
      if (is_certified(cert) && is_refuted(way_below_refute(Metric::qb(), b1, b2)))
        r.violations.push_back("certified and refuted coincide at " + b1.str() + " << " +
                               b2.str());
    }

  // Small grid validates under all four metrics.
  guarded(r, "four-metric-grid", [&] {
    std::vector<Word> small{Word::empty(alpha)};
    const std::string& syms = alpha.symbols();
    small.push_back(Word::finite(alpha, syms.substr(0, 1)));
    small.push_back(Word::finite(alpha, syms.size() > 1 ? syms.substr(0, 2) : syms + syms));
    std::vector<Ratio> small_radii{Ratio::zero(), Ratio(1, 4), Ratio(1, 2), Ratio::one()};
    for (const Metric& m : {Metric::baire(), Metric::dw(), Metric::d0(), Metric::qb()}) {
      FinitePoset p = sample_ball_poset(m, small, small_radii);
      r.checked += p.size() * p.size();
    }
  });

  std::sort(r.violations.begin(), r.violations.end());
  return r;
}

namespace {

// Deterministic generator for left K-Cauchy presentations and probe sets.
struct YonedaGenerator {
  Alphabet alpha;
  std::mt19937_64 rng;

  explicit YonedaGenerator(const Alphabet& a, uint64_t seed) : alpha(a), rng(seed) {}

  char symbol() {
    const std::string& s = alpha.symbols();
    return s[rng() % s.size()];
  }
  char other_symbol(char c) {
    const std::string& s = alpha.symbols();
    if (s.size() == 1) return c;
    char o = symbol();
    while (o == c) o = symbol();
    return o;
  }
  std::string random_symbols(size_t len) {
    std::string out;
    for (size_t i = 0; i < len; ++i) out.push_back(symbol());
    return out;
  }
  Word random_infinite() {
    return Word::eventually_periodic(alpha, random_symbols(rng() % 3),
                                     random_symbols(1 + rng() % 3))
        .canonicalize();
  }

  // Case 1: an ascending explicit list that stabilizes.
  SequencePresentation case1() {
    Word target = Word::finite(alpha, random_symbols(1 + rng() % 5));
    std::vector<Word> words;
    uint64_t len = target.length().value();
    for (uint64_t k = rng() % 2; k <= len; k += 1 + rng() % 2) words.push_back(target.take(k));
    words.push_back(target);
    bool visible_tail = rng() % 2 == 0;
    if (visible_tail) words.push_back(target);
    for (uint64_t extra = rng() % 2; extra > 0; --extra) words.push_back(target);
    bool stabilized = !visible_tail || rng() % 2 == 0;
    return ExplicitSeq{std::move(words), stabilized};
  }

  // Case 2: strictly ascending prefixes of an infinite target.
  SequencePresentation case2() {
    LengthSchedule sched{static_cast<uint32_t>(1 + rng() % 2),
                         static_cast<uint32_t>(rng() % 4)};
    return PrefixSchedule{random_infinite(), sched};
  }

  std::vector<Word> probes(const Word& limit) {
    std::vector<Word> out;
    out.push_back(limit);
    out.push_back(Word::empty(alpha));
    out.push_back(limit.take(1));
    out.push_back(limit.take(3));
    // A non-prefix: flip the last symbol of a short prefix.
    uint64_t cut = 1 + rng() % 3;
    Word pre = limit.take(cut);
    std::string mutated = pre.preperiod();
    if (!mutated.empty()) {
      mutated.back() = other_symbol(mutated.back());
      out.push_back(Word::finite(alpha, mutated));
    }
    // A distinct infinite word.
    Word inf = random_infinite();
    if (equals(inf, limit))
      inf = Word::eventually_periodic(
          alpha, "", std::string(1, other_symbol(limit.symbol_at(0))));
    out.push_back(inf);
    return out;
  }
};

}  // namespace

SuiteReport suite_yoneda(const RunConfig& cfg) {
  SuiteReport r{"yoneda", cfg.seed, 0, {}, {}};
  put_config_info(r, cfg);
  Alphabet alpha = config_alphabet(cfg);
  YonedaGenerator gen(alpha, cfg.seed);
  size_t case1 = 0, case2 = 0;
  constexpr uint64_t kHorizon = 64;

  for (unsigned i = 0; i < cfg.yoneda_presentations; ++i) {
    SequencePresentation seq = (i % 2 == 0) ? gen.case1() : gen.case2();
    (i % 2 == 0 ? case1 : case2) += 1;
    guarded(r, "presentation " + format_sequence(seq), [&] {
      if (!is_left_k_cauchy_qb(seq)) {
        r.violations.push_back("generated presentation is not left K-Cauchy: " +
                               format_sequence(seq));
        return;
      }
      Word limit = yoneda_limit_qb(seq);
      std::vector<Word> probes = gen.probes(limit);
      AxiomReport rep = verify_yoneda_limit(seq, limit, probes);
      r.checked += rep.checked;
      for (const auto& v : rep.violations)
        r.violations.push_back("limit law fails for " + format_sequence(seq) + " at probe " +
                               v.witness[0] + ": " + v.detail);
      // The horizon oracle must agree with the closed form, probe by probe.
      for (const Word& y : probes) {
        ++r.checked;
        Ratio tail = inf_sup_tail_eval(seq, y, kHorizon);
        Ratio expected = qb(limit, y);
        if (!(tail == expected))
          r.violations.push_back("horizon oracle disagrees for " + format_sequence(seq) +
                                 " at probe " + format_word(y) + ": " + tail.str() + " vs " +
                                 expected.str());
      }
      // A wrong limit must be rejected on the probe set {limit, wrong}.
      Word wrong = limit.take(length(limit) == ExtNat::nat(0) ? 0 : 1);
      if (equals(wrong, limit)) wrong = Word::finite(alpha, gen.random_symbols(2));
      if (!equals(wrong, limit)) {
        ++r.checked;
        AxiomReport neg = verify_yoneda_limit(seq, wrong, {limit, wrong});
        if (neg.violations.empty())
          r.violations.push_back("verify accepted the wrong limit " + format_word(wrong) +
                                 " for " + format_sequence(seq));
      }
    });
  }
  r.info["case1"] = std::to_string(case1);
  r.info["case2"] = std::to_string(case2);
  std::sort(r.violations.begin(), r.violations.end());
  return r;
}

SuiteReport suite_theorem(const RunConfig& cfg) {
  SuiteReport r{"theorem", cfg.seed, 0, {}, {}};
  put_config_info(r, cfg);
  auto corpus = build_corpus(cfg);
  auto radii = config_radii(cfg);
  auto grid = ball_grid(corpus, radii);
  const std::vector<uint64_t> sample_indices{0, 1, 2, 3, 5, 8, 13, 21, 34, 64};

  for (const FormalBall& b : grid) {
    guarded(r, "ball " + b.str(), [&] {
      ChainPresentation chain = approximation_chain(b);
      FormalBall lub = lub_chain(Metric::qb(), chain);
      ++r.checked;
      if (!ball_equal(lub, b))
        r.violations.push_back("lub of approximation chain of " + b.str() + " is " + lub.str());
      for (uint64_t n : sample_indices) {
        ++r.checked;
        FormalBall e = chain_element(chain, n);
        if (!is_certified(way_below_sufficient_qb(e, b)))
          r.violations.push_back("chain element " + e.str() + " not certified below " + b.str());
      }
      // Least among grid competitors.
      for (const FormalBall& c : grid) {
        ++r.checked;
        if (upper_bounds_all_elements(Metric::qb(), chain, c) &&
            !ball_leq(Metric::qb(), lub, c))
          r.violations.push_back("competitor " + c.str() + " bounds the chain of " + b.str() +
                                 " but is not above its lub");
      }
    });
  }
  std::sort(r.violations.begin(), r.violations.end());
  return r;
}

namespace {

// Chains with lub above b2, for exercising the way-below witness search.
std::vector<ChainPresentation> witness_chains(const FormalBall& b2, unsigned count,
                                              std::mt19937_64& rng, const Alphabet& alpha) {
  std::vector<ChainPresentation> out;
  out.push_back(approximation_chain(b2));
  out.push_back(FiniteChain{{b2}});
  out.push_back(FiniteChain{{FormalBall(b2.center, b2.radius + Ratio(1, 2)), b2}});
  out.push_back(FiniteChain{
      {FormalBall(b2.center, b2.radius + Ratio::one()),
       FormalBall(b2.center, b2.radius + Ratio(1, 4)), b2}});
  const Ratio coeffs[] = {Ratio(1, 2), Ratio::one(), Ratio(2), Ratio(3, 2)};
  if (b2.center.is_infinite()) {
    out.push_back(ParametricChain{PrefixSchedule{b2.center, LengthSchedule{1, 2}}, b2.radius,
                                  Ratio::one()});
    out.push_back(ParametricChain{PrefixSchedule{b2.center, LengthSchedule{2, 1}}, b2.radius,
                                  Ratio::one()});
  } else {
    // A finite chain whose lub lies strictly above b2.
    std::string extended = b2.center.preperiod() + alpha.symbols().substr(0, 1);
    long len = static_cast<long>(b2.center.preperiod().size());
    Ratio hop = Ratio::pow2(-len) - Ratio::pow2(-(len + 1));
    if (!(b2.radius < hop))
      out.push_back(FiniteChain{
          {b2, FormalBall(Word::finite(alpha, extended), b2.radius - hop)}});
    out.push_back(ParametricChain{ExplicitSeq{{b2.center}, true}, b2.radius, Ratio(1, 2)});
  }
  while (out.size() < count) {
    const Ratio& c = coeffs[rng() % 4];
    out.push_back(ParametricChain{ExplicitSeq{{b2.center}, true}, b2.radius, c});
  }
  return out;
}

}  // namespace

SuiteReport run_way_below_consistency(const RunConfig& cfg) {
  SuiteReport r{"way-below-consistency", cfg.seed, 0, {}, {}};
  put_config_info(r, cfg);
  Alphabet alpha = config_alphabet(cfg);
  auto corpus = build_corpus(cfg);
  auto radii = config_radii(cfg);
  auto grid = ball_grid(corpus, radii);
  std::mt19937_64 rng(cfg.seed);

  size_t certified = 0, p1_family = 0, p2_family = 0;
  for (const FormalBall& b1 : grid)
    for (const FormalBall& b2 : grid) {
      ++r.checked;
      WayBelowVerdict cert = way_below_sufficient_qb(b1, b2);
      WayBelowVerdict refu = way_below_refute(Metric::qb(), b1, b2);
      if (is_certified(cert) && is_refuted(refu)) {
        r.violations.push_back("certified and refuted coincide at " + b1.str() + " << " +
                               b2.str());
        continue;
      }
      if (!is_certified(cert)) continue;
      ++certified;
      const std::string& pattern = std::get<CertifiedBelow>(cert).pattern;
      (pattern[1] == '1' ? p1_family : p2_family) += 1;
      guarded(r, "witness search for " + b1.str() + " << " + b2.str(), [&] {
        auto chains = witness_chains(b2, cfg.witness_chains_per_pair, rng, alpha);
        for (const auto& chain : chains) {
          ++r.checked;
          WitnessCheckResult res = way_below_witness_check(b1, b2, chain);
          if (std::holds_alternative<NotAboveB2>(res))
            r.violations.push_back("generated chain " + format_chain(chain) +
                                   " has lub below " + b2.str());
          else if (std::holds_alternative<NoWitness>(res))
            r.violations.push_back("no witness for " + b1.str() + " << " + b2.str() + " in " +
                                   format_chain(chain));
        }
      });
    }
  r.info["certified-pairs"] = std::to_string(certified);
  r.info["p1-family"] = std::to_string(p1_family);
  r.info["p2-family"] = std::to_string(p2_family);
  if (p1_family < 25)
    r.violations.push_back("pattern P1 family exercised fewer than 25 times");
  if (p2_family < 25)
    r.violations.push_back("pattern P2 family exercised fewer than 25 times");
  std::sort(r.violations.begin(), r.violations.end());
  return r;
}

SuiteReport run_directedness(const RunConfig& cfg) {
  SuiteReport r{"directedness", cfg.seed, 0, {}, {}};
  put_config_info(r, cfg);
  auto corpus = build_corpus(cfg);
  auto radii = config_radii(cfg);
  auto grid = ball_grid(corpus, radii);

  // A deterministic mix of finite- and infinite-center balls.
  std::vector<FormalBall> finite_pool, infinite_pool;
  for (const FormalBall& b : grid)
    (b.center.is_infinite() ? infinite_pool : finite_pool).push_back(b);
  std::vector<FormalBall> targets;
  for (size_t i = 0; targets.size() < cfg.directedness_balls &&
                     (i < finite_pool.size() || i < infinite_pool.size());
       ++i) {
    if (i < infinite_pool.size() && targets.size() < cfg.directedness_balls)
      targets.push_back(infinite_pool[i]);
    if (i < finite_pool.size() && targets.size() < cfg.directedness_balls)
      targets.push_back(finite_pool[i]);
  }

  size_t finite_centers = 0, infinite_centers = 0;
  for (const FormalBall& b : targets) {
    (b.center.is_infinite() ? infinite_centers : finite_centers) += 1;
    std::vector<FormalBall> below;
    for (const FormalBall& e : grid)
      if (is_certified(way_below_sufficient_qb(e, b))) below.push_back(e);
    guarded(r, "downset of " + b.str(), [&] {
      // The empty case is vacuous but must still produce a certified bound.
      DirectednessResult empty = downset_directedness_check(b, {});
      ++r.checked;
      if (!std::holds_alternative<UpperBoundInDownset>(empty))
        r.violations.push_back("vacuous directedness failed for " + b.str());
      for (size_t i = 0; i < below.size(); ++i)
        for (size_t j = i; j < below.size(); ++j) {
          ++r.checked;
          DirectednessResult res = downset_directedness_check(b, {below[i], below[j]});
          const auto* ub = std::get_if<UpperBoundInDownset>(&res);
          if (!ub) {
            r.violations.push_back("no common upper bound for " + below[i].str() + ", " +
                                   below[j].str() + " below " + b.str());
            continue;
          }
          if (!ball_leq(Metric::qb(), below[i], ub->bound) ||
              !ball_leq(Metric::qb(), below[j], ub->bound) ||
              !is_certified(way_below_sufficient_qb(ub->bound, b)))
            r.violations.push_back("upper bound " + ub->bound.str() + " invalid for pair " +
                                   below[i].str() + ", " + below[j].str() + " below " + b.str());
        }
    });
  }
  r.info["finite-center-balls"] = std::to_string(finite_centers);
  r.info["infinite-center-balls"] = std::to_string(infinite_centers);
  if (finite_centers == 0 || infinite_centers == 0)
    r.violations.push_back("directedness targets must cover both center kinds");
  std::sort(r.violations.begin(), r.violations.end());
  return r;
}

SuiteReport run_oracle_sanity(const RunConfig& cfg) {
  SuiteReport r{"oracle-sanity", cfg.seed, 0, {}, {}};
  put_config_info(r, cfg);
  Alphabet alpha = config_alphabet(cfg);
  std::mt19937_64 rng(cfg.seed);

  std::vector<std::pair<std::string, FinitePoset>> zoo;
  auto add = [&](const std::string& name, std::vector<std::string> labels,
                 std::vector<std::pair<size_t, size_t>> pairs) {
    for (size_t i = 0; i < labels.size(); ++i) pairs.emplace_back(i, i);
    zoo.emplace_back(name, FinitePoset::validate(std::move(labels), pairs));
  };

  for (size_t n = 1; n <= 6; ++n) {
    std::vector<std::string> labels;
    std::vector<std::pair<size_t, size_t>> pairs;
    for (size_t i = 0; i < n; ++i) {
      labels.push_back("c" + std::to_string(i));
      for (size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    }
    add("chain" + std::to_string(n), labels, pairs);
  }
  for (size_t n = 1; n <= 5; ++n) {
    std::vector<std::string> labels;
    for (size_t i = 0; i < n; ++i) labels.push_back("a" + std::to_string(i));
    add("antichain" + std::to_string(n), labels, {});
  }
  add("diamond", {"bot", "l", "r", "top"}, {{0, 1}, {0, 2}, {0, 3}, {1, 3}, {2, 3}});
  add("vee", {"bot", "l", "r"}, {{0, 1}, {0, 2}});
  add("wedge", {"l", "r", "top"}, {{0, 2}, {1, 2}});

  for (int k = 0; k < 10; ++k) {
    size_t n = 4 + rng() % 7;
    std::vector<char> strict(n * n, 0);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = i + 1; j < n; ++j)
        if (rng() % 10 < 3) strict[i * n + j] = 1;
    // Transitive closure keeps it a valid order (edges respect the index
    // order, so there are no cycles).
    for (size_t m = 0; m < n; ++m)
      for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
          if (strict[i * n + m] && strict[m * n + j]) strict[i * n + j] = 1;
    std::vector<std::string> labels;
    std::vector<std::pair<size_t, size_t>> pairs;
    for (size_t i = 0; i < n; ++i) labels.push_back("r" + std::to_string(i));
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j)
        if (strict[i * n + j]) pairs.emplace_back(i, j);
    add("random" + std::to_string(k), labels, pairs);
  }

  for (const auto& [name, p] : zoo) {
    guarded(r, name, [&] {
      ++r.checked;
      if (!p.is_dcpo()) r.violations.push_back(name + " is not a dcpo");
      ++r.checked;
      if (!p.is_continuous()) r.violations.push_back(name + " is not continuous");
      for (size_t x = 0; x < p.size(); ++x)
        for (size_t y = 0; y < p.size(); ++y) {
          ++r.checked;
          if (p.way_below(x, y) != p.leq(x, y))
            r.violations.push_back(name + ": way-below differs from leq at " + p.labels()[x] +
                                   ", " + p.labels()[y]);
        }
    });
  }
  r.info["posets"] = std::to_string(zoo.size());

  guarded(r, "ball-grids", [&] {
    std::vector<Word> small{Word::empty(alpha)};
    const std::string& syms = alpha.symbols();
    small.push_back(Word::finite(alpha, syms.substr(0, 1)));
    small.push_back(Word::finite(alpha, syms.size() > 1 ? syms.substr(0, 2) : syms + syms));
    std::vector<Ratio> small_radii{Ratio::zero(), Ratio(1, 4), Ratio(1, 2), Ratio::one()};
    for (const Metric& m : {Metric::baire(), Metric::dw(), Metric::d0(), Metric::qb()}) {
      FinitePoset p = sample_ball_poset(m, small, small_radii);
      r.checked += p.size() * p.size();
    }
  });

  std::sort(r.violations.begin(), r.violations.end());
  return r;
}

SuiteReport run_suite(const std::string& name, const RunConfig& cfg) {
  if (name == "axioms") return suite_axioms(cfg);
  if (name == "t1") return suite_t1(cfg);
  if (name == "remarks") return suite_remarks(cfg);
  if (name == "balls") return suite_balls(cfg);
  if (name == "yoneda") return suite_yoneda(cfg);
  if (name == "theorem") return suite_theorem(cfg);
  fail(ErrorCode::InvalidArgument,
       "unknown suite '" + name + "' (expected axioms, t1, remarks, balls, yoneda, theorem)");
}

}  // namespace qmw
