#include "qmwords/formal_ball.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "qmwords/error.hpp"

namespace qmw {

FormalBall::FormalBall(Word c, Ratio r) : center(std::move(c)), radius(std::move(r)) {
  if (radius.is_negative()) fail(ErrorCode::InvalidArgument, "ball radius must be >= 0");
}

std::string FormalBall::str() const { return format_ball(*this); }

bool ball_leq(const Metric& m, const FormalBall& b1, const FormalBall& b2) {
  // d(x,y) <= r - s, rearranged to avoid negative intermediates.
  return dist(m, b1.center, b2.center) + b2.radius <= b1.radius;
}

bool ball_equal(const FormalBall& a, const FormalBall& b) {
  return a.radius == b.radius && equals(a.center, b.center);
}

uint64_t LengthSchedule::first_at_least(uint64_t target) const {
  if (offset >= target) return 0;
  return (target - offset + slope - 1) / slope;
}

std::string LengthSchedule::str() const {
  std::string out;
  if (slope != 1) out += std::to_string(slope);
  out += "n";
  if (offset != 0) out += "+" + std::to_string(offset);
  return out;
}

LengthSchedule LengthSchedule::parse(const std::string& text) {
  size_t i = 0;
  auto read_int = [&]() -> uint32_t {
    size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == start)
      fail(ErrorCode::ParseError, "expected digits in length schedule", static_cast<long>(i));
    return static_cast<uint32_t>(std::stoul(text.substr(start, i - start)));
  };
  LengthSchedule s;
  if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) s.slope = read_int();
  if (i >= text.size() || text[i] != 'n')
    fail(ErrorCode::ParseError, "expected 'n' in length schedule", static_cast<long>(i));
  ++i;
  if (i < text.size()) {
    if (text[i] != '+')
      fail(ErrorCode::ParseError, "expected '+' in length schedule", static_cast<long>(i));
    ++i;
    s.offset = read_int();
  }
  if (i != text.size())
    fail(ErrorCode::ParseError, "trailing characters in length schedule", static_cast<long>(i));
  if (s.slope == 0) fail(ErrorCode::ParseError, "length schedule slope must be >= 1");
  return s;
}

namespace {

const ExplicitSeq* as_explicit(const SequencePresentation& seq) {
  return std::get_if<ExplicitSeq>(&seq);
}
const PrefixSchedule* as_schedule(const SequencePresentation& seq) {
  return std::get_if<PrefixSchedule>(&seq);
}

void validate_sequence(const SequencePresentation& seq) {
  if (const auto* e = as_explicit(seq)) {
    if (e->words.empty())
      fail(ErrorCode::MalformedPresentation, "explicit sequence must be non-empty");
    return;
  }
  if (!as_schedule(seq)->target.is_infinite())
    fail(ErrorCode::MalformedPresentation, "prefix schedule target must be infinite");
}

// A sequence presentation denotes an eventually constant explicit list or a
// strictly ascending prefix chain; either way the terms ascend under the
// prefix order from some index on.
bool explicit_tail_stabilizes(const ExplicitSeq& e) {
  if (e.stabilized) return true;
  size_t n = e.words.size();
  return n >= 2 && equals(e.words[n - 1], e.words[n - 2]);
}

}  // namespace

Word sequence_term(const SequencePresentation& seq, uint64_t n) {
  validate_sequence(seq);
  if (const auto* e = as_explicit(seq)) {
    size_t i = n < e->words.size() ? static_cast<size_t>(n) : e->words.size() - 1;
    return e->words[i];
  }
  const auto* p = as_schedule(seq);
  return p->target.take(p->lengths.eval(n));
}

bool is_left_k_cauchy_qb(const SequencePresentation& seq) {
  validate_sequence(seq);
  if (const auto* e = as_explicit(seq)) return explicit_tail_stabilizes(*e);
  return true;  // ascending prefixes with lengths -> infinity
}

Word yoneda_limit_qb(const SequencePresentation& seq) {
  if (!is_left_k_cauchy_qb(seq))
    fail(ErrorCode::NotLeftKCauchy, "sequence presentation is not left K-Cauchy");
  if (const auto* e = as_explicit(seq)) return e->words.back();
  return as_schedule(seq)->target;
}

namespace {

// inf_n sup_{m>=n} q_b(x_m, y) in closed form, from the tail regime of the
// presented terms.
Ratio inf_sup_closed_form(const SequencePresentation& seq, const Word& probe) {
  if (const auto* e = as_explicit(seq)) return qb(e->words.back(), probe);
  const auto* p = as_schedule(seq);
  // The terms are strictly ascending prefixes of the target.  Against the
  // target the tail sup is 2^-f(n), with infimum 0; against any other word
  // some term stops being a prefix, pinning every tail sup at 1.
  return equals(probe, p->target) ? Ratio::zero() : Ratio::one();
}

}  // namespace

AxiomReport verify_yoneda_limit(const SequencePresentation& seq, const Word& candidate,
                                const std::vector<Word>& probes) {
  if (!is_left_k_cauchy_qb(seq))
    fail(ErrorCode::NotLeftKCauchy, "sequence presentation is not left K-Cauchy");
  AxiomReport report;
  for (const Word& y : probes) {
    ++report.checked;
    Ratio lhs = qb(candidate, y);
    Ratio rhs = inf_sup_closed_form(seq, y);
    if (!(lhs == rhs))
      report.violations.push_back({"yoneda-limit",
                                   {format_word(y)},
                                   "inf-sup = " + rhs.str() + " but q_b(L,y) = " + lhs.str()});
  }
  report.sort_violations();
  return report;
}

Ratio inf_sup_tail_eval(const SequencePresentation& seq, const Word& probe, uint64_t horizon) {
  if (!is_left_k_cauchy_qb(seq))
    fail(ErrorCode::NotLeftKCauchy, "sequence presentation is not left K-Cauchy");
  uint64_t h = horizon;
  if (const auto* e = as_explicit(seq)) h = std::max<uint64_t>(h, e->words.size() + 1);
  std::vector<Ratio> terms;
  terms.reserve(h + 1);
  for (uint64_t m = 0; m <= h; ++m) terms.push_back(qb(sequence_term(seq, m), probe));

  // sup over [n, h] by a suffix maximum.
  std::vector<Ratio> suffix_max(terms);
  for (size_t m = terms.size(); m-- > 1;)
    suffix_max[m - 1] = suffix_max[m - 1].max(suffix_max[m]);

  if (as_explicit(seq)) {
    // Terms are constant past the end of the list, so every tail sup is
    // already witnessed within the horizon.
    Ratio best = suffix_max[0];
    for (const Ratio& s : suffix_max) best = best.min(s);
    return best;
  }

  const auto* p = as_schedule(seq);
  const Word last = sequence_term(seq, h);
  if (!is_prefix(last, probe)) {
    // Once a term fails to be a prefix of the probe every later term fails
    // too, so every tail window contains a term equal to 1.
    if (!(suffix_max.back() == Ratio::one()))
      fail(ErrorCode::OrderAxiomViolation, "tail evaluation lost its non-prefix witness");
    return Ratio::one();
  }
  // All evaluated terms are prefixes of the probe.  A finite probe cannot
  // absorb arbitrarily long prefixes, so the horizon must reach past it.
  if (!probe.is_infinite() && p->lengths.eval(h) <= probe.length().value())
    fail(ErrorCode::InvalidArgument, "horizon too small for probe length");
  if (equals(probe, p->target)) {
    // Prefix terms shrink strictly, so each tail sup is its first term and
    // the sups tend to 0 exactly.
    for (size_t m = 0; m + 1 < terms.size(); ++m)
      if (!(terms[m] > terms[m + 1]))
        fail(ErrorCode::OrderAxiomViolation, "tail evaluation expected decreasing terms");
    return Ratio::zero();
  }
  // Infinite probe distinct from the target: the words disagree at some
  // finite position, so prefixes eventually fail and every tail sup is 1.
  return Ratio::one();
}

namespace {

// -------- exact tail arithmetic for parametric chains --------
//
// Everything below decides statements about phi(n) = alpha*2^-n +
// beta*2^-(slope*n+offset) over all n in one of two forms: "phi(n) <= gamma
// for every n >= n0" and "least n >= n0 with phi(n) <= gamma".  The step
// difference phi(n+1)-phi(n) changes sign at most once, so phi is monotone
// beyond a computable pivot and tends to 0; a finite scan plus the monotone
// tail settles both questions exactly.

struct GeomTerm {
  Ratio alpha;
  Ratio beta;
  LengthSchedule f;

  Ratio eval(uint64_t n) const {
    Ratio value = alpha * Ratio::pow2(-static_cast<long>(n));
    if (!beta.is_zero()) value = value + beta * Ratio::pow2(-static_cast<long>(f.eval(n)));
    return value;
  }

  // First index from which phi is monotone.
  uint64_t pivot() const {
    if (alpha.is_zero() || beta.is_zero()) return 0;
    if (alpha.is_negative() == beta.is_negative()) return 0;
    if (f.slope == 1) return 0;  // step sign is constant
    // Step sign flips where h(n) = -alpha/2 - beta*(1-2^-a)*2^((1-a)n-b)
    // reaches the sign of -alpha/2; h is monotone in n.
    Ratio k = beta * (Ratio::one() - Ratio::pow2(-static_cast<long>(f.slope)));
    bool target_negative = !alpha.is_negative();  // sign of -alpha/2
    for (uint64_t n = 0;; ++n) {
      long e = static_cast<long>(1 - static_cast<long>(f.slope)) * static_cast<long>(n) -
               static_cast<long>(f.offset);
      Ratio h = Ratio::zero() - alpha.half() - k * Ratio::pow2(e);
      if (h.is_zero() || h.is_negative() == target_negative) return n;
      assert(n < 100000 && "pivot search runaway");
    }
  }
};

bool geom_all_leq(const GeomTerm& g, uint64_t n0, const Ratio& gamma) {
  uint64_t p = std::max(n0, g.pivot());
  for (uint64_t n = n0; n <= p; ++n)
    if (g.eval(n) > gamma) return false;
  Ratio t1 = g.eval(p + 1);
  if (t1 > gamma) return false;
  // Monotone tail with limit 0: positive values decrease (max already
  // checked at p+1), negative values increase toward 0.
  if (t1.is_negative()) return !gamma.is_negative();
  return true;
}

std::optional<uint64_t> geom_first_leq(const GeomTerm& g, uint64_t n0, const Ratio& gamma) {
  uint64_t p = std::max(n0, g.pivot());
  for (uint64_t n = n0; n <= p + 1; ++n)
    if (g.eval(n) <= gamma) return n;
  Ratio t1 = g.eval(p + 1);  // > gamma here
  if (t1.is_negative() || t1.is_zero()) return std::nullopt;  // tail rises toward 0
  // Positive decreasing tail: solvable iff gamma is positive, and then the
  // envelope (|alpha|+|beta|)*2^-n bounds the first solution.
  if (gamma.is_negative() || gamma.is_zero()) return std::nullopt;
  Ratio envelope = g.alpha.abs() + g.beta.abs();
  uint64_t cap = static_cast<uint64_t>(std::max<long>(0, (envelope / gamma).ceil_log2()));
  for (uint64_t n = p + 2; n <= std::max(p + 2, cap); ++n)
    if (g.eval(n) <= gamma) return n;
  assert(false && "geom_first_leq envelope bound missed");
  return std::nullopt;
}

const FiniteChain* as_finite(const ChainPresentation& chain) {
  return std::get_if<FiniteChain>(&chain);
}
const ParametricChain* as_param(const ChainPresentation& chain) {
  return std::get_if<ParametricChain>(&chain);
}

void validate_chain_shape(const ChainPresentation& chain) {
  if (const auto* fc = as_finite(chain)) {
    if (fc->balls.empty()) fail(ErrorCode::MalformedPresentation, "finite chain must be non-empty");
    return;
  }
  const auto* pc = as_param(chain);
  validate_sequence(pc->centers);
  if (pc->radius_coeff <= Ratio::zero())
    fail(ErrorCode::MalformedPresentation, "parametric chain radius coefficient must be > 0");
  if (pc->radius_base.is_negative())
    fail(ErrorCode::MalformedPresentation, "parametric chain radius base must be >= 0");
  if (const auto* e = as_explicit(pc->centers)) {
    if (!explicit_tail_stabilizes(*e))
      fail(ErrorCode::MalformedPresentation, "parametric chain centers must stabilize");
  }
}

Metric require_lub_metric(const Metric& m) {
  if (m.symmetrized() || (m.kind() != MetricKind::Qb && m.kind() != MetricKind::Baire))
    fail(ErrorCode::InvalidArgument, "chain lubs are defined for qb and baire only");
  return m;
}

constexpr uint64_t kValidationHorizon = 64;

}  // namespace

FormalBall chain_element(const ChainPresentation& chain, uint64_t n) {
  validate_chain_shape(chain);
  if (const auto* fc = as_finite(chain)) {
    size_t i = n < fc->balls.size() ? static_cast<size_t>(n) : fc->balls.size() - 1;
    return fc->balls[i];
  }
  const auto* pc = as_param(chain);
  return FormalBall(sequence_term(pc->centers, n),
                    pc->radius_base + pc->radius_coeff * Ratio::pow2(-static_cast<long>(n)));
}

size_t finite_chain_size(const ChainPresentation& chain) {
  const auto* fc = as_finite(chain);
  return fc ? fc->balls.size() : 0;
}

FormalBall lub_chain(const Metric& metric, const ChainPresentation& chain) {
  const Metric m = require_lub_metric(metric);
  validate_chain_shape(chain);
  if (const auto* fc = as_finite(chain)) {
    for (size_t i = 0; i + 1 < fc->balls.size(); ++i)
      if (!ball_leq(m, fc->balls[i], fc->balls[i + 1]))
        fail(ErrorCode::NotAscending,
             "finite chain not ascending at index " + std::to_string(i) + ": " +
                 fc->balls[i].str() + " !<= " + fc->balls[i + 1].str());
    return fc->balls.back();
  }

  const auto* pc = as_param(chain);
  const Ratio& s = pc->radius_base;
  const Ratio& c = pc->radius_coeff;

  // Ascending means d(c_n, c_{n+1}) <= c*2^-(n+1) for every n.
  if (const auto* e = as_explicit(pc->centers)) {
    for (uint64_t n = 0; n + 1 < e->words.size(); ++n)
      if (!ball_leq(m, chain_element(chain, n), chain_element(chain, n + 1)))
        fail(ErrorCode::NotAscending,
             "parametric chain not ascending at index " + std::to_string(n));
    // Beyond the list the centers are constant and d(C,C)=0.
  } else {
    const auto* p = as_schedule(pc->centers);
    // d(c_n, c_{n+1}) = K*2^-f(n) with K = 1-2^-a under qb and K = 1 under
    // baire; the requirement is K*2^-f(n) - (c/2)*2^-n <= 0 for every n.
    Ratio k = m.kind() == MetricKind::Qb
                  ? Ratio::one() - Ratio::pow2(-static_cast<long>(p->lengths.slope))
                  : Ratio::one();
    GeomTerm g{Ratio::zero() - c.half(), k, p->lengths};
    if (!geom_all_leq(g, 0, Ratio::zero()))
      fail(ErrorCode::NotAscending,
           "parametric chain not ascending under " + m.name() + " for schedule " +
               p->lengths.str());
    for (uint64_t n = 0; n <= kValidationHorizon; ++n)
      if (!ball_leq(m, chain_element(chain, n), chain_element(chain, n + 1)))
        fail(ErrorCode::NotAscending,
             "parametric chain not ascending at sampled index " + std::to_string(n));
  }

  Word z = yoneda_limit_qb(pc->centers);
  FormalBall lub(std::move(z), s);
  for (uint64_t n = 0; n <= kValidationHorizon; ++n)
    if (!ball_leq(m, chain_element(chain, n), lub))
      fail(ErrorCode::OrderAxiomViolation,
           "chain lub fails to dominate element " + std::to_string(n));
  return lub;
}

ChainPresentation approximation_chain(const FormalBall& b) {
  if (b.center.is_infinite()) {
    // ((take(x, n+1), r + 2^-n))_n: prefix length n+1 against slack 2^-n
    // keeps d(x_{n+1}, x) = 2^-(n+1) strictly below the radius gap.
    return ParametricChain{PrefixSchedule{b.center, LengthSchedule{1, 1}}, b.radius, Ratio::one()};
  }
  return ParametricChain{ExplicitSeq{{b.center}, true}, b.radius, Ratio::one()};
}

bool upper_bounds_all_elements(const Metric& metric, const ChainPresentation& chain,
                               const FormalBall& cb) {
  const Metric m = require_lub_metric(metric);
  validate_chain_shape(chain);
  if (const auto* fc = as_finite(chain)) {
    for (const FormalBall& e : fc->balls)
      if (!ball_leq(m, e, cb)) return false;
    return true;
  }
  const auto* pc = as_param(chain);
  // Condition: d(c_n, w) - c*2^-n <= s - t for every n.
  const Ratio g_limit = pc->radius_base - cb.radius;

  if (const auto* e = as_explicit(pc->centers)) {
    for (uint64_t n = 0; n < e->words.size(); ++n)
      if (!ball_leq(m, chain_element(chain, n), cb)) return false;
    // Constant tail: terms d(C,w) - c*2^-n rise toward d(C,w).
    Ratio d = dist(m, e->words.back(), cb.center);
    return d <= g_limit;
  }

  const auto* p = as_schedule(pc->centers);
  if (equals(cb.center, p->target)) {
    // Every term is a proper prefix of w: d = 2^-f(n) for both metrics
    // (2^-l(w) vanishes).  Need 2^-f(n) - c*2^-n <= s - t for every n.
    GeomTerm g{Ratio::zero() - pc->radius_coeff, Ratio::one(), p->lengths};
    return geom_all_leq(g, 0, g_limit);
  }
  // The centers agree with w only up to k = l(lcp(target, w)); scan that
  // far directly, then the distance is constant.
  uint64_t k = length(lcp(p->target, cb.center)).value();
  uint64_t tail_start = p->lengths.first_at_least(k + 1);
  for (uint64_t n = 0; n < tail_start; ++n)
    if (!ball_leq(m, chain_element(chain, n), cb)) return false;
  Ratio d = dist(m, sequence_term(pc->centers, tail_start), cb.center);
  GeomTerm g{Ratio::zero() - pc->radius_coeff, Ratio::zero(), p->lengths};
  return geom_all_leq(g, tail_start, g_limit - d);
}

bool is_certified(const WayBelowVerdict& v) { return std::holds_alternative<CertifiedBelow>(v); }
bool is_refuted(const WayBelowVerdict& v) { return std::holds_alternative<Refuted>(v); }

std::string verdict_str(const WayBelowVerdict& v) {
  if (const auto* c = std::get_if<CertifiedBelow>(&v)) return "certified-below(" + c->pattern + ")";
  if (const auto* r = std::get_if<Refuted>(&v))
    return "refuted(d=" + r->distance.str() + ", slack=" + r->slack.str() + ")";
  return "unknown";
}

WayBelowVerdict way_below_refute(const Metric& m, const FormalBall& b1, const FormalBall& b2) {
  Ratio d = dist(m, b1.center, b2.center);
  Ratio slack = b1.radius - b2.radius;
  if (d >= slack) return Refuted{d, slack};
  return UnknownVerdict{};
}

namespace {

// Threshold T with the property that T < r1 - r2 certifies b1 << b2 through
// the proven families and their order closure.  See
// way_below_sufficient_qb for the pattern labels.
Ratio closure_threshold(const FormalBall& b1, const FormalBall& b2) {
  if (b1.center.is_infinite() && b2.center.is_infinite() && equals(b1.center, b2.center))
    return Ratio::one();  // no finite-prefix hop exists between equal infinite centers
  return qb(b1.center, b2.center);
}

}  // namespace

WayBelowVerdict way_below_sufficient_qb(const FormalBall& b1, const FormalBall& b2) {
  require_same_alphabet(b1.center, b2.center);
  Ratio threshold = closure_threshold(b1, b2);
  if (!(threshold < b1.radius - b2.radius)) return UnknownVerdict{};
  std::string pattern;
  if (!b2.center.is_infinite())
    pattern = equals(b1.center, b2.center) ? "P1" : "P1*";
  else
    pattern = (!b1.center.is_infinite() && is_prefix(b1.center, b2.center)) ? "P2" : "P2*";
  return CertifiedBelow{pattern};
}

std::string witness_result_str(const WitnessCheckResult& r) {
  if (const auto* w = std::get_if<WitnessFound>(&r))
    return "witness-found(" + std::to_string(w->index) + ")";
  if (std::holds_alternative<NoWitness>(r)) return "no-witness";
  return "not-above-b2";
}

WitnessCheckResult way_below_witness_check(const FormalBall& b1, const FormalBall& b2,
                                           const ChainPresentation& chain) {
  FormalBall lub = lub_chain(Metric::qb(), chain);
  if (!ball_leq(Metric::qb(), b2, lub)) return NotAboveB2{};

  if (const auto* fc = as_finite(chain)) {
    for (size_t i = 0; i < fc->balls.size(); ++i)
      if (ball_leq(Metric::qb(), b1, fc->balls[i])) return WitnessFound{i};
    return NoWitness{};
  }

  const auto* pc = as_param(chain);
  const Ratio budget = b1.radius - pc->radius_base;  // need q_b(w, c_n) + c*2^-n <= budget

  if (const auto* e = as_explicit(pc->centers)) {
    for (uint64_t n = 0; n < e->words.size(); ++n)
      if (ball_leq(Metric::qb(), b1, chain_element(chain, n))) return WitnessFound{n};
    Ratio q = qb(b1.center, e->words.back());
    GeomTerm g{pc->radius_coeff, Ratio::zero(), LengthSchedule{}};
    auto n = geom_first_leq(g, e->words.size(), budget - q);
    if (n) return WitnessFound{*n};
    return NoWitness{};
  }

  const auto* p = as_schedule(pc->centers);
  const Word& w = b1.center;
  if (!w.is_infinite() && is_prefix(w, p->target)) {
    uint64_t tail_start = p->lengths.first_at_least(w.length().value());
    for (uint64_t n = 0; n < tail_start; ++n)
      if (ball_leq(Metric::qb(), b1, chain_element(chain, n))) return WitnessFound{n};
    // For f(n) >= l(w): q_b(w, c_n) = 2^-l(w) - 2^-f(n), so the requirement
    // is c*2^-n - 2^-f(n) <= budget - 2^-l(w).
    GeomTerm g{pc->radius_coeff, Ratio(-1), p->lengths};
    Ratio gamma = budget - Ratio::pow2(-static_cast<long>(w.length().value()));
    auto n = geom_first_leq(g, tail_start, gamma);
    if (n) return WitnessFound{*n};
    return NoWitness{};
  }
  // w is never a prefix of a chain center: q_b(w, c_n) = 1 throughout.
  GeomTerm g{pc->radius_coeff, Ratio::zero(), LengthSchedule{}};
  auto n = geom_first_leq(g, 0, budget - Ratio::one());
  if (n) return WitnessFound{*n};
  return NoWitness{};
}

DirectednessResult downset_directedness_check(const FormalBall& b,
                                              const std::vector<FormalBall>& elems) {
  std::vector<Ratio> slacks;
  slacks.reserve(elems.size());
  for (size_t i = 0; i < elems.size(); ++i) {
    if (!is_certified(way_below_sufficient_qb(elems[i], b)))
      fail(ErrorCode::PreconditionViolated,
           "element " + std::to_string(i) + " = " + elems[i].str() +
               " is not certified below " + b.str());
    slacks.push_back(elems[i].radius - b.radius - closure_threshold(elems[i], b));
  }

  if (!b.center.is_infinite()) {
    // Half the least Lemma-1 slack keeps (x, r+e) above every element and
    // strictly below b.
    Ratio epsilon = Ratio::one();
    for (const Ratio& s : slacks) epsilon = epsilon.min(s.half());
    FormalBall bound(b.center, b.radius + epsilon);
    for (size_t i = 0; i < elems.size(); ++i)
      if (!ball_leq(Metric::qb(), elems[i], bound)) return DirectednessFail{i, i};
    return UpperBoundInDownset{bound};
  }

  // Infinite center: walk the canonical chain below b far enough to dominate
  // every element; such an index exists because each element is way-below b
  // and the chain's lub is b.
  ChainPresentation chain = approximation_chain(b);
  uint64_t best = 0;
  for (size_t i = 0; i < elems.size(); ++i) {
    WitnessCheckResult r = way_below_witness_check(elems[i], b, chain);
    const auto* found = std::get_if<WitnessFound>(&r);
    if (!found) return DirectednessFail{i, i};
    best = std::max(best, found->index);
  }
  FormalBall bound = chain_element(chain, best);
  for (size_t i = 0; i < elems.size(); ++i)
    if (!ball_leq(Metric::qb(), elems[i], bound)) return DirectednessFail{i, i};
  return UpperBoundInDownset{bound};
}

// -------- literals --------

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

// key=value tokens after a literal tag.
std::string expect_kv(const std::string& tok, const std::string& key) {
  if (tok.rfind(key + "=", 0) != 0)
    fail(ErrorCode::ParseError, "expected '" + key + "=...' but got '" + tok + "'");
  return tok.substr(key.size() + 1);
}

}  // namespace

FormalBall parse_ball(const std::string& text, const Alphabet& alphabet) {
  std::string t = trim(text);
  if (t.size() < 2 || t.front() != '(' || t.back() != ')')
    fail(ErrorCode::ParseError, "ball literal must be parenthesized: " + text);
  std::string body = t.substr(1, t.size() - 2);
  size_t comma = body.rfind(',');
  if (comma == std::string::npos)
    fail(ErrorCode::ParseError, "ball literal needs a ',' between word and radius: " + text);
  Word center = parse_word(trim(body.substr(0, comma)), alphabet);
  Ratio radius = Ratio::parse(trim(body.substr(comma + 1)));
  if (radius.is_negative()) fail(ErrorCode::ParseError, "ball radius must be >= 0: " + text);
  return FormalBall(std::move(center), std::move(radius));
}

std::string format_ball(const FormalBall& b) {
  return "(" + format_word(b.center) + ", " + b.radius.str() + ")";
}

SequencePresentation parse_sequence(const std::string& text, const Alphabet& alphabet) {
  std::string t = trim(text);
  if (t.rfind("explicit:", 0) == 0) {
    auto toks = split_ws(t.substr(9));
    bool stabilized = false;
    if (!toks.empty() && toks.back() == "!") {
      stabilized = true;
      toks.pop_back();
    }
    if (toks.empty())
      fail(ErrorCode::MalformedPresentation, "explicit sequence must list at least one word");
    std::vector<Word> words;
    words.reserve(toks.size());
    for (const auto& tok : toks) words.push_back(parse_word(tok, alphabet));
    return ExplicitSeq{std::move(words), stabilized};
  }
  if (t.rfind("prefixes:", 0) == 0) {
    auto toks = split_ws(t.substr(9));
    if (toks.size() != 2)
      fail(ErrorCode::ParseError, "prefixes literal needs 'target=' and 'lengths='");
    Word target = parse_word(expect_kv(toks[0], "target"), alphabet);
    LengthSchedule lengths = LengthSchedule::parse(expect_kv(toks[1], "lengths"));
    if (!target.is_infinite())
      fail(ErrorCode::MalformedPresentation, "prefix schedule target must be infinite");
    return PrefixSchedule{std::move(target), lengths};
  }
  fail(ErrorCode::ParseError, "sequence literal must start with 'explicit:' or 'prefixes:'");
}

std::string format_sequence(const SequencePresentation& seq) {
  if (const auto* e = as_explicit(seq)) {
    std::string out = "explicit:";
    for (const Word& w : e->words) out += " " + format_word(w);
    if (e->stabilized) out += " !";
    return out;
  }
  const auto* p = as_schedule(seq);
  return "prefixes: target=" + format_word(p->target) + " lengths=" + p->lengths.str();
}

namespace {

// "<s>+<c>*2^-n"
std::pair<Ratio, Ratio> parse_radius_rule(const std::string& text) {
  const std::string suffix = "*2^-n";
  if (text.size() < suffix.size() || text.substr(text.size() - suffix.size()) != suffix)
    fail(ErrorCode::ParseError, "radius rule must end in '*2^-n': " + text);
  std::string head = text.substr(0, text.size() - suffix.size());
  size_t plus = head.rfind('+');
  if (plus == std::string::npos)
    fail(ErrorCode::ParseError, "radius rule must look like s+c*2^-n: " + text);
  Ratio s = Ratio::parse(trim(head.substr(0, plus)));
  Ratio c = Ratio::parse(trim(head.substr(plus + 1)));
  return {std::move(s), std::move(c)};
}

}  // namespace

ChainPresentation parse_chain(const std::string& text, const Alphabet& alphabet) {
  std::string t = trim(text);
  if (t.rfind("finite:", 0) == 0) {
    std::string rest = t.substr(7);
    std::vector<FormalBall> balls;
    size_t i = 0;
    while (i < rest.size()) {
      while (i < rest.size() && std::isspace(static_cast<unsigned char>(rest[i]))) ++i;
      if (i >= rest.size()) break;
      if (rest[i] != '(')
        fail(ErrorCode::ParseError, "expected '(' in finite chain", static_cast<long>(i));
      size_t depth = 0, start = i;
      while (i < rest.size()) {
        if (rest[i] == '(') ++depth;
        if (rest[i] == ')' && --depth == 0) break;
        ++i;
      }
      if (i >= rest.size())
        fail(ErrorCode::ParseError, "unbalanced '(' in finite chain", static_cast<long>(start));
      ++i;
      balls.push_back(parse_ball(rest.substr(start, i - start), alphabet));
    }
    if (balls.empty())
      fail(ErrorCode::MalformedPresentation, "finite chain must list at least one ball");
    return FiniteChain{std::move(balls)};
  }
  if (t.rfind("param:", 0) == 0) {
    auto toks = split_ws(t.substr(6));
    if (toks.size() == 3 && toks[0].rfind("target=", 0) == 0) {
      Word target = parse_word(expect_kv(toks[0], "target"), alphabet);
      LengthSchedule lengths = LengthSchedule::parse(expect_kv(toks[1], "lengths"));
      auto [s, c] = parse_radius_rule(expect_kv(toks[2], "radii"));
      ChainPresentation chain =
          ParametricChain{PrefixSchedule{std::move(target), lengths}, std::move(s), std::move(c)};
      validate_chain_shape(chain);
      return chain;
    }
    if (toks.size() == 2 && toks[0].rfind("center=", 0) == 0) {
      Word center = parse_word(expect_kv(toks[0], "center"), alphabet);
      auto [s, c] = parse_radius_rule(expect_kv(toks[1], "radii"));
      ChainPresentation chain =
          ParametricChain{ExplicitSeq{{std::move(center)}, true}, std::move(s), std::move(c)};
      validate_chain_shape(chain);
      return chain;
    }
    if (toks.size() == 2 && toks[0].rfind("centers=", 0) == 0) {
      // Comma-separated word list, stabilized at the last entry.
      std::string list = expect_kv(toks[0], "centers");
      std::vector<Word> words;
      size_t start = 0;
      while (start <= list.size()) {
        size_t comma = list.find(',', start);
        std::string piece =
            comma == std::string::npos ? list.substr(start) : list.substr(start, comma - start);
        if (!piece.empty()) words.push_back(parse_word(piece, alphabet));
        if (comma == std::string::npos) break;
        start = comma + 1;
      }
      auto [s, c] = parse_radius_rule(expect_kv(toks[1], "radii"));
      ChainPresentation chain =
          ParametricChain{ExplicitSeq{std::move(words), true}, std::move(s), std::move(c)};
      validate_chain_shape(chain);
      return chain;
    }
    fail(ErrorCode::ParseError,
         "param chain needs 'target=<word> lengths=<sched> radii=<rule>' or "
         "'center[s]=<word[s]> radii=<rule>'");
  }
  fail(ErrorCode::ParseError, "chain literal must start with 'finite:' or 'param:'");
}

std::string format_chain(const ChainPresentation& chain) {
  if (const auto* fc = as_finite(chain)) {
    std::string out = "finite:";
    for (const FormalBall& b : fc->balls) out += " " + format_ball(b);
    return out;
  }
  const auto* pc = as_param(chain);
  std::string rule = "radii=" + pc->radius_base.str() + "+" + pc->radius_coeff.str() + "*2^-n";
  if (const auto* p = as_schedule(pc->centers))
    return "param: target=" + format_word(p->target) + " lengths=" + p->lengths.str() + " " + rule;
  const auto* e = as_explicit(pc->centers);
  if (e->words.size() == 1) return "param: center=" + format_word(e->words[0]) + " " + rule;
  std::string list;
  for (const Word& w : e->words) {
    if (!list.empty()) list += ",";
    list += format_word(w);
  }
  return "param: centers=" + list + " " + rule;
}

}  // namespace qmw
