#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qmwords/metric.hpp"
#include "qmwords/ratio.hpp"
#include "qmwords/word.hpp"

namespace qmw {

/// A formal ball (center, radius) with radius >= 0.
struct FormalBall {
  Word center;
  Ratio radius;

  FormalBall(Word c, Ratio r);
  std::string str() const;
};

/// (x,r) <=_d (y,s) iff d(x,y) <= r - s; compared exactly as d(x,y)+s <= r.
bool ball_leq(const Metric& m, const FormalBall& b1, const FormalBall& b2);

bool ball_equal(const FormalBall& a, const FormalBall& b);

/// Strictly increasing affine index schedule f(n) = slope*n + offset,
/// slope >= 1, indices n = 0, 1, 2, ...
struct LengthSchedule {
  uint32_t slope = 1;
  uint32_t offset = 0;

  uint64_t eval(uint64_t n) const { return uint64_t(slope) * n + offset; }
  /// Smallest n with eval(n) >= target.
  uint64_t first_at_least(uint64_t target) const;
  std::string str() const;
  static LengthSchedule parse(const std::string& text);
};

/// A finitely presented word sequence.
///
/// Explicit lists denote the infinite sequence that repeats the last word
/// forever when `stabilized` is set; without the flag the list is accepted
/// as a sequence presentation only when the constant tail is visible (the
/// last two words are equal).
struct ExplicitSeq {
  std::vector<Word> words;
  bool stabilized = false;
};

/// Denotes x_n = take(target, lengths(n)); target must be infinite, so the
/// terms form a strictly ascending prefix chain.
struct PrefixSchedule {
  Word target;
  LengthSchedule lengths;
};

using SequencePresentation = std::variant<ExplicitSeq, PrefixSchedule>;

/// The n-th term of the presented sequence.
Word sequence_term(const SequencePresentation& seq, uint64_t n);

/// True iff the presented sequence is left K-Cauchy in (words, q_b).
bool is_left_k_cauchy_qb(const SequencePresentation& seq);

/// The Yoneda-limit of a left K-Cauchy presentation: the final word of a
/// stabilized explicit list, or the schedule target.  Throws NotLeftKCauchy.
Word yoneda_limit_qb(const SequencePresentation& seq);

/// Exactly evaluates inf_n sup_{m>=n} q_b(x_m, y) for each probe y via the
/// closed-form tail analysis and compares it with q_b(candidate, y);
/// mismatches are reported as violations of axiom "yoneda-limit".
AxiomReport verify_yoneda_limit(const SequencePresentation& seq, const Word& candidate,
                                const std::vector<Word>& probes);

/// Independent evaluation of inf_n sup_{m>=n} q_b(x_m, y): computes the terms
/// out to `horizon` and closes the tail from first-principles monotonicity of
/// the term sequence (ascending prefixes make the tail either constantly 1 or
/// strictly decreasing with an exact limit).  Used to cross-check
/// verify_yoneda_limit; the horizon must exceed the index where the terms
/// settle into their tail regime.
Ratio inf_sup_tail_eval(const SequencePresentation& seq, const Word& probe, uint64_t horizon);

/// An ascending chain given outright.
struct FiniteChain {
  std::vector<FormalBall> balls;
};

/// The chain ((c_n, s + c*2^-n))_n with certified radius infimum s.
/// Explicit center presentations must stabilize (flag or visible tail).
struct ParametricChain {
  SequencePresentation centers;
  Ratio radius_base;   // s, the radius infimum
  Ratio radius_coeff;  // c > 0
};

using ChainPresentation = std::variant<FiniteChain, ParametricChain>;

/// The n-th chain element (clamped to the last element of a finite chain).
FormalBall chain_element(const ChainPresentation& chain, uint64_t n);

size_t finite_chain_size(const ChainPresentation& chain);  // 0 for parametric

/// Least upper bound of a presented chain under <=_m, m in {qb, baire}:
/// (z, s) with s the radius infimum and z the Yoneda-limit of the centers.
/// Validates the ascending invariant exactly (closed form plus a sampled
/// horizon) and throws NotAscending / MalformedPresentation on bad input.
FormalBall lub_chain(const Metric& m, const ChainPresentation& chain);

/// The canonical cofinal chain below b:
///   finite center x:    ((x, r + 2^-n))_n
///   infinite center x:  ((take(x, n+1), r + 2^-n))_n
/// Every element is certified way-below b and lub_chain recovers b.  The
/// infinite case pairs the length-(n+1) prefix with slack 2^-n so that each
/// element clears the strict way-below bound d(x_n, x) < r_n - r.
ChainPresentation approximation_chain(const FormalBall& b);

/// True iff ball c upper-bounds every element of the chain (decided in
/// closed form for parametric chains).
bool upper_bounds_all_elements(const Metric& m, const ChainPresentation& chain,
                               const FormalBall& c);

struct CertifiedBelow {
  std::string pattern;  // "P1", "P2", "P1*", "P2*" (closure variants)
};
struct Refuted {
  Ratio distance;  // d(x,y)
  Ratio slack;     // r - s, may be negative
};
struct UnknownVerdict {};

/// Three-valued way-below verdict: the necessary bound d(x,y) < r-s refutes,
/// the proven sufficient families certify, everything else stays unknown.
using WayBelowVerdict = std::variant<CertifiedBelow, Refuted, UnknownVerdict>;

bool is_certified(const WayBelowVerdict& v);
bool is_refuted(const WayBelowVerdict& v);
std::string verdict_str(const WayBelowVerdict& v);

/// Refutes (b1 << b2) when d(x,y) >= r-s; never certifies.
WayBelowVerdict way_below_refute(const Metric& m, const FormalBall& b1, const FormalBall& b2);

/// Certifies (b1 << b2) in (B words, <=_qb) from the proven families:
///   P1: equal finite centers with radius(b1) > radius(b2);
///   P2: center1 = take(center2, n) for infinite center2 with
///       radius(b1) > radius(b2) + 2^-n;
/// plus the order-closure b1 <= p << q <= b2 of either family.  Returns
/// Unknown otherwise; never refutes.
WayBelowVerdict way_below_sufficient_qb(const FormalBall& b1, const FormalBall& b2);

struct WitnessFound {
  uint64_t index;
};
struct NoWitness {};
struct NotAboveB2 {};
using WitnessCheckResult = std::variant<WitnessFound, NoWitness, NotAboveB2>;

std::string witness_result_str(const WitnessCheckResult& r);

/// Instantiates the way-below quantifier on one presented chain: when
/// lub_chain(qb, D) lies above b2, searches D for the least element above b1.
/// Finite chains are scanned outright; parametric chains are scanned up to an
/// exact bound derived from the s + c*2^-n radius rule, beyond which the
/// comparison is monotone and solved in closed form.
WitnessCheckResult way_below_witness_check(const FormalBall& b1, const FormalBall& b2,
                                           const ChainPresentation& chain);

struct UpperBoundInDownset {
  FormalBall bound;
};
struct DirectednessFail {
  size_t first;
  size_t second;
};
using DirectednessResult = std::variant<UpperBoundInDownset, DirectednessFail>;

/// Produces one ball that upper-bounds every element and is itself certified
/// below b: (center, radius + e) with e from half the least certification
/// slack when the center is finite, or an element of the canonical chain when
/// the center is infinite.  Elements must each be certified below b
/// (PreconditionViolated otherwise).
DirectednessResult downset_directedness_check(const FormalBall& b,
                                              const std::vector<FormalBall>& elems);

/// Ball literal "(word, ratio)".
FormalBall parse_ball(const std::string& text, const Alphabet& alphabet);
std::string format_ball(const FormalBall& b);

/// Sequence literal: "explicit: w1 w2 ... [!]" (trailing ! marks the last
/// word as repeated forever) or "prefixes: target=<word> lengths=<schedule>".
SequencePresentation parse_sequence(const std::string& text, const Alphabet& alphabet);
std::string format_sequence(const SequencePresentation& seq);

/// Chain literal: "finite: (w1,r1) (w2,r2) ..." or
/// "param: target=<word> lengths=<schedule> radii=<s>+<c>*2^-n" or
/// "param: center=<word> radii=<s>+<c>*2^-n".
ChainPresentation parse_chain(const std::string& text, const Alphabet& alphabet);
std::string format_chain(const ChainPresentation& chain);

}  // namespace qmw
