#pragma once

#include <array>
#include <string>
#include <vector>

#include "qmwords/ratio.hpp"
#include "qmwords/word.hpp"

namespace qmw {

enum class MetricKind { Baire, Dw, D0, Qb };

/// A distance on words: one of the four base distances, optionally
/// symmetrized.  Symmetrizing twice is rejected (d^s is already a metric).
class Metric {
 public:
  static Metric baire() { return Metric(MetricKind::Baire, false); }
  static Metric dw() { return Metric(MetricKind::Dw, false); }
  static Metric d0() { return Metric(MetricKind::D0, false); }
  static Metric qb() { return Metric(MetricKind::Qb, false); }

  /// d^s(x,y) = max{d(x,y), d(y,x)}.  Throws InvalidArgument when `base`
  /// is already symmetrized.
  static Metric sym_of(const Metric& base);

  /// Names accepted by the CLI: baire, dw, d0, qb, sym-dw, sym-d0, sym-qb.
  static Metric from_name(const std::string& name);
  std::string name() const;

  MetricKind kind() const { return kind_; }
  bool symmetrized() const { return symmetrized_; }

  bool operator==(const Metric& o) const = default;

 private:
  Metric(MetricKind k, bool s) : kind_(k), symmetrized_(s) {}
  MetricKind kind_;
  bool symmetrized_;
};

/// 2^-e with the convention 2^-inf = 0.
Ratio pow2_neg(const ExtNat& e);

/// d_B(x,y) = 2^-l(x lcp y), 0 on equal words.
Ratio baire(const Word& x, const Word& y);

/// d_w(x,y) = 2^-l(x lcp y) - 2^-l(x).
Ratio dw(const Word& x, const Word& y);

/// d_0(x,y) = 0 when x is a prefix of y, else 2^-l(x lcp y).
Ratio d0(const Word& x, const Word& y);

/// q_b(x,y) = 2^-l(x) - 2^-l(y) when x is a prefix of y, else 1.
Ratio qb(const Word& x, const Word& y);

Ratio dist(const Metric& m, const Word& x, const Word& y);

struct AxiomViolation {
  std::string axiom;                 // "(i)", "(ii)", "(i')", "symmetry"
  std::vector<std::string> witness;  // formatted words
  std::string detail;

  bool operator<(const AxiomViolation& o) const;
  bool operator==(const AxiomViolation& o) const = default;
};

/// Outcome of an exhaustive axiom run: violations are data, not errors.
struct AxiomReport {
  size_t checked = 0;
  std::vector<AxiomViolation> violations;

  bool passed() const { return violations.empty(); }
  void sort_violations();
};

using WordTriple = std::array<Word, 3>;
using WordPair = std::array<Word, 2>;

/// Checks axiom (i) x=y <=> d(x,y)=d(y,x)=0 over the distinct pairs occurring
/// in the triples and axiom (ii) d(x,y) <= d(x,z)+d(z,y) over every triple.
/// For d_B, symmetry d(x,y)=d(y,x) is checked as well.
AxiomReport check_quasi_metric_axioms(const Metric& m, const std::vector<WordTriple>& corpus);

/// Checks the T1 axiom (i') x=y <=> d(x,y)=0 over the pairs.
AxiomReport check_t1(const Metric& m, const std::vector<WordPair>& corpus);

}  // namespace qmw
