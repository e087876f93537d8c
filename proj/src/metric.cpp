#include "qmwords/metric.hpp"

#include <algorithm>
#include <set>

#include "qmwords/error.hpp"

namespace qmw {

Metric Metric::sym_of(const Metric& base) {
  if (base.symmetrized_)
    fail(ErrorCode::InvalidArgument, "symmetrization of an already symmetrized metric");
  return Metric(base.kind_, true);
}

Metric Metric::from_name(const std::string& name) {
  if (name == "baire") return baire();
  if (name == "dw") return dw();
  if (name == "d0") return d0();
  if (name == "qb") return qb();
  if (name == "sym-dw") return sym_of(dw());
  if (name == "sym-d0") return sym_of(d0());
  if (name == "sym-qb") return sym_of(qb());
  fail(ErrorCode::InvalidArgument, "unknown metric: " + name);
}

std::string Metric::name() const {
  std::string base;
  switch (kind_) {
    case MetricKind::Baire: base = "baire"; break;
    case MetricKind::Dw: base = "dw"; break;
    case MetricKind::D0: base = "d0"; break;
    case MetricKind::Qb: base = "qb"; break;
  }
  return symmetrized_ ? "sym-" + base : base;
}

Ratio pow2_neg(const ExtNat& e) {
  if (e.is_infinite()) return Ratio::zero();
  return Ratio::pow2(-static_cast<long>(e.value()));
}

Ratio baire(const Word& x, const Word& y) {
  if (equals(x, y)) return Ratio::zero();
  return pow2_neg(length(lcp(x, y)));
}

Ratio dw(const Word& x, const Word& y) {
  return pow2_neg(length(lcp(x, y))) - pow2_neg(length(x));
}

Ratio d0(const Word& x, const Word& y) {
  if (is_prefix(x, y)) return Ratio::zero();
  return pow2_neg(length(lcp(x, y)));
}

Ratio qb(const Word& x, const Word& y) {
  if (is_prefix(x, y)) {
#ifdef QMW_FAULT_QB_PREFIX_FLIP
    // Fault-injection build used by the self-test harness (tests/acceptance):
    // the prefix branch deliberately returns the wrong value.
    return Ratio::one();
#else
    return pow2_neg(length(x)) - pow2_neg(length(y));
#endif
  }
  return Ratio::one();
}

Ratio dist(const Metric& m, const Word& x, const Word& y) {
  Ratio (*f)(const Word&, const Word&) = nullptr;
  switch (m.kind()) {
    case MetricKind::Baire: f = &baire; break;
    case MetricKind::Dw: f = &dw; break;
    case MetricKind::D0: f = &d0; break;
    case MetricKind::Qb: f = &qb; break;
  }
  if (!m.symmetrized()) return f(x, y);
  return f(x, y).max(f(y, x));
}

bool AxiomViolation::operator<(const AxiomViolation& o) const {
  if (axiom != o.axiom) return axiom < o.axiom;
  if (witness != o.witness) return witness < o.witness;
  return detail < o.detail;
}

void AxiomReport::sort_violations() {
  std::sort(violations.begin(), violations.end());
  violations.erase(std::unique(violations.begin(), violations.end()), violations.end());
}

AxiomReport check_quasi_metric_axioms(const Metric& m, const std::vector<WordTriple>& corpus) {
  if (corpus.empty()) fail(ErrorCode::InvalidArgument, "empty corpus");
  AxiomReport report;
  std::set<std::pair<std::string, std::string>> pairs_seen;
  const bool check_symmetry = m.kind() == MetricKind::Baire || m.symmetrized();
  for (const auto& t : corpus) {
    const Word& x = t[0];
    const Word& y = t[1];
    const Word& z = t[2];
    std::string fx = format_word(x), fy = format_word(y);
    if (pairs_seen.emplace(fx, fy).second) {
      ++report.checked;
      Ratio dxy = dist(m, x, y);
      Ratio dyx = dist(m, y, x);
      bool eq = equals(x, y);
      bool both_zero = dxy.is_zero() && dyx.is_zero();
      if (eq != both_zero)
        report.violations.push_back(
            {"(i)", {fx, fy}, "d(x,y)=" + dxy.str() + " d(y,x)=" + dyx.str()});
      if (check_symmetry && !(dxy == dyx))
        report.violations.push_back(
            {"symmetry", {fx, fy}, "d(x,y)=" + dxy.str() + " d(y,x)=" + dyx.str()});
    }
    ++report.checked;
    Ratio dxy = dist(m, x, y);
    Ratio dxz = dist(m, x, z);
    Ratio dzy = dist(m, z, y);
    if (dxy > dxz + dzy)
      report.violations.push_back({"(ii)",
                                   {fx, fy, format_word(z)},
                                   "d(x,y)=" + dxy.str() + " > " + (dxz + dzy).str()});
  }
  report.sort_violations();
  return report;
}

AxiomReport check_t1(const Metric& m, const std::vector<WordPair>& corpus) {
  if (corpus.empty()) fail(ErrorCode::InvalidArgument, "empty corpus");
  AxiomReport report;
  for (const auto& p : corpus) {
    ++report.checked;
    const Word& x = p[0];
    const Word& y = p[1];
    Ratio d = dist(m, x, y);
    if (equals(x, y) != d.is_zero())
      report.violations.push_back({"(i')", {format_word(x), format_word(y)}, "d(x,y)=" + d.str()});
  }
  report.sort_violations();
  return report;
}

}  // namespace qmw
