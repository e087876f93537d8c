#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qmwords/formal_ball.hpp"
#include "qmwords/metric.hpp"

namespace qmw {

/// An explicit finite poset used as a brute-force oracle for the order
/// machinery.  Construction validates reflexivity, antisymmetry and
/// transitivity literally and reports a witness on failure.
class FinitePoset {
 public:
  /// Directed-subset enumeration walks all 2^n subsets; posets beyond this
  /// bound can still be validated but refuse the enumeration operations.
  static constexpr size_t kEnumerationBound = 12;
  /// Validation-only bound (order axioms scale as n^3 on a bit matrix).
  static constexpr size_t kValidationBound = 512;

  static FinitePoset validate(std::vector<std::string> elements,
                              const std::vector<std::pair<size_t, size_t>>& leq_pairs);

  size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  bool leq(size_t a, size_t b) const { return leq_[a * size() + b]; }

  /// All non-empty subsets in which every pair has an upper bound inside the
  /// subset, as bitmasks.  Throws TooLarge past kEnumerationBound.
  std::vector<uint32_t> directed_subsets() const;

  /// Least upper bound of a non-empty subset, or nullopt.
  std::optional<size_t> lub(uint32_t subset_mask) const;

  bool is_dcpo() const;
  bool way_below(size_t x, size_t y) const;
  bool is_continuous() const;

 private:
  struct DirectedInfo {
    uint32_t mask;
    std::optional<size_t> lub;
  };

  FinitePoset(std::vector<std::string> labels, std::vector<char> leq)
      : labels_(std::move(labels)), leq_(std::move(leq)) {}
  const std::vector<DirectedInfo>& directed_cache() const;
  bool subset_directed(uint32_t mask) const;

  std::vector<std::string> labels_;
  std::vector<char> leq_;  // row-major adjacency
  // Directed subsets with their lubs, enumerated on first use.  The poset is
  // immutable; the cache only memoizes.
  mutable std::shared_ptr<const std::vector<DirectedInfo>> directed_;
};

/// The poset of formal balls (w, r) for every word and radius in the grids,
/// ordered by ball_leq under the metric.  Fails with an order-axiom witness
/// if ball_leq is not a partial order on the sample (it must be).
FinitePoset sample_ball_poset(const Metric& m, const std::vector<Word>& words,
                              const std::vector<Ratio>& radii);

/// Poset text format: one `element <label>` line per element and one
/// `leq <a> <b>` line per related pair; `#` starts a comment.  Reflexive
/// pairs may be omitted (closure is applied before validation); missing
/// transitive pairs are reported, not repaired.
FinitePoset parse_poset(const std::string& text);
std::string format_poset(const FinitePoset& p);

}  // namespace qmw
