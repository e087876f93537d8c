#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace qmw {

/// An ordered set of single-character symbols.  Alphabets compare equal when
/// they declare the same symbols in the same order; word operations on
/// mismatched alphabets throw Error(AlphabetMismatch).
class Alphabet {
 public:
  /// Builds an alphabet from the given symbols.  Symbols must be printable,
  /// must not repeat, and must avoid the characters reserved by the word
  /// literal grammar: '(' ')' '^' ',' '!' '=' and whitespace.
  explicit Alphabet(const std::string& symbols);

  bool contains(char c) const;
  const std::string& symbols() const { return impl_->symbols; }
  size_t size() const { return impl_->symbols.size(); }

  bool operator==(const Alphabet& o) const { return impl_->symbols == o.impl_->symbols; }

 private:
  struct Impl {
    std::string symbols;
    bool member[256] = {};
  };
  std::shared_ptr<const Impl> impl_;
};

/// A natural number or infinity; the codomain of word length.
class ExtNat {
 public:
  static ExtNat nat(uint64_t n) { return ExtNat(n, false); }
  static ExtNat infinity() { return ExtNat(0, true); }

  bool is_infinite() const { return infinite_; }
  /// Only valid when finite.
  uint64_t value() const;

  std::strong_ordering operator<=>(const ExtNat& o) const;
  bool operator==(const ExtNat& o) const = default;

  std::string str() const;

 private:
  ExtNat(uint64_t v, bool inf) : value_(v), infinite_(inf) {}
  uint64_t value_;
  bool infinite_;
};

/// A finite word or an eventually periodic infinite word over an alphabet.
///
/// Finite words are symbol lists; infinite words are stored as a lasso
/// preperiod.(period)^w.  Words are immutable.  Construction validates
/// alphabet membership but does not canonicalize; `canonicalize()` returns
/// the structurally minimal form (shortest period, shortest preperiod),
/// which is unique per infinite sequence.
class Word {
 public:
  static Word finite(Alphabet alphabet, std::string symbols);
  static Word eventually_periodic(Alphabet alphabet, std::string preperiod, std::string period);
  static Word empty(Alphabet alphabet) { return finite(std::move(alphabet), ""); }

  bool is_infinite() const { return !period_.empty(); }
  ExtNat length() const;
  const Alphabet& alphabet() const { return alphabet_; }
  const std::string& preperiod() const { return preperiod_; }
  const std::string& period() const { return period_; }

  /// 0-based symbol access; throws Error(IndexOutOfRange) past the end.
  char symbol_at(uint64_t i) const;

  /// The finite prefix of length min(n, length()).
  Word take(uint64_t n) const;

  Word canonicalize() const;

  std::string str() const;

 private:
  Word(Alphabet a, std::string pre, std::string per)
      : alphabet_(std::move(a)), preperiod_(std::move(pre)), period_(std::move(per)) {}

  Alphabet alphabet_;
  std::string preperiod_;  // all symbols for a finite word
  std::string period_;     // empty iff the word is finite
};

ExtNat length(const Word& w);

/// Equality of the denoted sequences, decided by comparing the first
/// B symbols, B = max(preperiod lengths) + lcm(period lengths) when both
/// words are infinite.  A length mismatch short-circuits to false.
bool equals(const Word& x, const Word& y);

/// The prefix order on finite and infinite words.
bool is_prefix(const Word& x, const Word& y);

/// Longest common prefix.  Returns x itself (possibly infinite) when
/// equals(x, y); otherwise a finite word ending at the first disagreement.
Word lcp(const Word& x, const Word& y);

/// Word literal grammar: `eps`, a symbol sequence, or `pre(per)^w`.
/// The literal `eps` always denotes the empty word, so a finite word
/// spelling out "eps" over an alphabet containing e, p, s cannot be
/// round-tripped; corpus alphabets avoid the case.
/// Parsing canonicalizes; formatting emits canonical text.
Word parse_word(const std::string& text, const Alphabet& alphabet);
std::string format_word(const Word& w);

void require_same_alphabet(const Word& x, const Word& y);

}  // namespace qmw
