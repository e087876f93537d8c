#include "qmwords/word.hpp"

#include <numeric>
#include <vector>

#include "doctest.h"
#include "qmwords/error.hpp"

using namespace qmw;

namespace {

const Alphabet kAB("ab");

Word fin(const std::string& s) { return Word::finite(kAB, s); }
Word per(const std::string& pre, const std::string& p) {
  return Word::eventually_periodic(kAB, pre, p);
}

// Small corpus: all finite words of length <= 3 plus periodic words, one of
// them a non-canonical alias.
std::vector<Word> corpus() {
  std::vector<Word> out;
  std::vector<std::string> layer{""};
  for (int len = 0; len <= 3; ++len) {
    std::vector<std::string> next;
    for (const auto& s : layer) {
      out.push_back(fin(s));
      next.push_back(s + "a");
      next.push_back(s + "b");
    }
    layer = next;
  }
  out.push_back(per("", "a"));
  out.push_back(per("", "b"));
  out.push_back(per("", "ab"));
  out.push_back(per("b", "ab"));
  out.push_back(per("ab", "ab"));
  return out;
}

// Independent symbolwise comparison out to the agreement bound
// B = max preperiod + lcm of periods.
bool equals_by_scan(const Word& x, const Word& y) {
  if (x.length() != y.length()) return false;
  uint64_t bound;
  if (x.is_infinite()) {
    bound = std::max(x.preperiod().size(), y.preperiod().size()) +
            std::lcm(x.period().size(), y.period().size());
  } else {
    bound = x.length().value();
  }
  for (uint64_t i = 0; i < bound; ++i)
    if (x.symbol_at(i) != y.symbol_at(i)) return false;
  return true;
}

// Brute-force minimal lasso: the least (period length, preperiod length)
// pair that reproduces the sequence.
Word brute_canonical(const Word& w) {
  if (!w.is_infinite()) return w;
  size_t P = w.preperiod().size(), Q = w.period().size();
  for (size_t q = 1; q <= Q; ++q)
    for (size_t p = 0; p <= P + Q; ++p) {
      // (p, q) reproduces the word iff s[i] == s[i+q] for all i >= p;
      // checking i < p + lcm(Q, q) + P + Q settles it.
      uint64_t limit = p + std::lcm(Q, q) + P + Q;
      bool ok = true;
      for (uint64_t i = p; i < limit && ok; ++i)
        if (w.symbol_at(i) != w.symbol_at(i + q)) ok = false;
      if (!ok) continue;
      std::string pre, period;
      for (size_t i = 0; i < p; ++i) pre.push_back(w.symbol_at(i));
      for (size_t i = p; i < p + q; ++i) period.push_back(w.symbol_at(i));
      return Word::eventually_periodic(w.alphabet(), pre, period);
    }
  REQUIRE(false);
  return w;
}

bool structurally_equal(const Word& a, const Word& b) {
  return a.is_infinite() == b.is_infinite() && a.preperiod() == b.preperiod() &&
         a.period() == b.period();
}

}  // namespace

TEST_CASE("alphabet validation") {
  CHECK_THROWS_AS(Alphabet(""), Error);
  CHECK_THROWS_AS(Alphabet("aa"), Error);
  CHECK_THROWS_AS(Alphabet("a b"), Error);
  CHECK_THROWS_AS(Alphabet("a("), Error);
  CHECK(Alphabet("ab") == Alphabet("ab"));
  CHECK_FALSE(Alphabet("ab") == Alphabet("ba"));
}

TEST_CASE("extnat ordering") {
  CHECK(ExtNat::nat(3) < ExtNat::infinity());
  CHECK(ExtNat::nat(2) < ExtNat::nat(5));
  CHECK(ExtNat::infinity() == ExtNat::infinity());
  CHECK(ExtNat::nat(7).value() == 7);
  CHECK_THROWS_AS(ExtNat::infinity().value(), Error);
}

TEST_CASE("length") {
  CHECK(length(fin("ab")) == ExtNat::nat(2));
  CHECK(length(fin("")) == ExtNat::nat(0));
  CHECK(length(per("a", "b")) == ExtNat::infinity());
}

TEST_CASE("symbol_at") {
  CHECK(fin("ab").symbol_at(1) == 'b');
  // a.(ba)^w spells a,b,a,b,a,...; use a.(ba)^w-style positions a b a b a.
  Word w = per("a", "ba");
  CHECK(w.symbol_at(0) == 'a');
  CHECK(w.symbol_at(4) == 'a');
  CHECK(w.symbol_at(5) == 'b');
  CHECK_THROWS_AS(fin("a").symbol_at(3), Error);
}

TEST_CASE("take") {
  CHECK(structurally_equal(per("", "ab").take(3), fin("aba")));
  CHECK(structurally_equal(fin("ab").take(5), fin("ab")));
  CHECK(structurally_equal(per("", "ab").take(0), fin("")));
  CHECK_FALSE(per("", "ab").take(4).is_infinite());
}

TEST_CASE("equals") {
  CHECK(equals(per("", "ab"), per("ab", "ab")));
  CHECK(equals(fin("ab"), fin("ab")));
  CHECK_FALSE(equals(per("", "a"), fin("a")));
  CHECK_FALSE(equals(per("", "ab"), per("", "ba")));
  CHECK(equals(per("a", "ba"), per("", "ab")));
  Word other = Word::finite(Alphabet("abc"), "ab");
  CHECK_THROWS_AS(equals(fin("ab"), other), Error);
}

TEST_CASE("equals agrees with the scan oracle on all corpus pairs") {
  auto words = corpus();
  for (const Word& x : words)
    for (const Word& y : words) CHECK(equals(x, y) == equals_by_scan(x, y));
}

TEST_CASE("is_prefix") {
  CHECK(is_prefix(fin("a"), fin("ab")));
  for (const Word& w : corpus()) CHECK(is_prefix(fin(""), w));
  CHECK_FALSE(is_prefix(per("", "a"), fin("aaa")));
  CHECK(is_prefix(fin("aaa"), per("", "a")));
  CHECK(is_prefix(per("ab", "ab"), per("", "ab")));  // equal infinite words
}

TEST_CASE("lcp") {
  Alphabet abcd("abcd");
  auto w4 = [&](const std::string& s) { return Word::finite(abcd, s); };
  CHECK(format_word(lcp(w4("ab"), w4("ac"))) == "a");
  CHECK(format_word(lcp(w4("ab"), w4("cd"))) == "eps");
  CHECK(structurally_equal(lcp(fin("ab"), fin("ba")), fin("")));
  Word aw = per("", "a");
  CHECK(equals(lcp(aw, aw), aw));
  CHECK(lcp(aw, aw).is_infinite());
  // x a proper prefix of y: lcp is x itself.
  CHECK(structurally_equal(lcp(fin("a"), per("", "a")), fin("a")));
  CHECK(structurally_equal(lcp(per("", "ab"), per("", "a")), fin("a")));
}

TEST_CASE("lcp laws on the corpus") {
  auto words = corpus();
  for (const Word& x : words)
    for (const Word& y : words) {
      Word m = lcp(x, y);
      CHECK(is_prefix(m, x));
      CHECK(is_prefix(m, y));
      // Any longer common prefix bound: extending m by one symbol of x must
      // stop being a prefix of y (unless m already equals x or y).
      if (!m.is_infinite() && length(m) < length(x) && length(m) < length(y)) {
        Word ext = x.take(m.length().value() + 1);
        CHECK((is_prefix(ext, x) && !is_prefix(ext, y)));
      }
    }
}

TEST_CASE("prefix order axioms on the corpus") {
  auto words = corpus();
  for (const Word& x : words) {
    CHECK(is_prefix(x, x));
    for (const Word& y : words) {
      if (is_prefix(x, y) && is_prefix(y, x)) CHECK(equals(x, y));
      for (const Word& z : words)
        if (is_prefix(x, y) && is_prefix(y, z)) CHECK(is_prefix(x, z));
    }
  }
}

TEST_CASE("take/length coherence on the corpus") {
  auto words = corpus();
  for (const Word& w : words)
    for (uint64_t n : {0, 1, 2, 3, 5, 9}) {
      Word t = w.take(n);
      CHECK(length(t) == std::min(ExtNat::nat(n), length(w)));
      CHECK(is_prefix(t, w));
    }
}

TEST_CASE("canonicalize") {
  CHECK(structurally_equal(per("ab", "ab").canonicalize(), per("", "ab")));
  CHECK(structurally_equal(per("", "abab").canonicalize(), per("", "ab")));
  CHECK(structurally_equal(fin("ab").canonicalize(), fin("ab")));
  CHECK(structurally_equal(per("a", "ba").canonicalize(), per("", "ab")));
  CHECK(structurally_equal(per("abb", "b").canonicalize(), per("a", "b")));
}

TEST_CASE("canonicalize matches the brute-force minimal lasso") {
  auto words = corpus();
  // A few extra tangled shapes.
  words.push_back(per("abab", "ab"));
  words.push_back(per("ba", "abab"));
  words.push_back(per("bbb", "bb"));
  words.push_back(per("ab", "baba"));
  for (const Word& w : words) {
    if (!w.is_infinite()) continue;
    Word c = w.canonicalize();
    Word b = brute_canonical(w);
    CHECK(structurally_equal(c, b));
    CHECK(equals(c, w));
    CHECK(structurally_equal(c.canonicalize(), c));  // idempotent
    for (uint64_t i = 0; i < 12; ++i) CHECK(c.symbol_at(i) == w.symbol_at(i));
  }
}

TEST_CASE("parse and format") {
  CHECK(structurally_equal(parse_word("eps", kAB), fin("")));
  Alphabet big("abcdefghijklmnopqrstuvwxyz0123456789");
  Word w = parse_word("ab(cd)^w", big);
  CHECK(w.preperiod() == "ab");
  CHECK(w.period() == "cd");
  CHECK_THROWS_AS(parse_word("a(b", kAB), Error);
  CHECK_THROWS_AS(parse_word("", kAB), Error);
  CHECK_THROWS_AS(parse_word("a()^w", kAB), Error);
  CHECK_THROWS_AS(parse_word("abx", kAB), Error);
  try {
    parse_word("a(b", kAB);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParseError);
    CHECK(e.position() >= 0);
  }

  CHECK(format_word(fin("")) == "eps");
  CHECK(format_word(fin("ab")) == "ab");
  CHECK(format_word(per("", "ab")) == "(ab)^w");
  // Formatting canonicalizes.
  CHECK(format_word(per("ab", "ab")) == "(ab)^w");

  // parse . format == canonicalize, format . parse == identity on canonical
  // text.
  for (const Word& w2 : corpus()) {
    Word reparsed = parse_word(format_word(w2), kAB);
    CHECK(structurally_equal(reparsed, w2.canonicalize()));
    CHECK(format_word(reparsed) == format_word(w2));
  }
  // Parsing canonicalizes non-canonical literals.
  CHECK(structurally_equal(parse_word("ab(ab)^w", kAB), per("", "ab")));
}
