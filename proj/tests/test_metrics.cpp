#include "qmwords/metric.hpp"

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
  return out;
}

}  // namespace

TEST_CASE("ratio basics") {
  CHECK(Ratio(1, 2) + Ratio(1, 3) == Ratio(5, 6));
  CHECK(Ratio(3, 6).str() == "1/2");
  CHECK(Ratio(4, 2).str() == "2");
  CHECK(Ratio::parse("3/8") == Ratio(3, 8));
  CHECK(Ratio::parse("2^-3") == Ratio(1, 8));
  CHECK(Ratio::parse("0") == Ratio::zero());
  CHECK_THROWS_AS(Ratio::parse("1/0"), Error);
  CHECK_THROWS_AS(Ratio::parse("x"), Error);
  CHECK_THROWS_AS(Ratio::parse("1/2 junk"), Error);
  CHECK(Ratio(1, 4).pow2_negative_exponent().value() == 2);
  CHECK_FALSE(Ratio(1, 3).pow2_negative_exponent().has_value());
  CHECK_FALSE(Ratio(3, 4).pow2_negative_exponent().has_value());
  CHECK_FALSE(Ratio::one().pow2_negative_exponent().has_value());
  CHECK(Ratio(1, 3).is_dyadic() == false);
  CHECK(Ratio(5, 8).is_dyadic());
  CHECK(Ratio(1, 1).ceil_log2() == 0);
  CHECK(Ratio(5).ceil_log2() == 3);
  CHECK(Ratio(1, 5).ceil_log2() == -2);
  CHECK(Ratio(1, 4).ceil_log2() == -2);
  CHECK((Ratio(1, 4) - Ratio(1, 2)).is_negative());
}

TEST_CASE("pow2_neg") {
  CHECK(pow2_neg(ExtNat::nat(0)) == Ratio::one());
  CHECK(pow2_neg(ExtNat::nat(3)) == Ratio(1, 8));
  CHECK(pow2_neg(ExtNat::infinity()) == Ratio::zero());
}

TEST_CASE("baire") {
  Alphabet abcd("abcd");
  auto w4 = [&](const std::string& s) { return Word::finite(abcd, s); };
  CHECK(baire(w4("ab"), w4("ac")) == Ratio(1, 2));
  CHECK(baire(per("", "ab"), per("ab", "ab")) == Ratio::zero());
  CHECK(baire(fin("ab"), fin("ab")) == Ratio::zero());
  CHECK(baire(w4("ab"), w4("cd")) == Ratio::one());
}

TEST_CASE("dw") {
  CHECK(dw(fin("a"), fin("ab")) == Ratio::zero());
  CHECK(dw(fin("ab"), fin("a")) == Ratio(1, 4));
  CHECK(dw(per("", "a"), fin("b")) == Ratio::one());
}

TEST_CASE("d0") {
  CHECK(d0(fin("a"), fin("ab")) == Ratio::zero());
  CHECK(d0(fin("ab"), fin("a")) == Ratio(1, 2));
  CHECK(d0(fin("ba"), fin("bb")) == Ratio(1, 2));
}

TEST_CASE("qb") {
  CHECK(qb(fin("a"), fin("ab")) == Ratio(1, 4));
  CHECK(qb(fin("ab"), fin("a")) == Ratio::one());
  // eps is a prefix of every word yet its distance to an infinite word is 1.
  CHECK(qb(fin(""), per("", "a")) == Ratio::one());
  CHECK(qb(fin(""), fin("a")) == Ratio(1, 2));
}

TEST_CASE("dist dispatch and symmetrization") {
  CHECK(dist(Metric::sym_of(Metric::d0()), fin("a"), fin("ab")) == Ratio(1, 2));
  CHECK(dist(Metric::sym_of(Metric::d0()), fin("a"), fin("ab")) == baire(fin("a"), fin("ab")));
  CHECK(dist(Metric::sym_of(Metric::dw()), fin("a"), fin("ab")) == Ratio(1, 4));
  CHECK(dist(Metric::sym_of(Metric::dw()), fin("a"), fin("ab")) != baire(fin("a"), fin("ab")));
  for (const Word& w : corpus()) CHECK(dist(Metric::qb(), w, w) == Ratio::zero());
  CHECK_THROWS_AS(Metric::sym_of(Metric::sym_of(Metric::dw())), Error);
  CHECK(Metric::from_name("sym-qb").symmetrized());
  CHECK_THROWS_AS(Metric::from_name("sym-baire"), Error);
  CHECK_THROWS_AS(Metric::from_name("euclid"), Error);
  CHECK(Metric::from_name("d0").name() == "d0");
}

TEST_CASE("distances are dyadic rationals in [0,1]") {
  auto words = corpus();
  for (const char* name : {"baire", "dw", "d0", "qb", "sym-dw", "sym-d0", "sym-qb"}) {
    Metric m = Metric::from_name(name);
    for (const Word& x : words)
      for (const Word& y : words) {
        Ratio d = dist(m, x, y);
        CHECK(!d.is_negative());
        CHECK(d <= Ratio::one());
        CHECK(d.is_dyadic());
      }
  }
}

TEST_CASE("qb is zero exactly on equal words") {
  auto words = corpus();
  for (const Word& x : words)
    for (const Word& y : words) {
      CHECK((qb(x, y) == Ratio::zero()) == equals(x, y));
      if (x.is_infinite() && is_prefix(x, y)) {
        CHECK(equals(x, y));
        CHECK(qb(x, y) == Ratio::zero());
      }
    }
}

TEST_CASE("quasi-metric axioms hold exhaustively") {
  auto words = corpus();
  std::vector<WordTriple> triples;
  for (const Word& x : words)
    for (const Word& y : words)
      for (const Word& z : words) triples.push_back({x, y, z});
  for (const char* name : {"baire", "dw", "d0", "qb"}) {
    AxiomReport rep = check_quasi_metric_axioms(Metric::from_name(name), triples);
    CHECK(rep.passed());
    CHECK(rep.checked > triples.size());
  }
  CHECK_THROWS_AS(check_quasi_metric_axioms(Metric::qb(), {}), Error);
}

TEST_CASE("T1 axiom separates qb from dw and d0") {
  auto words = corpus();
  std::vector<WordPair> pairs;
  for (const Word& x : words)
    for (const Word& y : words) pairs.push_back({x, y});

  CHECK(check_t1(Metric::qb(), pairs).passed());

  for (const char* name : {"dw", "d0"}) {
    AxiomReport rep = check_t1(Metric::from_name(name), pairs);
    CHECK_FALSE(rep.passed());
    bool fixed_witness = false;
    for (const auto& v : rep.violations)
      if (v.witness[0] == "a" && v.witness[1] == "ab") fixed_witness = true;
    CHECK(fixed_witness);
  }
}

TEST_CASE("discrimination along strict prefixes") {
  auto words = corpus();
  for (const Word& x : words)
    for (const Word& y : words) {
      if (!is_prefix(x, y) || equals(x, y)) continue;
      for (const Word& z : words) {
        if (!is_prefix(y, z) || equals(y, z)) continue;
        CHECK(qb(y, z) < qb(x, z));
      }
    }
}

TEST_CASE("prefix detection away from eps") {
  auto words = corpus();
  for (const Word& x : words) {
    if (length(x) == ExtNat::nat(0)) continue;
    for (const Word& y : words) CHECK(is_prefix(x, y) == (qb(x, y) < Ratio::one()));
  }
}
