#include "qmwords/finite_poset.hpp"

#include <algorithm>

#include "doctest.h"
#include "qmwords/error.hpp"

using namespace qmw;

namespace {

FinitePoset make(std::vector<std::string> labels, std::vector<std::pair<size_t, size_t>> pairs,
                 bool add_reflexive = true) {
  if (add_reflexive)
    for (size_t i = 0; i < labels.size(); ++i) pairs.emplace_back(i, i);
  return FinitePoset::validate(std::move(labels), pairs);
}

FinitePoset diamond() {
  return make({"bot", "l", "r", "top"}, {{0, 1}, {0, 2}, {0, 3}, {1, 3}, {2, 3}});
}

}  // namespace

TEST_CASE("validate_poset") {
  FinitePoset two = make({"bot", "top"}, {{0, 1}});
  CHECK(two.leq(0, 1));
  CHECK_FALSE(two.leq(1, 0));

  CHECK_THROWS_AS(make({"a", "b"}, {{0, 1}, {1, 0}}), Error);
  try {
    make({"a", "b"}, {{0, 1}, {1, 0}});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotAntisymmetric);
  }

  // Reflexivity is checked literally at this level.
  CHECK_THROWS_AS(FinitePoset::validate({"a"}, {}), Error);
  try {
    FinitePoset::validate({"a"}, {});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotReflexive);
  }

  CHECK_THROWS_AS(make({"a", "b", "c"}, {{0, 1}, {1, 2}}), Error);
  try {
    make({"a", "b", "c"}, {{0, 1}, {1, 2}});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotTransitive);
  }
}

TEST_CASE("directed subsets") {
  FinitePoset antichain = make({"a", "b"}, {});
  auto subsets = antichain.directed_subsets();
  CHECK(subsets == std::vector<uint32_t>{0b01, 0b10});

  FinitePoset chain2 = make({"bot", "top"}, {{0, 1}});
  CHECK(chain2.directed_subsets().size() == 3);

  FinitePoset d = diamond();
  auto ds = d.directed_subsets();
  CHECK(ds.size() == 13);
  // {l, r} has no internal upper bound; adding top repairs it.
  CHECK(std::find(ds.begin(), ds.end(), 0b0110u) == ds.end());
  CHECK(std::find(ds.begin(), ds.end(), 0b1110u) != ds.end());
}

TEST_CASE("lub") {
  FinitePoset chain2 = make({"bot", "top"}, {{0, 1}});
  CHECK(chain2.lub(0b11).value() == 1);

  FinitePoset antichain = make({"a", "b"}, {});
  CHECK_FALSE(antichain.lub(0b11).has_value());

  CHECK(diamond().lub(0b0110).value() == 3);
  CHECK_THROWS_AS(diamond().lub(0), Error);
}

TEST_CASE("dcpo, way-below, continuity on small posets") {
  for (const FinitePoset& p : {diamond(), make({"a", "b", "c"}, {}), make({"x"}, {}),
                               make({"bot", "l", "r"}, {{0, 1}, {0, 2}})}) {
    CHECK(p.is_dcpo());
    CHECK(p.is_continuous());
    for (size_t x = 0; x < p.size(); ++x)
      for (size_t y = 0; y < p.size(); ++y) CHECK(p.way_below(x, y) == p.leq(x, y));
  }
}

TEST_CASE("enumeration bound") {
  std::vector<std::string> labels;
  for (int i = 0; i < 13; ++i) labels.push_back("e" + std::to_string(i));
  FinitePoset big = make(labels, {});
  CHECK_THROWS_AS(big.directed_subsets(), Error);
  CHECK_THROWS_AS(big.is_dcpo(), Error);
  try {
    big.way_below(0, 1);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::TooLarge);
  }
}

TEST_CASE("sample_ball_poset") {
  Alphabet ab("ab");
  std::vector<Word> words{Word::empty(ab), Word::finite(ab, "a"), Word::finite(ab, "ab")};
  std::vector<Ratio> radii{Ratio::zero(), Ratio(1, 4), Ratio(1, 2), Ratio::one()};

  FinitePoset p = sample_ball_poset(Metric::qb(), words, radii);
  CHECK(p.size() == 12);
  CHECK(p.is_dcpo());
  CHECK(p.is_continuous());
  for (size_t x = 0; x < p.size(); ++x)
    for (size_t y = 0; y < p.size(); ++y) CHECK(p.way_below(x, y) == p.leq(x, y));

  for (const Metric& m : {Metric::baire(), Metric::dw(), Metric::d0()})
    CHECK(sample_ball_poset(m, words, radii).size() == 12);

  // Distinct letters at distance one in both directions: an antichain.
  std::vector<Word> pair{Word::finite(ab, "a"), Word::finite(ab, "b")};
  FinitePoset anti = sample_ball_poset(Metric::qb(), pair, {Ratio::zero()});
  CHECK(anti.size() == 2);
  CHECK_FALSE(anti.leq(0, 1));
  CHECK_FALSE(anti.leq(1, 0));

  std::vector<Ratio> many(300, Ratio::zero());
  CHECK_THROWS_AS(sample_ball_poset(Metric::qb(), words, many), Error);
}

TEST_CASE("poset text format") {
  FinitePoset d = parse_poset(
      "# a diamond\n"
      "element bot\nelement l\nelement r\nelement top\n"
      "leq bot l\nleq bot r\nleq bot top\nleq l top\nleq r top\n");
  CHECK(d.size() == 4);
  CHECK(d.is_dcpo());
  CHECK(d.is_continuous());

  // Reflexive closure is applied by the format; transitivity is not.
  FinitePoset anti = parse_poset("element a\nelement b\n");
  CHECK(anti.size() == 2);
  CHECK_THROWS_AS(parse_poset("element a\nelement b\nelement c\nleq a b\nleq b c\n"), Error);

  CHECK_THROWS_AS(parse_poset("item a\n"), Error);
  CHECK_THROWS_AS(parse_poset("element a\nleq a missing\n"), Error);
  CHECK_THROWS_AS(parse_poset("element a\nelement a\n"), Error);

  // format . parse round trip preserves the relation.
  std::string text = format_poset(d);
  FinitePoset again = parse_poset(text);
  REQUIRE(again.size() == d.size());
  for (size_t a = 0; a < d.size(); ++a)
    for (size_t b = 0; b < d.size(); ++b) CHECK(again.leq(a, b) == d.leq(a, b));
}
