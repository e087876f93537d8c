#include "qmwords/word.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "qmwords/error.hpp"

namespace qmw {

namespace {

constexpr const char* kReserved = "(),^!= \t\r\n";

bool reserved_char(char c) {
  for (const char* p = kReserved; *p; ++p)
    if (*p == c) return true;
  return false;
}

}  // namespace

Alphabet::Alphabet(const std::string& symbols) {
  if (symbols.empty()) fail(ErrorCode::InvalidArgument, "alphabet must be non-empty");
  auto impl = std::make_shared<Impl>();
  impl->symbols = symbols;
  for (char c : symbols) {
    unsigned char u = static_cast<unsigned char>(c);
    if (!std::isprint(u) || reserved_char(c))
      fail(ErrorCode::InvalidArgument, std::string("alphabet symbol not allowed: '") + c + "'");
    if (impl->member[u])
      fail(ErrorCode::InvalidArgument, std::string("duplicate alphabet symbol: '") + c + "'");
    impl->member[u] = true;
  }
  impl_ = std::move(impl);
}

bool Alphabet::contains(char c) const { return impl_->member[static_cast<unsigned char>(c)]; }

uint64_t ExtNat::value() const {
  if (infinite_) fail(ErrorCode::InvalidArgument, "value() of infinite length");
  return value_;
}

std::strong_ordering ExtNat::operator<=>(const ExtNat& o) const {
  if (infinite_ && o.infinite_) return std::strong_ordering::equal;
  if (infinite_) return std::strong_ordering::greater;
  if (o.infinite_) return std::strong_ordering::less;
  return value_ <=> o.value_;
}

std::string ExtNat::str() const { return infinite_ ? "inf" : std::to_string(value_); }

namespace {

void check_symbols(const Alphabet& a, const std::string& s) {
  for (char c : s)
    if (!a.contains(c))
      fail(ErrorCode::AlphabetMismatch, std::string("symbol '") + c + "' not in alphabet");
}

}  // namespace

Word Word::finite(Alphabet alphabet, std::string symbols) {
  check_symbols(alphabet, symbols);
  return Word(std::move(alphabet), std::move(symbols), "");
}

Word Word::eventually_periodic(Alphabet alphabet, std::string preperiod, std::string period) {
  if (period.empty()) fail(ErrorCode::InvalidArgument, "period must be non-empty");
  check_symbols(alphabet, preperiod);
  check_symbols(alphabet, period);
  return Word(std::move(alphabet), std::move(preperiod), std::move(period));
}

ExtNat Word::length() const {
  return is_infinite() ? ExtNat::infinity() : ExtNat::nat(preperiod_.size());
}

char Word::symbol_at(uint64_t i) const {
  if (i < preperiod_.size()) return preperiod_[i];
  if (!is_infinite())
    fail(ErrorCode::IndexOutOfRange,
         "index " + std::to_string(i) + " past end of word of length " + std::to_string(preperiod_.size()));
  return period_[(i - preperiod_.size()) % period_.size()];
}

Word Word::take(uint64_t n) const {
  if (!is_infinite() && n >= preperiod_.size()) return *this;
  std::string out;
  out.reserve(n);
  for (uint64_t i = 0; i < n; ++i) out.push_back(symbol_at(i));
  return Word(alphabet_, std::move(out), "");
}

Word Word::canonicalize() const {
  if (!is_infinite()) return *this;
  // Shrink the period to its primitive root.
  std::string per = period_;
  for (size_t d = 1; d <= per.size() / 2; ++d) {
    if (per.size() % d != 0) continue;
    bool repeats = true;
    for (size_t i = d; i < per.size() && repeats; ++i)
      if (per[i] != per[i % d]) repeats = false;
    if (repeats) {
      per.resize(d);
      break;
    }
  }
  // Absorb preperiod symbols that extend a rotation of the period:
  // u.c (v0.c)^w == u (c.v0)^w.
  std::string pre = preperiod_;
  while (!pre.empty() && pre.back() == per.back()) {
    pre.pop_back();
    per.insert(per.begin(), per.back());
    per.pop_back();
  }
  return Word(alphabet_, std::move(pre), std::move(per));
}

std::string Word::str() const { return format_word(*this); }

ExtNat length(const Word& w) { return w.length(); }

void require_same_alphabet(const Word& x, const Word& y) {
  if (!(x.alphabet() == y.alphabet()))
    fail(ErrorCode::AlphabetMismatch, "words use different alphabets");
}

namespace {

// Agreement bound for two eventually periodic words: they denote the same
// sequence iff they agree on the first B symbols.
uint64_t equality_bound(const Word& x, const Word& y) {
  uint64_t px = x.preperiod().size(), py = y.preperiod().size();
  uint64_t qx = x.period().size(), qy = y.period().size();
  return std::max(px, py) + std::lcm(qx, qy);
}

}  // namespace

bool equals(const Word& x, const Word& y) {
  require_same_alphabet(x, y);
  if (x.length() != y.length()) return false;
  if (!x.is_infinite()) return x.preperiod() == y.preperiod();
  uint64_t bound = equality_bound(x, y);
  for (uint64_t i = 0; i < bound; ++i)
    if (x.symbol_at(i) != y.symbol_at(i)) return false;
  return true;
}

bool is_prefix(const Word& x, const Word& y) {
  require_same_alphabet(x, y);
  if (x.length() > y.length()) return false;
  if (x.is_infinite()) return equals(x, y);
  for (uint64_t i = 0; i < x.preperiod().size(); ++i)
    if (x.symbol_at(i) != y.symbol_at(i)) return false;
  return true;
}

Word lcp(const Word& x, const Word& y) {
  require_same_alphabet(x, y);
  if (equals(x, y)) return x;
  uint64_t bound;
  if (x.is_infinite() && y.is_infinite()) {
    bound = equality_bound(x, y);  // unequal words disagree within the bound
  } else {
    ExtNat shorter = std::min(x.length(), y.length());
    bound = shorter.value();
  }
  std::string common;
  for (uint64_t i = 0; i < bound; ++i) {
    char cx = x.symbol_at(i);
    if (cx != y.symbol_at(i)) break;
    common.push_back(cx);
  }
  return Word::finite(x.alphabet(), std::move(common));
}

Word parse_word(const std::string& text, const Alphabet& alphabet) {
  if (text == "eps") return Word::empty(alphabet);
  size_t i = 0;
  auto read_seq = [&](bool allow_empty) {
    std::string out;
    while (i < text.size() && alphabet.contains(text[i])) out.push_back(text[i++]);
    if (out.empty() && !allow_empty)
      fail(ErrorCode::ParseError, "expected alphabet symbols at position " + std::to_string(i),
           static_cast<long>(i));
    return out;
  };
  std::string pre = read_seq(true);
  if (i == text.size()) {
    if (pre.empty())
      fail(ErrorCode::ParseError, "empty word literal (use \"eps\")", 0);
    return Word::finite(alphabet, std::move(pre));
  }
  if (text[i] != '(')
    fail(ErrorCode::ParseError,
         std::string("unexpected character '") + text[i] + "' at position " + std::to_string(i),
         static_cast<long>(i));
  ++i;
  std::string per = read_seq(false);
  auto expect = [&](char c) {
    if (i >= text.size() || text[i] != c)
      fail(ErrorCode::ParseError,
           std::string("expected '") + c + "' at position " + std::to_string(i), static_cast<long>(i));
    ++i;
  };
  expect(')');
  expect('^');
  expect('w');
  if (i != text.size())
    fail(ErrorCode::ParseError, "trailing characters at position " + std::to_string(i),
         static_cast<long>(i));
  return Word::eventually_periodic(alphabet, std::move(pre), std::move(per)).canonicalize();
}

std::string format_word(const Word& w) {
  Word c = w.canonicalize();
  if (!c.is_infinite()) return c.preperiod().empty() ? "eps" : c.preperiod();
  return c.preperiod() + "(" + c.period() + ")^w";
}

}  // namespace qmw
