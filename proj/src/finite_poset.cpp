#include "qmwords/finite_poset.hpp"

#include <map>
#include <sstream>

#include "qmwords/error.hpp"

namespace qmw {

FinitePoset FinitePoset::validate(std::vector<std::string> elements,
                                  const std::vector<std::pair<size_t, size_t>>& leq_pairs) {
  const size_t n = elements.size();
  if (n == 0) fail(ErrorCode::InvalidArgument, "poset must have at least one element");
  if (n > kValidationBound)
    fail(ErrorCode::TooLarge, "poset exceeds validation bound of " +
                                  std::to_string(kValidationBound) + " elements");
  std::vector<char> leq(n * n, 0);
  for (auto [a, b] : leq_pairs) {
    if (a >= n || b >= n) fail(ErrorCode::InvalidArgument, "leq pair index out of range");
    leq[a * n + b] = 1;
  }
  for (size_t a = 0; a < n; ++a)
    if (!leq[a * n + a])
      fail(ErrorCode::NotReflexive, "missing " + elements[a] + " <= " + elements[a]);
  for (size_t a = 0; a < n; ++a)
    for (size_t b = a + 1; b < n; ++b)
      if (leq[a * n + b] && leq[b * n + a])
        fail(ErrorCode::NotAntisymmetric,
             elements[a] + " <= " + elements[b] + " and " + elements[b] + " <= " + elements[a]);
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b) {
      if (!leq[a * n + b]) continue;
      for (size_t c = 0; c < n; ++c)
        if (leq[b * n + c] && !leq[a * n + c])
          fail(ErrorCode::NotTransitive, elements[a] + " <= " + elements[b] + " <= " +
                                             elements[c] + " but not " + elements[a] +
                                             " <= " + elements[c]);
    }
  return FinitePoset(std::move(elements), std::move(leq));
}

bool FinitePoset::subset_directed(uint32_t mask) const {
  const size_t n = size();
  for (size_t a = 0; a < n; ++a) {
    if (!(mask & (1u << a))) continue;
    for (size_t b = a; b < n; ++b) {
      if (!(mask & (1u << b))) continue;
      bool has_ub = false;
      for (size_t c = 0; c < n && !has_ub; ++c)
        if ((mask & (1u << c)) && leq(a, c) && leq(b, c)) has_ub = true;
      if (!has_ub) return false;
    }
  }
  return true;
}

const std::vector<FinitePoset::DirectedInfo>& FinitePoset::directed_cache() const {
  if (size() > kEnumerationBound)
    fail(ErrorCode::TooLarge, "poset exceeds enumeration bound of " +
                                  std::to_string(kEnumerationBound) + " elements");
  if (!directed_) {
    auto infos = std::make_shared<std::vector<DirectedInfo>>();
    for (uint32_t mask = 1; mask < (1u << size()); ++mask)
      if (subset_directed(mask)) infos->push_back({mask, lub(mask)});
    directed_ = std::move(infos);
  }
  return *directed_;
}

std::vector<uint32_t> FinitePoset::directed_subsets() const {
  std::vector<uint32_t> out;
  for (const auto& info : directed_cache()) out.push_back(info.mask);
  return out;
}

std::optional<size_t> FinitePoset::lub(uint32_t subset_mask) const {
  const size_t n = size();
  if (subset_mask == 0) fail(ErrorCode::InvalidArgument, "lub of empty subset");
  std::vector<size_t> uppers;
  for (size_t c = 0; c < n; ++c) {
    bool upper = true;
    for (size_t a = 0; a < n && upper; ++a)
      if ((subset_mask & (1u << a)) && !leq(a, c)) upper = false;
    if (upper) uppers.push_back(c);
  }
  for (size_t u : uppers) {
    bool least = true;
    for (size_t v : uppers)
      if (!leq(u, v)) least = false;
    if (least) return u;
  }
  return std::nullopt;
}

bool FinitePoset::is_dcpo() const {
  for (const auto& info : directed_cache())
    if (!info.lub) return false;
  return true;
}

bool FinitePoset::way_below(size_t x, size_t y) const {
  // Literal quantifier: every directed D with y <= lub D contains some
  // u with x <= u.
  for (const auto& info : directed_cache()) {
    if (!info.lub || !leq(y, *info.lub)) continue;
    bool found = false;
    for (size_t u = 0; u < size() && !found; ++u)
      if ((info.mask & (1u << u)) && leq(x, u)) found = true;
    if (!found) return false;
  }
  return true;
}

bool FinitePoset::is_continuous() const {
  for (size_t x = 0; x < size(); ++x) {
    uint32_t down = 0;
    for (size_t y = 0; y < size(); ++y)
      if (way_below(y, x)) down |= (1u << y);
    if (down == 0 || !subset_directed(down)) return false;
    auto l = lub(down);
    if (!l || *l != x) return false;
  }
  return true;
}

FinitePoset sample_ball_poset(const Metric& m, const std::vector<Word>& words,
                              const std::vector<Ratio>& radii) {
  if (words.empty() || radii.empty())
    fail(ErrorCode::InvalidArgument, "ball grid needs words and radii");
  if (words.size() * radii.size() > FinitePoset::kValidationBound)
    fail(ErrorCode::TooLarge, "ball grid exceeds validation bound");
  std::vector<FormalBall> balls;
  std::vector<std::string> labels;
  for (const Word& w : words)
    for (const Ratio& r : radii) {
      FormalBall b(w, r);
      labels.push_back(format_ball(b));
      balls.push_back(std::move(b));
    }
  std::vector<std::pair<size_t, size_t>> pairs;
  for (size_t i = 0; i < balls.size(); ++i)
    for (size_t j = 0; j < balls.size(); ++j)
      if (ball_leq(m, balls[i], balls[j])) pairs.emplace_back(i, j);
  return FinitePoset::validate(std::move(labels), pairs);
}

FinitePoset parse_poset(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::string> labels;
  std::map<std::string, size_t> index;
  std::vector<std::pair<std::string, std::string>> raw_pairs;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw)) continue;
    if (kw == "element") {
      std::string label;
      if (!(ls >> label))
        fail(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": element needs a label");
      if (index.count(label))
        fail(ErrorCode::ParseError,
             "line " + std::to_string(lineno) + ": duplicate element " + label);
      index[label] = labels.size();
      labels.push_back(label);
    } else if (kw == "leq") {
      std::string a, b;
      if (!(ls >> a >> b))
        fail(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": leq needs two labels");
      raw_pairs.emplace_back(a, b);
    } else {
      fail(ErrorCode::ParseError,
           "line " + std::to_string(lineno) + ": unknown keyword '" + kw + "'");
    }
    std::string extra;
    if (ls >> extra)
      fail(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": trailing tokens");
  }
  std::vector<std::pair<size_t, size_t>> pairs;
  for (auto& [a, b] : raw_pairs) {
    auto ia = index.find(a), ib = index.find(b);
    if (ia == index.end()) fail(ErrorCode::ParseError, "leq references unknown element " + a);
    if (ib == index.end()) fail(ErrorCode::ParseError, "leq references unknown element " + b);
    pairs.emplace_back(ia->second, ib->second);
  }
  // Reflexive closure is part of the file format; transitivity is not.
  for (size_t i = 0; i < labels.size(); ++i) pairs.emplace_back(i, i);
  return FinitePoset::validate(std::move(labels), pairs);
}

std::string format_poset(const FinitePoset& p) {
  std::string out;
  for (const auto& label : p.labels()) out += "element " + label + "\n";
  for (size_t a = 0; a < p.size(); ++a)
    for (size_t b = 0; b < p.size(); ++b)
      if (a != b && p.leq(a, b)) out += "leq " + p.labels()[a] + " " + p.labels()[b] + "\n";
  return out;
}

}  // namespace qmw
