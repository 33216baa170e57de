#include "lpocert/ordinal.hpp"

#include <algorithm>
#include <cctype>

#include "lpocert/errors.hpp"

namespace lpo {

OrdinalCNF OrdinalCNF::from_nat(BigNat n) {
  OrdinalCNF o;
  if (n > 0) o.terms_.emplace_back(0, std::move(n));
  return o;
}

OrdinalCNF OrdinalCNF::omega_power(std::uint64_t exp, BigNat coeff) {
  if (coeff < 1) throw Error("omega_power needs a positive coefficient");
  OrdinalCNF o;
  o.terms_.emplace_back(exp, std::move(coeff));
  return o;
}

OrdinalCNF OrdinalCNF::from_terms(
    std::vector<std::pair<std::uint64_t, BigNat>> ts) {
  std::erase_if(ts, [](const auto& t) { return t.second == 0; });
  std::sort(ts.begin(), ts.end(),
            [](const auto& a, const auto& b) { return a.first > b.first; });
  for (std::size_t i = 0; i + 1 < ts.size(); ++i)
    if (ts[i].first == ts[i + 1].first)
      throw Error("duplicate exponent " + std::to_string(ts[i].first) +
                  " in ordinal");
  for (const auto& t : ts)
    if (t.second < 0) throw Error("negative coefficient in ordinal");
  OrdinalCNF o;
  o.terms_ = std::move(ts);
  return o;
}

bool OrdinalCNF::is_successor() const {
  return !terms_.empty() && terms_.back().first == 0;
}

OrdinalCNF OrdinalCNF::pred() const {
  if (!is_successor()) throw Error(str() + " is not a successor ordinal");
  OrdinalCNF o = *this;
  if (--o.terms_.back().second == 0) o.terms_.pop_back();
  return o;
}

OrdinalCNF OrdinalCNF::fund_seq(const BigNat& n) const {
  if (!is_limit()) throw NotALimit(str());
  OrdinalCNF o = *this;
  auto [e, c] = o.terms_.back();  // e >= 1 here
  if (c == 1)
    o.terms_.pop_back();
  else
    o.terms_.back().second = c - 1;
  if (n > 0) o.terms_.emplace_back(e - 1, n);
  return o;
}

int OrdinalCNF::cmp(const OrdinalCNF& other) const {
  const auto& a = terms_;
  const auto& b = other.terms_;
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
    if (a[i].first != b[i].first) return a[i].first < b[i].first ? -1 : 1;
    if (a[i].second != b[i].second) return a[i].second < b[i].second ? -1 : 1;
  }
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  return 0;
}

OrdinalCNF OrdinalCNF::plus(const OrdinalCNF& other) const {
  if (other.is_zero()) return *this;
  // Left addition: terms below other's head are absorbed, an equal-exponent
  // term merges its coefficient into the head.
  OrdinalCNF o;
  std::uint64_t head = other.terms_.front().first;
  BigNat carry = 0;
  for (const auto& t : terms_) {
    if (t.first > head) o.terms_.push_back(t);
    else if (t.first == head) carry = t.second;
  }
  for (std::size_t i = 0; i < other.terms_.size(); ++i) {
    auto t = other.terms_[i];
    if (i == 0) t.second += carry;
    o.terms_.push_back(std::move(t));
  }
  return o;
}

std::string OrdinalCNF::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    if (!out.empty()) out += "+";
    if (e == 0) {
      out += c.str();
      continue;
    }
    out += "w";
    if (e > 1) out += "^" + std::to_string(e);
    if (c > 1) out += "*" + c.str();
  }
  return out;
}

namespace {

struct Cursor {
  const std::string& text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }
  bool eat(char c) {
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, 1, static_cast<int>(pos) + 1);
  }
  BigNat number() {
    if (pos >= text.size() ||
        !std::isdigit(static_cast<unsigned char>(text[pos])))
      fail("expected a number");
    BigNat n = 0;
    while (pos < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[pos]))) {
      n = n * 10 + (text[pos] - '0');
      ++pos;
    }
    return n;
  }
};

}  // namespace

OrdinalCNF OrdinalCNF::parse(const std::string& text) {
  Cursor cur{text};
  std::vector<std::pair<std::uint64_t, BigNat>> ts;
  cur.skip_ws();
  if (cur.pos == text.size()) cur.fail("empty ordinal");
  while (true) {
    cur.skip_ws();
    std::uint64_t exp = 0;
    BigNat coeff;
    if (cur.eat('w')) {
      exp = 1;
      cur.skip_ws();
      if (cur.eat('^')) {
        cur.skip_ws();
        BigNat e = cur.number();
        if (e > 1000000) cur.fail("exponent too large");
        exp = static_cast<std::uint64_t>(e);
      }
      coeff = 1;
      cur.skip_ws();
      if (cur.eat('*')) {
        cur.skip_ws();
        coeff = cur.number();
        if (coeff == 0) cur.fail("zero coefficient");
      }
    } else {
      coeff = cur.number();  // plain natural, exponent 0
    }
    if (coeff > 0) ts.emplace_back(exp, std::move(coeff));
    cur.skip_ws();
    if (cur.pos == text.size()) break;
    if (!cur.eat('+')) cur.fail("expected '+'");
  }
  for (std::size_t i = 0; i < ts.size(); ++i)
    for (std::size_t j = i + 1; j < ts.size(); ++j)
      if (ts[i].first == ts[j].first)
        throw ParseError("duplicate exponent " + std::to_string(ts[i].first),
                         1, 1);
  return from_terms(std::move(ts));
}

}  // namespace lpo
