#include "iterwb/word.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <vector>

namespace iterwb {

Word::Word(std::string_view bits) : bits_(bits) {
  auto bad = std::find_if(bits_.begin(), bits_.end(),
                          [](char ch) { return ch != '0' && ch != '1'; });
  if (bad != bits_.end()) {
    throw std::invalid_argument("word contains non-binary symbol '" +
                                std::string(1, *bad) + "'");
  }
}

Word from_bits(std::string bits) noexcept {
  Word w;
  w.bits_ = std::move(bits);
  return w;
}

std::string to_literal(const Word& w) { return "'" + w.bits() + "'"; }

std::ostream& operator<<(std::ostream& os, const Word& w) {
  return os << to_literal(w);
}

Word truncate(const Word& c, const Word& b) {
  if (b.size() >= c.size()) return c;
  return from_bits(c.bits().substr(0, b.size()));
}

Word drop_last(const Word& c) {
  if (c.empty()) return c;
  return from_bits(c.bits().substr(0, c.size() - 1));
}

Word lmin(const Word& c, const Word& b) { return c.size() < b.size() ? c : b; }

Word cond(const Word& s, const Word& x, const Word& y) {
  return s.empty() ? y : x;
}

Word append_sym(Word w, Sym d) {
  std::string bits = w.bits();
  bits.push_back(d == Sym::one ? '1' : '0');
  return from_bits(std::move(bits));
}

Word repeat(Sym d, std::size_t n) {
  return from_bits(std::string(n, d == Sym::one ? '1' : '0'));
}

Word tuple(std::span<const Word> components) {
  std::string out;
  std::size_t total = 0;
  for (const Word& c : components) total += c.size();
  out.reserve(2 * total + 2 * components.size());
  bool first = true;
  for (const Word& c : components) {
    if (!first) out += "01";
    first = false;
    for (char ch : c.bits()) {
      out.push_back(ch);
      out.push_back(ch);
    }
  }
  return from_bits(std::move(out));
}

Word project(const Word& w, std::size_t arity, std::size_t index) {
  const std::string& s = w.bits();
  if (arity == 0 || index == 0 || index > arity || s.size() % 2 != 0) {
    return Word();
  }
  std::vector<std::string> parts(1);
  for (std::size_t i = 0; i < s.size(); i += 2) {
    char x = s[i], y = s[i + 1];
    if (x == y) {
      parts.back().push_back(x);
    } else if (x == '0') {
      parts.emplace_back();
    } else {
      return Word();
    }
  }
  if (parts.size() != arity) return Word();
  return from_bits(std::move(parts[index - 1]));
}

Word zeros(const Word& w) { return from_bits(std::string(w.size(), '0')); }

Word monus(const Word& x, const Word& y) {
  if (y.size() >= x.size()) return Word();
  return from_bits(std::string(x.size() - y.size(), '0'));
}

Word shorter(const Word& x, const Word& y) {
  return x.size() < y.size() ? from_bits("1") : Word();
}

Word same_word(const Word& x, const Word& y) {
  return x == y ? from_bits("1") : Word();
}

Word ends_in_one(const Word& w) {
  return !w.empty() && w.back() == Sym::one ? from_bits("1") : Word();
}

Word concat(const Word& x, const Word& y) {
  return from_bits(x.bits() + y.bits());
}

}  // namespace iterwb
