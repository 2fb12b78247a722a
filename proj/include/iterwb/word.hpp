#pragma once

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>

namespace iterwb {

/// A binary symbol.
enum class Sym : unsigned char { zero, one };

/// A finite word over {0,1}. The empty word is the default value.
class Word {
 public:
  Word() = default;

  /// Throws std::invalid_argument if `bits` holds anything but '0' and '1'.
  explicit Word(std::string_view bits);

  std::size_t size() const noexcept { return bits_.size(); }
  bool empty() const noexcept { return bits_.empty(); }
  const std::string& bits() const noexcept { return bits_; }

  Sym operator[](std::size_t i) const noexcept {
    return bits_[i] == '1' ? Sym::one : Sym::zero;
  }
  Sym back() const noexcept { return (*this)[size() - 1]; }

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word&, const Word&) = default;

 private:
  friend Word from_bits(std::string bits) noexcept;
  std::string bits_;
};

/// Builds a word from a string already known to hold only '0'/'1'.
Word from_bits(std::string bits) noexcept;

/// '0101' form used by the term grammar; '' for the empty word.
std::string to_literal(const Word& w);

std::ostream& operator<<(std::ostream& os, const Word& w);

// Base functions. All are total.

/// First min(|b|, |c|) symbols of c.
Word truncate(const Word& c, const Word& b);

/// c with its final symbol removed; the empty word maps to itself.
Word drop_last(const Word& c);

/// c if |c| < |b|, otherwise b.
Word lmin(const Word& c, const Word& b);

/// x when s is nonempty, else y.
Word cond(const Word& s, const Word& x, const Word& y);

Word append_sym(Word w, Sym d);
Word repeat(Sym d, std::size_t n);

/// Injective tuple encoding: every symbol doubled, components joined by "01".
/// |tuple(a_1..a_n)| = 2 * sum |a_i| + 2(n - 1).
Word tuple(std::span<const Word> components);

/// Component `index` (1-based) of an n-tuple encoding; the empty word when `w`
/// is not a valid n-tuple.
Word project(const Word& w, std::size_t arity, std::size_t index);

// Extra poly-time helpers used by the reflected constructions. Predicates
// return "1" for true and the empty word for false, so they compose with cond.

/// 0^|w|.
Word zeros(const Word& w);
/// 0^(|x| - |y|), or the empty word when |y| >= |x|.
Word monus(const Word& x, const Word& y);
Word shorter(const Word& x, const Word& y);
Word same_word(const Word& x, const Word& y);
/// "1" iff w ends in the symbol 1.
Word ends_in_one(const Word& w);
Word concat(const Word& x, const Word& y);

}  // namespace iterwb
