#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace covspec {

struct Letter {
  int generator = 0;  // >= 0
  int sign = 1;       // +1 or -1

  Letter inverse() const { return {generator, -sign}; }
  bool cancels(const Letter& o) const { return generator == o.generator && sign == -o.sign; }
  bool operator==(const Letter&) const = default;
  auto operator<=>(const Letter&) const = default;
};

/// Element of a free group, stored as a sequence of signed generators.
/// Equality of group elements is tested via reduce(); a Word itself may be
/// unreduced.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  static Word generator(int g, int sign = 1) { return Word({Letter{g, sign}}); }

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }

  Word inverse() const;
  Word operator*(const Word& o) const;
  Word power(int n) const;

  bool operator==(const Word&) const = default;
  auto operator<=>(const Word&) const = default;

  /// Letters as "a", "A" (inverse), ... for generators < 26, "g12", "g12^-1" beyond.
  std::string to_string() const;

 private:
  std::vector<Letter> letters_;
};

struct CyclicReduction {
  Word core;
  Word conjugator;  // w == conjugator * core * conjugator^-1
};

Word reduce_word(const Word& w);
CyclicReduction cyclic_reduce(const Word& w);

/// Equal as free-group elements.
bool same_element(const Word& a, const Word& b);

/// Canonical representative of the conjugacy class of w (up to inversion if
/// `allow_inverse`): the lexicographically least rotation of the cyclic core.
Word conjugacy_normal_form(const Word& w, bool allow_inverse = false);

/// Parse "a b A", "a b^-1", "g3 g0^-1"; lowercase letters are generators
/// 0..25 and uppercase letters their inverses.
Word parse_word(const std::string& text);

}  // namespace covspec
