#include "core/word.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace covspec {

Word Word::inverse() const {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.push_back(it->inverse());
  return Word(std::move(out));
}

Word Word::operator*(const Word& o) const {
  std::vector<Letter> out = letters_;
  out.insert(out.end(), o.letters_.begin(), o.letters_.end());
  return Word(std::move(out));
}

Word Word::power(int n) const {
  Word base = n < 0 ? inverse() : *this;
  Word out;
  for (int i = 0; i < std::abs(n); ++i) out = out * base;
  return out;
}

std::string Word::to_string() const {
  if (letters_.empty()) return "1";
  bool letters_only = std::all_of(letters_.begin(), letters_.end(),
                                  [](const Letter& l) { return l.generator < 26; });
  std::string out;
  for (const auto& l : letters_) {
    if (letters_only) {
      out.push_back(static_cast<char>((l.sign > 0 ? 'a' : 'A') + l.generator));
      continue;
    }
    if (!out.empty()) out.push_back(' ');
    out += "g" + std::to_string(l.generator);
    if (l.sign < 0) out += "^-1";
  }
  return out;
}

Word reduce_word(const Word& w) {
  std::vector<Letter> stack;
  stack.reserve(w.size());
  for (const auto& l : w.letters()) {
    if (!stack.empty() && stack.back().cancels(l)) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  return Word(std::move(stack));
}

CyclicReduction cyclic_reduce(const Word& w) {
  Word r = reduce_word(w);
  const auto& ls = r.letters();
  std::size_t lo = 0, hi = ls.size();
  while (hi - lo >= 2 && ls[lo].cancels(ls[hi - 1])) {
    ++lo;
    --hi;
  }
  CyclicReduction out;
  out.core = Word(std::vector<Letter>(ls.begin() + static_cast<long>(lo), ls.begin() + static_cast<long>(hi)));
  out.conjugator = Word(std::vector<Letter>(ls.begin(), ls.begin() + static_cast<long>(lo)));
  return out;
}

bool same_element(const Word& a, const Word& b) {
  return reduce_word(a) == reduce_word(b);
}

namespace {

Word least_rotation(const Word& w) {
  const auto& ls = w.letters();
  std::size_t n = ls.size();
  if (n == 0) return w;
  std::size_t best = 0;
  for (std::size_t s = 1; s < n; ++s) {
    for (std::size_t k = 0; k < n; ++k) {
      const auto& a = ls[(s + k) % n];
      const auto& b = ls[(best + k) % n];
      if (a == b) continue;
      if (a < b) best = s;
      break;
    }
  }
  std::vector<Letter> out;
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k) out.push_back(ls[(best + k) % n]);
  return Word(std::move(out));
}

}  // namespace

Word conjugacy_normal_form(const Word& w, bool allow_inverse) {
  Word core = cyclic_reduce(w).core;
  Word best = least_rotation(core);
  if (allow_inverse) {
    Word inv = least_rotation(core.inverse());
    if (inv < best) best = inv;
  }
  return best;
}

Word parse_word(const std::string& text) {
  std::vector<Letter> out;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok == "1") continue;
    std::string base = tok;
    int sign = 1;
    if (auto p = tok.find("^-1"); p != std::string::npos && p + 3 == tok.size()) {
      base = tok.substr(0, p);
      sign = -1;
    }
    if (base.size() > 1 && base[0] == 'g' &&
        std::all_of(base.begin() + 1, base.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      out.push_back({std::stoi(base.substr(1)), sign});
      continue;
    }
    for (char c : base) {
      if (std::islower(static_cast<unsigned char>(c))) {
        out.push_back({c - 'a', sign});
      } else if (std::isupper(static_cast<unsigned char>(c))) {
        out.push_back({c - 'A', -sign});
      } else {
        throw std::invalid_argument("bad word token: " + tok);
      }
    }
    if (sign < 0 && base.size() > 1) {
      throw std::invalid_argument("'^-1' applies to a single letter: " + tok);
    }
  }
  return Word(std::move(out));
}

}  // namespace covspec
