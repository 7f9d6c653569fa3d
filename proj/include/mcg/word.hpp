#pragma once

#include "mcg/surface.hpp"

#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace mcg {

struct Letter {
  CurveId gen;
  int exp = 1;  // +1 or -1

  Letter inverse() const { return {gen, -exp}; }
  bool operator==(const Letter&) const = default;
  auto operator<=>(const Letter&) const = default;
};

using Word = std::vector<Letter>;

inline Word word(std::initializer_list<CurveId> gens) {
  Word w;
  for (const auto& c : gens) w.push_back({c, 1});
  return w;
}

Word reduce(const Word& w);
Word inverse(const Word& w);
Word concat(const Word& u, const Word& v);
Word concat(std::initializer_list<Word> parts);
Word power(const Word& w, int k);
// y x y^-1, reduced.
Word conjugate(const Word& y, const Word& x);

// Cyclically reduced representative (reduce, then strip inverse pairs at the ends).
Word cyclic_reduce(const Word& w);
// True iff u is a cyclic rotation of v.
bool is_rotation(const Word& u, const Word& v);

// Whitespace-separated tokens, trailing ' for inverses, "1" or "" for the empty word.
std::string format_word(const Word& w);
Word parse_word(std::string_view s);

}  // namespace mcg
