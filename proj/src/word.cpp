#include "mcg/word.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <stdexcept>

namespace mcg {

Word reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (const auto& l : w) {
    if (!out.empty() && out.back().gen == l.gen && out.back().exp == -l.exp) out.pop_back();
    else out.push_back(l);
  }
  return out;
}

Word inverse(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(it->inverse());
  return out;
}

Word concat(const Word& u, const Word& v) {
  Word out = u;
  out.insert(out.end(), v.begin(), v.end());
  return out;
}

Word concat(std::initializer_list<Word> parts) {
  Word out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

Word power(const Word& w, int k) {
  const Word base = k < 0 ? inverse(w) : w;
  Word out;
  for (int t = 0; t < std::abs(k); ++t) out.insert(out.end(), base.begin(), base.end());
  return out;
}

Word conjugate(const Word& y, const Word& x) { return reduce(concat({y, x, inverse(y)})); }

Word cyclic_reduce(const Word& w) {
  Word r = reduce(w);
  std::size_t lo = 0, hi = r.size();
  while (hi - lo >= 2 && r[lo].gen == r[hi - 1].gen && r[lo].exp == -r[hi - 1].exp) {
    ++lo;
    --hi;
  }
  return Word(r.begin() + lo, r.begin() + hi);
}

bool is_rotation(const Word& u, const Word& v) {
  if (u.size() != v.size()) return false;
  if (u.empty()) return true;
  Word vv = concat(v, v);
  return std::search(vv.begin(), vv.end(), u.begin(), u.end()) != vv.end();
}

std::string format_word(const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (const auto& l : w) {
    if (!s.empty()) s += ' ';
    s += l.gen.token();
    if (l.exp < 0) s += '\'';
  }
  return s;
}

Word parse_word(std::string_view s) {
  Word w;
  std::size_t p = 0;
  while (p < s.size()) {
    while (p < s.size() && std::isspace(static_cast<unsigned char>(s[p]))) ++p;
    if (p == s.size()) break;
    std::size_t q = p;
    while (q < s.size() && !std::isspace(static_cast<unsigned char>(s[q]))) ++q;
    std::string_view tok = s.substr(p, q - p);
    p = q;
    if (tok == "1") continue;
    int exp = 1;
    while (!tok.empty() && tok.back() == '\'') {
      exp = -exp;
      tok.remove_suffix(1);
    }
    w.push_back({parse_curve(tok), exp});
  }
  return w;
}

}  // namespace mcg
