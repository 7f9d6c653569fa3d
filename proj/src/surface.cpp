#include "mcg/surface.hpp"

#include <algorithm>
#include <charconv>

namespace mcg {

Signature make_signature(int g, int n) {
  if (g < 1) throw DegenerateSignature("degenerate signature: genus must be at least 1");
  if (n < 0) throw DegenerateSignature("degenerate signature: boundary count must be nonnegative");
  const int N = 2 * g + n - 2;
  if (N < 1)
    throw DegenerateSignature("degenerate signature (" + std::to_string(g) + "," + std::to_string(n) +
                              "): leg count 2g+n-2 is zero");
  return {g, n, N};
}

int cyclic_index(const Signature& sig, long m) {
  long r = (m - 1) % sig.N;
  if (r < 0) r += sig.N;
  return int(r + 1);
}

std::string CurveId::token() const {
  switch (kind) {
    case CurveKind::B: return "b";
    case CurveKind::Bi: return "b" + std::to_string(i);
    case CurveKind::Ai: return "a" + std::to_string(i);
    case CurveKind::Cij: return "c" + std::to_string(i) + "_" + std::to_string(j);
  }
  return {};
}

std::string CurveId::json_name() const {
  if (kind == CurveKind::Cij) return "c_" + std::to_string(i) + "_" + std::to_string(j);
  return token();
}

namespace {

bool parse_uint(std::string_view s, int& out) {
  if (s.empty() || s.size() > 5) return false;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && p == s.data() + s.size() && out >= 1;
}

}  // namespace

CurveId parse_curve(std::string_view s) {
  auto bad = [&] { return std::invalid_argument("unknown generator token '" + std::string(s) + "'"); };
  if (s.empty()) throw bad();
  int x = 0, y = 0;
  std::string_view rest = s.substr(1);
  switch (s[0]) {
    case 'b':
      if (rest.empty()) return CurveId::b();
      if (!parse_uint(rest, x)) throw bad();
      return CurveId::bi(x);
    case 'a':
      if (!parse_uint(rest, x)) throw bad();
      return CurveId::a(x);
    case 'c': {
      if (!rest.empty() && rest[0] == '_') rest.remove_prefix(1);
      auto us = rest.find('_');
      if (us == std::string_view::npos || !parse_uint(rest.substr(0, us), x) || !parse_uint(rest.substr(us + 1), y))
        throw bad();
      return CurveId::c(x, y);
    }
    default: throw bad();
  }
}

bool curve_in_signature(const Signature& sig, const CurveId& c) {
  switch (c.kind) {
    case CurveKind::B: return c.i == 0 && c.j == 0;
    case CurveKind::Bi: return c.i >= 1 && c.i <= sig.g - 1 && c.j == 0;
    case CurveKind::Ai: return c.i >= 1 && c.i <= sig.N && c.j == 0;
    case CurveKind::Cij: return c.i >= 1 && c.i <= sig.N && c.j >= 1 && c.j <= sig.N && c.i != c.j;
  }
  return false;
}

std::vector<CurveId> enumerate_generators(const Signature& sig) {
  std::vector<CurveId> out{CurveId::b()};
  for (int i = 1; i <= sig.g - 1; ++i) out.push_back(CurveId::bi(i));
  for (int i = 1; i <= sig.N; ++i) out.push_back(CurveId::a(i));
  for (int i = 1; i <= sig.N; ++i)
    for (int j = 1; j <= sig.N; ++j)
      if (i != j) out.push_back(CurveId::c(i, j));
  return out;
}

std::optional<CurveId> boundary_curve(const Signature& sig, int i) {
  const int p = cyclic_index(sig, 2 * sig.g - 2 + i);
  const int q = cyclic_index(sig, 2 * sig.g - 1 + i);
  if (p == q) return std::nullopt;
  return CurveId::c(p, q);
}

std::vector<CurveId> wajnryb_subset(const Signature& sig) {
  std::vector<CurveId> out{CurveId::a(1), CurveId::b()};
  if (sig.g >= 2) {
    out.push_back(CurveId::a(2));
    out.push_back(CurveId::bi(1));
    for (int i = 2; i <= sig.g - 1; ++i) {
      out.push_back(CurveId::c(2 * i - 2, 2 * i));
      out.push_back(CurveId::bi(i));
    }
    out.push_back(CurveId::c(1, 2));
  }
  for (int i = 2 * sig.g; i <= sig.N; ++i) out.push_back(CurveId::a(i));
  for (int i = 1; i <= sig.n - 1; ++i)
    if (auto d = boundary_curve(sig, i)) out.push_back(*d);
  return out;
}

bool is_good_triple(const Signature&, int i, int j, int k) {
  if (i == j && j == k) return false;
  return (i <= j && j <= k) || (j <= k && k <= i) || (k <= i && i <= j);
}

std::vector<std::tuple<int, int, int>> enumerate_good_triples(const Signature& sig) {
  std::vector<std::tuple<int, int, int>> out;
  for (int i = 1; i <= sig.N; ++i)
    for (int j = 1; j <= sig.N; ++j)
      for (int k = 1; k <= sig.N; ++k)
        if (is_good_triple(sig, i, j, k)) out.emplace_back(i, j, k);
  return out;
}

std::string_view to_string(IntersectionClass c) {
  switch (c) {
    case IntersectionClass::Zero: return "Zero";
    case IntersectionClass::One: return "One";
    case IntersectionClass::Many: return "Many";
  }
  return "?";
}

IntersectionClass parse_intersection_class(std::string_view s) {
  if (s == "Zero") return IntersectionClass::Zero;
  if (s == "One") return IntersectionClass::One;
  if (s == "Many") return IntersectionClass::Many;
  throw std::invalid_argument("unknown intersection class '" + std::string(s) + "'");
}

namespace {

// The picture: a torus with beta horizontal and alpha_1..alpha_N vertical, hole m sitting
// between alpha_m and alpha_{m+1}. gamma_{i,j} encloses holes i..j-1 (cyclically); handle i
// glues holes 2i-1 and 2i together and beta_i runs through it, crossing alpha_{2i} once.

std::vector<bool> holes(const Signature& sig, int i, int j) {
  std::vector<bool> h(sig.N + 1, false);
  for (int m = i; m != j; m = cyclic_index(sig, m + 1)) h[m] = true;
  return h;
}

bool strictly_inside(const Signature& sig, int m, int k, int l) {
  for (int x = cyclic_index(sig, k + 1); x != l; x = cyclic_index(sig, x + 1))
    if (x == m) return true;
  return false;
}

IntersectionClass picture_class(const Signature& sig, CurveId x, CurveId y) {
  using K = CurveKind;
  using IC = IntersectionClass;
  if (y < x) std::swap(x, y);
  switch (x.kind) {
    case K::B:
      return y.kind == K::Ai ? IC::One : IC::Zero;
    case K::Bi:
      if (y.kind == K::Bi) return IC::Zero;
      if (y.kind == K::Ai) return y.i == 2 * x.i ? IC::One : IC::Zero;
      {
        auto h = holes(sig, y.i, y.j);
        const bool p = h[2 * x.i - 1], q = h[2 * x.i];
        return p != q ? IC::One : IC::Zero;
      }
    case K::Ai:
      if (y.kind == K::Ai) return IC::Zero;
      return strictly_inside(sig, x.i, y.i, y.j) ? IC::Many : IC::Zero;
    case K::Cij: {
      auto h1 = holes(sig, x.i, x.j), h2 = holes(sig, y.i, y.j);
      bool inter = false, sub12 = true, sub21 = true;
      for (int m = 1; m <= sig.N; ++m) {
        if (h1[m] && h2[m]) inter = true;
        if (h1[m] && !h2[m]) sub12 = false;
        if (h2[m] && !h1[m]) sub21 = false;
      }
      return (!inter || sub12 || sub21) ? IC::Zero : IC::Many;
    }
  }
  return IC::Many;
}

}  // namespace

CurveConfiguration shipped_configuration(const Signature& sig) {
  CurveConfiguration cfg;
  cfg.signature = sig;
  const int g = sig.g, N = sig.N;

  // Basis: b, a1, a2, a4, ..., a_{2g-2}, a_{2g}, ..., a_N, B1, ..., B_{g-1}.
  std::map<std::string, std::size_t> at;
  auto add = [&](const std::string& s) { at[s] = cfg.basis.size(); cfg.basis.push_back(s); };
  add("b");
  add("a1");
  for (int i = 1; i <= g - 1; ++i) add("a" + std::to_string(2 * i));
  for (int m = 2 * g; m <= N; ++m) add("a" + std::to_string(m));
  for (int i = 1; i <= g - 1; ++i) add("B" + std::to_string(i));

  const std::size_t r = cfg.basis.size();
  cfg.pairing = Matrix(r, r);
  for (const auto& [lab, idx] : at) {
    if (lab[0] == 'a') {
      cfg.pairing(idx, 0) = 1;
      cfg.pairing(0, idx) = -1;
    }
  }
  for (int i = 1; i <= g - 1; ++i) {
    const std::size_t p = at["a" + std::to_string(2 * i)], q = at["B" + std::to_string(i)];
    cfg.pairing(p, q) = 1;
    cfg.pairing(q, p) = -1;
  }

  auto alpha = [&](int m) {
    Vector v(r);
    if (m % 2 == 1 && m <= 2 * g - 1) v[at["a1"]] = 1;
    else v[at["a" + std::to_string(m)]] = 1;
    return v;
  };

  const auto gens = enumerate_generators(sig);
  for (const auto& c : gens) {
    Vector v(r);
    switch (c.kind) {
      case CurveKind::B: v[0] = 1; break;
      case CurveKind::Bi: v[at["B" + std::to_string(c.i)]] = 1; break;
      case CurveKind::Ai: v = alpha(c.i); break;
      case CurveKind::Cij: {
        auto hi = alpha(c.i), hj = alpha(c.j);
        for (std::size_t t = 0; t < r; ++t) v[t] = hj[t] - hi[t];
        break;
      }
    }
    cfg.homology.emplace(c, std::move(v));
  }

  for (std::size_t p = 0; p < gens.size(); ++p)
    for (std::size_t q = p + 1; q < gens.size(); ++q) {
      auto cl = picture_class(sig, gens[p], gens[q]);
      if (cl != IntersectionClass::Zero) cfg.table.emplace(std::make_pair(gens[p], gens[q]), cl);
    }
  return cfg;
}

IntersectionClass intersection_class(const CurveConfiguration& cfg, const CurveId& x, const CurveId& y) {
  auto key = x < y ? std::make_pair(x, y) : std::make_pair(y, x);
  auto it = cfg.table.find(key);
  return it == cfg.table.end() ? IntersectionClass::Zero : it->second;
}

void set_intersection_class(CurveConfiguration& cfg, const CurveId& x, const CurveId& y, IntersectionClass c) {
  auto key = x < y ? std::make_pair(x, y) : std::make_pair(y, x);
  if (c == IntersectionClass::Zero) cfg.table.erase(key);
  else cfg.table[key] = c;
}

Integer pairing(const CurveConfiguration& cfg, const Vector& x, const Vector& y) {
  Integer s = 0;
  const std::size_t r = cfg.rank();
  for (std::size_t p = 0; p < r; ++p) {
    if (x[p] == 0) continue;
    for (std::size_t q = 0; q < r; ++q)
      if (cfg.pairing(p, q) != 0) s += x[p] * cfg.pairing(p, q) * y[q];
  }
  return s;
}

}  // namespace mcg
