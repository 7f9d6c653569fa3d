#include "mcg/presentation.hpp"

#include <algorithm>
#include <map>

namespace mcg {

std::string_view to_string(RelationKind k) {
  switch (k) {
    case RelationKind::Handle: return "Handle";
    case RelationKind::Braid: return "Braid";
    case RelationKind::Star: return "Star";
    case RelationKind::Derived: return "Derived";
  }
  return "?";
}

RelationKind parse_relation_kind(std::string_view s) {
  if (s == "Handle") return RelationKind::Handle;
  if (s == "Braid") return RelationKind::Braid;
  if (s == "Star") return RelationKind::Star;
  if (s == "Derived") return RelationKind::Derived;
  throw std::invalid_argument("unknown relation kind '" + std::string(s) + "'");
}

const Equation* Presentation::find(std::string_view name) const {
  for (const auto& e : relations)
    if (e.name == name) return &e;
  return nullptr;
}

std::string triple_name(char prefix, int i, int j, int k) {
  return std::string(1, prefix) + "_{" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + "}";
}

Word c_word(const Signature& sig, int i, int j) {
  i = cyclic_index(sig, i);
  j = cyclic_index(sig, j);
  if (i == j) return {};
  return {{CurveId::c(i, j), 1}};
}

std::vector<Equation> handle_relations(const Signature& sig) {
  std::vector<Equation> out;
  for (int i = 1; i <= sig.g - 1; ++i)
    out.push_back({"A_{" + std::to_string(i) + "}", RelationKind::Handle, c_word(sig, 2 * i, 2 * i + 1),
                   c_word(sig, 2 * i - 1, 2 * i)});
  return out;
}

std::vector<Equation> braid_relations(const Signature& sig, const CurveConfiguration& cfg) {
  std::vector<Equation> out;
  const auto gens = enumerate_generators(sig);
  for (std::size_t p = 0; p < gens.size(); ++p)
    for (std::size_t q = p + 1; q < gens.size(); ++q) {
      const auto x = gens[p], y = gens[q];
      const auto cl = intersection_class(cfg, x, y);
      if (cl == IntersectionClass::Many) continue;
      std::string name = "T_{" + x.token() + "," + y.token() + "}";
      if (cl == IntersectionClass::Zero) out.push_back({std::move(name), RelationKind::Braid, word({x, y}), word({y, x})});
      else out.push_back({std::move(name), RelationKind::Braid, word({x, y, x}), word({y, x, y})});
    }
  return out;
}

Equation star_relation(const Signature& sig, int i, int j, int k) {
  Word lhs = concat({c_word(sig, i, j), c_word(sig, j, k), c_word(sig, k, i)});
  Word rhs = power(word({CurveId::a(i), CurveId::a(j), CurveId::a(k), CurveId::b()}), 3);
  return {triple_name('E', i, j, k), RelationKind::Star, std::move(lhs), std::move(rhs)};
}

std::vector<Equation> star_relations(const Signature& sig) {
  std::vector<Equation> out;
  for (auto [i, j, k] : enumerate_good_triples(sig)) out.push_back(star_relation(sig, i, j, k));
  return out;
}

Presentation presentation(const Signature& sig, const CurveConfiguration& cfg, bool include_handles) {
  Presentation p;
  p.signature = sig;
  p.generators = enumerate_generators(sig);
  auto braids = braid_relations(sig, cfg);
  auto stars = star_relations(sig);
  if (include_handles) {
    p.relations = handle_relations(sig);
    p.relations.insert(p.relations.end(), braids.begin(), braids.end());
    p.relations.insert(p.relations.end(), stars.begin(), stars.end());
    return p;
  }

  std::map<CurveId, CurveId> sub;
  for (const auto& h : handle_relations(sig))
    if (!h.lhs.empty() && !h.rhs.empty() && h.lhs != h.rhs) sub.emplace(h.lhs[0].gen, h.rhs[0].gen);
  std::erase_if(p.generators, [&](const CurveId& c) { return sub.count(c) > 0; });

  auto substitute = [&](Word w) {
    for (auto& l : w)
      if (auto it = sub.find(l.gen); it != sub.end()) l.gen = it->second;
    return w;
  };
  std::vector<std::pair<Word, Word>> seen;
  for (const auto* group : {&braids, &stars})
    for (const auto& e : *group) {
      Equation s{e.name, e.kind, substitute(e.lhs), substitute(e.rhs)};
      Word l = reduce(s.lhs), r = reduce(s.rhs);
      if (l == r) continue;
      bool dup = std::any_of(seen.begin(), seen.end(), [&](const auto& pr) {
        return (pr.first == l && pr.second == r) || (pr.first == r && pr.second == l);
      });
      if (dup) continue;
      seen.emplace_back(l, r);
      p.relations.push_back(std::move(s));
    }
  return p;
}

StarWords star_lemma_words(int i, int j, int k) {
  StarWords s;
  s.X1 = word({CurveId::a(i), CurveId::a(j)});
  s.X2 = concat({word({CurveId::b()}), s.X1, word({CurveId::b()})});
  s.X3 = concat({word({CurveId::a(k)}), s.X2, word({CurveId::a(k)})});
  return s;
}

Equation lantern_relation(const Signature& sig, int i, int j, int k) {
  if (i < 1 || j < 1 || k < 1 || i > sig.N || j > sig.N || k > sig.N || !is_good_triple(sig, i, j, k))
    throw BadTriple("lantern relation needs a good triple, got " + triple_name('L', i, j, k));
  const Word ai = word({CurveId::a(i)}), aj = word({CurveId::a(j)}), ak = word({CurveId::a(k)});
  const Word X = word({CurveId::b(), CurveId::a(i), CurveId::a(k), CurveId::b()});
  Word lhs = concat({ai, c_word(sig, i, j), c_word(sig, j, k), ak});
  Word rhs = concat({c_word(sig, i, k), aj, X, aj, inverse(X)});
  return {triple_name('L', i, j, k), RelationKind::Derived, std::move(lhs), std::move(rhs)};
}

std::vector<Equation> derived_identities(const Signature& sig) {
  std::vector<Equation> out;
  for (auto [i, j, k] : enumerate_good_triples(sig)) out.push_back(lantern_relation(sig, i, j, k));
  const Word b = word({CurveId::b()});
  for (int i = 1; i <= sig.N; ++i)
    for (int j = 1; j <= sig.N; ++j)
      for (int k = 1; k <= sig.N; ++k) {
        if (i == j && j == k) continue;
        const auto s = star_lemma_words(i, j, k);
        out.push_back({triple_name('S', i, j, k), RelationKind::Derived,
                       power(word({CurveId::a(i), CurveId::a(j), CurveId::a(k), CurveId::b()}), 3),
                       concat({s.X1, s.X2, s.X3})});
      }
  for (int i = 1; i <= sig.N; ++i)
    for (int j = 1; j <= sig.N; ++j) {
      if (i == j) continue;
      const Word ai = word({CurveId::a(i)}), aj = word({CurveId::a(j)});
      out.push_back({"P_{" + std::to_string(i) + "," + std::to_string(j) + "}", RelationKind::Derived,
                     power(concat({ai, aj, b}), 4), power(concat({ai, b, aj}), 4)});
    }
  return out;
}

}  // namespace mcg
