#include "mcg/morphisms.hpp"

#include <random>

namespace mcg {

GenMap g2_generator_map(const Signature& sig) {
  if (sig.n < 1) throw DegenerateTarget("capping a boundary needs n >= 1");
  const Signature target = [&] {
    try {
      return make_signature(sig.g, sig.n - 1);
    } catch (const DegenerateSignature&) {
      throw DegenerateTarget("target signature (" + std::to_string(sig.g) + "," + std::to_string(sig.n - 1) +
                             ") is degenerate");
    }
  }();
  const int N = sig.N;
  GenMap m{sig, target, {}};
  auto one = [](CurveId c) { return Word{{c, 1}}; };
  for (const auto& c : enumerate_generators(sig)) {
    switch (c.kind) {
      case CurveKind::B:
      case CurveKind::Bi: m.table[c] = one(c); break;
      case CurveKind::Ai: m.table[c] = one(CurveId::a(c.i == N ? 1 : c.i)); break;
      case CurveKind::Cij:
        if (c.i == 1 && c.j == N) m.table[c] = power(word({CurveId::a(1), CurveId::b(), CurveId::a(1)}), 4);
        else if (c.i == N && c.j == 1) m.table[c] = {};
        else if (c.j == N) m.table[c] = one(CurveId::c(c.i, 1));
        else if (c.i == N) m.table[c] = one(CurveId::c(1, c.j));
        else m.table[c] = one(c);
        break;
    }
  }
  return m;
}

Word apply_gen_map(const GenMap& map, const Word& w) {
  Word out;
  for (const auto& l : w) {
    auto it = map.table.find(l.gen);
    if (it == map.table.end()) throw std::invalid_argument("generator " + l.gen.token() + " not in map domain");
    const Word img = l.exp > 0 ? it->second : inverse(it->second);
    out.insert(out.end(), img.begin(), img.end());
  }
  return reduce(out);
}

Matrix collapse_matrix(const CurveConfiguration& source, const CurveConfiguration& target) {
  const std::string last = "a" + std::to_string(source.signature.N);
  Matrix p(target.rank(), source.rank());
  for (std::size_t q = 0; q < source.rank(); ++q) {
    const std::string lab = source.basis[q] == last ? "a1" : source.basis[q];
    std::size_t t = 0;
    while (t < target.rank() && target.basis[t] != lab) ++t;
    if (t == target.rank()) throw std::invalid_argument("basis label " + lab + " missing in target");
    p(t, q) = 1;
  }
  return p;
}

Matrix collapse_matrix(const Signature& sig) {
  if (sig.n < 1) throw DegenerateTarget("capping a boundary needs n >= 1");
  return collapse_matrix(shipped_configuration(sig), shipped_configuration(make_signature(sig.g, sig.n - 1)));
}

Report verify_gen_map(const GenMap& map, const CurveConfiguration& source, const CurveConfiguration& target,
                      const SquareCheckOptions& opts) {
  Report rep;
  rep.title = "g2 (" + std::to_string(map.source.g) + "," + std::to_string(map.source.n) + ") -> (" +
              std::to_string(map.target.g) + "," + std::to_string(map.target.n) + ")";
  const HomologyOracle src(source), tgt(target);
  const auto pres = presentation(map.source, source, true);
  for (const auto& e : pres.relations) {
    Equation img{e.name, e.kind, apply_gen_map(map, e.lhs), apply_gen_map(map, e.rhs)};
    rep.add("image of " + e.name, tgt.check_equation(img));
  }

  const Matrix P = collapse_matrix(source, target);
  const auto gens = enumerate_generators(map.source);
  std::mt19937_64 rng(opts.seed);
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  std::uniform_int_distribution<int> len(0, opts.max_length);
  std::bernoulli_distribution sign(0.5);
  int bad = 0;
  std::string first_bad;
  for (int t = 0; t < opts.random_words; ++t) {
    Word w;
    for (int k = len(rng); k > 0; --k) w.push_back({gens[pick(rng)], sign(rng) ? 1 : -1});
    if (!(P * src.evaluate(w) == tgt.evaluate(apply_gen_map(map, w)) * P)) {
      if (bad++ == 0) first_bad = format_word(w);
    }
  }
  rep.add("commuting square on " + std::to_string(opts.random_words) + " random words", bad == 0,
          bad ? std::to_string(bad) + " failures, first: " + first_bad : "");
  return rep;
}

KernelFamily kernel_generators(const Signature& sig) {
  g2_generator_map(sig);  // same preconditions
  const int g = sig.g, N = sig.N;
  const auto A = [](int i) { return Word{{CurveId::a(i), 1}}; };
  KernelFamily f;
  f.x.push_back(Word{{CurveId::a(1), 1}, {CurveId::a(N), -1}});
  auto push_conj = [&](const Word& y, std::size_t from) { f.x.push_back(conjugate(y, f.x[from])); };
  if (N >= 2) push_conj(word({CurveId::b()}), 0);
  if (g == 1) {
    for (int k = 2; k <= N - 1; ++k) push_conj(A(k), 1);
  } else {
    if (N - 1 >= 2) push_conj(A(2), 1);
    if (N - 1 >= 3) push_conj(word({CurveId::bi(1)}), 2);
    for (int i = 2; i <= g - 1; ++i) {
      if (2 * i <= N - 1) push_conj(word({CurveId::c(2 * i - 2, 2 * i)}), 2 * i - 1);
      if (2 * i + 1 <= N - 1) push_conj(word({CurveId::bi(i)}), 2 * i);
    }
    for (int k = 2 * g; k <= N - 1; ++k) push_conj(A(k), 1);
  }
  f.d_n = Word{{CurveId::c(N, 1), 1}};
  return f;
}

std::vector<Equation> wajnryb_relators(const Signature& sig) {
  std::vector<Equation> out;
  if (sig.g < 2) return out;
  const auto b = CurveId::b(), b1 = CurveId::bi(1), a1 = CurveId::a(1), a2 = CurveId::a(2);
  const Word c12 = c_word(sig, 1, 2);
  const Word theta = conjugate(word({b1, a2, b, a1, a1, b, a2, b1}), c12);
  out.push_back({"II", RelationKind::Derived, power(word({a1, b, a2}), 4), concat(c12, theta)});
  if (sig.g < 3) return out;

  const auto b2 = CurveId::bi(2), c24 = CurveId::c(2, 4);
  const Word t1 = word({b, a1, a2, b});
  const Word t2 = word({b1, a2, c24, b1});
  const Word omega = conjugate(inverse(word({b1, a2, b, a1})), c12);
  const Word sigma = conjugate(concat({Word{{c24, -1}, {b2, -1}}, inverse(t2)}), c12);
  const Word phi = conjugate(concat(word({b2, c24, b1, a2, b}), sigma), omega);
  Word lhs = concat({word({a2, a1}), phi, word({c24})});
  Word rhs = concat({inverse(t1), inverse(t2), c12, t2, t1, inverse(t2), c12, t2, c12});
  out.push_back({"III", RelationKind::Derived, std::move(lhs), std::move(rhs)});
  return out;
}

json to_json(const GenMap& map) {
  json j;
  j["format"] = "mcg-genmap";
  j["version"] = 1;
  j["source"] = {{"g", map.source.g}, {"n", map.source.n}};
  j["target"] = {{"g", map.target.g}, {"n", map.target.n}};
  j["table"] = json::array();
  for (const auto& [c, w] : map.table) j["table"].push_back({{"generator", c.json_name()}, {"image", word_to_json(w)}});
  return j;
}

GenMap genmap_from_json(const json& j) {
  if (j.value("format", "") != "mcg-genmap" || j.value("version", 0) != 1)
    throw std::invalid_argument("expected format mcg-genmap version 1");
  GenMap m;
  m.source = make_signature(j.at("source").at("g").get<int>(), j.at("source").at("n").get<int>());
  m.target = make_signature(j.at("target").at("g").get<int>(), j.at("target").at("n").get<int>());
  for (const auto& e : j.at("table"))
    m.table[parse_curve(e.at("generator").get<std::string>())] = word_from_json(e.at("image"));
  return m;
}

}  // namespace mcg
