#include "mcg/presentation.hpp"
#include "mcg/serialize.hpp"

#include <doctest.h>

#include <random>

using namespace mcg;

namespace {

Word w(const char* s) { return parse_word(s); }

std::size_t count_kind(const Presentation& p, RelationKind k) {
  std::size_t c = 0;
  for (const auto& e : p.relations) c += e.kind == k;
  return c;
}

std::size_t count_lines(const std::string& text, const std::string& prefix) {
  std::size_t c = 0, at = 0;
  while (at < text.size()) {
    auto nl = text.find('\n', at);
    if (nl == std::string::npos) nl = text.size();
    c += text.compare(at, prefix.size(), prefix) == 0;
    at = nl + 1;
  }
  return c;
}

}  // namespace

TEST_CASE("reduce and conjugate") {
  CHECK(reduce(w("a1 a1'")).empty());
  CHECK(reduce(w("b a1 a1' b")) == w("b b"));
  CHECK(reduce(w("a1 b c2_4'")) == w("a1 b c2_4'"));
  CHECK(conjugate({}, w("a1")) == w("a1"));
  CHECK(conjugate(w("b"), w("b")) == w("b"));
  CHECK(format_word({}) == "1");
  CHECK(parse_word("1").empty());

  auto gens = enumerate_generators(make_signature(2, 1));
  std::mt19937_64 rng(7);
  for (int t = 0; t < 50; ++t) {
    Word x, y;
    for (int k = 0; k < 8; ++k) {
      x.push_back({gens[rng() % gens.size()], rng() % 2 ? 1 : -1});
      y.push_back({gens[rng() % gens.size()], rng() % 2 ? 1 : -1});
    }
    CHECK(conjugate(y, conjugate(inverse(y), x)) == reduce(x));
  }
}

TEST_CASE("handle relations") {
  auto h = handle_relations(make_signature(2, 0));
  REQUIRE(h.size() == 1);
  CHECK(h[0].lhs == w("c2_1"));
  CHECK(h[0].rhs == w("c1_2"));
  CHECK(handle_relations(make_signature(1, 3)).empty());
  auto h3 = handle_relations(make_signature(3, 0));
  REQUIRE(h3.size() == 2);
  CHECK(h3[0].lhs == w("c2_3"));
  CHECK(h3[0].rhs == w("c1_2"));
  CHECK(h3[1].lhs == w("c4_1"));
  CHECK(h3[1].rhs == w("c3_4"));
}

TEST_CASE("star relations") {
  auto e = star_relation(make_signature(2, 0), 1, 1, 2);
  CHECK(e.lhs == w("c1_2 c2_1"));
  CHECK(e.rhs == power(w("a1 a1 a2 b"), 3));
  auto e3 = star_relation(make_signature(3, 0), 1, 2, 3);
  CHECK(e3.lhs == w("c1_2 c2_3 c3_1"));
  CHECK(e3.rhs == power(w("a1 a2 a3 b"), 3));
  CHECK(star_relations(make_signature(1, 1)).empty());
}

TEST_CASE("presentation assembly") {
  auto s11 = make_signature(1, 1);
  auto p11 = presentation(s11, shipped_configuration(s11));
  CHECK(p11.generators.size() == 2);
  REQUIRE(p11.relations.size() == 1);
  CHECK(p11.relations[0].lhs == w("b a1 b"));
  CHECK(p11.relations[0].rhs == w("a1 b a1"));

  auto s20 = make_signature(2, 0);
  auto cfg = shipped_configuration(s20);
  auto p = presentation(s20, cfg);
  CHECK(p.generators.size() == 6);
  CHECK(count_kind(p, RelationKind::Handle) == 1);
  CHECK(count_kind(p, RelationKind::Star) == 6);

  auto q = presentation(s20, cfg, false);
  CHECK(q.generators.size() == 5);
  for (const auto& e : q.relations)
    for (const auto* side : {&e.lhs, &e.rhs})
      for (const auto& l : *side) CHECK(l.gen != CurveId::c(2, 1));
}

TEST_CASE("star lemma words and lanterns") {
  auto s = star_lemma_words(1, 2, 3);
  CHECK(s.X1 == w("a1 a2"));
  CHECK(s.X2 == w("b a1 a2 b"));
  CHECK(s.X3 == w("a3 b a1 a2 b a3"));

  auto sig = make_signature(3, 0);
  auto l = lantern_relation(sig, 1, 2, 4);
  CHECK(l.lhs == w("a1 c1_2 c2_4 a4"));
  CHECK(l.rhs == w("c1_4 a2 b a1 a4 b a2 b' a4' a1' b'"));
  auto l2 = lantern_relation(sig, 2, 3, 4);
  CHECK(l2.rhs == w("c2_4 a3 b a2 a4 b a3 b' a4' a2' b'"));
  CHECK_THROWS_AS(lantern_relation(sig, 1, 3, 2), BadTriple);
}

TEST_CASE("export formats") {
  auto s11 = make_signature(1, 1);
  auto p11 = presentation(s11, shipped_configuration(s11));
  CHECK(presentation_from_json(json::parse(export_presentation(p11, "json"))) == p11);

  auto plain = export_presentation(p11, "plain");
  CHECK(count_lines(plain, "gen ") == 2);
  CHECK(count_lines(plain, "rel ") == 1);

  auto s20 = make_signature(2, 0);
  auto p20 = presentation(s20, shipped_configuration(s20));
  auto gap = export_presentation(p20, "gap-style");
  CHECK(gap.find("FreeGroup") != std::string::npos);
  CHECK(count_lines(gap, "  ") == p20.relations.size());
  CHECK(count_lines(gap, "c2_1 := F.6;") == 1);
  CHECK_THROWS_AS(export_presentation(p20, "latex"), UnsupportedFormat);
}
