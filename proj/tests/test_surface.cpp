#include "mcg/homology.hpp"
#include "mcg/surface.hpp"

#include <doctest.h>

using namespace mcg;

TEST_CASE("make_signature") {
  auto s = make_signature(2, 0);
  CHECK(s.g == 2);
  CHECK(s.n == 0);
  CHECK(s.N == 2);
  CHECK(make_signature(1, 1).N == 1);
  CHECK_THROWS_AS(make_signature(1, 0), DegenerateSignature);
  CHECK_THROWS_AS(make_signature(0, 3), DegenerateSignature);
}

TEST_CASE("cyclic_index wraps into 1..N") {
  CHECK(cyclic_index(make_signature(2, 1), 4) == 1);
  CHECK(cyclic_index(make_signature(2, 0), 3) == 1);
  CHECK(cyclic_index(make_signature(3, 0), 4) == 4);
  CHECK(cyclic_index(make_signature(3, 0), 0) == 4);
}

TEST_CASE("generator lists") {
  auto g20 = enumerate_generators(make_signature(2, 0));
  std::vector<CurveId> want = {CurveId::b(), CurveId::bi(1), CurveId::a(1), CurveId::a(2), CurveId::c(1, 2),
                               CurveId::c(2, 1)};
  CHECK(g20 == want);
  CHECK(enumerate_generators(make_signature(1, 1)) == std::vector<CurveId>{CurveId::b(), CurveId::a(1)});
  CHECK(enumerate_generators(make_signature(2, 1)).size() == 11);

  std::vector<CurveId> h = {CurveId::a(1), CurveId::b(), CurveId::a(2), CurveId::bi(1), CurveId::c(1, 2)};
  CHECK(wajnryb_subset(make_signature(2, 0)) == h);
  CHECK(wajnryb_subset(make_signature(2, 1)) == h);
  CHECK(wajnryb_subset(make_signature(1, 1)) == std::vector<CurveId>{CurveId::a(1), CurveId::b()});
}

TEST_CASE("good triples") {
  auto s3 = make_signature(2, 1);
  CHECK_FALSE(is_good_triple(s3, 1, 1, 1));
  CHECK(is_good_triple(s3, 1, 2, 1));
  CHECK_FALSE(is_good_triple(s3, 1, 3, 2));
  CHECK(enumerate_good_triples(make_signature(2, 0)).size() == 6);
  CHECK(enumerate_good_triples(s3).size() == 21);
  CHECK(enumerate_good_triples(make_signature(1, 1)).empty());
}

TEST_CASE("curve tokens round-trip") {
  for (auto c : enumerate_generators(make_signature(3, 2))) {
    CHECK(parse_curve(c.token()) == c);
    CHECK(parse_curve(c.json_name()) == c);
  }
  CHECK_THROWS(parse_curve("q7"));
}

TEST_CASE("intersection classes from the picture") {
  auto cfg = shipped_configuration(make_signature(3, 0));
  CHECK(intersection_class(cfg, CurveId::a(1), CurveId::a(2)) == IntersectionClass::Zero);
  CHECK(intersection_class(cfg, CurveId::b(), CurveId::a(1)) == IntersectionClass::One);
  CHECK(intersection_class(cfg, CurveId::c(1, 3), CurveId::c(2, 4)) == IntersectionClass::Many);
}

TEST_CASE("validate_configuration") {
  for (int g = 1; g <= 4; ++g)
    for (int n = 0; n <= 3; ++n) {
      if (2 * g + n - 2 < 1) continue;
      auto v = validate_configuration(shipped_configuration(make_signature(g, n)));
      CAPTURE(g);
      CAPTURE(n);
      CHECK(v.ok());
    }

  auto cfg = shipped_configuration(make_signature(2, 0));
  set_intersection_class(cfg, CurveId::b(), CurveId::a(1), IntersectionClass::Zero);
  CHECK_FALSE(validate_configuration(cfg).ok());

  auto s = make_signature(2, 2);
  auto bad = shipped_configuration(s);
  auto d1 = boundary_curve(s, 1);
  REQUIRE(d1.has_value());
  bad.homology[*d1] = bad.homology.at(CurveId::a(1));
  CHECK_FALSE(validate_configuration(bad).ok());
}
