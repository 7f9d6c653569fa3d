#include "mcg/abelian.hpp"
#include "mcg/surface.hpp"

#include <doctest.h>

#include <random>

using namespace mcg;

namespace {

Presentation pres(int g, int n) {
  auto s = make_signature(g, n);
  return presentation(s, shipped_configuration(s));
}

int column(const Presentation& p, CurveId c) {
  for (std::size_t i = 0; i < p.generators.size(); ++i)
    if (p.generators[i] == c) return int(i);
  return -1;
}

}  // namespace

TEST_CASE("relation matrix rows") {
  auto p11 = pres(1, 1);
  auto m = relation_matrix(p11);
  REQUIRE(m.rows() == 1);
  // b a1 b = a1 b a1
  CHECK(m(0, column(p11, CurveId::a(1))) == -1);
  CHECK(m(0, column(p11, CurveId::b())) == 1);

  auto p20 = pres(2, 0);
  auto m20 = relation_matrix(p20);
  std::size_t row = 0;
  for (; row < p20.relations.size(); ++row)
    if (p20.relations[row].name == "E_{1,1,2}") break;
  REQUIRE(row < p20.relations.size());
  CHECK(m20(row, column(p20, CurveId::a(1))) == -6);
  CHECK(m20(row, column(p20, CurveId::a(2))) == -3);
  CHECK(m20(row, column(p20, CurveId::b())) == -3);
  CHECK(m20(row, column(p20, CurveId::c(1, 2))) == 1);
  CHECK(m20(row, column(p20, CurveId::c(2, 1))) == 1);

  Presentation empty;
  empty.generators = {CurveId::b()};
  CHECK(relation_matrix(empty).rows() == 0);
}

TEST_CASE("smith normal form examples") {
  Matrix d(2, 2);
  d(0, 0) = 2;
  d(1, 1) = 3;
  auto f = smith_normal_form(d);
  CHECK(f.D(0, 0) == 1);
  CHECK(f.D(1, 1) == 6);
  CHECK(smith_normal_form(Matrix(3, 4)).D.is_zero());
  CHECK(invariant_factors(d) == std::vector<Integer>{1, 6});
}

TEST_CASE("smith normal form on random 6x6") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> e(-9, 9);
  for (int t = 0; t < 50; ++t) {
    Matrix m(6, 6);
    for (std::size_t i = 0; i < 6; ++i)
      for (std::size_t j = 0; j < 6; ++j) m(i, j) = e(rng);
    auto f = smith_normal_form(m);
    CHECK(f.U * m * f.V == f.D);
    CHECK(abs(determinant(f.U)) == 1);
    CHECK(abs(determinant(f.V)) == 1);
  }
}

TEST_CASE("abelianization") {
  CHECK(format_invariants(abelian_invariants(pres(1, 1))) == "Z");
  auto a20 = abelian_invariants(pres(2, 0));
  CHECK(a20.free_rank == 0);
  CHECK(a20.torsion == std::vector<Integer>{10});
  CHECK(format_invariants(abelian_invariants(pres(3, 0))) == "0");
  auto s = make_signature(2, 0);
  CHECK(format_invariants(abelian_invariants(presentation(s, shipped_configuration(s), false))) == "Z/10");
  AbelianInvariants x{2, {2, 4}};
  CHECK(format_invariants(x) == "Z^2 + Z/2 + Z/4");
}
