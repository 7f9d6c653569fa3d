#pragma once

#include "mcg/matrix.hpp"
#include "mcg/presentation.hpp"

#include <string>
#include <vector>

namespace mcg {

struct AbelianInvariants {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;  // entries > 1, each dividing the next
  bool operator==(const AbelianInvariants&) const = default;
};

// "0", "Z", "Z^2", "Z/10", "Z + Z/2 + Z/4"
std::string format_invariants(const AbelianInvariants& a);

// Row per relation, column per generator: exponent sums of lhs rhs^-1.
Matrix relation_matrix(const Presentation& pres);

struct SmithForm {
  Matrix U, D, V;  // U M V = D
};

SmithForm smith_normal_form(const Matrix& m);

// Diagonal of the Smith form only; no transforms are tracked.
std::vector<Integer> invariant_factors(const Matrix& m);

AbelianInvariants abelian_invariants(const Presentation& pres);

}  // namespace mcg
