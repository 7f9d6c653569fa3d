#pragma once

#include "mcg/homology.hpp"
#include "mcg/presentation.hpp"
#include "mcg/report.hpp"
#include "mcg/serialize.hpp"
#include "mcg/surface.hpp"
#include "mcg/word.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

namespace mcg {

struct DegenerateTarget : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct GenMap {
  Signature source;
  Signature target;
  std::map<CurveId, Word> table;
  bool operator==(const GenMap&) const = default;
};

// Capping the last boundary component: G_{g,n} -> G_{g,n-1}.
GenMap g2_generator_map(const Signature& sig);

Word apply_gen_map(const GenMap& map, const Word& w);

// Basis projection H_1(source) -> H_1(target) matching the shipped bases.
Matrix collapse_matrix(const CurveConfiguration& source, const CurveConfiguration& target);
Matrix collapse_matrix(const Signature& sig);

struct SquareCheckOptions {
  int random_words = 100;
  int max_length = 20;
  std::uint64_t seed = 20240601;
};

Report verify_gen_map(const GenMap& map, const CurveConfiguration& source, const CurveConfiguration& target,
                      const SquareCheckOptions& opts = {});

struct KernelFamily {
  std::vector<Word> x;  // x_0, x_1, ...
  Word d_n;
};

KernelFamily kernel_generators(const Signature& sig);

// Relations II (g >= 2) and III (g >= 3) of the minimal-generator presentation, rewritten
// over the curve generators.
std::vector<Equation> wajnryb_relators(const Signature& sig);

json to_json(const GenMap& map);
GenMap genmap_from_json(const json& j);

}  // namespace mcg
