#pragma once

#include "mcg/surface.hpp"
#include "mcg/word.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mcg {

enum class RelationKind : std::uint8_t { Handle, Braid, Star, Derived };
std::string_view to_string(RelationKind k);
RelationKind parse_relation_kind(std::string_view s);

struct Equation {
  std::string name;
  RelationKind kind = RelationKind::Derived;
  Word lhs;
  Word rhs;
  bool operator==(const Equation&) const = default;
};

struct Presentation {
  Signature signature;
  std::vector<CurveId> generators;
  std::vector<Equation> relations;

  const Equation* find(std::string_view name) const;
  bool operator==(const Presentation&) const = default;
};

struct BadTriple : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::string triple_name(char prefix, int i, int j, int k);  // "E_{1,2,3}"

std::vector<Equation> handle_relations(const Signature& sig);
std::vector<Equation> braid_relations(const Signature& sig, const CurveConfiguration& cfg);
std::vector<Equation> star_relations(const Signature& sig);
Equation star_relation(const Signature& sig, int i, int j, int k);

// With include_handles unset, c_{2i,2i+1} is replaced by c_{2i-1,2i} everywhere and
// relations that become trivial or repeat an earlier one are dropped.
Presentation presentation(const Signature& sig, const CurveConfiguration& cfg, bool include_handles = true);

struct StarWords {
  Word X1, X2, X3;
};
StarWords star_lemma_words(int i, int j, int k);

// a_i c_{i,j} c_{j,k} a_k = c_{i,k} a_j X a_j X^-1 with X = b a_i a_k b.
Equation lantern_relation(const Signature& sig, int i, int j, int k);

// Lanterns over good triples, then the star-lemma identities
// (a_i a_j a_k b)^3 = X1 X2 X3 for non-constant triples and (a_i a_j b)^4 = (a_i b a_j)^4 for i != j.
std::vector<Equation> derived_identities(const Signature& sig);

// Curve indices wrapped through cyclic_index, c_{l,l} dropped.
Word c_word(const Signature& sig, int i, int j);

}  // namespace mcg
