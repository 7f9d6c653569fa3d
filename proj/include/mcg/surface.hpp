#pragma once

#include "mcg/matrix.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

namespace mcg {

struct DegenerateSignature : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Signature {
  int g = 1;
  int n = 1;
  int N = 1;  // leg count 2g+n-2
  bool operator==(const Signature&) const = default;
};

Signature make_signature(int g, int n);

// Representative of m modulo N in {1..N}.
int cyclic_index(const Signature& sig, long m);

enum class CurveKind : std::uint8_t { B, Bi, Ai, Cij };

struct CurveId {
  CurveKind kind = CurveKind::B;
  std::uint16_t i = 0;
  std::uint16_t j = 0;

  static CurveId b() { return {}; }
  static CurveId bi(int i) { return {CurveKind::Bi, std::uint16_t(i), 0}; }
  static CurveId a(int i) { return {CurveKind::Ai, std::uint16_t(i), 0}; }
  static CurveId c(int i, int j) { return {CurveKind::Cij, std::uint16_t(i), std::uint16_t(j)}; }

  auto operator<=>(const CurveId&) const = default;

  // "b", "b2", "a3", "c2_4"
  std::string token() const;
  // json spelling: "b", "b2", "a3", "c_2_4"
  std::string json_name() const;
};

// Accepts the token and json spellings; throws std::invalid_argument.
CurveId parse_curve(std::string_view s);

bool curve_in_signature(const Signature& sig, const CurveId& c);

std::vector<CurveId> enumerate_generators(const Signature& sig);
std::vector<CurveId> wajnryb_subset(const Signature& sig);

// delta_i = c_{2g-2+i, 2g-1+i}, 1 <= i <= n; absent when the two indices coincide.
std::optional<CurveId> boundary_curve(const Signature& sig, int i);

bool is_good_triple(const Signature& sig, int i, int j, int k);
std::vector<std::tuple<int, int, int>> enumerate_good_triples(const Signature& sig);

enum class IntersectionClass : std::uint8_t { Zero, One, Many };
std::string_view to_string(IntersectionClass c);
IntersectionClass parse_intersection_class(std::string_view s);

struct CurveConfiguration {
  Signature signature;
  std::vector<std::string> basis;            // homology basis labels
  Matrix pairing;                            // skew form on the basis
  std::map<CurveId, Vector> homology;        // every generator
  std::map<std::pair<CurveId, CurveId>, IntersectionClass> table;  // non-Zero, key ordered (x < y)

  std::size_t rank() const { return basis.size(); }
  bool operator==(const CurveConfiguration&) const = default;
};

// Configuration transcribed from the standard curve picture, parameterized by (g,n).
CurveConfiguration shipped_configuration(const Signature& sig);

IntersectionClass intersection_class(const CurveConfiguration& cfg, const CurveId& x, const CurveId& y);
void set_intersection_class(CurveConfiguration& cfg, const CurveId& x, const CurveId& y, IntersectionClass c);

Integer pairing(const CurveConfiguration& cfg, const Vector& x, const Vector& y);

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

ValidationReport validate_configuration(const CurveConfiguration& cfg);

}  // namespace mcg
