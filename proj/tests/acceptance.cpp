// One line per criterion: "PASS|FAIL <id> <name> (<seconds> s, limit <limit> s) <detail>".
// Exit status is the number of failed criteria.
#include "mcg/abelian.hpp"
#include "mcg/homology.hpp"
#include "mcg/morphisms.hpp"
#include "mcg/presentation.hpp"
#include "mcg/scripts.hpp"
#include "mcg/serialize.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

using namespace mcg;

namespace {

// Time limits in seconds.
constexpr double kShapeLimit = 1.0;
constexpr double kOracleLimit = 30.0;
constexpr double kDerivedLimit = 30.0;
constexpr double kAbelLimit = 10.0;
constexpr double kReplayLimit = 10.0;
constexpr double kG2Limit = 10.0;
constexpr double kSnfLimit = 10.0;
constexpr double kRoundTripLimit = 30.0;

constexpr int kSnfTrials = 1000;
constexpr int kSnfMaxDim = 8;
constexpr int kSnfEntry = 9;
constexpr std::uint64_t kSnfSeed = 20240517;
constexpr int kSquareWords = 100;
constexpr int kSquareMaxLength = 20;

std::vector<Signature> grid() {
  std::vector<Signature> out;
  for (int g = 1; g <= 4; ++g)
    for (int n = 0; n <= 3; ++n)
      if (2 * g + n - 2 >= 1) out.push_back(make_signature(g, n));
  return out;
}

std::string sig_name(const Signature& s) { return "(" + std::to_string(s.g) + "," + std::to_string(s.n) + ")"; }

Presentation pres_of(const Signature& s) { return presentation(s, shipped_configuration(s)); }

std::size_t count_kind(const Presentation& p, RelationKind k) {
  std::size_t c = 0;
  for (const auto& e : p.relations) c += e.kind == k;
  return c;
}

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

Outcome shape() {
  Outcome o;
  auto p21 = pres_of(make_signature(2, 1));
  if (p21.generators.size() != 11) o.fail("(2,1) generators " + std::to_string(p21.generators.size()));
  if (count_kind(p21, RelationKind::Handle) != 1) o.fail("(2,1) handle count");
  if (count_kind(p21, RelationKind::Star) != 21) o.fail("(2,1) star count");
  auto p20 = pres_of(make_signature(2, 0));
  if (p20.generators.size() != 6) o.fail("(2,0) generators");
  if (count_kind(p20, RelationKind::Star) != 6) o.fail("(2,0) star count");
  auto p11 = pres_of(make_signature(1, 1));
  const bool exact = p11.generators == std::vector<CurveId>{CurveId::b(), CurveId::a(1)} &&
                     p11.relations.size() == 1 &&
                     ((p11.relations[0].lhs == parse_word("a1 b a1") && p11.relations[0].rhs == parse_word("b a1 b")) ||
                      (p11.relations[0].lhs == parse_word("b a1 b") && p11.relations[0].rhs == parse_word("a1 b a1")));
  if (!exact) o.fail("(1,1) is not <a1, b | a1 b a1 = b a1 b>");
  if (o.pass) o.detail = "(2,1): 11/1/21, (2,0): 6/6, (1,1) braid group";
  return o;
}

Outcome oracle_grid() {
  Outcome o;
  std::size_t total = 0;
  for (const auto& s : grid()) {
    auto r = check_presentation(shipped_configuration(s));
    total += r.entries.size();
    if (!r.ok()) o.fail(sig_name(s) + ": " + std::to_string(r.failures()) + " relations fail");
  }
  if (o.pass) o.detail = std::to_string(total) + " relations over " + std::to_string(grid().size()) + " signatures";
  return o;
}

Outcome derived_grid() {
  Outcome o;
  std::size_t total = 0;
  for (const auto& s : grid()) {
    auto r = HomologyOracle(shipped_configuration(s)).check_equations(derived_identities(s));
    total += r.entries.size();
    if (!r.ok()) o.fail(sig_name(s) + ": " + std::to_string(r.failures()) + " identities fail");
  }
  if (o.pass) o.detail = std::to_string(total) + " lantern and star-lemma identities";
  return o;
}

Outcome abelian() {
  Outcome o;
  const std::vector<std::pair<std::pair<int, int>, std::string>> want = {
      {{1, 1}, "Z"}, {{2, 0}, "Z/10"}, {{2, 1}, "Z/10"}, {{2, 2}, "Z/10"},
      {{3, 0}, "0"}, {{3, 1}, "0"},    {{4, 0}, "0"}};
  for (const auto& [gn, expect] : want) {
    auto s = make_signature(gn.first, gn.second);
    auto got = format_invariants(abelian_invariants(pres_of(s)));
    if (got != expect) o.fail(sig_name(s) + " gives " + got + ", want " + expect);
  }
  if (o.pass) o.detail = "7 signatures match";
  return o;
}

Outcome replay() {
  Outcome o;
  const auto s = make_signature(3, 1);
  const auto cfg = shipped_configuration(s);
  const auto scripts = shipped_scripts(s);
  const std::vector<std::string> minimum = {
      "star_comm_1_2", "star_prod_1_2_3", "star_xc_1_2_3", "L_{1,2,4}", "ak_1_3", "psi_theta",
      "h_a1",          "h_c12",           "h_a4",          "h_a2",      "h_m",    "x0_b",
      "x0_binv",       "x0_c12",          "x0_a2",         "x1_a1",     "x1_a1inv", "x1_aN",
      "x1_aNinv",      "x1_binv",         "x1_b",          "x1_a2",     "x1_a2_inv", "x1_b1"};
  std::set<std::string> names;
  for (const auto& sc : scripts) names.insert(sc.name);
  for (const auto& m : minimum)
    if (!names.count(m)) o.fail("missing script " + m);
  auto out = replay_scripts(pres_of(s), scripts);
  for (std::size_t i = 0; i < out.results.size(); ++i)
    if (!out.results[i].ok) o.fail(scripts[i].name + ": " + out.results[i].message);
  auto oracle = verify_library(cfg, out.library);
  if (!oracle.ok()) o.fail(std::to_string(oracle.failures()) + " proven claims fail the oracle");
  if (o.pass) o.detail = std::to_string(scripts.size()) + " scripts, " + std::to_string(out.library.size()) +
                         " claims proven and oracle-checked";
  return o;
}

Outcome g2_checks() {
  Outcome o;
  int maps = 0;
  for (const auto& s : grid()) {
    if (s.n < 1 || 2 * s.g + s.n - 3 < 1) continue;
    ++maps;
    const auto m = g2_generator_map(s);
    SquareCheckOptions opts;
    opts.random_words = kSquareWords;
    opts.max_length = kSquareMaxLength;
    auto r = verify_gen_map(m, shipped_configuration(s), shipped_configuration(m.target), opts);
    if (!r.ok()) o.fail(sig_name(s) + ": " + std::to_string(r.failures()) + " checks fail");
    auto k = kernel_generators(s);
    for (const auto& x : k.x)
      if (!reduce(apply_gen_map(m, x)).empty()) o.fail(sig_name(s) + ": kernel word " + format_word(x) + " survives");
    if (!reduce(apply_gen_map(m, k.d_n)).empty()) o.fail(sig_name(s) + ": d_n survives");
  }
  if (o.pass) o.detail = std::to_string(maps) + " maps";
  return o;
}

Outcome snf_suite() {
  Outcome o;
  std::mt19937_64 rng(kSnfSeed);
  std::uniform_int_distribution<int> dim(1, kSnfMaxDim), entry(-kSnfEntry, kSnfEntry);
  for (int t = 0; t < kSnfTrials; ++t) {
    Matrix m(dim(rng), dim(rng));
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = entry(rng);
    auto f = smith_normal_form(m);
    if (!(f.U * m * f.V == f.D)) o.fail("U M V != D at trial " + std::to_string(t));
    if (abs(determinant(f.U)) != 1 || abs(determinant(f.V)) != 1) o.fail("non-unimodular at trial " + std::to_string(t));
    Integer prev = 1;
    bool zero_seen = false;
    for (std::size_t i = 0; i < f.D.rows(); ++i)
      for (std::size_t j = 0; j < f.D.cols(); ++j) {
        const Integer& d = f.D(i, j);
        if (i != j) {
          if (d != 0) o.fail("off-diagonal entry at trial " + std::to_string(t));
          continue;
        }
        if (d < 0) o.fail("negative invariant factor at trial " + std::to_string(t));
        if (d == 0) {
          zero_seen = true;
        } else {
          if (zero_seen || d % prev != 0) o.fail("divisibility chain broken at trial " + std::to_string(t));
          prev = d;
        }
      }
  }
  if (o.pass) o.detail = std::to_string(kSnfTrials) + " matrices";
  return o;
}

Outcome round_trip() {
  Outcome o;
  for (const auto& s : grid()) {
    const auto cfg = shipped_configuration(s);
    for (bool handles : {true, false}) {
      auto p = presentation(s, cfg, handles);
      if (presentation_from_json(json::parse(to_json(p).dump())) != p) o.fail(sig_name(s) + " presentation");
    }
    if (configuration_from_json(json::parse(to_json(cfg).dump())) != cfg) o.fail(sig_name(s) + " configuration");
  }
  if (o.pass) o.detail = std::to_string(grid().size()) + " signatures";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> all = {
      {1, "presentation shape", kShapeLimit, shape},
      {2, "relation oracle on grid", kOracleLimit, oracle_grid},
      {3, "derived identities on grid", kDerivedLimit, derived_grid},
      {4, "abelianization", kAbelLimit, abelian},
      {5, "script replay at (3,1)", kReplayLimit, replay},
      {6, "g2 map checks", kG2Limit, g2_checks},
      {7, "smith normal form properties", kSnfLimit, snf_suite},
      {8, "json round-trip", kRoundTripLimit, round_trip},
  };
  int failed = 0;
  for (const auto& c : all) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > c.limit) o.fail("over time limit");
    failed += !o.pass;
    std::printf("%s %d %s (%.2f s, limit %.0f s) %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, secs, c.limit,
                o.detail.c_str());
    std::fflush(stdout);
  }
  return failed;
}
