#include "mcg/rewrite.hpp"
#include "mcg/scripts.hpp"

#include <doctest.h>

#include <algorithm>

using namespace mcg;

namespace {

Presentation pres(int g, int n) {
  auto s = make_signature(g, n);
  return presentation(s, shipped_configuration(s));
}

DerivationScript one(const std::string& text) {
  auto v = parse_scripts("mcg-script 1\n" + text);
  REQUIRE(v.size() == 1);
  return v[0];
}

std::size_t index_of(const std::vector<DerivationScript>& v, const std::string& name) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i].name == name) return i;
  return v.size();
}

}  // namespace

TEST_CASE("auto_braid_bridge") {
  auto p = pres(1, 1);
  auto r = auto_braid_bridge(p, parse_word("b a1 b"), parse_word("a1 b a1"), 2);
  REQUIRE(r.steps.has_value());
  CHECK(r.moves == 1);

  auto same = auto_braid_bridge(p, parse_word("a1 b"), parse_word("a1 b"));
  REQUIRE(same.steps.has_value());
  CHECK(same.steps->empty());

  auto none = auto_braid_bridge(p, parse_word("a1"), parse_word("b"));
  CHECK_FALSE(none.steps.has_value());

  // commuting letters at (2,0): a1 a2 = a2 a1 needs only the trace normal form
  auto p20 = pres(2, 0);
  auto c = auto_braid_bridge(p20, parse_word("a1 a2 b1"), parse_word("a2 b1 a1"));
  CHECK(c.steps.has_value());
}

TEST_CASE("check_script on a hand-written chain") {
  auto p = pres(2, 0);
  Library lib;
  auto s = one(R"(
script star_i
claim a1 b a1 a2 b = b a1 a2 b a2
  braid => b a1 b a2 b
  braid => b a1 a2 b a2
end
)");
  auto r = check_script(p, lib, s);
  CHECK(r.ok);
  CHECK(lib.find("star_i") != nullptr);

  // same claim, explicit primitive steps
  Library lib2;
  auto prim = one(R"(
script star_i_explicit
claim a1 b a1 a2 b = b a1 a2 b a2
  apply T_{b,a1} 0 bwd => b a1 b a2 b
  apply T_{b,a2} 2 fwd => b a1 a2 b a2
end
)");
  auto r2 = check_script(p, lib2, prim);
  CHECK_MESSAGE(r2.ok, r2.message);
}

TEST_CASE("final word off by one letter") {
  auto p = pres(2, 0);
  Library lib;
  auto s = one(R"(
script bad
claim a1 b a1 a2 b = b a1 a2 b a1
  braid => b a1 b a2 b
end
)");
  auto r = check_script(p, lib, s);
  CHECK_FALSE(r.ok);
  CHECK(r.error == CheckError::StepMismatch);
  CHECK(r.step_index == s.steps.size());
  CHECK(lib.size() == 0);
}

TEST_CASE("script errors") {
  auto p = pres(2, 0);
  Library lib;
  auto unresolved = one("script u\nclaim a1 = a1\n  apply nothing 0 fwd\nend\n");
  CHECK(check_script(p, lib, unresolved).error == CheckError::UnresolvedName);

  auto constrained = one("script c\nrequire g>=3\nclaim a1 = a1\nend\n");
  CHECK(check_script(p, lib, constrained).error == CheckError::ConstraintUnsatisfied);

  auto tight = one("script t\nclaim a1 b a1 a2 b = b a1 a2 b a2\n  braid 1 => b a1 a2 b a2\nend\n");
  CHECK(check_script(p, lib, tight).error == CheckError::BudgetExceeded);

  auto first = one("script dup\nclaim a1 a2 = a2 a1\n  braid => a2 a1\nend\n");
  CHECK(check_script(p, lib, first).ok);
  auto clash = one("script dup\nclaim b a1 b = a1 b a1\n  braid => a1 b a1\nend\n");
  CHECK(check_script(p, lib, clash).error == CheckError::Conflict);
}

TEST_CASE("script parser") {
  CHECK_THROWS_AS(parse_scripts("script x\n"), ScriptParseError);
  CHECK_THROWS_AS(parse_scripts("mcg-script 1\nscript x\nclaim a1 = a1\n"), ScriptParseError);
  CHECK_THROWS_AS(parse_scripts("mcg-script 1\nscript x\nclaim a1 = a1\n  wiggle 3\nend\n"), ScriptParseError);
  CHECK_THROWS_AS(parse_scripts("mcg-script 1\nscript x\nclaim a1 = a1 = b\nend\n"), ScriptParseError);
  try {
    parse_scripts("mcg-script 1\n\nscript x\nclaim a1 = a1\n  cancel q\nend\n");
    FAIL("expected a parse error");
  } catch (const ScriptParseError& e) {
    CHECK(e.line == 5);
  }

  auto all = shipped_scripts(make_signature(3, 1));
  auto text = format_scripts(all);
  CHECK(parse_scripts(text) == all);
}

TEST_CASE("shipped scripts") {
  auto s31 = shipped_scripts(make_signature(3, 1));
  const auto at = index_of(s31, "L_{1,2,4}");
  REQUIRE(at < s31.size());
  for (std::size_t i = 0; i < s31.size(); ++i)
    if (std::find(s31[i].uses.begin(), s31[i].uses.end(), "L_{1,2,4}") != s31[i].uses.end()) CHECK(i > at);
  for (std::size_t i = 0; i < s31.size(); ++i)
    for (const auto& u : s31[i].uses) CHECK(index_of(s31, u) < i);

  auto s11 = shipped_scripts(make_signature(1, 1));
  for (const auto& s : s11) CHECK(constraints_hold(s.require, make_signature(1, 1)));

  auto s20 = shipped_scripts(make_signature(2, 0));
  for (const char* n : {"star_comm_1_2", "star_comm_2_1", "star_prod_1_1_2", "star_prod_1_2_2", "star_prod_2_1_2",
                        "star_pow_1_2", "star_pow_2_1"})
    CHECK_MESSAGE(index_of(s20, n) < s20.size(), n);
}

TEST_CASE("replay at (2,0)") {
  auto s = make_signature(2, 0);
  auto cfg = shipped_configuration(s);
  auto p = presentation(s, cfg);
  auto scripts = shipped_scripts(s);
  auto first = replay_scripts(p, scripts);
  CHECK(first.report.ok());
  CHECK(first.library.size() == scripts.size());
  CHECK(verify_library(cfg, first.library).ok());

  auto second = replay_scripts(p, scripts, first.library);
  CHECK(second.report.ok());
  CHECK(second.library == first.library);
}

TEST_CASE("verify_library") {
  auto cfg = shipped_configuration(make_signature(2, 0));
  CHECK(verify_library(cfg, Library{}).ok());
  Library lib;
  lib.insert(star_relation(cfg.signature, 1, 1, 2));
  lib.insert({"tampered", RelationKind::Derived, parse_word("a1 b a1"), parse_word("b a1 a1")});
  auto r = verify_library(cfg, lib);
  CHECK(r.failures() == 1);
  for (const auto& e : r.entries) CHECK(e.pass == (e.name != "tampered"));
}

TEST_CASE("template expansion") {
  auto t = expand_script_template("script s_@i_@(2i-1)\nlet X = a@i b\nclaim [ $X | c@i_@i ] = $X^2'\nend\n",
                                  {{'i', 2}});
  auto v = parse_scripts("mcg-script 1\n" + t);
  REQUIRE(v.size() == 1);
  CHECK(v[0].name == "s_2_3");
  CHECK(v[0].claim.lhs == parse_word("a2 b b' a2'"));
  CHECK(v[0].claim.rhs == parse_word("b' a2' b' a2'"));
}
