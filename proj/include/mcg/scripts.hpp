#pragma once

#include "mcg/rewrite.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace mcg {

// Template preprocessing used by the shipped scripts:
//   @i @j @k          index variables, @(2i-1) small linear expressions
//   let X = WORD      word macro, later used as $X, $X' (inverse) or $X^3
//   [W | X]           conjugate W X W^-1
std::string expand_script_template(std::string_view text, const std::map<char, int>& vars);

// Dependency-ordered scripts whose constraints and dependencies are met at sig.
std::vector<DerivationScript> shipped_scripts(const Signature& sig);

struct ReplayOutcome {
  Library library;
  std::vector<CheckResult> results;  // one per script, in order
  Report report;                     // one entry per script
};

ReplayOutcome replay_scripts(const Presentation& pres, const std::vector<DerivationScript>& scripts,
                             Library library = {});

}  // namespace mcg
