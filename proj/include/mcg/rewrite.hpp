#pragma once

#include "mcg/homology.hpp"
#include "mcg/presentation.hpp"
#include "mcg/report.hpp"
#include "mcg/word.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mcg {

inline constexpr std::size_t kDefaultBraidBudget = 100000;

struct Step {
  enum class Kind { FreeCancel, FreeInsert, Apply, AutoBraid, FreeEqual };
  // Relator: replace `length` letters at pos by `replacement`, legal when the pair is a
  // cyclic conjugate of the equation's relator lhs rhs^-1 or its inverse.
  enum class Direction { Forward, Backward, Relator };

  Kind kind = Kind::FreeCancel;
  std::size_t pos = 0;
  bool search = false;  // "apply NAME *": position and split found from the expected word
  Letter letter{};
  std::string name;
  Direction dir = Direction::Forward;
  std::size_t length = 0;
  Word replacement;
  std::size_t budget = kDefaultBraidBudget;
  std::optional<Word> expected;
  int line = 0;

  bool operator==(const Step& o) const {
    return kind == o.kind && pos == o.pos && search == o.search && letter == o.letter && name == o.name &&
           dir == o.dir && length == o.length && replacement == o.replacement && budget == o.budget &&
           expected == o.expected;
  }
};

struct Constraint {
  char var = 'g';  // g, n or N
  std::string op;  // >=, <=, ==, >, <, !=
  int value = 0;
  bool operator==(const Constraint&) const = default;
};

struct DerivationScript {
  std::string name;
  std::vector<Constraint> require;
  std::vector<std::string> uses;
  Equation claim;
  std::vector<Step> steps;
  bool operator==(const DerivationScript&) const = default;
};

bool constraints_hold(const std::vector<Constraint>& cs, const Signature& sig);

class Library {
public:
  enum class Insert { Added, Unchanged, Conflict };

  Insert insert(const Equation& e);
  const Equation* find(std::string_view name) const;
  const std::vector<Equation>& equations() const { return eqs_; }
  std::size_t size() const { return eqs_.size(); }
  bool operator==(const Library&) const = default;

private:
  std::vector<Equation> eqs_;
  std::map<std::string, std::size_t, std::less<>> index_;
};

enum class CheckError { None, StepMismatch, UnresolvedName, BudgetExceeded, ConstraintUnsatisfied, InvalidStep, Conflict };
std::string_view to_string(CheckError e);

struct CheckResult {
  bool ok = false;
  CheckError error = CheckError::None;
  std::size_t step_index = 0;  // failing step; steps.size() for the final comparison
  std::string message;
  Word expected;
  Word actual;
  std::vector<Step> expanded;  // primitive steps actually performed (search and braid resolved)
};

struct CheckOptions {
  bool record_expansion = false;
};

CheckResult check_script(const Presentation& pres, Library& library, const DerivationScript& script,
                         const CheckOptions& opts = {});

struct BridgeResult {
  std::optional<std::vector<Step>> steps;
  bool budget_exhausted = false;
  std::size_t visited = 0;
  std::size_t moves = 0;  // braid/cancellation moves on the shortest path found
};

// Bidirectional search over words modulo commutation, using braid substitutions and free
// cancellations that do not lengthen the word. Steps returned are primitive (positions explicit).
BridgeResult auto_braid_bridge(const Presentation& pres, const Word& from, const Word& to,
                               std::size_t budget = kDefaultBraidBudget);

Report verify_library(const CurveConfiguration& cfg, const Library& library);

// Line-oriented script text, version 1.
struct ScriptParseError : std::runtime_error {
  ScriptParseError(int line, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line) + ": " + msg), line(line) {}
  int line;
};

std::vector<DerivationScript> parse_scripts(std::string_view text);
std::string format_script(const DerivationScript& s);
std::string format_scripts(const std::vector<DerivationScript>& s);
std::string format_step(const Step& s);

}  // namespace mcg
