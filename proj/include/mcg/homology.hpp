#pragma once

#include "mcg/matrix.hpp"
#include "mcg/presentation.hpp"
#include "mcg/report.hpp"
#include "mcg/surface.hpp"
#include "mcg/word.hpp"

#include <map>
#include <vector>

namespace mcg {

// Sends the twist along c to x -> x + <x,[c]> [c]. Words act right to left, so a word
// evaluates to the ordered product of its letters' matrices.
class HomologyOracle {
public:
  explicit HomologyOracle(const CurveConfiguration& cfg);

  const CurveConfiguration& configuration() const { return cfg_; }
  Matrix transvection(const CurveId& c) const;
  Matrix evaluate(const Word& w) const;
  bool check_equation(const Equation& eq) const;
  Report check_equations(const std::vector<Equation>& eqs, const std::string& title = {}) const;

private:
  struct Twist {
    Vector c;   // [c]
    Vector jc;  // J [c], so that <x,[c]> = x . jc
  };
  const Twist& twist(const CurveId& c) const;

  CurveConfiguration cfg_;
  std::map<CurveId, Twist> twists_;
};

Matrix transvection(const CurveConfiguration& cfg, const CurveId& c);
Matrix evaluate(const CurveConfiguration& cfg, const Word& w);
bool check_equation(const CurveConfiguration& cfg, const Equation& eq);
Report check_presentation(const CurveConfiguration& cfg);

}  // namespace mcg
