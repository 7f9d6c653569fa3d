#include "mcg/homology.hpp"

#include <stdexcept>

namespace mcg {

HomologyOracle::HomologyOracle(const CurveConfiguration& cfg) : cfg_(cfg) {
  const std::size_t r = cfg_.rank();
  for (const auto& [curve, v] : cfg_.homology) {
    if (v.size() != r) throw std::invalid_argument("homology vector of " + curve.token() + " has wrong length");
    Twist t{v, Vector(r)};
    // <x,c> = sum_p x_p J(p,q) c_q
    for (std::size_t p = 0; p < r; ++p)
      for (std::size_t q = 0; q < r; ++q) t.jc[p] += cfg_.pairing(p, q) * v[q];
    twists_.emplace(curve, std::move(t));
  }
}

const HomologyOracle::Twist& HomologyOracle::twist(const CurveId& c) const {
  auto it = twists_.find(c);
  if (it == twists_.end()) throw std::invalid_argument("no homology class for generator " + c.token());
  return it->second;
}

Matrix HomologyOracle::transvection(const CurveId& c) const { return evaluate(Word{{c, 1}}); }

Matrix HomologyOracle::evaluate(const Word& w) const {
  const std::size_t r = cfg_.rank();
  Matrix m = Matrix::identity(r);
  Vector mc(r);
  for (const auto& l : w) {
    const Twist& t = twist(l.gen);
    // M T^{+-1} = M +- (M c)(J c)^T
    for (std::size_t i = 0; i < r; ++i) {
      mc[i] = 0;
      for (std::size_t k = 0; k < r; ++k)
        if (t.c[k] != 0) mc[i] += m(i, k) * t.c[k];
    }
    for (std::size_t i = 0; i < r; ++i) {
      if (mc[i] == 0) continue;
      for (std::size_t j = 0; j < r; ++j) {
        if (t.jc[j] == 0) continue;
        if (l.exp > 0) m(i, j) += mc[i] * t.jc[j];
        else m(i, j) -= mc[i] * t.jc[j];
      }
    }
  }
  return m;
}

bool HomologyOracle::check_equation(const Equation& eq) const { return evaluate(eq.lhs) == evaluate(eq.rhs); }

Report HomologyOracle::check_equations(const std::vector<Equation>& eqs, const std::string& title) const {
  Report rep;
  rep.title = title;
  for (const auto& e : eqs) rep.add(e.name, check_equation(e));
  return rep;
}

Matrix transvection(const CurveConfiguration& cfg, const CurveId& c) { return HomologyOracle(cfg).transvection(c); }

Matrix evaluate(const CurveConfiguration& cfg, const Word& w) { return HomologyOracle(cfg).evaluate(w); }

bool check_equation(const CurveConfiguration& cfg, const Equation& eq) { return HomologyOracle(cfg).check_equation(eq); }

Report check_presentation(const CurveConfiguration& cfg) {
  const auto pres = presentation(cfg.signature, cfg, true);
  const auto& s = cfg.signature;
  return HomologyOracle(cfg).check_equations(
      pres.relations, "relations of (" + std::to_string(s.g) + "," + std::to_string(s.n) + ")");
}

}  // namespace mcg
