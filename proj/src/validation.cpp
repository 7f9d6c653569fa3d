#include "mcg/homology.hpp"
#include "mcg/surface.hpp"

#include <exception>

namespace mcg {

namespace {

std::string pair_name(const CurveId& x, const CurveId& y) { return "(" + x.token() + "," + y.token() + ")"; }

}  // namespace

ValidationReport validate_configuration(const CurveConfiguration& cfg) {
  ValidationReport rep;
  auto& v = rep.violations;
  const auto& sig = cfg.signature;
  const std::size_t r = cfg.rank();

  if (cfg.pairing.rows() != r || cfg.pairing.cols() != r) {
    v.push_back("pairing matrix is not " + std::to_string(r) + "x" + std::to_string(r));
    return rep;
  }
  for (std::size_t p = 0; p < r; ++p)
    for (std::size_t q = 0; q < r; ++q)
      if (cfg.pairing(p, q) != -cfg.pairing(q, p))
        v.push_back("pairing matrix not skew at (" + std::to_string(p) + "," + std::to_string(q) + ")");

  const auto gens = enumerate_generators(sig);
  for (const auto& c : gens) {
    auto it = cfg.homology.find(c);
    if (it == cfg.homology.end()) v.push_back("missing homology class for " + c.token());
    else if (it->second.size() != r) v.push_back("homology class of " + c.token() + " has wrong length");
  }
  for (const auto& [key, cl] : cfg.table)
    if (!curve_in_signature(sig, key.first) || !curve_in_signature(sig, key.second) || !(key.first < key.second))
      v.push_back("intersection entry " + pair_name(key.first, key.second) + " is not a generator pair");
  if (!v.empty()) return rep;

  for (std::size_t p = 0; p < gens.size(); ++p)
    for (std::size_t q = p + 1; q < gens.size(); ++q) {
      const auto cl = intersection_class(cfg, gens[p], gens[q]);
      if (cl == IntersectionClass::Many) continue;
      Integer e = pairing(cfg, cfg.homology.at(gens[p]), cfg.homology.at(gens[q]));
      if (cl == IntersectionClass::One && abs(e) != 1)
        v.push_back("pair " + pair_name(gens[p], gens[q]) + " is One but pairs to " + e.get_str());
      if (cl == IntersectionClass::Zero && e != 0)
        v.push_back("pair " + pair_name(gens[p], gens[q]) + " is Zero but pairs to " + e.get_str());
    }

  for (int i = 1; i <= sig.n; ++i) {
    auto d = boundary_curve(sig, i);
    if (!d) continue;
    const Vector& h = cfg.homology.at(*d);
    for (std::size_t p = 0; p < r; ++p) {
      Vector e(r);
      e[p] = 1;
      if (pairing(cfg, h, e) != 0) {
        v.push_back("boundary curve " + d->token() + " has nonzero pairing with basis vector " + cfg.basis[p]);
        break;
      }
    }
    for (const auto& c : gens)
      if (c != *d && intersection_class(cfg, *d, c) != IntersectionClass::Zero)
        v.push_back("boundary curve " + d->token() + " meets " + c.token());
  }

  // Chain a1, b, a2, b1, c_{2,4}, b2, ..., b_{g-1}: consecutive curves meet once, others are disjoint.
  auto h = wajnryb_subset(sig);
  const std::size_t chain_len = sig.g >= 2 ? 2 * std::size_t(sig.g) : 2;
  for (std::size_t p = 0; p < chain_len; ++p)
    for (std::size_t q = p + 1; q < chain_len; ++q) {
      const auto want = q == p + 1 ? IntersectionClass::One : IntersectionClass::Zero;
      const auto got = intersection_class(cfg, h[p], h[q]);
      if (got != want)
        v.push_back("chain pair " + pair_name(h[p], h[q]) + " is " + std::string(to_string(got)) + ", expected " +
                    std::string(to_string(want)));
    }

  try {
    auto pres_rep = check_presentation(cfg);
    for (const auto& e : pres_rep.entries)
      if (!e.pass) v.push_back("relation " + e.name + " fails under the homology representation");
  } catch (const std::exception& ex) {
    v.push_back(std::string("homology check aborted: ") + ex.what());
  }
  return rep;
}

}  // namespace mcg
