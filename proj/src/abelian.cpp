#include "mcg/abelian.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <utility>

namespace mcg {

std::string format_invariants(const AbelianInvariants& a) {
  std::vector<std::string> parts;
  if (a.free_rank == 1) parts.push_back("Z");
  else if (a.free_rank > 1) parts.push_back("Z^" + std::to_string(a.free_rank));
  for (const auto& t : a.torsion) parts.push_back("Z/" + t.get_str());
  if (parts.empty()) return "0";
  std::string s = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) s += " + " + parts[i];
  return s;
}

Matrix relation_matrix(const Presentation& pres) {
  std::map<CurveId, std::size_t> col;
  for (std::size_t j = 0; j < pres.generators.size(); ++j) col[pres.generators[j]] = j;
  Matrix m(pres.relations.size(), pres.generators.size());
  for (std::size_t i = 0; i < pres.relations.size(); ++i) {
    const auto& e = pres.relations[i];
    for (const auto& l : e.lhs) m(i, col.at(l.gen)) += l.exp;
    for (const auto& l : e.rhs) m(i, col.at(l.gen)) -= l.exp;
  }
  return m;
}

namespace {

// Elimination on D with optional tracking of the row transform U and column transform V.
class Smith {
public:
  Smith(const Matrix& m, bool track) : D(m), track_(track) {
    if (track_) {
      U = Matrix::identity(m.rows());
      V = Matrix::identity(m.cols());
    }
  }

  void run() {
    const std::size_t rows = D.rows(), cols = D.cols();
    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
      if (!place_pivot(t)) break;
      for (;;) {
        bool dirty = false;
        for (std::size_t i = t + 1; i < rows; ++i) {
          if (D(i, t) == 0) continue;
          Integer q;
          mpz_fdiv_q(q.get_mpz_t(), D(i, t).get_mpz_t(), D(t, t).get_mpz_t());
          add_row(i, t, -q);
          if (D(i, t) != 0) dirty = true;
        }
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (D(t, j) == 0) continue;
          Integer q;
          mpz_fdiv_q(q.get_mpz_t(), D(t, j).get_mpz_t(), D(t, t).get_mpz_t());
          add_col(j, t, -q);
          if (D(t, j) != 0) dirty = true;
        }
        if (!dirty) {
          // Pivot must divide the rest of the block; otherwise fold an offending row in.
          std::optional<std::size_t> bad;
          for (std::size_t i = t + 1; i < rows && !bad; ++i)
            for (std::size_t j = t + 1; j < cols; ++j)
              if (D(i, j) % D(t, t) != 0) {
                bad = i;
                break;
              }
          if (!bad) break;
          add_row(t, *bad, 1);
        }
        // Restore a minimal pivot in row/column t.
        place_pivot_line(t);
      }
      if (D(t, t) < 0) negate_row(t);
    }
  }

  Matrix D, U, V;

private:
  bool place_pivot(std::size_t t) {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    for (std::size_t i = t; i < D.rows(); ++i)
      for (std::size_t j = t; j < D.cols(); ++j)
        if (D(i, j) != 0 && (!best || abs(D(i, j)) < abs(D(best->first, best->second)))) best = {{i, j}};
    if (!best) return false;
    swap_rows(t, best->first);
    swap_cols(t, best->second);
    return true;
  }

  void place_pivot_line(std::size_t t) {
    std::size_t bi = t, bj = t;
    for (std::size_t i = t; i < D.rows(); ++i)
      if (D(i, t) != 0 && (D(bi, bj) == 0 || abs(D(i, t)) < abs(D(bi, bj)))) bi = i, bj = t;
    for (std::size_t j = t; j < D.cols(); ++j)
      if (D(t, j) != 0 && (D(bi, bj) == 0 || abs(D(t, j)) < abs(D(bi, bj)))) bi = t, bj = j;
    swap_rows(t, bi);
    swap_cols(t, bj);
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < D.cols(); ++j) std::swap(D(a, j), D(b, j));
    if (track_)
      for (std::size_t j = 0; j < U.cols(); ++j) std::swap(U(a, j), U(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < D.rows(); ++i) std::swap(D(i, a), D(i, b));
    if (track_)
      for (std::size_t i = 0; i < V.rows(); ++i) std::swap(V(i, a), V(i, b));
  }
  // row a += k * row b
  void add_row(std::size_t a, std::size_t b, const Integer& k) {
    for (std::size_t j = 0; j < D.cols(); ++j)
      if (D(b, j) != 0) D(a, j) += k * D(b, j);
    if (track_)
      for (std::size_t j = 0; j < U.cols(); ++j)
        if (U(b, j) != 0) U(a, j) += k * U(b, j);
  }
  // col a += k * col b
  void add_col(std::size_t a, std::size_t b, const Integer& k) {
    for (std::size_t i = 0; i < D.rows(); ++i)
      if (D(i, b) != 0) D(i, a) += k * D(i, b);
    if (track_)
      for (std::size_t i = 0; i < V.rows(); ++i)
        if (V(i, b) != 0) V(i, a) += k * V(i, b);
  }
  void negate_row(std::size_t a) {
    for (std::size_t j = 0; j < D.cols(); ++j) D(a, j) = -D(a, j);
    if (track_)
      for (std::size_t j = 0; j < U.cols(); ++j) U(a, j) = -U(a, j);
  }

  bool track_;
};

}  // namespace

SmithForm smith_normal_form(const Matrix& m) {
  Smith s(m, true);
  s.run();
  return {std::move(s.U), std::move(s.D), std::move(s.V)};
}

std::vector<Integer> invariant_factors(const Matrix& m) {
  Smith s(m, false);
  s.run();
  std::vector<Integer> out;
  for (std::size_t t = 0; t < std::min(m.rows(), m.cols()); ++t) out.push_back(s.D(t, t));
  return out;
}

AbelianInvariants abelian_invariants(const Presentation& pres) {
  const Matrix m = relation_matrix(pres);
  AbelianInvariants a;
  std::size_t rank = 0;
  for (const auto& d : invariant_factors(m)) {
    if (d == 0) continue;
    ++rank;
    if (d > 1) a.torsion.push_back(d);
  }
  a.free_rank = pres.generators.size() - rank;
  return a;
}

}  // namespace mcg
