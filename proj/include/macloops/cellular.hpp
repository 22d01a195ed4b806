#ifndef MACLOOPS_CELLULAR_HPP
#define MACLOOPS_CELLULAR_HPP

// Cellular chain complex of Z_K inside the polydisc: every coordinate
// carries a point, the boundary 1-cell S, or the 2-cell D; a cell (I, J)
// has the D factors on I (a face of K) and the S factors on J.

#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "macloops/exact.hpp"
#include "macloops/simplicial.hpp"

namespace macloops {

struct Cell {
  VertexSet disc_set;    // I: coordinates with the 2-cell D
  VertexSet circle_set;  // J: coordinates with the 1-cell S

  int dimension() const {
    return 2 * (int)disc_set.size() + (int)circle_set.size();
  }
  auto operator<=>(const Cell&) const = default;
};

/// Finitely supported integer combination of cells.
using CellularChain = std::map<Cell, long long>;

inline void chain_add(CellularChain& chain, const Cell& c, long long coeff) {
  auto it = chain.find(c);
  if (it == chain.end()) {
    if (coeff != 0) chain[c] = coeff;
  } else {
    it->second += coeff;
    if (it->second == 0) chain.erase(it);
  }
}

inline CellularChain chain_sum(const CellularChain& a, const CellularChain& b) {
  CellularChain out = a;
  for (const auto& [c, n] : b) chain_add(out, c, n);
  return out;
}

inline CellularChain chain_scale(long long n, const CellularChain& a) {
  CellularChain out;
  for (const auto& [c, k] : a)
    if (n * k != 0) out[c] = n * k;
  return out;
}

/// Dimension of a homogeneous chain; nullopt for the zero chain.
inline std::optional<int> chain_dimension(const CellularChain& chain) {
  std::optional<int> dim;
  for (const auto& [c, n] : chain) {
    if (dim && *dim != c.dimension())
      throw std::invalid_argument("inhomogeneous cellular chain");
    dim = c.dimension();
  }
  return dim;
}

/// All cells (I, J) of the given dimension, ordered by (I, J).
inline std::vector<Cell> cells_of(const SimplicialComplex& k, int dim) {
  if (dim < 0) throw std::invalid_argument("cell dimension must be >= 0");
  std::vector<Cell> out;
  const int m = k.m();
  for (const auto& face : k.all_faces()) {
    const int need = dim - 2 * (int)face.size();
    if (need < 0) continue;
    VertexSet rest;
    for (int v = 1; v <= m; ++v)
      if (!std::binary_search(face.begin(), face.end(), v)) rest.push_back(v);
    if (need > (int)rest.size()) continue;
    // all |need|-subsets of rest, lexicographic
    std::vector<int> idx(need);
    for (int i = 0; i < need; ++i) idx[i] = i;
    while (true) {
      VertexSet j;
      for (int i : idx) j.push_back(rest[i]);
      out.push_back(Cell{face, j});
      int p = need - 1;
      while (p >= 0 && idx[p] == (int)rest.size() - need + p) --p;
      if (p < 0) break;
      ++idx[p];
      for (int q = p + 1; q < need; ++q) idx[q] = idx[q - 1] + 1;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Boundary: dD_i = S_i, dS_i = 0, graded Leibniz over ascending factors
/// (deg S = 1, deg D = 2). The sign counts S factors left of position i.
inline CellularChain boundary(const CellularChain& chain) {
  CellularChain out;
  for (const auto& [c, n] : chain) {
    for (size_t k = 0; k < c.disc_set.size(); ++k) {
      const int i = c.disc_set[k];
      int crossings = 0;
      for (int j : c.circle_set)
        if (j < i) ++crossings;
      Cell d;
      d.disc_set = c.disc_set;
      d.disc_set.erase(d.disc_set.begin() + k);
      d.circle_set = set_union(c.circle_set, {i});
      chain_add(out, d, (crossings % 2 == 0) ? n : -n);
    }
  }
  return out;
}

inline bool is_cycle(const CellularChain& chain) { return boundary(chain).empty(); }

inline IntMat boundary_matrix(const std::vector<Cell>& lo,
                              const std::vector<Cell>& hi) {
  std::map<Cell, int> index;
  for (size_t i = 0; i < lo.size(); ++i) index[lo[i]] = (int)i;
  IntMat d = IntMat::Constant(lo.size(), hi.size(), Int(0));
  for (size_t j = 0; j < hi.size(); ++j) {
    CellularChain b = boundary({{hi[j], 1}});
    for (const auto& [c, n] : b) d(index.at(c), j) = n;
  }
  return d;
}

struct ZkHomology {
  BettiVector ranks;
  std::map<int, std::vector<CellularChain>> basis;    // cycle reps per degree
  std::map<int, std::vector<Int>> torsion;            // invariant factors > 1
};

namespace detail {

inline RatVec chain_to_vector(const CellularChain& chain,
                              const std::vector<Cell>& cells) {
  std::map<Cell, int> index;
  for (size_t i = 0; i < cells.size(); ++i) index[cells[i]] = (int)i;
  RatVec v = RatVec::Constant(cells.size(), Rat(0));
  for (const auto& [c, n] : chain) {
    auto it = index.find(c);
    if (it == index.end())
      throw std::invalid_argument("chain uses a cell outside the complex");
    v(it->second) = Rat(n);
  }
  return v;
}

inline CellularChain vector_to_chain(const IntVec& v,
                                     const std::vector<Cell>& cells) {
  CellularChain out;
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (v(i) != 0) out[cells[i]] = (long long)v(i);
  return out;
}

}  // namespace detail

/// Integer homology of Z_K via Smith normal form, with a chosen basis of
/// representative cycles per degree. `preferred` cycles (per degree) are
/// used as the basis whenever they are cycles spanning the homology.
inline ZkHomology zk_homology(
    const SimplicialComplex& k,
    const std::map<int, std::vector<CellularChain>>& preferred = {}) {
  ZkHomology out;
  const int top = 2 * k.m();
  std::map<int, std::vector<Cell>> cells;
  for (int d = 0; d <= top + 1; ++d) cells[d] = cells_of(k, d);
  for (int d = 0; d <= top; ++d) {
    if (cells[d].empty()) continue;
    IntMat lower = boundary_matrix(cells[std::max(d - 1, 0)], cells[d]);
    if (d == 0) lower = IntMat::Constant(0, cells[0].size(), Int(0));
    IntMat upper = boundary_matrix(cells[d], cells[d + 1]);
    SmithResult lo = smith_normal_form(lower);
    SmithResult hi = smith_normal_form(upper);
    long betti = (long)cells[d].size() - lo.rank - hi.rank;
    for (const Int& f : hi.invariant_factors)
      if (f > 1) out.torsion[d].push_back(f);
    if (betti == 0) continue;
    out.ranks[d] = betti;

    // span of boundaries, then extend to the cycles by kernel vectors
    SpanBuilder span;
    RatMat upper_q(upper.rows(), upper.cols());
    for (Eigen::Index i = 0; i < upper.rows(); ++i)
      for (Eigen::Index j = 0; j < upper.cols(); ++j)
        upper_q(i, j) = Rat(upper(i, j));
    for (Eigen::Index j = 0; j < upper_q.cols(); ++j)
      span.add(upper_q.col(j));

    std::vector<CellularChain> reps;
    auto pref = preferred.find(d);
    if (pref != preferred.end() && (long)pref->second.size() == betti) {
      bool ok = true;
      SpanBuilder trial = span;
      for (const auto& chain : pref->second) {
        if (!is_cycle(chain) ||
            !trial.add(detail::chain_to_vector(chain, cells[d]))) {
          ok = false;
          break;
        }
      }
      if (ok) reps = pref->second;
    }
    if (reps.empty()) {
      RatMat lower_q(lower.rows(), lower.cols());
      for (Eigen::Index i = 0; i < lower.rows(); ++i)
        for (Eigen::Index j = 0; j < lower.cols(); ++j)
          lower_q(i, j) = Rat(lower(i, j));
      LinearSolution ker =
          gauss_solve(lower_q, RatVec::Constant(lower_q.rows(), Rat(0)));
      for (const RatVec& v : ker.nullspace) {
        if ((long)reps.size() == betti) break;
        if (span.add(v))
          reps.push_back(
              detail::vector_to_chain(primitive_integer(v), cells[d]));
      }
    }
    out.basis[d] = std::move(reps);
  }
  return out;
}

/// Coordinates of the cycle c in the given homology basis, modulo
/// boundaries. nullopt when [c] lies outside the span of the basis.
inline std::optional<RatVec> homology_coordinates(
    const SimplicialComplex& k, const CellularChain& c,
    const std::vector<CellularChain>& basis) {
  if (!is_cycle(c)) throw std::invalid_argument("chain is not a cycle");
  std::optional<int> dim = chain_dimension(c);
  if (!dim) return RatVec::Constant(basis.size(), Rat(0));
  std::vector<Cell> cells = cells_of(k, *dim);
  std::vector<Cell> above = cells_of(k, *dim + 1);
  IntMat upper = boundary_matrix(cells, above);
  RatMat a(cells.size(), basis.size() + above.size());
  for (size_t j = 0; j < basis.size(); ++j)
    a.col(j) = detail::chain_to_vector(basis[j], cells);
  for (size_t j = 0; j < above.size(); ++j)
    for (size_t i = 0; i < cells.size(); ++i)
      a(i, basis.size() + j) = Rat(upper(i, j));
  LinearSolution sol = gauss_solve(a, detail::chain_to_vector(c, cells));
  if (!sol.consistent) return std::nullopt;
  return RatVec(sol.particular.head(basis.size()));
}

// ---- text and JSON forms ----

/// Render ascending by index, e.g. "S1 D3 + D1 S3"; "0" for the zero chain.
inline std::string to_string(const Cell& c) {
  std::ostringstream os;
  bool first = true;
  size_t di = 0, si = 0;
  // merge the two sorted factor lists by index
  while (di < c.disc_set.size() || si < c.circle_set.size()) {
    bool take_disc = si == c.circle_set.size() ||
                     (di < c.disc_set.size() &&
                      c.disc_set[di] < c.circle_set[si]);
    if (!first) os << ' ';
    if (take_disc)
      os << 'D' << c.disc_set[di++];
    else
      os << 'S' << c.circle_set[si++];
    first = false;
  }
  if (first) os << "1";  // the basepoint cell
  return os.str();
}

inline std::string to_string(const CellularChain& chain) {
  if (chain.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [c, n] : chain) {
    if (first)
      os << (n < 0 ? "- " : "");
    else
      os << (n < 0 ? " - " : " + ");
    long long mag = n < 0 ? -n : n;
    if (mag != 1) os << mag << ' ';
    os << to_string(c);
    first = false;
  }
  return os.str();
}

/// Parse "S1 D3 + D1 S3" style chains (optional integer coefficients).
inline CellularChain parse_chain(const std::string& text) {
  CellularChain out;
  std::istringstream is(text);
  std::string tok;
  long long sign = 1, coeff = 1;
  Cell cur;
  bool have_factor = false;
  auto flush = [&]() {
    if (!have_factor) return;
    chain_add(out, cur, sign * coeff);
    cur = Cell{};
    coeff = 1;
    have_factor = false;
  };
  while (is >> tok) {
    if (tok == "+") {
      flush();
      sign = 1;
    } else if (tok == "-") {
      flush();
      sign = -1;
    } else if (tok[0] == 'S' || tok[0] == 'D') {
      int v = std::stoi(tok.substr(1));
      auto& dst = tok[0] == 'S' ? cur.circle_set : cur.disc_set;
      dst = set_union(dst, {v});
      have_factor = true;
    } else if (tok == "0") {
      flush();
    } else {
      coeff = std::stoll(tok);
      have_factor = true;  // allows a bare constant on the basepoint cell
    }
  }
  flush();
  return out;
}

}  // namespace macloops

#endif  // MACLOOPS_CELLULAR_HPP
