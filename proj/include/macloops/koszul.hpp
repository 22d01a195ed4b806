#ifndef MACLOOPS_KOSZUL_HPP
#define MACLOOPS_KOSZUL_HPP

// Finite reduced Koszul algebra Lambda[u_1..u_m] (x) k[K] / (v_i^2 = u_i v_i = 0)
// with du_i = v_i, dv_i = 0; deg u = 1, deg v = 2. Its cohomology is H^*(Z_K),
// and monomials u_J v_I pair against the cells (I, J) of the cellular model.

#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "macloops/cellular.hpp"
#include "macloops/exact.hpp"
#include "macloops/simplicial.hpp"

namespace macloops {

struct KoszulMonomial {
  VertexSet exterior_set;  // J: the u variables
  VertexSet face_set;      // I: the v variables, a face of K

  int degree() const {
    return (int)exterior_set.size() + 2 * (int)face_set.size();
  }
  auto operator<=>(const KoszulMonomial&) const = default;
};

using KoszulElement = std::map<KoszulMonomial, long long>;

inline void koszul_add(KoszulElement& e, const KoszulMonomial& mono,
                       long long coeff) {
  auto it = e.find(mono);
  if (it == e.end()) {
    if (coeff != 0) e[mono] = coeff;
  } else {
    it->second += coeff;
    if (it->second == 0) e.erase(it);
  }
}

inline KoszulElement koszul_sum(const KoszulElement& a, const KoszulElement& b) {
  KoszulElement out = a;
  for (const auto& [mono, n] : b) koszul_add(out, mono, n);
  return out;
}

inline KoszulElement koszul_scale(long long n, const KoszulElement& a) {
  KoszulElement out;
  for (const auto& [mono, k] : a)
    if (n * k != 0) out[mono] = n * k;
  return out;
}

inline std::optional<int> element_degree(const KoszulElement& e) {
  std::optional<int> deg;
  for (const auto& [mono, n] : e) {
    if (deg && *deg != mono.degree())
      throw std::invalid_argument("inhomogeneous Koszul element");
    deg = mono.degree();
  }
  return deg;
}

/// All monomials u_J v_I of the given degree, ordered by (J, I).
inline std::vector<KoszulMonomial> koszul_monomials(const SimplicialComplex& k,
                                                    int degree) {
  std::vector<KoszulMonomial> out;
  for (const Cell& c : cells_of(k, degree))
    out.push_back(KoszulMonomial{c.circle_set, c.disc_set});
  std::sort(out.begin(), out.end());
  return out;
}

/// d u_i = v_i extended as a degree +1 derivation; terms leaving the
/// face ring vanish.
inline KoszulElement differential(const KoszulElement& e,
                                  const SimplicialComplex& k) {
  KoszulElement out;
  for (const auto& [mono, n] : e) {
    for (size_t pos = 0; pos < mono.exterior_set.size(); ++pos) {
      const int j = mono.exterior_set[pos];
      VertexSet new_face = set_union(mono.face_set, {j});
      if (!k.is_face(new_face)) continue;
      KoszulMonomial d;
      d.exterior_set = mono.exterior_set;
      d.exterior_set.erase(d.exterior_set.begin() + pos);
      d.face_set = std::move(new_face);
      koszul_add(out, d, (pos % 2 == 0) ? n : -n);
    }
  }
  return out;
}

/// Graded-commutative product; the sign is the parity of the shuffle
/// sorting the concatenated u variables.
inline KoszulElement multiply(const KoszulElement& a, const KoszulElement& b,
                              const SimplicialComplex& k) {
  KoszulElement out;
  for (const auto& [ma, na] : a) {
    for (const auto& [mb, nb] : b) {
      if (!disjoint(ma.exterior_set, mb.exterior_set)) continue;
      if (!disjoint(ma.face_set, mb.face_set)) continue;
      VertexSet u = set_union(ma.exterior_set, mb.exterior_set);
      VertexSet v = set_union(ma.face_set, mb.face_set);
      if (!disjoint(u, v)) continue;  // u_i v_i = 0
      if (!k.is_face(v)) continue;
      long long inversions = 0;
      for (int x : ma.exterior_set)
        for (int y : mb.exterior_set)
          if (y < x) ++inversions;
      long long c = na * nb * (inversions % 2 == 0 ? 1 : -1);
      koszul_add(out, KoszulMonomial{u, v}, c);
    }
  }
  return out;
}

struct CohomologyClass {
  KoszulElement representative;
  int degree = 0;
};

namespace detail {

inline RatVec koszul_to_vector(const KoszulElement& e,
                               const std::vector<KoszulMonomial>& monos) {
  std::map<KoszulMonomial, int> index;
  for (size_t i = 0; i < monos.size(); ++i) index[monos[i]] = (int)i;
  RatVec v = RatVec::Constant(monos.size(), Rat(0));
  for (const auto& [mono, n] : e) {
    auto it = index.find(mono);
    if (it == index.end())
      throw std::invalid_argument("monomial outside the reduced Koszul basis");
    v(it->second) = Rat(n);
  }
  return v;
}

/// Matrix of d : degree p -> degree p+1 in the monomial bases.
inline RatMat differential_matrix(const SimplicialComplex& k, int p) {
  std::vector<KoszulMonomial> lo = koszul_monomials(k, p);
  std::vector<KoszulMonomial> hi = koszul_monomials(k, p + 1);
  std::map<KoszulMonomial, int> index;
  for (size_t i = 0; i < hi.size(); ++i) index[hi[i]] = (int)i;
  RatMat d = RatMat::Constant(hi.size(), lo.size(), Rat(0));
  for (size_t j = 0; j < lo.size(); ++j) {
    KoszulElement img = differential({{lo[j], 1}}, k);
    for (const auto& [mono, n] : img) d(index.at(mono), j) = Rat(n);
  }
  return d;
}

}  // namespace detail

inline bool is_cocycle(const KoszulElement& e, const SimplicialComplex& k) {
  return differential(e, k).empty();
}

/// Basis of H^p as cocycle representatives with integer coefficients.
inline std::vector<CohomologyClass> cohomology_basis(const SimplicialComplex& k,
                                                     int p) {
  std::vector<CohomologyClass> out;
  if (p < 0) return out;
  std::vector<KoszulMonomial> monos = koszul_monomials(k, p);
  if (monos.empty()) return out;
  RatMat d_up = detail::differential_matrix(k, p);
  LinearSolution ker =
      gauss_solve(d_up, RatVec::Constant(d_up.rows(), Rat(0)));
  SpanBuilder span;
  if (p > 0) {
    RatMat d_down = detail::differential_matrix(k, p - 1);
    for (Eigen::Index j = 0; j < d_down.cols(); ++j) span.add(d_down.col(j));
  }
  for (const RatVec& v : ker.nullspace) {
    if (!span.add(v)) continue;
    IntVec w = primitive_integer(v);
    KoszulElement rep;
    for (Eigen::Index i = 0; i < w.size(); ++i)
      if (w(i) != 0) rep[monos[i]] = (long long)w(i);
    out.push_back(CohomologyClass{std::move(rep), p});
  }
  return out;
}

/// True iff a - b is a coboundary; both inputs must be cocycles.
inline bool same_class(const KoszulElement& a, const KoszulElement& b,
                       const SimplicialComplex& k) {
  if (!is_cocycle(a, k) || !is_cocycle(b, k))
    throw std::invalid_argument("same_class needs cocycles");
  KoszulElement diff = koszul_sum(a, koszul_scale(-1, b));
  std::optional<int> deg = element_degree(diff);
  if (!deg) return true;
  if (*deg == 0) return false;  // constants are never coboundaries
  std::vector<KoszulMonomial> monos = koszul_monomials(k, *deg);
  RatMat d_down = detail::differential_matrix(k, *deg - 1);
  LinearSolution sol =
      gauss_solve(d_down, detail::koszul_to_vector(diff, monos));
  return sol.consistent;
}

/// Coefficient lambda with [e] = lambda [t]; nullopt if [e] is not a
/// multiple of [t] modulo coboundaries.
inline std::optional<Rat> class_coefficient(const KoszulElement& e,
                                            const KoszulElement& t,
                                            const SimplicialComplex& k) {
  if (e.empty()) return Rat(0);
  std::optional<int> deg = element_degree(e);
  if (*deg != *element_degree(t))
    throw std::invalid_argument("degree mismatch against the top class");
  std::vector<KoszulMonomial> monos = koszul_monomials(k, *deg);
  RatMat d_down = detail::differential_matrix(k, *deg - 1);
  RatMat a(monos.size(), 1 + d_down.cols());
  a.col(0) = detail::koszul_to_vector(t, monos);
  for (Eigen::Index j = 0; j < d_down.cols(); ++j) a.col(1 + j) = d_down.col(j);
  LinearSolution sol = gauss_solve(a, detail::koszul_to_vector(e, monos));
  if (!sol.consistent) return std::nullopt;
  return sol.particular(0);
}

/// M[a][b] with basis_p[a] * basis_q[b] = M[a][b] * t in cohomology.
inline RatMat product_pairing_table(const SimplicialComplex& k,
                                    const std::vector<CohomologyClass>& basis_p,
                                    const std::vector<CohomologyClass>& basis_q,
                                    const KoszulElement& t) {
  const int top = *element_degree(t);
  RatMat m = RatMat::Constant(basis_p.size(), basis_q.size(), Rat(0));
  for (size_t a = 0; a < basis_p.size(); ++a) {
    for (size_t b = 0; b < basis_q.size(); ++b) {
      if (basis_p[a].degree + basis_q[b].degree != top)
        throw std::invalid_argument("pairing degrees must sum to the top degree");
      KoszulElement prod =
          multiply(basis_p[a].representative, basis_q[b].representative, k);
      std::optional<Rat> c = class_coefficient(prod, t, k);
      if (!c)
        throw std::invalid_argument("product is not a multiple of the top class");
      m(a, b) = *c;
    }
  }
  return m;
}

/// Pairing of cochains against chains: u_J v_I picks out the cell (I, J).
inline long long evaluate(const KoszulElement& cochain,
                          const CellularChain& chain) {
  long long total = 0;
  for (const auto& [mono, n] : cochain) {
    auto it = chain.find(Cell{mono.face_set, mono.exterior_set});
    if (it != chain.end()) total += n * it->second;
  }
  return total;
}

// ---- text and JSON forms ----

inline std::string to_string(const KoszulMonomial& mono) {
  std::ostringstream os;
  bool first = true;
  for (int i : mono.exterior_set) {
    if (!first) os << ' ';
    os << 'u' << i;
    first = false;
  }
  for (int i : mono.face_set) {
    if (!first) os << ' ';
    os << 'v' << i;
    first = false;
  }
  if (first) os << "1";
  return os.str();
}

inline std::string to_string(const KoszulElement& e) {
  if (e.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [mono, n] : e) {
    if (first)
      os << (n < 0 ? "- " : "");
    else
      os << (n < 0 ? " - " : " + ");
    long long mag = n < 0 ? -n : n;
    if (mag != 1) os << mag << ' ';
    os << to_string(mono);
    first = false;
  }
  return os.str();
}

/// Parse "u1 u2 v4 - u3 v5" style elements.
inline KoszulElement parse_koszul(const std::string& text) {
  KoszulElement out;
  std::istringstream is(text);
  std::string tok;
  long long sign = 1, coeff = 1;
  KoszulMonomial cur;
  bool have_factor = false;
  auto flush = [&]() {
    if (!have_factor) return;
    koszul_add(out, cur, sign * coeff);
    cur = KoszulMonomial{};
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
    } else if (tok[0] == 'u' || tok[0] == 'v') {
      int i = std::stoi(tok.substr(1));
      auto& dst = tok[0] == 'u' ? cur.exterior_set : cur.face_set;
      dst = set_union(dst, {i});
      have_factor = true;
    } else if (tok == "0") {
      flush();
    } else {
      coeff = std::stoll(tok);
      have_factor = true;
    }
  }
  flush();
  return out;
}

}  // namespace macloops

#endif  // MACLOOPS_KOSZUL_HPP
