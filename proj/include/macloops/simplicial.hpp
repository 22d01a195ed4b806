#ifndef MACLOOPS_SIMPLICIAL_HPP
#define MACLOOPS_SIMPLICIAL_HPP

// Simplicial complexes on [m] = {1..m}, stored by maximal faces.
// Flagness, full subcomplexes, connectivity, reduced simplicial homology
// over Q, and the Hochster decomposition of H^*(Z_K).

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "macloops/exact.hpp"

namespace macloops {

/// Strictly increasing sequence of vertices from [m].
using VertexSet = std::vector<int>;

inline VertexSet make_vertex_set(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

inline bool is_subset(const VertexSet& a, const VertexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline bool disjoint(const VertexSet& a, const VertexSet& b) {
  VertexSet tmp;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(tmp));
  return tmp.empty();
}

inline VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

/// Finitely supported map degree -> rank. Degree -1 holds the reduced
/// homology of the empty complex.
using BettiVector = std::map<int, long>;

class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  SimplicialComplex(int m, std::vector<VertexSet> maximal) : m_(m) {
    if (m < 0) throw std::invalid_argument("vertex count must be >= 0");
    for (auto& f : maximal) {
      f = make_vertex_set(std::move(f));
      for (int v : f)
        if (v < 1 || v > m)
          throw std::invalid_argument("vertex out of range 1..m");
    }
    // drop faces contained in another; canonical lexicographic order
    std::sort(maximal.begin(), maximal.end());
    maximal.erase(std::unique(maximal.begin(), maximal.end()), maximal.end());
    for (const auto& f : maximal) {
      bool dominated = false;
      for (const auto& g : maximal)
        if (f != g && is_subset(f, g)) {
          dominated = true;
          break;
        }
      if (!dominated) maximal_faces_.push_back(f);
    }
  }

  int m() const { return m_; }
  const std::vector<VertexSet>& maximal_faces() const { return maximal_faces_; }

  bool is_face(const VertexSet& i) const {
    for (int v : i)
      if (v < 1 || v > m_)
        throw std::invalid_argument("vertex out of range 1..m");
    if (i.empty()) return true;
    for (const auto& f : maximal_faces_)
      if (is_subset(i, f)) return true;
    return false;
  }

  bool has_edge(int a, int b) const { return is_face(make_vertex_set({a, b})); }

  /// Vertices v with {v} a face, ascending.
  VertexSet vertices() const {
    VertexSet out;
    for (const auto& f : maximal_faces_)
      for (int v : f) out.push_back(v);
    return make_vertex_set(std::move(out));
  }

  /// Every face, grouped nowhere: flat list sorted by (size, lex).
  std::vector<VertexSet> all_faces() const {
    std::set<VertexSet> seen;
    seen.insert(VertexSet{});
    for (const auto& f : maximal_faces_) {
      const size_t n = f.size();
      for (size_t mask = 1; mask < (size_t{1} << n); ++mask) {
        VertexSet sub;
        for (size_t k = 0; k < n; ++k)
          if (mask & (size_t{1} << k)) sub.push_back(f[k]);
        seen.insert(sub);
      }
    }
    std::vector<VertexSet> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end(), [](const VertexSet& a, const VertexSet& b) {
      return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return out;
  }

  bool operator==(const SimplicialComplex& o) const {
    return m_ == o.m_ && maximal_faces_ == o.maximal_faces_;
  }

 private:
  int m_ = 0;
  std::vector<VertexSet> maximal_faces_;
};

/// Boundary of the n-gon: maximal faces {i,i+1} cyclically.
inline SimplicialComplex polygon_boundary(int n) {
  if (n < 3) throw std::invalid_argument("polygon needs at least 3 vertices");
  std::vector<VertexSet> faces;
  for (int i = 1; i < n; ++i) faces.push_back({i, i + 1});
  faces.push_back({n, 1});
  return SimplicialComplex(n, std::move(faces));
}

/// Full simplex on [m] (single maximal face), the contractible case.
inline SimplicialComplex full_simplex(int m) {
  VertexSet all;
  for (int v = 1; v <= m; ++v) all.push_back(v);
  return SimplicialComplex(m, {all});
}

inline bool is_face(const SimplicialComplex& k, const VertexSet& i) {
  return k.is_face(i);
}

/// Restriction K_I = {J in K : J subset of I}; vertex labels kept.
inline SimplicialComplex full_subcomplex(const SimplicialComplex& k,
                                         const VertexSet& i) {
  for (int v : i)
    if (v < 1 || v > k.m())
      throw std::invalid_argument("vertex out of range 1..m");
  std::vector<VertexSet> restricted;
  for (const auto& f : k.maximal_faces()) {
    VertexSet cut;
    std::set_intersection(f.begin(), f.end(), i.begin(), i.end(),
                          std::back_inserter(cut));
    if (!cut.empty()) restricted.push_back(cut);
  }
  return SimplicialComplex(k.m(), std::move(restricted));
}

/// Flag test: every clique of the 1-skeleton (on vertices of K) is a face.
inline bool is_flag(const SimplicialComplex& k) {
  const VertexSet verts = k.vertices();
  const size_t n = verts.size();
  if (n > 20) throw std::invalid_argument("flag test capped at 20 vertices");
  for (size_t mask = 1; mask < (size_t{1} << n); ++mask) {
    VertexSet s;
    for (size_t b = 0; b < n; ++b)
      if (mask & (size_t{1} << b)) s.push_back(verts[b]);
    bool clique = true;
    for (size_t a = 0; a + 1 < s.size() && clique; ++a)
      for (size_t b = a + 1; b < s.size() && clique; ++b)
        if (!k.has_edge(s[a], s[b])) clique = false;
    if (clique && !k.is_face(s)) return false;
  }
  return true;
}

/// Components of the 1-skeleton over the vertex support, sorted by
/// smallest vertex. Isolated vertices are singleton components.
inline std::vector<VertexSet> connected_components(const SimplicialComplex& k) {
  const VertexSet verts = k.vertices();
  std::map<int, int> parent;
  for (int v : verts) parent[v] = v;
  std::function<int(int)> find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& f : k.maximal_faces())
    for (size_t a = 0; a + 1 < f.size(); ++a)
      for (size_t b = a + 1; b < f.size(); ++b)
        parent[find(f[a])] = find(f[b]);
  std::map<int, VertexSet> comps;
  for (int v : verts) comps[find(v)].push_back(v);
  std::vector<VertexSet> out;
  for (auto& [root, vs] : comps) out.push_back(make_vertex_set(std::move(vs)));
  std::sort(out.begin(), out.end(),
            [](const VertexSet& a, const VertexSet& b) { return a[0] < b[0]; });
  return out;
}

/// Reduced boundary matrix d_p : C_p -> C_{p-1} of the reduced chain
/// complex (C_{-1} spanned by the empty face).
inline IntMat reduced_boundary_matrix(const std::vector<VertexSet>& faces_lo,
                                      const std::vector<VertexSet>& faces_hi) {
  std::map<VertexSet, int> index;
  for (size_t i = 0; i < faces_lo.size(); ++i) index[faces_lo[i]] = (int)i;
  IntMat d = IntMat::Constant(faces_lo.size(), faces_hi.size(), Int(0));
  for (size_t j = 0; j < faces_hi.size(); ++j) {
    const VertexSet& f = faces_hi[j];
    for (size_t k = 0; k < f.size(); ++k) {
      VertexSet sub = f;
      sub.erase(sub.begin() + k);
      d(index.at(sub), j) = (k % 2 == 0) ? 1 : -1;
    }
  }
  return d;
}

/// Reduced Betti numbers over Q; degree -1 carries the empty complex.
inline BettiVector reduced_betti(const SimplicialComplex& k) {
  std::map<int, std::vector<VertexSet>> by_dim;  // dim = |face| - 1
  for (const auto& f : k.all_faces()) by_dim[(int)f.size() - 1].push_back(f);
  int top = by_dim.rbegin()->first;
  std::map<int, int> rank_d;  // rank of d_p : C_p -> C_{p-1}
  for (int p = 0; p <= top; ++p)
    rank_d[p] = rank_q(reduced_boundary_matrix(by_dim[p - 1], by_dim[p]));
  BettiVector betti;
  for (int p = -1; p <= top; ++p) {
    long b = (long)by_dim[p].size() - rank_d[p];
    if (p < top) b -= rank_d[p + 1];
    if (b != 0) betti[p] = b;
  }
  return betti;
}

/// Hochster decomposition: rank H^p(Z_K) = sum over I of
/// reduced Betti b^{p-|I|-1} of K_I.
inline BettiVector hochster_cohomology(const SimplicialComplex& k) {
  BettiVector total;
  const int m = k.m();
  for (size_t mask = 0; mask < (size_t{1} << m); ++mask) {
    VertexSet i;
    for (int b = 0; b < m; ++b)
      if (mask & (size_t{1} << b)) i.push_back(b + 1);
    BettiVector local = reduced_betti(full_subcomplex(k, i));
    for (const auto& [deg, r] : local) total[deg + (int)i.size() + 1] += r;
  }
  for (auto it = total.begin(); it != total.end();)
    it = (it->second == 0) ? total.erase(it) : std::next(it);
  return total;
}

}  // namespace macloops

#endif  // MACLOOPS_SIMPLICIAL_HPP
