#ifndef MACLOOPS_TESTS_TESTUTIL_HPP
#define MACLOOPS_TESTS_TESTUTIL_HPP

// Deterministic pseudo-random generators for property tests.

#include <cstdint>
#include <vector>

#include "macloops/simplicial.hpp"

namespace testutil {

class Lcg {
 public:
  explicit Lcg(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() {
    state_ = state_ * 6364136223846793005ull + 1442695040888963407ull;
    return state_ >> 33;
  }
  int below(int n) { return (int)(next() % (std::uint64_t)n); }
  bool chance(int percent) { return below(100) < percent; }

 private:
  std::uint64_t state_;
};

/// Random complex on m vertices: random subsets as candidate maximal faces.
inline macloops::SimplicialComplex random_complex(Lcg& rng, int m) {
  std::vector<macloops::VertexSet> faces;
  const int count = 1 + rng.below(2 * m + 1);
  for (int t = 0; t < count; ++t) {
    macloops::VertexSet f;
    for (int v = 1; v <= m; ++v)
      if (rng.chance(40)) f.push_back(v);
    if (!f.empty()) faces.push_back(f);
  }
  if (faces.empty()) faces.push_back({1 + rng.below(m)});
  return macloops::SimplicialComplex(m, std::move(faces));
}

/// Random flag complex: random graph, faces = its cliques.
inline macloops::SimplicialComplex random_flag_complex(Lcg& rng, int m) {
  std::vector<std::vector<bool>> adj(m + 1, std::vector<bool>(m + 1, false));
  for (int a = 1; a <= m; ++a)
    for (int b = a + 1; b <= m; ++b)
      if (rng.chance(50)) adj[a][b] = adj[b][a] = true;
  std::vector<macloops::VertexSet> faces;
  for (std::size_t mask = 1; mask < (std::size_t{1} << m); ++mask) {
    macloops::VertexSet s;
    for (int b = 0; b < m; ++b)
      if (mask & (std::size_t{1} << b)) s.push_back(b + 1);
    bool clique = true;
    for (std::size_t i = 0; i + 1 < s.size() && clique; ++i)
      for (std::size_t j = i + 1; j < s.size() && clique; ++j)
        if (!adj[s[i]][s[j]]) clique = false;
    if (clique) faces.push_back(s);
  }
  return macloops::SimplicialComplex(m, std::move(faces));
}

}  // namespace testutil

#endif  // MACLOOPS_TESTS_TESTUTIL_HPP
