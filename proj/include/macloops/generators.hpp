#ifndef MACLOOPS_GENERATORS_HPP
#define MACLOOPS_GENERATORS_HPP

// Minimal multiplicative generating set of H_*(Omega Z_K) for flag K:
// nested commutators [mu_{k_1},[...,[mu_j, mu_i]...]] indexed by
// (k_1 < ... < k_p < j > i) with i the least vertex of a component of
// K_{k,j,i} missing j. Also the Hurewicz correspondence sending a nested
// commutator to its two-term cellular cycle.

#include <optional>
#include <stdexcept>
#include <vector>

#include "macloops/cellular.hpp"
#include "macloops/loopalg.hpp"
#include "macloops/simplicial.hpp"

namespace macloops {

struct GeneratorDescriptor {
  VertexSet k_list;  // strictly increasing, all < j
  int j = 0;
  int i = 0;

  int degree() const { return (int)k_list.size() + 2; }

  CommutatorExpr commutator() const {
    CommutatorExpr expr = CommutatorExpr::bracket(
        CommutatorExpr::make_leaf(j), CommutatorExpr::make_leaf(i));
    for (auto it = k_list.rbegin(); it != k_list.rend(); ++it)
      expr = CommutatorExpr::bracket(CommutatorExpr::make_leaf(*it),
                                     std::move(expr));
    return expr;
  }

  auto operator<=>(const GeneratorDescriptor&) const = default;
};

/// All generators, sorted by (degree, k_list, j, i).
inline std::vector<GeneratorDescriptor> enumerate_gptw_generators(
    const SimplicialComplex& k) {
  if (!is_flag(k))
    throw std::invalid_argument("generator enumeration requires a flag complex");
  const int m = k.m();
  std::vector<GeneratorDescriptor> out;
  for (size_t mask = 1; mask < (size_t{1} << m); ++mask) {
    VertexSet t;
    for (int b = 0; b < m; ++b)
      if (mask & (size_t{1} << b)) t.push_back(b + 1);
    if (t.size() < 2) continue;
    bool all_vertices = true;
    for (int v : t)
      if (!k.is_face({v})) all_vertices = false;
    if (!all_vertices) continue;
    const int j = t.back();  // k_1 < ... < k_p < j forces j = max
    for (const VertexSet& comp : connected_components(full_subcomplex(k, t))) {
      if (std::binary_search(comp.begin(), comp.end(), j)) continue;
      const int i = comp.front();
      VertexSet rest;
      for (int v : t)
        if (v != i && v != j) rest.push_back(v);
      out.push_back(GeneratorDescriptor{rest, j, i});
    }
  }
  std::sort(out.begin(), out.end(),
            [](const GeneratorDescriptor& a, const GeneratorDescriptor& b) {
              if (a.degree() != b.degree()) return a.degree() < b.degree();
              if (a.k_list != b.k_list) return a.k_list < b.k_list;
              if (a.j != b.j) return a.j < b.j;
              return a.i < b.i;
            });
  return out;
}

/// Index sequence i_1..i_k of a right-nested commutator; nullopt otherwise.
inline std::optional<std::vector<int>> nested_indices(const CommutatorExpr& c) {
  std::vector<int> seq;
  const CommutatorExpr* cur = &c;
  while (!cur->is_leaf()) {
    if (!cur->parts[0].is_leaf()) return std::nullopt;
    seq.push_back(cur->parts[0].leaf);
    cur = &cur->parts[1];
  }
  seq.push_back(cur->leaf);
  if (seq.size() < 2) return std::nullopt;
  return seq;
}

namespace detail {

// One product cell from an ordered factor list (positions carrying D are
// even); reordering ascending contributes -1 per swap of two S factors.
inline void add_product_cell(CellularChain& chain, const std::vector<int>& seq,
                             size_t disc_pos, long long coeff) {
  std::vector<int> circles;
  VertexSet disc{seq[disc_pos]};
  for (size_t p = 0; p < seq.size(); ++p)
    if (p != disc_pos) circles.push_back(seq[p]);
  long long inversions = 0;
  for (size_t a = 0; a + 1 < circles.size(); ++a)
    for (size_t b = a + 1; b < circles.size(); ++b)
      if (circles[a] > circles[b]) ++inversions;
  Cell cell{disc, make_vertex_set(circles)};
  chain_add(chain, cell, inversions % 2 == 0 ? coeff : -coeff);
}

}  // namespace detail

/// Cellular cycle of a right-nested commutator [mu_{i_1},[...,[mu_{i_{k-1}},
/// mu_{i_k}]...]]: the two-term chain S...D S + S...S D, cells re-sorted
/// into ascending orientation.
inline CellularChain hurewicz_image(const CommutatorExpr& expr) {
  std::optional<std::vector<int>> seq = nested_indices(expr);
  if (!seq)
    throw std::invalid_argument("Hurewicz image needs a right-nested commutator");
  VertexSet distinct = make_vertex_set(*seq);
  if (distinct.size() != seq->size())
    throw std::invalid_argument("repeated index in nested commutator");
  CellularChain chain;
  detail::add_product_cell(chain, *seq, seq->size() - 2, 1);
  detail::add_product_cell(chain, *seq, seq->size() - 1, 1);
  return chain;
}

inline CellularChain hurewicz_image(const GeneratorDescriptor& g) {
  return hurewicz_image(g.commutator());
}

struct GeneratorCycleRow {
  GeneratorDescriptor descriptor;
  CellularChain chain;
  bool cycle = false;
  std::optional<RatVec> coordinates;  // in the homology basis of its degree
};

/// Aligned table: each generator, its Hurewicz cycle, and the cycle's
/// coordinates in the chain-level homology basis of degree deg+1.
inline std::vector<GeneratorCycleRow> generator_cycle_table(
    const SimplicialComplex& k, const ZkHomology& homology) {
  std::vector<GeneratorCycleRow> out;
  for (const GeneratorDescriptor& g : enumerate_gptw_generators(k)) {
    GeneratorCycleRow row;
    row.descriptor = g;
    row.chain = hurewicz_image(g);
    row.cycle = is_cycle(row.chain);
    const int hdeg = g.degree() + 1;
    auto basis = homology.basis.find(hdeg);
    if (row.cycle && basis != homology.basis.end())
      row.coordinates = homology_coordinates(k, row.chain, basis->second);
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace macloops

#endif  // MACLOOPS_GENERATORS_HPP
