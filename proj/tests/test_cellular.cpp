#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "macloops/cellular.hpp"
#include "macloops/presets.hpp"
#include "testutil.hpp"

using namespace macloops;

TEST_CASE("cell dimension and chain bookkeeping") {
  Cell c{{1, 3}, {2}};
  CHECK(c.dimension() == 5);
  CellularChain chain;
  chain_add(chain, c, 2);
  chain_add(chain, c, -2);
  CHECK(chain.empty());
  chain_add(chain, c, 1);
  CHECK(chain_dimension(chain) == 5);
  CHECK_THROWS_AS(
      chain_dimension(chain_sum(chain, {{Cell{{}, {1}}, 1}})),
      std::invalid_argument);
}

TEST_CASE("cells_of enumerates pairs (face, disjoint circle set)") {
  SimplicialComplex pent = polygon_boundary(5);
  // degree 3: either three circles, or one disc (a vertex) + one circle
  auto cells3 = cells_of(pent, 3);
  CHECK(cells3.size() == 30);  // C(5,3) + 5 * 4
  for (const Cell& c : cells3) {
    CHECK(c.dimension() == 3);
    CHECK(disjoint(c.disc_set, c.circle_set));
    CHECK(pent.is_face(c.disc_set));
  }
  // brute force count in every degree
  for (int d = 0; d <= 10; ++d) {
    long brute = 0;
    for (const auto& f : pent.all_faces()) {
      int need = d - 2 * (int)f.size();
      if (need < 0) continue;
      // choose the circle coordinates among the 5 - |f| remaining
      int n = 5 - (int)f.size();
      if (need > n) continue;
      long ways = 1;
      for (int i = 0; i < need; ++i) ways = ways * (n - i) / (i + 1);
      brute += ways;
    }
    CHECK((long)cells_of(pent, d).size() == brute);
  }
}

TEST_CASE("boundary of a single cell matches the sign rule") {
  // d(D1 S3) = S1 S3; the D at coordinate 1 has no S before it
  CellularChain b = boundary({{Cell{{1}, {3}}, 1}});
  REQUIRE(b.size() == 1);
  CHECK(b.at(Cell{{}, {1, 3}}) == 1);
  // d(S1 D3) = -S1 S3; one S factor precedes coordinate 3
  b = boundary({{Cell{{3}, {1}}, 1}});
  CHECK(b.at(Cell{{}, {1, 3}}) == -1);
  // the sum is the reference degree-3 cycle
  CHECK(is_cycle(parse_chain("S1 D3 + D1 S3")));
}

TEST_CASE("boundary squares to zero exhaustively for m <= 6") {
  testutil::Lcg rng(31);
  std::vector<SimplicialComplex> samples = {
      polygon_boundary(4), polygon_boundary(5), polygon_boundary(6),
      full_simplex(4),     full_simplex(6)};
  for (int trial = 0; trial < 15; ++trial)
    samples.push_back(testutil::random_complex(rng, 3 + rng.below(4)));
  for (const auto& k : samples)
    for (int d = 0; d <= 2 * k.m(); ++d)
      for (const Cell& c : cells_of(k, d))
        CHECK(boundary(boundary({{c, 1}})).empty());
}

TEST_CASE("all reference cycles are cycles") {
  for (const auto& chain : presets::pentagon_h3_cycles()) CHECK(is_cycle(chain));
  for (const auto& chain : presets::pentagon_h4_cycles()) CHECK(is_cycle(chain));
  for (const auto& chain : presets::hexagon_h3_cycles()) CHECK(is_cycle(chain));
  for (const auto& chain : presets::hexagon_h4_cycles()) CHECK(is_cycle(chain));
  for (const auto& chain : presets::hexagon_h5_cycles()) CHECK(is_cycle(chain));
}

TEST_CASE("integer homology of the polygon presets") {
  SimplicialComplex pent = polygon_boundary(5);
  ZkHomology zp = zk_homology(pent, presets::reference_cycles(pent));
  CHECK(zp.ranks == BettiVector{{0, 1}, {3, 5}, {4, 5}, {7, 1}});
  CHECK(zp.torsion.empty());
  CHECK(zp.basis.at(3) == presets::pentagon_h3_cycles());
  CHECK(zp.basis.at(4) == presets::pentagon_h4_cycles());

  SimplicialComplex hex = polygon_boundary(6);
  ZkHomology zh = zk_homology(hex, presets::reference_cycles(hex));
  CHECK(zh.ranks == BettiVector{{0, 1}, {3, 9}, {4, 16}, {5, 9}, {8, 1}});
  CHECK(zh.torsion.empty());
  CHECK(zh.basis.at(4) == presets::hexagon_h4_cycles());

  ZkHomology zs = zk_homology(polygon_boundary(4));
  CHECK(zs.ranks == BettiVector{{0, 1}, {3, 2}, {6, 1}});
}

TEST_CASE("cellular ranks equal Hochster ranks on random complexes") {
  testutil::Lcg rng(101);
  for (int trial = 0; trial < 200; ++trial) {
    const int m = 2 + rng.below(4);  // m <= 5
    SimplicialComplex k = testutil::random_complex(rng, m);
    CHECK(zk_homology(k).ranks == hochster_cohomology(k));
  }
}

TEST_CASE("homology coordinates identify basis elements") {
  SimplicialComplex pent = polygon_boundary(5);
  ZkHomology z = zk_homology(pent, presets::reference_cycles(pent));
  const auto& basis = z.basis.at(3);
  for (size_t i = 0; i < basis.size(); ++i) {
    auto coords = homology_coordinates(pent, basis[i], basis);
    REQUIRE(coords);
    for (size_t j = 0; j < basis.size(); ++j)
      CHECK((*coords)((Eigen::Index)j) == Rat(i == j ? 1 : 0));
  }
  // adding a boundary must not change the coordinates
  CellularChain bump = boundary({{Cell{{1}, {3, 4}}, 1}});
  CellularChain moved = chain_sum(basis[0], bump);
  auto coords = homology_coordinates(pent, moved, basis);
  REQUIRE(coords);
  CHECK((*coords)(0) == Rat(1));
  CHECK_THROWS_AS(homology_coordinates(pent, {{Cell{{1}, {}}, 1}}, basis),
                  std::invalid_argument);
}

TEST_CASE("chain text round trip") {
  CellularChain c = parse_chain("S1 D3 + D1 S3 - 2 S2 S4");
  CHECK(to_string(c) == "- 2 S2 S4 + D1 S3 + S1 D3");
  CHECK(parse_chain(to_string(c)) == c);
  CHECK(to_string(CellularChain{}) == "0");
  CHECK(parse_chain("0").empty());
}
