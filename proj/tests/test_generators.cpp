#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "macloops/generators.hpp"
#include "macloops/presets.hpp"
#include "testutil.hpp"

using namespace macloops;

namespace {

std::map<int, int> degree_histogram(const std::vector<GeneratorDescriptor>& g) {
  std::map<int, int> h;
  for (const auto& d : g) ++h[d.degree()];
  return h;
}

}  // namespace

TEST_CASE("generator counts for the reference polygons") {
  auto pent = enumerate_gptw_generators(polygon_boundary(5));
  CHECK(pent.size() == 10);
  CHECK(degree_histogram(pent) == std::map<int, int>{{2, 5}, {3, 5}});

  auto hex = enumerate_gptw_generators(polygon_boundary(6));
  CHECK(hex.size() == 34);
  CHECK(degree_histogram(hex) == std::map<int, int>{{2, 9}, {3, 16}, {4, 9}});

  auto square = enumerate_gptw_generators(polygon_boundary(4));
  CHECK(square.size() == 2);
  CHECK(degree_histogram(square) == std::map<int, int>{{2, 2}});

  CHECK(enumerate_gptw_generators(full_simplex(4)).empty());
  CHECK_THROWS_AS(
      enumerate_gptw_generators(SimplicialComplex(3, {{1, 2}, {2, 3}, {1, 3}})),
      std::invalid_argument);
}

TEST_CASE("degree-2 generators are the non-edges, larger index first") {
  std::set<std::string> got;
  for (const auto& g : enumerate_gptw_generators(polygon_boundary(5)))
    if (g.degree() == 2) got.insert(to_string(g.commutator()));
  CHECK(got == std::set<std::string>{"[3,1]", "[4,1]", "[4,2]", "[5,2]",
                                     "[5,3]"});
  // hexagon: the entry completing the table row against [6,3] is [4,2]
  std::set<std::string> hex2;
  for (const auto& g : enumerate_gptw_generators(polygon_boundary(6)))
    if (g.degree() == 2) hex2.insert(to_string(g.commutator()));
  CHECK(hex2.count("[4,2]") == 1);
  CHECK(hex2.count("[4,5]") == 0);
  CHECK(hex2.size() == 9);
}

TEST_CASE("generator commutators match the reference tables as sets") {
  auto exprs_of_degree = [](const SimplicialComplex& k, int deg) {
    std::set<std::string> got;
    for (const auto& g : enumerate_gptw_generators(k))
      if (g.degree() == deg) got.insert(to_string(g.commutator()));
    return got;
  };
  std::set<std::string> pent3;
  for (const auto& sc : presets::pentagon_h3_commutators())
    pent3.insert(to_string(sc.expr));
  CHECK(exprs_of_degree(polygon_boundary(5), 3) == pent3);

  // The aligned table writes the T = {2,4,6} entry as [6,[4,2]] instead of
  // the descriptor form [2,[6,4]]; in homology the two differ by a change of
  // basis involving the shared generator [4,[6,2]]. Everything else agrees.
  std::set<std::string> hex3;
  for (const auto& sc : presets::hexagon_h3_left_commutators())
    hex3.insert(to_string(sc.expr));
  for (const auto& sc : presets::hexagon_h3_right_commutators())
    hex3.insert(to_string(sc.expr));
  std::set<std::string> hex3_enum = exprs_of_degree(polygon_boundary(6), 3);
  CHECK(hex3_enum.count("[2,[6,4]]") == 1);
  CHECK(hex3.count("[6,[4,2]]") == 1);
  hex3_enum.erase("[2,[6,4]]");
  hex3.erase("[6,[4,2]]");
  CHECK(hex3_enum == hex3);
  SimplicialComplex hex = polygon_boundary(6);
  ZkHomology z = zk_homology(hex, presets::reference_cycles(hex));
  auto coords = [&](const char* s) {
    auto c = homology_coordinates(hex, hurewicz_image(parse_commutator(s)),
                                  z.basis.at(4));
    REQUIRE(c);
    return *c;
  };
  CHECK(coords("[2,[6,4]]") ==
        RatVec(-coords("[6,[4,2]]") - coords("[4,[6,2]]")));

  std::set<std::string> hex4;
  for (const auto& sc : presets::hexagon_h4_commutators())
    hex4.insert(to_string(sc.expr));
  CHECK(exprs_of_degree(polygon_boundary(6), 4) == hex4);
}

TEST_CASE("Hurewicz images of short commutators") {
  CHECK(hurewicz_image(parse_commutator("[1,3]")) ==
        parse_chain("S1 D3 + D1 S3"));
  // two-step commutator: D S S with the inner pair, then S D S
  CHECK(hurewicz_image(parse_commutator("[4,[5,2]]")) ==
        parse_chain("D2 S4 S5 - S2 S4 D5"));
  CHECK_THROWS_AS(hurewicz_image(parse_commutator("[[1,2],[3,4]]")),
                  std::invalid_argument);
  CHECK_THROWS_AS(hurewicz_image(parse_commutator("[1,[2,1]]")),
                  std::invalid_argument);
}

TEST_CASE("pentagon generator cycles match the aligned tables up to sign") {
  SimplicialComplex pent = polygon_boundary(5);
  auto h2 = presets::pentagon_h2_commutators();
  auto h3cyc = presets::pentagon_h3_cycles();
  for (size_t i = 0; i < h2.size(); ++i)
    CHECK(hurewicz_image(h2[i].expr) == chain_scale(h2[i].sign, h3cyc[i]));
  auto h3 = presets::pentagon_h3_commutators();
  auto h4cyc = presets::pentagon_h4_cycles();
  for (size_t i = 0; i < h3.size(); ++i)
    CHECK(hurewicz_image(h3[i].expr) == chain_scale(h3[i].sign, h4cyc[i]));
}

TEST_CASE("hexagon generator cycles match the aligned tables up to sign") {
  auto h2 = presets::hexagon_h2_commutators();
  auto h3cyc = presets::hexagon_h3_cycles();
  for (size_t i = 0; i < h2.size(); ++i)
    CHECK(hurewicz_image(h2[i].expr) == chain_scale(h2[i].sign, h3cyc[i]));
  auto h4 = presets::hexagon_h4_commutators();
  auto h5cyc = presets::hexagon_h5_cycles();
  for (size_t i = 0; i < h4.size(); ++i)
    CHECK(hurewicz_image(h4[i].expr) == chain_scale(h4[i].sign, h5cyc[i]));
  auto left = presets::hexagon_h3_left_commutators();
  auto right = presets::hexagon_h3_right_commutators();
  auto h4cycl = presets::hexagon_h4_left_cycles();
  auto h4cycr = presets::hexagon_h4_right_cycles();
  for (size_t i = 0; i < left.size(); ++i) {
    CHECK(hurewicz_image(left[i].expr) == chain_scale(left[i].sign, h4cycl[i]));
    CHECK(hurewicz_image(right[i].expr) ==
          chain_scale(right[i].sign, h4cycr[i]));
  }
}

TEST_CASE("generator cycle tables give homology bases") {
  for (int n : {4, 5, 6}) {
    SimplicialComplex k = polygon_boundary(n);
    ZkHomology z = zk_homology(k, presets::reference_cycles(k));
    auto table = generator_cycle_table(k, z);
    std::map<int, std::vector<RatVec>> coords_by_degree;
    for (const auto& row : table) {
      CHECK(row.cycle);
      REQUIRE(row.coordinates);
      coords_by_degree[row.descriptor.degree() + 1].push_back(*row.coordinates);
    }
    // per homology degree, the coordinate vectors must be a square basis
    for (const auto& [deg, vecs] : coords_by_degree) {
      REQUIRE((long)vecs.size() == z.ranks.at(deg));
      SpanBuilder span;
      for (const auto& v : vecs) CHECK(span.add(v));
    }
    // total count covers all homology between the bottom classes and the
    // top class (degree n + 2 for an n-gon)
    long total = 0;
    for (const auto& [d, r] : z.ranks)
      if (d >= 3 && d <= n + 1) total += r;
    CHECK((long)table.size() == total);
  }
}

TEST_CASE("descriptor commutators are right-nested with ascending prefix") {
  testutil::Lcg rng(67);
  for (int trial = 0; trial < 20; ++trial) {
    SimplicialComplex k = testutil::random_flag_complex(rng, 3 + rng.below(3));
    for (const auto& g : enumerate_gptw_generators(k)) {
      auto seq = nested_indices(g.commutator());
      REQUIRE(seq);
      CHECK((int)seq->size() == g.degree());
      for (size_t i = 0; i + 2 < seq->size(); ++i)
        CHECK((*seq)[i] < (*seq)[i + 1]);
      CHECK(seq->end()[-2] == g.j);
      CHECK(seq->back() == g.i);
      CHECK(is_cycle(hurewicz_image(g)));
    }
  }
}
