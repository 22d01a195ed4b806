#ifndef MACLOOPS_PRESETS_HPP
#define MACLOOPS_PRESETS_HPP

// Built-in reference data for the pentagon and hexagon boundary complexes:
// cohomology bases and top classes, homology cycle tables, the aligned
// commutator tables, and the one-relator presentations of the loop homology
// (the pentagon relation, and the hexagon relation template with its
// known coefficient assignment).

#include <string>
#include <vector>

#include "macloops/cellular.hpp"
#include "macloops/generators.hpp"
#include "macloops/koszul.hpp"
#include "macloops/relations.hpp"
#include "macloops/simplicial.hpp"

namespace macloops {
namespace presets {

inline SimplicialComplex pentagon() { return polygon_boundary(5); }
inline SimplicialComplex hexagon() { return polygon_boundary(6); }
inline SimplicialComplex square() { return polygon_boundary(4); }

namespace detail {

inline std::vector<CohomologyClass> classes(const std::vector<std::string>& reps,
                                            int degree) {
  std::vector<CohomologyClass> out;
  for (const auto& s : reps) out.push_back({parse_koszul(s), degree});
  return out;
}

inline std::vector<CellularChain> chains(const std::vector<std::string>& reps) {
  std::vector<CellularChain> out;
  for (const auto& s : reps) out.push_back(parse_chain(s));
  return out;
}

// "+13452" -> (+1, word 1 3 4 5 2); terms concatenated with spaces
inline TensorElement compact_words(const std::string& text) {
  TensorElement out;
  long long sign = 1;
  Word w;
  auto flush = [&]() {
    if (!w.empty()) tensor_add(out, w, sign);
    w.clear();
  };
  for (char c : text) {
    if (c == '+') {
      flush();
      sign = 1;
    } else if (c == '-') {
      flush();
      sign = -1;
    } else if (c >= '1' && c <= '9') {
      w.push_back(c - '0');
    }
  }
  flush();
  return out;
}

}  // namespace detail

// ---- pentagon cohomology (degree 3 x 4 pairing onto the top class) ----

inline KoszulElement pentagon_top_class() { return parse_koszul("u1 u2 u3 v4 v5"); }

inline std::vector<CohomologyClass> pentagon_h3_classes() {
  return detail::classes({"u1 v3", "u2 v4", "u3 v5", "u4 v1", "u5 v2"}, 3);
}

inline std::vector<CohomologyClass> pentagon_h4_classes() {
  return detail::classes(
      {"u4 u5 v2", "- u1 u5 v3", "u1 u2 v4", "u2 u3 v5", "u3 u4 v1"}, 4);
}

// ---- hexagon cohomology (3 x 5 and 4 x 4 pairings) ----

inline KoszulElement hexagon_top_class() {
  return parse_koszul("u1 u2 u3 u4 v5 v6");
}

inline std::vector<CohomologyClass> hexagon_h3_classes() {
  return detail::classes({"u1 v3", "u1 v4", "u1 v5", "u2 v4", "u2 v5",
                          "u2 v6", "u3 v5", "u3 v6", "u4 v6"},
                         3);
}

inline std::vector<CohomologyClass> hexagon_h5_classes() {
  return detail::classes({"u4 u5 u6 v2",
                          "- u2 u3 u5 v6 + u2 u3 u6 v5",
                          "u2 u3 u4 v6",
                          "- u1 u5 u6 v3",
                          "- u1 u3 u6 v4 + u1 u4 u6 v3",
                          "- u3 u4 u5 v1",
                          "u1 u2 u6 v4",
                          "u1 u2 u4 v5 - u1 u2 u5 v4",
                          "- u1 u2 u3 v5"},
                         5);
}

/// Row-aligned halves of the degree-4 basis: left[i] * right[i] is the
/// top class, all other products vanish.
inline std::vector<CohomologyClass> hexagon_h4_left_classes() {
  return detail::classes({"u1 u5 v3", "u3 u5 v1", "u2 u3 v6", "u5 u6 v2",
                          "u1 u6 v3", "u3 u4 v6", "u5 u6 v3", "u1 u6 v4"},
                         4);
}

inline std::vector<CohomologyClass> hexagon_h4_right_classes() {
  return detail::classes({"- u2 u6 v4",
                          "- u4 u6 v2 + u2 u6 v4",
                          "- u4 u5 v1",
                          "u3 u4 v1",
                          "u4 u5 v2",
                          "- u2 u5 v1 + u1 u5 v2",
                          "- u2 u4 v1 + u1 u4 v2",
                          "- u3 u5 v2 + u2 u5 v3"},
                         4);
}

inline std::vector<CohomologyClass> hexagon_h4_classes() {
  std::vector<CohomologyClass> out = hexagon_h4_left_classes();
  for (auto& c : hexagon_h4_right_classes()) out.push_back(std::move(c));
  return out;
}

// ---- reference homology cycle bases ----

inline std::vector<CellularChain> pentagon_h3_cycles() {
  return detail::chains({"S1 D3 + D1 S3", "S2 D4 + D2 S4", "S3 D5 + D3 S5",
                         "S4 D1 + D4 S1", "S5 D2 + D5 S2"});
}

inline std::vector<CellularChain> pentagon_h4_cycles() {
  return detail::chains({"D2 S4 S5 - S2 S4 D5", "- S1 S3 D5 - S1 D3 S5",
                         "- D1 S2 S4 + S1 S2 D4", "- D2 S3 S5 + S2 S3 D5",
                         "D1 S3 S4 - S1 S3 D4"});
}

inline std::vector<CellularChain> hexagon_h3_cycles() {
  return detail::chains({"S1 D3 + D1 S3", "S1 D4 + D1 S4", "S1 D5 + D1 S5",
                         "S2 D4 + D2 S4", "S2 D5 + D2 S5", "S2 D6 + D2 S6",
                         "S3 D5 + D3 S5", "S3 D6 + D3 S6", "S4 D6 + D4 S6"});
}

inline std::vector<CellularChain> hexagon_h5_cycles() {
  return detail::chains({"D2 S4 S5 S6 + S2 S4 S5 D6",
                         "- S2 S3 S5 D6 - D2 S3 S5 S6",
                         "D2 S3 S4 S6 + S2 S3 S4 D6",
                         "S1 S3 S5 D6 - S1 D3 S5 S6",
                         "S1 D3 S4 S6 - S1 S3 S4 D6",
                         "- D1 S3 S4 S5 - S1 S3 S4 D5",
                         "S1 S2 D4 S6 + S1 S2 S4 D6",
                         "D1 S2 S4 S5 + S1 S2 S4 D5",
                         "- S1 S2 S3 D5 - D1 S2 S3 S5"});
}

inline std::vector<CellularChain> hexagon_h4_left_cycles() {
  return detail::chains({"S1 S3 D5 + S1 D3 S5", "- S1 S3 D5 + D1 S3 S5",
                         "S2 S3 D6 - D2 S3 S6", "D2 S5 S6 - S2 S5 D6",
                         "S1 D3 S6 + S1 S3 D6", "S3 S4 D6 - D3 S4 S6",
                         "- S3 S5 D6 + D3 S5 S6", "S1 S4 D6 + S1 D4 S6"});
}

inline std::vector<CellularChain> hexagon_h4_right_cycles() {
  return detail::chains({"- D2 S4 S6 - S2 D4 S6", "S2 S4 D6 - D2 S4 S6",
                         "S1 S4 D5 - D1 S4 S5", "- S1 S3 D4 + D1 S3 S4",
                         "- S2 S4 D5 + D2 S4 S5", "S1 S2 D5 - D1 S2 S5",
                         "- D1 S2 S4 + S1 S2 D4", "- D2 S3 S5 + S2 S3 D5"});
}

inline std::vector<CellularChain> hexagon_h4_cycles() {
  std::vector<CellularChain> out = hexagon_h4_left_cycles();
  for (auto& c : hexagon_h4_right_cycles()) out.push_back(std::move(c));
  return out;
}

/// Preferred homology bases keyed by degree, for zk_homology.
inline std::map<int, std::vector<CellularChain>> reference_cycles(
    const SimplicialComplex& k) {
  if (k == pentagon())
    return {{3, pentagon_h3_cycles()}, {4, pentagon_h4_cycles()}};
  if (k == hexagon())
    return {{3, hexagon_h3_cycles()},
            {4, hexagon_h4_cycles()},
            {5, hexagon_h5_cycles()}};
  return {};
}

// ---- aligned commutator tables (rows match the cycle tables above) ----

struct SignedCommutator {
  long long sign;
  CommutatorExpr expr;
};

inline std::vector<SignedCommutator> signed_exprs(
    const std::vector<std::pair<long long, std::string>>& rows) {
  std::vector<SignedCommutator> out;
  for (const auto& [s, e] : rows) out.push_back({s, parse_commutator(e)});
  return out;
}

inline std::vector<SignedCommutator> pentagon_h2_commutators() {
  return signed_exprs({{1, "[3,1]"}, {1, "[4,2]"}, {1, "[5,3]"},
                       {1, "[4,1]"}, {1, "[5,2]"}});
}

inline std::vector<SignedCommutator> pentagon_h3_commutators() {
  return signed_exprs({{1, "[4,[5,2]]"},
                       {-1, "[1,[5,3]]"},
                       {-1, "[2,[4,1]]"},
                       {-1, "[3,[5,2]]"},
                       {1, "[3,[4,1]]"}});
}

inline std::vector<SignedCommutator> hexagon_h2_commutators() {
  return signed_exprs({{1, "[3,1]"}, {1, "[4,1]"}, {1, "[5,1]"},
                       {1, "[4,2]"}, {1, "[5,2]"}, {1, "[6,2]"},
                       {1, "[5,3]"}, {1, "[6,3]"}, {1, "[6,4]"}});
}

inline std::vector<SignedCommutator> hexagon_h4_commutators() {
  return signed_exprs({{1, "[4,[5,[6,2]]]"},
                       {-1, "[3,[5,[6,2]]]"},
                       {1, "[3,[4,[6,2]]]"},
                       {-1, "[1,[5,[6,3]]]"},
                       {1, "[1,[4,[6,3]]]"},
                       {-1, "[3,[4,[5,1]]]"},
                       {1, "[1,[2,[6,4]]]"},
                       {1, "[2,[4,[5,1]]]"},
                       {-1, "[2,[3,[5,1]]]"}});
}

inline std::vector<SignedCommutator> hexagon_h3_left_commutators() {
  return signed_exprs({{1, "[1,[5,3]]"},
                       {1, "[3,[5,1]]"},
                       {-1, "[3,[6,2]]"},
                       {1, "[5,[6,2]]"},
                       {1, "[1,[6,3]]"},
                       {-1, "[4,[6,3]]"},
                       {1, "[5,[6,3]]"},
                       {1, "[1,[6,4]]"}});
}

inline std::vector<SignedCommutator> hexagon_h3_right_commutators() {
  return signed_exprs({{1, "[6,[4,2]]"},
                       {-1, "[4,[6,2]]"},
                       {-1, "[4,[5,1]]"},
                       {1, "[3,[4,1]]"},
                       {1, "[4,[5,2]]"},
                       {-1, "[2,[5,1]]"},
                       {-1, "[2,[4,1]]"},
                       {-1, "[3,[5,2]]"}});
}

// ---- the one-relator presentations ----

inline std::vector<CommutatorExpr> pentagon_alpha() {
  std::vector<CommutatorExpr> out;
  for (const char* s : {"[3,1]", "[4,1]", "[4,2]", "[5,2]", "[5,3]"})
    out.push_back(parse_commutator(s));
  return out;
}

inline std::vector<CommutatorExpr> pentagon_beta() {
  std::vector<CommutatorExpr> out;
  for (const char* s : {"[4,[5,2]]", "[3,[5,2]]", "[1,[5,3]]", "[3,[4,1]]",
                        "[2,[4,1]]"})
    out.push_back(parse_commutator(s));
  return out;
}

/// The pentagon relation as a template (all coefficients fixed).
inline RelationTemplate pentagon_relation_template() {
  RelationTemplate t;
  const long long coeffs[5] = {-1, 1, 1, -1, 1};
  auto alpha = pentagon_alpha();
  auto beta = pentagon_beta();
  for (int i = 0; i < 5; ++i)
    t.fixed_terms.push_back(
        {coeffs[i], CommutatorExpr::bracket(alpha[i], beta[i])});
  return t;
}

inline TensorElement build_pentagon_relation() {
  QuotientAlgebra alg(pentagon());
  return expand_fixed(pentagon_relation_template(), alg);
}

/// Canonical-form expansions of the five pentagon summands [alpha_i, beta_i],
/// row i of the relation (reference data, words in compact digit form).
inline std::vector<TensorElement> pentagon_summand_expansions() {
  const char* blocks[5] = {
      "-12345 +14235 +13452 -13524 +31245 +31425 +31452 -31524"
      " +24153 -41253 -41523 +52413 -25341 -42531 -53412 -52341",
      "-14253 -14235 -13452 -14523 -41253 -41235 +41352 -41523"
      " +25314 +31245 -31524 +53124 +25341 +23415 -35241 +52341",
      "+24135 +24153 -23415 -25341 -41235 -41253 -34125 -42531"
      " -13524 +15234 -31524 +53124 +13452 +14523 +31452 +53142",
      "+12534 +25314 +25341 -24153 +15234 +53124 +52341 -52413"
      " -14235 -31425 -34125 -41235 -13452 -31452 -34152 +41352",
      "-31452 +31524 +35241 -34152 -53142 -53124 -52341 -53412"
      " +14235 -12345 -24135 +41235 +14253 +12534 -24153 +41253"};
  std::vector<TensorElement> out;
  for (const char* b : blocks) out.push_back(detail::compact_words(b));
  return out;
}

/// Raw (uncanonicalized) expansion of [alpha_1, beta_1] in the free algebra,
/// before any commutation relation is applied.
inline std::vector<std::pair<long long, Word>> pentagon_first_summand_raw() {
  TensorElement e = detail::compact_words(
      "-13254 +13425 +13452 -13524 -31254 +31425 +31452 -31524"
      " +25413 -42513 -45213 +52413 +25431 -42531 -45231 +52431");
  std::vector<std::pair<long long, Word>> out;
  for (const auto& [w, n] : e) out.push_back({n, w});
  return out;
}

inline std::vector<CommutatorExpr> hexagon_alpha() {
  std::vector<CommutatorExpr> out;
  // the degree-2 entry paired with [6,3] is [4,2] (as enumerated), not [4,5]
  for (const char* s : {"[3,1]", "[4,1]", "[5,1]", "[4,2]", "[5,2]", "[6,2]",
                        "[5,3]", "[6,3]", "[6,4]"})
    out.push_back(parse_commutator(s));
  return out;
}

inline std::vector<CommutatorExpr> hexagon_beta() {
  std::vector<CommutatorExpr> out;
  for (const char* s : {"[1,[5,3]]", "[3,[5,1]]", "[3,[6,2]]", "[5,[6,2]]",
                        "[1,[6,3]]", "[4,[6,3]]", "[5,[6,3]]", "[1,[6,4]]"})
    out.push_back(parse_commutator(s));
  return out;
}

inline std::vector<CommutatorExpr> hexagon_delta() {
  std::vector<CommutatorExpr> out;
  for (const char* s : {"[6,[4,2]]", "[4,[6,2]]", "[4,[5,1]]", "[3,[4,1]]",
                        "[4,[5,2]]", "[2,[5,1]]", "[2,[4,1]]", "[3,[5,2]]"})
    out.push_back(parse_commutator(s));
  return out;
}

inline std::vector<CommutatorExpr> hexagon_gamma() {
  std::vector<CommutatorExpr> out;
  for (const char* s : {"[4,[5,[6,2]]]", "[3,[5,[6,2]]]", "[3,[4,[6,2]]]",
                        "[1,[5,[6,3]]]", "[1,[4,[6,3]]]", "[3,[4,[5,1]]]",
                        "[1,[2,[6,4]]]", "[2,[4,[5,1]]]", "[2,[3,[5,1]]]"})
    out.push_back(parse_commutator(s));
  return out;
}

inline std::vector<long long> hexagon_sigma() {
  return {1, -1, 1, 1, 1, 1, -1, -1};
}

/// Signs of the gamma entries in the aligned commutator table; the relation
/// carries the opposite signs.
inline std::vector<long long> hexagon_gamma_table_signs() {
  return {1, -1, 1, -1, 1, -1, 1, 1, -1};
}

struct UnknownTerm {
  std::string id;
  int row;  // 1-based row of hexagon_alpha it is bracketed against
  std::string inner;
};

inline std::vector<UnknownTerm> hexagon_unknown_terms() {
  return {{"k1", 1, "[[2,5],[4,6]]"},  {"k2", 2, "[[5,3],[6,2]]"},
          {"k3", 2, "[[6,3],[5,2]]"},  {"k4", 3, "[[4,2],[6,3]]"},
          {"k5", 4, "[[6,3],[5,1]]"},  {"k6", 5, "[[4,1],[6,3]]"},
          {"k7", 5, "[[6,4],[3,1]]"},  {"k8", 6, "[[5,3],[4,1]]"},
          {"k9", 7, "[[4,1],[6,2]]"},  {"k10", 8, "[[4,2],[5,1]]"},
          {"k11", 8, "[[4,1],[5,2]]"}, {"k12", 9, "[[5,2],[3,1]]"}};
}

/// Hexagon relation template: 17 fixed brackets plus the 12 unknown-weighted
/// additional commutators.
inline RelationTemplate build_hexagon_template() {
  RelationTemplate t;
  auto alpha = hexagon_alpha();
  auto gamma = hexagon_gamma();
  auto beta = hexagon_beta();
  auto delta = hexagon_delta();
  auto gsign = hexagon_gamma_table_signs();
  auto sigma = hexagon_sigma();
  for (int i = 0; i < 9; ++i)
    t.fixed_terms.push_back(
        {-gsign[i], CommutatorExpr::bracket(alpha[i], gamma[i])});
  for (int j = 0; j < 8; ++j)
    t.fixed_terms.push_back(
        {sigma[j], CommutatorExpr::bracket(beta[j], delta[j])});
  for (const UnknownTerm& u : hexagon_unknown_terms())
    t.parametrized_terms.push_back(
        {u.id, CommutatorExpr::bracket(alpha[u.row - 1],
                                       parse_commutator(u.inner))});
  return t;
}

/// The known coefficient assignment solving the hexagon template. With the
/// additional commutators written as above, five of the published values
/// pick up a minus sign from the antisymmetry of degree-2 brackets
/// ([x,y] = -[y,x] when deg x = deg y = 2).
inline std::vector<long long> hexagon_known_coefficients() {
  return {1, -1, 1, 1, 1, 1, 1, 1, 0, 0, 0, 0};
}

/// The hexagon relation with the known coefficients substituted.
inline RelationTemplate hexagon_relation_template() {
  RelationTemplate t = build_hexagon_template();
  auto ks = hexagon_known_coefficients();
  RelationTemplate out;
  out.fixed_terms = t.fixed_terms;
  for (size_t i = 0; i < ks.size(); ++i)
    if (ks[i] != 0)
      out.fixed_terms.push_back({ks[i], t.parametrized_terms[i].second});
  return out;
}

}  // namespace presets
}  // namespace macloops

#endif  // MACLOOPS_PRESETS_HPP
