#ifndef MACLOOPS_RELATIONS_HPP
#define MACLOOPS_RELATIONS_HPP

// Relation templates: integer combinations of commutator expressions plus
// terms with unknown coefficients. Expanding over the quotient algebra and
// equating every normal-form word to zero gives an exact linear system for
// the unknowns.

#include <map>
#include <string>
#include <vector>

#include "macloops/exact.hpp"
#include "macloops/loopalg.hpp"

namespace macloops {

struct RelationTemplate {
  std::vector<std::pair<long long, CommutatorExpr>> fixed_terms;
  std::vector<std::pair<std::string, CommutatorExpr>> parametrized_terms;
};

/// Affine solution set of a template's coefficient system.
struct SolutionSet {
  bool consistent = false;
  std::vector<std::string> unknown_ids;
  RatVec particular;
  std::vector<RatVec> homogeneous_basis;

  int dimension() const { return (int)homogeneous_basis.size(); }

  /// Membership test: is `candidate` (indexed like unknown_ids) a solution?
  bool contains(const RatVec& candidate) const {
    if (!consistent || candidate.size() != particular.size()) return false;
    SpanBuilder span;
    for (const RatVec& v : homogeneous_basis) span.add(v);
    return !span.add(candidate - particular);
  }
};

/// Sum of the fixed terms as a TensorElement.
inline TensorElement expand_fixed(const RelationTemplate& t,
                                  const QuotientAlgebra& alg) {
  TensorElement total;
  for (const auto& [coeff, expr] : t.fixed_terms)
    total = add(total, scalar_multiply(coeff, alg.expand(expr)));
  return total;
}

/// Substitute concrete coefficients for the unknowns; values must be integers.
inline TensorElement instantiate(const RelationTemplate& t,
                                 const QuotientAlgebra& alg,
                                 const std::vector<long long>& values) {
  if (values.size() != t.parametrized_terms.size())
    throw std::invalid_argument("coefficient count does not match template");
  TensorElement total = expand_fixed(t, alg);
  for (size_t i = 0; i < values.size(); ++i)
    total = add(total, scalar_multiply(values[i],
                                       alg.expand(t.parametrized_terms[i].second)));
  return total;
}

/// Solve for the unknown coefficients making the template vanish.
inline SolutionSet solve_coefficients(const RelationTemplate& t,
                                      const QuotientAlgebra& alg) {
  TensorElement fixed = expand_fixed(t, alg);
  std::vector<TensorElement> columns;
  for (const auto& [id, expr] : t.parametrized_terms)
    columns.push_back(alg.expand(expr));

  std::map<Word, int> word_index;
  auto index_words = [&](const TensorElement& e) {
    for (const auto& [w, n] : e)
      if (!word_index.count(w)) {
        int next = (int)word_index.size();
        word_index[w] = next;
      }
  };
  index_words(fixed);
  for (const TensorElement& c : columns) index_words(c);

  RatMat a = RatMat::Constant(word_index.size(), columns.size(), Rat(0));
  RatVec b = RatVec::Constant(word_index.size(), Rat(0));
  for (const auto& [w, n] : fixed) b(word_index[w]) = Rat(-n);
  for (size_t j = 0; j < columns.size(); ++j)
    for (const auto& [w, n] : columns[j]) a(word_index[w], j) = Rat(n);

  LinearSolution lin = gauss_solve(a, b);
  SolutionSet sol;
  sol.consistent = lin.consistent;
  for (const auto& [id, expr] : t.parametrized_terms)
    sol.unknown_ids.push_back(id);
  if (lin.consistent) {
    sol.particular = lin.particular;
    sol.homogeneous_basis = lin.nullspace;
  }
  return sol;
}

}  // namespace macloops

#endif  // MACLOOPS_RELATIONS_HPP
