#ifndef MACLOOPS_LOOPALG_HPP
#define MACLOOPS_LOOPALG_HPP

// Quotient tensor algebra T<mu_1..mu_m> / (mu_i^2 = 0; mu_i mu_j + mu_j mu_i = 0
// for edges {i,j} of K), for flag K. Words carry deg mu_i = 1; the canonical
// form of a word is the lexicographically least representative of its
// commutation class, with the sign tracked through the anticommutations.

#include <cctype>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "macloops/simplicial.hpp"

namespace macloops {

using Word = std::vector<int>;

/// Normal-form words with integer coefficients.
using TensorElement = std::map<Word, long long>;

inline void tensor_add(TensorElement& e, const Word& w, long long coeff) {
  auto it = e.find(w);
  if (it == e.end()) {
    if (coeff != 0) e[w] = coeff;
  } else {
    it->second += coeff;
    if (it->second == 0) e.erase(it);
  }
}

inline TensorElement add(const TensorElement& a, const TensorElement& b) {
  TensorElement out = a;
  for (const auto& [w, n] : b) tensor_add(out, w, n);
  return out;
}

inline TensorElement scalar_multiply(long long n, const TensorElement& a) {
  TensorElement out;
  for (const auto& [w, k] : a)
    if (n * k != 0) out[w] = n * k;
  return out;
}

/// Binary bracket tree over the generators; degree = number of leaves.
struct CommutatorExpr {
  int leaf = 0;                      // generator index when parts is empty
  std::vector<CommutatorExpr> parts; // empty, or exactly two subtrees

  bool is_leaf() const { return parts.empty(); }
  int degree() const {
    if (is_leaf()) return 1;
    return parts[0].degree() + parts[1].degree();
  }
  static CommutatorExpr make_leaf(int i) { return CommutatorExpr{i, {}}; }
  static CommutatorExpr bracket(CommutatorExpr a, CommutatorExpr b) {
    return CommutatorExpr{0, {std::move(a), std::move(b)}};
  }
  bool operator==(const CommutatorExpr&) const = default;
};

inline std::string to_string(const CommutatorExpr& c) {
  if (c.is_leaf()) return std::to_string(c.leaf);
  return "[" + to_string(c.parts[0]) + "," + to_string(c.parts[1]) + "]";
}

/// Parse bracket notation "[3,[5,2]]" (whitespace tolerated).
inline CommutatorExpr parse_commutator(const std::string& text) {
  size_t pos = 0;
  auto skip = [&]() {
    while (pos < text.size() && std::isspace((unsigned char)text[pos])) ++pos;
  };
  std::function<CommutatorExpr()> rec = [&]() -> CommutatorExpr {
    skip();
    if (pos >= text.size())
      throw std::invalid_argument("truncated commutator expression");
    if (text[pos] == '[') {
      ++pos;
      CommutatorExpr a = rec();
      skip();
      if (pos >= text.size() || text[pos] != ',')
        throw std::invalid_argument("expected ',' in commutator expression");
      ++pos;
      CommutatorExpr b = rec();
      skip();
      if (pos >= text.size() || text[pos] != ']')
        throw std::invalid_argument("expected ']' in commutator expression");
      ++pos;
      return CommutatorExpr::bracket(std::move(a), std::move(b));
    }
    size_t start = pos;
    while (pos < text.size() && std::isdigit((unsigned char)text[pos])) ++pos;
    if (start == pos)
      throw std::invalid_argument("expected index in commutator expression");
    return CommutatorExpr::make_leaf(std::stoi(text.substr(start, pos - start)));
  };
  CommutatorExpr out = rec();
  skip();
  if (pos != text.size())
    throw std::invalid_argument("trailing input after commutator expression");
  return out;
}

/// The quotient algebra for a fixed flag complex K. Letters a, b
/// anticommute exactly when {a,b} is an edge of K.
class QuotientAlgebra {
 public:
  explicit QuotientAlgebra(SimplicialComplex k) : k_(std::move(k)) {
    if (!is_flag(k_))
      throw std::invalid_argument("loop algebra requires a flag complex");
    const int m = k_.m();
    adj_.assign(m + 1, std::vector<bool>(m + 1, false));
    for (int a = 1; a <= m; ++a)
      for (int b = a + 1; b <= m; ++b)
        if (k_.is_face({a, b})) adj_[a][b] = adj_[b][a] = true;
  }

  const SimplicialComplex& complex() const { return k_; }
  bool anticommute(int a, int b) const { return adj_[a][b]; }

  /// Canonical form: nullopt when the word is zero in the quotient,
  /// otherwise (sign, lexicographically least word of the class).
  std::optional<std::pair<int, Word>> normal_form(Word w) const {
    for (int x : w)
      if (x < 1 || x > k_.m())
        throw std::invalid_argument("letter out of range 1..m");
    // Annihilation pre-pass: two occurrences of x meet iff everything
    // between them anticommutes with x.
    for (size_t p = 0; p < w.size(); ++p) {
      for (size_t q = p + 1; q < w.size(); ++q) {
        if (w[q] == w[p]) {
          bool meets = true;
          for (size_t r = p + 1; r < q; ++r)
            if (!anticommute(w[r], w[p])) meets = false;
          if (meets) return std::nullopt;
          break;  // nearer pairs dominate; try the next p
        }
      }
    }
    // Greedy lex minimum: emit the least letter whose whole prefix
    // anticommutes with it; each transposition contributes a -1.
    int sign = 1;
    Word out;
    out.reserve(w.size());
    while (!w.empty()) {
      size_t best = w.size();
      for (size_t p = 0; p < w.size(); ++p) {
        bool movable = true;
        for (size_t q = 0; q < p; ++q)
          if (!anticommute(w[q], w[p])) movable = false;
        if (movable && (best == w.size() || w[p] < w[best])) best = p;
      }
      if (best % 2 == 1) sign = -sign;
      out.push_back(w[best]);
      w.erase(w.begin() + best);
    }
    return std::make_pair(sign, std::move(out));
  }

  TensorElement normalize(const Word& w, long long coeff = 1) const {
    TensorElement e;
    auto nf = normal_form(w);
    if (nf) tensor_add(e, nf->second, coeff * nf->first);
    return e;
  }

  TensorElement generator(int i) const { return normalize({i}); }

  TensorElement multiply(const TensorElement& a, const TensorElement& b) const {
    TensorElement out;
    for (const auto& [wa, na] : a) {
      for (const auto& [wb, nb] : b) {
        Word w = wa;
        w.insert(w.end(), wb.begin(), wb.end());
        auto nf = normal_form(std::move(w));
        if (nf) tensor_add(out, nf->second, na * nb * nf->first);
      }
    }
    return out;
  }

  /// [a,b] = ab - (-1)^{deg a deg b} ba for homogeneous a, b.
  TensorElement graded_commutator(const TensorElement& a,
                                  const TensorElement& b) const {
    std::optional<int> da = homogeneous_degree(a);
    std::optional<int> db = homogeneous_degree(b);
    if (!da || !db) return {};  // either factor zero
    long long sign = ((*da) * (*db)) % 2 == 0 ? 1 : -1;
    return add(multiply(a, b), scalar_multiply(-sign, multiply(b, a)));
  }

  TensorElement expand(const CommutatorExpr& c) const {
    if (c.is_leaf()) return generator(c.leaf);
    return graded_commutator(expand(c.parts[0]), expand(c.parts[1]));
  }

  /// Degree of a homogeneous element; nullopt for zero; throws if mixed.
  static std::optional<int> homogeneous_degree(const TensorElement& e) {
    std::optional<int> deg;
    for (const auto& [w, n] : e) {
      if (deg && *deg != (int)w.size())
        throw std::invalid_argument("inhomogeneous tensor element");
      deg = (int)w.size();
    }
    return deg;
  }

 private:
  SimplicialComplex k_;
  std::vector<std::vector<bool>> adj_;
};

inline bool verify_zero(const TensorElement& e) { return e.empty(); }

inline std::string to_string(const Word& w) {
  std::ostringstream os;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) os << ' ';
    os << 'm' << w[i];
  }
  return os.str();
}

inline std::string to_string(const TensorElement& e) {
  if (e.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, n] : e) {
    if (first)
      os << (n < 0 ? "- " : "");
    else
      os << (n < 0 ? " - " : " + ");
    long long mag = n < 0 ? -n : n;
    if (mag != 1) os << mag << ' ';
    os << to_string(w);
    first = false;
  }
  return os.str();
}

}  // namespace macloops

#endif  // MACLOOPS_LOOPALG_HPP
