#ifndef MACLOOPS_EXACT_HPP
#define MACLOOPS_EXACT_HPP

// Exact integer / rational linear algebra on Eigen dense matrices.
// Integers are arbitrary precision; rationals are reduced fractions over them.
// Nothing here is numerical: no pivot thresholds, no tolerances.

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <boost/rational.hpp>

#include <optional>
#include <vector>

namespace macloops {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::rational<Int>;

}  // namespace macloops

// cpp_int has a constructor template accepting arbitrary byte containers.
// Its detection trait dereferences C::const_iterator, which is void for 2D
// Eigen matrices, turning overload resolution of scalar * matrix into a hard
// error. Rule Eigen matrices out before any such overload is considered.
namespace boost::multiprecision::detail {

template <typename S, int R, int C, int O, int MR, int MC>
struct is_byte_container<Eigen::Matrix<S, R, C, O, MR, MC>>
    : public std::false_type {};

}  // namespace boost::multiprecision::detail

namespace Eigen {

template <>
struct NumTraits<macloops::Rat> : GenericNumTraits<macloops::Rat> {
  typedef macloops::Rat Real;
  typedef macloops::Rat NonInteger;
  typedef macloops::Rat Nested;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 60,
    MulCost = 60
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace macloops {

using IntMat = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using IntVec = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using RatMat = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using RatVec = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;

inline Int int_abs(const Int& x) { return x < 0 ? Int(-x) : x; }

/// Diagonal form of an integer matrix under unimodular row/column operations.
struct SmithResult {
  std::vector<Int> invariant_factors;  // nonzero diagonal, each divides the next
  int rank = 0;
  bool has_torsion() const {
    for (const Int& d : invariant_factors)
      if (d != 1) return true;
    return false;
  }
};

inline SmithResult smith_normal_form(IntMat a) {
  const Eigen::Index rows = a.rows(), cols = a.cols();
  SmithResult res;
  Eigen::Index t = 0;
  while (t < rows && t < cols) {
    // locate a nonzero entry of minimal absolute value in the trailing block
    Eigen::Index pr = -1, pc = -1;
    for (Eigen::Index i = t; i < rows; ++i)
      for (Eigen::Index j = t; j < cols; ++j)
        if (a(i, j) != 0 &&
            (pr < 0 || int_abs(a(i, j)) < int_abs(a(pr, pc)))) {
          pr = i;
          pc = j;
        }
    if (pr < 0) break;
    a.row(t).swap(a.row(pr));
    a.col(t).swap(a.col(pc));

    bool again = true;
    while (again) {
      again = false;
      for (Eigen::Index i = t + 1; i < rows; ++i) {
        if (a(i, t) == 0) continue;
        Int q = a(i, t) / a(t, t);
        a.row(i) -= q * a.row(t);
        if (a(i, t) != 0) {  // remainder smaller than pivot, swap up
          a.row(t).swap(a.row(i));
          again = true;
        }
      }
      for (Eigen::Index j = t + 1; j < cols; ++j) {
        if (a(t, j) == 0) continue;
        Int q = a(t, j) / a(t, t);
        a.col(j) -= q * a.col(t);
        if (a(t, j) != 0) {
          a.col(t).swap(a.col(j));
          again = true;
        }
      }
    }
    // pivot must divide every remaining entry for the divisibility chain
    bool fixed = true;
    for (Eigen::Index i = t + 1; i < rows && fixed; ++i)
      for (Eigen::Index j = t + 1; j < cols && fixed; ++j)
        if (a(i, j) % a(t, t) != 0) {
          a.row(t) += a.row(i);
          fixed = false;
        }
    if (!fixed) continue;  // redo elimination at the same t
    if (a(t, t) < 0) a.row(t) = -a.row(t);
    ++t;
  }
  res.rank = static_cast<int>(t);
  for (Eigen::Index i = 0; i < t; ++i)
    res.invariant_factors.push_back(a(i, i));
  return res;
}

/// Outcome of solving A x = b over the rationals.
struct LinearSolution {
  bool consistent = false;
  RatVec particular;             // one solution, when consistent
  std::vector<RatVec> nullspace; // basis of the homogeneous solutions
};

/// Gaussian elimination with full solution set. Exact, deterministic
/// (first nonzero pivot in column order).
inline LinearSolution gauss_solve(RatMat a, RatVec b) {
  const Eigen::Index rows = a.rows(), cols = a.cols();
  std::vector<Eigen::Index> pivot_col;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index p = -1;
    for (Eigen::Index i = r; i < rows; ++i)
      if (a(i, c) != Rat(0)) {
        p = i;
        break;
      }
    if (p < 0) continue;
    a.row(r).swap(a.row(p));
    std::swap(b(r), b(p));
    Rat inv = Rat(1) / a(r, c);
    a.row(r) *= inv;
    b(r) *= inv;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r || a(i, c) == Rat(0)) continue;
      Rat f = a(i, c);
      a.row(i) -= f * a.row(r);
      b(i) -= f * b(r);
    }
    pivot_col.push_back(c);
    ++r;
  }
  LinearSolution sol;
  for (Eigen::Index i = r; i < rows; ++i)
    if (b(i) != Rat(0)) return sol;  // inconsistent
  sol.consistent = true;
  sol.particular = RatVec::Constant(cols, Rat(0));
  for (Eigen::Index k = 0; k < r; ++k) sol.particular(pivot_col[k]) = b(k);
  std::vector<bool> is_pivot(cols, false);
  for (Eigen::Index c : pivot_col) is_pivot[c] = true;
  for (Eigen::Index c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    RatVec v = RatVec::Constant(cols, Rat(0));
    v(c) = 1;
    for (Eigen::Index k = 0; k < r; ++k) v(pivot_col[k]) = -a(k, c);
    sol.nullspace.push_back(v);
  }
  return sol;
}

inline int rank_q(const RatMat& a) {
  LinearSolution s = gauss_solve(a, RatVec::Constant(a.rows(), Rat(0)));
  return static_cast<int>(a.cols() - s.nullspace.size());
}

inline int rank_q(const IntMat& a) {
  RatMat r(a.rows(), a.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) r(i, j) = Rat(a(i, j));
  return rank_q(r);
}

/// Incremental independence test: feed vectors, learn which extend the span.
class SpanBuilder {
 public:
  // returns true iff v was independent of the current span (and was added)
  bool add(RatVec v) {
    for (const auto& [p, row] : rows_) {
      if (v(p) == Rat(0)) continue;
      v -= v(p) * row;
    }
    Eigen::Index p = -1;
    for (Eigen::Index i = 0; i < v.size(); ++i)
      if (v(i) != Rat(0)) {
        p = i;
        break;
      }
    if (p < 0) return false;
    v /= v(p);
    rows_.emplace_back(p, std::move(v));
    return true;
  }
  int rank() const { return static_cast<int>(rows_.size()); }

 private:
  std::vector<std::pair<Eigen::Index, RatVec>> rows_;
};

/// Scale a rational vector to a primitive integer vector (lcm of denominators,
/// divided by gcd of numerators), preserving direction.
inline IntVec primitive_integer(const RatVec& v) {
  Int l = 1;
  for (Eigen::Index i = 0; i < v.size(); ++i)
    l = boost::multiprecision::lcm(l, v(i).denominator());
  IntVec w(v.size());
  Int g = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    w(i) = v(i).numerator() * (l / v(i).denominator());
    g = boost::multiprecision::gcd(g, w(i));
  }
  if (g > 1)
    for (Eigen::Index i = 0; i < w.size(); ++i) w(i) /= g;
  return w;
}

}  // namespace macloops

#endif  // MACLOOPS_EXACT_HPP
