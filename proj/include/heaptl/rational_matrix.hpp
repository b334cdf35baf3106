#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <vector>

namespace heaptl {

using Rat = boost::multiprecision::cpp_rational;

/// Dense matrix over the rationals with exact Gaussian elimination.
/// Sized for desk-scale problems (tens of rows/columns).
class RationalMatrix {
 public:
  RationalMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rat& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
  const Rat& at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

  int rank() const;

 private:
  int rows_, cols_;
  std::vector<Rat> a_;
};

/// Row reduction with a recorded transform: after construction U = R*A is
/// in row echelon form. Solvability of A x = b reduces to checking that
/// (R*b) vanishes on the zero rows of U.
class RationalSolver {
 public:
  explicit RationalSolver(const RationalMatrix& a);
  int rank() const { return rank_; }
  bool solvable(const std::vector<Rat>& rhs) const;

 private:
  int rows_, cols_, rank_;
  RationalMatrix u_;  // echelon form of A
  RationalMatrix r_;  // accumulated row operations
};

}  // namespace heaptl
