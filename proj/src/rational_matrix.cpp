#include "heaptl/rational_matrix.hpp"

#include <stdexcept>

namespace heaptl {

int RationalMatrix::rank() const {
  RationalSolver s(*this);
  return s.rank();
}

RationalSolver::RationalSolver(const RationalMatrix& a)
    : rows_(a.rows()), cols_(a.cols()), rank_(0), u_(a), r_(a.rows(), a.rows()) {
  for (int i = 0; i < rows_; ++i) r_.at(i, i) = 1;
  int row = 0;
  for (int col = 0; col < cols_ && row < rows_; ++col) {
    int pivot = -1;
    for (int i = row; i < rows_; ++i)
      if (u_.at(i, col) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != row) {
      for (int c = 0; c < cols_; ++c) std::swap(u_.at(pivot, c), u_.at(row, c));
      for (int c = 0; c < rows_; ++c) std::swap(r_.at(pivot, c), r_.at(row, c));
    }
    const Rat inv = Rat(1) / u_.at(row, col);
    for (int c = 0; c < cols_; ++c) u_.at(row, c) *= inv;
    for (int c = 0; c < rows_; ++c) r_.at(row, c) *= inv;
    for (int i = 0; i < rows_; ++i) {
      if (i == row || u_.at(i, col) == 0) continue;
      const Rat f = u_.at(i, col);
      for (int c = 0; c < cols_; ++c) u_.at(i, c) -= f * u_.at(row, c);
      for (int c = 0; c < rows_; ++c) r_.at(i, c) -= f * r_.at(row, c);
    }
    ++row;
  }
  rank_ = row;
}

bool RationalSolver::solvable(const std::vector<Rat>& rhs) const {
  if (static_cast<int>(rhs.size()) != rows_)
    throw std::invalid_argument("solver: rhs size mismatch");
  for (int i = rank_; i < rows_; ++i) {
    Rat acc = 0;
    for (int j = 0; j < rows_; ++j)
      if (rhs[j] != 0) acc += r_.at(i, j) * rhs[j];
    if (acc != 0) return false;
  }
  return true;
}

}  // namespace heaptl
