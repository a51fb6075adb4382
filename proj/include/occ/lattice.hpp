#pragma once

#include <optional>
#include <vector>

#include "occ/symrat.hpp"

namespace occ {

using IntVec = std::vector<Int>;

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, Int(0)) {}
  static IntMatrix identity(std::size_t n);
  // Matrix whose columns are the given vectors (all of equal length).
  static IntMatrix from_columns(const std::vector<IntVec>& cols);
  static IntMatrix from_rows(const std::vector<IntVec>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Int& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  IntVec row(std::size_t i) const;
  IntVec col(std::size_t j) const;
  IntMatrix transpose() const;
  IntMatrix operator*(const IntMatrix& o) const;
  IntVec operator*(const IntVec& v) const;
  bool operator==(const IntMatrix& o) const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Int> a_;
};

// Square matrices only.
Int determinant(const IntMatrix& m);

// Fully reduced row Hermite normal form; zero rows dropped.
IntMatrix row_hnf(const IntMatrix& m);

// Z-basis of {x : m x = 0}, canonical: rows of the reduced row HNF.
std::vector<IntVec> kernel_basis(const IntMatrix& m);

// The integer matrix sending each input vector to the matching standard basis
// vector. NotUnimodular unless |det| = 1.
IntMatrix unimodular_change(const std::vector<IntVec>& basis);

std::optional<IntVec> solve_in_lattice(const IntMatrix& m, const IntVec& target);

}  // namespace occ
