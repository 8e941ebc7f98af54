#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "medq/integer.hpp"

namespace medq {

using IntVector = std::vector<Integer>;

// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_columns(std::size_t rows, const std::vector<IntVector>& columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntVector row(std::size_t i) const;
  IntVector column(std::size_t j) const;
  IntMatrix transpose() const;
  IntMatrix operator*(const IntMatrix& other) const;
  IntVector operator*(const IntVector& v) const;
  bool operator==(const IntMatrix& other) const = default;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  // row[dst] += factor * row[src]
  void add_row(std::size_t dst, std::size_t src, const Integer& factor);
  void add_col(std::size_t dst, std::size_t src, const Integer& factor);
  void negate_row(std::size_t i);
  void negate_col(std::size_t j);

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

// Fraction-free Gaussian elimination.
Integer determinant(const IntMatrix& a);
IntMatrix adjugate(const IntMatrix& a);

struct SmithForm {
  IntMatrix U;
  IntMatrix U_inv;
  IntMatrix S;
  IntMatrix V;
  // min(rows, cols) diagonal entries, d_1 | d_2 | ..., all >= 0.
  IntVector diagonal;
};

// U * A * V = S with U, V unimodular.
SmithForm smith_normal_form(const IntMatrix& a);

// A sublattice of Z^n kept in row Hermite normal form: pivot columns strictly
// increase, pivots are positive and entries above a pivot lie in [0, pivot).
class Lattice {
 public:
  explicit Lattice(std::size_t dim = 0) : dim_(dim) {}
  static Lattice span(std::size_t dim, const std::vector<IntVector>& generators);

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return basis_.size(); }
  const std::vector<IntVector>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  void add(const IntVector& v);
  void add_all(const std::vector<IntVector>& vs);
  bool contains(const IntVector& v) const;
  bool contains(const Lattice& other) const;
  // Canonical representative of v + L.
  IntVector reduce(IntVector v) const;
  // Coefficients of v in the basis, if v lies in L.
  std::optional<IntVector> coordinates(IntVector v) const;
  // [Z^n : L], or 0 when L has lower rank.
  Integer index() const;

  bool operator==(const Lattice& other) const = default;

 private:
  void rebuild(std::vector<IntVector> rows);

  std::size_t dim_ = 0;
  std::vector<IntVector> basis_;
  std::vector<std::size_t> pivots_;
};

}  // namespace medq
