#pragma once

#include <optional>
#include <vector>

#include "dbcohom/errors.hpp"
#include "dbcohom/numbers.hpp"

namespace dbcohom {

// Dense exact-integer matrix. Small sizes only (nerve coboundaries, chart
// boundary operators), so simplicity beats sparsity.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, 0) {}

  static IntegerMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  BigInt& operator()(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
  const BigInt& operator()(int r, int c) const {
    return data_[static_cast<size_t>(r) * cols_ + c];
  }

  IntegerMatrix multiply(const IntegerMatrix& other) const;
  IntegerMatrix transpose() const;
  bool operator==(const IntegerMatrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
  }

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<BigInt> data_;
};

// left * input * right = diagonal, with unimodular transforms and invariant
// factors d1 | d2 | ... (nonnegative, zeros trailing).
struct SNFResult {
  IntegerMatrix left;
  IntegerMatrix right;
  IntegerMatrix diagonal;
  std::vector<BigInt> invariant_factors;  // nonzero entries of the diagonal
  int rank = 0;
};

// Exact integer elimination with pivoting on the minimal absolute value.
SNFResult smith_normal_form(const IntegerMatrix& m);

// Solves M x = b over the integers via the Smith form. Returns one solution
// or nullopt when the system is infeasible.
std::optional<std::vector<BigInt>> solve_integer_system(
    const IntegerMatrix& m, const std::vector<BigInt>& b);

// Basis of the integer nullspace of M (columns).
std::vector<std::vector<BigInt>> integer_nullspace(const IntegerMatrix& m);

}  // namespace dbcohom
