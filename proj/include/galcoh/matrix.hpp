#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <optional>
#include <vector>

#include "galcoh/errors.hpp"

namespace galcoh {

using Int = mpz_class;
using IntVec = std::vector<Int>;

/// Dense integer matrix with arbitrary-precision entries, row-major.
class IntegerMatrix {
public:
  IntegerMatrix() : rows_(0), cols_(0) {}
  IntegerMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}
  IntegerMatrix(int rows, int cols, std::initializer_list<long> entries);

  static IntegerMatrix identity(int n);
  static IntegerMatrix zero(int rows, int cols) { return IntegerMatrix(rows, cols); }
  static IntegerMatrix from_rows(const std::vector<IntVec>& rows, int cols);
  static IntegerMatrix from_columns(const std::vector<IntVec>& cols, int rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Int& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
  const Int& at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

  IntVec column(int c) const;
  IntVec row(int r) const;

  IntegerMatrix transpose() const;
  IntegerMatrix operator*(const IntegerMatrix& rhs) const;
  IntegerMatrix operator+(const IntegerMatrix& rhs) const;
  IntegerMatrix operator-(const IntegerMatrix& rhs) const;
  IntegerMatrix operator-() const;
  IntVec apply(const IntVec& v) const;

  bool operator==(const IntegerMatrix& rhs) const = default;
  /// Lexicographic order on (rows, cols, entries); used for deterministic sorting.
  bool operator<(const IntegerMatrix& rhs) const;

  bool is_zero() const;
  bool is_identity() const;

  /// Horizontal concatenation [this | rhs].
  IntegerMatrix hcat(const IntegerMatrix& rhs) const;

  void swap_rows(int i, int j);
  void swap_cols(int i, int j);

private:
  int rows_, cols_;
  std::vector<Int> a_;
};

/// Result of a Smith normal form computation: U*A*V = D with U, V unimodular,
/// D diagonal with d1 | d2 | ..., di >= 0. Uinv and Vinv are the inverses,
/// accumulated during the reduction.
struct SmithForm {
  IntegerMatrix U, D, V;
  IntegerMatrix Uinv, Vinv;

  int rank() const;
  /// Diagonal of D (length min(rows, cols)).
  IntVec diagonal() const;
};

SmithForm smith_normal_form(const IntegerMatrix& a);

/// Solves A x = b over the integers. Returns std::nullopt when no integral
/// solution exists. Uses a precomputed SNF of A.
std::optional<IntVec> solve_linear(const SmithForm& snf_of_a, const IntVec& b);

/// Basis of the lattice of integer solutions of A x = 0, as matrix columns.
IntegerMatrix integer_kernel(const IntegerMatrix& a);

/// Basis of the lattice spanned by the columns of G (columns of the result
/// are independent and span the same subgroup of Z^rows).
IntegerMatrix column_lattice_basis(const IntegerMatrix& g);

IntVec vec_add(const IntVec& a, const IntVec& b);
IntVec vec_sub(const IntVec& a, const IntVec& b);
IntVec vec_scale(const Int& c, const IntVec& a);
Int dot(const IntVec& a, const IntVec& b);
bool vec_is_zero(const IntVec& v);

}  // namespace galcoh
