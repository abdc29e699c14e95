#include "galcoh/matrix.hpp"

#include <algorithm>
#include <cstdlib>

namespace galcoh {

IntegerMatrix::IntegerMatrix(int rows, int cols, std::initializer_list<long> entries)
    : IntegerMatrix(rows, cols) {
  if (static_cast<size_t>(rows) * cols != entries.size())
    throw ValidationError("IntegerMatrix: initializer size mismatch");
  size_t i = 0;
  for (long e : entries) a_[i++] = e;
}

IntegerMatrix IntegerMatrix::identity(int n) {
  IntegerMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntegerMatrix IntegerMatrix::from_rows(const std::vector<IntVec>& rows, int cols) {
  IntegerMatrix m(static_cast<int>(rows.size()), cols);
  for (int i = 0; i < m.rows_; ++i) {
    if (static_cast<int>(rows[i].size()) != cols)
      throw ValidationError("IntegerMatrix::from_rows: ragged input");
    for (int j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

IntegerMatrix IntegerMatrix::from_columns(const std::vector<IntVec>& cols, int rows) {
  IntegerMatrix m(rows, static_cast<int>(cols.size()));
  for (int j = 0; j < m.cols_; ++j) {
    if (static_cast<int>(cols[j].size()) != rows)
      throw ValidationError("IntegerMatrix::from_columns: ragged input");
    for (int i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
  }
  return m;
}

IntVec IntegerMatrix::column(int c) const {
  IntVec v(rows_);
  for (int i = 0; i < rows_; ++i) v[i] = at(i, c);
  return v;
}

IntVec IntegerMatrix::row(int r) const {
  IntVec v(cols_);
  for (int j = 0; j < cols_; ++j) v[j] = at(r, j);
  return v;
}

IntegerMatrix IntegerMatrix::transpose() const {
  IntegerMatrix m(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
  return m;
}

IntegerMatrix IntegerMatrix::operator*(const IntegerMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw ValidationError("matrix product: shape mismatch");
  IntegerMatrix m(rows_, rhs.cols_);
  Int tmp;
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Int& x = at(i, k);
      if (x == 0) continue;
      for (int j = 0; j < rhs.cols_; ++j) {
        tmp = x * rhs.at(k, j);
        m.at(i, j) += tmp;
      }
    }
  return m;
}

IntegerMatrix IntegerMatrix::operator+(const IntegerMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw ValidationError("matrix sum: shape mismatch");
  IntegerMatrix m(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] + rhs.a_[i];
  return m;
}

IntegerMatrix IntegerMatrix::operator-(const IntegerMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw ValidationError("matrix diff: shape mismatch");
  IntegerMatrix m(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] - rhs.a_[i];
  return m;
}

IntegerMatrix IntegerMatrix::operator-() const {
  IntegerMatrix m(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = -a_[i];
  return m;
}

IntVec IntegerMatrix::apply(const IntVec& v) const {
  if (static_cast<int>(v.size()) != cols_) throw ValidationError("matrix apply: shape mismatch");
  IntVec r(rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (at(i, j) != 0) r[i] += at(i, j) * v[j];
  return r;
}

bool IntegerMatrix::operator<(const IntegerMatrix& rhs) const {
  if (rows_ != rhs.rows_) return rows_ < rhs.rows_;
  if (cols_ != rhs.cols_) return cols_ < rhs.cols_;
  for (size_t i = 0; i < a_.size(); ++i) {
    int c = cmp(a_[i], rhs.a_[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

bool IntegerMatrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Int& x) { return x == 0; });
}

bool IntegerMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (at(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

IntegerMatrix IntegerMatrix::hcat(const IntegerMatrix& rhs) const {
  if (rows_ != rhs.rows_) throw ValidationError("hcat: row count mismatch");
  IntegerMatrix m(rows_, cols_ + rhs.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
    for (int j = 0; j < rhs.cols_; ++j) m.at(i, cols_ + j) = rhs.at(i, j);
  }
  return m;
}

void IntegerMatrix::swap_rows(int i, int j) {
  if (i == j) return;
  for (int c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void IntegerMatrix::swap_cols(int i, int j) {
  if (i == j) return;
  for (int r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}

int SmithForm::rank() const {
  int n = std::min(D.rows(), D.cols());
  int r = 0;
  for (int i = 0; i < n; ++i)
    if (D.at(i, i) != 0) ++r;
  return r;
}

IntVec SmithForm::diagonal() const {
  int n = std::min(D.rows(), D.cols());
  IntVec d(n);
  for (int i = 0; i < n; ++i) d[i] = D.at(i, i);
  return d;
}

namespace {

// Row/column elementary operations on D with transform bookkeeping.
struct SnfWork {
  IntegerMatrix D, U, V, Uinv, Vinv;

  explicit SnfWork(const IntegerMatrix& a)
      : D(a),
        U(IntegerMatrix::identity(a.rows())),
        V(IntegerMatrix::identity(a.cols())),
        Uinv(IntegerMatrix::identity(a.rows())),
        Vinv(IntegerMatrix::identity(a.cols())) {}

  void swap_rows(int i, int j) {
    D.swap_rows(i, j);
    U.swap_rows(i, j);
    Uinv.swap_cols(i, j);
  }
  void swap_cols(int i, int j) {
    D.swap_cols(i, j);
    V.swap_cols(i, j);
    Vinv.swap_rows(i, j);
  }
  // row_i += q * row_j
  void add_row(int i, int j, const Int& q) {
    if (q == 0) return;
    for (int c = 0; c < D.cols(); ++c) D.at(i, c) += q * D.at(j, c);
    for (int c = 0; c < U.cols(); ++c) U.at(i, c) += q * U.at(j, c);
    for (int r = 0; r < Uinv.rows(); ++r) Uinv.at(r, j) -= q * Uinv.at(r, i);
  }
  // col_i += q * col_j
  void add_col(int i, int j, const Int& q) {
    if (q == 0) return;
    for (int r = 0; r < D.rows(); ++r) D.at(r, i) += q * D.at(r, j);
    for (int r = 0; r < V.rows(); ++r) V.at(r, i) += q * V.at(r, j);
    for (int c = 0; c < Vinv.cols(); ++c) Vinv.at(j, c) -= q * Vinv.at(i, c);
  }
  void negate_row(int i) {
    for (int c = 0; c < D.cols(); ++c) D.at(i, c) = -D.at(i, c);
    for (int c = 0; c < U.cols(); ++c) U.at(i, c) = -U.at(i, c);
    for (int r = 0; r < Uinv.rows(); ++r) Uinv.at(r, i) = -Uinv.at(r, i);
  }
};

// Smallest-magnitude nonzero entry in the trailing submatrix.
bool find_pivot(const IntegerMatrix& d, int t, int& pi, int& pj) {
  bool found = false;
  Int best;
  for (int i = t; i < d.rows(); ++i)
    for (int j = t; j < d.cols(); ++j) {
      const Int& x = d.at(i, j);
      if (x == 0) continue;
      Int ax = abs(x);
      if (!found || ax < best) {
        best = ax;
        pi = i;
        pj = j;
        found = true;
      }
    }
  return found;
}

}  // namespace

SmithForm smith_normal_form(const IntegerMatrix& a) {
  SnfWork w(a);
  int n = std::min(a.rows(), a.cols());
  for (int t = 0; t < n; ++t) {
    int pi, pj;
    if (!find_pivot(w.D, t, pi, pj)) break;
    w.swap_rows(t, pi);
    w.swap_cols(t, pj);
    for (;;) {
      // Clear column t below the pivot.
      bool dirty = false;
      for (int i = t + 1; i < w.D.rows(); ++i) {
        if (w.D.at(i, t) == 0) continue;
        Int q = w.D.at(i, t) / w.D.at(t, t);  // truncated division
        w.add_row(i, t, -q);
        if (w.D.at(i, t) != 0) dirty = true;
      }
      if (dirty) {
        // A remainder smaller than the pivot appeared; restart with it.
        if (find_pivot(w.D, t, pi, pj)) {
          w.swap_rows(t, pi);
          w.swap_cols(t, pj);
        }
        continue;
      }
      // Clear row t right of the pivot.
      for (int j = t + 1; j < w.D.cols(); ++j) {
        if (w.D.at(t, j) == 0) continue;
        Int q = w.D.at(t, j) / w.D.at(t, t);
        w.add_col(j, t, -q);
        if (w.D.at(t, j) != 0) dirty = true;
      }
      if (dirty) {
        if (find_pivot(w.D, t, pi, pj)) {
          w.swap_rows(t, pi);
          w.swap_cols(t, pj);
        }
        continue;
      }
      // Enforce that the pivot divides the remaining submatrix.
      bool chained = true;
      for (int i = t + 1; chained && i < w.D.rows(); ++i)
        for (int j = t + 1; j < w.D.cols(); ++j)
          if (w.D.at(i, j) % w.D.at(t, t) != 0) {
            w.add_row(t, i, 1);
            chained = false;
            break;
          }
      if (chained) break;
    }
    if (w.D.at(t, t) < 0) w.negate_row(t);
  }
  return SmithForm{std::move(w.U), std::move(w.D), std::move(w.V), std::move(w.Uinv), std::move(w.Vinv)};
}

std::optional<IntVec> solve_linear(const SmithForm& s, const IntVec& b) {
  if (static_cast<int>(b.size()) != s.D.rows())
    throw ValidationError("solve_linear: rhs size mismatch");
  IntVec ub = s.U.apply(b);
  int n = std::min(s.D.rows(), s.D.cols());
  IntVec y(s.D.cols());
  for (int i = 0; i < s.D.rows(); ++i) {
    const Int di = (i < n) ? s.D.at(i, i) : Int(0);
    if (di == 0) {
      if (ub[i] != 0) return std::nullopt;
    } else {
      if (ub[i] % di != 0) return std::nullopt;
      y[i] = ub[i] / di;
    }
  }
  return s.V.apply(y);
}

IntegerMatrix integer_kernel(const IntegerMatrix& a) {
  SmithForm s = smith_normal_form(a);
  int r = s.rank();
  IntegerMatrix k(a.cols(), a.cols() - r);
  for (int j = r; j < a.cols(); ++j)
    for (int i = 0; i < a.cols(); ++i) k.at(i, j - r) = s.V.at(i, j);
  return k;
}

IntegerMatrix column_lattice_basis(const IntegerMatrix& g) {
  SmithForm s = smith_normal_form(g);
  int r = s.rank();
  // Column span of g equals Uinv * (column span of D).
  IntegerMatrix b(g.rows(), r);
  for (int j = 0; j < r; ++j) {
    const Int& d = s.D.at(j, j);
    for (int i = 0; i < g.rows(); ++i) b.at(i, j) = d * s.Uinv.at(i, j);
  }
  return b;
}

IntVec vec_add(const IntVec& a, const IntVec& b) {
  IntVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

IntVec vec_sub(const IntVec& a, const IntVec& b) {
  IntVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

IntVec vec_scale(const Int& c, const IntVec& a) {
  IntVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

Int dot(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw ValidationError("dot: size mismatch");
  Int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool vec_is_zero(const IntVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

}  // namespace galcoh
