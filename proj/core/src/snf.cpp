#include "dbcohom/snf.hpp"

#include <algorithm>

namespace dbcohom {

IntegerMatrix IntegerMatrix::identity(int n) {
  IntegerMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntegerMatrix IntegerMatrix::multiply(const IntegerMatrix& other) const {
  if (cols_ != other.rows_) throw ShapeMismatchError("matrix product shapes");
  IntegerMatrix out(rows_, other.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      const BigInt& a = (*this)(i, k);
      if (a == 0) continue;
      for (int j = 0; j < other.cols_; ++j) {
        if (other(k, j) == 0) continue;
        out(i, j) += a * other(k, j);
      }
    }
  }
  return out;
}

IntegerMatrix IntegerMatrix::transpose() const {
  IntegerMatrix out(cols_, rows_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  }
  return out;
}

namespace {

struct Working {
  IntegerMatrix a, left, right;

  void swap_rows(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < a.cols(); ++c) std::swap(a(i, c), a(j, c));
    for (int c = 0; c < left.cols(); ++c) std::swap(left(i, c), left(j, c));
  }
  void swap_cols(int i, int j) {
    if (i == j) return;
    for (int r = 0; r < a.rows(); ++r) std::swap(a(r, i), a(r, j));
    for (int r = 0; r < right.rows(); ++r) std::swap(right(r, i), right(r, j));
  }
  void add_row(int dst, int src, const BigInt& factor) {  // row dst += f * src
    for (int c = 0; c < a.cols(); ++c) a(dst, c) += factor * a(src, c);
    for (int c = 0; c < left.cols(); ++c) left(dst, c) += factor * left(src, c);
  }
  void add_col(int dst, int src, const BigInt& factor) {
    for (int r = 0; r < a.rows(); ++r) a(r, dst) += factor * a(r, src);
    for (int r = 0; r < right.rows(); ++r) right(r, dst) += factor * right(r, src);
  }
  void negate_row(int i) {
    for (int c = 0; c < a.cols(); ++c) a(i, c) = -a(i, c);
    for (int c = 0; c < left.cols(); ++c) left(i, c) = -left(i, c);
  }
};

}  // namespace

SNFResult smith_normal_form(const IntegerMatrix& m) {
  Working w{m, IntegerMatrix::identity(m.rows()),
            IntegerMatrix::identity(m.cols())};
  const int n = std::min(m.rows(), m.cols());

  for (int s = 0; s < n; ++s) {
    // pivot: minimal nonzero absolute value in the trailing block
    int pr = -1, pc = -1;
    BigInt best = 0;
    for (int i = s; i < m.rows(); ++i) {
      for (int j = s; j < m.cols(); ++j) {
        if (w.a(i, j) == 0) continue;
        BigInt mag = abs(w.a(i, j));
        if (pr < 0 || mag < best) {
          best = mag;
          pr = i;
          pc = j;
        }
      }
    }
    if (pr < 0) break;  // trailing block is zero
    w.swap_rows(s, pr);
    w.swap_cols(s, pc);

    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (int i = s + 1; i < m.rows(); ++i) {
        if (w.a(i, s) == 0) continue;
        BigInt q = w.a(i, s) / w.a(s, s);
        w.add_row(i, s, -q);
        if (w.a(i, s) != 0) {
          w.swap_rows(s, i);  // smaller remainder becomes the pivot
          dirty = true;
        }
      }
      for (int j = s + 1; j < m.cols(); ++j) {
        if (w.a(s, j) == 0) continue;
        BigInt q = w.a(s, j) / w.a(s, s);
        w.add_col(j, s, -q);
        if (w.a(s, j) != 0) {
          w.swap_cols(s, j);
          dirty = true;
        }
      }
    }

    if (w.a(s, s) < 0) w.negate_row(s);

    // divisibility: fold any non-multiple into the pivot and redo this step
    for (int i = s + 1; i < m.rows(); ++i) {
      bool retry = false;
      for (int j = s + 1; j < m.cols(); ++j) {
        if (w.a(i, j) % w.a(s, s) != 0) {
          w.add_row(s, i, 1);
          retry = true;
          break;
        }
      }
      if (retry) {
        --s;
        break;
      }
    }
  }

  SNFResult out;
  out.left = w.left;
  out.right = w.right;
  out.diagonal = w.a;
  for (int s = 0; s < n; ++s) {
    if (w.a(s, s) != 0) {
      out.invariant_factors.push_back(w.a(s, s));
    }
  }
  out.rank = static_cast<int>(out.invariant_factors.size());
  return out;
}

std::optional<std::vector<BigInt>> solve_integer_system(
    const IntegerMatrix& m, const std::vector<BigInt>& b) {
  if (static_cast<int>(b.size()) != m.rows()) {
    throw ShapeMismatchError("solve_integer_system: rhs size");
  }
  SNFResult snf = smith_normal_form(m);
  // L M R = D, so M x = b becomes D z = L b with x = R z.
  std::vector<BigInt> lb(m.rows(), 0);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.rows(); ++j) {
      if (snf.left(i, j) != 0 && b[j] != 0) lb[i] += snf.left(i, j) * b[j];
    }
  }
  std::vector<BigInt> z(m.cols(), 0);
  int n = std::min(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i) {
    BigInt d = (i < n) ? snf.diagonal(i, i) : BigInt(0);
    if (d == 0) {
      if (lb[i] != 0) return std::nullopt;
    } else {
      if (lb[i] % d != 0) return std::nullopt;
      z[i] = lb[i] / d;
    }
  }
  std::vector<BigInt> x(m.cols(), 0);
  for (int i = 0; i < m.cols(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      if (snf.right(i, j) != 0 && z[j] != 0) x[i] += snf.right(i, j) * z[j];
    }
  }
  return x;
}

std::vector<std::vector<BigInt>> integer_nullspace(const IntegerMatrix& m) {
  SNFResult snf = smith_normal_form(m);
  std::vector<std::vector<BigInt>> basis;
  for (int j = snf.rank; j < m.cols(); ++j) {
    std::vector<BigInt> v(m.cols());
    for (int i = 0; i < m.cols(); ++i) v[i] = snf.right(i, j);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace dbcohom
