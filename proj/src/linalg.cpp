#include "chev/linalg.hpp"

namespace chev {

namespace {

// Field kinds may pivot on any nonzero entry; elsewhere pivots must be units
// so the elimination stays inside the ring.
bool usable_pivot(const RElem& x, bool field) { return field ? !is_zero(x) : is_unit(x); }

struct Reduction {
  Mat m;                      // [A | B] after Gauss-Jordan
  std::vector<int> pivot_row; // per column of A, row index or -1
  std::vector<int> row_col;   // per row, pivot column or -1
  int rank = 0;
};

Reduction gauss_jordan(const Mat& a, const Mat& b, bool field) {
  Reduction red;
  int n = a.rows, c = a.cols, w = b.cols;
  red.m = Mat::zero(a.ring, n, c + w);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < c; ++j) red.m.at(i, j) = a.at(i, j);
    for (int j = 0; j < w; ++j) red.m.at(i, c + j) = b.at(i, j);
  }
  red.pivot_row.assign(c, -1);
  red.row_col.assign(n, -1);
  Mat& m = red.m;
  for (int col = 0; col < c; ++col) {
    int pr = -1;
    for (int r = 0; r < n; ++r) {
      if (red.row_col[r] != -1) continue;
      if (usable_pivot(m.at(r, col), field)) { pr = r; break; }
    }
    if (pr == -1) continue;  // free column
    RElem inv = invert(m.at(pr, col));
    for (int j = col; j < c + w; ++j) m.at(pr, j) = inv * m.at(pr, j);
    for (int r = 0; r < n; ++r) {
      if (r == pr || is_zero(m.at(r, col))) continue;
      RElem f = m.at(r, col);
      for (int j = col; j < c + w; ++j) m.at(r, j) = m.at(r, j) - f * m.at(pr, j);
    }
    red.pivot_row[col] = pr;
    red.row_col[pr] = col;
    ++red.rank;
  }
  return red;
}

}  // namespace

Mat solve_unit_pivot(const Mat& a, const Mat& b) {
  if (a.ring != b.ring) throw RingMismatch("solve over mismatched rings");
  if (a.rows != b.rows) throw BadInput("row count mismatch in solve");
  bool field = a.ring.is_field();
  Reduction red = gauss_jordan(a, b, field);
  int c = a.cols, w = b.cols;
  Mat x = Mat::zero(a.ring, c, w);
  for (int col = 0; col < c; ++col) {
    int pr = red.pivot_row[col];
    if (pr == -1) continue;  // free variable, stays 0
    for (int j = 0; j < w; ++j) x.at(col, j) = red.m.at(pr, c + j);
  }
  // rows without a usable pivot were not consumed by the elimination; the
  // candidate is only a solution if it satisfies the original system too
  if (!(a * x == b))
    throw StructuralFailure("solve_unit_pivot: pinned candidate does not satisfy the system");
  return x;
}

Mat inverse(const Mat& a) {
  if (a.rows != a.cols) throw BadInput("inverse of non-square matrix");
  if (a.ring.kind == RingKind::Int) {
    Ring rat = Ring::rationals();
    Mat aq = Mat::zero(rat, a.rows, a.cols);
    for (std::size_t i = 0; i < a.a.size(); ++i)
      aq.a[i].v = cpp_rational(std::get<cpp_int>(a.a[i].v));
    Mat xq = inverse(aq);
    Mat x = Mat::zero(a.ring, a.rows, a.cols);
    for (std::size_t i = 0; i < x.a.size(); ++i) {
      const cpp_rational& q = std::get<cpp_rational>(xq.a[i].v);
      if (boost::multiprecision::denominator(q) != 1)
        throw StructuralFailure("integer matrix has a non-integer inverse");
      x.a[i].v = cpp_int(boost::multiprecision::numerator(q));
    }
    return x;
  }
  bool field = a.ring.is_field();
  Reduction red = gauss_jordan(a, Mat::ident(a.ring, a.rows), field);
  if (red.rank != a.rows)
    throw StructuralFailure("matrix not invertible by " +
                            std::string(field ? "nonzero" : "unit") + " pivots");
  Mat x = Mat::zero(a.ring, a.rows, a.cols);
  for (int col = 0; col < a.cols; ++col) {
    int pr = red.pivot_row[col];
    for (int j = 0; j < a.cols; ++j) x.at(col, j) = red.m.at(pr, a.cols + j);
  }
  return x;
}

RElem det(const Mat& a) {
  if (a.rows != a.cols) throw BadInput("determinant of non-square matrix");
  if (a.ring.kind == RingKind::Int) {
    RElem r = a.ring.zero();
    r.v = bareiss_det_int(a);
    return r;
  }
  bool field = a.ring.is_field();
  Mat m = a;
  int n = a.rows;
  RElem d = a.ring.one();
  for (int col = 0; col < n; ++col) {
    int pr = -1;
    for (int r = col; r < n; ++r)
      if (usable_pivot(m.at(r, col), field)) { pr = r; break; }
    if (pr == -1) {
      bool all_zero = true;
      for (int r = col; r < n; ++r)
        if (!is_zero(m.at(r, col))) all_zero = false;
      if (all_zero) return a.ring.zero();
      throw StructuralFailure("determinant stuck: column of non-unit non-zero entries");
    }
    if (pr != col) {
      for (int j = 0; j < n; ++j) std::swap(m.at(col, j), m.at(pr, j));
      d = -d;
    }
    d = d * m.at(col, col);
    RElem inv = invert(m.at(col, col));
    for (int r = col + 1; r < n; ++r) {
      if (is_zero(m.at(r, col))) continue;
      RElem f = m.at(r, col) * inv;
      for (int j = col; j < n; ++j) m.at(r, j) = m.at(r, j) - f * m.at(col, j);
    }
  }
  return d;
}

int rank_field(const Mat& a) { return static_cast<int>(pivot_columns_field(a).size()); }

std::vector<int> pivot_columns_field(const Mat& a) {
  if (!a.ring.is_field()) throw BadInput("rank_field needs a field kind");
  Reduction red = gauss_jordan(a, Mat::zero(a.ring, a.rows, 0), true);
  std::vector<int> cols;
  for (int c = 0; c < a.cols; ++c)
    if (red.pivot_row[c] != -1) cols.push_back(c);
  return cols;
}

cpp_int bareiss_det_int(const Mat& a) {
  if (a.ring.kind != RingKind::Int) throw BadInput("bareiss_det_int needs the integer ring");
  int n = a.rows;
  if (n == 0) return 1;
  std::vector<std::vector<cpp_int>> m(n, std::vector<cpp_int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = std::get<cpp_int>(a.at(i, j).v);
  cpp_int prev = 1;
  int sign = 1;
  for (int col = 0; col < n - 1; ++col) {
    if (m[col][col] == 0) {
      int pr = -1;
      for (int r = col + 1; r < n; ++r)
        if (m[r][col] != 0) { pr = r; break; }
      if (pr == -1) return 0;
      std::swap(m[col], m[pr]);
      sign = -sign;
    }
    for (int r = col + 1; r < n; ++r) {
      for (int j = col + 1; j < n; ++j) {
        cpp_int num = m[r][j] * m[col][col] - m[r][col] * m[col][j];
        m[r][j] = num / prev;  // exact division, Bareiss invariant
      }
      m[r][col] = 0;
    }
    prev = m[col][col];
  }
  return sign * m[n - 1][n - 1];
}

}  // namespace chev
