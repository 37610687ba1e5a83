#include "chev/matrix.hpp"

namespace chev {

namespace {

void check_ring(const Mat& x, const Mat& y) {
  if (x.ring != y.ring)
    throw RingMismatch("matrices over " + x.ring.descriptor() + " and " + y.ring.descriptor());
}

// Packed kernel for Fp/Zmod. Moduli are < 2^31 and row lengths small enough
// that a 128-bit accumulator never overflows.
Mat mul_modular(const Mat& x, const Mat& y) {
  const uint64_t m = x.ring.modulus;
  const int n = x.rows, kk = x.cols, c = y.cols;
  std::vector<uint64_t> xa(static_cast<std::size_t>(n) * kk), ya(static_cast<std::size_t>(kk) * c);
  for (std::size_t i = 0; i < xa.size(); ++i) xa[i] = std::get<uint64_t>(x.a[i].v);
  for (std::size_t i = 0; i < ya.size(); ++i) ya[i] = std::get<uint64_t>(y.a[i].v);
  Mat z = Mat::zero(x.ring, n, c);
  const bool small = m < (1u << 15);  // (m-1)^2 * cols fits in uint64 comfortably
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < c; ++j) {
      if (small) {
        uint64_t acc = 0;
        for (int t = 0; t < kk; ++t) acc += xa[std::size_t(i) * kk + t] * ya[std::size_t(t) * c + j];
        z.at(i, j).v = acc % m;
      } else {
        unsigned __int128 acc = 0;
        for (int t = 0; t < kk; ++t)
          acc += static_cast<unsigned __int128>(xa[std::size_t(i) * kk + t]) * ya[std::size_t(t) * c + j];
        z.at(i, j).v = static_cast<uint64_t>(acc % m);
      }
    }
  }
  return z;
}

// Packed kernel for Tpoly: contiguous blocks of k coefficients, truncated
// convolution per entry, one reduction at the end.
Mat mul_tpoly(const Mat& x, const Mat& y) {
  const uint64_t p = x.ring.p;
  const uint32_t deg = x.ring.k;
  const int n = x.rows, kk = x.cols, c = y.cols;
  std::vector<uint64_t> xa(static_cast<std::size_t>(n) * kk * deg),
      ya(static_cast<std::size_t>(kk) * c * deg);
  for (std::size_t i = 0; i < x.a.size(); ++i) {
    const auto& cv = std::get<std::vector<uint64_t>>(x.a[i].v);
    for (uint32_t d = 0; d < deg; ++d) xa[i * deg + d] = cv[d];
  }
  for (std::size_t i = 0; i < y.a.size(); ++i) {
    const auto& cv = std::get<std::vector<uint64_t>>(y.a[i].v);
    for (uint32_t d = 0; d < deg; ++d) ya[i * deg + d] = cv[d];
  }
  Mat z = Mat::zero(x.ring, n, c);
  std::vector<uint64_t> acc(deg);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < c; ++j) {
      std::fill(acc.begin(), acc.end(), 0);
      for (int t = 0; t < kk; ++t) {
        const uint64_t* xv = &xa[(std::size_t(i) * kk + t) * deg];
        const uint64_t* yv = &ya[(std::size_t(t) * c + j) * deg];
        for (uint32_t d1 = 0; d1 < deg; ++d1) {
          if (!xv[d1]) continue;
          for (uint32_t d2 = 0; d1 + d2 < deg; ++d2) acc[d1 + d2] += xv[d1] * yv[d2];
        }
      }
      auto& cv = std::get<std::vector<uint64_t>>(z.at(i, j).v);
      for (uint32_t d = 0; d < deg; ++d) cv[d] = acc[d] % p;
    }
  }
  return z;
}

}  // namespace

Mat Mat::zero(const Ring& r, int rows, int cols) {
  Mat m;
  m.ring = r;
  m.rows = rows;
  m.cols = cols;
  m.a.assign(static_cast<std::size_t>(rows) * cols, r.zero());
  return m;
}

Mat Mat::ident(const Ring& r, int n) {
  Mat m = zero(r, n, n);
  RElem one = r.one();
  for (int i = 0; i < n; ++i) m.at(i, i) = one;
  return m;
}

Mat Mat::from_rows(const Ring& r, const std::vector<std::vector<long long>>& rows) {
  int nr = static_cast<int>(rows.size());
  int nc = nr ? static_cast<int>(rows[0].size()) : 0;
  Mat m = zero(r, nr, nc);
  for (int i = 0; i < nr; ++i) {
    if (static_cast<int>(rows[i].size()) != nc) throw BadInput("ragged row list");
    for (int j = 0; j < nc; ++j) m.at(i, j) = r.from_int(rows[i][j]);
  }
  return m;
}

Mat operator*(const Mat& x, const Mat& y) {
  check_ring(x, y);
  if (x.cols != y.rows) throw BadInput("matrix dimension mismatch in product");
  switch (x.ring.kind) {
    case RingKind::Fp: case RingKind::Zmod:
      return mul_modular(x, y);
    case RingKind::Tpoly:
      return mul_tpoly(x, y);
    default: {
      Mat z = Mat::zero(x.ring, x.rows, y.cols);
      for (int i = 0; i < x.rows; ++i)
        for (int t = 0; t < x.cols; ++t) {
          const RElem& xv = x.at(i, t);
          if (is_zero(xv)) continue;
          for (int j = 0; j < y.cols; ++j) {
            const RElem& yv = y.at(t, j);
            if (is_zero(yv)) continue;
            z.at(i, j) = z.at(i, j) + xv * yv;
          }
        }
      return z;
    }
  }
}

Mat operator+(const Mat& x, const Mat& y) {
  check_ring(x, y);
  if (x.rows != y.rows || x.cols != y.cols) throw BadInput("matrix dimension mismatch in sum");
  Mat z = x;
  for (std::size_t i = 0; i < z.a.size(); ++i) z.a[i] = z.a[i] + y.a[i];
  return z;
}

Mat operator-(const Mat& x, const Mat& y) {
  check_ring(x, y);
  if (x.rows != y.rows || x.cols != y.cols) throw BadInput("matrix dimension mismatch in difference");
  Mat z = x;
  for (std::size_t i = 0; i < z.a.size(); ++i) z.a[i] = z.a[i] - y.a[i];
  return z;
}

Mat operator-(const Mat& x) {
  Mat z = x;
  for (auto& e : z.a) e = -e;
  return z;
}

bool operator==(const Mat& x, const Mat& y) {
  check_ring(x, y);
  if (x.rows != y.rows || x.cols != y.cols) return false;
  for (std::size_t i = 0; i < x.a.size(); ++i)
    if (x.a[i] != y.a[i]) return false;
  return true;
}

Mat scalar_mul(const RElem& c, const Mat& x) {
  Mat z = x;
  for (auto& e : z.a) e = c * e;
  return z;
}

Mat transpose(const Mat& x) {
  Mat z = Mat::zero(x.ring, x.cols, x.rows);
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j) z.at(j, i) = x.at(i, j);
  return z;
}

bool is_identity(const Mat& x) {
  if (x.rows != x.cols) return false;
  return x == Mat::ident(x.ring, x.rows);
}

bool is_zero_mat(const Mat& x) {
  for (const auto& e : x.a)
    if (!is_zero(e)) return false;
  return true;
}

Mat residue_mat(const Mat& x) {
  Mat z = Mat::zero(x.ring.residue_ring(), x.rows, x.cols);
  for (std::size_t i = 0; i < x.a.size(); ++i) z.a[i] = residue(x.a[i]);
  return z;
}

bool congruent_mod_radical(const Mat& x, const Mat& y) {
  check_ring(x, y);
  if (!x.ring.is_local()) throw NotLocal("congruence mod radical needs a local ring");
  if (x.rows != y.rows || x.cols != y.cols) return false;
  for (std::size_t i = 0; i < x.a.size(); ++i)
    if (is_unit(x.a[i] - y.a[i])) return false;
  return true;
}

Mat map_ring(const Mat& int_mat, const Ring& target) {
  if (int_mat.ring.kind != RingKind::Int)
    throw RingMismatch("map_ring expects an integer matrix, got " + int_mat.ring.descriptor());
  Mat z = Mat::zero(target, int_mat.rows, int_mat.cols);
  for (std::size_t i = 0; i < int_mat.a.size(); ++i)
    z.a[i] = target.from_cpp_int(std::get<cpp_int>(int_mat.a[i].v));
  return z;
}

}  // namespace chev
