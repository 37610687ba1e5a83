#include "chev/affine_form.hpp"

#include "chev/errors.hpp"
#include "chev/linalg.hpp"

namespace chev {

AffineForm AffineForm::var(int idx, long long coeff) {
  AffineForm f;
  if (coeff != 0) f.lin[idx] = coeff;
  return f;
}

cpp_int AffineForm::coeff(int idx) const {
  auto it = lin.find(idx);
  return it == lin.end() ? cpp_int(0) : it->second;
}

AffineForm operator+(const AffineForm& a, const AffineForm& b) {
  AffineForm r = a;
  r.c += b.c;
  for (const auto& [k, v] : b.lin) {
    cpp_int s = r.coeff(k) + v;
    if (s == 0)
      r.lin.erase(k);
    else
      r.lin[k] = s;
  }
  return r;
}

AffineForm operator-(const AffineForm& a) {
  AffineForm r;
  r.c = -a.c;
  for (const auto& [k, v] : a.lin) r.lin[k] = -v;
  return r;
}

AffineForm operator-(const AffineForm& a, const AffineForm& b) { return a + (-b); }

AffineForm operator*(const AffineForm& a, const AffineForm& b) {
  // (c1 + l1)(c2 + l2) = c1c2 + c1l2 + c2l1, the l1l2 term is in J^2
  AffineForm r;
  r.c = a.c * b.c;
  for (const auto& [k, v] : b.lin) {
    cpp_int s = a.c * v;
    if (s != 0) r.lin[k] = s;
  }
  for (const auto& [k, v] : a.lin) {
    cpp_int s = r.coeff(k) + b.c * v;
    if (s == 0)
      r.lin.erase(k);
    else
      r.lin[k] = s;
  }
  return r;
}

bool operator==(const AffineForm& a, const AffineForm& b) {
  return a.c == b.c && a.lin == b.lin;
}

std::string to_string(const AffineForm& a) {
  std::string s = a.c.str();
  for (const auto& [k, v] : a.lin) {
    s += (v < 0 ? " - " : " + ");
    cpp_int av = v < 0 ? cpp_int(-v) : v;
    if (av != 1) s += av.str() + "*";
    s += "v" + std::to_string(k);
  }
  return s;
}

AffMat AffMat::zero(int r, int c) {
  AffMat m;
  m.rows = r;
  m.cols = c;
  m.a.assign((std::size_t)r * c, AffineForm());
  return m;
}

AffMat AffMat::ident(int n) {
  AffMat m = zero(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = AffineForm(1);
  return m;
}

AffMat AffMat::from_int(const Mat& m) {
  if (m.ring.kind != RingKind::Int)
    throw BadInput("AffMat::from_int expects an integer matrix");
  AffMat r = zero(m.rows, m.cols);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j)
      r.at(i, j) = AffineForm(std::get<cpp_int>(m.at(i, j).v));
  return r;
}

AffMat operator+(const AffMat& x, const AffMat& y) {
  if (x.rows != y.rows || x.cols != y.cols) throw BadInput("AffMat shape mismatch");
  AffMat r = AffMat::zero(x.rows, x.cols);
  for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] = x.a[i] + y.a[i];
  return r;
}

AffMat operator-(const AffMat& x, const AffMat& y) {
  if (x.rows != y.rows || x.cols != y.cols) throw BadInput("AffMat shape mismatch");
  AffMat r = AffMat::zero(x.rows, x.cols);
  for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] = x.a[i] - y.a[i];
  return r;
}

AffMat operator*(const AffMat& x, const AffMat& y) {
  if (x.cols != y.rows) throw BadInput("AffMat shape mismatch");
  AffMat r = AffMat::zero(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      const AffineForm& f = x.at(i, k);
      if (f.is_zero()) continue;
      for (int j = 0; j < y.cols; ++j) {
        if (y.at(k, j).is_zero()) continue;
        r.at(i, j) = r.at(i, j) + f * y.at(k, j);
      }
    }
  return r;
}

bool operator==(const AffMat& x, const AffMat& y) {
  return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
}

AffMat conjugate(const Mat& w, const AffMat& x) {
  Mat wi = inverse(w);
  return AffMat::from_int(w) * x * AffMat::from_int(wi);
}

}  // namespace chev
