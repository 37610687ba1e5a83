#pragma once
// First-order symbolic arithmetic: values of the shape c + sum_i k_i * v_i
// where the v_i are formal variables ranging over the radical of a local
// ring.  Products of two variables are dropped, which is exact modulo J^2;
// the rigidity arguments only ever consume the constant and linear parts.
#include <map>
#include <string>
#include <vector>

#include "chev/matrix.hpp"

namespace chev {

struct AffineForm {
  cpp_int c;
  std::map<int, cpp_int> lin;  // variable index -> coefficient

  AffineForm() : c(0) {}
  explicit AffineForm(long long k) : c(k) {}
  explicit AffineForm(const cpp_int& k) : c(k) {}
  static AffineForm var(int idx, long long coeff = 1);

  bool is_zero() const { return c == 0 && lin.empty(); }
  bool is_constant() const { return lin.empty(); }
  cpp_int coeff(int idx) const;
};

AffineForm operator+(const AffineForm& a, const AffineForm& b);
AffineForm operator-(const AffineForm& a, const AffineForm& b);
AffineForm operator-(const AffineForm& a);
AffineForm operator*(const AffineForm& a, const AffineForm& b);
bool operator==(const AffineForm& a, const AffineForm& b);
std::string to_string(const AffineForm& a);

// Dense matrix of affine forms.
struct AffMat {
  int rows = 0, cols = 0;
  std::vector<AffineForm> a;

  static AffMat zero(int r, int c);
  static AffMat ident(int n);
  // lift an integer matrix into constant forms
  static AffMat from_int(const Mat& m);

  AffineForm& at(int i, int j) { return a[(std::size_t)i * cols + j]; }
  const AffineForm& at(int i, int j) const { return a[(std::size_t)i * cols + j]; }
};

AffMat operator+(const AffMat& x, const AffMat& y);
AffMat operator-(const AffMat& x, const AffMat& y);
AffMat operator*(const AffMat& x, const AffMat& y);
bool operator==(const AffMat& x, const AffMat& y);

// conjugate by an integer matrix with integer inverse
AffMat conjugate(const Mat& w, const AffMat& x);

}  // namespace chev
