#pragma once
#include <vector>

#include "chev/rings.hpp"

namespace chev {

// Dense matrix of ring elements, row-major. Multiplication dispatches to
// packed integer kernels for the finite kinds so the sampled relation suites
// stay fast; Int/Rat/Zloc go through generic exact arithmetic.
struct Mat {
  Ring ring;
  int rows = 0, cols = 0;
  std::vector<RElem> a;

  static Mat zero(const Ring& r, int rows, int cols);
  static Mat ident(const Ring& r, int n);
  static Mat from_rows(const Ring& r, const std::vector<std::vector<long long>>& rows);

  RElem& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  const RElem& at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }
};

Mat operator*(const Mat& x, const Mat& y);
Mat operator+(const Mat& x, const Mat& y);
Mat operator-(const Mat& x, const Mat& y);
Mat operator-(const Mat& x);
bool operator==(const Mat& x, const Mat& y);
inline bool operator!=(const Mat& x, const Mat& y) { return !(x == y); }

Mat scalar_mul(const RElem& c, const Mat& x);
Mat transpose(const Mat& x);
bool is_identity(const Mat& x);
bool is_zero_mat(const Mat& x);

// Entrywise residue map into the residue field.
Mat residue_mat(const Mat& x);
// Entries of x - y all lie in the radical.
bool congruent_mod_radical(const Mat& x, const Mat& y);
// Reinterpret an integer matrix over another ring.
Mat map_ring(const Mat& int_mat, const Ring& target);

}  // namespace chev
