#include "chev/errors.hpp"
#include "chev/verifier.hpp"

namespace chev {

namespace {

// Variable layout of the symbolic x1: indices 0..26 are the 27 deviation
// variables, in the order of the entries
//   a1 a2 a3 | b2 b3 | c1 c2 c3 c4 | d1 d2 d3 d4 |
//   e1 e2 e3 e4 | f1 f2 f4 | g1 g2 g3 g4 | h1 h2 h4
// measured against the reference values.  Three more entries are determined
// rather than free: b1 = 0 and h3 = 0 (forced ahead of the system) and
// f3 = -e3 (tied).  Indices 27..29 temporarily carry b1, f3, h3 while those
// three facts are being validated.
struct Slot {
  int row, col;  // 1-based position in the 8x8 matrix
  int var;       // variable index
};

constexpr Slot kSlots[] = {
    {1, 1, 0},  {1, 2, 1},  {1, 7, 2},              // a1 a2 a3
    {2, 2, 3},  {2, 7, 4},                          // b2 b3
    {7, 1, 5},  {7, 2, 6},  {7, 7, 7},  {7, 8, 8},  // c1..c4
    {8, 1, 9},  {8, 2, 10}, {8, 7, 11}, {8, 8, 12}, // d1..d4
    {3, 3, 13}, {3, 4, 14}, {3, 5, 15}, {3, 6, 16}, // e1..e4
    {4, 3, 17}, {4, 4, 18}, {4, 6, 19},             // f1 f2 f4
    {5, 3, 20}, {5, 4, 21}, {5, 5, 22}, {5, 6, 23}, // g1..g4
    {6, 3, 24}, {6, 4, 25}, {6, 6, 26},             // h1 h2 h4
};
constexpr int kB1 = 27, kF3 = 28, kH3 = 29;

// symbolic x1 on top of the reference matrix; `free_fixed` switches between
// the validation stage (b1, f3, h3 still free) and the final 27-variable form
AffMat symbolic_x1(const Mat& ref, bool free_fixed) {
  AffMat x = AffMat::from_int(ref);
  for (const Slot& s : kSlots)
    x.at(s.row - 1, s.col - 1) =
        x.at(s.row - 1, s.col - 1) + AffineForm::var(s.var);
  if (free_fixed) {
    x.at(2 - 1, 1 - 1) = AffineForm::var(kB1);
    x.at(4 - 1, 5 - 1) = AffineForm::var(kF3);
    x.at(6 - 1, 5 - 1) = AffineForm::var(kH3);
  } else {
    // f3 = -e3; b1 and h3 stay at the reference value 0
    x.at(4 - 1, 5 - 1) = AffineForm::var(15, -1);
  }
  return x;
}

struct Conditions {
  AffMat c1, c2, c3, c4;
  const AffMat& get(int k) const {
    switch (k) {
      case 1: return c1;
      case 2: return c2;
      case 3: return c3;
      default: return c4;
    }
  }
};

Conditions make_conditions(const GoldenA2& g, const AffMat& x1) {
  AffMat x12 = conjugate(g.w2, x1);
  AffMat x2 = conjugate(g.w1, x12);
  AffMat h2 = AffMat::from_int(g.h2);
  AffMat w1 = AffMat::from_int(g.w1);
  AffMat w1i = AffMat::from_int(inverse(g.w1));
  Conditions c;
  c.c1 = x1 * x12 - x12 * x1;
  c.c2 = h2 * x1 * h2 * x1 - AffMat::ident(8);
  c.c3 = x1 * w1 * x1 * w1i - w1 * h2 * x1 * h2;
  c.c4 = x2 * x1 - x12 * x1 * x2;
  return c;
}

// a row of the validation stage must be (unit)*(sum of the listed variables)
void expect_proportional(const AffineForm& f, std::vector<int> vars,
                         const char* what) {
  if (f.c != 0)
    throw StructuralFailure(std::string("forced-entry check: constant term at ") + what);
  cpp_int scale = 0;
  for (const auto& [k, v] : f.lin) {
    bool listed = false;
    for (int x : vars) listed = listed || (x == k);
    if (!listed)
      throw StructuralFailure(std::string("forced-entry check: stray variable at ") + what);
    if (scale == 0) scale = v;
    if (v != scale)
      throw StructuralFailure(std::string("forced-entry check: uneven coefficients at ") + what);
  }
  if (scale != 1 && scale != -1)
    throw StructuralFailure(std::string("forced-entry check: non-unit scale at ") + what);
  if (f.lin.size() != vars.size())
    throw StructuralFailure(std::string("forced-entry check: missing variable at ") + what);
}

AffineForm entry_at(const AffMat& m, int row, int col) {
  if (row < 1 || row > m.rows || col < 1 || col > m.cols)
    throw PositionOutOfRange("condition position (" + std::to_string(row) + "," +
                             std::to_string(col) + ") outside the 8x8 block");
  return m.at(row - 1, col - 1);
}

}  // namespace

LinearSystem27 build_con_system(const Chevalley& ch) {
  GoldenA2 g = golden_a2(ch);

  // Stage 1: justify pinning b1, h3 and tying f3 = -e3.  With those three
  // entries still free, four condition slots reduce to exactly the claimed
  // forced equations.
  {
    Conditions v = make_conditions(g, symbolic_x1(g.x1, true));
    expect_proportional(entry_at(v.c1, 3, 8), {kF3, 15}, "f3 + e3");
    expect_proportional(entry_at(v.c1, 2, 8), {kH3}, "h3");
    expect_proportional(entry_at(v.c2, 2, 8), {kB1}, "b1");
    expect_proportional(entry_at(v.c1, 2, 4), {kB1}, "b1 (second witness)");
  }

  // Stage 2: the 27-variable system.
  Conditions c = make_conditions(g, symbolic_x1(g.x1, false));
  for (int k = 1; k <= 4; ++k)
    for (const AffineForm& f : c.get(k).a)
      if (f.c != 0)
        throw NonvanishingConstant("condition Con" + std::to_string(k) +
                                   " does not vanish at the reference point");

  constexpr struct { int cond, row, col; } kRows[] = {
      {1, 1, 2}, {1, 1, 3}, {1, 1, 4}, {1, 1, 5}, {1, 1, 6}, {1, 1, 7},
      {1, 1, 8}, {1, 2, 6}, {1, 3, 6}, {1, 3, 7}, {4, 3, 5}, {3, 8, 2},
      {2, 1, 2}, {4, 6, 2}, {3, 3, 3}, {2, 2, 2}, {2, 3, 3}, {2, 3, 4},
      {4, 7, 3}, {2, 4, 6}, {2, 5, 3}, {2, 5, 6}, {2, 7, 2}, {2, 7, 8},
      {3, 1, 2}, {3, 6, 6}, {4, 7, 5},
  };

  LinearSystem27 sys;
  Ring z = Ring::integers();
  sys.coeffs = Mat::zero(z, 27, 27);
  for (int r = 0; r < 27; ++r) {
    const auto& spec = kRows[r];
    AffineForm f = entry_at(c.get(spec.cond), spec.row, spec.col);
    for (const auto& [k, v] : f.lin) sys.coeffs.at(r, k) = z.from_cpp_int(v);
    sys.labels.push_back("Con" + std::to_string(spec.cond) + " (" +
                         std::to_string(spec.row) + "," +
                         std::to_string(spec.col) + ")");
  }
  sys.det = bareiss_det_int(sys.coeffs);
  return sys;
}

void check_con_system_over(const LinearSystem27& sys, const Ring& ring) {
  Mat a = map_ring(sys.coeffs, ring);
  RElem d = det(a);
  invert(d);  // non-unit determinant raises NonUnit
  Mat x = solve_unit_pivot(a, Mat::zero(ring, 27, 1));
  if (!is_zero_mat(x))
    throw StructuralFailure("homogeneous rigidity system returned a nonzero solution");
  Mat ai = inverse(a);
  if (!is_identity(ai * a))
    throw StructuralFailure("rigidity system inverse check failed");
}

}  // namespace chev
