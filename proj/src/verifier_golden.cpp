#include "chev/errors.hpp"
#include "chev/verifier.hpp"

namespace chev {

namespace {

// Reference matrices for the rank-2 type-A system, in the basis
// (v1, v-1, v2, v-2, v12, v-12, V1, V2).
Mat ref_w1(const Ring& z) {
  return Mat::from_rows(z, {{0, -1, 0, 0, 0, 0, 0, 0},
                            {-1, 0, 0, 0, 0, 0, 0, 0},
                            {0, 0, 0, 0, 1, 0, 0, 0},
                            {0, 0, 0, 0, 0, 1, 0, 0},
                            {0, 0, -1, 0, 0, 0, 0, 0},
                            {0, 0, 0, -1, 0, 0, 0, 0},
                            {0, 0, 0, 0, 0, 0, -1, 1},
                            {0, 0, 0, 0, 0, 0, 0, 1}});
}

Mat ref_w2(const Ring& z) {
  return Mat::from_rows(z, {{0, 0, 0, 0, -1, 0, 0, 0},
                            {0, 0, 0, 0, 0, -1, 0, 0},
                            {0, 0, 0, -1, 0, 0, 0, 0},
                            {0, 0, -1, 0, 0, 0, 0, 0},
                            {1, 0, 0, 0, 0, 0, 0, 0},
                            {0, 1, 0, 0, 0, 0, 0, 0},
                            {0, 0, 0, 0, 0, 0, 1, 0},
                            {0, 0, 0, 0, 0, 0, 1, -1}});
}

Mat ref_x1(const Ring& z) {
  return Mat::from_rows(z, {{1, -1, 0, 0, 0, 0, -2, 1},
                            {0, 1, 0, 0, 0, 0, 0, 0},
                            {0, 0, 1, 0, 0, 0, 0, 0},
                            {0, 0, 0, 1, 0, 1, 0, 0},
                            {0, 0, -1, 0, 1, 0, 0, 0},
                            {0, 0, 0, 0, 0, 1, 0, 0},
                            {0, 1, 0, 0, 0, 0, 1, 0},
                            {0, 0, 0, 0, 0, 0, 0, 1}});
}

Mat ref_h2(const Ring& z) {
  Mat m = Mat::ident(z, 8);
  for (int i : {0, 1, 4, 5}) m.at(i, i) = z.from_int(-1);
  return m;
}

}  // namespace

GoldenA2 golden_a2(const Chevalley& ch) {
  const RootSystem& rs = ch.system();
  if (rs.family() != Family::A || rs.rank() != 2)
    throw UnsupportedType("reference matrices exist for type A rank 2 only");
  Ring z = Ring::integers();

  GoldenA2 g;
  g.w1 = ref_w1(z);
  g.w2 = ref_w2(z);
  g.h2 = ref_h2(z);
  g.x1 = ref_x1(z);
  g.x12 = g.w2 * g.x1 * inverse(g.w2);
  g.x2 = g.w1 * g.x12 * inverse(g.w1);

  Root a1 = rs.simple_root(1), a2 = rs.simple_root(2);
  Root a12{Family::A, 2, {1, 1}};
  Mat my_x1 = x_elem(ch, z, a1, z.one()).m;
  Mat my_w1 = w_elem(ch, z, a1, z.one()).m;
  Mat my_w2 = w_elem(ch, z, a2, z.one()).m;
  Mat my_h2 = h_elem(ch, z, a2, z.from_int(-1)).m;
  // the conjugation definitions x12 = w2 x1 w2^-1 and x2 = w1 x12 w1^-1 land
  // on elementary elements whose parameter signs follow the structure
  // constants; align against those, not against parameter +1
  int c12 = c_sign(ch, a2, a1);
  int c2 = c12 * c_sign(ch, a1, a12);
  Mat my_x12 = x_elem(ch, z, a12, z.from_int(c12)).m;
  Mat my_x2 = x_elem(ch, z, a2, z.from_int(c2)).m;

  // search the sign-flip basis change: one sign per positive root, shared by
  // the opposite root so that the coroot brackets are preserved
  for (int mask = 0; mask < 8; ++mask) {
    std::array<int, 3> eps = {mask & 1 ? -1 : 1, mask & 2 ? -1 : 1,
                              mask & 4 ? -1 : 1};
    Mat d = Mat::ident(z, 8);
    for (int j = 0; j < 3; ++j) {
      d.at(2 * j, 2 * j) = z.from_int(eps[j]);
      d.at(2 * j + 1, 2 * j + 1) = z.from_int(eps[j]);
    }
    auto flipped = [&](const Mat& m) { return d * m * d; };  // d is its own inverse
    if (flipped(my_x1) == g.x1 && flipped(my_w1) == g.w1 &&
        flipped(my_w2) == g.w2 && flipped(my_h2) == g.h2 &&
        flipped(my_x12) == g.x12 && flipped(my_x2) == g.x2) {
      g.eps = eps;
      g.flip = d;
      // the reference point satisfies all four commutation conditions
      Mat i8 = Mat::ident(z, 8);
      if (!is_zero_mat(g.x1 * g.x12 - g.x12 * g.x1) ||
          !is_zero_mat(g.h2 * g.x1 * g.h2 * g.x1 - i8) ||
          !is_zero_mat(g.x1 * g.w1 * g.x1 * inverse(g.w1) - g.w1 * g.h2 * g.x1 * g.h2) ||
          !is_zero_mat(g.x2 * g.x1 - g.x12 * g.x1 * g.x2))
        throw StructuralFailure("reference matrices violate a commutation condition");
      return g;
    }
  }
  throw NoMatch("no sign flip aligns the library basis with the reference matrices");
}

}  // namespace chev
