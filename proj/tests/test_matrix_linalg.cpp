#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chev/linalg.hpp"
#include "chev/matrix.hpp"

using namespace chev;

namespace {

Mat random_mat(const Ring& r, int n, Prng& rng) {
  Mat m = Mat::zero(r, n, n);
  for (auto& e : m.a) e = sample_element(r, rng);
  return m;
}

// I + (radical-valued) noise: always invertible over a local ring.
Mat random_congruent_identity(const Ring& r, int n, Prng& rng) {
  Mat m = Mat::ident(r, n);
  for (auto& e : m.a) e = e + sample_radical(r, rng);
  return m;
}

std::vector<Ring> local_rings() {
  return {Ring::prime_field(7), Ring::integers_mod(3, 2), Ring::truncated_poly(3, 2),
          Ring::localized_integers(5)};
}

}  // namespace

TEST_CASE("product kernels agree with the generic path") {
  Prng rng(31);
  for (const Ring& r : {Ring::prime_field(7), Ring::integers_mod(5, 2), Ring::truncated_poly(3, 3)}) {
    CAPTURE(r.descriptor());
    for (int rep = 0; rep < 10; ++rep) {
      Mat x = random_mat(r, 6, rng), y = random_mat(r, 6, rng);
      Mat fast = x * y;
      Mat slow = Mat::zero(r, 6, 6);
      for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
          for (int k = 0; k < 6; ++k) slow.at(i, j) = slow.at(i, j) + x.at(i, k) * y.at(k, j);
      CHECK(fast == slow);
    }
  }
}

TEST_CASE("matrix ring identities") {
  Prng rng(37);
  Ring r = Ring::integers_mod(3, 2);
  Mat x = random_mat(r, 5, rng), y = random_mat(r, 5, rng), z = random_mat(r, 5, rng);
  CHECK((x * y) * z == x * (y * z));
  CHECK(x * (y + z) == x * y + x * z);
  CHECK(x * Mat::ident(r, 5) == x);
  CHECK(transpose(transpose(x)) == x);
  CHECK(transpose(x * y) == transpose(y) * transpose(x));
}

TEST_CASE("inverse over local rings and fields") {
  Prng rng(41);
  for (const Ring& r : local_rings()) {
    CAPTURE(r.descriptor());
    for (int rep = 0; rep < 10; ++rep) {
      Mat g = random_congruent_identity(r, 6, rng);
      Mat gi = inverse(g);
      CHECK(is_identity(g * gi));
      CHECK(is_identity(gi * g));
    }
  }
  Ring z = Ring::integers();
  Mat u = Mat::from_rows(z, {{2, 3}, {3, 5}});  // det 1, no unit entry anywhere
  CHECK(is_identity(u * inverse(u)));
  Mat sing = Mat::from_rows(z, {{1, 2}, {2, 4}});
  CHECK_THROWS_AS(inverse(sing), StructuralFailure);
}

TEST_CASE("solve with unit pivots returns exact solutions") {
  Prng rng(43);
  for (const Ring& r : local_rings()) {
    CAPTURE(r.descriptor());
    for (int rep = 0; rep < 10; ++rep) {
      Mat a = random_congruent_identity(r, 6, rng);
      Mat x = random_mat(r, 6, rng);
      Mat b = a * x;
      Mat got = solve_unit_pivot(a, b);
      CHECK(a * got == b);
    }
  }
}

TEST_CASE("solve keeps radical-valued systems radical-valued") {
  // If a solution with all entries in J exists, the free-variables-to-zero
  // policy returns one: row operations with unit pivots preserve J-valued
  // right-hand sides.
  Prng rng(47);
  for (const Ring& r :
       {Ring::integers_mod(3, 2), Ring::integers_mod(5, 2),
        Ring::truncated_poly(3, 2)})
  for (int rep = 0; rep < 20; ++rep) {
    Mat a = Mat::zero(r, 4, 6);
    for (auto& e : a.a) e = sample_element(r, rng);
    Mat xj = Mat::zero(r, 6, 1);
    for (auto& e : xj.a) e = sample_radical(r, rng);
    Mat b = a * xj;
    Mat got = solve_unit_pivot(a, b);
    CHECK(a * got == b);
    for (const auto& e : got.a) CHECK(in_radical(e));
  }
}

TEST_CASE("underdetermined systems without unit pivots fail loudly") {
  Ring r = Ring::integers_mod(3, 2);
  // 3x = 1 has no solution and no unit pivot
  Mat a = Mat::from_rows(r, {{3}});
  Mat b = Mat::from_rows(r, {{1}});
  CHECK_THROWS_AS(solve_unit_pivot(a, b), StructuralFailure);
  // 3x = 3 does have solutions, but none reachable by unit pivoting; the
  // routine refuses rather than guessing.
  Mat b2 = Mat::from_rows(r, {{3}});
  CHECK_THROWS_AS(solve_unit_pivot(a, b2), StructuralFailure);
}

TEST_CASE("determinants") {
  Ring z = Ring::integers();
  Mat m = Mat::from_rows(z, {{2, 0, 1}, {1, 1, 0}, {0, 3, 1}});
  CHECK(bareiss_det_int(m) == 5);
  Mat perm = Mat::from_rows(z, {{0, 1}, {1, 0}});
  CHECK(bareiss_det_int(perm) == -1);

  Prng rng(53);
  for (const Ring& r : local_rings()) {
    CAPTURE(r.descriptor());
    Mat g = random_congruent_identity(r, 5, rng);
    CHECK(is_unit(det(g)));
    CHECK(det(Mat::ident(r, 5)) == r.one());
  }
}

TEST_CASE("rank over the residue field") {
  Ring f3 = Ring::prime_field(3);
  Mat m = Mat::from_rows(f3, {{1, 2, 0}, {2, 4, 0}, {0, 0, 1}});
  CHECK(rank_field(m) == 2);
  CHECK(pivot_columns_field(m) == std::vector<int>{0, 2});
}

TEST_CASE("congruence mod radical") {
  Ring r = Ring::integers_mod(3, 2);
  Mat a = Mat::ident(r, 3);
  Mat b = a;
  b.at(0, 1) = r.from_int(3);
  CHECK(congruent_mod_radical(a, b));
  b.at(0, 1) = r.from_int(1);
  CHECK_FALSE(congruent_mod_radical(a, b));
  CHECK_THROWS_AS(congruent_mod_radical(Mat::ident(Ring::integers(), 2),
                                        Mat::ident(Ring::integers(), 2)),
                  NotLocal);
}
