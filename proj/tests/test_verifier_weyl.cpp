#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <utility>
#include <vector>

#include "chev/verifier.hpp"

using namespace chev;

namespace {

Mat radical_conjugator(const Ring& ring, int n, Prng& rng) {
  Mat g = Mat::ident(ring, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g.at(i, j) = g.at(i, j) + sample_radical(ring, rng);
  return g;
}

std::vector<Mat> conjugated_references(const RootSystem& rs, const Ring& ring, const Mat& g) {
  Mat gi = inverse(g);
  std::vector<Mat> cs;
  for (const Mat& w : true_cartan_reflections(rs, ring)) cs.push_back(g * w * gi);
  return cs;
}

const std::vector<std::pair<Family, int>> kFamilies = {
    {Family::A, 2}, {Family::A, 3}, {Family::D, 4}, {Family::E, 6}};

}  // namespace

TEST_CASE("reference reflections match the rank-2 fixtures") {
  RootSystem rs = RootSystem::build(Family::A, 2);
  Ring z9 = Ring::integers_mod(3, 2);
  std::vector<Mat> refs = true_cartan_reflections(rs, z9);
  CHECK(refs[0] == Mat::from_rows(z9, {{-1, 1}, {0, 1}}));
  CHECK(refs[1] == Mat::from_rows(z9, {{1, 0}, {1, -1}}));
}

TEST_CASE("cartan block of a Weyl generator is its reference reflection") {
  Ring z9 = Ring::integers_mod(3, 2);
  for (auto fr : {std::pair<Family, int>{Family::A, 2}, {Family::D, 4}, {Family::E, 6}}) {
    Chevalley ch = Chevalley::build(RootSystem::build(fr.first, fr.second));
    std::vector<Mat> refs = true_cartan_reflections(ch.system(), z9);
    for (int i = 1; i <= ch.system().rank(); ++i) {
      Mat w = w_elem(ch, z9, ch.system().simple_root(i), z9.one()).m;
      CHECK(cartan_block(ch, w) == refs[static_cast<std::size_t>(i - 1)]);
    }
  }
  Chevalley d4 = Chevalley::build(RootSystem::build(Family::D, 4));
  std::vector<Mat> refs = true_cartan_reflections(d4.system(), z9);
  CHECK(refs[0] == Mat::from_rows(z9, {{-1, 1, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}));
  CHECK(refs[1] == Mat::from_rows(z9, {{1, 0, 0, 0}, {1, -1, 1, 1}, {0, 0, 1, 0}, {0, 0, 0, 1}}));
  Mat x = x_elem(d4, z9, d4.system().simple_root(1), z9.one()).m;
  CHECK_THROWS_AS(cartan_block(d4, x), NotBlockSplit);
}

TEST_CASE("exact references normalize with the identity change") {
  Ring z25 = Ring::integers_mod(5, 2);
  for (auto fr : kFamilies) {
    RootSystem rs = RootSystem::build(fr.first, fr.second);
    Mat g = normalize_weyl_images(rs, true_cartan_reflections(rs, z25));
    CHECK(is_identity(g));
  }
}

TEST_CASE("conjugated references normalize back exactly") {
  Prng rng(2026);
  for (const char* desc : {"zmod:3^2", "zmod:5^2", "tpoly:3:2"}) {
    Ring ring = Ring::parse(desc);
    for (auto fr : kFamilies) {
      RootSystem rs = RootSystem::build(fr.first, fr.second);
      std::vector<Mat> refs = true_cartan_reflections(rs, ring);
      for (int trial = 0; trial < 3; ++trial) {
        Mat g0 = radical_conjugator(ring, rs.rank(), rng);
        std::vector<Mat> cand = conjugated_references(rs, ring, g0);
        Mat g = normalize_weyl_images(rs, cand);
        CHECK(congruent_mod_radical(g, Mat::ident(ring, rs.rank())));
        Mat gi = inverse(g);
        for (int i = 0; i < rs.rank(); ++i)
          CHECK(gi * cand[static_cast<std::size_t>(i)] * g ==
                refs[static_cast<std::size_t>(i)]);
      }
    }
  }
}

TEST_CASE("precondition violations name the candidate") {
  RootSystem rs = RootSystem::build(Family::A, 3);
  Ring z9 = Ring::integers_mod(3, 2);
  std::vector<Mat> refs = true_cartan_reflections(rs, z9);

  std::vector<Mat> bad = refs;
  bad[1].at(0, 0) = bad[1].at(0, 0) + z9.from_int(3);
  CHECK_THROWS_WITH_AS(normalize_weyl_images(rs, bad),
                       "PreconditionFailed: candidate 2 is not an involution",
                       PreconditionFailed);

  bad = refs;
  bad[0] = refs[1];  // an involution, but congruent to the wrong reflection
  CHECK_THROWS_WITH_AS(normalize_weyl_images(rs, bad),
                       "PreconditionFailed: candidate 1 is not congruent to its reference "
                       "reflection",
                       PreconditionFailed);

  bad = refs;
  Prng rng(7);
  Mat u = radical_conjugator(z9, 3, rng);
  bad[1] = u * refs[1] * inverse(u);  // the middle node braids with both neighbours
  CHECK_THROWS_WITH_AS(normalize_weyl_images(rs, bad),
                       "PreconditionFailed: candidates 2 and 3 break the braid relation",
                       PreconditionFailed);

  bad = refs;
  bad[0] = u * refs[0] * inverse(u);  // this conjugate keeps the braid but not commutation
  CHECK_THROWS_WITH_AS(normalize_weyl_images(rs, bad),
                       "PreconditionFailed: candidates 1 and 3 do not commute",
                       PreconditionFailed);

  CHECK_THROWS_AS(normalize_weyl_images(rs, {refs[0], refs[1]}), BadInput);
}
