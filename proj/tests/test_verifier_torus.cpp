#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "chev/verifier.hpp"

using namespace chev;

namespace {

Chevalley a2() { return Chevalley::build(RootSystem::build(Family::A, 2)); }

const std::vector<std::string> kFullChain = {
    "Con5 (1,6)", "Con5 (2,1)", "Con5 (2,5)", "Con5 (5,6)", "Con6 (1,1)",
    "Con6 (3,3)", "Con6 (4,4)", "Con7 (1,2)", "Con7 (4,3)", "Con7 (1,1)",
    "Con6 (7,8)", "Con7 (7,7)", "Con7 (8,8)", "Con5 (3,4)",
    "torus identification"};

// the three commutation conditions, rebuilt from public pieces so vanishing
// can be checked independently of the recovery machine
struct Cond {
  Mat c5, c6, c7;
};
Cond conditions(const Chevalley& ch, const Ring& ring, const Mat& d) {
  GoldenA2 g = golden_a2(ch);
  Mat w1 = map_ring(g.w1, ring);
  Mat w2 = map_ring(g.w2, ring);
  Mat x2 = map_ring(g.x2, ring);
  Mat w1i = inverse(w1);
  Mat w2i = inverse(w2);
  Mat dp = w1 * d * w1i;
  Mat x2t = d * x2 * dp;
  return Cond{x2t * x2 - x2 * x2t, d * dp - Mat::ident(ring, 8),
              w2 * d * w2i - d * (w1 * w2 * d * w2i * w1i)};
}

}  // namespace

TEST_CASE("torus candidate is the group torus element") {
  Chevalley ch = a2();
  Ring r = Ring::prime_field(7);
  RElem s = r.from_int(3);
  Mat d = torus_candidate(ch, r, s);
  CHECK(d == h_elem(ch, r, ch.system().simple_root(1), s).m);
  CHECK(d.at(0, 0) == r.from_int(2));  // 3^2 mod 7
  CHECK(d.at(1, 1) == r.from_int(4));  // 3^-2 mod 7
  CHECK(d.at(2, 2) == r.from_int(5));  // 3^-1 mod 7
  CHECK(d.at(6, 6) == r.one());

  Ring z25 = Ring::integers_mod(5, 2);
  CHECK_THROWS_AS(torus_candidate(ch, z25, z25.from_int(5)), NonUnit);
  Chevalley d4 = Chevalley::build(RootSystem::build(Family::D, 4));
  CHECK_THROWS_AS(torus_candidate(d4, r, s), UnsupportedType);
  CHECK_THROWS_AS(run_torus_recovery(d4, r, Mat::ident(r, 8)), UnsupportedType);
}

TEST_CASE("every unit of F7 recovers, both directions") {
  Chevalley ch = a2();
  Ring r = Ring::prime_field(7);
  for (long long u = 1; u <= 6; ++u) {
    RElem s = r.from_int(u);
    TorusReport rep = verify_torus_rigidity(ch, r, s);
    CHECK(rep.s == s);
    CHECK(rep.steps == kFullChain);
  }
}

TEST_CASE("sampled units recover over the other local kinds") {
  Chevalley ch = a2();
  for (const char* desc : {"zmod:5^2", "zmod:3^2", "tpoly:5:2", "tpoly:3:2", "zloc:7"}) {
    CAPTURE(desc);
    Ring r = Ring::parse(desc);
    Prng rng(2026);
    for (int i = 0; i < 6; ++i) {
      RElem s = sample_unit(r, rng);
      TorusReport rep = verify_torus_rigidity(ch, r, s);
      CHECK(rep.s == s);
      CHECK(rep.steps == kFullChain);
    }
  }
}

TEST_CASE("an injected off-diagonal block entry is caught at its step") {
  Chevalley ch = a2();
  Ring r = Ring::integers_mod(5, 2);
  Mat d = torus_candidate(ch, r, r.from_int(2));
  d.at(2, 3) = r.from_int(5);  // radical-valued, preconditions still hold
  try {
    run_torus_recovery(ch, r, d);
    FAIL("expected ConstraintViolated");
  } catch (const ConstraintViolated& e) {
    CHECK(e.step == "Con7 (4,3)");
  }
}

TEST_CASE("an injected Cartan deviation is caught at its step") {
  Chevalley ch = a2();
  Ring r = Ring::integers_mod(5, 2);
  SUBCASE("upper entry") {
    Mat d = torus_candidate(ch, r, r.from_int(3));
    d.at(6, 7) = r.from_int(5);
    try {
      run_torus_recovery(ch, r, d);
      FAIL("expected ConstraintViolated");
    } catch (const ConstraintViolated& e) {
      CHECK(e.step == "Con7 (7,7)");
    }
  }
  SUBCASE("lower entry") {
    Mat d = torus_candidate(ch, r, r.from_int(3));
    d.at(7, 6) = r.from_int(5);
    try {
      run_torus_recovery(ch, r, d);
      FAIL("expected ConstraintViolated");
    } catch (const ConstraintViolated& e) {
      CHECK(e.step == "Con6 (7,8)");
    }
  }
}

TEST_CASE("a candidate satisfying every condition entry is rejected at identification") {
  Chevalley ch = a2();
  SUBCASE("zmod:5^2") {
    Ring r = Ring::integers_mod(5, 2);
    Mat d = Mat::zero(r, 8, 8);
    const long long diag[6] = {16, 11, 1, 16, 1, 11};
    for (int i = 0; i < 6; ++i) d.at(i, i) = r.from_int(diag[i]);
    d.at(6, 6) = r.from_int(21);
    d.at(6, 7) = r.from_int(20);
    d.at(7, 6) = r.from_int(15);
    d.at(7, 7) = r.from_int(6);
    Cond c = conditions(ch, r, d);
    CHECK(is_zero_mat(c.c5));
    CHECK(is_zero_mat(c.c6));
    CHECK(is_zero_mat(c.c7));
    try {
      run_torus_recovery(ch, r, d);
      FAIL("expected ConstraintViolated");
    } catch (const ConstraintViolated& e) {
      CHECK(e.step == "torus identification");
    }
  }
  SUBCASE("zmod:3^2") {
    Ring r = Ring::integers_mod(3, 2);
    Mat d = Mat::ident(r, 8);
    d.at(6, 6) = r.from_int(7);
    d.at(6, 7) = r.from_int(6);
    d.at(7, 6) = r.from_int(3);
    d.at(7, 7) = r.from_int(4);
    Cond c = conditions(ch, r, d);
    CHECK(is_zero_mat(c.c5));
    CHECK(is_zero_mat(c.c6));
    CHECK(is_zero_mat(c.c7));
    try {
      run_torus_recovery(ch, r, d);
      FAIL("expected ConstraintViolated");
    } catch (const ConstraintViolated& e) {
      CHECK(e.step == "torus identification");
    }
  }
}

TEST_CASE("recovery preconditions") {
  Chevalley ch = a2();
  Ring r = Ring::integers_mod(5, 2);
  SUBCASE("entries outside the blocks must vanish") {
    Mat d = torus_candidate(ch, r, r.from_int(2));
    d.at(0, 2) = r.one();
    CHECK_THROWS_AS(run_torus_recovery(ch, r, d), PreconditionFailed);
  }
  SUBCASE("Cartan block must be the identity mod the radical") {
    Mat d = torus_candidate(ch, r, r.from_int(2));
    d.at(6, 7) = r.one();
    CHECK_THROWS_AS(run_torus_recovery(ch, r, d), PreconditionFailed);
  }
  SUBCASE("candidate must be 8x8") {
    CHECK_THROWS_AS(run_torus_recovery(ch, r, Mat::ident(r, 7)), PreconditionFailed);
  }
}
