#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chev/errors.hpp"
#include "chev/group.hpp"
#include "chev/linalg.hpp"
#include "chev/prng.hpp"

using namespace chev;

namespace {

struct Fixture {
  RootSystem rs;
  Chevalley ch;
  Fixture(Family fam, int rank)
      : rs(RootSystem::build(fam, rank)), ch(Chevalley::build(rs)) {}
};

}  // namespace

TEST_CASE("root elements are unipotent and additive in the parameter") {
  Fixture fx(Family::A, 2);
  for (const Ring& ring : {Ring::prime_field(7), Ring::integers_mod(3, 2),
                           Ring::truncated_poly(3, 2), Ring::rationals()}) {
    Prng rng(11);
    for (const Root& r : fx.rs.all_roots()) {
      RElem t = sample_element(ring, rng);
      RElem u = sample_element(ring, rng);
      GroupElement a = x_elem(fx.ch, ring, r, t);
      GroupElement b = x_elem(fx.ch, ring, r, u);
      GroupElement sum = x_elem(fx.ch, ring, r, t + u);
      CHECK(mul(a, b).m == sum.m);
      CHECK(x_elem(fx.ch, ring, r, ring.zero()).m ==
            Mat::ident(ring, fx.ch.basis_size()));
      // (x - 1)^3 = 0 because the adjoint action is 3-step nilpotent
      Mat d = a.m - Mat::ident(ring, fx.ch.basis_size());
      CHECK(is_zero_mat(d * d * d));
      CHECK(inv(fx.ch, a).m == x_elem(fx.ch, ring, r, -t).m);
    }
  }
}

TEST_CASE("weyl and torus elements satisfy the classical identities") {
  Fixture fx(Family::A, 2);
  Ring ring = Ring::integers_mod(5, 2);
  Prng rng(3);
  for (const Root& r : fx.rs.all_roots()) {
    RElem t = sample_unit(ring, rng);
    RElem u = sample_unit(ring, rng);
    GroupElement w = w_elem(fx.ch, ring, r, t);
    // w(t)^2 is the torus point at -1, independent of t
    CHECK(mul(w, w).m == h_elem(fx.ch, ring, r, ring.from_int(-1)).m);
    CHECK(mul(w, w_elem(fx.ch, ring, r, -t)).m ==
          Mat::ident(ring, fx.ch.basis_size()));
    CHECK(inv(fx.ch, w).m == w_elem(fx.ch, ring, r, -t).m);
    GroupElement ht = h_elem(fx.ch, ring, r, t);
    GroupElement hu = h_elem(fx.ch, ring, r, u);
    CHECK(mul(ht, hu).m == h_elem(fx.ch, ring, r, t * u).m);
    CHECK(inv(fx.ch, ht).m == h_elem(fx.ch, ring, r, invert(t)).m);
    // torus points are diagonal with unit entries
    for (int i = 0; i < fx.ch.basis_size(); ++i)
      for (int j = 0; j < fx.ch.basis_size(); ++j)
        if (i != j) CHECK(is_zero(ht.m.at(i, j)));
  }
}

TEST_CASE("group elements have determinant one") {
  Fixture fx(Family::A, 2);
  Ring ring = Ring::integers_mod(3, 2);
  Prng rng(5);
  Root a1 = fx.rs.simple_root(1);
  Root a2 = fx.rs.simple_root(2);
  GroupElement g = mul(x_elem(fx.ch, ring, a1, sample_element(ring, rng)),
                       w_elem(fx.ch, ring, a2, sample_unit(ring, rng)));
  g = mul(g, h_elem(fx.ch, ring, a1, sample_unit(ring, rng)));
  CHECK(is_one(det(g.m)));
  CHECK(evaluate_word(fx.ch, ring, g.word) == g.m);
  GroupElement gi = inv(fx.ch, g);
  CHECK(is_identity(gi.m * g.m));
  CHECK(evaluate_word(fx.ch, ring, gi.word) == gi.m);
}

TEST_CASE("non-unit parameters are rejected") {
  Fixture fx(Family::A, 2);
  Ring ring = Ring::integers_mod(3, 2);
  Root a1 = fx.rs.simple_root(1);
  CHECK_THROWS_AS(w_elem(fx.ch, ring, a1, ring.from_int(3)), NonUnit);
  CHECK_THROWS_AS(h_elem(fx.ch, ring, a1, ring.from_int(6)), NonUnit);
  CHECK_THROWS_AS(h_elem(fx.ch, ring, Root{Family::A, 2, {2, 0}},
                         ring.from_int(1)),
                  NotARoot);
}

TEST_CASE("conjugation by weyl elements relabels root subgroups") {
  Fixture fx(Family::A, 2);
  Ring ring = Ring::integers();
  for (const Root& a : fx.rs.all_roots())
    for (const Root& b : fx.rs.all_roots()) {
      long long c = c_sign(fx.ch, a, b);
      CHECK((c == 1 || c == -1));
      GroupElement w = w_elem(fx.ch, ring, a, ring.one());
      GroupElement x = x_elem(fx.ch, ring, b, ring.from_int(5));
      Mat lhs = w.m * x.m * inv(fx.ch, w).m;
      Root rb = fx.rs.reflect(a, b);
      CHECK(lhs == x_elem(fx.ch, ring, rb, ring.from_int(5 * c)).m);
    }
}

TEST_CASE("defining relations hold on random samples") {
  for (auto [fam, rank] : {std::pair{Family::A, 2}, {Family::D, 4}}) {
    Fixture fx(fam, rank);
    for (const Ring& ring :
         {Ring::prime_field(7), Ring::truncated_poly(3, 2)}) {
      RelationsReport rep = check_relations(fx.ch, ring, 3, 99);
      CHECK(rep.failures == 0);
      CHECK(!rep.cases.empty());
      for (const auto& c : rep.cases) CHECK(c.pass);
    }
  }
}

TEST_CASE("commutator of opposite-sign parameters lands on the sum root") {
  // spot check one commutator by hand over the integers
  Fixture fx(Family::A, 2);
  Ring ring = Ring::integers();
  Root a1 = fx.rs.simple_root(1);
  Root a2 = fx.rs.simple_root(2);
  Root sum{Family::A, 2, {1, 1}};
  long long n = fx.ch.structure_constant(a1, a2);
  GroupElement xa = x_elem(fx.ch, ring, a1, ring.from_int(2));
  GroupElement xb = x_elem(fx.ch, ring, a2, ring.from_int(3));
  Mat comm = xa.m * xb.m * inv(fx.ch, xa).m * inv(fx.ch, xb).m;
  CHECK(comm == x_elem(fx.ch, ring, sum, ring.from_int(n * 6)).m);
}
