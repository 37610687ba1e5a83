#include <array>
#include <string>
#include <vector>

#include "chev/verifier.hpp"

namespace chev {
namespace {

// Block layout of an admissible candidate: 2x2 blocks down the diagonal over
// the line pairs (x_a1, x_-a1), (x_a2, x_-a2), (x_{a1+a2}, x_{-a1-a2}) and the
// Cartan plane, entries named row-major within each block.
struct Blocks {
  RElem k1, k2, k3, k4;  // lines 1,2
  RElem l1, l2, l3, l4;  // lines 3,4
  RElem m1, m2, m3, m4;  // lines 5,6
  RElem n1, n2, n3, n4;  // lines 7,8 (Cartan)
};

Blocks read_blocks(const Mat& d) {
  return Blocks{d.at(0, 0), d.at(0, 1), d.at(1, 0), d.at(1, 1),
                d.at(2, 2), d.at(2, 3), d.at(3, 2), d.at(3, 3),
                d.at(4, 4), d.at(4, 5), d.at(5, 4), d.at(5, 5),
                d.at(6, 6), d.at(6, 7), d.at(7, 6), d.at(7, 7)};
}

// The three commutation conditions a torus image must satisfy, in the
// reference basis: d inverted by its w1-conjugate, the transported x2 line
// commuting with x2, and compatibility of the two Weyl conjugations.
struct TorusConditions {
  Mat c5, c6, c7;
};

TorusConditions make_conditions(const GoldenA2& g, const Ring& ring, const Mat& d) {
  Mat w1 = map_ring(g.w1, ring);
  Mat w2 = map_ring(g.w2, ring);
  Mat x2 = map_ring(g.x2, ring);
  Mat w1i = inverse(w1);
  Mat w2i = inverse(w2);
  Mat dp = w1 * d * w1i;
  Mat x2t = d * x2 * dp;  // transported x2 line; dp plays the inverse of d
  TorusConditions con;
  con.c5 = x2t * x2 - x2 * x2t;
  con.c6 = d * dp - Mat::ident(ring, 8);
  con.c7 = w2 * d * w2i - d * (w1 * w2 * d * w2i * w1i);
  return con;
}

}  // namespace

Mat torus_candidate(const Chevalley& ch, const Ring& ring, const RElem& s) {
  const RootSystem& rs = ch.system();
  if (rs.family() != Family::A || rs.rank() != 2)
    throw UnsupportedType("torus recovery is a rank-2 type A construction");
  if (!is_unit(s)) throw NonUnit("torus parameter must be a unit: " + to_string(s));
  // action on the line of x_b is s^<b,a1>; Cartan lines are fixed
  std::array<long long, 8> e = {2, -2, -1, 1, 1, -1, 0, 0};
  Mat d = Mat::ident(ring, 8);
  for (int i = 0; i < 8; ++i) d.at(i, i) = pow_elem(s, e[static_cast<std::size_t>(i)]);
  return d;
}

TorusReport run_torus_recovery(const Chevalley& ch, const Ring& ring, const Mat& candidate) {
  GoldenA2 g = golden_a2(ch);  // also rejects systems other than rank-2 type A
  if (candidate.rows != 8 || candidate.cols != 8)
    throw PreconditionFailed("torus recovery expects an 8x8 candidate");
  if (candidate.ring != ring)
    throw RingMismatch("candidate ring differs from the requested ring");
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      if (i / 2 != j / 2 && !is_zero(candidate.at(i, j)))
        throw PreconditionFailed("candidate is not 2x2 block diagonal at (" +
                                 std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
  const Blocks b = read_blocks(candidate);
  const RElem one = ring.one();
  if (!in_radical(b.n1 - one) || !in_radical(b.n2) || !in_radical(b.n3) ||
      !in_radical(b.n4 - one))
    throw PreconditionFailed("Cartan block is not the identity mod the radical");

  const TorusConditions con = make_conditions(g, ring, candidate);
  TorusReport rep;

  // One deduction step: the cited condition entry must vanish on the
  // candidate, the hypothesis must be a unit, and the relation that the two
  // facts force must then hold on the candidate's entries.
  auto step = [&](int cond, int i, int j, const RElem& hyp, bool relation_holds,
                  const char* relation) {
    std::string label = "Con" + std::to_string(cond) + " (" + std::to_string(i) + "," +
                        std::to_string(j) + ")";
    const Mat& c = cond == 5 ? con.c5 : cond == 6 ? con.c6 : con.c7;
    const RElem& e = c.at(i - 1, j - 1);
    if (!is_zero(e))
      throw ConstraintViolated(label, "cited entry does not vanish: " + to_string(e));
    if (!is_unit(hyp))
      throw ConstraintViolated(label, "unit hypothesis fails: " + to_string(hyp));
    if (!relation_holds)
      throw ConstraintViolated(label, std::string("deduced relation fails: ") + relation);
    rep.steps.push_back(label);
  };

  // Root blocks: the entries factor as -k1(k2+k3), -k4(l3-m3), l3(l1+m4) and
  // k2(l4+m1) once the earlier relations are in force, so each unit
  // hypothesis clears one off-diagonal pair.
  step(5, 1, 6, b.k1, b.k3 == -b.k2, "k3 = -k2");
  step(5, 2, 1, b.k4, b.m3 == b.l3, "m3 = l3");
  step(5, 2, 5, b.l1 + b.m4, is_zero(b.l3) && is_zero(b.m3), "l3 = m3 = 0");
  step(5, 5, 6, b.l4 + b.m1, is_zero(b.k2) && is_zero(b.k3), "k2 = k3 = 0");
  // with the off-diagonals gone, the diagonal entries pair into units
  step(6, 1, 1, one, b.k1 * b.k4 == one, "k1 k4 = 1");
  step(6, 3, 3, one, b.l1 * b.m1 == one, "l1 m1 = 1");
  step(6, 4, 4, one, b.l4 * b.m4 == one, "l4 m4 = 1");
  step(7, 1, 2, one, is_zero(b.m2), "m2 = 0");
  step(7, 4, 3, one, is_zero(b.l2), "l2 = 0");
  step(7, 1, 1, one, b.m1 == b.k1 * b.m4 && b.l4 == b.k1 * b.l1, "l4 = k1 l1");
  // Cartan block: n1+n2 is a unit (the block is the identity mod the
  // radical), and the two factored entries force the linear relations
  step(6, 7, 8, b.n1 + b.n2, b.n1 == b.n3 + b.n4, "n1 = n3 + n4");
  step(7, 7, 7, b.n1 + b.n2, b.n2 == b.n3 + b.n4 - one, "n2 = n3 + n4 - 1");
  // The linear steps exhaust what the conditions force on the Cartan block:
  // past them, every remaining entry of all three conditions is an integer
  // multiple of the single quadratic n3^2 - n4^2 - n3 + 1, except the (3,4)
  // entry of the first, which only ties k1 l1^2 to the surviving deviations.
  // The two deviations are therefore cut by one equation, and a non-torus
  // candidate can satisfy every condition entry (over zmod:5^2 take the
  // blocks diag(16,11), diag(1,16), diag(1,11), [[21,20],[15,6]]). The two
  // checks below are still necessary conditions; the exact identification at
  // the end is what rejects such candidates.
  step(7, 8, 8, one, true, "");
  step(5, 3, 4, one, true, "");

  rep.s = invert(b.l1);  // the x_{a2} line carries s^-1
  Mat h = torus_candidate(ch, ring, rep.s);
  if (!(candidate == h))
    throw ConstraintViolated("torus identification",
                             "all cited conditions hold but the candidate is not the torus "
                             "point with parameter " +
                                 to_string(rep.s));
  rep.steps.push_back("torus identification");
  return rep;
}

TorusReport verify_torus_rigidity(const Chevalley& ch, const Ring& ring, const RElem& s) {
  GoldenA2 g = golden_a2(ch);
  Mat d = torus_candidate(ch, ring, s);
  // the candidate is the honest group element (diagonal, so unaffected by the
  // reference-basis sign flip)
  if (!(d == h_elem(ch, ring, ch.system().simple_root(1), s).m))
    throw StructuralFailure("torus candidate disagrees with the group torus element");
  // necessity: the torus point satisfies all three conditions identically
  TorusConditions con = make_conditions(g, ring, d);
  if (!is_zero_mat(con.c5) || !is_zero_mat(con.c6) || !is_zero_mat(con.c7))
    throw StructuralFailure("torus point violates a commutation condition");
  // sufficiency direction: the recovery walks back to the same parameter
  TorusReport rep = run_torus_recovery(ch, ring, d);
  if (!(rep.s == s)) throw StructuralFailure("recovered parameter differs from the input");
  return rep;
}

}  // namespace chev
