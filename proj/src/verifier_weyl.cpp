#include <string>
#include <vector>

#include "chev/verifier.hpp"

namespace chev {

namespace {

std::string nth(int i) { return std::to_string(i); }

// Order in which the candidates are pinned.  Branch families align the three
// legs first so the center step runs against exactly-aligned neighbours;
// chains extend link by link and the far endpoint closes the run.
std::vector<int> processing_order(Family fam, int l) {
  std::vector<int> order;
  switch (fam) {
    case Family::A:
      for (int i = 1; i <= l; ++i) order.push_back(i);
      break;
    case Family::D:
      order = {l - 3, l - 1, l, l - 2};
      for (int i = l - 4; i >= 1; --i) order.push_back(i);
      break;
    case Family::E:
      order = {2, 3, 5, 4};
      for (int i = 6; i <= l; ++i) order.push_back(i);
      order.push_back(1);
      break;
  }
  return order;
}

// Find g = 1 + h with h radical-valued, g^-1 c g = t and g commuting with
// every already-aligned reflection.  Both demands are linear in h:
// c h - h t = t - c and w h - h w = 0.  The right-hand side is radical-valued
// and a radical solution exists whenever the candidates are simultaneous
// GL(J)-conjugates of the references, so the pinned solve stays in J.
Mat align_solve(const Mat& c, const Mat& t, const std::vector<Mat>& aligned) {
  const Ring& ring = c.ring;
  int l = c.rows;
  int nv = l * l;
  Mat a = Mat::zero(ring, nv * (1 + static_cast<int>(aligned.size())), nv);
  Mat b = Mat::zero(ring, a.rows, 1);
  auto var = [l](int i, int j) { return i * l + j; };
  int row = 0;
  auto emit = [&](const Mat& left, const Mat& right, bool inhomogeneous) {
    for (int r = 0; r < l; ++r)
      for (int s = 0; s < l; ++s, ++row) {
        for (int k = 0; k < l; ++k) {
          a.at(row, var(k, s)) = a.at(row, var(k, s)) + left.at(r, k);
          a.at(row, var(r, k)) = a.at(row, var(r, k)) - right.at(k, s);
        }
        if (inhomogeneous) b.at(row, 0) = right.at(r, s) - left.at(r, s);
      }
  };
  emit(c, t, true);
  for (const Mat& w : aligned) emit(w, w, false);
  Mat h = solve_unit_pivot(a, b);
  Mat g = Mat::ident(ring, l);
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) g.at(i, j) = g.at(i, j) + h.at(var(i, j), 0);
  return g;
}

// Rank-2 tail: conjugating by [[u, (1-u)/2], [0, 1]] with u the lower-left
// entry pins that entry to 1 without moving the aligned first reflection; the
// involution and braid identities force the remaining entries onto the
// reference form.  u = 1 mod J, so the shear is a unit away from failing only
// on inputs that already broke the congruence precondition.
Mat rank2_tail(const Mat& c) {
  const Ring& ring = c.ring;
  const RElem& u = c.at(1, 0);
  if (!is_unit(u)) throw PivotNotUnit("rank-2 tail shear: lower-left entry is not a unit");
  Mat t = Mat::ident(ring, 2);
  t.at(0, 0) = u;
  t.at(0, 1) = halve(ring.one() - u);
  return inverse(t);
}

// Branch-center alignment for the 4-node branch window, by the explicit
// three-shear sequence.  Every shear commutes with the three aligned leg
// reflections, and each denominator is congruent to a unit whenever the
// candidate passed the congruence precondition.  Entry names follow the
// candidate rows: a = row 1, b = row 2, c = row 3, d = row 4.
Mat branch_center(const Mat& c0) {
  const Ring& ring = c0.ring;
  RElem two = ring.from_int(2);
  Mat c = c0;
  Mat g = Mat::ident(ring, 4);
  auto shear = [&](const Mat& t) {
    Mat ti = inverse(t);
    c = t * c * ti;
    g = g * ti;
  };
  {
    // clear the (4,1) entry
    const RElem& b1 = c.at(1, 0);
    const RElem& d1 = c.at(3, 0);
    RElem den = two * d1 - b1;
    if (!is_unit(den)) throw PivotNotUnit("center shear 1: 2 d1 - b1 is not a unit");
    Mat t = Mat::ident(ring, 4);
    t.at(3, 1) = d1 * invert(den);
    t.at(3, 3) = -(b1 * invert(den));
    shear(t);
  }
  {
    // clear the (1,3) entry
    const RElem& a3 = c.at(0, 2);
    const RElem& b3 = c.at(1, 2);
    RElem den = b3 - two * a3;
    if (!is_unit(den)) throw PivotNotUnit("center shear 2: b3 - 2 a3 is not a unit");
    Mat t = Mat::ident(ring, 4);
    t.at(0, 0) = b3 * invert(den);
    t.at(0, 1) = -(a3 * invert(den));
    shear(t);
  }
  {
    // rescale row 3 so the (2,3) entry lands on 1
    const RElem& b3 = c.at(1, 2);
    if (!is_unit(b3)) throw PivotNotUnit("center shear 3: b3 is not a unit");
    Mat t = Mat::ident(ring, 4);
    t.at(2, 1) = halve(ring.one() - b3);
    t.at(2, 2) = b3;
    shear(t);
  }
  return g;
}

}  // namespace

Mat cartan_block(const Chevalley& ch, const Mat& w) {
  int n = ch.basis_size();
  int l = ch.system().rank();
  int b = n - l;  // root lines first, Cartan tail last
  if (w.rows != n || w.cols != n) throw BadInput("cartan_block: matrix is not module-sized");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if ((i >= b) != (j >= b) && !is_zero(w.at(i, j)))
        throw NotBlockSplit("mixed root/Cartan entry at (" + nth(i + 1) + "," + nth(j + 1) +
                            ")");
  Mat c = Mat::zero(w.ring, l, l);
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) c.at(i, j) = w.at(b + i, b + j);
  return c;
}

std::vector<Mat> true_cartan_reflections(const RootSystem& rs, const Ring& ring) {
  int l = rs.rank();
  const auto& cart = rs.cartan();
  std::vector<Mat> refs;
  refs.reserve(static_cast<std::size_t>(l));
  for (int i = 0; i < l; ++i) {
    Mat w = Mat::ident(ring, l);
    for (int j = 0; j < l; ++j)
      w.at(i, j) = w.at(i, j) - ring.from_int(cart[static_cast<std::size_t>(i)]
                                                  [static_cast<std::size_t>(j)]);
    refs.push_back(w);
  }
  return refs;
}

Mat normalize_weyl_images(const RootSystem& rs, const std::vector<Mat>& candidates) {
  int l = rs.rank();
  if (static_cast<int>(candidates.size()) != l)
    throw BadInput("normalize_weyl_images: need one candidate per simple root");
  const Ring& ring = candidates[0].ring;
  std::vector<Mat> refs = true_cartan_reflections(rs, ring);
  Mat id = Mat::ident(ring, l);
  for (int i = 0; i < l; ++i) {
    const Mat& c = candidates[static_cast<std::size_t>(i)];
    if (c.ring != ring)
      throw RingMismatch("normalize_weyl_images: candidates over mixed rings");
    if (c.rows != l || c.cols != l)
      throw BadInput("normalize_weyl_images: candidate " + nth(i + 1) + " has the wrong size");
    if (!(c * c == id))
      throw PreconditionFailed("candidate " + nth(i + 1) + " is not an involution");
    if (!congruent_mod_radical(c, refs[static_cast<std::size_t>(i)]))
      throw PreconditionFailed("candidate " + nth(i + 1) +
                               " is not congruent to its reference reflection");
  }
  const auto& cart = rs.cartan();
  for (int i = 0; i < l; ++i)
    for (int j = i + 1; j < l; ++j) {
      const Mat& ci = candidates[static_cast<std::size_t>(i)];
      const Mat& cj = candidates[static_cast<std::size_t>(j)];
      Mat p = ci * cj;
      if (cart[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] != 0) {
        if (!(p * p * p == id))
          throw PreconditionFailed("candidates " + nth(i + 1) + " and " + nth(j + 1) +
                                   " break the braid relation");
      } else if (!(p == cj * ci)) {
        throw PreconditionFailed("candidates " + nth(i + 1) + " and " + nth(j + 1) +
                                 " do not commute");
      }
    }

  std::vector<Mat> cur = candidates;
  std::vector<Mat> aligned;
  std::vector<int> done;
  Mat g = id;
  for (int idx : processing_order(rs.family(), l)) {
    const Mat& target = refs[static_cast<std::size_t>(idx - 1)];
    const Mat& cand = cur[static_cast<std::size_t>(idx - 1)];
    Mat step = id;
    if (l == 2 && idx == 2)
      step = rank2_tail(cand);
    else if (rs.family() == Family::D && l == 4 && idx == 2)
      step = branch_center(cand);
    else
      step = align_solve(cand, target, aligned);
    Mat stepi = inverse(step);
    for (Mat& c : cur) c = stepi * c * step;
    g = g * step;
    if (!(cur[static_cast<std::size_t>(idx - 1)] == target))
      throw StructuralFailure("alignment step for node " + nth(idx) + " missed its target");
    for (int d : done)
      if (!(cur[static_cast<std::size_t>(d - 1)] == refs[static_cast<std::size_t>(d - 1)]))
        throw StructuralFailure("alignment step for node " + nth(idx) + " disturbed node " +
                                nth(d));
    aligned.push_back(target);
    done.push_back(idx);
  }
  if (!congruent_mod_radical(g, id))
    throw StructuralFailure("normalizing change is not congruent to the identity");
  return g;
}

}  // namespace chev
