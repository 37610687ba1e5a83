#include "chev/verifier.hpp"

namespace chev {

namespace {

// Columns whose residues pivot the residue column space.  For the image of an
// idempotent over a local ring those columns are a free basis: unit pivots in
// the residue lift to an invertible minor.
Mat pivot_column_basis(const Mat& m) {
  std::vector<int> cols = pivot_columns_field(residue_mat(m));
  Mat b = Mat::zero(m.ring, m.rows, static_cast<int>(cols.size()));
  for (int j = 0; j < b.cols; ++j)
    for (int i = 0; i < m.rows; ++i) b.at(i, j) = m.at(i, cols[static_cast<std::size_t>(j)]);
  return b;
}

}  // namespace

SplitDecomposition split_involution(const Mat& a) {
  if (a.rows != a.cols) throw BadInput("split_involution needs a square matrix");
  if (!a.ring.is_local())
    throw NotLocal("involution splitting needs a local kind, got " + a.ring.descriptor());
  Mat id = Mat::ident(a.ring, a.rows);
  if (!(a * a == id)) throw NotInvolution("matrix does not square to the identity");
  // e = (1+a)/2 is idempotent, a e = e, a (1-e) = -(1-e); the module splits as
  // the images of the two complementary projectors.
  Mat e = a + id;
  for (RElem& x : e.a) x = halve(x);
  SplitDecomposition s;
  s.v0 = pivot_column_basis(e);
  s.v1 = pivot_column_basis(id - e);
  s.r0 = s.v0.cols;
  s.r1 = s.v1.cols;
  if (s.r0 + s.r1 != a.rows)
    throw StructuralFailure("split_involution: eigenbasis ranks do not fill the module");
  if (!(a * s.v0 == s.v0) || !(a * s.v1 == -s.v1))
    throw StructuralFailure("split_involution: extracted bases not fixed/negated");
  return s;
}

bool rank_match_residue(const Mat& a) {
  SplitDecomposition s = split_involution(a);
  Mat ar = residue_mat(a);
  Mat idr = Mat::ident(ar.ring, ar.rows);
  int mult_plus = ar.rows - rank_field(ar - idr);
  int mult_minus = ar.rows - rank_field(ar + idr);
  // the basis residues always lie inside the residue eigenspaces, so matching
  // multiplicities plus independence mod the radical means they span them
  return s.r0 == mult_plus && s.r1 == mult_minus &&
         rank_field(residue_mat(s.v0)) == s.r0 && rank_field(residue_mat(s.v1)) == s.r1;
}

}  // namespace chev
