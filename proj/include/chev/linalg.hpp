#pragma once
#include "chev/matrix.hpp"

namespace chev {

// Gauss-Jordan solve of A·X = B over a ring whose invertible matrices always
// admit unit pivots (every matrix handled here is congruent to an invertible
// integer matrix mod the radical). Columns that never see a unit pivot become
// free variables pinned to 0; the pinned candidate is then checked against
// the original system and StructuralFailure is raised if it does not satisfy
// it. Because row operations keep radical-valued right-hand sides
// radical-valued, a system that admits a solution with all entries in J gets
// one back from this routine.
Mat solve_unit_pivot(const Mat& a, const Mat& b);

// Square inverse. Fields pivot on any nonzero entry; other kinds require unit
// pivots; Int goes through the rationals and checks integrality.
Mat inverse(const Mat& a);

// Exact determinant: Bareiss over Int, Gaussian elimination elsewhere
// (unit pivots for the non-field local kinds; StructuralFailure if stuck).
RElem det(const Mat& a);

// Row reduction over a field kind (Fp or Rat): returns rank; optionally the
// pivot column indices in order.
int rank_field(const Mat& a);
std::vector<int> pivot_columns_field(const Mat& a);

cpp_int bareiss_det_int(const Mat& a);

}  // namespace chev
