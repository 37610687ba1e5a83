#pragma once
// Verification toolkit for the rigidity arguments: involution splitting over
// local rings, normalization of Weyl-element images, the rank-2 linear
// rigidity system, torus rigidity, and matrix-unit generation.
#include <array>
#include <optional>
#include <string>
#include <vector>

#include "chev/affine_form.hpp"
#include "chev/group.hpp"
#include "chev/linalg.hpp"

namespace chev {

// ---------------------------------------------------------------------------
// Reference 8x8 integer matrices for the rank-2 system in type A.  The
// printed-source convention differs from the library's structure-constant
// convention by a per-root sign flip x_a -> eps_a x_a with eps_a eps_{-a} = 1;
// golden_a2 finds the flip, applies it, and cross-checks every matrix.
struct GoldenA2 {
  Mat w1, w2, h2, x1, x12, x2;  // over the integers, reference basis
  std::array<int, 3> eps;       // sign per positive root (a1, a2, a1+a2)
  Mat flip;                     // diag extension of eps to the 8-dim module
};
GoldenA2 golden_a2(const Chevalley& ch);

// ---------------------------------------------------------------------------
// Involution splitting: for a^2 = I over a local ring with 1/2, the module
// splits as the +1 and -1 eigenspaces of a, with free complementary bases.
struct SplitDecomposition {
  Mat v0, v1;  // column bases: a v = +v on v0, a v = -v on v1
  int r0 = 0, r1 = 0;
};
SplitDecomposition split_involution(const Mat& a);
// split ranks equal the eigenvalue multiplicities of the residue of a, and
// the residues of the bases span the residue eigenspaces
bool rank_match_residue(const Mat& a);

// ---------------------------------------------------------------------------
// Weyl-image normalization on the Cartan block.
Mat cartan_block(const Chevalley& ch, const Mat& w);
// the reference forms: row i of the Cartan matrix subtracted from the i-th
// identity row
std::vector<Mat> true_cartan_reflections(const RootSystem& rs, const Ring& ring);
// Given candidates c_i = g0 wt_i g0^-1 with g0 = I mod J, find g = I mod J
// with g^-1 c_i g = wt_i for every i.
Mat normalize_weyl_images(const RootSystem& rs, const std::vector<Mat>& candidates);

// ---------------------------------------------------------------------------
// The 27-variable rigidity system extracted from the four commutation
// conditions at their labeled matrix positions.
struct LinearSystem27 {
  Mat coeffs;                       // 27x27 over the integers
  std::vector<std::string> labels;  // row labels "Con<k> (i,j)"
  cpp_int det;                      // plus/minus a power of 2: a unit wherever 2 is
};
LinearSystem27 build_con_system(const Chevalley& ch);
// determinant is a unit in the ring and the homogeneous system only has the
// zero solution
void check_con_system_over(const LinearSystem27& sys, const Ring& ring);

// ---------------------------------------------------------------------------
// Torus rigidity: a block-diagonal element commuting suitably with the Weyl
// images is a torus point h_{a1}(s); the recovery replays each deduction.
struct TorusReport {
  RElem s;                          // recovered parameter
  std::vector<std::string> steps;   // executed deduction labels
};
TorusReport run_torus_recovery(const Chevalley& ch, const Ring& ring, const Mat& candidate);
TorusReport verify_torus_rigidity(const Chevalley& ch, const Ring& ring, const RElem& s);
// the candidate matrix h_{a1}(s) restricted to the reference basis
Mat torus_candidate(const Chevalley& ch, const Ring& ring, const RElem& s);

// ---------------------------------------------------------------------------
// Matrix-unit generation: the span closure of the group inside the full
// matrix ring.
struct ClosureResult {
  int n = 0;         // matrix size
  int dim = 0;       // dimension of the unital span closure
  int words = 0;     // number of witness words retained
  // witness word for basis row i: product of generators, encoded as indices
  // into the generator list; row 0 is the identity (empty word)
  std::vector<std::vector<int>> witness;
};
// generator selection for closure runs; Full is the documented set
enum class GeneratorSet : uint8_t { Full, DiagonalOnly };
ClosureResult generate_matrix_units(const Chevalley& ch, const Ring& ring,
                                    GeneratorSet gens = GeneratorSet::Full);
bool subring_equality_check(const Chevalley& ch, const Ring& ring);

// Scripted rank-2 matrix-unit derivation: replays the explicit product
// identities that manufacture all 64 matrix units from the group generators,
// logging the unit scalar realized at each step.
struct UnitScriptStep {
  std::string label;
  RElem scalar;  // realized unit multiplier
};
struct UnitScriptReport {
  std::vector<UnitScriptStep> steps;
  bool complete = false;  // all 64 units realized
};
UnitScriptReport scripted_a2_matrix_units(const Chevalley& ch, const Ring& ring);

}  // namespace chev
