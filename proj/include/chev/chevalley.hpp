#pragma once
#include <array>
#include <vector>

#include "chev/matrix.hpp"
#include "chev/root_system.hpp"

namespace chev {

// Sparse integer matrix as (row, col, value) triples; value is small.
struct SparseInt {
  int n = 0;
  struct Entry {
    int r, c;
    long long v;
  };
  std::vector<Entry> e;
};

// The Chevalley basis of the simple Lie algebra of a simply-laced system:
// ordering v_{2j} = x_{beta_j}, v_{2j+1} = x_{-beta_j} over the j-th positive
// root (0-based), then the Cartan elements h_1..h_l. Structure constants are
// fixed by N = +1 on extraspecial pairs; every other sign is forced from
// those by Jacobi-type recursions and the antisymmetry/negation symmetries.
class Chevalley {
 public:
  static Chevalley build(RootSystem rs);

  const RootSystem& system() const { return rs_; }
  int basis_size() const { return n_; }

  // Signed root index: s < m is positive_roots()[s], s >= m is its negative.
  int signed_index(const Root& r) const;
  Root signed_root(int s) const;

  // N_{a,b}; 0 when a+b is not a root. MixedSystems/NotARoot on bad input.
  int structure_constant(const Root& a, const Root& b) const;

  int line_of_root(const Root& r) const;  // basis line of x_r
  int line_of_cartan(int i) const;        // 1-based Cartan index
  bool is_root_line(int b) const { return b < 2 * m_; }
  Root root_of_line(int b) const;
  // Weight of a basis line: the root for x-lines, the zero vector for h-lines.
  std::vector<int> weight_of_line(int b) const;

  // [v_a, v_b] as a sparse integer combination of basis elements.
  std::vector<std::pair<int, long long>> bracket(int a, int b) const;

  const SparseInt& ad_sparse(const Root& r) const;        // ad x_r
  const SparseInt& ad2_half_sparse(const Root& r) const;  // (ad x_r)^2 / 2
  SparseInt ad_of_basis(int b) const;                     // ad of any basis element
  Mat ad_matrix(const Root& r) const;                     // dense, integer ring

  long long killing_form(int a, int b) const;  // tr(ad v_a ad v_b)

 private:
  RootSystem rs_;
  int m_ = 0, n_ = 0;
  std::vector<int8_t> nsigned_;           // (2m)^2 table of N over signed roots
  std::vector<SparseInt> ad_, ad2half_;   // per signed root

  int sum_signed(int s1, int s2) const;   // signed index of r(s1)+r(s2), -1 if not a root, -2 if zero
  void build_constants();
  void build_ad_tables();
};

}  // namespace chev
