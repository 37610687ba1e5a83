#pragma once
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "chev/errors.hpp"

namespace chev {

enum class Family : char { A = 'A', D = 'D', E = 'E' };

Family family_from_char(char c);

// A root in simple-root coordinates, tagged with its system so that queries
// mixing two systems can be rejected.
struct Root {
  Family fam = Family::A;
  int rank = 0;
  std::vector<int> c;

  friend bool operator==(const Root& a, const Root& b) = default;
  bool is_positive() const {
    for (int x : c)
      if (x > 0) return true;
    return false;
  }
  Root negated() const {
    Root r = *this;
    for (int& x : r.c) x = -x;
    return r;
  }
  int height() const {
    int h = 0;
    for (int x : c) h += x;
    return h;
  }
};

std::string to_string(const Root& r);

// Simply-laced root system in Bourbaki numbering. Positive roots are ordered
// by height, ties broken by descending lexicographic coordinates, which puts
// the simple roots first in index order.
class RootSystem {
 public:
  // UnsupportedType unless (family, rank) is A_l (2<=l<=16), D_l (4<=l<=16)
  // or E_l (l in {6,7,8}).
  static RootSystem build(Family fam, int rank);

  Family family() const { return fam_; }
  int rank() const { return l_; }
  int positive_count() const { return m_; }
  int dimension() const { return l_ + 2 * m_; }  // Lie algebra dimension
  const std::vector<std::vector<int>>& cartan() const { return cartan_; }

  Root simple_root(int i) const;           // 1-based index
  const std::vector<Root>& positive_roots() const { return pos_; }
  std::vector<Root> all_roots() const;     // positives then negatives, same order

  bool is_root(const Root& r) const;       // membership (MixedSystems checked)
  int positive_index(const Root& r) const; // index into positive_roots, NotARoot otherwise

  // <beta, alpha> = 2(beta,alpha)/(alpha,alpha), all root lengths equal.
  int pairing(const Root& beta, const Root& alpha) const;
  // Reflection of beta in the hyperplane of alpha: beta - <beta,alpha> alpha.
  Root reflect(const Root& alpha, const Root& beta) const;

  // Shortest sequence i1..ir of simple-reflection indices (1-based) with
  // s_{ir}(...(s_{i1}(source))) = target, found by breadth-first search.
  std::vector<int> find_weyl_word(const Root& source, const Root& target) const;

 private:
  Family fam_;
  int l_ = 0;
  int m_ = 0;
  std::vector<std::vector<int>> cartan_;
  std::vector<Root> pos_;
  std::map<std::vector<int>, int> pos_index_;

  void check_member(const Root& r, const char* who) const;  // MixedSystems/NotARoot
  void check_system(const Root& r, const char* who) const;  // MixedSystems only
};

}  // namespace chev
