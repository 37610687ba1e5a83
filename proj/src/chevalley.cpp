#include "chev/chevalley.hpp"

#include <map>

namespace chev {

namespace {

std::vector<int> add_coords(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

std::vector<int> sub_coords(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
  return c;
}

bool all_zero(const std::vector<int>& a) {
  for (int x : a)
    if (x) return false;
  return true;
}

}  // namespace

Chevalley Chevalley::build(RootSystem rs) {
  Chevalley ch;
  ch.rs_ = std::move(rs);
  ch.m_ = ch.rs_.positive_count();
  ch.n_ = ch.rs_.dimension();
  ch.build_constants();
  ch.build_ad_tables();
  return ch;
}

int Chevalley::signed_index(const Root& r) const {
  if (r.is_positive()) return rs_.positive_index(r);
  return m_ + rs_.positive_index(r.negated());
}

Root Chevalley::signed_root(int s) const {
  return s < m_ ? rs_.positive_roots()[s] : rs_.positive_roots()[s - m_].negated();
}

int Chevalley::sum_signed(int s1, int s2) const {
  std::vector<int> c = add_coords(signed_root(s1).c, signed_root(s2).c);
  if (all_zero(c)) return -2;
  Root r{rs_.family(), rs_.rank(), std::move(c)};
  if (!rs_.is_root(r)) return -1;
  return signed_index(r);
}

void Chevalley::build_constants() {
  const int m = m_;
  const auto& pos = rs_.positive_roots();
  auto pos_idx = [&](const std::vector<int>& c) -> int {
    Root r{rs_.family(), rs_.rank(), c};
    for (int x : c)
      if (x < 0) return -1;
    if (!rs_.is_root(r)) return -1;
    return rs_.positive_index(r);
  };

  // Signs over pairs of positive roots, by increasing height of the sum.
  // The first special pair (minimal first index) of each composite root is
  // the extraspecial one and gets +1; the remaining pairs follow from the
  // Jacobi identity applied to (extraspecial pair, negated summand), which
  // leaves exactly one of two lower-height products nonzero.
  std::vector<int8_t> npp(static_cast<std::size_t>(m) * m, 0);
  auto NP = [&](int a, int b) -> int8_t& { return npp[static_cast<std::size_t>(a) * m + b]; };
  for (int g = 0; g < m; ++g) {
    if (pos[g].height() < 2) continue;
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < m; ++a) {
      int b = pos_idx(sub_coords(pos[g].c, pos[a].c));
      if (b >= 0 && a < b) pairs.emplace_back(a, b);
    }
    if (pairs.empty())
      throw StructuralFailure("composite root with no summing pair: " + to_string(pos[g]));
    const int ea = pairs[0].first;  // extraspecial: minimal first component
    NP(pairs[0].first, pairs[0].second) = 1;
    NP(pairs[0].second, pairs[0].first) = -1;
    for (std::size_t t = 1; t < pairs.size(); ++t) {
      auto [a, b] = pairs[t];
      int t2 = 0, t3 = 0;
      int d = pos_idx(sub_coords(pos[b].c, pos[ea].c));  // beta - eps
      if (d >= 0) t2 = NP(d, a) * NP(d, ea);
      int f = pos_idx(sub_coords(pos[a].c, pos[ea].c));  // alpha - eps
      if (f >= 0) t3 = NP(f, ea) * NP(b, f);
      int nval = t2 + t3;
      if ((t2 != 0) == (t3 != 0) || (nval != 1 && nval != -1))
        throw StructuralFailure("structure constant recursion degenerated at " +
                                to_string(pos[g]));
      NP(a, b) = static_cast<int8_t>(nval);
      NP(b, a) = static_cast<int8_t>(-nval);
    }
  }

  // Extend to all signed pairs via N(-a,-b) = -N(a,b) and, for mixed signs
  // with a - b a root: N(a,-b) = N(a-b, b) when a-b > 0, N(b-a, a) otherwise.
  nsigned_.assign(static_cast<std::size_t>(2 * m) * (2 * m), 0);
  auto NS = [&](int s1, int s2) -> int8_t& {
    return nsigned_[static_cast<std::size_t>(s1) * (2 * m) + s2];
  };
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      if (NP(a, b) == 0) continue;
      NS(a, b) = NP(a, b);
      NS(m + a, m + b) = -NP(a, b);
    }
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      if (a == b) continue;
      int d = pos_idx(sub_coords(pos[a].c, pos[b].c));
      int8_t nval = 0;
      if (d >= 0)
        nval = NP(d, b);
      else {
        int d2 = pos_idx(sub_coords(pos[b].c, pos[a].c));
        if (d2 < 0) continue;  // a - b is not a root
        nval = NP(d2, a);
      }
      NS(a, m + b) = nval;
      NS(m + b, a) = -nval;
    }
}

int Chevalley::structure_constant(const Root& a, const Root& b) const {
  if (!rs_.is_root(a)) throw NotARoot("structure_constant: " + to_string(a));
  if (!rs_.is_root(b)) throw NotARoot("structure_constant: " + to_string(b));
  return nsigned_[static_cast<std::size_t>(signed_index(a)) * (2 * m_) + signed_index(b)];
}

int Chevalley::line_of_root(const Root& r) const {
  int s = signed_index(r);
  return s < m_ ? 2 * s : 2 * (s - m_) + 1;
}

int Chevalley::line_of_cartan(int i) const {
  if (i < 1 || i > rs_.rank()) throw NotARoot("Cartan index " + std::to_string(i));
  return 2 * m_ + (i - 1);
}

Root Chevalley::root_of_line(int b) const {
  if (!is_root_line(b)) throw PositionOutOfRange("line " + std::to_string(b) + " is a Cartan line");
  int j = b / 2;
  return b % 2 == 0 ? rs_.positive_roots()[j] : rs_.positive_roots()[j].negated();
}

std::vector<int> Chevalley::weight_of_line(int b) const {
  if (is_root_line(b)) return root_of_line(b).c;
  return std::vector<int>(rs_.rank(), 0);
}

std::vector<std::pair<int, long long>> Chevalley::bracket(int a, int b) const {
  if (a < 0 || a >= n_ || b < 0 || b >= n_)
    throw PositionOutOfRange("bracket(" + std::to_string(a) + "," + std::to_string(b) + ")");
  bool ra = is_root_line(a), rb = is_root_line(b);
  std::vector<std::pair<int, long long>> out;
  if (!ra && !rb) return out;  // Cartan is abelian
  if (!ra && rb) {
    int i = a - 2 * m_ + 1;
    Root beta = root_of_line(b);
    int c = rs_.pairing(beta, rs_.simple_root(i));
    if (c) out.emplace_back(b, c);
    return out;
  }
  if (ra && !rb) {
    auto rev = bracket(b, a);
    for (auto& [idx, v] : rev) out.emplace_back(idx, -v);
    return out;
  }
  Root x = root_of_line(a), y = root_of_line(b);
  int s1 = signed_index(x), s2 = signed_index(y);
  int sum = sum_signed(s1, s2);
  if (sum == -2) {
    // [x_beta, x_-beta] = h_beta, whose Cartan coordinates are the root
    // coordinates (coroot = root in the simply-laced case); negated root
    // pairs contribute the negative.
    Root p = x.is_positive() ? x : y;
    int sgn = x.is_positive() ? 1 : -1;
    for (int i = 0; i < rs_.rank(); ++i)
      if (p.c[i]) out.emplace_back(2 * m_ + i, sgn * p.c[i]);
    return out;
  }
  if (sum == -1) return out;
  int nval = nsigned_[static_cast<std::size_t>(s1) * (2 * m_) + s2];
  if (nval == 0)
    throw StructuralFailure("missing structure constant for " + to_string(x) + "," + to_string(y));
  Root z{rs_.family(), rs_.rank(), add_coords(x.c, y.c)};
  out.emplace_back(line_of_root(z), nval);
  return out;
}

void Chevalley::build_ad_tables() {
  ad_.resize(2 * m_);
  ad2half_.resize(2 * m_);
  for (int s = 0; s < 2 * m_; ++s) {
    SparseInt a;
    a.n = n_;
    int line_s = s < m_ ? 2 * s : 2 * (s - m_) + 1;
    for (int col = 0; col < n_; ++col)
      for (auto& [row, v] : bracket(line_s, col)) a.e.push_back({row, col, v});
    // square, then halve; entries of the square are even by the string
    // structure (the only surviving path is x_{-r} -> h_r -> x_r with value -2)
    std::map<std::pair<int, int>, long long> sq;
    std::map<int, std::vector<std::pair<int, long long>>> by_col;
    for (auto& en : a.e) by_col[en.c].push_back({en.r, en.v});
    for (auto& en : a.e) {
      auto it = by_col.find(en.r);
      if (it == by_col.end()) continue;
      for (auto& [row2, v2] : it->second) sq[{row2, en.c}] += v2 * en.v;
    }
    SparseInt h;
    h.n = n_;
    for (auto& [rc, v] : sq) {
      if (v == 0) continue;
      if (v % 2 != 0)
        throw NonIntegralDividedPower("odd entry in (ad x)^2 at line " + std::to_string(rc.first));
      h.e.push_back({rc.first, rc.second, v / 2});
    }
    ad_[s] = std::move(a);
    ad2half_[s] = std::move(h);
  }
}

const SparseInt& Chevalley::ad_sparse(const Root& r) const {
  if (!rs_.is_root(r)) throw NotARoot("ad_sparse: " + to_string(r));
  return ad_[signed_index(r)];
}

const SparseInt& Chevalley::ad2_half_sparse(const Root& r) const {
  if (!rs_.is_root(r)) throw NotARoot("ad2_half_sparse: " + to_string(r));
  return ad2half_[signed_index(r)];
}

SparseInt Chevalley::ad_of_basis(int b) const {
  if (is_root_line(b)) return ad_[signed_index(root_of_line(b))];
  SparseInt a;
  a.n = n_;
  int i = b - 2 * m_ + 1;
  for (int line = 0; line < 2 * m_; ++line) {
    int c = rs_.pairing(root_of_line(line), rs_.simple_root(i));
    if (c) a.e.push_back({line, line, c});
  }
  return a;
}

Mat Chevalley::ad_matrix(const Root& r) const {
  Mat m = Mat::zero(Ring::integers(), n_, n_);
  for (auto& en : ad_sparse(r).e) m.at(en.r, en.c) = Ring::integers().from_int(en.v);
  return m;
}

long long Chevalley::killing_form(int a, int b) const {
  SparseInt A = ad_of_basis(a), B = ad_of_basis(b);
  std::map<std::pair<int, int>, long long> bmap;
  for (auto& en : B.e) bmap[{en.r, en.c}] = en.v;
  long long tr = 0;
  for (auto& en : A.e) {
    auto it = bmap.find({en.c, en.r});
    if (it != bmap.end()) tr += en.v * it->second;
  }
  return tr;
}

}  // namespace chev
