// Matrix-unit generation: the span closure of the elementary group inside
// the full matrix algebra, and the scripted rank-2 derivation that
// manufactures every matrix unit from explicit product identities.
#include <algorithm>
#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "chev/errors.hpp"
#include "chev/threads.hpp"
#include "chev/verifier.hpp"

namespace chev {
namespace {

// Smallest unit whose square is not 1, in a fixed enumeration: the integers
// 2, 3, ... first, then 1+t for truncated polynomials whose units otherwise
// all square to one. Conjugation by h(t0) then tells a weight line apart
// from its negative. Falls back to 2 (= -1) over F_3, where no unit of
// order > 2 exists.
RElem separating_unit(const Ring& ring) {
  RElem one = ring.one();
  for (long long c = 2; c < 16; ++c) {
    RElem t = ring.from_int(c);
    if (is_unit(t) && t * t != one) return t;
  }
  if (ring.kind == RingKind::Tpoly) {
    RElem t = ring.parse_elem("1+t");
    if (t * t != one) return t;
  }
  return ring.from_int(2);
}

// x_{+-alpha_i}(1), w_{alpha_i}(1), h_{alpha_i}(t0) over the simple roots.
// Any group element over a field lies in the unital span of its own powers
// (Cayley-Hamilton with unit determinant), so the span closure of this list
// equals the span closure over every root: the missing generators are group
// words in these.
std::vector<GroupElement> closure_generators(const Chevalley& ch, const Ring& ring,
                                             GeneratorSet which, const RElem& t0) {
  const RootSystem& rs = ch.system();
  RElem one = ring.one();
  std::vector<GroupElement> gens;
  for (int i = 1; i <= rs.rank(); ++i) {
    Root a = rs.simple_root(i);
    if (which == GeneratorSet::Full) {
      gens.push_back(x_elem(ch, ring, a, one));
      gens.push_back(x_elem(ch, ring, a.negated(), one));
      gens.push_back(w_elem(ch, ring, a, one));
    }
    gens.push_back(h_elem(ch, ring, a, t0));
  }
  return gens;
}

// ---------------------------------------------------------------------------
// Closure over a prime field in packed arithmetic. Rows stay in echelon form
// (distinct pivot columns, leading entry 1) and reduction walks the columns
// in ascending order, so reducing against a prefix of the rows commutes with
// finishing against the rest later; that is what makes the parallel
// pre-reduction against a snapshot give the same rows as a serial run.

uint64_t pow_mod(uint64_t b, uint64_t e, uint64_t p) {
  uint64_t r = 1 % p;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

struct FpSpan {
  uint64_t p = 0;
  std::size_t n = 0, cols = 0;
  // lazy: a whole product-plus-reduction fits u64 without intermediate mods
  bool lazy = false;
  std::vector<std::vector<uint32_t>> rows;
  std::vector<int> row_at_pivot;  // column -> row index, -1 when open
  std::vector<std::vector<int>> witness;
};

// work = vec(g * b) for n x n matrices stored row-major
void fp_product(const FpSpan& s, const std::vector<uint32_t>& g, const std::vector<uint32_t>& b,
                std::vector<uint64_t>& work) {
  std::fill(work.begin(), work.end(), uint64_t{0});
  for (std::size_t i = 0; i < s.n; ++i)
    for (std::size_t k = 0; k < s.n; ++k) {
      uint64_t gv = g[i * s.n + k];
      if (!gv) continue;
      const uint32_t* brow = &b[k * s.n];
      uint64_t* wrow = &work[i * s.n];
      if (s.lazy) {
        for (std::size_t j = 0; j < s.n; ++j) wrow[j] += gv * brow[j];
      } else {
        for (std::size_t j = 0; j < s.n; ++j) wrow[j] = (wrow[j] + gv * brow[j]) % s.p;
      }
    }
}

void fp_reduce(const FpSpan& s, std::size_t upto, std::vector<uint64_t>& work) {
  for (std::size_t c = 0; c < s.cols; ++c) {
    uint64_t f = work[c] % s.p;
    work[c] = f;
    if (!f) continue;
    int ri = s.row_at_pivot[c];
    if (ri < 0 || static_cast<std::size_t>(ri) >= upto) continue;
    const uint32_t* row = s.rows[ri].data();
    work[c] = 0;
    uint64_t m = s.p - f;  // adding m*row subtracts f*row mod p, stays nonnegative
    if (s.lazy) {
      for (std::size_t j = c + 1; j < s.cols; ++j) work[j] += m * row[j];
    } else {
      for (std::size_t j = c + 1; j < s.cols; ++j) work[j] = (work[j] + m * row[j]) % s.p;
    }
  }
}

// expects fully reduced work; returns false when it vanished
bool fp_insert(FpSpan& s, const std::vector<uint64_t>& work, std::vector<int> word) {
  std::size_t c = 0;
  while (c < s.cols && work[c] == 0) ++c;
  if (c == s.cols) return false;
  uint64_t inv = pow_mod(work[c], s.p - 2, s.p);
  std::vector<uint32_t> row(s.cols, 0);
  for (std::size_t j = c; j < s.cols; ++j)
    row[j] = static_cast<uint32_t>(work[j] * inv % s.p);
  s.row_at_pivot[c] = static_cast<int>(s.rows.size());
  s.rows.push_back(std::move(row));
  s.witness.push_back(std::move(word));
  return true;
}

struct FpFrontierRow {
  std::vector<uint32_t> original;  // unreduced product; spawns the next round
  std::vector<int> word;
};

ClosureResult run_fp_closure(const Chevalley& ch, const Ring& ring,
                             const std::vector<GroupElement>& gens) {
  const Ring field = ring.is_field() ? ring : ring.residue_ring();
  const std::size_t n = static_cast<std::size_t>(ch.basis_size());
  const std::size_t cols = n * n, target = cols;
  FpSpan s;
  s.p = field.p;
  s.n = n;
  s.cols = cols;
  s.lazy = cpp_int(s.p - 1) * (s.p - 1) * cpp_int(2 * cols + n + 4) < (cpp_int(1) << 63);
  s.rows.reserve(cols);
  s.witness.reserve(cols);
  s.row_at_pivot.assign(cols, -1);

  auto val = [&](const RElem& x) -> uint64_t {
    return std::get<uint64_t>((ring.is_field() ? x : residue(x)).v);
  };
  std::vector<std::vector<uint32_t>> gm(gens.size(), std::vector<uint32_t>(cols));
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        gm[i][r * n + c] = static_cast<uint32_t>(val(gens[i].m.at(static_cast<int>(r),
                                                                  static_cast<int>(c))));

  std::vector<FpFrontierRow> frontier;
  {
    std::vector<uint32_t> id(cols, 0);
    std::vector<uint64_t> w(cols, 0);
    for (std::size_t i = 0; i < n; ++i) id[i * n + i] = w[i * n + i] = 1;
    fp_insert(s, w, {});
    frontier.push_back({std::move(id), {}});
  }

  // every sampled inserted row must be the residue of its witness word
  // evaluated over the ring itself; this guards the lift for non-fields
  auto check_lift = [&](const std::vector<int>& word, const std::vector<uint32_t>& orig) {
    Mat acc = gens[static_cast<std::size_t>(word[0])].m;
    for (std::size_t i = 1; i < word.size(); ++i)
      acc = acc * gens[static_cast<std::size_t>(word[i])].m;
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        if (val(acc.at(static_cast<int>(r), static_cast<int>(c))) != orig[r * n + c])
          throw StructuralFailure("matrix-unit closure: witness word does not lift over " +
                                  ring.descriptor());
  };

  const std::size_t kChunk = 256;
  while (!frontier.empty() && s.rows.size() < target) {
    std::vector<FpFrontierRow> next;
    const std::size_t total = frontier.size() * gens.size();
    for (std::size_t base = 0; base < total && s.rows.size() < target; base += kChunk) {
      const std::size_t m = std::min(kChunk, total - base);
      const std::size_t snap = s.rows.size();
      std::vector<std::vector<uint32_t>> orig(m);
      std::vector<std::vector<uint64_t>> work(m);
      parallel_for(m, [&](std::size_t q) {
        const std::size_t idx = base + q;
        const auto& parent = frontier[idx / gens.size()];
        std::vector<uint64_t> w(cols);
        fp_product(s, gm[idx % gens.size()], parent.original, w);
        std::vector<uint32_t> o(cols);
        for (std::size_t j = 0; j < cols; ++j) o[j] = static_cast<uint32_t>(w[j] % s.p);
        fp_reduce(s, snap, w);
        orig[q] = std::move(o);
        work[q] = std::move(w);
      });
      for (std::size_t q = 0; q < m && s.rows.size() < target; ++q) {
        fp_reduce(s, s.rows.size(), work[q]);
        const std::size_t idx = base + q;
        const auto& parent = frontier[idx / gens.size()];
        std::vector<int> word;
        word.reserve(parent.word.size() + 1);
        word.push_back(static_cast<int>(idx % gens.size()));
        word.insert(word.end(), parent.word.begin(), parent.word.end());
        if (!fp_insert(s, work[q], word)) continue;
        if (!ring.is_field() && (s.rows.size() - 1) % 16 == 0) check_lift(word, orig[q]);
        next.push_back({std::move(orig[q]), std::move(word)});
      }
    }
    frontier = std::move(next);
  }

  if (s.rows.size() < target)
    throw ClosureStalled(static_cast<int>(s.rows.size()),
                         "span closure stabilized at " + std::to_string(s.rows.size()) +
                             " of " + std::to_string(target) + " over " + ring.descriptor());
  ClosureResult out;
  out.n = static_cast<int>(n);
  out.dim = static_cast<int>(s.rows.size());
  out.words = static_cast<int>(s.witness.size());
  out.witness = std::move(s.witness);
  return out;
}

// ---------------------------------------------------------------------------
// The same closure over the rationals, in exact ring elements; serial, for
// the one field kind the packed engine cannot carry.

struct RatFrontierRow {
  Mat original;
  std::vector<int> word;
};

ClosureResult run_rat_closure(const Chevalley& ch, const Ring& ring,
                              const std::vector<GroupElement>& gens) {
  const int n = ch.basis_size();
  const std::size_t cols = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  std::vector<std::vector<RElem>> rows;
  std::vector<int> row_at_pivot(cols, -1);
  std::vector<std::vector<int>> witness;

  auto flatten = [&](const Mat& m) {
    std::vector<RElem> v;
    v.reserve(cols);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) v.push_back(m.at(r, c));
    return v;
  };
  auto reduce = [&](std::vector<RElem>& work) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (is_zero(work[c])) continue;
      int ri = row_at_pivot[c];
      if (ri < 0) continue;
      RElem f = work[c];
      const auto& row = rows[static_cast<std::size_t>(ri)];
      work[c] = ring.zero();
      for (std::size_t j = c + 1; j < cols; ++j)
        if (!is_zero(row[j])) work[j] = work[j] - f * row[j];
    }
  };
  auto insert = [&](std::vector<RElem> work, std::vector<int> word) {
    std::size_t c = 0;
    while (c < cols && is_zero(work[c])) ++c;
    if (c == cols) return false;
    RElem inv = invert(work[c]);
    for (std::size_t j = c; j < cols; ++j) work[j] = work[j] * inv;
    row_at_pivot[c] = static_cast<int>(rows.size());
    rows.push_back(std::move(work));
    witness.push_back(std::move(word));
    return true;
  };

  std::vector<RatFrontierRow> frontier;
  insert(flatten(Mat::ident(ring, n)), {});
  frontier.push_back({Mat::ident(ring, n), {}});

  const std::size_t target = cols;
  while (!frontier.empty() && rows.size() < target) {
    std::vector<RatFrontierRow> next;
    for (const auto& parent : frontier) {
      for (std::size_t gi = 0; gi < gens.size() && rows.size() < target; ++gi) {
        Mat prod = gens[gi].m * parent.original;
        std::vector<RElem> work = flatten(prod);
        reduce(work);
        std::vector<int> word;
        word.reserve(parent.word.size() + 1);
        word.push_back(static_cast<int>(gi));
        word.insert(word.end(), parent.word.begin(), parent.word.end());
        if (insert(std::move(work), word)) next.push_back({std::move(prod), std::move(word)});
      }
      if (rows.size() >= target) break;
    }
    frontier = std::move(next);
  }

  if (rows.size() < target)
    throw ClosureStalled(static_cast<int>(rows.size()),
                         "span closure stabilized at " + std::to_string(rows.size()) + " of " +
                             std::to_string(target) + " over " + ring.descriptor());
  ClosureResult out;
  out.n = n;
  out.dim = static_cast<int>(rows.size());
  out.words = static_cast<int>(witness.size());
  out.witness = std::move(witness);
  return out;
}

}  // namespace

ClosureResult generate_matrix_units(const Chevalley& ch, const Ring& ring, GeneratorSet gens) {
  if (!ring.is_field() && !ring.is_local())
    throw NotLocal("matrix-unit closure needs a field or a local ring, got " +
                   ring.descriptor());
  RElem t0 = separating_unit(ring);
  auto list = closure_generators(ch, ring, gens, t0);
  if (ring.kind == RingKind::Rat) return run_rat_closure(ch, ring, list);
  return run_fp_closure(ch, ring, list);
}

bool subring_equality_check(const Chevalley& ch, const Ring& ring) {
  const int n = ch.basis_size();
  try {
    return generate_matrix_units(ch, ring).dim == n * n;
  } catch (const ClosureStalled&) {
    return false;
  }
}

UnitScriptReport scripted_a2_matrix_units(const Chevalley& ch, const Ring& ring) {
  const RootSystem& rs = ch.system();
  if (rs.family() != Family::A || rs.rank() != 2)
    throw UnsupportedType("the scripted derivation exists for type A rank 2 only");
  const int n = 8;
  RElem one = ring.one();
  Mat id = Mat::ident(ring, n);
  Root a1 = rs.simple_root(1), a2 = rs.simple_root(2);
  Mat x1 = x_elem(ch, ring, a1, one).m;
  Mat w1 = w_elem(ch, ring, a1, one).m;
  Mat w2 = w_elem(ch, ring, a2, one).m;
  Mat w1i = inverse(w1), w2i = inverse(w2);
  RElem t0 = separating_unit(ring);
  Mat h2t = h_elem(ch, ring, a2, t0).m;

  UnitScriptReport rep;
  std::vector<Mat> stock(64, Mat::zero(ring, n, n));
  std::array<bool, 64> have{};
  auto unit_at = [&](int i, int j) -> Mat& { return stock[(i - 1) * 8 + (j - 1)]; };

  // the only nonzero entry must sit at (i, j) and be a unit
  auto single_entry = [&](const std::string& label, const Mat& m, int i, int j) {
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c)
        if ((r != i - 1 || c != j - 1) && !is_zero(m.at(r, c)))
          throw StructuralFailure("scripted step '" + label + "': stray entry at (" +
                                  std::to_string(r + 1) + "," + std::to_string(c + 1) + ")");
    RElem s = m.at(i - 1, j - 1);
    if (!is_unit(s))
      throw StructuralFailure("scripted step '" + label + "': scalar " + to_string(s) +
                              " is not a unit");
    return s;
  };
  auto put = [&](const std::string& label, int i, int j, const Mat& prod,
                 const std::vector<RElem>& allowed) {
    RElem s = single_entry(label, prod, i, j);
    bool ok = allowed.empty();
    for (const RElem& a : allowed) ok = ok || s == a || s == -a;
    if (!ok)
      throw StructuralFailure("scripted step '" + label + "': scalar " + to_string(s) +
                              " outside the sign tolerance");
    unit_at(i, j) = scalar_mul(invert(s), prod);
    have[static_cast<std::size_t>((i - 1) * 8 + (j - 1))] = true;
    rep.steps.push_back({label, s});
  };
  auto num = [](int i) { return std::to_string(i); };

  // the square of x1 - 1 collapses to a single doubled unit
  Mat y = x1 - id;
  put("square of x1 - 1", 1, 2, y * y, {ring.from_int(2)});

  // the torus line rescales it in place
  {
    Mat m = h2t * unit_at(1, 2);
    RElem s = single_entry("torus rescale of E12", m, 1, 2);
    if (s != t0 && s != invert(t0) && s != -t0 && s != -invert(t0))
      throw StructuralFailure("scripted step 'torus rescale of E12': scalar " + to_string(s) +
                              " is not a power of t0");
    rep.steps.push_back({"torus rescale of E12", s});
  }

  put("w1 E12 w1^-1 = E21", 2, 1, w1 * unit_at(1, 2) * w1i, {one});
  put("E12 E21 = E11", 1, 1, unit_at(1, 2) * unit_at(2, 1), {one});
  put("E21 E12 = E22", 2, 2, unit_at(2, 1) * unit_at(1, 2), {one});
  put("w2 E12 = E52", 5, 2, w2 * unit_at(1, 2), {one});
  put("w2 E21 = E61", 6, 1, w2 * unit_at(2, 1), {one});
  put("E52 E21 = E51", 5, 1, unit_at(5, 2) * unit_at(2, 1), {one});
  put("E61 E12 = E62", 6, 2, unit_at(6, 1) * unit_at(1, 2), {one});
  put("E12 w2 = E16", 1, 6, unit_at(1, 2) * w2, {one});
  put("E21 w2 = E25", 2, 5, unit_at(2, 1) * w2, {one});
  put("E21 E16 = E26", 2, 6, unit_at(2, 1) * unit_at(1, 6), {one});
  put("E12 E25 = E15", 1, 5, unit_at(1, 2) * unit_at(2, 5), {one});
  put("E51 E15 = E55", 5, 5, unit_at(5, 1) * unit_at(1, 5), {one});
  put("E61 E16 = E66", 6, 6, unit_at(6, 1) * unit_at(1, 6), {one});
  put("E51 E16 = E56", 5, 6, unit_at(5, 1) * unit_at(1, 6), {one});
  put("E61 E15 = E65", 6, 5, unit_at(6, 1) * unit_at(1, 5), {one});
  for (int i : {1, 2, 5, 6}) {
    put("E" + num(i) + "5 w1 = E" + num(i) + "3", i, 3, unit_at(i, 5) * w1, {one});
    put("E" + num(i) + "6 w1 = E" + num(i) + "4", i, 4, unit_at(i, 6) * w1, {one});
  }
  for (int i : {1, 2, 5, 6}) {
    put("w1 E5" + num(i) + " = E3" + num(i), 3, i, w1 * unit_at(5, i), {one});
    put("w1 E6" + num(i) + " = E4" + num(i), 4, i, w1 * unit_at(6, i), {one});
  }
  put("E41 E13 = E43", 4, 3, unit_at(4, 1) * unit_at(1, 3), {one});
  put("E41 E14 = E44", 4, 4, unit_at(4, 1) * unit_at(1, 4), {one});
  put("E31 E13 = E33", 3, 3, unit_at(3, 1) * unit_at(1, 3), {one});
  put("E31 E14 = E34", 3, 4, unit_at(3, 1) * unit_at(1, 4), {one});

  // strip the realized 6x6 units out of x1 - 1: what stays must be the two
  // Cartan columns of row 1 plus one unit back down in row 7
  Mat yp = y;
  for (int i = 1; i <= 6; ++i)
    for (int j = 1; j <= 6; ++j) {
      RElem c = yp.at(i - 1, j - 1);
      if (!is_zero(c)) yp = yp - scalar_mul(c, unit_at(i, j));
    }
  RElem k1 = yp.at(0, 7), k2 = yp.at(0, 6), k3 = yp.at(6, 1);
  {
    bool shape = is_unit(k1) && is_unit(k3) && k2 == -(k1 + k1);
    for (int r = 0; r < n && shape; ++r)
      for (int c = 0; c < n; ++c)
        if (!((r == 0 && (c == 6 || c == 7)) || (r == 6 && c == 1)) && !is_zero(yp.at(r, c))) {
          shape = false;
          break;
        }
    if (!shape)
      throw StructuralFailure("scripted step 'strip x1 - 1': residue is not E18 - 2E17 + E72 "
                              "up to signs");
    rep.steps.push_back({"strip x1 - 1 to the Cartan columns", k1});
  }

  for (int i = 1; i <= 6; ++i)
    put("(E18 - 2E17 + E72) E2" + num(i) + " = E7" + num(i), 7, i, yp * unit_at(2, i), {one});
  for (int i = 1; i <= 6; ++i)
    put("(w2 - 1) E7" + num(i) + " = E8" + num(i), 8, i, (w2 - id) * unit_at(7, i), {one});

  // fold the remaining pair E18 - 2E17 across the long Weyl element, pull it
  // back to row 1, and separate the two Cartan columns; the difference has a
  // bare 3 in front, so this is exactly where 3 must invert
  Mat ypp = yp - scalar_mul(k3, unit_at(7, 2));
  Mat z = w2 * ypp * w2i;
  auto pair_entry = [&](const std::string& label, const Mat& m, int i) {
    RElem s = m.at(i - 1, 6);
    bool shape = is_unit(s) && m.at(i - 1, 7) == s;
    for (int r = 0; r < n && shape; ++r)
      for (int c = 0; c < n; ++c)
        if (!(r == i - 1 && c >= 6) && !is_zero(m.at(r, c))) {
          shape = false;
          break;
        }
    if (!shape)
      throw StructuralFailure("scripted step '" + label + "': expected a matched Cartan pair "
                              "in row " + num(i));
    rep.steps.push_back({label, s});
    return s;
  };
  pair_entry("w2 folds the Cartan pair onto row 5", z, 5);
  Mat q = unit_at(1, 5) * z;
  RElem nu = pair_entry("E15 pulls the Cartan pair back to row 1", q, 1);

  RElem three = ring.from_int(3);
  if (!is_unit(three)) return rep;  // the separation divides by 3
  put("separate the Cartan columns", 1, 7,
      scalar_mul(invert(nu), q) - scalar_mul(invert(k1), ypp), {three});
  put("complete the last Cartan column", 1, 8, scalar_mul(invert(nu), q) - unit_at(1, 7),
      {one});
  for (int i = 2; i <= 8; ++i) {
    put("E" + num(i) + "1 E17 = E" + num(i) + "7", i, 7, unit_at(i, 1) * unit_at(1, 7), {one});
    put("E" + num(i) + "1 E18 = E" + num(i) + "8", i, 8, unit_at(i, 1) * unit_at(1, 8), {one});
  }

  rep.complete = std::all_of(have.begin(), have.end(), [](bool b) { return b; });
  return rep;
}

}  // namespace chev
