// Acceptance battery: one [PASS]/[FAIL] line per criterion, nonzero exit if
// any line failed. Budgets are wall-clock seconds on a single worker; pass
// --heavy to include the long E-series closure.
#include <chrono>
#include <cstdlib>
#include <cstring>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "chev/cli.hpp"
#include "chev/errors.hpp"
#include "chev/prng.hpp"
#include "chev/verifier.hpp"

using namespace chev;

namespace {

int g_pass = 0, g_fail = 0;

void report(bool ok, const std::string& line) {
  std::cout << (ok ? "[PASS] " : "[FAIL] ") << line << "\n";
  (ok ? g_pass : g_fail) += 1;
}

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double s() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }
};

std::string secs(double s) {
  std::ostringstream o;
  o << std::fixed << std::setprecision(1) << s << "s";
  return o.str();
}

Chevalley make(Family f, int l) { return Chevalley::build(RootSystem::build(f, l)); }

Mat radical_conjugator(const Ring& ring, int n, Prng& rng) {
  Mat g = Mat::ident(ring, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g.at(i, j) = g.at(i, j) + sample_radical(ring, rng);
  return g;
}

bool reassembles(const Mat& a, const SplitDecomposition& sd) {
  const int n = a.rows;
  if (sd.r0 + sd.r1 != n) return false;
  Mat v = Mat::zero(a.ring, n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < sd.r0; ++j) v.at(i, j) = sd.v0.at(i, j);
    for (int j = 0; j < sd.r1; ++j) v.at(i, sd.r0 + j) = sd.v1.at(i, j);
  }
  Mat d = Mat::zero(a.ring, n, n);
  for (int i = 0; i < n; ++i) d.at(i, i) = a.ring.from_int(i < sd.r0 ? 1 : -1);
  return v * d * inverse(v) == a;
}

// (ad x)^3 = 0 and (ad x)^2 != 0, checked column-by-column on the cached
// sparse table.
bool ad_profile_ok(const Chevalley& ch, const Root& r) {
  const SparseInt& ad = ch.ad_sparse(r);
  const int n = ad.n;
  std::vector<std::vector<std::pair<int, long long>>> cols(static_cast<std::size_t>(n));
  for (const SparseInt::Entry& en : ad.e)
    cols[static_cast<std::size_t>(en.c)].emplace_back(en.r, en.v);
  auto apply = [&](const std::vector<long long>& v) {
    std::vector<long long> w(static_cast<std::size_t>(n), 0);
    for (int j = 0; j < n; ++j)
      if (v[static_cast<std::size_t>(j)] != 0)
        for (const auto& [i, c] : cols[static_cast<std::size_t>(j)])
          w[static_cast<std::size_t>(i)] += c * v[static_cast<std::size_t>(j)];
    return w;
  };
  bool square_nonzero = false;
  for (int b = 0; b < n; ++b) {
    std::vector<long long> v(static_cast<std::size_t>(n), 0);
    v[static_cast<std::size_t>(b)] = 1;
    std::vector<long long> v2 = apply(apply(v));
    for (long long x : v2)
      if (x != 0) square_nonzero = true;
    for (long long x : apply(v2))
      if (x != 0) return false;
  }
  return square_nonzero;
}

void criterion1() {
  Timer t;
  bool ok = true;
  std::string detail;
  try {
    GoldenA2 g = golden_a2(make(Family::A, 2));
    std::ostringstream d;
    d << "eps = (" << g.eps[0] << ", " << g.eps[1] << ", " << g.eps[2] << "), " << secs(t.s())
      << ", budget 1s";
    detail = d.str();
    ok = t.s() < 1.0;
  } catch (const ChevError& e) {
    ok = false;
    detail = e.what();
  }
  report(ok, "1. rank-2 reference matrices match after sign normalization (" + detail + ")");
}

void criterion2() {
  Timer t;
  long cases = 0;
  int failures = 0;
  const struct {
    Family f;
    int l;
  } kinds[] = {{Family::A, 2}, {Family::A, 3}, {Family::D, 4}};
  const char* rings[] = {"fp:7", "zmod:3^2", "tpoly:3:2"};
  for (const auto& k : kinds) {
    Chevalley ch = make(k.f, k.l);
    for (const char* rd : rings) {
      RelationsReport rep = check_relations(ch, Ring::parse(rd), 20, 42);
      cases += static_cast<long>(rep.cases.size());
      failures += rep.failures;
    }
  }
  bool ok = failures == 0 && t.s() < 30.0;
  report(ok, "2. defining relations for A2, A3, D4 over fp:7, zmod:3^2, tpoly:3:2 (" +
                 std::to_string(cases) + " cases, " + std::to_string(failures) + " failures, " +
                 secs(t.s()) + ", budget 30s)");
}

void criterion3() {
  const struct {
    Family f;
    int l;
  } kinds[] = {{Family::A, 2},  {Family::A, 16}, {Family::D, 4}, {Family::D, 16},
               {Family::E, 6},  {Family::E, 7},  {Family::E, 8}};
  bool ok = true;
  std::string bad;
  double e8 = 0;
  for (const auto& k : kinds) {
    Timer t;
    Chevalley ch = make(k.f, k.l);
    for (const Root& r : ch.system().all_roots())
      if (!ad_profile_ok(ch, r)) {
        ok = false;
        bad = " first failure at " + to_string(r);
      }
    if (k.f == Family::E && k.l == 8) e8 = t.s();
  }
  ok = ok && e8 < 120.0;
  report(ok, "3. (ad x)^3 = 0 and (ad x)^2 != 0 for every root of A2, A16, D4, D16, E6, E7, E8"
             " (E8 build+sweep " + secs(e8) + ", budget 120s)" + bad);
}

void criterion4() {
  Timer t;
  int bad = 0, trials = 0;
  const struct {
    Family f;
    int l;
  } kinds[] = {{Family::A, 2}, {Family::D, 4}};
  const char* rings[] = {"zmod:3^2", "tpoly:3:2"};
  uint64_t seed = 404;
  for (const auto& k : kinds) {
    Chevalley ch = make(k.f, k.l);
    const int n = ch.basis_size();
    for (const char* rd : rings) {
      Ring ring = Ring::parse(rd);
      Prng rng(seed++);
      for (int s = 0; s < 50; ++s, ++trials) {
        int i = 1 + static_cast<int>(rng.below(static_cast<uint64_t>(k.l)));
        Mat g = radical_conjugator(ring, n, rng);
        Mat a = g * h_elem(ch, ring, ch.system().simple_root(i), ring.from_int(-1)).m * inverse(g);
        try {
          SplitDecomposition sd = split_involution(a);
          if (!rank_match_residue(a) || !reassembles(a, sd)) ++bad;
        } catch (const ChevError&) {
          ++bad;
        }
      }
    }
  }
  report(bad == 0, "4. involution splitting for 50 seeded radical conjugates per (A2, D4) x "
                   "(zmod:3^2, tpoly:3:2): " + std::to_string(trials) + " trials, " +
                   std::to_string(bad) + " failures (" + secs(t.s()) + ")");
}

void criterion5() {
  Timer t;
  int bad = 0, trials = 0;
  const struct {
    Family f;
    int l;
  } kinds[] = {{Family::A, 2}, {Family::A, 3}, {Family::D, 4}, {Family::E, 6}};
  const char* rings[] = {"zmod:3^2", "zmod:5^2", "tpoly:3:2"};
  uint64_t seed = 505;
  for (const auto& k : kinds) {
    RootSystem rs = RootSystem::build(k.f, k.l);
    for (const char* rd : rings) {
      Ring ring = Ring::parse(rd);
      std::vector<Mat> refs = true_cartan_reflections(rs, ring);
      Prng rng(seed++);
      for (int s = 0; s < 100; ++s, ++trials) {
        Mat g0 = radical_conjugator(ring, k.l, rng);
        Mat g0i = inverse(g0);
        std::vector<Mat> cand;
        cand.reserve(refs.size());
        for (const Mat& w : refs) cand.push_back(g0 * w * g0i);
        try {
          Mat g = normalize_weyl_images(rs, cand);
          Mat gi = inverse(g);
          for (std::size_t i = 0; i < refs.size(); ++i)
            if (gi * cand[i] * g != refs[i]) {
              ++bad;
              break;
            }
        } catch (const ChevError&) {
          ++bad;
        }
      }
    }
  }
  bool ok = bad == 0 && t.s() < 120.0;
  report(ok, "5. Weyl-image normalization round trip, 100 seeded conjugated inputs per "
             "(A2, A3, D4, E6) x (zmod:3^2, zmod:5^2, tpoly:3:2): " + std::to_string(trials) +
                 " trials, " + std::to_string(bad) + " failures (" + secs(t.s()) +
                 ", budget 120s)");
}

void criterion6() {
  Timer t;
  bool constants_ok = false, det_ok = false, unique_ok = false;
  std::string det_str = "?";
  try {
    LinearSystem27 sys = build_con_system(make(Family::A, 2));
    constants_ok = true;  // the builder hard-fails on a nonvanishing constant
    det_str = sys.det.str();
    det_ok = sys.det == 256 || sys.det == -256;
    unique_ok = true;
    for (const char* rd : {"fp:7", "zmod:3^2", "zmod:5^2", "tpoly:3:2", "tpoly:5:2", "zloc:5"}) {
      try {
        check_con_system_over(sys, Ring::parse(rd));
      } catch (const ChevError&) {
        unique_ok = false;
      }
    }
  } catch (const ChevError& e) {
    det_str = e.what();
  }
  bool ok = constants_ok && det_ok && unique_ok && t.s() < 10.0;
  std::ostringstream d;
  d << "constants vanish: " << (constants_ok ? "yes" : "NO")
    << "; unique zero solution over 6 local rings: " << (unique_ok ? "yes" : "NO")
    << "; determinant +-256 exact: " << (det_ok ? "yes" : "NO") << " (derived determinant "
    << det_str << " = -2^7; the 27 labeled rows reproducibly give -2^7, which is a unit wherever "
    << "2 is and carries the uniqueness argument; the referenced value 2^8 does not match the "
    << "derived system)" << "; " << secs(t.s()) << ", budget 10s";
  report(ok, "6. rank-2 commutation system: " + d.str());
}

void criterion7() {
  Timer t;
  int bad = 0, count = 0;
  Chevalley ch = make(Family::A, 2);
  Ring f7 = Ring::parse("fp:7");
  for (int u = 1; u <= 6; ++u, ++count) {
    try {
      verify_torus_rigidity(ch, f7, f7.from_int(u));
    } catch (const ChevError&) {
      ++bad;
    }
  }
  Ring z25 = Ring::parse("zmod:5^2");
  Prng rng(707);
  for (int s = 0; s < 20; ++s, ++count) {
    try {
      verify_torus_rigidity(ch, z25, sample_unit(z25, rng));
    } catch (const ChevError&) {
      ++bad;
    }
  }
  report(bad == 0, "7. torus recovery both directions for all 6 units of fp:7 and 20 seeded "
                   "units of zmod:5^2: " + std::to_string(count) + " units, " +
                       std::to_string(bad) + " failures (" + secs(t.s()) + ")");
}

void criterion8(bool heavy) {
  Timer t;
  bool ok = true;
  std::ostringstream d;
  const struct {
    Family f;
    int l;
    const char* rd;
    int want;
  } runs[] = {{Family::A, 2, "fp:5", 64}, {Family::A, 3, "fp:3", 225}, {Family::D, 4, "fp:5", 784}};
  for (const auto& k : runs) {
    try {
      ClosureResult res = generate_matrix_units(make(k.f, k.l), Ring::parse(k.rd));
      if (res.dim != k.want) ok = false;
      d << static_cast<char>(k.f) << k.l << "/" << k.rd << " dim " << res.dim << " (want "
        << k.want << "), ";
    } catch (const ChevError& e) {
      ok = false;
      d << e.what() << ", ";
    }
  }
  try {
    UnitScriptReport rep = scripted_a2_matrix_units(make(Family::A, 2), Ring::parse("fp:5"));
    if (!rep.complete) ok = false;
    int units = 0;
    for (const UnitScriptStep& st : rep.steps)
      if (is_unit(st.scalar)) ++units;
    d << "scripted rank-2 derivation " << (rep.complete ? "complete" : "INCOMPLETE") << " in "
      << rep.steps.size() << " steps, " << units << " logged unit scalars";
  } catch (const ChevError& e) {
    ok = false;
    d << e.what();
  }
  ok = ok && t.s() < 120.0;
  if (heavy) {
    Timer th;
    try {
      ClosureResult res = generate_matrix_units(make(Family::E, 6), Ring::parse("fp:5"));
      if (res.dim != 6084) ok = false;
      d << "; heavy E6/fp:5 closure dim " << res.dim << " (want 6084) in " << secs(th.s());
    } catch (const ChevError& e) {
      ok = false;
      d << "; heavy E6 closure failed: " << e.what();
    }
  }
  report(ok, "8. matrix-unit closures (" + d.str() + "; " + secs(t.s()) + ", budget 120s" +
                 std::string(heavy ? ", heavy run unbudgeted" : "") + ")");
}

void criterion9() {
  Timer t;
  auto run_vp = [](const char* threads) {
    setenv("CHEV_THREADS", threads, 1);
    const char* argv[] = {"chev",       "verify-paper", "--type", "A",      "--rank", "2",
                          "--ring",     "zmod:5^2",     "--seed", "11"};
    std::ostringstream o, e;
    int code = run_cli(static_cast<int>(std::size(argv)), argv, o, e);
    return std::pair<int, std::string>(code, o.str());
  };
  auto first = run_vp("1");
  auto second = run_vp("1");
  auto eight = run_vp("8");
  unsetenv("CHEV_THREADS");
  bool ok = first.first == 0 && !first.second.empty() && first.second == second.second &&
            first.second == eight.second;
  report(ok, "9. verify-paper byte-identical across two runs and across CHEV_THREADS=1/8 (" +
                 std::to_string(first.second.size()) + " bytes, " + secs(t.s()) + ")");
}

}  // namespace

int main(int argc, char** argv) {
  bool heavy = false;
  for (int i = 1; i < argc; ++i)
    if (std::strcmp(argv[i], "--heavy") == 0) heavy = true;
  std::cout << "acceptance battery" << (heavy ? " (--heavy)" : "") << "\n";
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8(heavy);
  criterion9();
  std::cout << g_pass << " passed, " << g_fail << " failed\n";
  return g_fail == 0 ? 0 : 1;
}
