#include "chev/group.hpp"

#include "chev/linalg.hpp"
#include "chev/threads.hpp"

namespace chev {

GroupElement x_elem(const Chevalley& ch, const Ring& ring, const Root& r, const RElem& t) {
  if (t.ring != ring) throw RingMismatch("parameter of x lives in " + t.ring.descriptor());
  const SparseInt& a1 = ch.ad_sparse(r);
  const SparseInt& a2 = ch.ad2_half_sparse(r);
  Mat m = Mat::ident(ring, ch.basis_size());
  RElem t2 = t * t;
  for (auto& en : a1.e) m.at(en.r, en.c) = m.at(en.r, en.c) + t * ring.from_int(en.v);
  for (auto& en : a2.e) m.at(en.r, en.c) = m.at(en.r, en.c) + t2 * ring.from_int(en.v);
  return GroupElement{std::move(m), {GenToken{'x', r, t}}};
}

GroupElement w_elem(const Chevalley& ch, const Ring& ring, const Root& r, const RElem& t) {
  RElem tinv = invert(t);  // NonUnit on non-units
  GroupElement a = x_elem(ch, ring, r, t);
  GroupElement b = x_elem(ch, ring, r.negated(), -tinv);
  Mat m = a.m * b.m * a.m;
  return GroupElement{std::move(m), {GenToken{'w', r, t}}};
}

GroupElement h_elem(const Chevalley& ch, const Ring& ring, const Root& r, const RElem& t) {
  if (!is_unit(t)) throw NonUnit("h parameter " + to_string(t));
  if (!ch.system().is_root(r)) throw NotARoot("h_elem: " + to_string(r));
  int n = ch.basis_size();
  Mat m = Mat::ident(ring, n);
  for (int line = 0; line < 2 * ch.system().positive_count(); ++line) {
    int e = ch.system().pairing(ch.root_of_line(line), r);
    if (e) m.at(line, line) = pow_elem(t, e);
  }
  return GroupElement{std::move(m), {GenToken{'h', r, t}}};
}

GroupElement mul(const GroupElement& a, const GroupElement& b) {
  GroupElement g{a.m * b.m, a.word};
  g.word.insert(g.word.end(), b.word.begin(), b.word.end());
  return g;
}

GroupElement inv(const Chevalley& ch, const GroupElement& g) {
  if (g.word.empty()) return GroupElement{inverse(g.m), {}};
  GroupElement out{Mat::ident(g.m.ring, g.m.rows), {}};
  for (auto it = g.word.rbegin(); it != g.word.rend(); ++it) {
    GroupElement f = it->kind == 'x'   ? x_elem(ch, g.m.ring, it->root, -it->t)
                     : it->kind == 'w' ? w_elem(ch, g.m.ring, it->root, -it->t)
                                       : h_elem(ch, g.m.ring, it->root, invert(it->t));
    out = mul(out, f);
  }
  return out;
}

Mat evaluate_word(const Chevalley& ch, const Ring& ring, const std::vector<GenToken>& word) {
  Mat m = Mat::ident(ring, ch.basis_size());
  for (const auto& tok : word) {
    GroupElement g = tok.kind == 'x'   ? x_elem(ch, ring, tok.root, tok.t)
                     : tok.kind == 'w' ? w_elem(ch, ring, tok.root, tok.t)
                                       : h_elem(ch, ring, tok.root, tok.t);
    m = m * g.m;
  }
  return m;
}

int c_sign(const Chevalley& ch, const Root& a, const Root& b) {
  Ring z = Ring::integers();
  RElem one = z.one();
  GroupElement w = w_elem(ch, z, a, one);
  Mat conj = w.m * x_elem(ch, z, b, one).m * inv(ch, w).m;
  Root target = ch.system().reflect(a, b);
  if (conj == x_elem(ch, z, target, one).m) return 1;
  if (conj == x_elem(ch, z, target, -one).m) return -1;
  throw NoMatch("conjugate of x_" + to_string(b) + " by w_" + to_string(a) +
                " is not x(+-1) at the reflected root");
}

RelationsReport check_relations(const Chevalley& ch, const Ring& ring, int samples,
                                uint64_t seed) {
  const auto roots = ch.system().all_roots();
  const int nroots = static_cast<int>(roots.size());
  Prng rng(seed);

  // Case parameters are sampled sequentially up front so the report does not
  // depend on evaluation order.
  std::vector<RelationCase> cases;
  for (int i = 0; i < nroots; ++i)
    for (int s = 0; s < samples; ++s) {
      RelationCase c;
      c.relation = "R1";
      c.alpha = roots[i];
      c.params = {sample_element(ring, rng), sample_element(ring, rng)};
      cases.push_back(std::move(c));
    }
  for (int i = 0; i < nroots; ++i)
    for (int j = 0; j < nroots; ++j) {
      if (roots[i] == roots[j] || roots[i] == roots[j].negated()) continue;
      for (int s = 0; s < samples; ++s) {
        RelationCase c;
        c.relation = "R2";
        c.alpha = roots[i];
        c.beta = roots[j];
        c.params = {sample_element(ring, rng), sample_element(ring, rng)};
        cases.push_back(std::move(c));
      }
    }
  for (const char* rel : {"R4", "R5", "R6"})
    for (int i = 0; i < nroots; ++i)
      for (int j = 0; j < nroots; ++j)
        for (int s = 0; s < samples; ++s) {
          RelationCase c;
          c.relation = rel;
          c.alpha = roots[i];
          c.beta = roots[j];
          c.params = {rel[1] == '5' ? sample_element(ring, rng) : sample_unit(ring, rng)};
          if (rel[1] == '6') c.params.push_back(sample_element(ring, rng));
          cases.push_back(std::move(c));
        }

  // Shared per-root data: w_a(1), its inverse, and the R5 signs over Z.
  std::vector<Mat> wmat, winv;
  wmat.reserve(nroots);
  for (int i = 0; i < nroots; ++i) {
    GroupElement w = w_elem(ch, ring, roots[i], ring.one());
    winv.push_back(w_elem(ch, ring, roots[i], -ring.one()).m);
    wmat.push_back(std::move(w.m));
  }
  std::vector<std::vector<int>> csigns(nroots, std::vector<int>(nroots, 0));
  std::vector<std::vector<int>> ridx(nroots, std::vector<int>(nroots, 0));
  for (int i = 0; i < nroots; ++i)
    for (int j = 0; j < nroots; ++j) {
      csigns[i][j] = c_sign(ch, roots[i], roots[j]);
      Root refl = ch.system().reflect(roots[i], roots[j]);
      for (int t = 0; t < nroots; ++t)
        if (roots[t] == refl) ridx[i][j] = t;
    }
  auto index_of = [&](const Root& r) {
    for (int t = 0; t < nroots; ++t)
      if (roots[t] == r) return t;
    throw NotARoot("relation case root " + to_string(r));
  };

  parallel_for(cases.size(), [&](std::size_t ci) {
    RelationCase& c = cases[ci];
    int ai = index_of(c.alpha);
    if (c.relation == "R1") {
      const RElem &t = c.params[0], &u = c.params[1];
      c.pass = x_elem(ch, ring, c.alpha, t).m * x_elem(ch, ring, c.alpha, u).m ==
               x_elem(ch, ring, c.alpha, t + u).m;
      return;
    }
    if (c.relation == "R2") {
      const RElem &t = c.params[0], &u = c.params[1];
      Mat comm = x_elem(ch, ring, c.alpha, t).m * x_elem(ch, ring, *c.beta, u).m *
                 x_elem(ch, ring, c.alpha, -t).m * x_elem(ch, ring, *c.beta, -u).m;
      int nconst = ch.structure_constant(c.alpha, *c.beta);
      if (nconst == 0) {
        c.pass = is_identity(comm);
        return;
      }
      Root sum{c.alpha.fam, c.alpha.rank, {}};
      sum.c.resize(c.alpha.c.size());
      for (std::size_t i = 0; i < sum.c.size(); ++i) sum.c[i] = c.alpha.c[i] + c.beta->c[i];
      RElem tu = t * u;
      bool plus = comm == x_elem(ch, ring, sum, tu).m;
      bool minus = comm == x_elem(ch, ring, sum, -tu).m;
      c.pass = nconst == 1 ? plus : minus;
      c.realized_sign = c.pass ? nconst : (plus || minus ? -nconst : 0);
      return;
    }
    int bi = index_of(*c.beta);
    if (c.relation == "R4") {
      const RElem& t = c.params[0];
      Mat lhs = wmat[ai] * h_elem(ch, ring, *c.beta, t).m * winv[ai];
      c.pass = lhs == h_elem(ch, ring, roots[ridx[ai][bi]], t).m;
      return;
    }
    if (c.relation == "R5") {
      const RElem& t = c.params[0];
      Mat lhs = wmat[ai] * x_elem(ch, ring, *c.beta, t).m * winv[ai];
      int sign = csigns[ai][bi];
      RElem ct = sign == 1 ? t : -t;
      c.pass = lhs == x_elem(ch, ring, roots[ridx[ai][bi]], ct).m;
      c.realized_sign = sign;
      return;
    }
    // R6: h_a(t) x_b(u) h_a(t)^{-1} = x_b(t^{<b,a>} u)
    const RElem &t = c.params[0], &u = c.params[1];
    Mat lhs = h_elem(ch, ring, c.alpha, t).m * x_elem(ch, ring, *c.beta, u).m *
              h_elem(ch, ring, c.alpha, invert(t)).m;
    int e = ch.system().pairing(*c.beta, c.alpha);
    c.pass = lhs == x_elem(ch, ring, *c.beta, pow_elem(t, e) * u).m;
  });

  RelationsReport rep;
  rep.cases = std::move(cases);
  for (const auto& c : rep.cases)
    if (!c.pass) ++rep.failures;
  return rep;
}

}  // namespace chev
