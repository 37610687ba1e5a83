#pragma once
#include <optional>
#include <string>
#include <vector>

#include "chev/chevalley.hpp"
#include "chev/prng.hpp"

namespace chev {

// One generator occurrence: kind 'x', 'w' or 'h', with its root and parameter.
struct GenToken {
  char kind;
  Root root;
  RElem t;
};

// Invertible n x n matrix over a ring together with the generator word that
// produced it (words concatenate under multiplication, so any identity that
// fails as matrices can be replayed as a word identity).
struct GroupElement {
  Mat m;
  std::vector<GenToken> word;
};

// x_r(t) = I + t ad(x_r) + t^2 (ad(x_r)^2/2); the cube of ad vanishes, so the
// exponential series stops here and the divided power is integral.
GroupElement x_elem(const Chevalley& ch, const Ring& ring, const Root& r, const RElem& t);
// w_r(t) = x_r(t) x_{-r}(-1/t) x_r(t); t must be a unit.
GroupElement w_elem(const Chevalley& ch, const Ring& ring, const Root& r, const RElem& t);
// h_r(t) = w_r(t) w_r(1)^{-1}: diagonal, acting on the x_b line by t^{<b,r>}.
GroupElement h_elem(const Chevalley& ch, const Ring& ring, const Root& r, const RElem& t);

GroupElement mul(const GroupElement& a, const GroupElement& b);
// Inverse via the token identities x(t)^-1 = x(-t), w(t)^-1 = w(-t),
// h(t)^-1 = h(1/t); falls back to matrix inversion for word-less elements.
GroupElement inv(const Chevalley& ch, const GroupElement& g);
Mat evaluate_word(const Chevalley& ch, const Ring& ring, const std::vector<GenToken>& word);

// The sign c with w_a(1) x_b(t) w_a(1)^{-1} = x_{s_a(b)}(c t); NoMatch if
// neither sign works (cannot happen for true Chevalley generators).
int c_sign(const Chevalley& ch, const Root& a, const Root& b);

struct RelationCase {
  std::string relation;  // "R1", "R2", "R4", "R5", "R6"
  Root alpha;
  std::optional<Root> beta;
  std::vector<RElem> params;
  bool pass = false;
  int realized_sign = 0;  // for R2/R5; 0 when not applicable
};

struct RelationsReport {
  std::vector<RelationCase> cases;
  int failures = 0;
};

// Samples every defining relation of the elementary group over the given
// ring: R1 additivity in t, R2 commutator formula with its sign checked
// against the structure-constant table, R4/R5 Weyl conjugation of h/x
// generators, R6 torus conjugation. Cases are evaluated in parallel but
// reported in a fixed order.
RelationsReport check_relations(const Chevalley& ch, const Ring& ring, int samples,
                                uint64_t seed);

}  // namespace chev
