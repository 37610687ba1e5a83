#pragma once
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "chev/errors.hpp"
#include "chev/prng.hpp"

namespace chev {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

enum class RingKind : uint8_t { Int, Rat, Fp, Zmod, Tpoly, Zloc };

bool is_prime_u32(uint32_t n);

struct RElem;

// Descriptor of a supported commutative unital ring. Value type; elements
// carry a copy so cross-ring arithmetic can be rejected. Local kinds (all but
// Int/Rat) require an odd prime p, so 2 is always invertible where the group
// machinery needs it.
struct Ring {
  RingKind kind = RingKind::Int;
  uint32_t p = 0;       // prime parameter of the local kinds
  uint32_t k = 1;       // exponent (Zmod) / truncation order (Tpoly)
  uint64_t modulus = 0; // p^k for Fp/Zmod, p for Tpoly coefficients

  static Ring integers();
  static Ring rationals();
  static Ring prime_field(uint32_t p);
  static Ring integers_mod(uint32_t p, uint32_t k);
  static Ring truncated_poly(uint32_t p, uint32_t k);
  static Ring localized_integers(uint32_t p);

  // Descriptor grammar: int | rat | fp:<p> | zmod:<p>^<k> | tpoly:<p>:<k> | zloc:<p>
  static Ring parse(const std::string& descriptor);
  std::string descriptor() const;

  bool is_local() const {
    return kind == RingKind::Fp || kind == RingKind::Zmod || kind == RingKind::Tpoly ||
           kind == RingKind::Zloc;
  }
  bool is_field() const { return kind == RingKind::Rat || kind == RingKind::Fp; }
  Ring residue_ring() const;  // NotLocal for Int/Rat

  RElem zero() const;
  RElem one() const;
  RElem from_int(long long v) const;
  RElem from_cpp_int(const cpp_int& v) const;
  // Element grammar: decimal (Int/Fp/Zmod), a/b (Rat/Zloc),
  // c0+c1*t+c2*t^2+... (Tpoly).
  RElem parse_elem(const std::string& text) const;

  friend bool operator==(const Ring& a, const Ring& b) {
    return a.kind == b.kind && a.p == b.p && a.k == b.k;
  }
  friend bool operator!=(const Ring& a, const Ring& b) { return !(a == b); }
};

// Exact ring element in canonical form: equal values always have identical
// representatives. Payload by kind: Int -> cpp_int; Rat/Zloc -> cpp_rational
// (reduced, positive denominator, and for Zloc denominator coprime to p);
// Fp/Zmod -> residue in [0, p^k); Tpoly -> k coefficients in [0, p).
struct RElem {
  Ring ring;
  std::variant<cpp_int, cpp_rational, uint64_t, std::vector<uint64_t>> v;
};

RElem operator+(const RElem& a, const RElem& b);
RElem operator-(const RElem& a, const RElem& b);
RElem operator*(const RElem& a, const RElem& b);
RElem operator-(const RElem& a);
bool operator==(const RElem& a, const RElem& b);
inline bool operator!=(const RElem& a, const RElem& b) { return !(a == b); }

bool is_zero(const RElem& a);
bool is_one(const RElem& a);
bool is_unit(const RElem& a);
bool in_radical(const RElem& a);  // NotLocal for Int/Rat
RElem residue(const RElem& a);    // NotLocal for Int/Rat; image in residue_ring()
RElem invert(const RElem& a);     // NonUnit if not invertible
RElem pow_elem(const RElem& a, long long e);  // negative e inverts first
RElem halve(const RElem& a);      // multiply by invert(2)
std::string to_string(const RElem& a);

RElem sample_element(const Ring& r, Prng& rng);
RElem sample_unit(const Ring& r, Prng& rng);
RElem sample_radical(const Ring& r, Prng& rng);  // NotLocal for Int/Rat

}  // namespace chev
