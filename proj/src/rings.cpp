#include "chev/rings.hpp"

#include <algorithm>
#include <sstream>

namespace chev {

bool is_prime_u32(uint32_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

void require_local_prime(uint32_t p, const std::string& what) {
  if (!is_prime_u32(p)) throw UnsupportedType(what + ": p = " + std::to_string(p) + " is not prime");
  if (p == 2) throw UnsupportedType(what + ": p = 2 rejected, 2 must be a unit");
}

uint64_t pow_u64_checked(uint32_t p, uint32_t k, const std::string& what) {
  uint64_t m = 1;
  for (uint32_t i = 0; i < k; ++i) {
    m *= p;
    if (m >= (1ull << 31)) throw UnsupportedType(what + ": modulus p^k too large");
  }
  return m;
}

uint64_t mod_inverse(uint64_t a, uint64_t m) {
  // extended Euclid; caller guarantees gcd(a, m) == 1
  long long t = 0, new_t = 1;
  long long r = static_cast<long long>(m), new_r = static_cast<long long>(a % m);
  while (new_r != 0) {
    long long q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  long long res = t % static_cast<long long>(m);
  if (res < 0) res += static_cast<long long>(m);
  return static_cast<uint64_t>(res);
}

uint64_t gcd_u64(uint64_t a, uint64_t b) {
  while (b) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

cpp_int num_of(const cpp_rational& q) { return boost::multiprecision::numerator(q); }
cpp_int den_of(const cpp_rational& q) { return boost::multiprecision::denominator(q); }

bool divisible(const cpp_int& a, uint32_t p) { return a % p == 0; }

uint64_t mod_u64(const cpp_int& v, uint64_t m) {
  cpp_int r = v % m;
  if (r < 0) r += m;
  return r.convert_to<uint64_t>();
}

void check_same_ring(const RElem& a, const RElem& b) {
  if (a.ring != b.ring)
    throw RingMismatch("operands live in " + a.ring.descriptor() + " and " + b.ring.descriptor());
}

}  // namespace

Ring Ring::integers() { return Ring{RingKind::Int, 0, 1, 0}; }
Ring Ring::rationals() { return Ring{RingKind::Rat, 0, 1, 0}; }

Ring Ring::prime_field(uint32_t p) {
  require_local_prime(p, "fp");
  return Ring{RingKind::Fp, p, 1, p};
}

Ring Ring::integers_mod(uint32_t p, uint32_t k) {
  require_local_prime(p, "zmod");
  if (k < 1) throw UnsupportedType("zmod: k must be >= 1");
  return Ring{RingKind::Zmod, p, k, pow_u64_checked(p, k, "zmod")};
}

Ring Ring::truncated_poly(uint32_t p, uint32_t k) {
  require_local_prime(p, "tpoly");
  if (k < 1) throw UnsupportedType("tpoly: k must be >= 1");
  if (p >= (1u << 15)) throw UnsupportedType("tpoly: p too large");
  return Ring{RingKind::Tpoly, p, k, p};
}

Ring Ring::localized_integers(uint32_t p) {
  require_local_prime(p, "zloc");
  return Ring{RingKind::Zloc, p, 1, 0};
}

Ring Ring::parse(const std::string& d) {
  auto bad = [&](const std::string& why) { return BadInput("ring descriptor '" + d + "': " + why); };
  auto parse_u32 = [&](const std::string& s) -> uint32_t {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
      throw bad("expected a number, got '" + s + "'");
    unsigned long v = std::stoul(s);
    if (v > 0x7ffffffful) throw bad("number out of range");
    return static_cast<uint32_t>(v);
  };
  if (d == "int") return integers();
  if (d == "rat") return rationals();
  if (d.rfind("fp:", 0) == 0) return prime_field(parse_u32(d.substr(3)));
  if (d.rfind("zmod:", 0) == 0) {
    std::string rest = d.substr(5);
    auto caret = rest.find('^');
    if (caret == std::string::npos) throw bad("expected zmod:<p>^<k>");
    return integers_mod(parse_u32(rest.substr(0, caret)), parse_u32(rest.substr(caret + 1)));
  }
  if (d.rfind("tpoly:", 0) == 0) {
    std::string rest = d.substr(6);
    auto colon = rest.find(':');
    if (colon == std::string::npos) throw bad("expected tpoly:<p>:<k>");
    return truncated_poly(parse_u32(rest.substr(0, colon)), parse_u32(rest.substr(colon + 1)));
  }
  if (d.rfind("zloc:", 0) == 0) return localized_integers(parse_u32(d.substr(5)));
  throw bad("unknown kind");
}

std::string Ring::descriptor() const {
  switch (kind) {
    case RingKind::Int: return "int";
    case RingKind::Rat: return "rat";
    case RingKind::Fp: return "fp:" + std::to_string(p);
    case RingKind::Zmod: return "zmod:" + std::to_string(p) + "^" + std::to_string(k);
    case RingKind::Tpoly: return "tpoly:" + std::to_string(p) + ":" + std::to_string(k);
    case RingKind::Zloc: return "zloc:" + std::to_string(p);
  }
  return "?";
}

Ring Ring::residue_ring() const {
  if (!is_local()) throw NotLocal(descriptor() + " has no residue field");
  return prime_field(p);
}

RElem Ring::zero() const { return from_int(0); }
RElem Ring::one() const { return from_int(1); }

RElem Ring::from_int(long long v) const { return from_cpp_int(cpp_int(v)); }

RElem Ring::from_cpp_int(const cpp_int& v) const {
  RElem e;
  e.ring = *this;
  switch (kind) {
    case RingKind::Int: e.v = v; break;
    case RingKind::Rat: case RingKind::Zloc: e.v = cpp_rational(v); break;
    case RingKind::Fp: case RingKind::Zmod: e.v = mod_u64(v, modulus); break;
    case RingKind::Tpoly: {
      std::vector<uint64_t> c(k, 0);
      c[0] = mod_u64(v, p);
      e.v = std::move(c);
      break;
    }
  }
  return e;
}

namespace {

RElem make_rational(const Ring& r, const cpp_rational& q) {
  if (r.kind == RingKind::Zloc && divisible(den_of(q), r.p))
    throw BadInput("denominator of " + q.str() + " is divisible by " + std::to_string(r.p));
  RElem e;
  e.ring = r;
  e.v = q;
  return e;
}

RElem make_tpoly(const Ring& r, std::vector<uint64_t> c) {
  for (auto& x : c) x %= r.p;
  c.resize(r.k, 0);
  RElem e;
  e.ring = r;
  e.v = std::move(c);
  return e;
}

}  // namespace

RElem Ring::parse_elem(const std::string& text) const {
  auto bad = [&](const std::string& why) {
    return BadInput("element '" + text + "' in " + descriptor() + ": " + why);
  };
  auto parse_int = [&](const std::string& s) -> cpp_int {
    if (s.empty()) throw bad("empty number");
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size() || s.find_first_not_of("0123456789", start) != std::string::npos)
      throw bad("expected an integer, got '" + s + "'");
    return cpp_int(s);
  };
  switch (kind) {
    case RingKind::Int: case RingKind::Fp: case RingKind::Zmod:
      return from_cpp_int(parse_int(text));
    case RingKind::Rat: case RingKind::Zloc: {
      auto slash = text.find('/');
      cpp_int num = parse_int(slash == std::string::npos ? text : text.substr(0, slash));
      cpp_int den = slash == std::string::npos ? cpp_int(1) : parse_int(text.substr(slash + 1));
      if (den == 0) throw bad("zero denominator");
      return make_rational(*this, cpp_rational(num, den));
    }
    case RingKind::Tpoly: {
      // terms separated by '+': <c> | <c>*t | <c>*t^<e> | t | t^<e>
      std::vector<uint64_t> c(k, 0);
      std::size_t pos = 0;
      while (pos < text.size()) {
        auto plus = text.find('+', pos);
        std::string term = text.substr(pos, plus == std::string::npos ? std::string::npos : plus - pos);
        pos = plus == std::string::npos ? text.size() : plus + 1;
        if (term.empty()) throw bad("empty term");
        cpp_int coeff = 1;
        std::size_t deg = 0;
        auto tpos = term.find('t');
        if (tpos == std::string::npos) {
          coeff = parse_int(term);
        } else {
          std::string head = term.substr(0, tpos);
          if (!head.empty() && head.back() == '*') head.pop_back();
          if (!head.empty()) coeff = parse_int(head);
          std::string tail = term.substr(tpos + 1);
          if (!tail.empty()) {
            if (tail[0] != '^') throw bad("malformed term '" + term + "'");
            cpp_int d = parse_int(tail.substr(1));
            if (d < 0 || d > 1000) throw bad("exponent out of range");
            deg = d.convert_to<std::size_t>();
          } else {
            deg = 1;
          }
        }
        if (deg >= k) {
          // t^k and above vanish in the quotient; accept and drop
          continue;
        }
        c[deg] = (c[deg] + mod_u64(coeff, p)) % p;
      }
      return make_tpoly(*this, std::move(c));
    }
  }
  throw bad("unhandled kind");
}

namespace {

template <typename F, typename G, typename H>
RElem binop(const RElem& a, const RElem& b, F&& fi, G&& fm, H&& ft) {
  check_same_ring(a, b);
  RElem r;
  r.ring = a.ring;
  switch (a.ring.kind) {
    case RingKind::Int:
      r.v = cpp_int(fi(std::get<cpp_int>(a.v), std::get<cpp_int>(b.v)));
      break;
    case RingKind::Rat: case RingKind::Zloc:
      r.v = cpp_rational(fi(std::get<cpp_rational>(a.v), std::get<cpp_rational>(b.v)));
      break;
    case RingKind::Fp: case RingKind::Zmod:
      r.v = fm(std::get<uint64_t>(a.v), std::get<uint64_t>(b.v), a.ring.modulus);
      break;
    case RingKind::Tpoly:
      r.v = ft(std::get<std::vector<uint64_t>>(a.v), std::get<std::vector<uint64_t>>(b.v), a.ring);
      break;
  }
  return r;
}

}  // namespace

RElem operator+(const RElem& a, const RElem& b) {
  return binop(
      a, b, [](const auto& x, const auto& y) { return x + y; },
      [](uint64_t x, uint64_t y, uint64_t m) { return (x + y) % m; },
      [](const std::vector<uint64_t>& x, const std::vector<uint64_t>& y, const Ring& r) {
        std::vector<uint64_t> z(r.k);
        for (uint32_t i = 0; i < r.k; ++i) z[i] = (x[i] + y[i]) % r.p;
        return z;
      });
}

RElem operator-(const RElem& a, const RElem& b) {
  return binop(
      a, b, [](const auto& x, const auto& y) { return x - y; },
      [](uint64_t x, uint64_t y, uint64_t m) { return (x + m - y) % m; },
      [](const std::vector<uint64_t>& x, const std::vector<uint64_t>& y, const Ring& r) {
        std::vector<uint64_t> z(r.k);
        for (uint32_t i = 0; i < r.k; ++i) z[i] = (x[i] + r.p - y[i]) % r.p;
        return z;
      });
}

RElem operator*(const RElem& a, const RElem& b) {
  return binop(
      a, b, [](const auto& x, const auto& y) { return x * y; },
      [](uint64_t x, uint64_t y, uint64_t m) { return (x * y) % m; },
      [](const std::vector<uint64_t>& x, const std::vector<uint64_t>& y, const Ring& r) {
        std::vector<uint64_t> z(r.k, 0);
        for (uint32_t i = 0; i < r.k; ++i) {
          if (!x[i]) continue;
          for (uint32_t j = 0; i + j < r.k; ++j) z[i + j] += x[i] * y[j];
        }
        for (auto& c : z) c %= r.p;
        return z;
      });
}

RElem operator-(const RElem& a) {
  RElem r = a.ring.zero();
  return r - a;
}

bool operator==(const RElem& a, const RElem& b) {
  check_same_ring(a, b);
  return a.v == b.v;
}

bool is_zero(const RElem& a) { return a == a.ring.zero(); }
bool is_one(const RElem& a) { return a == a.ring.one(); }

bool is_unit(const RElem& a) {
  switch (a.ring.kind) {
    case RingKind::Int: {
      const cpp_int& v = std::get<cpp_int>(a.v);
      return v == 1 || v == -1;
    }
    case RingKind::Rat:
      return std::get<cpp_rational>(a.v) != 0;
    case RingKind::Zloc:
      return !divisible(num_of(std::get<cpp_rational>(a.v)), a.ring.p);
    case RingKind::Fp: case RingKind::Zmod:
      return std::get<uint64_t>(a.v) % a.ring.p != 0;
    case RingKind::Tpoly:
      return std::get<std::vector<uint64_t>>(a.v)[0] != 0;
  }
  return false;
}

bool in_radical(const RElem& a) {
  if (!a.ring.is_local()) throw NotLocal(a.ring.descriptor() + " has no radical");
  return !is_unit(a);
}

RElem residue(const RElem& a) {
  Ring res = a.ring.residue_ring();  // throws NotLocal for Int/Rat
  switch (a.ring.kind) {
    case RingKind::Fp:
      return a;
    case RingKind::Zmod:
      return res.from_cpp_int(cpp_int(std::get<uint64_t>(a.v) % a.ring.p));
    case RingKind::Tpoly:
      return res.from_cpp_int(cpp_int(std::get<std::vector<uint64_t>>(a.v)[0]));
    case RingKind::Zloc: {
      const cpp_rational& q = std::get<cpp_rational>(a.v);
      uint64_t n = mod_u64(num_of(q), a.ring.p);
      uint64_t d = mod_u64(den_of(q), a.ring.p);
      return res.from_cpp_int(cpp_int(n * mod_inverse(d, a.ring.p) % a.ring.p));
    }
    default:
      throw NotLocal(a.ring.descriptor() + " has no residue map");
  }
}

RElem invert(const RElem& a) {
  RElem r;
  r.ring = a.ring;
  switch (a.ring.kind) {
    case RingKind::Int: {
      const cpp_int& v = std::get<cpp_int>(a.v);
      if (v != 1 && v != -1) throw NonUnit(v.str() + " is not invertible over int");
      r.v = v;
      return r;
    }
    case RingKind::Rat: case RingKind::Zloc: {
      const cpp_rational& q = std::get<cpp_rational>(a.v);
      if (!is_unit(a)) throw NonUnit(q.str() + " is not invertible over " + a.ring.descriptor());
      r.v = cpp_rational(cpp_rational(1) / q);
      return r;
    }
    case RingKind::Fp: case RingKind::Zmod: {
      uint64_t x = std::get<uint64_t>(a.v);
      if (gcd_u64(x, a.ring.modulus) != 1)
        throw NonUnit(std::to_string(x) + " is not invertible over " + a.ring.descriptor());
      r.v = mod_inverse(x, a.ring.modulus);
      return r;
    }
    case RingKind::Tpoly: {
      const auto& c = std::get<std::vector<uint64_t>>(a.v);
      if (c[0] == 0) throw NonUnit(to_string(a) + " is not invertible over " + a.ring.descriptor());
      // power-series inversion truncated at t^k
      std::vector<uint64_t> b(a.ring.k, 0);
      uint64_t b0 = mod_inverse(c[0], a.ring.p);
      b[0] = b0;
      for (uint32_t i = 1; i < a.ring.k; ++i) {
        uint64_t s = 0;
        for (uint32_t j = 1; j <= i; ++j) s = (s + c[j] * b[i - j]) % a.ring.p;
        b[i] = (a.ring.p - s % a.ring.p) % a.ring.p * b0 % a.ring.p;
      }
      r.v = std::move(b);
      return r;
    }
  }
  throw NonUnit("unhandled kind");
}

RElem pow_elem(const RElem& a, long long e) {
  RElem base = e < 0 ? invert(a) : a;
  unsigned long long n = e < 0 ? static_cast<unsigned long long>(-e) : static_cast<unsigned long long>(e);
  RElem acc = a.ring.one();
  while (n) {
    if (n & 1) acc = acc * base;
    base = base * base;
    n >>= 1;
  }
  return acc;
}

RElem halve(const RElem& a) { return a * invert(a.ring.from_int(2)); }

std::string to_string(const RElem& a) {
  switch (a.ring.kind) {
    case RingKind::Int:
      return std::get<cpp_int>(a.v).str();
    case RingKind::Rat: case RingKind::Zloc: {
      const cpp_rational& q = std::get<cpp_rational>(a.v);
      if (den_of(q) == 1) return num_of(q).str();
      return num_of(q).str() + "/" + den_of(q).str();
    }
    case RingKind::Fp: case RingKind::Zmod:
      return std::to_string(std::get<uint64_t>(a.v));
    case RingKind::Tpoly: {
      const auto& c = std::get<std::vector<uint64_t>>(a.v);
      std::ostringstream out;
      bool any = false;
      for (uint32_t i = 0; i < a.ring.k; ++i) {
        if (!c[i]) continue;
        if (any) out << "+";
        if (i == 0) {
          out << c[i];
        } else {
          if (c[i] != 1) out << c[i] << "*";
          out << "t";
          if (i > 1) out << "^" << i;
        }
        any = true;
      }
      if (!any) out << "0";
      return out.str();
    }
  }
  return "?";
}

RElem sample_element(const Ring& r, Prng& rng) {
  switch (r.kind) {
    case RingKind::Int:
      return r.from_int(rng.range(-9, 9));
    case RingKind::Rat: {
      cpp_int num(rng.range(-9, 9));
      cpp_int den(rng.range(1, 9));
      return make_rational(r, cpp_rational(num, den));
    }
    case RingKind::Zloc: {
      cpp_int num(rng.range(-9, 9));
      long long den = rng.range(1, 9);
      while (den % r.p == 0) den = rng.range(1, 9);
      return make_rational(r, cpp_rational(num, cpp_int(den)));
    }
    case RingKind::Fp: case RingKind::Zmod:
      return r.from_cpp_int(cpp_int(rng.below(r.modulus)));
    case RingKind::Tpoly: {
      std::vector<uint64_t> c(r.k);
      for (auto& x : c) x = rng.below(r.p);
      return make_tpoly(r, std::move(c));
    }
  }
  return r.zero();
}

RElem sample_unit(const Ring& r, Prng& rng) {
  if (r.kind == RingKind::Int) return r.from_int(rng.below(2) ? 1 : -1);
  for (;;) {
    RElem x = sample_element(r, rng);
    if (is_unit(x)) return x;
  }
}

RElem sample_radical(const Ring& r, Prng& rng) {
  if (!r.is_local()) throw NotLocal(r.descriptor() + " has no radical");
  switch (r.kind) {
    case RingKind::Fp:
      return r.zero();
    case RingKind::Zmod: {
      uint64_t q = r.modulus / r.p;
      return r.from_cpp_int(cpp_int(r.p * rng.below(q)));
    }
    case RingKind::Tpoly: {
      std::vector<uint64_t> c(r.k, 0);
      for (uint32_t i = 1; i < r.k; ++i) c[i] = rng.below(r.p);
      return make_tpoly(r, std::move(c));
    }
    case RingKind::Zloc:
      return r.from_int(r.p) * sample_element(r, rng);
    default:
      throw NotLocal(r.descriptor());
  }
}

}  // namespace chev
