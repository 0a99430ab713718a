#include "spectra/rational.hpp"

#include <algorithm>
#include <cctype>

namespace spectra {

Rational parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  auto bad = [&]() { throw std::invalid_argument("malformed rational literal: '" + s + "'"); };
  auto is_int = [](const std::string& t) {
    if (t.empty()) return false;
    size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };

  auto slash = s.find('/');
  if (slash != std::string::npos) {
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!is_int(num) || !is_int(den)) bad();
    Integer n(num, 10), d(den, 10);
    Rational r(n, d);
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
    r.canonicalize();
    return r;
  }
  auto dot = s.find('.');
  if (dot != std::string::npos) {
    std::string ip = s.substr(0, dot), fp = s.substr(dot + 1);
    if (ip.empty() || ip == "-" || ip == "+") ip += "0";
    if (!is_int(ip)) bad();
    for (char c : fp)
      if (!std::isdigit(static_cast<unsigned char>(c))) bad();
    Integer scale = 1;
    for (size_t i = 0; i < fp.size(); ++i) scale *= 10;
    Integer whole(ip, 10);
    Integer frac = fp.empty() ? Integer(0) : Integer(fp, 10);
    bool neg = !ip.empty() && ip[0] == '-';
    Integer total = abs(whole) * scale + frac;
    Rational r(neg ? Integer(-total) : total, scale);
    r.canonicalize();
    return r;
  }
  if (!is_int(s)) bad();
  return Rational(Integer(s, 10));
}

std::string rational_str(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational rational_pow(const Rational& base, long exp) {
  if (exp == 0) return Rational(1);
  if (base == 0 && exp < 0) throw std::domain_error("0 has no negative power");
  Rational b = base;
  unsigned long e = static_cast<unsigned long>(exp < 0 ? -exp : exp);
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), b.get_num_mpz_t(), e);
  mpz_pow_ui(out.get_den_mpz_t(), b.get_den_mpz_t(), e);
  out.canonicalize();
  if (exp < 0) out = 1 / out;
  return out;
}

std::optional<Integer> integer_nth_root(const Integer& v, unsigned long n) {
  if (n == 0) throw std::invalid_argument("0th root");
  if (n == 1) return v;
  if (v < 0 && n % 2 == 0) return std::nullopt;
  Integer root;
  int exact = mpz_root(root.get_mpz_t(), v.get_mpz_t(), n);
  if (!exact) return std::nullopt;
  return root;
}

std::optional<Rational> rational_nth_root(const Rational& v, unsigned long n) {
  if (n % 2 == 0 && v < 0) return std::nullopt;
  auto num = integer_nth_root(v.get_num(), n);
  if (!num) return std::nullopt;
  auto den = integer_nth_root(v.get_den(), n);
  if (!den) return std::nullopt;
  Rational r(*num, *den);
  r.canonicalize();
  return r;
}

namespace {

Integer pollard_rho(const Integer& n) {
  // n odd composite, not a prime power handled elsewhere. Brent variant.
  if (n % 2 == 0) return 2;
  gmp_randclass rng(gmp_randinit_default);
  rng.seed(0x5eed);
  while (true) {
    Integer y = rng.get_z_range(n - 3) + 2;
    Integer c = rng.get_z_range(n - 2) + 1;
    Integer x = y, d = 1, q = 1, ys = y;
    unsigned long r = 1;
    const unsigned long m = 128;
    while (d == 1) {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % n;
      unsigned long k = 0;
      while (k < r && d == 1) {
        ys = y;
        unsigned long lim = std::min(m, static_cast<unsigned long>(r - k));
        for (unsigned long i = 0; i < lim; ++i) {
          y = (y * y + c) % n;
          q = q * abs(x - y) % n;
        }
        mpz_gcd(d.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
      }
      r *= 2;
    }
    if (d == n) {
      d = 1;
      while (d == 1) {
        ys = (ys * ys + c) % n;
        Integer diff = abs(x - ys);
        mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      }
    }
    if (d != n) return d;
  }
}

void factor_rec(Integer v, std::map<Integer, unsigned long>& out) {
  if (v == 1) return;
  if (mpz_probab_prime_p(v.get_mpz_t(), 40)) {
    out[v] += 1;
    return;
  }
  Integer d = pollard_rho(v);
  factor_rec(d, out);
  factor_rec(v / d, out);
}

}  // namespace

std::map<Integer, unsigned long> factor_integer(Integer v) {
  if (v == 0) throw std::invalid_argument("cannot factor 0");
  std::map<Integer, unsigned long> out;
  v = abs(v);
  for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L}) {
    while (mpz_divisible_ui_p(v.get_mpz_t(), p)) {
      out[Integer(p)] += 1;
      v /= p;
    }
  }
  // trial division by 6k+-1 up to 2^20, then rho
  Integer p = 41;
  while (v > 1 && p * p <= v && p < 1048576) {
    while (mpz_divisible_p(v.get_mpz_t(), p.get_mpz_t())) {
      out[p] += 1;
      v /= p;
    }
    p += 2;
  }
  if (v > 1) factor_rec(v, out);
  return out;
}

std::map<Integer, long> rational_valuations(const Rational& q) {
  if (q == 0) throw std::invalid_argument("valuations of 0");
  std::map<Integer, long> out;
  for (const auto& [p, e] : factor_integer(q.get_num())) out[p] += static_cast<long>(e);
  for (const auto& [p, e] : factor_integer(q.get_den())) out[p] -= static_cast<long>(e);
  return out;
}

std::pair<Integer, Integer> bezout_pair(const Integer& m, const Integer& n) {
  if (n < 1) throw std::invalid_argument("bezout_pair requires n >= 1");
  Integer g, x, y;
  mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), m.get_mpz_t(), n.get_mpz_t());
  if (g != 1) throw std::invalid_argument("bezout_pair requires coprime input");
  if (n == 1) return {Integer(1), Integer(1 - m)};
  // canonical representative: |x| minimal, ties positive
  x %= n;
  if (x < 0) x += n;  // now 0 <= x < n
  Integer alt = x - n;
  if (abs(alt) < abs(x)) x = alt;
  Integer yy = (Integer(1) - m * x) / n;
  return {x, yy};
}

}  // namespace spectra
