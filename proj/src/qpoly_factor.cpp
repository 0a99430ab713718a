#include <algorithm>
#include <cstdint>
#include <memory>
#include <numeric>
#include <stdexcept>

#include "spectra/qpoly.hpp"

// Factorization over Q at desk scale: Yun squarefree decomposition, then for
// each squarefree part a monic root-scaling transform, Berlekamp mod a small
// prime chosen among several candidates, quadratic Hensel lifting past the
// Landau-Mignotte bound, and subset recombination. Linear factors (hence
// rational roots) fall out of the size-1 recombination pass.

namespace spectra {

namespace {

// ----- GF(p) polynomials, p a small odd prime (p^2 fits in long) -----

using PPoly = std::vector<long>;

void pp_trim(PPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

long mod_inv(long a, long p) {
  long t = 0, nt = 1, r = p, nr = a % p;
  if (nr < 0) nr += p;
  while (nr != 0) {
    long q = r / nr;
    std::swap(t -= q * nt, nt);
    std::swap(r -= q * nr, nr);
  }
  if (r != 1) throw std::logic_error("mod_inv of non-unit");
  return t < 0 ? t + p : t;
}

PPoly pp_mul(const PPoly& a, const PPoly& b, long p) {
  if (a.empty() || b.empty()) return {};
  PPoly c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  }
  pp_trim(c);
  return c;
}

PPoly pp_mod(PPoly a, const PPoly& f, long p) {
  long df = static_cast<long>(f.size()) - 1;
  long linv = mod_inv(f.back(), p);
  while (static_cast<long>(a.size()) - 1 >= df) {
    long da = static_cast<long>(a.size()) - 1;
    long q = a.back() * linv % p;
    if (q != 0)
      for (long j = 0; j <= df; ++j) {
        a[da - df + j] = (a[da - df + j] - q * f[j]) % p;
        if (a[da - df + j] < 0) a[da - df + j] += p;
      }
    a.pop_back();
    pp_trim(a);
    if (a.empty()) break;
  }
  return a;
}

PPoly pp_gcd(PPoly a, PPoly b, long p) {
  while (!b.empty()) {
    PPoly r = pp_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    long inv = mod_inv(a.back(), p);
    for (auto& c : a) c = c * inv % p;
  }
  return a;
}

PPoly pp_powmod_x(long e, const PPoly& f, long p) {
  // x^e mod f by square and multiply
  PPoly result{1};
  PPoly base{0, 1};
  base = pp_mod(base, f, p);
  while (e > 0) {
    if (e & 1) result = pp_mod(pp_mul(result, base, p), f, p);
    base = pp_mod(pp_mul(base, base, p), f, p);
    e >>= 1;
  }
  return result;
}

PPoly pp_derivative(const PPoly& a, long p) {
  if (a.size() <= 1) return {};
  PPoly d(a.size() - 1);
  for (size_t i = 1; i < a.size(); ++i) d[i - 1] = static_cast<long>(i % p) * a[i] % p;
  pp_trim(d);
  return d;
}

// Berlekamp kernel: basis of {v : v(x)^p == v(x) mod f}. Size = number of
// irreducible factors of f mod p.
std::vector<PPoly> berlekamp_kernel(const PPoly& f, long p) {
  long n = static_cast<long>(f.size()) - 1;
  PPoly xp = pp_powmod_x(p, f, p);
  // rows[i] = x^(i*p) mod f
  std::vector<PPoly> rows(n);
  rows[0] = PPoly{1};
  for (long i = 1; i < n; ++i) rows[i] = pp_mod(pp_mul(rows[i - 1], xp, p), f, p);
  // A[j][i] = (rows[i][j] - delta_ij), kernel of v -> v(Q - I)
  std::vector<std::vector<long>> A(n, std::vector<long>(n, 0));
  for (long i = 0; i < n; ++i) {
    for (size_t j = 0; j < rows[i].size(); ++j) A[j][i] = rows[i][j];
    A[i][i] = (A[i][i] - 1 + p) % p;
  }
  // Gaussian elimination, track pivot columns
  std::vector<long> pivot_of_row(n, -1);
  long rank = 0;
  for (long col = 0; col < n && rank < n; ++col) {
    long piv = -1;
    for (long r = rank; r < n; ++r)
      if (A[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(A[rank], A[piv]);
    long inv = mod_inv(A[rank][col], p);
    for (long j = 0; j < n; ++j) A[rank][j] = A[rank][j] * inv % p;
    for (long r = 0; r < n; ++r) {
      if (r == rank || A[r][col] == 0) continue;
      long m = A[r][col];
      for (long j = 0; j < n; ++j) {
        A[r][j] = (A[r][j] - m * A[rank][j]) % p;
        if (A[r][j] < 0) A[r][j] += p;
      }
    }
    pivot_of_row[rank] = col;
    ++rank;
  }
  std::vector<bool> is_pivot(n, false);
  for (long r = 0; r < rank; ++r) is_pivot[pivot_of_row[r]] = true;
  std::vector<PPoly> kernel;
  for (long col = 0; col < n; ++col) {
    if (is_pivot[col]) continue;
    PPoly v(n, 0);
    v[col] = 1;
    for (long r = 0; r < rank; ++r) {
      long pc = pivot_of_row[r];
      v[pc] = (p - A[r][col]) % p;
    }
    pp_trim(v);
    kernel.push_back(std::move(v));
  }
  return kernel;
}

std::vector<PPoly> berlekamp_factor(const PPoly& f, long p) {
  auto kernel = berlekamp_kernel(f, p);
  size_t r = kernel.size();
  std::vector<PPoly> factors{f};
  if (r == 1) return factors;
  for (const auto& v : kernel) {
    if (factors.size() == r) break;
    if (v.size() <= 1) continue;  // constant kernel vector splits nothing
    for (long c = 0; c < p && factors.size() < r; ++c) {
      PPoly vc = v;
      if (vc.empty()) vc.push_back(0);
      vc[0] = (vc[0] - c) % p;
      if (vc[0] < 0) vc[0] += p;
      pp_trim(vc);
      std::vector<PPoly> next;
      for (auto& g : factors) {
        if (g.size() <= 2) {
          next.push_back(std::move(g));
          continue;
        }
        PPoly h = pp_gcd(g, vc, p);
        if (h.size() > 1 && h.size() < g.size()) {
          // g = h * (g/h)
          PPoly q = g;
          // divide g by h exactly mod p
          PPoly quot;
          {
            PPoly rem = g;
            long dh = static_cast<long>(h.size()) - 1;
            long qd = static_cast<long>(g.size()) - 1 - dh;
            quot.assign(qd + 1, 0);
            long inv = mod_inv(h.back(), p);
            for (long k = qd; k >= 0; --k) {
              long dr = static_cast<long>(rem.size()) - 1;
              if (dr < dh + k) continue;
              long qq = rem[dh + k] * inv % p;
              quot[k] = qq;
              if (qq != 0)
                for (long j = 0; j <= dh; ++j) {
                  rem[k + j] = (rem[k + j] - qq * h[j]) % p;
                  if (rem[k + j] < 0) rem[k + j] += p;
                }
              pp_trim(rem);
            }
          }
          next.push_back(std::move(h));
          next.push_back(std::move(quot));
        } else {
          next.push_back(std::move(g));
        }
      }
      factors = std::move(next);
    }
  }
  // normalize monic
  for (auto& g : factors) {
    long inv = mod_inv(g.back(), p);
    for (auto& c : g) c = c * inv % p;
  }
  return factors;
}

// ----- polynomials over Z and over Z/m with bignum modulus -----

using ZPoly = std::vector<Integer>;

void z_trim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ZPoly z_reduce(const ZPoly& a, const Integer& m) {
  ZPoly r(a.size());
  for (size_t i = 0; i < a.size(); ++i) {
    mpz_mod(r[i].get_mpz_t(), a[i].get_mpz_t(), m.get_mpz_t());
  }
  z_trim(r);
  return r;
}

ZPoly zm_mul(const ZPoly& a, const ZPoly& b, const Integer& m) {
  if (a.empty() || b.empty()) return {};
  ZPoly c(a.size() + b.size() - 1, Integer(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  return z_reduce(c, m);
}

ZPoly zm_add(const ZPoly& a, const ZPoly& b, const Integer& m) {
  ZPoly c(std::max(a.size(), b.size()), Integer(0));
  for (size_t i = 0; i < a.size(); ++i) c[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) c[i] += b[i];
  return z_reduce(c, m);
}

ZPoly zm_sub(const ZPoly& a, const ZPoly& b, const Integer& m) {
  ZPoly c(std::max(a.size(), b.size()), Integer(0));
  for (size_t i = 0; i < a.size(); ++i) c[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) c[i] -= b[i];
  return z_reduce(c, m);
}

// division by a monic divisor over Z/m
std::pair<ZPoly, ZPoly> zm_divmod_monic(const ZPoly& a, const ZPoly& d, const Integer& m) {
  if (d.empty() || d.back() != 1) throw std::logic_error("zm_divmod_monic needs monic divisor");
  ZPoly rem = a;
  long dd = static_cast<long>(d.size()) - 1;
  long dr = static_cast<long>(rem.size()) - 1;
  if (dr < dd) return {{}, rem};
  ZPoly quot(dr - dd + 1, Integer(0));
  for (long k = dr - dd; k >= 0; --k) {
    if (static_cast<long>(rem.size()) - 1 < dd + k) continue;
    Integer q = rem[dd + k];
    quot[k] = q;
    if (q != 0)
      for (long j = 0; j <= dd; ++j) {
        rem[k + j] -= q * d[j];
        mpz_mod(rem[k + j].get_mpz_t(), rem[k + j].get_mpz_t(), m.get_mpz_t());
      }
    z_trim(rem);
  }
  return {z_reduce(quot, m), z_reduce(rem, m)};
}

// extended gcd of coprime polys over GF(p), result scaled so s*a + t*b = 1
std::pair<PPoly, PPoly> pp_extgcd_coprime(const PPoly& a, const PPoly& b, long p) {
  PPoly r0 = a, r1 = b;
  PPoly s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    // divide r0 by r1
    PPoly rem = r0, quot;
    long d1 = static_cast<long>(r1.size()) - 1;
    long inv = mod_inv(r1.back(), p);
    long qd = static_cast<long>(rem.size()) - 1 - d1;
    if (qd >= 0) {
      quot.assign(qd + 1, 0);
      for (long k = qd; k >= 0; --k) {
        long dr = static_cast<long>(rem.size()) - 1;
        if (dr < d1 + k) continue;
        long qq = rem[d1 + k] * inv % p;
        quot[k] = qq;
        if (qq != 0)
          for (long j = 0; j <= d1; ++j) {
            rem[k + j] = (rem[k + j] - qq * r1[j]) % p;
            if (rem[k + j] < 0) rem[k + j] += p;
          }
        pp_trim(rem);
      }
      pp_trim(quot);
    }
    auto comb = [&](const PPoly& x0, const PPoly& x1) {
      PPoly qx = pp_mul(quot, x1, p);
      PPoly out(std::max(x0.size(), qx.size()), 0);
      for (size_t i = 0; i < x0.size(); ++i) out[i] = x0[i];
      for (size_t i = 0; i < qx.size(); ++i) {
        out[i] = (out[i] - qx[i]) % p;
        if (out[i] < 0) out[i] += p;
      }
      pp_trim(out);
      return out;
    };
    PPoly s2 = comb(s0, s1), t2 = comb(t0, t1);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.size() != 1) throw std::logic_error("pp_extgcd_coprime: inputs not coprime");
  long inv = mod_inv(r0[0], p);
  for (auto& c : s0) c = c * inv % p;
  for (auto& c : t0) c = c * inv % p;
  return {s0, t0};
}

// ----- Hensel lifting tree -----

struct HNode {
  ZPoly poly;  // factor (or subproduct) modulo the current modulus
  ZPoly s, t;  // Bezout pair for the two children
  std::unique_ptr<HNode> left, right;
  bool leaf() const { return !left; }
};

std::unique_ptr<HNode> build_tree(const std::vector<ZPoly>& leaves, size_t lo, size_t hi,
                                  long p) {
  auto node = std::make_unique<HNode>();
  if (hi - lo == 1) {
    node->poly = leaves[lo];
    return node;
  }
  size_t mid = lo + (hi - lo) / 2;
  node->left = build_tree(leaves, lo, mid, p);
  node->right = build_tree(leaves, mid, hi, p);
  Integer pz(p);
  node->poly = zm_mul(node->left->poly, node->right->poly, pz);
  // Bezout pair mod p
  PPoly a(node->left->poly.size()), b(node->right->poly.size());
  for (size_t i = 0; i < a.size(); ++i) a[i] = node->left->poly[i].get_si();
  for (size_t i = 0; i < b.size(); ++i) b[i] = node->right->poly[i].get_si();
  auto [s, t] = pp_extgcd_coprime(a, b, p);
  node->s.assign(s.size(), Integer(0));
  for (size_t i = 0; i < s.size(); ++i) node->s[i] = s[i];
  node->t.assign(t.size(), Integer(0));
  for (size_t i = 0; i < t.size(); ++i) node->t[i] = t[i];
  return node;
}

// one quadratic Hensel step: f == g*h (mod m), s*g + t*h == 1 (mod m),
// g, h monic; lifts everything to mod m^2
void hensel_step(const ZPoly& f, HNode& node, const Integer& m) {
  Integer m2 = m * m;
  ZPoly& g = node.left->poly;
  ZPoly& h = node.right->poly;
  ZPoly e = zm_sub(f, zm_mul(g, h, m2), m2);
  auto [q, r] = zm_divmod_monic(zm_mul(node.s, e, m2), h, m2);
  ZPoly g2 = zm_add(zm_add(g, zm_mul(node.t, e, m2), m2), zm_mul(q, g, m2), m2);
  ZPoly h2 = zm_add(h, r, m2);
  ZPoly b = zm_sub(zm_add(zm_mul(node.s, g2, m2), zm_mul(node.t, h2, m2), m2), ZPoly{Integer(1)}, m2);
  auto [c, d] = zm_divmod_monic(zm_mul(node.s, b, m2), h2, m2);
  ZPoly s2 = zm_sub(node.s, d, m2);
  ZPoly t2 = zm_sub(zm_sub(node.t, zm_mul(node.t, b, m2), m2), zm_mul(c, g2, m2), m2);
  g = std::move(g2);
  h = std::move(h2);
  node.s = std::move(s2);
  node.t = std::move(t2);
}

void lift_rec(HNode& node, const ZPoly& f, const Integer& m) {
  node.poly = f;
  if (node.leaf()) return;
  hensel_step(f, node, m);
  lift_rec(*node.left, node.left->poly, m);
  lift_rec(*node.right, node.right->poly, m);
}

void collect_leaves(const HNode& node, std::vector<ZPoly>& out) {
  if (node.leaf()) {
    out.push_back(node.poly);
    return;
  }
  collect_leaves(*node.left, out);
  collect_leaves(*node.right, out);
}

// ----- recombination -----

Integer sym_rep(const Integer& a, const Integer& m) {
  Integer r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  if (r * 2 > m) r -= m;
  return r;
}

ZPoly sym_reduce(const ZPoly& a, const Integer& m) {
  ZPoly r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = sym_rep(a[i], m);
  z_trim(r);
  return r;
}

// exact division by a monic divisor over Z; nullopt if not divisible
std::optional<ZPoly> z_divide_monic(const ZPoly& a, const ZPoly& d) {
  ZPoly rem = a;
  long dd = static_cast<long>(d.size()) - 1;
  long dr = static_cast<long>(rem.size()) - 1;
  if (dr < dd) return std::nullopt;
  ZPoly quot(dr - dd + 1, Integer(0));
  for (long k = dr - dd; k >= 0; --k) {
    if (static_cast<long>(rem.size()) - 1 < dd + k) continue;
    Integer q = rem[dd + k];
    quot[k] = q;
    if (q != 0)
      for (long j = 0; j <= dd; ++j) rem[k + j] -= q * d[j];
    z_trim(rem);
  }
  if (!rem.empty()) return std::nullopt;
  return quot;
}

std::vector<ZPoly> recombine(ZPoly remaining, std::vector<ZPoly> modular, const Integer& P) {
  std::vector<ZPoly> out;
  size_t size = 1;
  while (2 * size <= modular.size()) {
    bool found = false;
    std::vector<size_t> comb(size);
    std::iota(comb.begin(), comb.end(), 0);
    auto advance = [&]() {
      long i = static_cast<long>(size) - 1;
      while (i >= 0 && comb[i] == modular.size() - size + i) --i;
      if (i < 0) return false;
      ++comb[i];
      for (size_t j = i + 1; j < size; ++j) comb[j] = comb[j - 1] + 1;
      return true;
    };
    while (true) {
      ZPoly cand{Integer(1)};
      for (size_t idx : comb) cand = zm_mul(cand, modular[idx], P);
      cand = sym_reduce(cand, P);
      if (!cand.empty() && cand.back() == 1) {
        auto quot = z_divide_monic(remaining, cand);
        if (quot) {
          out.push_back(cand);
          remaining = std::move(*quot);
          std::vector<ZPoly> keep;
          for (size_t i = 0; i < modular.size(); ++i)
            if (std::find(comb.begin(), comb.end(), i) == comb.end())
              keep.push_back(std::move(modular[i]));
          modular = std::move(keep);
          found = true;
          break;
        }
      }
      if (!advance()) break;
    }
    if (!found) ++size;
  }
  if (static_cast<long>(remaining.size()) - 1 > 0) out.push_back(remaining);
  return out;
}

// ----- top-level helpers -----

Integer znorm2_ceil(const ZPoly& f) {
  Integer s(0);
  for (const auto& c : f) s += c * c;
  Integer r;
  mpz_sqrt(r.get_mpz_t(), s.get_mpz_t());
  return r + 1;
}

std::vector<ZPoly> zassenhaus_monic(const ZPoly& G) {
  long d = static_cast<long>(G.size()) - 1;
  if (d <= 1) return {G};

  static const long prime_pool[] = {3,   5,   7,   11,  13,  17,  19,  23,  29,  31,  37,
                                    41,  43,  47,  53,  59,  61,  67,  71,  73,  79,  83,
                                    89,  97,  101, 103, 107, 109, 113, 127, 131, 137, 139,
                                    149, 151, 157, 163, 167, 173, 179, 181, 191, 193, 197};
  long best_p = 0;
  size_t best_count = SIZE_MAX;
  int usable = 0;
  for (long p : prime_pool) {
    PPoly fp(G.size());
    for (size_t i = 0; i < G.size(); ++i) {
      long v = static_cast<long>(mpz_fdiv_ui(G[i].get_mpz_t(), p));
      fp[i] = v;
    }
    pp_trim(fp);
    if (static_cast<long>(fp.size()) - 1 != d) continue;  // p | lc (only if non-monic input)
    PPoly der = pp_derivative(fp, p);
    if (der.empty()) continue;
    PPoly g = pp_gcd(fp, der, p);
    if (g.size() != 1) continue;  // not squarefree mod p
    size_t r = berlekamp_kernel(fp, p).size();
    if (r < best_count) {
      best_count = r;
      best_p = p;
    }
    if (++usable >= 5 || best_count == 1) break;
  }
  if (best_p == 0) throw std::logic_error("no usable prime found for factorization");
  if (best_count == 1) return {G};

  long p = best_p;
  PPoly fp(G.size());
  for (size_t i = 0; i < G.size(); ++i) fp[i] = static_cast<long>(mpz_fdiv_ui(G[i].get_mpz_t(), p));
  auto pfactors = berlekamp_factor(fp, p);
  std::sort(pfactors.begin(), pfactors.end(),
            [](const PPoly& a, const PPoly& b) { return a.size() < b.size() || (a.size() == b.size() && a < b); });

  // Landau-Mignotte: coefficients of any monic factor bounded by 2^d * |G|_2
  Integer bound = znorm2_ceil(G);
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<mp_bitcnt_t>(d + 1));
  Integer target = 2 * bound + 1;

  std::vector<ZPoly> leaves;
  leaves.reserve(pfactors.size());
  for (const auto& f : pfactors) {
    ZPoly z(f.size());
    for (size_t i = 0; i < f.size(); ++i) z[i] = f[i];
    leaves.push_back(std::move(z));
  }
  auto root = build_tree(leaves, 0, leaves.size(), p);
  Integer m(p);
  while (m < target) {
    Integer m2 = m * m;
    lift_rec(*root, z_reduce(G, m2), m);
    m = m2;
  }
  std::vector<ZPoly> lifted;
  collect_leaves(*root, lifted);
  return recombine(G, std::move(lifted), m);
}

ZPoly to_primitive_zpoly(const QPolynomial& f, bool positive_leading = true) {
  Integer den(1);
  for (const auto& c : f.coeffs())
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
  ZPoly z(f.coeffs().size());
  for (size_t i = 0; i < z.size(); ++i) z[i] = Rational(f.coeffs()[i] * Rational(den)).get_num();
  Integer content(0);
  for (const auto& c : z) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
  if (content > 1)
    for (auto& c : z) c /= content;
  if (positive_leading && !z.empty() && z.back() < 0)
    for (auto& c : z) c = -c;
  return z;
}

QPolynomial zpoly_to_q(const ZPoly& z) {
  std::vector<Rational> c(z.size());
  for (size_t i = 0; i < z.size(); ++i) c[i] = Rational(z[i]);
  return QPolynomial(std::move(c));
}

std::vector<QPolynomial> factor_squarefree(const QPolynomial& f) {
  ZPoly H = to_primitive_zpoly(f);
  long d = static_cast<long>(H.size()) - 1;
  if (d <= 0) return {};
  if (d == 1) return {zpoly_to_q(H).monic()};

  std::vector<QPolynomial> out;
  // strip a root at zero
  if (H[0] == 0) {
    out.push_back(QPolynomial::x_power(1));
    H.erase(H.begin());
    d -= 1;
    if (d == 0) return out;
    if (d == 1) {
      out.push_back(zpoly_to_q(H).monic());
      return out;
    }
  }

  Integer lc = H.back();
  ZPoly G;
  if (lc == 1) {
    G = H;
  } else {
    // monicize via root scaling: G(y) = lc^(d-1) H(y/lc), G[i] = H[i] lc^(d-1-i)
    G.assign(H.size(), Integer(0));
    G[d] = 1;
    Integer pw(1);
    for (long i = d - 1; i >= 0; --i) {
      G[i] = H[i] * pw;
      pw *= lc;
    }
  }
  auto zfactors = zassenhaus_monic(G);
  for (const auto& zf : zfactors) {
    if (lc == 1) {
      out.push_back(zpoly_to_q(zf).monic());
    } else {
      // map back: factor of H is primitive part of zf(lc * x)
      ZPoly back(zf.size());
      Integer pw(1);
      for (size_t i = 0; i < zf.size(); ++i) {
        back[i] = zf[i] * pw;
        pw *= lc;
      }
      Integer content(0);
      for (const auto& c : back) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
      if (content > 1)
        for (auto& c : back) c /= content;
      out.push_back(zpoly_to_q(back).monic());
    }
  }
  return out;
}

}  // namespace

std::vector<std::pair<QPolynomial, int>> factor_over_q(const QPolynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("cannot factor the zero polynomial");
  std::vector<std::pair<QPolynomial, int>> out;
  if (f.degree() == 0) return out;

  // Yun squarefree decomposition
  QPolynomial fm = f.monic();
  QPolynomial g = qpoly_gcd(fm, fm.derivative());
  std::vector<std::pair<QPolynomial, int>> squarefree_parts;
  if (g.degree() == 0) {
    squarefree_parts.emplace_back(fm, 1);
  } else {
    QPolynomial c = fm.divmod(g).first;
    QPolynomial d = fm.derivative().divmod(g).first - c.derivative();
    int i = 1;
    while (c.degree() > 0) {
      QPolynomial p = qpoly_gcd(c, d);
      if (p.degree() > 0) squarefree_parts.emplace_back(p, i);
      c = c.divmod(p).first;
      d = d.divmod(p).first - c.derivative();
      ++i;
    }
  }

  for (const auto& [part, mult] : squarefree_parts)
    for (const auto& irr : factor_squarefree(part)) out.emplace_back(irr, mult);

  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
    const auto& ca = a.first.coeffs();
    const auto& cb = b.first.coeffs();
    for (size_t i = 0; i < ca.size(); ++i)
      if (ca[i] != cb[i]) return ca[i] < cb[i];
    return a.second < b.second;
  });
  return out;
}

bool irreducible_over_q(const QPolynomial& f) {
  if (f.is_zero() || f.degree() < 1) return false;
  auto fs = factor_over_q(f);
  return fs.size() == 1 && fs[0].second == 1;
}

}  // namespace spectra
